import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from sunit_harvest.arith import FactoredInt, PrimeSet, trial_factor
from sunit_harvest.smooth import SmoothSet


def smoothset(values) -> SmoothSet:
    """Wrap explicit integers into a SmoothSet for decomposition entry points."""
    values = sorted(values)
    members = tuple(FactoredInt(v, trial_factor(v)) for v in values)
    primes = sorted({p for m in members for p, _ in m.factors})
    return SmoothSet(PrimeSet(tuple(primes)), values[0], values[-1], members)


def brute_trial_division(n: int) -> list[tuple[int, int]]:
    """Independent naive factorization used as an oracle."""
    out = []
    d = 2
    while d * d <= n:
        e = 0
        while n % d == 0:
            n //= d
            e += 1
        if e:
            out.append((d, e))
        d += 1
    if n > 1:
        out.append((n, 1))
    return out
