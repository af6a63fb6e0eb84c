"""Constructive small solutions of a single integer linear form.

The pigeonhole construction: as y ranges over [0, C]^n the form sum(alpha_i y_i)
takes at most n*[C*B]+1 values, so with C = [(nB)^(1/(n-1))] two points collide
and their difference is a nonzero solution bounded by C.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import floor

from .errors import DomainError


@dataclass(frozen=True)
class SmallSolution:
    z: tuple[int, ...]
    bound: float

    def __post_init__(self):
        if all(v == 0 for v in self.z):
            raise DomainError("solution must be nonzero")
        if max(abs(v) for v in self.z) > self.bound + 1e-9:
            raise DomainError("solution exceeds its guaranteed bound")


def siegel_small_solution(alpha: tuple[int, ...], B: int) -> SmallSolution:
    """Nonzero integer z with sum(alpha_i z_i) = 0 and max|z_i| <= (nB)^(1/(n-1)).

    Deterministic: first collision in a lexicographic scan of y in [0, C]^n
    (fast path for n = 3 solves the third coordinate instead, same contract).
    """
    n = len(alpha)
    if n < 2:
        raise DomainError("need n >= 2 coefficients")
    if B < 1:
        raise DomainError("B must be >= 1")
    if all(a == 0 for a in alpha):
        raise DomainError("alpha must not be all zero")
    if max(abs(a) for a in alpha) > B:
        raise DomainError("coefficients must be bounded by B")
    bound = float(n * B) ** (1.0 / (n - 1))
    C = floor(bound)
    if n == 3:
        z = _solve_third_coordinate(alpha, C)
        if z is not None:
            return SmallSolution(z, bound)
        # a3 == 0 and no in-window pair: fall through to the collision scan
    seen: dict[int, tuple[int, ...]] = {}
    for y in itertools.product(range(C + 1), repeat=n):
        v = sum(a * yi for a, yi in zip(alpha, y))
        if v in seen:
            prev = seen[v]
            return SmallSolution(tuple(yi - pi for yi, pi in zip(y, prev)), bound)
        seen[v] = y
    raise DomainError("pigeonhole scan found no collision; B out of contract")


def _solve_third_coordinate(
    alpha: tuple[int, ...], C: int
) -> tuple[int, int, int] | None:
    """First (by |z1|, |z2|, |z3|, sign pattern) solution with z3 derived."""
    a1, a2, a3 = alpha
    if a3 == 0:
        # form reduces to a1 z1 + a2 z2 = 0 with z3 free; (0,0,1) always works
        return (0, 0, 1)
    for m1 in range(0, C + 1):
        for m2 in range(0, C + 1):
            if m1 == 0 and m2 == 0:
                continue
            best = None
            for s1, s2 in ((1, 1), (1, -1), (-1, 1), (-1, -1)):
                z1, z2 = s1 * m1, s2 * m2
                if (m1 == 0 and s1 < 0) or (m2 == 0 and s2 < 0):
                    continue
                rest = a1 * z1 + a2 * z2
                if rest % a3:
                    continue
                z3 = -rest // a3
                if abs(z3) > C:
                    continue
                cand = (abs(z3), s1 < 0, s2 < 0, (z1, z2, z3))
                if best is None or cand < best:
                    best = cand
            if best is not None:
                return best[3]
    return None


def siegel_nonzero_coords(
    alpha: tuple[int, ...], B: int, cap: float
) -> SmallSolution | None:
    """Like siegel_small_solution but every coordinate nonzero and max|z_i| <= cap.

    Returns None when no such solution exists in the window.  Selection is the
    lexicographically smallest (|z_1|, ..., |z_n|, sign pattern), signs ordered
    + before -.
    """
    n = len(alpha)
    if n < 2:
        raise DomainError("need n >= 2 coefficients")
    if cap < 1:
        raise DomainError("cap must be >= 1")
    M = floor(cap + 1e-12)
    if n == 3:
        return _nonzero_third_coordinate(alpha, M, cap)
    for mags in itertools.product(range(1, M + 1), repeat=n):
        for signs in itertools.product((1, -1), repeat=n):
            z = tuple(s * m for s, m in zip(signs, mags))
            if sum(a * zi for a, zi in zip(alpha, z)) == 0:
                return SmallSolution(z, cap)
    return None


def _nonzero_third_coordinate(
    alpha: tuple[int, ...], M: int, cap: float
) -> SmallSolution | None:
    a1, a2, a3 = alpha
    if a3 == 0:
        # need a1 z1 + a2 z2 = 0 with both nonzero; z3 = 1 minimal
        for mags in itertools.product(range(1, M + 1), repeat=2):
            for signs in itertools.product((1, -1), repeat=2):
                z1, z2 = signs[0] * mags[0], signs[1] * mags[1]
                if a1 * z1 + a2 * z2 == 0:
                    return SmallSolution((z1, z2, 1), cap)
        return None
    for m1 in range(1, M + 1):
        for m2 in range(1, M + 1):
            best = None
            for s1, s2 in ((1, 1), (1, -1), (-1, 1), (-1, -1)):
                z1, z2 = s1 * m1, s2 * m2
                rest = a1 * z1 + a2 * z2
                if rest % a3:
                    continue
                z3 = -rest // a3
                if z3 == 0 or abs(z3) > M:
                    continue
                cand = (abs(z3), s1 < 0, s2 < 0, z3 < 0, (z1, z2, z3))
                if best is None or cand < best:
                    best = cand
            if best is not None:
                return SmallSolution(best[4], cap)
    return None
