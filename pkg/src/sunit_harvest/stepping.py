"""Fast residue-stepping enumeration of {(a, c, w) : c*w == shift (mod a), 1 <= w <= W}.

For each pair the admissible w form an arithmetic progression, so the cost is
O(#A * #C * (W/a + 1)) instead of the naive O(#A * #C * W).  This is the hot
loop shared by the pipelines and the decomposition cross-checks.
"""

from __future__ import annotations

from math import gcd
from typing import Iterable


def progression_start(c: int, a: int, shift: int) -> tuple[int, int] | None:
    """Smallest w >= 1 with c*w == shift (mod a), and the step, or None."""
    g = gcd(c, a)
    if shift % g:
        return None
    step = a // g
    w0 = (shift // g) * pow(c // g, -1, step) % step
    if w0 == 0:
        w0 = step
    return w0, step


def count_hits(a_values: Iterable[int], c_values: Iterable[int], W: int, shift: int = 1) -> int:
    """Exact number of triples with c*w == shift (mod a) and 1 <= w <= W."""
    total = 0
    for a in a_values:
        for c in c_values:
            got = progression_start(c, a, shift)
            if got is None:
                continue
            w0, step = got
            if w0 <= W:
                total += 1 + (W - w0) // step
    return total
