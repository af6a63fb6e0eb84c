#!/usr/bin/env python3
"""How the scale exponents are chosen, and where each regime stops being feasible.

Run: python demos/exponent_landscape.py
"""

from sunit_harvest import (
    ALPHA_THM2_CONDITIONAL,
    ALPHA_THM2_UNCONDITIONAL,
    check_constraints,
    optimality_frontier,
    regime_exponents,
)

print("== feasibility thresholds ==")
print(f"  thm1 conditional   : alpha <= 1/5")
print(f"  thm1 unconditional : alpha <= 1/6")
print(f"  thm2 conditional   : alpha <= {ALPHA_THM2_CONDITIONAL:.6f} (root of x^3-2x^2-x+1)")
print(f"  thm2 unconditional : alpha <= {ALPHA_THM2_UNCONDITIONAL:.6f} (root of 4x^3-5x^2+9x-4)")

print("\n== exponent tables near the boundaries ==")
rows = [
    ("thm1", "conditional", 0.2),
    ("thm1", "unconditional", 1 / 6),
    ("thm2", "conditional", 0.55),
    ("thm2", "unconditional", 0.53),
]
for theorem, variant, alpha in rows:
    e = regime_exponents(theorem, variant, alpha)
    extra = f", Y = X^{e.y_exp:.4f}" if e.y_exp is not None else ""
    print(f"  {theorem}/{variant:14} alpha = {alpha:.4f}:"
          f" Z = X^{e.z_exp:.4f}, W = X^{e.w_exp:.4f}{extra}")

print("\n== constraint margins just past a boundary ==")
for alpha in (0.5350, 0.5355, 0.5360):
    margins = {n: (f"{v:+.2e}", ok) for n, v, ok in
               check_constraints("thm2", "unconditional", alpha)}
    print(f"  alpha = {alpha}: {margins}")

print("\n== factorization frontier: more factors never beat 1/5 ==")
for k in (2, 3, 4, 6, 12):
    best = max(
        optimality_frontier(k, tuple(i for i in range(2, k + 1) if bits >> (i - 2) & 1))[1]
        for bits in range(1 << (k - 1))
    )
    print(f"  k = {k:2}: best frontier over all sieve subsets = {best:.6f}")
