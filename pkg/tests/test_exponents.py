import pytest

from sunit_harvest.errors import ConstraintViolation, DomainError
from sunit_harvest.exponents import (
    ALPHA_THM2_CONDITIONAL,
    ALPHA_THM2_UNCONDITIONAL,
    check_constraints,
    cubic_real_root,
    optimality_frontier,
    regime_exponents,
)


def test_cubic_roots_match_reference_values():
    lam0 = cubic_real_root((4, -5, 9, -4), 0.0, 1.0)
    assert abs(lam0 - 0.53551) <= 5e-6
    lam1 = cubic_real_root((1, -2, -1, 1), 0.5, 1.0)
    assert abs(lam1 - 0.55496) <= 5e-6
    assert cubic_real_root((1, 0, 0, -1), 0.0, 2.0) == pytest.approx(1.0, abs=1e-12)


def test_cubic_residuals():
    for coeffs, root in (
        ((4, -5, 9, -4), ALPHA_THM2_UNCONDITIONAL),
        ((1, -2, -1, 1), ALPHA_THM2_CONDITIONAL),
    ):
        c3, c2, c1, c0 = coeffs
        assert abs(((c3 * root + c2) * root + c1) * root + c0) <= 1e-10


def test_cubic_requires_sign_change():
    with pytest.raises(DomainError):
        cubic_real_root((1, 0, 0, 1), 0.0, 0.5)


def test_regime_exponent_values():
    e = regime_exponents("thm1", "unconditional", 1 / 6)
    assert e.z_exp == pytest.approx(1 / 3)
    assert e.w_exp == pytest.approx(1 / 9)
    e = regime_exponents("thm1", "conditional", 0.2)
    assert e.z_exp == pytest.approx(0.5)
    e = regime_exponents("thm2", "unconditional", ALPHA_THM2_UNCONDITIONAL)
    assert e.z_exp > 0 and e.w_exp > 0 and e.y_exp > 0
    assert all(v < 100 for v in (e.z_exp, e.w_exp, e.y_exp))


def test_thm2_conditional_w_consistency():
    # W = X^(-alpha) Y^(1-alpha) Z^(1-alpha) in exponent arithmetic
    for alpha in (0.5, 0.52, 0.545, ALPHA_THM2_CONDITIONAL):
        e = regime_exponents("thm2", "conditional", alpha)
        derived = -alpha + (1 - alpha) * e.y_exp + (1 - alpha) * e.z_exp
        assert e.w_exp == pytest.approx(derived, abs=1e-12)


def test_check_constraints_examples():
    rows = dict((n, (v, ok)) for n, v, ok in check_constraints("thm1", "conditional", 0.19))
    margin, ok = rows["alpha_le_one_fifth"]
    assert ok and margin == pytest.approx(0.01)
    rows = dict((n, (v, ok)) for n, v, ok in check_constraints("thm2", "conditional", 0.56))
    assert not rows["cubic_x3_2x2_x_1_positive"][1]
    rows = dict((n, (v, ok)) for n, v, ok in check_constraints("thm1", "unconditional", 1 / 6))
    assert rows["alpha_le_one_sixth"][1]  # boundary, non-strict


def test_infeasible_alpha_raises():
    with pytest.raises(ConstraintViolation) as err:
        regime_exponents("thm1", "unconditional", 0.2)
    assert err.value.name == "alpha_le_one_sixth"
    with pytest.raises(ConstraintViolation):
        regime_exponents("thm2", "unconditional", 0.54)
    with pytest.raises(ConstraintViolation):
        regime_exponents("thm2", "conditional", 0.4)  # below the 1/2 window


THRESHOLDS = {
    ("thm1", "conditional"): 0.2,
    ("thm1", "unconditional"): 1 / 6,
    ("thm2", "conditional"): ALPHA_THM2_CONDITIONAL,
    ("thm2", "unconditional"): ALPHA_THM2_UNCONDITIONAL,
}


def grid_flip_point(theorem, variant, step=1e-3):
    lo = 0.5 if theorem == "thm2" else step
    last_ok = None
    for i in range(int(0.5 / step) + 1):
        alpha = lo + i * step
        ok = all(s for _, _, s in check_constraints(theorem, variant, alpha))
        if last_ok and not ok:
            return alpha
        last_ok = ok
    return None


def test_feasibility_flip_at_thresholds():
    for (theorem, variant), threshold in THRESHOLDS.items():
        flip = grid_flip_point(theorem, variant)
        assert flip is not None
        # the first failing grid point sits within one step above the threshold
        assert abs(flip - threshold) <= 1e-3 + 1e-9, (theorem, variant, flip, threshold)


def test_frontier_examples():
    theta, val = optimality_frontier(2, ())
    assert (theta, val) == (0.0, pytest.approx(0.125))
    theta, val = optimality_frontier(2, (2,))
    assert theta == 0.25
    assert val == pytest.approx(1 / 7)
    _, val = optimality_frontier(40, ())
    assert 0.19 < val < 0.2


def test_frontier_below_one_fifth_exhaustive():
    for k in range(2, 13):
        indices = list(range(2, k + 1))
        for rbits in range(1 << len(indices)):
            I = tuple(indices[j] for j in range(len(indices)) if rbits >> j & 1)
            _, val = optimality_frontier(k, I)
            assert val < 0.2, (k, I)


def test_frontier_rejects_bad_subsets():
    with pytest.raises(DomainError):
        optimality_frontier(3, (5,))
    with pytest.raises(DomainError):
        optimality_frontier(1, ())
