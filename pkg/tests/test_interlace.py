from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from extremezeros.bounds import laguerre_max_lower, laguerre_min_upper, quadratic_extreme_roots
from extremezeros.errors import ParameterDomainError
from extremezeros.interlace import (
    ITERATED,
    ITERATED_PLUS_ONE,
    SHIFT5,
    check_mixed_interlacing,
    common_zeros,
    g2_quadratic,
    identity_residual,
    jacobi_point,
    max_identity_residual,
    stieltjes_check,
    verify_jacobi_point,
    verify_theorem22,
)
from extremezeros.polyfam import PolynomialFamily
from extremezeros.zerofind import zeros
from oracles import laguerre_exact, rising


def exact_sides(name, alpha, n, x, const=-1):
    """Both sides of a mixed Laguerre identity in exact rational arithmetic."""
    a, x = Fraction(alpha), Fraction(x)
    Ln, Ln1 = laguerre_exact(n, a, x), laguerre_exact(n + 1, a, x)
    if name == "shift5":
        lhs = x**5 * laguerre_exact(n - 2, a + 5, x)
        G = (n + a + 1) * (rising(a + 1, 4) - rising(a + 2, 2) * (3 * n + 2 * a + 5) * x + rising(n + a + 2, 2) * x * x)
        H = -(n + 1) * (rising(a + 1, 4) - rising(a + 2, 2) * (3 * n + a + 1) * x + (n - 1) * n * x * x)
    else:
        lhs = (a + n - 1) * (a + n) * laguerre_exact(n - 2, a, x)
        G = x * x - 2 * (2 * n + a) * x + 3 * n * n + 3 * a * n + a * a + const
        H = -(n + 1) * (2 * n + a - 1 - x)
    return lhs, G * Ln + H * Ln1


@pytest.mark.parametrize("n", [2, 3, 6])
@pytest.mark.parametrize("x", ["0", "1", "13/10", "7"])
@pytest.mark.parametrize("alpha", ["0", "1/2", "-9/10", "65/3"])
def test_identities_hold_exactly(n, x, alpha):
    for name in ("shift5", "iterated"):
        lhs, rhs = exact_sides(name, alpha, n, x)
        assert lhs == rhs


def test_printed_plus_one_constant_fails_exactly():
    lhs, rhs = exact_sides("iterated", 0, 2, 1, const=+1)
    assert lhs - rhs == -2 * laguerre_exact(2, 0, 1) == 1


def test_residual_examples():
    for x in (0.0, 0.7, 3.0, 11.5):
        assert identity_residual(ITERATED, 1.3, 2, x) <= 1e-12
    assert identity_residual(SHIFT5, 0.5, 5, 1.3) <= 1e-10
    assert identity_residual(ITERATED, 0.0, 10, 0.0) <= 1e-10
    assert identity_residual(ITERATED_PLUS_ONE, 0.0, 2, 1.0) == pytest.approx(0.25)


def test_residual_vectorized_and_names():
    xs = np.linspace(0, 30, 11)
    res = identity_residual("shift5", 2.0, 8, xs)
    assert res.shape == xs.shape and np.all(res <= 1e-10)
    assert identity_residual("laguerre_iterated", 2.0, 8, 1.0) <= 1e-12
    with pytest.raises(ParameterDomainError):
        identity_residual("bogus", 2.0, 8, 1.0)
    with pytest.raises(ParameterDomainError):
        identity_residual(ITERATED, 2.0, 1, 1.0)


@settings(max_examples=100, deadline=None)
@given(alpha=st.floats(-0.999, 350), n=st.integers(2, 30), u=st.floats(0, 1))
def test_residual_property(alpha, n, u):
    x = u * (4 * n + 2 * alpha + 10)
    assert identity_residual(ITERATED, alpha, n, x) <= 1e-9
    assert identity_residual(SHIFT5, alpha, n, x) <= 1e-9


def test_g2_quadratic():
    assert g2_quadratic(ITERATED, 0.0, 2) == (1.0, -8.0, 11.0)
    A, B, C = g2_quadratic(SHIFT5, 340.56, 12)
    assert quadratic_extreme_roots(A, B, C)[0] == pytest.approx(275.856, rel=5e-6)
    for a, n in [(0.0, 2), (3.5, 9), (-0.5, 30)]:
        big = quadratic_extreme_roots(*g2_quadratic(ITERATED, a, n))[1]
        assert big == pytest.approx(2 * n + a + np.sqrt(n * n + a * n + 1), rel=1e-13)


@pytest.mark.parametrize("a, n", [(-0.9, 4), (0.0, 3), (65.3, 20), (340.56, 12), (1.7, 40)])
def test_bound_identity_coherence(a, n):
    big = quadratic_extreme_roots(*g2_quadratic(ITERATED, a, n))[1]
    small = quadratic_extreme_roots(*g2_quadratic(SHIFT5, a, n))[0]
    assert laguerre_max_lower(a, n).value == pytest.approx(big, rel=1e-12)
    assert laguerre_min_upper(a, n).value == pytest.approx(small, rel=1e-12)


def test_stieltjes_examples():
    assert stieltjes_check([0.0], [-1.0, 1.0]).passed
    rep = stieltjes_check(zeros(PolynomialFamily.laguerre(0.0), 2), zeros(PolynomialFamily.laguerre(0.0), 3))
    assert rep.passed and rep.common_zeros == []
    assert stieltjes_check([0.5, 0.6], [0, 0.55, 1, 2]).passed


def test_stieltjes_violations():
    rep = stieltjes_check([0.5, 0.52], [0, 0.55, 1, 2])
    assert not rep.passed and "share interval" in rep.violations[0]
    rep = stieltjes_check([3.0], [0, 1, 2])
    assert not rep.passed and "outside" in rep.violations[0]
    rep = stieltjes_check([1.0], [0, 1, 2, 3])  # common zero is recorded, within cap
    assert rep.passed and rep.common_zeros == [1.0] and rep.counts == (1, 1)
    rep = stieltjes_check([0.0], [0, 1, 2, 3])
    assert not rep.passed  # common zero at an extreme
    with pytest.raises(ParameterDomainError):
        stieltjes_check([1, 2], [0, 3])


def test_common_zeros_examples():
    assert common_zeros([1.0, 2.0], [2.0, 3.0], 1e-9) == [2.0]
    assert common_zeros([1.0, 2.0], [5.0, 6.0]) == []
    # greedy matching uses each point once
    assert common_zeros([1.0, 1.0 + 1e-12], [1.0]) == [1.0]


def test_gibson_cap_laguerre_degrees_four_and_six():
    for a in np.linspace(-0.95, 30, 200):
        z4 = zeros(PolynomialFamily.laguerre(a), 4)
        z6 = zeros(PolynomialFamily.laguerre(a), 6)
        assert len(common_zeros(z4, z6)) <= min(4, 6 - 4 - 1)


def test_mixed_interlacing_examples():
    rep = verify_theorem22(ITERATED, 0.3, 10)
    assert rep.passed and rep.common_zeros == [] and rep.counts == (0, 2)
    assert verify_theorem22(SHIFT5, -0.5, 8).passed
    with pytest.raises(ParameterDomainError):
        verify_theorem22(ITERATED, 0.3, 2)


def test_plus_one_variant_still_reports():
    rep = verify_theorem22(ITERATED_PLUS_ONE, 0.3, 10)
    assert isinstance(rep.passed, bool)


GRID_ALPHA = [-0.9, -0.5, 0, 0.5, 1, 2, 5, 10, 65.3, 340.56]


@pytest.mark.parametrize("alpha", GRID_ALPHA)
def test_mixed_interlacing_grid(alpha):
    for n in range(3, 13):
        for ident in (ITERATED, SHIFT5):
            rep = verify_theorem22(ident, alpha, n)
            assert rep.passed, (ident.name, alpha, n, rep.violations)
            p = zeros(PolynomialFamily.laguerre(alpha), n + 1)
            for c in rep.common_zeros:
                assert not np.isclose(c, [p.smallest, p.largest], rtol=1e-9).any()


def test_check_mixed_interlacing_with_common_zero():
    # p zeros 0..4, g shares the zero 2 which is also a root of G
    p = [0.0, 1.0, 2.0, 3.0, 4.0]
    rep = check_mixed_interlacing(p, [2.0, 3.5], [0.5, 2.0], k=2)
    assert rep.passed and rep.common_zeros == [2.0] and rep.counts == (1, 2)


def test_check_mixed_interlacing_violations():
    p = [0.0, 1.0, 2.0, 3.0, 4.0]
    rep = check_mixed_interlacing(p, [4.0, 2.5], [0.5, 4.0], k=2)
    assert not rep.passed
    assert any("extreme zero" in v for v in rep.violations)
    rep = check_mixed_interlacing(p, [1.0, 2.0], [2.5, 3.5], k=2)
    assert any("not a root of G" in v for v in rep.violations)
    assert any("successive" in v for v in rep.violations)
    rep = check_mixed_interlacing(p, [0.5, 0.7], [2.5, 3.5], k=2)
    assert any("do not interlace" in v for v in rep.violations)


def test_jacobi_point_formulas():
    a, b, n = 1.5, -0.25, 6
    base = 2 * n * (n + a + b + 3)
    assert jacobi_point(a, b, n) == pytest.approx((base + (a + 3) * (b - a)) / (base + (a + 3) * (a + b + 2)))
    assert jacobi_point(a, b, n, "beta") == pytest.approx(-jacobi_point(b, a, n, "alpha"))
    with pytest.raises(ParameterDomainError):
        jacobi_point(a, b, n, "gamma")


def test_jacobi_point_interlacing_random():
    rng = np.random.default_rng(5)
    for _ in range(50):
        a, b = rng.uniform(-0.99, 60, 2)
        n = int(rng.integers(1, 21))
        for shifted in ("alpha", "beta"):
            rep = verify_jacobi_point(a, b, n, shifted)
            assert rep.passed, (a, b, n, shifted, rep.violations)


def test_max_identity_residual():
    assert max_identity_residual(ITERATED, 0.3, 10) <= 1e-10
    assert max_identity_residual(ITERATED_PLUS_ONE, 0.3, 10) > 1e-3
