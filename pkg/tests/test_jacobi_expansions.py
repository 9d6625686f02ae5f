import itertools
import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gfverify.errors import DomainError
from gfverify.expansions import jacobi as J
from gfverify.expansions.geometry import SzegoPoint, geometry, szego_point
from gfverify.orthopoly import jacobi_p


def series(coeff, alpha, beta, x, n_terms=120):
    return math.fsum(coeff(n) * jacobi_p(n, alpha, beta, x) for n in range(n_terms))


def gf_closed(m, alpha, beta, rho, x, branch, form="gauss"):
    """The classical (m = 0) and extended (m = 1) generating functions,
    scaled to the normalization of the m-family left-hand sides."""
    s = alpha + beta + 1
    if branch == "plus":
        norm = J.theorem_normalization(m, alpha, beta, rho)
        if m == 0:
            return norm * (1 + rho) ** s * J.jacobi_gf_plus(alpha, beta, rho, x, form)
        return (norm * (1 + rho) ** (s + 1) / (s * (1 - rho))
                * J.jacobi_gf_ext_plus(alpha, beta, rho, x, form))
    norm = J.corollary_normalization(m, alpha, beta, rho)
    if m == 0:
        return norm * (1 - rho) ** s * J.jacobi_gf_minus(alpha, beta, rho, x, form)
    return (norm * (1 - rho) ** (s + 1) / (s * (1 + rho))
            * J.jacobi_gf_ext_minus(alpha, beta, rho, x, form))


# geometry ------------------------------------------------------------------

def test_geometry_examples():
    g = geometry(0.5, 1.0)
    assert (g.big_r, g.zeta_plus, g.zeta_minus) == pytest.approx((0.5, 3.0, 1.0))
    g = geometry(0.5, -1.0)
    assert (g.big_r, g.zeta_plus, g.zeta_minus) == pytest.approx((1.5, 1.0, 1 / 3))
    g = geometry(0.3, 0.0)
    r = math.sqrt(1.09)
    assert (g.big_r, g.zeta_plus, g.zeta_minus) == pytest.approx((r, 1.3 / r, 0.7 / r), rel=1e-15)


@settings(max_examples=100, deadline=None)
@given(st.floats(0.01, 0.99), st.floats(-1, 1))
def test_geometry_invariants(rho, x):
    g = geometry(rho, x)
    assert 1 - rho - 1e-15 <= g.big_r <= 1 + rho + 1e-15
    assert g.zeta_plus >= 1 - 1e-15
    assert 0 < g.zeta_minus <= 1 + 1e-15
    lhs = g.zeta_plus ** 2 - g.zeta_minus ** 2
    assert lhs == pytest.approx(4 * rho / g.big_r ** 2, rel=1e-13)


def test_geometry_domain():
    with pytest.raises(DomainError):
        geometry(1.0, 0.0)
    with pytest.raises(DomainError):
        geometry(0.5, 1.2)


@settings(max_examples=60, deadline=None)
@given(st.floats(0.01, 0.99))
def test_szego_point_roundtrip(rho):
    sp = szego_point(rho)
    r = sp.rho_equiv
    assert r == pytest.approx(rho, rel=1e-12)
    assert (1 + r * r) / (2 * r) == pytest.approx(sp.z, rel=1e-13)
    with pytest.raises(DomainError):
        SzegoPoint(1.0)


# left-hand sides -------------------------------------------------------------

def test_lhs_trivial_values():
    g = geometry(0.5, 0.5)
    assert J.lhs_theorem(0, 0.0, 0.0, 0.5, 0.5) == pytest.approx(1 / math.sqrt(0.75), rel=1e-15)
    assert J.lhs_corollary(0, 0.0, 0.0, 0.5, 0.5) == pytest.approx(1 / g.big_r, rel=1e-15)
    g = geometry(0.3, 0.2)
    assert J.lhs_theorem(1, 0.0, 0.0, 0.3, 0.2) == pytest.approx(g.zeta_plus / g.big_r ** 2, rel=1e-14)


def test_lhs_oracle_values():
    # mpmath legenp at 40 digits
    assert J.lhs_theorem(2, 0.5, -0.25, 0.3, 0.1) == pytest.approx(3.16138824733186, rel=1e-13)
    assert J.lhs_corollary(2, 0.5, -0.25, 0.3, 0.1) == pytest.approx(0.39795313247541203, rel=1e-13)


@settings(max_examples=80, deadline=None)
@given(st.integers(0, 6), st.floats(-0.9, 3), st.floats(-0.9, 3), st.floats(0.05, 0.6),
       st.floats(-0.99, 0.99))
def test_lhs_paths_agree(m, alpha, beta, rho, x):
    for fn in (J.lhs_theorem, J.lhs_corollary):
        a = fn(m, alpha, beta, rho, x)
        b = fn(m, alpha, beta, rho, x, path="gauss")
        assert a == pytest.approx(b, rel=1e-10)


def test_lhs_small_rho_limit():
    a = J.lhs_theorem(2, 0.5, 0.75, 1e-6, 0.3)
    b = J.lhs_theorem(2, 0.5, 0.75, 1e-6, 0.3, path="gauss")
    assert math.isfinite(a) and a == pytest.approx(b, rel=1e-8)


def test_lhs_endpoints():
    with pytest.raises(DomainError):
        J.lhs_theorem(1, 0.5, 0.5, 0.3, -1.0)
    with pytest.raises(DomainError):
        J.lhs_corollary(1, 0.5, 0.5, 0.3, 1.0)
    # finite when the exponent does not blow up
    v = J.lhs_theorem(1, 0.5, -0.5, 0.3, -1.0)
    assert v == pytest.approx(J.lhs_theorem(1, 0.5, -0.5, 0.3, -1.0 + 1e-9), rel=1e-6)


# coefficients ----------------------------------------------------------------

# orthogonality integrals of the mpmath left-hand side (mp.quad, 40 digits)
@pytest.mark.parametrize("n, a_ref, b_ref", [
    (0, 2.91532797640549, 0.33028454807516544),
    (3, 3.3887848120541997, 0.1568659444720195),
    (7, 0.15860831211988138, 0.004539939784611897),
])
def test_coefficient_oracles(n, a_ref, b_ref):
    assert J.coeff_a(n, 2, 0.5, -0.25, 0.3) == pytest.approx(a_ref, rel=1e-12)
    assert J.coeff_b(n, 2, 0.5, -0.25, 0.3) == pytest.approx(b_ref, rel=1e-12)


@pytest.mark.parametrize("m", [0, 1])
@pytest.mark.parametrize("branch", ["plus", "minus"])
def test_m_ladder_against_classical_forms(m, branch):
    alpha, beta, rho, x = 0.5, 0.5, 0.3, 0.2
    coeff = J.coeff_a if branch == "plus" else J.coeff_b
    total = series(lambda n: coeff(n, m, alpha, beta, rho), alpha, beta, x)
    assert total == pytest.approx(gf_closed(m, alpha, beta, rho, x, branch), rel=1e-12)
    assert gf_closed(m, alpha, beta, rho, x, branch, form="legendre") == pytest.approx(
        gf_closed(m, alpha, beta, rho, x, branch), rel=1e-12)


def test_classical_coefficients_proportional():
    # coeff_a(n, 0) and the classical rho^n (s)_n / (beta+1)_n differ by an n-free factor
    alpha, beta, rho = 0.5, -0.25, 0.3
    ratios = [J.coeff_a(n, 0, alpha, beta, rho) / J.jacobi_gf_coeff(n, alpha, beta, rho, "plus")
              for n in range(8)]
    assert ratios == pytest.approx([ratios[0]] * 8, rel=1e-13)
    ratios = [J.coeff_b(n, 1, alpha, beta, rho)
              / J.jacobi_gf_coeff(n, alpha, beta, rho, "minus", extended=True) for n in range(8)]
    assert ratios == pytest.approx([ratios[0]] * 8, rel=1e-13)


@pytest.mark.parametrize("nu", [0.25, 0.75, 1.5])
def test_gegenbauer_collapse(nu):
    # alpha = beta = nu - 1/2, m = 0: the Jacobi series is the Gegenbauer generating function
    a = nu - 0.5
    rho, x = 0.35, -0.4
    total = series(lambda n: J.coeff_a(n, 0, a, a, rho), a, a, x)
    closed = J.lhs_theorem(0, a, a, rho, x)
    assert total == pytest.approx(closed, rel=1e-12)
    scale = closed * geometry(rho, x).big_r ** (2 * nu)
    # the left-hand side is a constant multiple of (1 + rho^2 - 2 rho x)^-nu
    other = J.lhs_theorem(0, a, a, rho, 0.7) * geometry(rho, 0.7).big_r ** (2 * nu)
    assert scale == pytest.approx(other, rel=1e-13)


def test_swap_symmetry():
    # with (alpha, beta) swapped and x -> -x, parity turns P_n into (-1)^n P_n
    alpha, beta, rho, x, m = 0.5, 1.3, 0.4, 0.35, 2
    direct = series(lambda n: J.coeff_b(n, m, alpha, beta, rho), alpha, beta, x)
    swapped = series(lambda n: (-1) ** n * J.coeff_b(n, m, alpha, beta, rho), beta, alpha, -x)
    assert direct == pytest.approx(swapped, rel=1e-13)
    assert direct == pytest.approx(J.lhs_corollary(m, alpha, beta, rho, x), rel=1e-12)


def test_szego_pipeline():
    for m, alpha, beta, rho, x in itertools.product((0, 2), (0.5, -0.4), (1.3, 0.0), (0.2, 0.5), (-0.5, 0.9)):
        z = szego_point(rho).z
        factor = (2 * rho) ** ((alpha + m + 1) / 2)
        assert J.lhs_szego(m, alpha, beta, z, x) == pytest.approx(
            factor * J.lhs_theorem(m, alpha, beta, rho, x), rel=1e-13)
        for n in (0, 4):
            assert J.coeff_c(n, m, alpha, beta, z) == pytest.approx(
                factor * J.coeff_a(n, m, alpha, beta, rho), rel=1e-12)


def test_szego_at_point_from_example():
    z = (1 + 0.09) / 0.6
    total = series(lambda n: J.coeff_c(n, 1, 0.5, 0.5, z), 0.5, 0.5, 0.2)
    assert total == pytest.approx(J.lhs_szego(1, 0.5, 0.5, z, 0.2), rel=1e-12)


def test_coeff_c_elementary():
    # n = m = 0, alpha = beta = 0: the integral of R^-1 over [-1, 1] is 2,
    # so coeff_a = 1 and coeff_c = sqrt(2 rho)
    z = 1.7
    rho = SzegoPoint(z).rho_equiv
    assert J.coeff_a(0, 0, 0.0, 0.0, rho) == pytest.approx(1.0, rel=1e-14)
    assert J.coeff_c(0, 0, 0.0, 0.0, z) == pytest.approx(math.sqrt(2 * rho), rel=1e-14)


def test_coeff_f_relation_grid():
    # coeff_a = theorem_normalization * coeff_f, with (s)_{2n+1} in the f denominator
    worst = 0.0
    for m, alpha, beta in itertools.product((0, 1, 3), (-0.4, 0.5, 1.3), (-0.4, 0.0, 2.0)):
        for n in range(6):
            a = J.coeff_a(n, m, alpha, beta, 0.35)
            f = J.coeff_f(n, m, alpha, beta, 0.35) * J.theorem_normalization(m, alpha, beta, 0.35)
            worst = max(worst, abs(a - f) / abs(a))
    assert worst <= 1e-10


def test_coeff_f_n0_m0():
    rho = 0.4
    from gfverify.hyp2f1 import gauss_2f1
    expected = gauss_2f1(0.5, 1.0, 2.0, 4 * rho / (1 + rho) ** 2)
    assert J.coeff_f(0, 0, 0.0, 0.0, rho) == pytest.approx(expected, rel=1e-13)


def test_coefficients_large_n_no_overflow():
    v = J.coeff_a(200, 5, 1.3, 0.5, 0.6)
    assert math.isfinite(v) and v != 0.0


def test_coefficient_domain():
    with pytest.raises(DomainError):
        J.coeff_a(1, 0, -1.2, 0.0, 0.3)
    with pytest.raises(DomainError):
        J.coeff_a(1, 0, 0.0, 0.0, 1.0)
    with pytest.raises(DomainError):
        J.coeff_a(1, -1, 0.0, 0.0, 0.3)
    with pytest.raises(DomainError):
        J.coeff_c(1, 0, 0.0, 0.0, 0.9)
