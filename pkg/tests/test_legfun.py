import math

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from gfverify.errors import DomainError, EvaluationError
from gfverify.legfun import (
    assoc_legendre_p,
    chebyshev_elementary_forms,
    chebyshev_t_via_legendre,
    chebyshev_u_via_legendre,
    ferrers_p,
    ferrers_p_minus_half,
    legendre_p_minus_half,
    log_legendre_neg_degree,
)
from gfverify.numcore import elliptic_k
from gfverify.orthopoly import chebyshev_t, chebyshev_u


def test_legendre_examples():
    assert assoc_legendre_p(0.0, 0.0, 1.7) == pytest.approx(1.0, rel=1e-15)
    assert assoc_legendre_p(1.0, 0.0, 1.7) == pytest.approx(1.7, rel=1e-15)
    rho = 0.3
    z = (1 + rho) / (1 - rho)
    assert assoc_legendre_p(0.0, -0.8, z) == pytest.approx(rho ** 0.4 / math.gamma(1.8), rel=1e-14)


def test_ferrers_examples():
    assert ferrers_p(1.0, 0.0, 0.4) == pytest.approx(0.4, rel=1e-15)
    expected = 2 / math.pi * elliptic_k(math.sqrt(0.4))
    assert ferrers_p(-0.5, 0.0, 0.2) == pytest.approx(expected, rel=1e-14)
    assert ferrers_p(-0.5, 0.0, 0.2) == pytest.approx(1.131603977657728, rel=1e-14)


def test_ferrers_terminating_three_terms():
    # nu = -2, mu = -3: ((1+x)/(1-x))^(-3/2) sum_{k<=1} (2)_k (-1)_k / ((4)_k k!) w^k / Gamma(4)
    x = 0.5
    w = (1 - x) / 2
    expected = ((1 + x) / (1 - x)) ** -1.5 * (1 + 2 * -1 / 4 * w) / 6
    assert ferrers_p(-2.0, -3.0, x) == pytest.approx(expected, rel=1e-14)


# mpmath legenp (type 3 for z > 1, type 2 on the cut)
@pytest.mark.parametrize("nu, mu, z, expected", [
    (0.7, -0.3, 1.8, 1.2413523667059994),
    (2.5, -1.5, 3.2, 4.5104800213189105),
    (-0.4, -2.2, 1.15, 0.02193257158836631),
])
def test_legendre_oracle(nu, mu, z, expected):
    assert assoc_legendre_p(nu, mu, z) == pytest.approx(expected, rel=1e-12)


@pytest.mark.parametrize("nu, mu, x, expected", [
    (1.3, -0.6, 0.35, 0.39037425096195255),
    (0.75, -1.25, -0.6, 0.9914044221219525),
])
def test_ferrers_oracle(nu, mu, x, expected):
    assert ferrers_p(nu, mu, x) == pytest.approx(expected, rel=1e-12)


@settings(max_examples=60, deadline=None)
@given(st.floats(-3, 3), st.floats(-3, 0), st.floats(1.05, 5))
def test_legendre_path_agreement(nu, mu, z):
    try:
        a = assoc_legendre_p(nu, mu, z, path="definition")
        b = assoc_legendre_p(nu, mu, z, path="quadratic")
    except EvaluationError:
        assume(False)
    assert a == pytest.approx(b, rel=1e-10, abs=1e-14)


@settings(max_examples=60, deadline=None)
@given(st.floats(-3, 3), st.floats(-3, 0), st.floats(0.05, 0.95))
def test_ferrers_path_agreement(nu, mu, x):
    try:
        a = ferrers_p(nu, mu, x, path="definition")
        b = ferrers_p(nu, mu, x, path="quadratic")
    except EvaluationError:
        assume(False)
    assert a == pytest.approx(b, rel=1e-10, abs=1e-14)


@pytest.mark.parametrize("nu", [-0.5, 0.3, 1.7, -2.4])
def test_continuity_through_one(nu):
    h = 1e-4
    gap = abs(ferrers_p(nu, 0.0, 1 - h) - assoc_legendre_p(nu, 0.0, 1 + h))
    assert gap <= 10 * h


def test_p_minus_half_forms():
    assert legendre_p_minus_half(1.0) == pytest.approx(1.0, rel=1e-15)
    assert legendre_p_minus_half(1 + 1e-12) == pytest.approx(1.0, rel=1e-9)
    # P_{-1/2}(3) = (2/pi) (1/sqrt 2) K(1/sqrt 2); mpmath 0.8346268416740732
    assert legendre_p_minus_half(3.0) == pytest.approx(
        2 / math.pi / math.sqrt(2) * elliptic_k(1 / math.sqrt(2)), rel=1e-15)
    assert legendre_p_minus_half(3.0) == pytest.approx(0.8346268416740732, rel=1e-14)
    x = 1.2
    assert legendre_p_minus_half(2 * x * x - 1) == pytest.approx(
        assoc_legendre_p(-0.5, 0.0, 2 * x * x - 1), rel=1e-12)
    for v in (-0.9, -0.2, 0.3, 0.8):
        assert ferrers_p_minus_half(v) == pytest.approx(ferrers_p(-0.5, 0.0, v), rel=1e-12)
    for z in (1.3, 2.0, 4.5):
        assert legendre_p_minus_half(z) == pytest.approx(assoc_legendre_p(-0.5, 0.0, z), rel=1e-12)


def test_chebyshev_elementary_examples():
    assert chebyshev_elementary_forms(0, 1.7) == pytest.approx((1.0, 1.0))
    assert chebyshev_elementary_forms(1, 1.5) == pytest.approx((1.5, 3.0))
    t, u = chebyshev_elementary_forms(3, 1.2)
    assert t == pytest.approx(chebyshev_t(3, 1.2), rel=1e-14)
    assert u == pytest.approx(chebyshev_u(3, 1.2), rel=1e-14)


@pytest.mark.parametrize("m", range(21))
@pytest.mark.parametrize("z", [1.05, 1.6, 3.0])
def test_half_integer_orders(m, z):
    t, u = chebyshev_elementary_forms(m, z)
    assert chebyshev_t_via_legendre(m, z) == pytest.approx(t, rel=1e-12)
    assert chebyshev_u_via_legendre(m, z) == pytest.approx(u, rel=1e-12)


@pytest.mark.parametrize("m, mu, z", [(0, -2.5, 1.8), (3, -4.25, 2.2), (2, -1.5, 0.4), (5, -7.5, -0.3)])
def test_negative_degree_log_form(m, mu, z):
    direct = assoc_legendre_p(-m, mu, z) if z > 1 else ferrers_p(-m, mu, z)
    assert float(log_legendre_neg_degree(m, mu, z)) == pytest.approx(direct, rel=1e-13)


def test_negative_degree_integer_order():
    # 1/Gamma(1 - mu) has a zero at mu = 1, 2, ...; the function stays finite
    v = float(log_legendre_neg_degree(2, 1.0, 1.5))
    assert math.isfinite(v)
    assert v == pytest.approx(assoc_legendre_p(-2.0, 1.0, 1.5), rel=1e-13)


def test_domain_errors():
    with pytest.raises(DomainError):
        assoc_legendre_p(0.5, 0.0, 1.0)
    with pytest.raises(DomainError):
        ferrers_p(0.5, 0.0, 1.0)
    with pytest.raises(DomainError):
        legendre_p_minus_half(0.9)
    with pytest.raises(DomainError):
        chebyshev_elementary_forms(2, 1.0)
