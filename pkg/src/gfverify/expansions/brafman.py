"""Koekoek- and Rainville-type Gegenbauer generating functions written with
Legendre and Ferrers functions, plus their Chebyshev-U and Legendre cases.

The Koekoek form (a generalization of Brafman's theorem) is

    (1-x^2)^(1/4-mu/2) P_{mu-lam-1/2}^{1/2-mu}(R+rho) Ferrers P_{mu-lam-1/2}^{1/2-mu}(R-rho)
        = sum_n k_n C_n^mu(x),

the Rainville form is

    (1-x^2)^(1/4-mu/2) R^-(1/2+alpha-mu) Ferrers P_{mu-alpha-1/2}^{1/2-mu}((1-rho x)/R)
        = sum_n r_n C_n^mu(x).
"""
from __future__ import annotations

import math

from ..errors import DomainError
from ..legfun import assoc_legendre_p, ferrers_p
from ..numcore import SignedLogValue, log_gamma, log_pochhammer
from ..orthopoly import PolyFamily, check_gegenbauer
from .geometry import geometry

__all__ = [
    "koekoek_lhs",
    "koekoek_coeff",
    "rainville_lhs",
    "rainville_coeff",
    "chebu_brafman_lhs",
    "chebu_brafman_coeff",
    "chebu_rainville_lhs",
    "chebu_rainville_coeff",
    "legendre_brafman_lhs",
    "legendre_brafman_coeff",
    "legendre_rainville_lhs",
    "legendre_rainville_coeff",
    "brafman_lhs",
    "brafman_coeff",
]


def _interior(rho: float, x: float):
    g = geometry(rho, x)
    if not -1.0 < x < 1.0:
        raise DomainError(f"x must lie in (-1, 1), got {x}")
    return g


def _legendre_or_ferrers(nu: float, mu: float, z: float) -> float:
    # R + rho >= 1 always; equality only at x = 1, which callers exclude.
    if z > 1.0:
        return assoc_legendre_p(nu, mu, z)
    return ferrers_p(nu, mu, z)


def _rho_power(rho: float, p: float) -> SignedLogValue:
    return SignedLogValue(p * math.log(rho), 1)


def koekoek_lhs(lam: float, mu: float, rho: float, x: float) -> float:
    check_gegenbauer(mu)
    g = _interior(rho, x)
    nu = mu - lam - 0.5
    order = 0.5 - mu
    return ((1 - x * x) ** (0.25 - mu / 2)
            * _legendre_or_ferrers(nu, order, g.big_r + rho)
            * ferrers_p(nu, order, g.big_r - rho))


def koekoek_coeff(n: int, lam: float, mu: float, rho: float) -> float:
    """2^(1/2-mu)/Gamma(mu+1/2) (lam)_n (2mu-lam)_n / ((2mu)_n Gamma(mu+1/2+n)) rho^(mu-1/2+n)."""
    check_gegenbauer(mu)
    v = log_pochhammer(lam, n) * log_pochhammer(2 * mu - lam, n)
    v = v / (log_pochhammer(2 * mu, n) * log_gamma(mu + 0.5 + n) * log_gamma(mu + 0.5))
    v = v * SignedLogValue((0.5 - mu) * math.log(2.0), 1) * _rho_power(rho, mu - 0.5 + n)
    return float(v)


def rainville_lhs(alpha: float, mu: float, rho: float, x: float) -> float:
    check_gegenbauer(mu)
    g = _interior(rho, x)
    w = (1 - rho * x) / g.big_r
    return ((1 - x * x) ** (0.25 - mu / 2) * g.big_r ** (-(0.5 + alpha - mu))
            * ferrers_p(mu - alpha - 0.5, 0.5 - mu, w))


def rainville_coeff(n: int, alpha: float, mu: float, rho: float) -> float:
    """(rho/2)^(mu-1/2)/Gamma(mu+1/2) (alpha)_n/(2mu)_n rho^n."""
    check_gegenbauer(mu)
    v = log_pochhammer(alpha, n) / (log_pochhammer(2 * mu, n) * log_gamma(mu + 0.5))
    v = v * SignedLogValue((mu - 0.5) * math.log(rho / 2), 1) * _rho_power(rho, n)
    return float(v)


def chebu_brafman_lhs(lam: float, rho: float, x: float) -> float:
    g = _interior(rho, x)
    nu = 0.5 - lam
    return ((1 - x * x) ** -0.25 * _legendre_or_ferrers(nu, -0.5, g.big_r + rho)
            * ferrers_p(nu, -0.5, g.big_r - rho))


def chebu_brafman_coeff(n: int, lam: float, rho: float) -> float:
    """2^(5/2) sqrt(rho)/pi (lam)_n (2-lam)_n 4^n rho^n / (2n+2)!."""
    v = log_pochhammer(lam, n) * log_pochhammer(2 - lam, n) / log_gamma(2 * n + 3)
    v = v * SignedLogValue(2.5 * math.log(2.0) - math.log(math.pi) + 2 * n * math.log(2.0), 1)
    return float(v * _rho_power(rho, n + 0.5))


def chebu_rainville_lhs(alpha: float, rho: float, x: float) -> float:
    g = _interior(rho, x)
    w = (1 - rho * x) / g.big_r
    return (g.big_r ** (0.5 - alpha) / (1 - x * x) ** 0.25
            * ferrers_p(0.5 - alpha, -0.5, w))


def chebu_rainville_coeff(n: int, alpha: float, rho: float) -> float:
    """sqrt(2 rho/pi) (alpha)_n / (n+1)! rho^n."""
    v = log_pochhammer(alpha, n) / log_gamma(n + 2)
    v = v * SignedLogValue(0.5 * math.log(2 / math.pi), 1)
    return float(v * _rho_power(rho, n + 0.5))


def legendre_brafman_lhs(lam: float, rho: float, x: float) -> float:
    """P_{-lam}(R+rho) Ferrers P_{-lam}(R-rho) (Brafman's theorem)."""
    g = _interior(rho, x)
    return (_legendre_or_ferrers(-lam, 0.0, g.big_r + rho)
            * ferrers_p(-lam, 0.0, g.big_r - rho))


def legendre_brafman_coeff(n: int, lam: float, rho: float) -> float:
    v = log_pochhammer(lam, n) * log_pochhammer(1 - lam, n)
    v = v / (log_gamma(n + 1) * log_gamma(n + 1))
    return float(v * _rho_power(rho, n))


def legendre_rainville_lhs(alpha: float, rho: float, x: float) -> float:
    g = _interior(rho, x)
    return g.big_r ** (-alpha) * ferrers_p(alpha - 1, 0.0, (1 - rho * x) / g.big_r)


def legendre_rainville_coeff(n: int, alpha: float, rho: float) -> float:
    v = log_pochhammer(alpha, n) / log_gamma(n + 1)
    return float(v * _rho_power(rho, n))


_KINDS = ("koekoek", "rainville")


def _dispatch(family: PolyFamily, kind: str):
    if kind not in _KINDS:
        raise DomainError(f"kind must be 'koekoek' or 'rainville', got {kind!r}")
    if family.kind == "gegenbauer":
        return family.mu, (koekoek_lhs, koekoek_coeff) if kind == "koekoek" \
            else (rainville_lhs, rainville_coeff)
    table = {
        ("chebyshev_u", "koekoek"): (chebu_brafman_lhs, chebu_brafman_coeff),
        ("chebyshev_u", "rainville"): (chebu_rainville_lhs, chebu_rainville_coeff),
        ("legendre", "koekoek"): (legendre_brafman_lhs, legendre_brafman_coeff),
        ("legendre", "rainville"): (legendre_rainville_lhs, legendre_rainville_coeff),
    }
    try:
        return None, table[(family.kind, kind)]
    except KeyError:
        raise DomainError(f"no {kind} generating function for {family.kind}") from None


def brafman_lhs(family: PolyFamily, lambda_or_alpha: float, rho: float, x: float,
                kind: str = "koekoek") -> float:
    """Closed-form left-hand side of the Koekoek (``kind="koekoek"``) or
    Rainville generating function for a Gegenbauer, U or Legendre family."""
    mu, (lhs, _) = _dispatch(family, kind)
    if mu is None:
        return lhs(lambda_or_alpha, rho, x)
    return lhs(lambda_or_alpha, mu, rho, x)


def brafman_coeff(family: PolyFamily, n: int, lambda_or_alpha: float, rho: float,
                  kind: str = "koekoek") -> float:
    """Series coefficient of p_n(x) matching :func:`brafman_lhs`."""
    if n < 0 or int(n) != n:
        raise DomainError(f"n must be a nonnegative integer, got {n}")
    if not 0.0 < rho < 1.0:
        raise DomainError(f"rho must lie in (0, 1), got {rho}")
    mu, (_, coeff) = _dispatch(family, kind)
    if mu is None:
        return coeff(n, lambda_or_alpha, rho)
    return coeff(n, lambda_or_alpha, mu, rho)
