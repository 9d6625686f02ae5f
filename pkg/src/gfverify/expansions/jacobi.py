"""Jacobi-polynomial expansions: coefficients and closed-form left-hand sides.

Notation: s = alpha + beta + 1.  The plus branch expands

    (1+x)^(-beta/2) R^-(alpha+m+1) P_{alpha+m}^{-beta}(zeta_+)

and the minus branch (its companion under x -> -x)

    (1-x)^(-alpha/2) R^-(beta+m+1) Ferrers P_{beta+m}^{-alpha}(zeta_-),

both over P_n^(alpha,beta)(x), for every integer m >= 0.
"""
from __future__ import annotations

import math

from ..errors import DomainError
from ..hyp2f1 import gauss_2f1
from ..legfun import assoc_legendre_p, ferrers_p, log_legendre_neg_degree
from ..numcore import SignedLogValue, log_gamma, log_pochhammer
from ..orthopoly import _log_shifted_gamma, check_jacobi
from .geometry import SzegoPoint, geometry

__all__ = [
    "coeff_a",
    "coeff_b",
    "coeff_c",
    "coeff_f",
    "log_coeff_a",
    "log_coeff_b",
    "log_coeff_c",
    "lhs_theorem",
    "lhs_corollary",
    "lhs_szego",
    "theorem_normalization",
    "corollary_normalization",
    "jacobi_gf_plus",
    "jacobi_gf_minus",
    "jacobi_gf_ext_plus",
    "jacobi_gf_ext_minus",
    "jacobi_gf_coeff",
]

_LOG2 = math.log(2.0)


def _check_m(m: int) -> None:
    if m < 0 or int(m) != m:
        raise DomainError(f"m must be a nonnegative integer, got {m}")


def _check_rho(rho: float) -> None:
    if not 0.0 < rho < 1.0:
        raise DomainError(f"rho must lie in (0, 1), got {rho}")


def _common_head(n: int, m: int, s: float) -> SignedLogValue:
    # (2n+s) Gamma(s+n) (s+m)_{2n}
    return _log_shifted_gamma(n, s) * log_pochhammer(s + m, 2 * n)


def _log_coeff(n: int, m: int, alpha: float, beta: float, rho: float,
               branch: str) -> SignedLogValue:
    """Plus/minus coefficient without parameter validation.

    Kept separate so the alpha = beta = -1/2 continuation (Chebyshev-T)
    can reuse the same arithmetic.
    """
    s = alpha + beta + 1
    head = _common_head(n, m, s)
    order = -s - 2 * n
    if branch == "plus":
        head = head / (log_gamma(beta + n + 1)
                       * SignedLogValue(0.5 * beta * _LOG2, 1))
        tail = SignedLogValue(-0.5 * (alpha + 1) * math.log(rho)
                              - m * math.log1p(-rho), 1)
        leg = log_legendre_neg_degree(m, order, (1 + rho) / (1 - rho), ratio=1 / rho)
    elif branch == "minus":
        head = head / (log_gamma(alpha + n + 1)
                       * SignedLogValue(0.5 * alpha * _LOG2, 1))
        tail = SignedLogValue(-0.5 * (beta + 1) * math.log(rho)
                              - m * math.log1p(rho), 1)
        leg = log_legendre_neg_degree(m, order, (1 - rho) / (1 + rho), ratio=1 / rho)
    else:
        raise ValueError(f"branch must be 'plus' or 'minus', got {branch!r}")
    return head * tail * leg


def log_coeff_a(n: int, m: int, alpha: float, beta: float, rho: float) -> SignedLogValue:
    check_jacobi(alpha, beta)
    _check_m(m)
    _check_m(n)
    _check_rho(rho)
    return _log_coeff(n, m, alpha, beta, rho, "plus")


def log_coeff_b(n: int, m: int, alpha: float, beta: float, rho: float) -> SignedLogValue:
    check_jacobi(alpha, beta)
    _check_m(m)
    _check_m(n)
    _check_rho(rho)
    return _log_coeff(n, m, alpha, beta, rho, "minus")


def coeff_a(n: int, m: int, alpha: float, beta: float, rho: float) -> float:
    """Coefficient of P_n^(alpha,beta)(x) in the plus-branch expansion."""
    return float(log_coeff_a(n, m, alpha, beta, rho))


def coeff_b(n: int, m: int, alpha: float, beta: float, rho: float) -> float:
    """Coefficient of P_n^(alpha,beta)(x) in the minus-branch (Ferrers) expansion."""
    return float(log_coeff_b(n, m, alpha, beta, rho))


def log_coeff_c(n: int, m: int, alpha: float, beta: float, z: float) -> SignedLogValue:
    check_jacobi(alpha, beta)
    _check_m(m)
    _check_m(n)
    sp = SzegoPoint(z)
    s = alpha + beta + 1
    head = _common_head(n, m, s)
    head = head / (log_gamma(beta + n + 1)
                   * SignedLogValue(0.5 * (beta - alpha - m - 1) * _LOG2, 1))
    rho_eq = sp.rho_equiv
    # (z - sqrt(z^2-1))^(m/2) / (1 - z + sqrt(z^2-1))^m
    tail = SignedLogValue(0.5 * m * math.log(rho_eq) - m * math.log1p(-rho_eq), 1)
    # sqrt((z+1)/(z-1)) = (1+rho)/(1-rho), whose (w+1)/(w-1) is 1/rho
    w = (1.0 + rho_eq) / (1.0 - rho_eq)
    leg = log_legendre_neg_degree(m, -s - 2 * n, w, ratio=1 / rho_eq)
    return head * tail * leg


def coeff_c(n: int, m: int, alpha: float, beta: float, z: float) -> float:
    """Coefficient for the expansion obtained by the map z = (1 + rho^2)/(2 rho).

    Valid for real z > 1 with x inside the ellipse with foci +-1 through z.
    """
    return float(log_coeff_c(n, m, alpha, beta, z))


def coeff_f(n: int, m: int, alpha: float, beta: float, rho: float) -> float:
    """Coefficient of the pure-2F1 expansion

        2F1((s+m)/2, (s+m+1)/2; beta+1; 2 rho (1+x)/(1+rho)^2)
            = sum_n f_n P_n^(alpha,beta)(x).

    The Pochhammer in the denominator is (s)_{2n+1}.  Valid for real
    rho in (-1, 1), rho != 0, as long as 4 rho/(1+rho)^2 stays admissible.
    """
    check_jacobi(alpha, beta)
    _check_m(m)
    _check_m(n)
    if not (-1.0 < rho < 1.0) or rho == 0.0:
        raise DomainError(f"rho must lie in (-1, 1) minus 0, got {rho}")
    s = alpha + beta + 1
    v = (SignedLogValue.from_float(2 * n + s) * log_pochhammer(s, n)
         * log_pochhammer(s + m, 2 * n) * SignedLogValue.from_float(rho) ** n)
    v = v / (log_pochhammer(beta + 1, n) * log_pochhammer(s, 2 * n + 1)
             * SignedLogValue(2 * n * math.log1p(rho), 1))
    g = gauss_2f1((s + m + 2 * n) / 2, (s + m + 2 * n + 1) / 2, s + 2 * n + 1,
                  4 * rho / (1 + rho) ** 2)
    return float(v) * g


def theorem_normalization(m: int, alpha: float, beta: float, rho: float) -> float:
    """(rho/2)^(beta/2) / (Gamma(beta+1) (1+rho)^(s+m)).

    The plus-branch left-hand side equals this times its 2F1 form, so
    coeff_a = theorem_normalization * coeff_f.
    """
    s = alpha + beta + 1
    v = SignedLogValue(0.5 * beta * math.log(rho / 2) - (s + m) * math.log1p(rho), 1)
    return float(v / log_gamma(beta + 1))


def corollary_normalization(m: int, alpha: float, beta: float, rho: float) -> float:
    """(rho/2)^(alpha/2) / (Gamma(alpha+1) (1-rho)^(s+m))."""
    s = alpha + beta + 1
    v = SignedLogValue(0.5 * alpha * math.log(rho / 2) - (s + m) * math.log1p(-rho), 1)
    return float(v / log_gamma(alpha + 1))


def _plus_gauss(m, alpha, beta, rho, x):
    s = alpha + beta + 1
    arg = 2 * rho * (1 + x) / (1 + rho) ** 2
    return theorem_normalization(m, alpha, beta, rho) * gauss_2f1(
        (s + m) / 2, (s + m + 1) / 2, beta + 1, arg)


def _minus_gauss(m, alpha, beta, rho, x):
    s = alpha + beta + 1
    arg = -2 * rho * (1 - x) / (1 - rho) ** 2
    return corollary_normalization(m, alpha, beta, rho) * gauss_2f1(
        (s + m) / 2, (s + m + 1) / 2, alpha + 1, arg)


def lhs_theorem(m: int, alpha: float, beta: float, rho: float, x: float,
                path: str = "legendre") -> float:
    """(1+x)^(-beta/2) R^-(alpha+m+1) P_{alpha+m}^{-beta}(zeta_+).

    ``path="gauss"`` evaluates the equivalent 2F1 form instead.
    """
    check_jacobi(alpha, beta)
    _check_m(m)
    g = geometry(rho, x)
    if path == "gauss":
        return _plus_gauss(m, alpha, beta, rho, x)
    if path != "legendre":
        raise ValueError(f"unknown path {path!r}")
    if x == -1.0:
        if beta > 0:
            raise DomainError("plus-branch left-hand side is singular at x = -1 for beta > 0")
        return _plus_gauss(m, alpha, beta, rho, x)
    return ((1 + x) ** (-beta / 2) * g.big_r ** (-(alpha + m + 1))
            * assoc_legendre_p(alpha + m, -beta, g.zeta_plus))


def lhs_corollary(m: int, alpha: float, beta: float, rho: float, x: float,
                  path: str = "legendre") -> float:
    """(1-x)^(-alpha/2) R^-(beta+m+1) Ferrers P_{beta+m}^{-alpha}(zeta_-)."""
    check_jacobi(alpha, beta)
    _check_m(m)
    g = geometry(rho, x)
    if path == "gauss":
        return _minus_gauss(m, alpha, beta, rho, x)
    if path != "legendre":
        raise ValueError(f"unknown path {path!r}")
    if x == 1.0:
        if alpha > 0:
            raise DomainError("minus-branch left-hand side is singular at x = 1 for alpha > 0")
        return _minus_gauss(m, alpha, beta, rho, x)
    return ((1 - x) ** (-alpha / 2) * g.big_r ** (-(beta + m + 1))
            * ferrers_p(beta + m, -alpha, g.zeta_minus))


def lhs_szego(m: int, alpha: float, beta: float, z: float, x: float) -> float:
    """(1+x)^(-beta/2) (z-x)^(-(alpha+m+1)/2) P_{alpha+m}^{-beta}(w), with

    w = (1 + z - sqrt(z^2-1)) / sqrt(2 (z - sqrt(z^2-1)) (z - x)).
    """
    check_jacobi(alpha, beta)
    _check_m(m)
    sp = SzegoPoint(z)
    if not -1.0 < x <= 1.0:
        raise DomainError(f"x must lie in (-1, 1], got {x}")
    rho_eq = sp.rho_equiv
    w = (1.0 + rho_eq) / math.sqrt(2.0 * rho_eq * (z - x))
    return ((1 + x) ** (-beta / 2) * (z - x) ** (-(alpha + m + 1) / 2)
            * assoc_legendre_p(alpha + m, -beta, w))


# The two classical Jacobi generating functions and their extensions.

def jacobi_gf_plus(alpha: float, beta: float, rho: float, x: float,
                   form: str = "gauss") -> float:
    """(1+rho)^-s 2F1(s/2, (s+1)/2; beta+1; 2 rho (1+x)/(1+rho)^2).

    ``form="legendre"`` evaluates the associated-Legendre representation.
    """
    check_jacobi(alpha, beta)
    g = geometry(rho, x)
    s = alpha + beta + 1
    if form == "gauss":
        return (1 + rho) ** (-s) * gauss_2f1(s / 2, (s + 1) / 2, beta + 1,
                                            2 * rho * (1 + x) / (1 + rho) ** 2)
    return ((2 / (rho * (1 + x))) ** (beta / 2) * math.gamma(beta + 1)
            / g.big_r ** (alpha + 1) * assoc_legendre_p(alpha, -beta, g.zeta_plus))


def jacobi_gf_minus(alpha: float, beta: float, rho: float, x: float,
                    form: str = "gauss") -> float:
    """(1-rho)^-s 2F1(s/2, (s+1)/2; alpha+1; -2 rho (1-x)/(1-rho)^2)."""
    check_jacobi(alpha, beta)
    g = geometry(rho, x)
    s = alpha + beta + 1
    if form == "gauss":
        return (1 - rho) ** (-s) * gauss_2f1(s / 2, (s + 1) / 2, alpha + 1,
                                            -2 * rho * (1 - x) / (1 - rho) ** 2)
    return ((2 / (rho * (1 - x))) ** (alpha / 2) * math.gamma(alpha + 1)
            / g.big_r ** (beta + 1) * ferrers_p(beta, -alpha, g.zeta_minus))


def jacobi_gf_ext_plus(alpha: float, beta: float, rho: float, x: float,
                       form: str = "gauss") -> float:
    """s (1-rho) (1+rho)^-(s+1) 2F1((s+1)/2, (s+2)/2; beta+1; 2 rho (1+x)/(1+rho)^2)."""
    check_jacobi(alpha, beta)
    g = geometry(rho, x)
    s = alpha + beta + 1
    if form == "gauss":
        return (s * (1 - rho) * (1 + rho) ** (-(s + 1))
                * gauss_2f1((s + 1) / 2, (s + 2) / 2, beta + 1,
                            2 * rho * (1 + x) / (1 + rho) ** 2))
    return ((2 / (rho * (1 + x))) ** (beta / 2) * s * (1 - rho) * math.gamma(beta + 1)
            / g.big_r ** (alpha + 2) * assoc_legendre_p(alpha + 1, -beta, g.zeta_plus))


def jacobi_gf_ext_minus(alpha: float, beta: float, rho: float, x: float,
                        form: str = "gauss") -> float:
    """s (1+rho) (1-rho)^-(s+1) 2F1((s+1)/2, (s+2)/2; alpha+1; -2 rho (1-x)/(1-rho)^2)."""
    check_jacobi(alpha, beta)
    g = geometry(rho, x)
    s = alpha + beta + 1
    if form == "gauss":
        return (s * (1 + rho) * (1 - rho) ** (-(s + 1))
                * gauss_2f1((s + 1) / 2, (s + 2) / 2, alpha + 1,
                            -2 * rho * (1 - x) / (1 - rho) ** 2))
    return ((2 / (rho * (1 - x))) ** (alpha / 2) * s * (1 + rho) * math.gamma(alpha + 1)
            / g.big_r ** (beta + 2) * ferrers_p(beta + 1, -alpha, g.zeta_minus))


def jacobi_gf_coeff(n: int, alpha: float, beta: float, rho: float,
                    branch: str, extended: bool = False) -> float:
    """(s)_n / (beta+1)_n rho^n (plus) or (s)_n / (alpha+1)_n rho^n (minus);
    ``extended`` multiplies by (2n + s)."""
    s = alpha + beta + 1
    lower = beta + 1 if branch == "plus" else alpha + 1
    v = log_pochhammer(s, n) / log_pochhammer(lower, n)
    v = v * SignedLogValue(n * math.log(rho), 1)
    if extended:
        v = v * SignedLogValue.from_float(2 * n + s)
    return float(v)
