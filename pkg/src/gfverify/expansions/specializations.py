"""Gegenbauer, Chebyshev and Legendre expansions obtained from the Jacobi ones.

Each family has a plus branch (Legendre function at (1+rho)/(1-rho)) and a
minus branch (Ferrers function at (1-rho)/(1+rho)).  ``specialized_coeffs``
evaluates the closed coefficient directly; ``jacobi_reduced_coeff`` gets the
same number from coeff_a / coeff_b via the Jacobi-to-family rescaling.
"""
from __future__ import annotations

import math

from ..errors import DomainError
from ..legfun import log_legendre_neg_degree
from ..numcore import SignedLogValue, log_gamma, log_pochhammer, neumann_factor
from ..orthopoly import PolyFamily, check_gegenbauer
from .geometry import geometry
from .jacobi import _log_coeff, log_coeff_a, log_coeff_b

__all__ = [
    "BRANCHES",
    "gegenbauer_gf",
    "specialized_coeffs",
    "specialized_lhs",
    "jacobi_reduced_coeff",
    "family_order",
]

BRANCHES = ("plus", "minus")


def _check_branch(branch: str) -> None:
    if branch not in BRANCHES:
        raise DomainError(f"branch must be 'plus' or 'minus', got {branch!r}")


def _check_nm(n: int, m: int) -> None:
    for v in (n, m):
        if v < 0 or int(v) != v:
            raise DomainError(f"n and m must be nonnegative integers, got {n}, {m}")


def gegenbauer_gf(mu: float, rho: float, x: float) -> float:
    """(1 + rho^2 - 2 rho x)^-mu = sum_n C_n^mu(x) rho^n."""
    check_gegenbauer(mu)
    return geometry(rho, x).big_r ** (-2 * mu)


def family_order(family: PolyFamily) -> float:
    """The Gegenbauer parameter the family corresponds to (0 for Chebyshev-T)."""
    if family.kind == "gegenbauer":
        return family.mu
    if family.kind == "chebyshev_u":
        return 1.0
    if family.kind == "legendre":
        return 0.5
    if family.kind == "chebyshev_t":
        return 0.0
    raise DomainError(f"no Gegenbauer specialization for {family.kind}")


def _leg(branch: str, m: int, order: float, rho: float) -> SignedLogValue:
    z = (1 + rho) / (1 - rho) if branch == "plus" else (1 - rho) / (1 + rho)
    return log_legendre_neg_degree(m, order, z, ratio=1 / rho)


def _one_mp_rho_m(branch: str, m: int, rho: float) -> SignedLogValue:
    # (1 - rho)^-m on the plus branch, (1 + rho)^-m on the minus branch
    lg = math.log1p(-rho) if branch == "plus" else math.log1p(rho)
    return SignedLogValue(-m * lg, 1)


def specialized_coeffs(family: PolyFamily, branch: str, n: int, m: int,
                       rho: float) -> float:
    """Coefficient of p_n(x) in the expansion of R^-(2mu+m) C_m^mu(zeta_pm)
    (and its U, Legendre and T analogues)."""
    _check_branch(branch)
    _check_nm(n, m)
    if not 0.0 < rho < 1.0:
        raise DomainError(f"rho must lie in (0, 1), got {rho}")
    kind = family.kind
    pre = _one_mp_rho_m(branch, m, rho)
    if kind == "gegenbauer":
        mu = family.mu
        v = (SignedLogValue.from_float(2.0) * log_gamma(2 * mu + m)
             / (log_gamma(m + 1) * SignedLogValue(mu * math.log(rho), 1)))
        v = v * SignedLogValue.from_float(n + mu) * log_pochhammer(2 * mu + m, 2 * n)
        leg = _leg(branch, m, -2 * mu - 2 * n, rho)
    elif kind == "chebyshev_u":
        v = SignedLogValue.from_float(2.0 * (m + 1) * (n + 1) / rho)
        v = v * log_pochhammer(m + 2, 2 * n)
        leg = _leg(branch, m, -2 * n - 2, rho)
    elif kind == "legendre":
        v = SignedLogValue(-0.5 * math.log(rho), 1) * SignedLogValue.from_float(2 * n + 1)
        v = v * log_pochhammer(m + 1, 2 * n)
        leg = _leg(branch, m, -2 * n - 1, rho)
    elif kind == "chebyshev_t":
        v = SignedLogValue.from_float(neumann_factor(n)) * log_pochhammer(m, 2 * n)
        leg = _leg(branch, m, -2 * n, rho)
    else:
        raise DomainError(f"no specialized expansion for {kind}")
    return float(v * pre * leg)


def specialized_lhs(family: PolyFamily, branch: str, m: int, rho: float,
                    x: float) -> float:
    """R^-(2mu+m) p_m(zeta_pm) for the family's Gegenbauer-type parameter mu
    (mu = 1 for U, 1/2 for Legendre, and R^-m T_m(zeta_pm) for T)."""
    _check_branch(branch)
    _check_nm(0, m)
    g = geometry(rho, x)
    zeta = g.zeta_plus if branch == "plus" else g.zeta_minus
    mu = family_order(family)
    return g.big_r ** (-(2 * mu + m)) * family(m, zeta)


def jacobi_reduced_coeff(family: PolyFamily, branch: str, n: int, m: int,
                         rho: float) -> float:
    """The specialized coefficient rebuilt from the Jacobi coefficient.

    With alpha = beta = mu - 1/2 the Jacobi left-hand side equals the family
    left-hand side up to the factor

        K_m = sqrt(pi) Gamma(2mu+m) / (2^(mu-1/2) Gamma(mu) m! (2 rho)^(mu/2-1/4)),

    and P_n^(alpha,alpha) = (2mu)_n / (mu+1/2)_n C_n^mu.  Chebyshev-T is the
    mu -> 0 limit, handled with alpha = beta = -1/2 directly.
    """
    _check_branch(branch)
    _check_nm(n, m)
    mu = family_order(family)
    a = mu - 0.5
    if family.kind == "chebyshev_t":
        if not 0.0 < rho < 1.0:
            raise DomainError(f"rho must lie in (0, 1), got {rho}")
        # alpha + beta + 1 = 0 is outside the checked Jacobi domain; the
        # coefficient formula itself is continuous there.
        c = _log_coeff(n, m, a, a, rho, branch)
        k = SignedLogValue(0.5 * math.log(math.pi / 2) + 0.25 * math.log(2 * rho), 1)
        return float(c * k * log_pochhammer(0.5, n) / log_gamma(n + 1))
    c = (log_coeff_a if branch == "plus" else log_coeff_b)(n, m, a, a, rho)
    k = (SignedLogValue(0.5 * math.log(math.pi), 1) * log_gamma(2 * mu + m)
         / (SignedLogValue((mu - 0.5) * math.log(2.0), 1) * log_gamma(mu)
            * log_gamma(m + 1)
            * SignedLogValue((mu / 2 - 0.25) * math.log(2 * rho), 1)))
    return float(c * k * log_pochhammer(mu + 0.5, n) / log_pochhammer(2 * mu, n))
