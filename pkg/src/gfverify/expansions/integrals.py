"""Closed-form definite integrals that follow from the expansions by orthogonality.

Each display integrates (1-x)^a (1+x)^b g(x) over [-1, 1], where the pair
(a, b) is chosen so that g is smooth and the integral can be done by an
(a, b) Gauss–Jacobi rule.  ``rhs`` is the closed form.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Mapping

from ..legfun import log_legendre_neg_degree
from ..numcore import SignedLogValue, log_gamma, log_pochhammer
from ..orthopoly import PolyFamily, gegenbauer_c, jacobi_p
from ..quadrature import gauss_jacobi_rule, integrate
from . import brafman, jacobi, specializations

__all__ = ["DisplayedIntegral", "DISPLAYED_INTEGRALS", "display_quadrature", "display_rhs"]

Point = Mapping[str, float]


@dataclass(frozen=True)
class DisplayedIntegral:
    name: str
    identity_id: str
    params: tuple[str, ...]
    exponents: Callable[[Point], tuple[float, float]]
    smooth_factor: Callable[[int, Point, float], float]
    rhs: Callable[[int, Point], float]


def _jp_rhs(n: int, p: Point) -> float:
    a, b, m, rho = p["alpha"], p["beta"], p["m"], p["rho"]
    s = a + b + 1
    v = (SignedLogValue((a + b / 2 + 1) * math.log(2.0), 1) * log_gamma(a + n + 1)
         * log_pochhammer(s + m, 2 * n))
    v = v / (log_gamma(n + 1) * SignedLogValue(0.5 * (a + 1) * math.log(rho)
                                               + m * math.log1p(-rho), 1))
    return float(v * log_legendre_neg_degree(m, -s - 2 * n, (1 + rho) / (1 - rho),
                                             ratio=1 / rho))


def _jm_rhs(n: int, p: Point) -> float:
    a, b, m, rho = p["alpha"], p["beta"], p["m"], p["rho"]
    s = a + b + 1
    v = (SignedLogValue((a / 2 + b + 1) * math.log(2.0), 1) * log_gamma(b + n + 1)
         * log_pochhammer(s + m, 2 * n))
    v = v / (log_gamma(n + 1) * SignedLogValue(0.5 * (b + 1) * math.log(rho)
                                               + m * math.log1p(rho), 1))
    return float(v * log_legendre_neg_degree(m, -s - 2 * n, (1 - rho) / (1 + rho),
                                             ratio=1 / rho))


def _gp_rhs(n: int, p: Point) -> float:
    mu, m, rho = p["mu"], p["m"], p["rho"]
    v = (SignedLogValue((2 - 2 * mu) * math.log(2.0) + math.log(math.pi), 1)
         * log_gamma(2 * mu + n) * log_gamma(2 * mu + 2 * n + m))
    v = v / (log_gamma(m + 1) * log_gamma(n + 1) * log_gamma(mu) * log_gamma(mu)
             * SignedLogValue(mu * math.log(rho) + m * math.log1p(-rho), 1))
    return float(v * log_legendre_neg_degree(m, -2 * n - 2 * mu, (1 + rho) / (1 - rho),
                                             ratio=1 / rho))


def _koekoek_rhs(n: int, p: Point) -> float:
    lam, mu, rho = p["lam"], p["mu"], p["rho"]
    v = log_pochhammer(lam, n) * log_pochhammer(2 * mu - lam, n)
    v = v * SignedLogValue((n + mu - 0.5) * math.log(rho) + (mu - 0.5) * math.log(2.0), 1)
    v = v / (SignedLogValue.from_float(n + mu) * log_gamma(2 * mu)
             * log_pochhammer(mu + 0.5, n) * log_gamma(n + 1))
    return float(v)


def _rainville_rhs(n: int, p: Point) -> float:
    lam, mu, rho = p["lam"], p["mu"], p["rho"]
    v = log_pochhammer(lam, n) * SignedLogValue(
        0.5 * math.log(math.pi) + (n + mu - 0.5) * math.log(rho)
        + (0.5 - mu) * math.log(2.0), 1)
    v = v / (SignedLogValue.from_float(n + mu) * log_gamma(mu) * log_gamma(n + 1))
    return float(v)


def _geg_weight(p: Point) -> tuple[float, float]:
    return p["mu"] - 0.5, p["mu"] - 0.5


DISPLAYED_INTEGRALS: dict[str, DisplayedIntegral] = {
    d.name: d for d in (
        DisplayedIntegral(
            "jacobi.plus", "exp.jacobi.thm21", ("m", "alpha", "beta", "rho"),
            lambda p: (p["alpha"], p["beta"]),
            lambda n, p, x: (jacobi.lhs_theorem(p["m"], p["alpha"], p["beta"], p["rho"], x)
                             * jacobi_p(n, p["alpha"], p["beta"], x)),
            _jp_rhs),
        DisplayedIntegral(
            "jacobi.minus", "exp.jacobi.cor22", ("m", "alpha", "beta", "rho"),
            lambda p: (p["alpha"], p["beta"]),
            lambda n, p, x: (jacobi.lhs_corollary(p["m"], p["alpha"], p["beta"], p["rho"], x)
                             * jacobi_p(n, p["alpha"], p["beta"], x)),
            _jm_rhs),
        DisplayedIntegral(
            "gegenbauer.plus", "exp.gegenbauer.plus", ("m", "mu", "rho"),
            _geg_weight,
            lambda n, p, x: (specializations.specialized_lhs(
                PolyFamily.gegenbauer(p["mu"]), "plus", p["m"], p["rho"], x)
                * gegenbauer_c(n, p["mu"], x)),
            _gp_rhs),
        DisplayedIntegral(
            "koekoek", "gf.gegenbauer.koekoek", ("lam", "mu", "rho"),
            _geg_weight,
            lambda n, p, x: (brafman.koekoek_lhs(p["lam"], p["mu"], p["rho"], x)
                             * gegenbauer_c(n, p["mu"], x)),
            _koekoek_rhs),
        # Orthogonality puts (1-x^2)^(mu/2-1/4) in front of the Ferrers
        # factor; the weight below reproduces that.
        DisplayedIntegral(
            "rainville", "gf.gegenbauer.rainville", ("lam", "mu", "rho"),
            _geg_weight,
            lambda n, p, x: (brafman.rainville_lhs(p["lam"], p["mu"], p["rho"], x)
                             * gegenbauer_c(n, p["mu"], x)),
            _rainville_rhs),
        # Same right-hand side with the exponent sign flipped to 1/4 - mu/2:
        # the weight cancels and the integrand is lhs * C_n alone.
        DisplayedIntegral(
            "rainville.flipped_exponent", "gf.gegenbauer.rainville", ("lam", "mu", "rho"),
            lambda p: (0.0, 0.0),
            lambda n, p, x: (brafman.rainville_lhs(p["lam"], p["mu"], p["rho"], x)
                             * gegenbauer_c(n, p["mu"], x)),
            _rainville_rhs),
    )
}


def display_quadrature(name: str, n: int, point: Point, order: int = 64) -> float:
    d = DISPLAYED_INTEGRALS[name]
    a, b = d.exponents(point)
    rule = gauss_jacobi_rule(order, a, b)
    return integrate(rule, lambda x: d.smooth_factor(n, point, x))


def display_rhs(name: str, n: int, point: Point) -> float:
    return DISPLAYED_INTEGRALS[name].rhs(n, point)
