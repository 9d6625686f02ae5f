"""Associated Legendre functions on (1, inf) and Ferrers functions on (-1, 1).

Both are built on 2F1(-nu, nu+1; 1-mu; (1-z)/2) with the prefactor
((z+1)/(z-1))^(mu/2) / Gamma(1-mu), resp. ((1+x)/(1-x))^(mu/2) / Gamma(1-mu).
The reciprocal gamma is carried by the regularized 2F1, so integer orders
mu = 1, 2, ... stay finite.
"""
from __future__ import annotations

import math

from .errors import DomainError, EvaluationError
from .hyp2f1 import HypParams, Z_MAX, gauss_2f1_regularized, pfaff_admissible
from .numcore import SignedLogValue, elliptic_k, log_gamma

__all__ = [
    "assoc_legendre_p",
    "ferrers_p",
    "legendre_p_minus_half",
    "ferrers_p_minus_half",
    "log_legendre_neg_degree",
    "chebyshev_elementary_forms",
    "chebyshev_t_via_legendre",
    "chebyshev_u_via_legendre",
]

PATHS = ("auto", "definition", "quadratic")


def _terminates(nu: float) -> bool:
    return HypParams(-nu, nu + 1, 1.0).terminating


def _admissible(p: HypParams, z: float) -> bool:
    """Whether the 2F1 evaluator accepts this argument (after Pfaff for z<0)."""
    if p.terminating:
        return True
    if z >= 1.0:
        return False
    if z < 0:
        return pfaff_admissible(p.a, p.b, p.c, z)
    return z <= Z_MAX


def _pfaff_arg(z: float) -> float:
    return z / (z - 1.0) if z < 0 else z


def _legendre_definition(nu: float, mu: float, z: float) -> float:
    w = (1.0 - z) / 2.0
    p = HypParams(-nu, nu + 1, 1 - mu)
    if not _admissible(p, w):
        raise EvaluationError(f"P_{nu}^{mu}({z}): 2F1 argument {w} not admissible")
    pre = ((z + 1.0) / (z - 1.0)) ** (mu / 2.0)
    return pre * gauss_2f1_regularized(-nu, nu + 1, 1 - mu, w)


def _legendre_quadratic(nu: float, mu: float, z: float) -> float:
    w = 1.0 - 1.0 / (z * z)
    a, b = (-nu - mu) / 2.0, (-nu - mu + 1) / 2.0
    if not _admissible(HypParams(a, b, 1 - mu), w):
        raise EvaluationError(f"P_{nu}^{mu}({z}): quadratic 2F1 argument {w} not admissible")
    pre = 2.0 ** mu * z ** (nu + mu) / (z * z - 1.0) ** (mu / 2.0)
    return pre * gauss_2f1_regularized(a, b, 1 - mu, w)


def assoc_legendre_p(nu: float, mu: float, z: float, path: str = "auto") -> float:
    """Associated Legendre function of the first kind P_nu^mu(z), z > 1.

    ``path`` selects the hypergeometric representation: ``"definition"``
    uses argument (1-z)/2, ``"quadratic"`` uses 1 - 1/z^2, ``"auto"`` picks
    the one with the smaller effective argument (always the definition for
    real z > 1, unless it is inadmissible).
    """
    if not z > 1.0:
        raise DomainError(f"assoc_legendre_p requires z > 1, got {z}")
    if path not in PATHS:
        raise ValueError(f"unknown path {path!r}")
    if path == "definition":
        return _legendre_definition(nu, mu, z)
    if path == "quadratic":
        return _legendre_quadratic(nu, mu, z)
    if _terminates(nu):
        return _legendre_definition(nu, mu, z)
    # Effective arguments after Pfaff: (z-1)/(z+1) versus 1 - 1/z^2.
    d_arg = _pfaff_arg((1.0 - z) / 2.0)
    q_arg = 1.0 - 1.0 / (z * z)
    order = [_legendre_definition, _legendre_quadratic]
    if q_arg < d_arg:
        order.reverse()
    for fn in order:
        try:
            return fn(nu, mu, z)
        except EvaluationError:
            continue
    raise EvaluationError(f"no admissible path for P_{nu}^{mu}({z})")


def _ferrers_definition(nu: float, mu: float, x: float) -> float:
    w = (1.0 - x) / 2.0
    if not _admissible(HypParams(-nu, nu + 1, 1 - mu), w):
        raise EvaluationError(f"Ferrers P_{nu}^{mu}({x}): 2F1 argument {w} not admissible")
    pre = ((1.0 + x) / (1.0 - x)) ** (mu / 2.0)
    return pre * gauss_2f1_regularized(-nu, nu + 1, 1 - mu, w)


def _ferrers_quadratic(nu: float, mu: float, x: float) -> float:
    if not 0.0 < x < 1.0:
        raise EvaluationError("quadratic Ferrers form needs 0 < x < 1")
    w = 1.0 - 1.0 / (x * x)
    a, b = (-nu - mu) / 2.0, (-nu - mu + 1) / 2.0
    if not _admissible(HypParams(a, b, 1 - mu), w):
        raise EvaluationError(f"Ferrers P_{nu}^{mu}({x}): quadratic argument not admissible")
    pre = 2.0 ** mu * x ** (nu + mu) / (1.0 - x * x) ** (mu / 2.0)
    return pre * gauss_2f1_regularized(a, b, 1 - mu, w)


def ferrers_p(nu: float, mu: float, x: float, path: str = "auto") -> float:
    """Ferrers function of the first kind P_nu^mu(x) on the cut, -1 < x < 1."""
    if not -1.0 < x < 1.0:
        raise DomainError(f"ferrers_p requires -1 < x < 1, got {x}")
    if path not in PATHS:
        raise ValueError(f"unknown path {path!r}")
    if path == "definition":
        return _ferrers_definition(nu, mu, x)
    if path == "quadratic":
        return _ferrers_quadratic(nu, mu, x)
    if _terminates(nu):
        return _ferrers_definition(nu, mu, x)
    order = [_ferrers_definition, _ferrers_quadratic]
    # Pfaff sends 1 - 1/x^2 to 1 - x^2.
    if 0.0 < x and 1.0 - x * x < (1.0 - x) / 2.0:
        order.reverse()
    for fn in order:
        try:
            return fn(nu, mu, x)
        except EvaluationError:
            continue
    raise EvaluationError(f"no admissible path for Ferrers P_{nu}^{mu}({x})")


def log_legendre_neg_degree(m: int, mu: float, z: float,
                            ratio: float | None = None) -> SignedLogValue:
    """P_{-m}^{mu}(z) in signed-log form for integer m >= 0.

    Uses the Legendre function for z > 1 and the Ferrers function for
    |z| < 1.  The 2F1 factor terminates (m terms, one term when m = 0),
    so this is exact up to rounding for any order.  ``ratio`` may supply
    |z+1| / |z-1| exactly when the caller knows it in closed form; it is
    raised to the power mu/2, which can be large.
    """
    if m < 0 or int(m) != m:
        raise DomainError(f"degree -m needs integer m >= 0, got {m}")
    if not (z > 1.0 or -1.0 < z < 1.0):
        raise DomainError(f"argument {z} is on neither branch")
    if ratio is None:
        ratio = abs((z + 1.0) / (z - 1.0))
    w = (1.0 - z) / 2.0
    # The series is 2F1(m, 1-m; 1-mu; w); for m = 0 it is identically 1.
    c = 1.0 - mu
    if c <= 0 and c == math.floor(c):
        # Pole of Gamma(1-mu) cancels against the series; defer to the
        # general regularized path.
        return SignedLogValue.from_float(
            assoc_legendre_p(-m, mu, z) if z > 1 else ferrers_p(-m, mu, z))
    s = 1.0
    term = 1.0
    for k in range(max(m - 1, 0)):
        term *= (m + k) * (1 - m + k) / ((c + k) * (k + 1)) * w
        s += term
    out = SignedLogValue.from_float(s) / log_gamma(c)
    return out * SignedLogValue(0.5 * mu * math.log(ratio), 1)


def legendre_p_minus_half(z: float) -> float:
    """P_{-1/2}(z) = (2/pi) sqrt(2/(z+1)) K(sqrt((z-1)/(z+1))) for z >= 1."""
    if not z >= 1.0:
        raise DomainError(f"legendre_p_minus_half requires z >= 1, got {z}")
    k = math.sqrt((z - 1.0) / (z + 1.0))
    return 2.0 / math.pi * math.sqrt(2.0 / (z + 1.0)) * elliptic_k(k)


def ferrers_p_minus_half(x: float) -> float:
    """Ferrers P_{-1/2}(x) = (2/pi) K(sqrt((1-x)/2)) for -1 < x <= 1."""
    if not -1.0 < x <= 1.0:
        raise DomainError(f"ferrers_p_minus_half requires -1 < x <= 1, got {x}")
    return 2.0 / math.pi * elliptic_k(math.sqrt((1.0 - x) / 2.0))


def chebyshev_elementary_forms(m: int, z: float) -> tuple[float, float]:
    """(T_m(z), U_m(z)) for z > 1 from powers of s = z + sqrt(z^2 - 1)."""
    if not z > 1.0:
        raise DomainError(f"chebyshev_elementary_forms requires z > 1, got {z}")
    if m < 0 or int(m) != m:
        raise DomainError(f"m must be a nonnegative integer, got {m}")
    root = math.sqrt((z - 1.0) * (z + 1.0))
    s = z + root
    t = 0.5 * (s ** m + s ** (-m))
    u = (s ** (m + 1) - s ** (-(m + 1))) / (2.0 * root)
    return t, u


def chebyshev_t_via_legendre(m: int, z: float) -> float:
    """T_m(z) = sqrt(pi/2) (z^2-1)^(1/4) P_{m-1/2}^{1/2}(z), z > 1."""
    return math.sqrt(math.pi / 2.0) * ((z - 1.0) * (z + 1.0)) ** 0.25 \
        * assoc_legendre_p(m - 0.5, 0.5, z)


def chebyshev_u_via_legendre(m: int, z: float) -> float:
    """U_m(z) = sqrt(pi/2) (m+1) (z^2-1)^(-1/4) P_{m+1/2}^{-1/2}(z), z > 1."""
    return math.sqrt(math.pi / 2.0) * (m + 1) / ((z - 1.0) * (z + 1.0)) ** 0.25 \
        * assoc_legendre_p(m + 0.5, -0.5, z)
