"""Gauss–Jacobi quadrature and expansion coefficients recovered by integration."""
from __future__ import annotations

import math
import warnings
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Mapping

from .errors import ConvergenceError, DomainError
from .numcore import log_gamma
from .orthopoly import PolyFamily, check_jacobi

__all__ = [
    "QuadratureRule",
    "QuadratureResolutionWarning",
    "gauss_jacobi_rule",
    "integrate",
    "orthogonality_check",
    "coefficient_via_integral",
    "integral_with_check",
]

_QL_MAX_ITER = 60


class QuadratureResolutionWarning(UserWarning):
    """Doubling the rule order moved the result by more than the tolerance."""


@dataclass(frozen=True)
class QuadratureRule:
    nodes: tuple[float, ...]
    weights: tuple[float, ...]
    alpha: float
    beta: float
    order: int


def _jacobi_matrix(n: int, alpha: float, beta: float) -> tuple[list[float], list[float]]:
    """Diagonal and off-diagonal of the symmetric Jacobi matrix (orthonormal recurrence)."""
    ab = alpha + beta
    diag = []
    for k in range(n):
        if k == 0:
            diag.append((beta - alpha) / (ab + 2.0))
        else:
            c = 2 * k + ab
            diag.append((beta * beta - alpha * alpha) / (c * (c + 2.0)))
    off = []
    for k in range(1, n):
        if k == 1:
            # closed form avoids 0/0 when alpha + beta = -1
            b2 = 4.0 * (1 + alpha) * (1 + beta) / ((2 + ab) ** 2 * (3 + ab))
        else:
            c = 2 * k + ab
            b2 = 4.0 * k * (k + alpha) * (k + beta) * (k + ab) / (c * c * (c + 1) * (c - 1))
        off.append(math.sqrt(b2))
    return diag, off


def _tql(d: list[float], e: list[float]) -> tuple[list[float], list[float]]:
    """Implicit-shift QL on a symmetric tridiagonal matrix.

    Returns eigenvalues and the first component of each normalized
    eigenvector (only those are needed for Gauss weights).
    """
    n = len(d)
    d = list(d)
    e = list(e) + [0.0]
    z = [0.0] * n
    z[0] = 1.0
    for ell in range(n):
        it = 0
        while True:
            m = ell
            while m < n - 1:
                dd = abs(d[m]) + abs(d[m + 1])
                if abs(e[m]) <= 1e-17 * dd:
                    break
                m += 1
            if m == ell:
                break
            it += 1
            if it > _QL_MAX_ITER:
                raise ConvergenceError("tridiagonal QL iteration did not converge")
            g = (d[ell + 1] - d[ell]) / (2.0 * e[ell])
            r = math.hypot(g, 1.0)
            g = d[m] - d[ell] + e[ell] / (g + math.copysign(r, g))
            s = c = 1.0
            p = 0.0
            i = m - 1
            underflow = False
            while i >= ell:
                f = s * e[i]
                b = c * e[i]
                r = math.hypot(f, g)
                e[i + 1] = r
                if r == 0.0:
                    d[i + 1] -= p
                    e[m] = 0.0
                    underflow = True
                    break
                s = f / r
                c = g / r
                g = d[i + 1] - p
                r = (d[i] - g) * s + 2.0 * c * b
                p = s * r
                d[i + 1] = g + p
                g = c * r - b
                f = z[i + 1]
                z[i + 1] = s * z[i] + c * f
                z[i] = c * z[i] - s * f
                i -= 1
            if underflow:
                continue
            d[ell] -= p
            e[ell] = g
            e[m] = 0.0
    return d, z


@lru_cache(maxsize=128)
def gauss_jacobi_rule(n: int, alpha: float, beta: float) -> QuadratureRule:
    """N-point Gauss rule for the weight (1-x)^alpha (1+x)^beta on [-1, 1].

    alpha + beta + 1 = 0 is accepted (the Chebyshev-T weight needs it).
    """
    if n < 1 or int(n) != n:
        raise DomainError(f"rule order must be a positive integer, got {n}")
    check_jacobi(alpha, beta, strict=False)
    diag, off = _jacobi_matrix(n, alpha, beta)
    vals, first = _tql(diag, off)
    mu0 = 2.0 ** (alpha + beta + 1) * float(
        log_gamma(alpha + 1) * log_gamma(beta + 1) / log_gamma(alpha + beta + 2))
    pairs = sorted(zip(vals, first))
    nodes = tuple(v for v, _ in pairs)
    weights = tuple(mu0 * q * q for _, q in pairs)
    return QuadratureRule(nodes, weights, alpha, beta, n)


def integrate(rule: QuadratureRule, f: Callable[[float], float]) -> float:
    return math.fsum(w * f(x) for x, w in zip(rule.nodes, rule.weights))


def orthogonality_check(family: PolyFamily, n: int, m: int, order: int) -> float:
    """Quadrature value of the integral of p_n p_m against the family weight."""
    if 2 * order - 1 < n + m:
        raise DomainError(f"rule order {order} too small for degrees {n}, {m}")
    a, b = family.weight_exponents()
    rule = gauss_jacobi_rule(order, a, b)
    return integrate(rule, lambda x: family(n, x) * family(m, x))


def coefficient_via_integral(spec, n: int, point: Mapping[str, float],
                             order: int = 64) -> float:
    """(1/c_n) times the integral of lhs(x) p_n(x) w(x), by an order-N rule.

    ``point`` holds every parameter of ``spec`` except the abscissa x.
    """
    fam = spec.family({**point, "x": 0.0})
    a, b = fam.weight_exponents()
    rule = gauss_jacobi_rule(order, a, b)

    def f(x: float) -> float:
        return spec.lhs({**point, "x": x}) * fam(n, x)

    return integrate(rule, f) / fam.norm_squared(n)


def integral_with_check(spec, n: int, point: Mapping[str, float], order: int = 64,
                        tol: float = 1e-7) -> tuple[float, float, bool]:
    """Coefficient at N and 2N points; warns when they differ by more than tol.

    Returns (value at N, value at 2N, resolved flag).
    """
    v1 = coefficient_via_integral(spec, n, point, order)
    v2 = coefficient_via_integral(spec, n, point, 2 * order)
    resolved = abs(v1 - v2) <= tol * max(1.0, abs(v2))
    if not resolved:
        warnings.warn(
            f"{spec.id}: n={n} quadrature moved by {abs(v1 - v2):.3g} on doubling to {2 * order}",
            QuadratureResolutionWarning, stacklevel=2)
    return v1, v2, resolved
