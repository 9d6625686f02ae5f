"""Classical orthogonal polynomials evaluated by forward three-term recurrence.

Evaluators accept any real abscissa; the recurrences are the polynomial
identities, so values off [-1, 1] are the analytic extension.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterator

from .errors import DomainError
from .numcore import SignedLogValue, log_gamma, log_pochhammer, neumann_factor

__all__ = [
    "JacobiParams",
    "PolyFamily",
    "jacobi_p",
    "gegenbauer_c",
    "chebyshev_t",
    "chebyshev_u",
    "legendre_poly",
    "one_plus_x_power_in_jacobi",
]


@dataclass(frozen=True)
class JacobiParams:
    alpha: float
    beta: float

    def __post_init__(self):
        check_jacobi(self.alpha, self.beta)


def check_jacobi(alpha: float, beta: float, strict: bool = True) -> None:
    """Validate Jacobi parameters.

    ``strict`` additionally rejects alpha + beta + 1 = 0 when both lie in
    (-1, 0); the non-strict form only requires alpha, beta > -1.
    """
    if not (alpha > -1 and beta > -1):
        raise DomainError(f"Jacobi parameters must exceed -1: ({alpha}, {beta})")
    if strict and -1 < alpha < 0 and -1 < beta < 0 and alpha + beta + 1 == 0:
        raise DomainError("alpha + beta + 1 must be nonzero when alpha, beta in (-1, 0)")


def check_gegenbauer(mu: float) -> None:
    if mu == 0:
        raise DomainError("Gegenbauer mu = 0 is the Chebyshev-T limit; use chebyshev_t")
    if not mu > -0.5:
        raise DomainError(f"Gegenbauer parameter must exceed -1/2, got {mu}")


def _check_degree(n: int) -> None:
    if n < 0 or int(n) != n:
        raise DomainError(f"degree must be a nonnegative integer, got {n}")


def _jacobi_seq(alpha: float, beta: float, x: float) -> Iterator[float]:
    ab = alpha + beta
    p0 = 1.0
    yield p0
    p1 = 0.5 * ((ab + 2.0) * x + alpha - beta)
    yield p1
    n = 2
    while True:
        c = 2 * n + ab
        a1 = 2 * n * (n + ab) * (c - 2)
        a2 = (c - 1) * (c * (c - 2) * x + alpha * alpha - beta * beta)
        a3 = 2 * (n + alpha - 1) * (n + beta - 1) * c
        p0, p1 = p1, (a2 * p1 - a3 * p0) / a1
        yield p1
        n += 1


def _gegenbauer_seq(mu: float, x: float) -> Iterator[float]:
    p0 = 1.0
    yield p0
    p1 = 2.0 * mu * x
    yield p1
    n = 2
    while True:
        p0, p1 = p1, (2.0 * x * (n + mu - 1) * p1 - (n + 2 * mu - 2) * p0) / n
        yield p1
        n += 1


def _chebyshev_seq(x: float, first: float) -> Iterator[float]:
    p0 = 1.0
    yield p0
    p1 = first
    yield p1
    while True:
        p0, p1 = p1, 2.0 * x * p1 - p0
        yield p1


def _legendre_seq(x: float) -> Iterator[float]:
    p0 = 1.0
    yield p0
    p1 = x
    yield p1
    n = 2
    while True:
        p0, p1 = p1, ((2 * n - 1) * x * p1 - (n - 1) * p0) / n
        yield p1
        n += 1


def _nth(seq: Iterator[float], n: int) -> float:
    for k, v in enumerate(seq):
        if k == n:
            return v
    raise AssertionError("unreachable")


def jacobi_p(n: int, alpha: float, beta: float, x: float) -> float:
    """Jacobi polynomial P_n^(alpha, beta)(x)."""
    _check_degree(n)
    check_jacobi(alpha, beta, strict=False)
    return _nth(_jacobi_seq(alpha, beta, x), n)


def gegenbauer_c(n: int, mu: float, x: float) -> float:
    """Gegenbauer polynomial C_n^mu(x) for mu in (-1/2, inf) minus {0}."""
    _check_degree(n)
    check_gegenbauer(mu)
    return _nth(_gegenbauer_seq(mu, x), n)


def chebyshev_t(n: int, x: float) -> float:
    _check_degree(n)
    return _nth(_chebyshev_seq(x, x), n)


def chebyshev_u(n: int, x: float) -> float:
    _check_degree(n)
    return _nth(_chebyshev_seq(x, 2.0 * x), n)


def legendre_poly(n: int, x: float) -> float:
    _check_degree(n)
    return _nth(_legendre_seq(x), n)


@dataclass(frozen=True)
class PolyFamily:
    """One of the five classical families, with its parameters.

    ``kind`` is one of ``"jacobi"``, ``"gegenbauer"``, ``"chebyshev_t"``,
    ``"chebyshev_u"``, ``"legendre"``.
    """

    kind: str
    alpha: float | None = None
    beta: float | None = None
    mu: float | None = None

    KINDS = ("jacobi", "gegenbauer", "chebyshev_t", "chebyshev_u", "legendre")

    def __post_init__(self):
        if self.kind not in self.KINDS:
            raise DomainError(f"unknown polynomial family {self.kind!r}")
        if self.kind == "jacobi":
            check_jacobi(self.alpha, self.beta, strict=False)
        elif self.kind == "gegenbauer":
            check_gegenbauer(self.mu)

    @classmethod
    def jacobi(cls, alpha: float, beta: float) -> "PolyFamily":
        return cls("jacobi", alpha=alpha, beta=beta)

    @classmethod
    def gegenbauer(cls, mu: float) -> "PolyFamily":
        return cls("gegenbauer", mu=mu)

    @classmethod
    def chebyshev_t(cls) -> "PolyFamily":
        return cls("chebyshev_t")

    @classmethod
    def chebyshev_u(cls) -> "PolyFamily":
        return cls("chebyshev_u")

    @classmethod
    def legendre(cls) -> "PolyFamily":
        return cls("legendre")

    def sequence(self, x: float) -> Iterator[float]:
        """Yield p_0(x), p_1(x), ... indefinitely."""
        if self.kind == "jacobi":
            return _jacobi_seq(self.alpha, self.beta, x)
        if self.kind == "gegenbauer":
            return _gegenbauer_seq(self.mu, x)
        if self.kind == "chebyshev_t":
            return _chebyshev_seq(x, x)
        if self.kind == "chebyshev_u":
            return _chebyshev_seq(x, 2.0 * x)
        return _legendre_seq(x)

    def __call__(self, n: int, x: float) -> float:
        _check_degree(n)
        return _nth(self.sequence(x), n)

    def weight_exponents(self) -> tuple[float, float]:
        """(alpha, beta) of the weight (1-x)^alpha (1+x)^beta."""
        if self.kind == "jacobi":
            return self.alpha, self.beta
        if self.kind == "gegenbauer":
            return self.mu - 0.5, self.mu - 0.5
        if self.kind == "chebyshev_t":
            return -0.5, -0.5
        if self.kind == "chebyshev_u":
            return 0.5, 0.5
        return 0.0, 0.0

    def norm_squared(self, n: int) -> float:
        """Integral of p_n(x)^2 against the family weight over [-1, 1]."""
        _check_degree(n)
        if self.kind == "jacobi":
            a, b = self.alpha, self.beta
            s = a + b + 1
            # (2n+s) Gamma(n+s) written so that n = 0, s = 0 stays finite
            num = log_gamma(n + a + 1) * log_gamma(n + b + 1)
            den = _log_shifted_gamma(n, s) * log_gamma(n + 1)
            return float(num / den) * 2.0 ** s
        if self.kind == "gegenbauer":
            mu = self.mu
            lg = log_gamma(n + 2 * mu) / (log_gamma(mu) * log_gamma(mu) * log_gamma(n + 1))
            return math.pi * 2.0 ** (1 - 2 * mu) / (n + mu) * float(lg)
        if self.kind == "chebyshev_t":
            return math.pi / neumann_factor(n)
        if self.kind == "chebyshev_u":
            return math.pi / 2
        return 2.0 / (2 * n + 1)

    def label(self) -> str:
        if self.kind == "jacobi":
            return f"jacobi(alpha={self.alpha}, beta={self.beta})"
        if self.kind == "gegenbauer":
            return f"gegenbauer(mu={self.mu})"
        return self.kind


def _log_shifted_gamma(n: int, s: float) -> SignedLogValue:
    """(2n + s) Gamma(n + s), continuous through s = 0 at n = 0."""
    if n == 0:
        return log_gamma(s + 1)
    return SignedLogValue.from_float(2 * n + s) * log_gamma(n + s)


def one_plus_x_power_in_jacobi(n: int, alpha: float, beta: float) -> list[float]:
    """Coefficients c_k with (1+x)^n = sum_k c_k P_k^(alpha,beta)(x)."""
    _check_degree(n)
    check_jacobi(alpha, beta)
    s = alpha + beta + 1
    head = SignedLogValue.from_float(2.0 ** n) * log_pochhammer(beta + 1, n)
    out = []
    for k in range(n + 1):
        v = head * log_pochhammer(-n, k) * log_pochhammer(s, k)
        v = v * SignedLogValue.from_float((-1) ** k * (s + 2 * k))
        v = v / (log_pochhammer(s, n + k + 1) * log_pochhammer(beta + 1, k))
        out.append(float(v))
    return out
