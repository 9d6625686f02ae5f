"""Gauss hypergeometric function 2F1 on the real argument ranges used here."""
from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import ConvergenceError, DomainError, PoleError
from .numcore import log_pochhammer, rgamma

__all__ = ["HypParams", "gauss_2f1", "gauss_2f1_regularized", "pfaff_admissible", "Z_MAX"]

# Largest admissible argument for a non-terminating series.
Z_MAX = 0.95
# Above this the direct series gets the extended term cap.
_Z_DIRECT = 0.75
_TERM_CAP = 1000
_TERM_CAP_EXTENDED = 2000
_STOP_RTOL = 1e-17
_STOP_RUN = 3


def _nonpos_int(v: float) -> bool:
    return v <= 0 and v == math.floor(v)


@dataclass(frozen=True)
class HypParams:
    """Parameters (a, b; c) of a 2F1 series."""

    a: float
    b: float
    c: float

    @property
    def terminating(self) -> bool:
        return _nonpos_int(self.a) or _nonpos_int(self.b)

    @property
    def degree(self) -> int | None:
        """Polynomial degree of a terminating series, else None."""
        cands = [int(-v) for v in (self.a, self.b) if _nonpos_int(v)]
        return min(cands) if cands else None

    def check(self) -> None:
        if _nonpos_int(self.c):
            deg = self.degree
            if deg is None or deg > -self.c:
                raise PoleError(
                    f"2F1 has a pole: c={self.c} is a nonpositive integer")


def _finite_sum(a: float, b: float, c: float, z: float, deg: int) -> float:
    # Horner form of sum_{k<=deg} (a)_k (b)_k / ((c)_k k!) z^k
    s = 1.0
    for k in range(deg, 0, -1):
        s = 1.0 + s * (a + k - 1) * (b + k - 1) / ((c + k - 1) * k) * z
    return s


def _series(a: float, b: float, c: float, z: float, cap: int) -> float:
    term = 1.0
    total = 1.0
    run = 0
    for k in range(cap):
        term *= (a + k) * (b + k) / ((c + k) * (k + 1)) * z
        total += term
        if abs(term) <= _STOP_RTOL * abs(total):
            run += 1
            if run >= _STOP_RUN:
                return total
        else:
            run = 0
    raise ConvergenceError(
        f"2F1({a}, {b}; {c}; {z}) series did not converge in {cap} terms")


def _nonterminating(a: float, b: float, c: float, z: float) -> float:
    if z == 0.0:
        return 1.0
    if z < 0.0:
        # Pfaff: F(a,b;c;z) = (1-z)^(-a) F(a, c-b; c; z/(z-1))
        w = z / (z - 1.0)
        inner = HypParams(a, c - b, c)
        if inner.terminating:
            val = _finite_sum(a, c - b, c, w, inner.degree)
        else:
            cap = _TERM_CAP if w <= _Z_DIRECT else _TERM_CAP_EXTENDED
            val = _series(a, c - b, c, w, cap)
        return (1.0 - z) ** (-a) * val
    cap = _TERM_CAP if z <= _Z_DIRECT else _TERM_CAP_EXTENDED
    return _series(a, b, c, z, cap)


def gauss_2f1(a: float, b: float, c: float, z: float) -> float:
    """Gauss hypergeometric function 2F1(a, b; c; z) for real arguments.

    Terminating series are summed exactly for any real z.  Otherwise z must
    satisfy z <= 0.95; negative z goes through the Pfaff transformation.
    """
    p = HypParams(a, b, c)
    p.check()
    if p.terminating:
        return _finite_sum(a, b, c, z, p.degree)
    if z >= 1.0:
        raise DomainError(f"2F1 argument z={z} must be < 1")
    if z > Z_MAX:
        raise DomainError(f"2F1 argument z={z} exceeds the supported {Z_MAX}")
    if not pfaff_admissible(a, b, c, z):
        raise DomainError(f"2F1 argument z={z} maps to {z / (z - 1.0)} > {Z_MAX} under Pfaff")
    return _nonterminating(a, b, c, z)


def pfaff_admissible(a: float, b: float, c: float, z: float) -> bool:
    """False when z < 0 and the Pfaff image z/(z-1) is too close to 1 for a
    non-terminating transformed series."""
    if z >= 0.0:
        return True
    return z / (z - 1.0) <= Z_MAX or HypParams(a, c - b, c).terminating


def gauss_2f1_regularized(a: float, b: float, c: float, z: float) -> float:
    """2F1(a, b; c; z) / Gamma(c), finite for every real c."""
    if not _nonpos_int(c):
        return gauss_2f1(a, b, c, z) * rgamma(c)
    # c = -j: the first j+1 terms vanish, leaving a shifted series.
    j = int(-c)
    head = log_pochhammer(a, j + 1) * log_pochhammer(b, j + 1)
    if head.sign == 0:
        return 0.0
    coef = float(head) / math.factorial(j + 1) * z ** (j + 1)
    return coef * gauss_2f1(a + j + 1, b + j + 1, float(j + 2), z)
