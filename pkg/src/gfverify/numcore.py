"""Scalar building blocks: gamma machinery, Pochhammer symbols, elliptic K."""
from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import ConvergenceError, DomainError, PoleError

__all__ = [
    "SignedLogValue",
    "log_gamma",
    "rgamma",
    "pochhammer",
    "log_pochhammer",
    "neumann_factor",
    "elliptic_k",
]


@dataclass(frozen=True)
class SignedLogValue:
    """A real number stored as ``sign * exp(log_magnitude)``.

    ``sign == 0`` represents exact zero; its ``log_magnitude`` is ``-inf``.
    """

    log_magnitude: float
    sign: int

    def __post_init__(self):
        if self.sign not in (-1, 0, 1):
            raise ValueError(f"sign must be -1, 0 or 1, got {self.sign}")
        if self.sign == 0 and self.log_magnitude != -math.inf:
            object.__setattr__(self, "log_magnitude", -math.inf)

    @classmethod
    def from_float(cls, v: float) -> "SignedLogValue":
        if v == 0:
            return cls(-math.inf, 0)
        return cls(math.log(abs(v)), 1 if v > 0 else -1)

    @classmethod
    def zero(cls) -> "SignedLogValue":
        return cls(-math.inf, 0)

    @classmethod
    def one(cls) -> "SignedLogValue":
        return cls(0.0, 1)

    def __mul__(self, other: "SignedLogValue") -> "SignedLogValue":
        if not isinstance(other, SignedLogValue):
            other = SignedLogValue.from_float(other)
        s = self.sign * other.sign
        if s == 0:
            return SignedLogValue.zero()
        return SignedLogValue(self.log_magnitude + other.log_magnitude, s)

    __rmul__ = __mul__

    def __truediv__(self, other: "SignedLogValue") -> "SignedLogValue":
        if not isinstance(other, SignedLogValue):
            other = SignedLogValue.from_float(other)
        if other.sign == 0:
            raise ZeroDivisionError("division by a zero SignedLogValue")
        if self.sign == 0:
            return SignedLogValue.zero()
        return SignedLogValue(self.log_magnitude - other.log_magnitude,
                              self.sign * other.sign)

    def __pow__(self, p: float) -> "SignedLogValue":
        # Real powers only make sense for positive values.
        if self.sign < 0 and p != int(p):
            raise DomainError("non-integer power of a negative value")
        if self.sign == 0:
            if p <= 0:
                raise ZeroDivisionError("nonpositive power of zero")
            return SignedLogValue.zero()
        s = self.sign if int(p) % 2 else 1
        return SignedLogValue(self.log_magnitude * p, s)

    def __float__(self) -> float:
        if self.sign == 0:
            return 0.0
        return self.sign * math.exp(self.log_magnitude)

    def value(self) -> float:
        return float(self)


def _is_nonpositive_integer(x: float) -> bool:
    return x <= 0 and x == math.floor(x)


def log_gamma(x: float) -> SignedLogValue:
    """ln|Gamma(x)| together with the sign of Gamma(x).

    Raises :class:`PoleError` at x = 0, -1, -2, ...
    """
    if _is_nonpositive_integer(x):
        raise PoleError(f"Gamma has a pole at x={x}")
    lg = math.lgamma(x)
    if x > 0:
        return SignedLogValue(lg, 1)
    # Gamma alternates sign between consecutive negative integers.
    sign = 1 if math.floor(x) % 2 == 0 else -1
    return SignedLogValue(lg, sign)


def rgamma(x: float) -> float:
    """Reciprocal gamma 1/Gamma(x); zero at the nonpositive integers."""
    if _is_nonpositive_integer(x):
        return 0.0
    return float(SignedLogValue.one() / log_gamma(x))


def pochhammer(a: float, n: int) -> float:
    """Rising factorial (a)_n = a (a+1) ... (a+n-1), with (a)_0 = 1."""
    if n < 0:
        raise DomainError("pochhammer requires n >= 0")
    p = 1.0
    for i in range(n):
        p *= a + i
    return p


def log_pochhammer(a: float, n: int) -> SignedLogValue:
    """(a)_n in signed-log form; safe for products that overflow a double."""
    if n < 0:
        raise DomainError("pochhammer requires n >= 0")
    if n == 0:
        return SignedLogValue.one()
    if _is_nonpositive_integer(a) and n > -a:
        return SignedLogValue.zero()
    if a > 0 and n > 64:
        return SignedLogValue(math.lgamma(a + n) - math.lgamma(a), 1)
    log_mag = 0.0
    sign = 1
    for i in range(n):
        f = a + i
        if f < 0:
            sign = -sign
        log_mag += math.log(abs(f))
    return SignedLogValue(log_mag, sign)


def neumann_factor(n: int) -> int:
    """Neumann factor: 1 for n = 0, otherwise 2."""
    if n < 0:
        raise DomainError("neumann_factor requires n >= 0")
    return 1 if n == 0 else 2


_AGM_MAX_ITER = 40


def elliptic_k(k: float) -> float:
    """Complete elliptic integral of the first kind K(k), modulus k in [0, 1).

    Uses the arithmetic-geometric mean: K(k) = pi / (2 AGM(1, sqrt(1 - k^2))).
    """
    if not (0.0 <= k < 1.0):
        raise DomainError(f"elliptic_k requires 0 <= k < 1, got {k}")
    a = 1.0
    # (1-k)(1+k) keeps the complementary modulus accurate as k -> 1.
    b = math.sqrt((1.0 - k) * (1.0 + k))
    for _ in range(_AGM_MAX_ITER):
        if abs(a - b) <= 4.0 * math.ulp(a):
            return math.pi / (2.0 * a)
        a, b = 0.5 * (a + b), math.sqrt(a * b)
    raise ConvergenceError("AGM iteration did not converge")
