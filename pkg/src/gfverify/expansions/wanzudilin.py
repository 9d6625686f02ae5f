"""Wan–Zudilin Legendre-polynomial series and their elliptic closed forms.

Both series have terms P_k(A) r^k with A = B / r.  Those products are
generated by the homogeneous form of the Legendre recurrence,

    (k+1) p_{k+1} = (2k+1) B p_k - k r^2 p_{k-1},   p_0 = 1, p_1 = B,

which never divides by r and therefore covers x = y as well.
"""
from __future__ import annotations

import math
from typing import Iterator

from ..errors import ConvergenceError, DomainError
from ..legfun import assoc_legendre_p, ferrers_p
from ..numcore import elliptic_k

__all__ = [
    "wan_zudilin_quadratic",
    "wan_zudilin_cubic",
    "quadratic_series",
    "cubic_series",
    "DOMAIN",
]

DOMAIN = (0.5, 1.5)
_TERM_CAP = 2000
_STOP_RTOL = 1e-17
_STOP_RUN = 3


def _check(x: float, y: float) -> None:
    lo, hi = DOMAIN
    for v in (x, y):
        if not lo < v < hi:
            raise DomainError(f"x and y must lie in ({lo}, {hi}), got {x}, {y}")


def _scaled_legendre(b: float, r2: float) -> Iterator[float]:
    """Yield P_k(A) r^k for k = 0, 1, ... given B = A r and r^2."""
    p0, p1 = 1.0, b
    yield p0
    yield p1
    k = 1
    while True:
        p0, p1 = p1, ((2 * k + 1) * b * p1 - k * r2 * p0) / (k + 1)
        yield p1
        k += 1


def _sum(weights: Iterator[float], stride: int, b: float,
         r2: float) -> tuple[float, int, float]:
    """(sum, terms used, last term)."""
    seq = _scaled_legendre(b, r2)
    total = 0.0
    run = 0
    for n in range(_TERM_CAP):
        for _ in range(stride - 1 if n else 0):
            next(seq)
        term = next(weights) * next(seq)
        total += term
        if abs(term) <= _STOP_RTOL * abs(total):
            run += 1
            if run >= _STOP_RUN:
                return total, n + 1, term
        else:
            run = 0
    raise ConvergenceError(f"series did not settle within {_TERM_CAP} terms")


def _weights(a: float, b: float) -> Iterator[float]:
    # (a)_n (b)_n / (n!)^2
    w = 1.0
    n = 0
    while True:
        yield w
        w *= (a + n) * (b + n) / ((n + 1) * (n + 1))
        n += 1


def quadratic_series(x: float, y: float) -> tuple[float, int, float]:
    """The quadratic series alone, as (value, terms used, last term)."""
    _check(x, y)
    q = 1.0 + x * y
    r = (x - y) / q
    b = (x + y) * (1.0 - x * y) / (q * q)
    total, used, last = _sum(_weights(0.5, 0.5), 2, b, r * r)
    c = math.pi ** 2 / 2
    return c * total, used, c * last


def cubic_series(x: float, y: float) -> tuple[float, int, float]:
    """The cubic series alone, as (value, terms used, last term)."""
    _check(x, y)
    s = math.sqrt(1.0 + 4.0 * x * y * (x + y))
    r = (x - y) / s
    b = (x + y - 2.0 * x * x * y * y) / (s * s)
    total, used, last = _sum(_weights(1.0 / 3.0, 2.0 / 3.0), 3, b, r * r)
    return 3.0 * total, used, 3.0 * last


def _k_factor(v: float) -> tuple[float, float]:
    """(K value, extra divisor) for one variable of the quadratic closed form."""
    if v >= 1.0:
        return elliptic_k(math.sqrt((v - 1.0) * (v + 1.0)) / v), v
    return elliptic_k(math.sqrt((1.0 - v) * (1.0 + v))), 1.0


def wan_zudilin_quadratic(x: float, y: float) -> tuple[float, float]:
    """(pi^2/2) sum_n ((1/2)_n / n!)^2 P_{2n}(A) r^{2n} and its closed form.

    Here r = (x-y)/(1+xy) and A r = (x+y)(1-xy)/(1+xy)^2.  The closed form
    is (1+xy) K(kx) K(ky) with each K argument and divisor depending on
    which side of 1 the variable lies.
    """
    series = quadratic_series(x, y)[0]
    q = 1.0 + x * y
    if x == 1.0 and y == 1.0:
        return series, math.pi ** 2 / 2
    kx, dx = _k_factor(x)
    ky, dy = _k_factor(y)
    return series, q / (dx * dy) * kx * ky


def _p_minus_third(v: float) -> float:
    t = 2.0 * v ** 3 - 1.0
    if t > 1.0:
        return assoc_legendre_p(-1.0 / 3.0, 0.0, t)
    if t == 1.0:
        return 1.0
    return ferrers_p(-1.0 / 3.0, 0.0, t)


def wan_zudilin_cubic(x: float, y: float) -> tuple[float, float]:
    """3 sum_n (1/3)_n (2/3)_n / (n!)^2 P_{3n}(A) r^{3n} and its closed form.

    With S = sqrt(1 + 4xy(x+y)): r = (x-y)/S, A r = (x+y-2x^2y^2)/S^2, and the
    closed form is S P_{-1/3}(2x^3-1) P_{-1/3}(2y^3-1) (Ferrers function for
    arguments below 1).
    """
    series = cubic_series(x, y)[0]
    s = math.sqrt(1.0 + 4.0 * x * y * (x + y))
    if x == 1.0 and y == 1.0:
        return series, s
    return series, s * _p_minus_third(x) * _p_minus_third(y)

