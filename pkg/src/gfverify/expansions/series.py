"""Adaptive truncation of an orthogonal-polynomial series."""
from __future__ import annotations

import threading
from dataclasses import dataclass
from typing import Mapping

from ..errors import ConvergenceError

__all__ = ["TruncationResult", "truncated_series", "N_MAX", "clear_cache"]

N_MAX = 400
_STOP_RUN = 3
_RATIO_CAP = 0.99


@dataclass(frozen=True)
class TruncationResult:
    value: float
    terms_used: int
    tail_estimate: float


class _CoeffCache:
    """Coefficient lists keyed by (identity id, coefficient parameters)."""

    def __init__(self):
        self._lock = threading.Lock()
        self._data: dict[tuple, list[float]] = {}

    def get(self, spec, point: Mapping[str, float], n: int) -> float:
        key = (spec.id, tuple(point[k] for k in spec.coeff_keys))
        with self._lock:
            lst = self._data.setdefault(key, [])
            if n < len(lst):
                return lst[n]
        value = spec.coeff(n, point)
        with self._lock:
            # another thread may have filled it; coefficients are pure
            if n == len(lst):
                lst.append(value)
        return value

    def clear(self) -> None:
        with self._lock:
            self._data.clear()


_CACHE = _CoeffCache()


def clear_cache() -> None:
    _CACHE.clear()


def truncated_series(spec, point: Mapping[str, float], tol: float = 1e-16,
                     n_max: int = N_MAX) -> TruncationResult:
    """Sum coeff(n) p_n(x) until three consecutive terms are below tol*|sum|.

    The tail estimate is the last term over 1 - r, with r the ratio of the
    last two nonzero term magnitudes clamped to [0, 0.99].
    """
    spec.check_point(point)
    if spec.series is not None:
        value, used, last = spec.series(point)
        return TruncationResult(value, used, abs(last))
    seq = spec.family(point).sequence(point["x"])
    total = 0.0
    run = 0
    prev = 0.0
    ratio = 0.0
    for n in range(n_max):
        term = _CACHE.get(spec, point, n) * next(seq)
        total += term
        if term != 0.0:
            if prev != 0.0:
                ratio = abs(term) / abs(prev)
            prev = term
        if abs(term) <= tol * abs(total):
            run += 1
            if run >= _STOP_RUN:
                r = min(max(ratio, 0.0), _RATIO_CAP)
                return TruncationResult(total, n + 1, abs(term) / (1.0 - r))
        else:
            run = 0
    raise ConvergenceError(f"{spec.id}: series not settled after {n_max} terms at {dict(point)}")
