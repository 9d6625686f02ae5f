"""Distance factor R and the two Legendre arguments zeta_+ and zeta_-."""
from __future__ import annotations

import math
from dataclasses import dataclass

from ..errors import DomainError

__all__ = ["GeometryFactors", "geometry", "SzegoPoint", "szego_point"]


@dataclass(frozen=True)
class GeometryFactors:
    rho: float
    x: float
    big_r: float
    zeta_plus: float
    zeta_minus: float


def geometry(rho: float, x: float) -> GeometryFactors:
    """R = sqrt(1 + rho^2 - 2 rho x) and zeta_pm = (1 pm rho) / R."""
    if not 0.0 < rho < 1.0:
        raise DomainError(f"rho must lie in (0, 1), got {rho}")
    if not -1.0 <= x <= 1.0:
        raise DomainError(f"x must lie in [-1, 1], got {x}")
    # (1-rho)^2 + 2 rho (1-x) avoids cancellation as x -> 1
    r = math.sqrt((1.0 - rho) ** 2 + 2.0 * rho * (1.0 - x))
    if x == 1.0:
        r = 1.0 - rho
    elif x == -1.0:
        r = 1.0 + rho
    return GeometryFactors(rho, x, r, (1.0 + rho) / r, (1.0 - rho) / r)


@dataclass(frozen=True)
class SzegoPoint:
    """A point z > 1 on the real axis and the rho it corresponds to."""

    z: float

    def __post_init__(self):
        if not self.z > 1.0:
            raise DomainError(f"Szego point needs z > 1, got {self.z}")

    @property
    def root(self) -> float:
        """sqrt(z^2 - 1), positive branch."""
        return math.sqrt((self.z - 1.0) * (self.z + 1.0))

    @property
    def rho_equiv(self) -> float:
        # z - sqrt(z^2-1) written without cancellation
        return 1.0 / (self.z + self.root)


def szego_point(rho: float) -> SzegoPoint:
    """The point z = (1 + rho^2) / (2 rho) for rho in (0, 1)."""
    if not 0.0 < rho < 1.0:
        raise DomainError(f"rho must lie in (0, 1), got {rho}")
    return SzegoPoint((1.0 + rho * rho) / (2.0 * rho))
