"""The identity registry: every generating function and expansion, by id.

A point is a plain dict of parameter values.  Each spec knows its parameter
box, the polynomial family at a point, the closed-form left-hand side and
either a coefficient generator or a custom series.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from typing import Callable, Mapping

from ..errors import DomainError
from ..orthopoly import PolyFamily, check_gegenbauer, check_jacobi
from . import brafman, jacobi, specializations, wanzudilin
from .geometry import szego_point

__all__ = [
    "Param",
    "IdentitySpec",
    "REGISTRY",
    "get_spec",
    "identity_ids",
]

Point = Mapping[str, float]


@dataclass(frozen=True)
class Param:
    """One axis of a parameter box."""

    name: str
    lo: float
    hi: float
    lo_open: bool = False
    hi_open: bool = False
    integer: bool = False
    nonzero: bool = False

    def check(self, v) -> None:
        if isinstance(v, bool) or not isinstance(v, (int, float)) or math.isnan(v):
            raise DomainError(f"{self.name} must be a real number, got {v!r}")
        if self.integer and int(v) != v:
            raise DomainError(f"{self.name} must be an integer, got {v}")
        low_bad = v <= self.lo if self.lo_open else v < self.lo
        high_bad = v >= self.hi if self.hi_open else v > self.hi
        if low_bad or high_bad:
            raise DomainError(f"{self.name}={v} is outside {self.describe()}")
        if self.nonzero and v == 0:
            raise DomainError(f"{self.name} must be nonzero")

    def describe(self) -> str:
        left = "(" if self.lo_open else "["
        right = ")" if self.hi_open else "]"
        s = f"{left}{self.lo:g}, {self.hi:g}{right}"
        if self.integer:
            s += " integer"
        if self.nonzero:
            s += " \\ {0}"
        return s


@dataclass(frozen=True)
class IdentitySpec:
    id: str
    label: str
    params: tuple[Param, ...]
    family: Callable[[Point], PolyFamily]
    lhs: Callable[[Point], float]
    default_grid: Mapping[str, tuple]
    coeff: Callable[[int, Point], float] | None = None
    series: Callable[[Point], tuple[float, int, float]] | None = None
    integral: bool = False
    extra_check: Callable[[Point], None] | None = None
    # parameters the coefficients depend on (everything but the abscissa)
    coeff_keys: tuple[str, ...] = field(default=())
    # two interior points (without x) for the integral checks; rho is kept
    # moderate so the n <= 10 coefficients stay well above quadrature noise
    integral_points: tuple[Mapping[str, float], ...] = ()

    @property
    def param_names(self) -> tuple[str, ...]:
        return tuple(p.name for p in self.params)

    def check_point(self, point: Point) -> None:
        names = set(self.param_names)
        extra = set(point) - names
        if extra:
            raise DomainError(f"{self.id}: unknown parameters {sorted(extra)}")
        missing = names - set(point)
        if missing:
            raise DomainError(f"{self.id}: missing parameters {sorted(missing)}")
        for p in self.params:
            p.check(point[p.name])
        if self.extra_check is not None:
            self.extra_check(point)

    def grid_points(self, grid: Mapping[str, tuple] | None = None) -> list[dict]:
        """Cartesian product of the grid in parameter order (last varies fastest)."""
        grid = self.default_grid if grid is None else grid
        axes = [tuple(grid[name]) for name in self.param_names]
        return [dict(zip(self.param_names, combo)) for combo in itertools.product(*axes)]

    def domain_description(self) -> str:
        return ", ".join(f"{p.name} in {p.describe()}" for p in self.params)

    def family_name(self) -> str:
        return self.default_family().kind

    def default_family(self) -> PolyFamily:
        return self.family(self.grid_points()[0])


# parameter axes -------------------------------------------------------------

RHO_GRID = (0.1, 0.2, 0.3, 0.4, 0.5, 0.6)
X_GRID = (-0.9, -0.5, 0.0, 0.5, 0.9)
M_GRID = (0, 1, 2, 3, 5)
AB_GRID = (-0.4, 0.0, 0.5, 1.3)
MU_GF_GRID = (0.25, 0.75, 1.0, 2.5)
# mu = 2.5 loses too many digits to cancellation in the m = 5 expansions
MU_EXP_GRID = (-0.25, 0.25, 0.75, 1.0)
MU_BRAFMAN_GRID = (0.25, 0.75, 2.0)
LAM_GRID = (0.3, 1.0, 2.5)
WZ_GRID = (0.9, 1.0, 1.1)
Z_GRID = tuple(szego_point(r).z for r in RHO_GRID)

_RHO = Param("rho", 0.0, 0.8, lo_open=True)
_RHO_GAUSS = Param("rho", 0.0, 0.6, lo_open=True)
_X_CLOSED = Param("x", -1.0, 1.0)
_X_OPEN = Param("x", -1.0, 1.0, lo_open=True, hi_open=True)
_M = Param("m", 0, 10, integer=True)
_ALPHA = Param("alpha", -1.0, 5.0, lo_open=True)
_BETA = Param("beta", -1.0, 5.0, lo_open=True)
_MU = Param("mu", -0.5, 5.0, lo_open=True, nonzero=True)
_LAM = Param("lam", -5.0, 5.0)
_ALPHA_R = Param("alpha", -5.0, 5.0)
_Z = Param("z", szego_point(0.8).z, 1e6)
_WZ_X = Param("x", 0.5, 1.5, lo_open=True, hi_open=True)
_WZ_Y = Param("y", 0.5, 1.5, lo_open=True, hi_open=True)


def _jacobi_check(p: Point) -> None:
    check_jacobi(p["alpha"], p["beta"])


def _mu_check(p: Point) -> None:
    check_gegenbauer(p["mu"])


def _jac_family(p: Point) -> PolyFamily:
    return PolyFamily.jacobi(p["alpha"], p["beta"])


def _geg_family(p: Point) -> PolyFamily:
    return PolyFamily.gegenbauer(p["mu"])


def _const_family(kind: str) -> Callable[[Point], PolyFamily]:
    fam = getattr(PolyFamily, kind)()
    return lambda p: fam


_JAC_INTEGRAL_POINTS = (
    {"m": 2, "alpha": 0.5, "beta": -0.25, "rho": 0.3},
    {"m": 1, "alpha": 1.3, "beta": 0.0, "rho": 0.5},
)
_JAC_GF_GRID = {"alpha": AB_GRID, "beta": AB_GRID, "rho": RHO_GRID, "x": X_GRID}
_JAC_EXP_GRID = {"m": M_GRID, "alpha": AB_GRID, "beta": AB_GRID, "rho": RHO_GRID,
                 "x": X_GRID}


def _gf_jacobi(id_, label, fn, branch, extended):
    return IdentitySpec(
        id=id_,
        label=label,
        params=(_ALPHA, _BETA, _RHO_GAUSS, _X_CLOSED),
        family=_jac_family,
        lhs=lambda p: fn(p["alpha"], p["beta"], p["rho"], p["x"]),
        coeff=lambda n, p: jacobi.jacobi_gf_coeff(n, p["alpha"], p["beta"], p["rho"],
                                                  branch, extended),
        default_grid=_JAC_GF_GRID,
        extra_check=_jacobi_check,
        coeff_keys=("alpha", "beta", "rho"),
    )


def _spec_expansion(id_, label, kind, branch):
    if kind == "gegenbauer":
        params = (_M, _MU, _RHO, _X_CLOSED)
        grid = {"m": M_GRID, "mu": MU_EXP_GRID, "rho": RHO_GRID, "x": X_GRID}
        fam = _geg_family
        keys = ("m", "mu", "rho")
        check = _mu_check
        ipoints = ({"m": 1, "mu": 0.75, "rho": 0.4}, {"m": 3, "mu": 0.25, "rho": 0.5})
    else:
        params = (_M, _RHO, _X_CLOSED)
        grid = {"m": M_GRID, "rho": RHO_GRID, "x": X_GRID}
        fam = _const_family(kind)
        keys = ("m", "rho")
        check = None
        ipoints = ({"m": 2, "rho": 0.3}, {"m": 5, "rho": 0.5})
    return IdentitySpec(
        id=id_,
        label=label,
        params=params,
        family=fam,
        lhs=lambda p: specializations.specialized_lhs(fam(p), branch, p["m"], p["rho"], p["x"]),
        coeff=lambda n, p: specializations.specialized_coeffs(fam(p), branch, n, p["m"],
                                                              p["rho"]),
        default_grid=grid,
        integral=True,
        extra_check=check,
        coeff_keys=keys,
        integral_points=ipoints,
    )


_BRAFMAN_INTEGRAL_POINTS = {
    "lam": ({"lam": 0.3, "mu": 0.75, "rho": 0.4}, {"lam": 2.5, "mu": 2.0, "rho": 0.5}),
    "alpha": ({"alpha": 1.0, "mu": 0.75, "rho": 0.4}, {"alpha": 2.5, "mu": 0.25, "rho": 0.5}),
}


def _brafman(id_, label, lhs, coeff, first, with_mu, fam):
    if with_mu:
        params = (first, _MU, _RHO, _X_OPEN)
        grid = {first.name: LAM_GRID, "mu": MU_BRAFMAN_GRID, "rho": RHO_GRID,
                "x": X_GRID}
        keys = (first.name, "mu", "rho")
        lhs_fn = lambda p: lhs(p[first.name], p["mu"], p["rho"], p["x"])  # noqa: E731
        coeff_fn = lambda n, p: coeff(n, p[first.name], p["mu"], p["rho"])  # noqa: E731
    else:
        params = (first, _RHO, _X_OPEN)
        grid = {first.name: LAM_GRID, "rho": RHO_GRID, "x": X_GRID}
        keys = (first.name, "rho")
        lhs_fn = lambda p: lhs(p[first.name], p["rho"], p["x"])  # noqa: E731
        coeff_fn = lambda n, p: coeff(n, p[first.name], p["rho"])  # noqa: E731
    return IdentitySpec(
        id=id_,
        label=label,
        params=params,
        family=fam,
        lhs=lhs_fn,
        coeff=coeff_fn,
        default_grid=grid,
        integral=with_mu,
        extra_check=_mu_check if with_mu else None,
        coeff_keys=keys,
        integral_points=_BRAFMAN_INTEGRAL_POINTS[first.name] if with_mu else (),
    )


def _build() -> dict[str, IdentitySpec]:
    specs = [
        IdentitySpec(
            id="gf.gegenbauer",
            label="Gegenbauer generating function (1 + rho^2 - 2 rho x)^-mu",
            params=(_MU, _RHO, _X_CLOSED),
            family=_geg_family,
            lhs=lambda p: specializations.gegenbauer_gf(p["mu"], p["rho"], p["x"]),
            coeff=lambda n, p: p["rho"] ** n,
            default_grid={"mu": MU_GF_GRID, "rho": RHO_GRID, "x": X_GRID},
            extra_check=_mu_check,
            coeff_keys=("mu", "rho"),
        ),
        _gf_jacobi("gf.jacobi.plus", "Jacobi generating function, 2F1 in 2 rho (1+x)/(1+rho)^2",
                   jacobi.jacobi_gf_plus, "plus", False),
        _gf_jacobi("gf.jacobi.minus", "Jacobi generating function, companion 2F1 in -2 rho (1-x)/(1-rho)^2",
                   jacobi.jacobi_gf_minus, "minus", False),
        _gf_jacobi("gf.jacobi.ext.plus", "extended Jacobi generating function with (2n+s) weights, plus branch",
                   jacobi.jacobi_gf_ext_plus, "plus", True),
        _gf_jacobi("gf.jacobi.ext.minus", "extended Jacobi generating function with (2n+s) weights, minus branch",
                   jacobi.jacobi_gf_ext_minus, "minus", True),
        IdentitySpec(
            id="exp.jacobi.thm21",
            label="Jacobi expansion of (1+x)^(-beta/2) R^-(alpha+m+1) P_{alpha+m}^{-beta}(zeta_+)",
            params=(_M, _ALPHA, _BETA, _RHO, _X_OPEN),
            family=_jac_family,
            lhs=lambda p: jacobi.lhs_theorem(p["m"], p["alpha"], p["beta"], p["rho"], p["x"]),
            coeff=lambda n, p: jacobi.coeff_a(n, p["m"], p["alpha"], p["beta"], p["rho"]),
            default_grid=_JAC_EXP_GRID,
            integral=True,
            integral_points=_JAC_INTEGRAL_POINTS,
            extra_check=_jacobi_check,
            coeff_keys=("m", "alpha", "beta", "rho"),
        ),
        IdentitySpec(
            id="exp.jacobi.cor22",
            label="Jacobi expansion of (1-x)^(-alpha/2) R^-(beta+m+1) Ferrers P_{beta+m}^{-alpha}(zeta_-)",
            params=(_M, _ALPHA, _BETA, _RHO, _X_OPEN),
            family=_jac_family,
            lhs=lambda p: jacobi.lhs_corollary(p["m"], p["alpha"], p["beta"], p["rho"], p["x"]),
            coeff=lambda n, p: jacobi.coeff_b(n, p["m"], p["alpha"], p["beta"], p["rho"]),
            default_grid=_JAC_EXP_GRID,
            integral=True,
            integral_points=_JAC_INTEGRAL_POINTS,
            extra_check=_jacobi_check,
            coeff_keys=("m", "alpha", "beta", "rho"),
        ),
        IdentitySpec(
            id="exp.jacobi.szego23",
            label="Jacobi expansion after the map z = (1 + rho^2)/(2 rho)",
            params=(_M, _ALPHA, _BETA, _Z, _X_OPEN),
            family=_jac_family,
            lhs=lambda p: jacobi.lhs_szego(p["m"], p["alpha"], p["beta"], p["z"], p["x"]),
            coeff=lambda n, p: jacobi.coeff_c(n, p["m"], p["alpha"], p["beta"], p["z"]),
            default_grid={"m": M_GRID, "alpha": AB_GRID, "beta": AB_GRID, "z": Z_GRID,
                          "x": X_GRID},
            integral=True,
            integral_points=tuple(
                {"m": q["m"], "alpha": q["alpha"], "beta": q["beta"],
                 "z": szego_point(q["rho"]).z} for q in _JAC_INTEGRAL_POINTS),
            extra_check=_jacobi_check,
            coeff_keys=("m", "alpha", "beta", "z"),
        ),
        _spec_expansion("exp.gegenbauer.plus", "Gegenbauer expansion of R^-(2mu+m) C_m^mu(zeta_+)",
                        "gegenbauer", "plus"),
        _spec_expansion("exp.gegenbauer.minus", "Gegenbauer expansion of R^-(2mu+m) C_m^mu(zeta_-)",
                        "gegenbauer", "minus"),
        _brafman("gf.gegenbauer.koekoek",
                 "Koekoek generating function as a product P(R+rho) Ferrers P(R-rho)",
                 brafman.koekoek_lhs, brafman.koekoek_coeff, _LAM, True, _geg_family),
        _brafman("gf.gegenbauer.rainville",
                 "Rainville generating function as Ferrers P((1 - rho x)/R)",
                 brafman.rainville_lhs, brafman.rainville_coeff, _ALPHA_R, True, _geg_family),
        _spec_expansion("exp.chebu.plus", "Chebyshev-U expansion of R^-(m+2) U_m(zeta_+)",
                        "chebyshev_u", "plus"),
        _spec_expansion("exp.chebu.minus", "Chebyshev-U expansion of R^-(m+2) U_m(zeta_-)",
                        "chebyshev_u", "minus"),
        _brafman("gf.chebu.brafman", "Chebyshev-U case of the Koekoek generating function",
                 brafman.chebu_brafman_lhs, brafman.chebu_brafman_coeff, _LAM, False,
                 _const_family("chebyshev_u")),
        _brafman("gf.chebu.rainville", "Chebyshev-U case of the Rainville generating function",
                 brafman.chebu_rainville_lhs, brafman.chebu_rainville_coeff, _ALPHA_R, False,
                 _const_family("chebyshev_u")),
        _spec_expansion("exp.legendre.plus", "Legendre expansion of R^-(m+1) P_m(zeta_+)",
                        "legendre", "plus"),
        _spec_expansion("exp.legendre.minus", "Legendre expansion of R^-(m+1) P_m(zeta_-)",
                        "legendre", "minus"),
        _brafman("gf.legendre.brafman", "Brafman's generating function P_{-lam}(R+rho) Ferrers P_{-lam}(R-rho)",
                 brafman.legendre_brafman_lhs, brafman.legendre_brafman_coeff, _LAM, False,
                 _const_family("legendre")),
        _brafman("gf.legendre.rainville", "Legendre case of the Rainville generating function",
                 brafman.legendre_rainville_lhs, brafman.legendre_rainville_coeff, _ALPHA_R,
                 False, _const_family("legendre")),
        _spec_expansion("exp.chebt.plus", "Chebyshev-T expansion of R^-m T_m(zeta_+)",
                        "chebyshev_t", "plus"),
        _spec_expansion("exp.chebt.minus", "Chebyshev-T expansion of R^-m T_m(zeta_-)",
                        "chebyshev_t", "minus"),
        IdentitySpec(
            id="thm.wanzudilin.quadratic",
            label="Wan-Zudilin P_{2n} series with complete elliptic K closed forms",
            params=(_WZ_X, _WZ_Y),
            family=_const_family("legendre"),
            lhs=lambda p: wanzudilin.wan_zudilin_quadratic(p["x"], p["y"])[1],
            series=lambda p: wanzudilin.quadratic_series(p["x"], p["y"]),
            default_grid={"x": WZ_GRID, "y": WZ_GRID},
        ),
        IdentitySpec(
            id="thm.wanzudilin.cubic",
            label="Wan-Zudilin P_{3n} series with P_{-1/3}(2x^3-1) closed forms",
            params=(_WZ_X, _WZ_Y),
            family=_const_family("legendre"),
            lhs=lambda p: wanzudilin.wan_zudilin_cubic(p["x"], p["y"])[1],
            series=lambda p: wanzudilin.cubic_series(p["x"], p["y"]),
            default_grid={"x": WZ_GRID, "y": WZ_GRID},
        ),
    ]
    return {s.id: s for s in specs}


REGISTRY: dict[str, IdentitySpec] = _build()


def identity_ids() -> list[str]:
    return list(REGISTRY)


def get_spec(identity_id: str) -> IdentitySpec:
    try:
        return REGISTRY[identity_id]
    except KeyError:
        raise KeyError(f"unknown identity id {identity_id!r}") from None

