"""Verification runs over identity grids and their reports."""
from __future__ import annotations

import csv
import io
import json
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Mapping, Sequence

from .errors import ConvergenceError, GFError
from .expansions.registry import REGISTRY, IdentitySpec, get_spec
from .expansions.series import N_MAX, truncated_series
from .quadrature import coefficient_via_integral

__all__ = [
    "GridConfig",
    "GridError",
    "VerificationReport",
    "load_grid",
    "run_verify",
    "run_integrals",
    "report_to_json",
    "report_to_csv",
    "DEFAULT_TOL",
    "DEFAULT_INTEGRAL_TOL",
]

DEFAULT_TOL = 1e-8
DEFAULT_INTEGRAL_TOL = 1e-7
SERIES_TOL = 1e-16
QUADRATURE_ORDER = 64


class GridError(GFError, ValueError):
    """Malformed grid file (unknown keys, wrong types)."""


@dataclass(frozen=True)
class GridConfig:
    axes: Mapping[str, tuple]
    tol: float | None = None
    n_max: int | None = None


_META_KEYS = ("tol", "n_max")


def load_grid(spec: IdentitySpec, source: str | Mapping | None) -> GridConfig:
    """Build a grid for ``spec`` from a JSON path, a mapping, or the defaults.

    Unknown keys raise GridError; values outside the identity's box raise
    DomainError.  Axes absent from the file fall back to the defaults.
    """
    if source is None or source == "default":
        raw: Mapping = {}
    elif isinstance(source, str):
        try:
            with open(source, encoding="utf-8") as fh:
                raw = json.load(fh)
        except (OSError, json.JSONDecodeError) as exc:
            raise GridError(f"cannot read grid file {source}: {exc}") from None
    else:
        raw = source
    if not isinstance(raw, Mapping):
        raise GridError("grid file must hold a JSON object")
    names = spec.param_names
    unknown = sorted(set(raw) - set(names) - set(_META_KEYS))
    if unknown:
        raise GridError(f"unknown grid keys for {spec.id}: {unknown}")
    axes = {}
    for name in names:
        vals = raw.get(name, spec.default_grid[name])
        if isinstance(vals, (int, float)):
            vals = [vals]
        if not isinstance(vals, Sequence) or isinstance(vals, str) or not vals:
            raise GridError(f"grid axis {name!r} must be a nonempty list of numbers")
        param = next(p for p in spec.params if p.name == name)
        for v in vals:
            param.check(v)
        axes[name] = tuple(vals)
    tol = raw.get("tol")
    n_max = raw.get("n_max")
    if tol is not None and not (isinstance(tol, (int, float)) and tol > 0):
        raise GridError("tol must be a positive number")
    if n_max is not None and not (isinstance(n_max, int) and n_max > 0):
        raise GridError("n_max must be a positive integer")
    cfg = GridConfig(axes, tol, n_max)
    for point in spec.grid_points(cfg.axes):
        spec.check_point(point)
    return cfg


@dataclass
class VerificationReport:
    identity_id: str
    records: list[dict] = field(default_factory=list)
    summary: dict = field(default_factory=dict)
    warnings: list[str] = field(default_factory=list)

    def as_dict(self) -> dict:
        out = {"identity_id": self.identity_id, "records": self.records,
               "summary": self.summary}
        if self.warnings:
            out["warnings"] = self.warnings
        return out


def _record(index: int, params: tuple, lhs: float, series: float | None,
            terms: int, scale: float) -> dict:
    if series is None:
        abs_err = rel_err = None
    else:
        abs_err = abs(lhs - series)
        rel_err = abs_err / scale
    return {"grid_index": index, "params": list(params), "lhs": lhs, "series": series,
            "abs_err": abs_err, "rel_err": rel_err, "terms_used": terms}


def _summarize(records: list[dict], tol: float) -> dict:
    errs = [(r["rel_err"], r["params"]) for r in records if r["rel_err"] is not None]
    failed = len(errs) < len(records)
    worst = max(errs, key=lambda e: e[0]) if errs else (None, None)
    max_rel = worst[0]
    passed = (not failed) and max_rel is not None and max_rel <= tol
    return {"max_rel_err": max_rel, "worst_point": worst[1], "points": len(records),
            "passed": passed, "tol": tol}


def _verify_point(identity_id: str, index: int, point: dict, n_max: int) -> dict:
    spec = REGISTRY[identity_id]
    params = tuple(point[k] for k in spec.param_names)
    lhs = spec.lhs(point)
    try:
        res = truncated_series(spec, point, tol=SERIES_TOL, n_max=n_max)
    except ConvergenceError:
        return _record(index, params, lhs, None, n_max, 1.0)
    return _record(index, params, lhs, res.value, res.terms_used, max(1.0, abs(lhs)))


def _verify_chunk(args) -> list[dict]:
    identity_id, items, n_max = args
    return [_verify_point(identity_id, i, p, n_max) for i, p in items]


def run_verify(identity_id: str, grid: str | Mapping | None = None,
               tol: float | None = None, n_max: int | None = None,
               jobs: int = 1) -> VerificationReport:
    """Series against closed form at every grid point.

    rel_err is |lhs - series| / max(1, |lhs|).  Records come back in
    grid-index order whatever the worker count.
    """
    spec = get_spec(identity_id)
    cfg = load_grid(spec, grid)
    tol = tol if tol is not None else (cfg.tol if cfg.tol is not None else DEFAULT_TOL)
    n_max = n_max if n_max is not None else (cfg.n_max if cfg.n_max is not None else N_MAX)
    items = list(enumerate(spec.grid_points(cfg.axes)))
    if jobs <= 1 or len(items) < 2:
        records = _verify_chunk((identity_id, items, n_max))
    else:
        size = math.ceil(len(items) / jobs)
        chunks = [(identity_id, items[k:k + size], n_max) for k in range(0, len(items), size)]
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            records = [r for part in pool.map(_verify_chunk, chunks) for r in part]
    records.sort(key=lambda r: r["grid_index"])
    return VerificationReport(identity_id, records, _summarize(records, tol))


def run_integrals(identity_id: str, n_max: int = 10, tol: float | None = None,
                  order: int = QUADRATURE_ORDER) -> VerificationReport:
    """Quadrature coefficients against the analytic ones for n <= n_max.

    Each record's ``lhs`` is the analytic coefficient and ``series`` the
    quadrature value; ``params`` is the point followed by n.  rel_err is
    relative to the analytic coefficient.  A 2N-point rerun flags points
    whose value moves by more than tol.
    """
    spec = get_spec(identity_id)
    if not spec.integral:
        raise KeyError(f"{identity_id} has no integral form")
    tol = DEFAULT_INTEGRAL_TOL if tol is None else tol
    records = []
    notes = []
    index = 0
    for point in spec.integral_points:
        spec.check_point({**point, "x": 0.0})
        for n in range(n_max + 1):
            exact = spec.coeff(n, point)
            v1 = coefficient_via_integral(spec, n, point, order)
            v2 = coefficient_via_integral(spec, n, point, 2 * order)
            if abs(v1 - v2) > tol * max(abs(exact), abs(v2)):
                notes.append(f"quadrature not resolved at {dict(point)}, n={n}: "
                             f"{order}-point {v1!r} vs {2 * order}-point {v2!r}")
            params = tuple(point[k] for k in spec.param_names if k != "x") + (n,)
            scale = abs(exact) if exact != 0.0 else 1.0
            records.append(_record(index, params, exact, v1, order, scale))
            index += 1
    return VerificationReport(identity_id, records, _summarize(records, tol), notes)


def report_to_json(report: VerificationReport) -> str:
    # json writes floats with repr, the shortest round-trip form
    return json.dumps(report.as_dict(), indent=2, allow_nan=False) + "\n"


def report_to_csv(report: VerificationReport, param_names: Sequence[str]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["identity_id", "grid_index", *param_names, "lhs", "series",
                "abs_err", "rel_err", "terms_used"])
    for r in report.records:
        vals = [r["lhs"], r["series"], r["abs_err"], r["rel_err"]]
        w.writerow([report.identity_id, r["grid_index"], *map(repr, r["params"]),
                    *("" if v is None else repr(v) for v in vals), r["terms_used"]])
    return buf.getvalue()
