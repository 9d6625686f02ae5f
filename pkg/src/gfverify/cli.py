"""Command-line entry point: ``gfverify eval|verify|integrals|list``.

Exit codes: 0 pass, 1 numeric failure, 2 usage error or unknown id,
3 parameter outside an identity's domain.
"""
from __future__ import annotations

import argparse
import json
import sys

from . import harness
from .errors import DomainError, GFError
from .expansions.registry import REGISTRY, get_spec
from .hyp2f1 import gauss_2f1
from .legfun import assoc_legendre_p, ferrers_p
from .numcore import elliptic_k
from .orthopoly import chebyshev_t, chebyshev_u, gegenbauer_c, jacobi_p, legendre_poly

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_DOMAIN = 0, 1, 2, 3

# function name -> (callable, required flags in call order)
EVAL_FUNCTIONS = {
    "jacobi": (jacobi_p, ("n", "alpha", "beta", "x")),
    "gegenbauer": (gegenbauer_c, ("n", "mu", "x")),
    "chebt": (chebyshev_t, ("n", "x")),
    "chebu": (chebyshev_u, ("n", "x")),
    "legendre": (legendre_poly, ("n", "x")),
    "2f1": (gauss_2f1, ("a", "b", "c", "z")),
    "legp": (assoc_legendre_p, ("nu", "mu", "z")),
    "ferrers": (ferrers_p, ("nu", "mu", "x")),
    "elliptick": (elliptic_k, ("k",)),
}


def _fail(msg: str, code: int) -> int:
    print(f"gfverify: {msg}", file=sys.stderr)
    return code


def cmd_eval(args: argparse.Namespace) -> int:
    fn, names = EVAL_FUNCTIONS[args.function]
    missing = [f"--{k}" for k in names if getattr(args, k) is None]
    if missing:
        return _fail(f"eval {args.function} needs {' '.join(missing)}", EXIT_USAGE)
    try:
        value = fn(*(getattr(args, k) for k in names))
    except GFError as exc:
        return _fail(f"{args.function}: {exc}", EXIT_USAGE)
    print(format(value, ".17g"))
    return EXIT_OK


def _emit(report: harness.VerificationReport, columns, args) -> None:
    if args.format == "csv":
        text = harness.report_to_csv(report, columns)
    else:
        text = harness.report_to_json(report)
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _status(report: harness.VerificationReport) -> int:
    s = report.summary
    print(f"{report.identity_id}: {'PASS' if s['passed'] else 'FAIL'} "
          f"points={s['points']} max_rel_err={s['max_rel_err']!r} tol={s['tol']!r}",
          file=sys.stderr)
    for note in report.warnings:
        print(f"warning: {note}", file=sys.stderr)
    return EXIT_OK if s["passed"] else EXIT_FAIL


def cmd_verify(args: argparse.Namespace) -> int:
    try:
        spec = get_spec(args.identity)
    except KeyError:
        return _fail(f"unknown identity {args.identity!r}", EXIT_USAGE)
    if args.jobs < 1:
        return _fail("--jobs must be at least 1", EXIT_USAGE)
    try:
        report = harness.run_verify(spec.id, args.grid, args.tol, args.n_max, args.jobs)
    except harness.GridError as exc:
        return _fail(str(exc), EXIT_USAGE)
    except DomainError as exc:
        return _fail(f"grid outside domain: {exc}", EXIT_DOMAIN)
    _emit(report, spec.param_names, args)
    return _status(report)


def cmd_integrals(args: argparse.Namespace) -> int:
    try:
        spec = get_spec(args.identity)
    except KeyError:
        return _fail(f"unknown identity {args.identity!r}", EXIT_USAGE)
    if not spec.integral:
        return _fail(f"no integral registered for {spec.id}", EXIT_USAGE)
    n_max = 10 if args.n_max is None else args.n_max
    if n_max < 0:
        return _fail("--n-max must be nonnegative", EXIT_USAGE)
    try:
        report = harness.run_integrals(spec.id, n_max, args.tol)
    except DomainError as exc:
        return _fail(str(exc), EXIT_DOMAIN)
    columns = [k for k in spec.param_names if k != "x"] + ["n"]
    _emit(report, columns, args)
    return _status(report)


def cmd_list(args: argparse.Namespace) -> int:
    rows = [{"id": s.id, "family": s.family_name(), "label": s.label,
             "domain": s.domain_description(), "integral": s.integral}
            for s in REGISTRY.values()]
    if args.format == "json":
        print(json.dumps(rows, indent=2))
        return EXIT_OK
    width = max(len(r["id"]) for r in rows)
    fam_w = max(len(r["family"]) for r in rows)
    for r in rows:
        print(f"{r['id']:<{width}}  {r['family']:<{fam_w}}  {r['label']}  [{r['domain']}]")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gfverify",
        description="Evaluate special functions and check generating-function identities.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval", help="evaluate one function and print 17 significant digits")
    p.add_argument("function", choices=sorted(EVAL_FUNCTIONS))
    p.add_argument("--n", type=int)
    for name in ("x", "alpha", "beta", "mu", "a", "b", "c", "z", "nu", "k"):
        p.add_argument(f"--{name}", type=float)
    p.set_defaults(func=cmd_eval)

    def report_flags(q: argparse.ArgumentParser) -> None:
        q.add_argument("identity", help="identity id (see `gfverify list`)")
        q.add_argument("--tol", type=float, default=None, help="pass threshold on max rel_err")
        q.add_argument("--n-max", type=int, default=None,
                       help="series term cap (verify) or highest n (integrals, default 10)")
        q.add_argument("--out", default=None, help="report path (default: stdout)")
        q.add_argument("--format", choices=("json", "csv"), default="json")

    p = sub.add_parser("verify", help="series against closed form over a grid")
    report_flags(p)
    p.add_argument("--grid", default="default", help="JSON grid file or 'default'")
    p.add_argument("--jobs", type=int, default=1, help="worker processes")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("integrals", help="coefficients recovered by Gauss-Jacobi quadrature")
    report_flags(p)
    p.set_defaults(func=cmd_integrals)

    p = sub.add_parser("list", help="registered identities")
    p.add_argument("--format", choices=("table", "json"), default="table")
    p.set_defaults(func=cmd_list)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
