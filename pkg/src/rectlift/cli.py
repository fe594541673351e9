"""
Command-line front end.

    rectlift classify 43251
    rectlift lift 43251 --lambda=1,0,0,0
    rectlift verify 43251 --lambda=1,0,0,0
    rectlift verify --sweep --n=4 --max-coeff=1 --jobs=4
    rectlift count --class=rectangular --n=4
    rectlift dim 43251 --lambda=1,0,0,0 --oracle=both
    rectlift enumerate --class=triangular --n=4

Output is JSON by default (with a top-level "schema" version) or key/value
TSV with --format=tsv. Exit status: 0 success, 1 a verification check failed,
2 usage error.
"""
from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from .dimension import demazure_dim, demazure_face, polytope_count
from .errors import EnumerationBoundError, PreconditionError, RankMismatchError
from .lift import sweep, verify_lift
from .perm import CLASSES, census, enumerate_class, inversion_set, is_rectangular, is_triangular, parse_perm
from .rectsets import is_irreducible
from .weights import parse_weight

SCHEMA = 1


class UsageError(Exception):
    pass


def _build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "tsv"), default="json")
    common.add_argument("--jobs", type=int, default=1)

    parser = argparse.ArgumentParser(prog="rectlift", description=__doc__.split("\n\n")[0].strip())
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", parents=[common], help="rectangular / triangular / irreducible")
    p.add_argument("perm")

    p = sub.add_parser("lift", parents=[common], help="construct (tau~, lambda~)")
    p.add_argument("perm")
    p.add_argument("--lambda", dest="lam", required=True)

    p = sub.add_parser("verify", parents=[common], help="check every computable consequence of the lift")
    p.add_argument("perm", nargs="?")
    p.add_argument("--lambda", dest="lam")
    p.add_argument("--sweep", action="store_true")
    p.add_argument("--n", type=int)
    p.add_argument("--max-coeff", type=int, default=1)

    p = sub.add_parser("count", parents=[common], help="census of a pattern class in S_n")
    p.add_argument("--class", dest="cls", choices=sorted(CLASSES), required=True)
    p.add_argument("--n", type=int, required=True)

    p = sub.add_parser("dim", parents=[common], help="Demazure module dimension")
    p.add_argument("perm")
    p.add_argument("--lambda", dest="lam", required=True)
    p.add_argument("--oracle", choices=("both", "demazure", "polytope"), default="both")

    p = sub.add_parser("enumerate", parents=[common], help="list a pattern class in S_n")
    p.add_argument("--class", dest="cls", choices=sorted(CLASSES), required=True)
    p.add_argument("--n", type=int, required=True)
    return parser


def _perm(text: str):
    try:
        return parse_perm(text)
    except PreconditionError as e:
        raise UsageError(f"argument perm: {e}") from None


def _weight(text: str | None, rank: int):
    if text is None:
        raise UsageError("argument --lambda is required")
    try:
        return parse_weight(text, rank)
    except PreconditionError as e:
        raise UsageError(f"argument --lambda: {e}") from None


def _tsv_value(v) -> str:
    if v is None:
        return ""
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, (list, tuple)) and all(isinstance(x, (int, str)) and not isinstance(x, bool) for x in v):
        return ",".join(str(x) for x in v)
    if isinstance(v, (dict, list)):
        return json.dumps(v, sort_keys=True, separators=(",", ":"))
    return str(v)


def _emit(payload: dict, fmt: str, out) -> None:
    if fmt == "json":
        out.write(json.dumps(payload, sort_keys=True) + "\n")
    else:
        for k in sorted(payload):
            out.write(f"{k}\t{_tsv_value(payload[k])}\n")


def _classify(args) -> tuple[dict, int]:
    tau = _perm(args.perm)
    rect = is_rectangular(tau)
    N = inversion_set(tau)
    return {
        "schema": SCHEMA,
        "perm": str(tau),
        "length": len(N),
        "inversion_set": N.to_strings(),
        "rectangular": rect,
        "triangular": is_triangular(tau),
        "irreducible": is_irreducible(N) if rect else None,
    }, 0


def _lift(args) -> tuple[dict, int]:
    tau = _perm(args.perm)
    lam = _weight(args.lam, tau.rank)
    if not is_rectangular(tau):
        raise UsageError(f"argument perm: {tau} is not rectangular; the lift is only defined for rectangular elements")
    report = verify_lift(tau, lam)
    payload = {"schema": SCHEMA, "tau": str(tau), "lambda": list(lam.coeffs)}
    comps = report.to_json()["components"]
    if len(comps) == 1:
        for key in ("tau_tilde", "lambda_tilde", "ideal", "mu"):
            payload[key] = comps[0][key]
    else:
        for key in ("tau_tilde", "lambda_tilde", "ideal", "mu"):
            payload[key] = None
    payload["components"] = comps
    payload["checks"] = report.checks
    return payload, 0 if report.passed else 1


def _verify(args) -> tuple[dict, int]:
    if args.sweep:
        if args.n is None:
            raise UsageError("argument --n is required with --sweep")
        reports = sweep(args.n, args.max_coeff, jobs=args.jobs)
        failures = [{"tau": str(r.tau), "lambda": list(r.lam.coeffs), "checks": r.checks} for r in reports if not r.passed]
        payload = {
            "schema": SCHEMA,
            "n": args.n,
            "max_coeff": args.max_coeff,
            "total": len(reports),
            "passed": len(reports) - len(failures),
            "failures": failures,
            "pass": not failures,
        }
        return payload, 0 if not failures else 1
    if args.perm is None:
        raise UsageError("argument perm is required unless --sweep is given")
    tau = _perm(args.perm)
    lam = _weight(args.lam, tau.rank)
    if not is_rectangular(tau):
        raise UsageError(f"argument perm: {tau} is not rectangular")
    report = verify_lift(tau, lam)
    payload = {"schema": SCHEMA, **report.to_json()}
    return payload, 0 if report.passed else 1


def _count(args) -> tuple[dict, int]:
    return {"schema": SCHEMA, "class": args.cls, "n": args.n, "count": census(args.n, args.cls)}, 0


def _dim(args) -> tuple[dict, int]:
    tau = _perm(args.perm)
    lam = _weight(args.lam, tau.rank)
    if not lam.is_dominant():
        raise UsageError(f"argument --lambda: {lam.coeffs} is not dominant")
    payload: dict = {"schema": SCHEMA, "perm": str(tau), "lambda": list(lam.coeffs), "demazure": None, "polytope": None}
    if args.oracle in ("both", "demazure"):
        payload["demazure"] = demazure_dim(tau, lam)
    if args.oracle in ("both", "polytope"):
        if is_triangular(tau):
            payload["polytope"] = polytope_count(demazure_face(tau, lam))
        elif args.oracle == "polytope":
            raise UsageError(f"argument perm: {tau} is not triangular, the polytope oracle does not apply")
    both = payload["demazure"] is not None and payload["polytope"] is not None
    payload["equal"] = payload["demazure"] == payload["polytope"] if both else None
    return payload, 1 if payload["equal"] is False else 0


def run(argv: Sequence[str] | None = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    try:
        if args.command == "enumerate":
            for p in enumerate_class(args.n, args.cls):
                out.write(f"{p}\n")
            return 0
        handler = {"classify": _classify, "lift": _lift, "verify": _verify, "count": _count, "dim": _dim}[args.command]
        payload, status = handler(args)
    except (UsageError, EnumerationBoundError, PreconditionError, RankMismatchError) as e:
        err.write(f"rectlift {args.command}: error: {e}\n")
        return 2
    _emit(payload, args.format, out)
    return status


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
