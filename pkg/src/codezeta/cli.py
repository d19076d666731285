"""Command-line front end.

Exit codes: 0 success, 2 invalid input, 3 internal consistency failure.
Errors are printed to stderr as ``{"error": <class name>, "message": ...}``.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .code import DEFAULT_BUDGET, code_from_json, weight_distribution
from .errors import ConsistencyError, ValidationError
from .fixtures import fixture, random_code
from .field import field_of_size
from .funcfield import b_relations_report, b_sequence, class_number_bounds, profile_from_lpoly, profile_from_point_counts
from .report import analyze_code

EXIT_OK = 0
EXIT_INVALID = 2
EXIT_CONSISTENCY = 3


def _int_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from exc


def _load_json(path: str) -> dict:
    text = sys.stdin.read() if path == "-" else Path(path).read_text()
    return json.loads(text)


def _emit(payload: dict, args, table: str | None = None) -> None:
    text = json.dumps(payload, indent=2)
    if getattr(args, "out", None):
        Path(args.out).write_text(text + "\n")
    if table is not None and not getattr(args, "json", False):
        print(table)
    elif not getattr(args, "out", None) or getattr(args, "json", False):
        print(text)


def _cmd_code(args) -> None:
    code = code_from_json(_load_json(args.input))
    if args.action == "wdist":
        wd = weight_distribution(code, args.budget)
        _emit(wd.to_json(), args, " ".join(str(c) for c in wd.counts))
        return
    report = analyze_code(code, args.budget)
    if args.action == "analyze":
        _emit(report.to_json(), args, report.table())
    elif args.action == "zeta":
        zp = report.zeta
        _emit(zp.to_json(), args, f"P(t) = {zp.P}\nD(t) = {zp.D}")
    elif args.action == "fsd":
        rows = "\n".join(f"{k:18s} {v}" for k, v in report.fsd.conditions.items())
        _emit(report.fsd.to_json(), args, rows)
    elif args.action == "rha":
        v = report.rha
        _emit(v.to_json(), args, f"RHA {v.holds} ({v.method}, max residual {v.max_residual:.3g})")


def _cmd_ff(args) -> None:
    if (args.lpoly is None) == (args.points is None):
        raise ValidationError("give exactly one of --lpoly and --points")
    if args.lpoly is not None:
        profile = profile_from_lpoly(args.lpoly, args.q)
    else:
        profile = profile_from_point_counts(args.points, args.q)
    n = args.terms if args.terms is not None else 3 * profile.g
    rel = b_relations_report(profile, n)
    payload = profile.to_json() | {
        "B": b_sequence(profile, n),
        "b_relations": rel.holds,
        "relation_failures": list(rel.failures),
        "class_number_bounds": class_number_bounds(profile),
        "virtual": profile.virtual,
    }
    table = "\n".join(f"{k:20s} {v}" for k, v in payload.items())
    _emit(payload, args, table)


def _cmd_fixtures(args) -> None:
    code = fixture(args.name, args.q, args.n, args.k)
    _emit(code.to_json(), args)


def _cmd_rand(args) -> None:
    code = random_code(field_of_size(args.q), args.n, args.k, args.seed)
    _emit(code.to_json(), args)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="codezeta", description="Zeta polynomials of codes and function fields.")
    sub = parser.add_subparsers(dest="command", required=True)

    def outputs(p):
        p.add_argument("--out", help="write JSON to this file")
        p.add_argument("--json", action="store_true", help="print JSON instead of a table")

    code = sub.add_parser("code", help="analyse a linear code")
    code.add_argument("action", choices=["analyze", "wdist", "zeta", "fsd", "rha"])
    code.add_argument("--input", default="-", help="code JSON file (default: stdin)")
    code.add_argument("--budget", type=int, default=DEFAULT_BUDGET, help="maximum number of codewords")
    outputs(code)
    code.set_defaults(func=_cmd_code)

    ff = sub.add_parser("ff", help="analyse a function field")
    ff.add_argument("action", choices=["analyze"])
    ff.add_argument("--lpoly", type=_int_list, help="L coefficients, ascending")
    ff.add_argument("--points", type=_int_list, help="point counts N_1..N_g")
    ff.add_argument("--q", type=int, required=True)
    ff.add_argument("--terms", type=int, help="last index of the B sequence (default 3g)")
    outputs(ff)
    ff.set_defaults(func=_cmd_ff)

    fx = sub.add_parser("fixtures", help="emit a built-in generator matrix")
    fx.add_argument("--name", required=True)
    fx.add_argument("--q", type=int)
    fx.add_argument("--n", type=int)
    fx.add_argument("--k", type=int)
    fx.add_argument("--out")
    fx.set_defaults(func=_cmd_fixtures)

    rand = sub.add_parser("rand", help="seeded random instances")
    rand.add_argument("kind", choices=["code"])
    rand.add_argument("--q", type=int, required=True)
    rand.add_argument("--n", type=int, required=True)
    rand.add_argument("--k", type=int, required=True)
    rand.add_argument("--seed", type=int, default=0)
    rand.add_argument("--out")
    rand.set_defaults(func=_cmd_rand)
    return parser


def _fail(exc: BaseException, code: int) -> int:
    print(json.dumps({"error": type(exc).__name__, "message": str(exc)}), file=sys.stderr)
    return code


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        args.func(args)
    except ConsistencyError as exc:
        return _fail(exc, EXIT_CONSISTENCY)
    except (ValidationError, ValueError, KeyError, TypeError, OSError) as exc:
        return _fail(exc, EXIT_INVALID)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
