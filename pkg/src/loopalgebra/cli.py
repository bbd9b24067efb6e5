"""Command-line front end: rank tables, normal forms, bases, verification.

All payload output is deterministic (fixed orderings, no timestamps) and
goes to stdout; warnings go to stderr.  Exit codes: 0 success, 1 failed
verification, 2 failed surjectivity flag in the table, 64 usage error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import __version__, boundary_maps, suites
from .dyer_lashof import normalize
from .loop_homology import Space, q_generators

EX_USAGE = 64
SCHEMA = "loopalgebra.report/1"
DEFAULT_DEGREE_CAP = 24
ENV_CAP = "LOOPALGEBRA_MAX_DEGREE"


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # argparse default exits with 2
        self.print_usage(sys.stderr)
        self.exit(EX_USAGE, f"{self.prog}: error: {message}\n")


def _degree_cap() -> int:
    raw = os.environ.get(ENV_CAP)
    if raw is None:
        return DEFAULT_DEGREE_CAP
    try:
        return max(1, int(raw))
    except ValueError:
        print(f"warning: ignoring invalid {ENV_CAP}={raw!r}", file=sys.stderr)
        return DEFAULT_DEGREE_CAP


def _resolve_degree(parser: _Parser, value: int | None, unsafe: int | None, what: str) -> int:
    if unsafe is not None:
        if value is not None:
            parser.error(f"give either --{what} or --unsafe-max-degree, not both")
        if unsafe < 1:
            parser.error("--unsafe-max-degree must be at least 1")
        print(f"warning: degree cap bypassed ({unsafe})", file=sys.stderr)
        return unsafe
    cap = _degree_cap()
    if value is None:
        parser.error(f"--{what} is required")
    if value < 1:
        parser.error(f"--{what} must be at least 1")
    if value > cap:
        parser.error(f"--{what} {value} exceeds the cap {cap}; use --unsafe-max-degree to override")
    return value


def _emit(text: str) -> None:
    sys.stdout.write(text)
    if not text.endswith("\n"):
        sys.stdout.write("\n")


def _json_report(command: str, parameters: dict, body: dict) -> str:
    report = {"schema": SCHEMA, "version": __version__, "command": command, "parameters": parameters}
    report.update(body)
    return json.dumps(report, indent=2, sort_keys=True)


def _csv_lines(rows: list[list]) -> str:
    return "\n".join(",".join(str(x) for x in row) for row in rows)


def cmd_table(args, parser: _Parser) -> int:
    max_degree = _resolve_degree(parser, args.max_degree, args.unsafe_max_degree, "max-degree")
    table = boundary_maps.rank_table(max_degree)
    fmt = lambda v: "-" if v is None else v
    if args.format == "json":
        records = [
            {
                "degree": r.degree,
                "dim_qh_qbo2": r.dim_qh_qbo2,
                "dim_qh_mto1": r.dim_qh_mto1,
                "surjective": r.surjective,
                "rk_qh": r.rk_qh,
                "rk_h": r.rk_h,
            }
            for r in table.rows
        ]
        _emit(_json_report("table", {"max_degree": max_degree, "format": "json"}, {"records": records}))
    elif args.format == "csv":
        rows = [
            ["quantity"] + [r.degree for r in table.rows],
            ["dim_qh_qbo2"] + [r.dim_qh_qbo2 for r in table.rows],
            ["dim_qh_mto1"] + [r.dim_qh_mto1 for r in table.rows],
            ["surjective"] + [int(r.surjective) for r in table.rows],
            ["rk_qh_mto2"] + [fmt(r.rk_qh) for r in table.rows],
            ["rk_h_mto2"] + [fmt(r.rk_h) for r in table.rows],
        ]
        _emit(_csv_lines(rows))
    else:
        degs = " | ".join(str(r.degree) for r in table.rows)
        lines = [
            f"# F_2 ranks for Omega_0^oo MTO(2), degrees 1..{max_degree}",
            "",
            f"| quantity | {degs} |",
            "|" + "---|" * (max_degree + 1),
            "| dim QH_n QBO(2) | " + " | ".join(str(r.dim_qh_qbo2) for r in table.rows) + " |",
            "| dim QH_n MTO(1) | " + " | ".join(str(r.dim_qh_mto1) for r in table.rows) + " |",
            "| surjective | " + " | ".join("yes" if r.surjective else "NO" for r in table.rows) + " |",
            "| Rk QH_n MTO(2) | " + " | ".join(str(fmt(r.rk_qh)) for r in table.rows) + " |",
            "| Rk H_n MTO(2) | " + " | ".join(str(fmt(r.rk_h)) for r in table.rows) + " |",
        ]
        _emit("\n".join(lines))
    return 0 if table.all_surjective() else 2


def cmd_adem(args, parser: _Parser) -> int:
    seq = tuple(args.entries)
    if any(s < 0 for s in seq):
        parser.error("operation indices must be nonnegative")
    terms = sorted(normalize(seq))
    rendered = "0" if not terms else " + ".join("(" + ",".join(map(str, t)) + ")" for t in terms)
    if args.format == "json":
        _emit(_json_report("adem", {"entries": list(seq)}, {"terms": [list(t) for t in terms]}))
    elif args.format == "csv":
        _emit(_csv_lines([["term"]] + [["(" + " ".join(map(str, t)) + ")"] for t in terms]))
    else:
        _emit(rendered)
    return 0


def cmd_generators(args, parser: _Parser) -> int:
    degree = _resolve_degree(parser, args.degree, args.unsafe_max_degree, "degree")
    space = Space(args.space)
    gens = q_generators(space, degree)
    if args.format == "json":
        records = [
            {"name": g.name, "sequence": list(g.seq), "base": g.base.name, "base_degree": g.base.degree}
            for g in gens
        ]
        _emit(_json_report("generators", {"space": args.space, "degree": degree}, {"records": records}))
    elif args.format == "csv":
        rows = [["name", "sequence", "base", "base_degree"]] + [
            [g.name, "(" + " ".join(map(str, g.seq)) + ")", g.base.name, g.base.degree] for g in gens
        ]
        _emit(_csv_lines(rows))
    else:
        _emit("\n".join(g.name for g in gens) if gens else "(none)")
    return 0


def cmd_kernel_basis(args, parser: _Parser) -> int:
    degree = _resolve_degree(parser, args.degree, args.unsafe_max_degree, "degree")
    basis = boundary_maps.v_basis(degree)
    if args.format == "json":
        records = [
            {
                "name": v.name,
                "sequence": list(v.seq),
                "index": v.i,
                "ambient": [g.name for g in sorted(v.ambient)],
            }
            for v in basis
        ]
        _emit(_json_report("kernel-basis", {"degree": degree}, {"records": records}))
    elif args.format == "csv":
        rows = [["name", "ambient"]] + [
            [v.name, " + ".join(g.name for g in sorted(v.ambient))] for v in basis
        ]
        _emit(_csv_lines(rows))
    else:
        lines = [f"{v.name}: " + " + ".join(g.name for g in sorted(v.ambient)) for v in basis]
        _emit("\n".join(lines) if lines else "(none)")
    return 0


def cmd_verify(args, parser: _Parser) -> int:
    max_degree = None
    if args.unsafe_max_degree is not None:
        if args.max_degree is not None:
            parser.error("give either --max-degree or --unsafe-max-degree, not both")
        print(f"warning: degree cap bypassed ({args.unsafe_max_degree})", file=sys.stderr)
        max_degree = args.unsafe_max_degree
    elif args.max_degree is not None:
        if args.max_degree < 1:
            parser.error("--max-degree must be at least 1")
        if args.max_degree > _degree_cap():
            parser.error(f"--max-degree exceeds the cap {_degree_cap()}; use --unsafe-max-degree")
        max_degree = args.max_degree
    results = suites.run_suite(args.suite, max_degree)
    ok = all(r.passed for r in results)
    if args.format == "json":
        records = [
            {"name": r.name, "scope": r.scope, "passed": r.passed, "witness": r.witness}
            for r in results
        ]
        _emit(_json_report("verify", {"suite": args.suite, "max_degree": max_degree}, {"records": records, "passed": ok}))
    elif args.format == "csv":
        rows = [["name", "scope", "passed", "witness"]] + [
            [r.name, r.scope, int(r.passed), r.witness] for r in results
        ]
        _emit(_csv_lines(rows))
    else:
        lines = [r.line() for r in results]
        lines.append(f"{'all checks passed' if ok else 'FAILURES detected'} ({sum(r.passed for r in results)}/{len(results)})")
        _emit("\n".join(lines))
    return 0 if ok else 1


def build_parser() -> _Parser:
    parser = _Parser(prog="loopalgebra", description=__doc__)
    parser.add_argument("--version", action="version", version=f"loopalgebra {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p: _Parser) -> None:
        p.add_argument("--format", choices=("md", "csv", "json"), default="md")
        p.add_argument("--unsafe-max-degree", type=int, default=None, help="bypass the degree cap")

    p_table = sub.add_parser("table", help="rank table for Omega_0^oo MTO(2)")
    p_table.add_argument("--max-degree", type=int, default=None)
    common(p_table)
    p_table.set_defaults(func=cmd_table)

    p_adem = sub.add_parser("adem", help="admissible normal form of a composite operation")
    p_adem.add_argument("entries", type=int, nargs="+")
    p_adem.add_argument("--format", choices=("md", "csv", "json"), default="md")
    p_adem.set_defaults(func=cmd_adem)

    p_gens = sub.add_parser("generators", help="polynomial generators of H_*(Q_0(Y+))")
    p_gens.add_argument("--space", choices=tuple(s.value for s in Space), required=True)
    p_gens.add_argument("--degree", type=int, default=None)
    common(p_gens)
    p_gens.set_defaults(func=cmd_generators)

    p_kb = sub.add_parser("kernel-basis", help="kernel basis v^{I,i} in one degree")
    p_kb.add_argument("--degree", type=int, default=None)
    common(p_kb)
    p_kb.set_defaults(func=cmd_kernel_basis)

    p_verify = sub.add_parser("verify", help="run a verification suite")
    p_verify.add_argument("--suite", choices=("adem", "hopf", "mto1", "mto2", "all"), required=True)
    p_verify.add_argument("--max-degree", type=int, default=None)
    common(p_verify)
    p_verify.set_defaults(func=cmd_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    return args.func(args, parser)


def run() -> None:
    raise SystemExit(main())
