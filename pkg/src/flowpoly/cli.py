"""Command-line surface.

One executable, nine subcommands: flow, chromatic, roots, invariants,
classify, audit, dual, search, constants.  Exit codes are part of the
contract: 0 success, 2 when an audit or a requested check fails, 3 for
malformed command lines or input files, 1 for everything else (refused
work caps, undefined invariants).
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import asdict
from fractions import Fraction

from .audits import (
    FAIL,
    audit_graph,
    classify,
    compute_invariants,
    nroot,
    report_to_dict,
    xi_table,
)
from .flow import chromatic_poly, flow_poly, flow_poly_traced, trace_lines
from .multigraph import (
    MultiGraph,
    build_dual,
    format_edge_list,
    parse_edge_list,
    parse_faces,
    validate_faces,
)
from .polyalg import IntPoly, root_profile
from .search import FILTER_NAMES, SearchConfig, run_search

__all__ = ["main", "SearchConfig"]

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_CHECK_FAILED = 2
EXIT_PARSE = 3


class _Parser(argparse.ArgumentParser):
    # argparse exits 2 on bad usage by default, which would collide with the
    # audit-failure code; route every usage problem to the parse-error code
    def error(self, message):
        self.exit(EXIT_PARSE, f"{self.prog}: error: {message}\n")


def _fraction(text: str) -> Fraction:
    try:
        f = Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"not a rational: {text!r}") from exc
    if f <= 0:
        raise argparse.ArgumentTypeError("tolerance must be positive")
    return f


def _load_graph(path: str) -> MultiGraph:
    with open(path, encoding="utf-8") as fh:
        return parse_edge_list(fh.read())


def _load_faces(path: str):
    with open(path, encoding="utf-8") as fh:
        return parse_faces(fh.read())


def _poly_text(p: IntPoly, var: str = "x") -> str:
    if p.is_zero:
        return "0"
    parts = []
    for i in range(p.degree, -1, -1):
        c = p.coeffs[i]
        if c == 0:
            continue
        mag = abs(c)
        if i == 0:
            term = str(mag)
        else:
            head = "" if mag == 1 else f"{mag}*"
            term = f"{head}{var}" if i == 1 else f"{head}{var}^{i}"
        if not parts:
            parts.append(term if c > 0 else f"-{term}")
        else:
            parts.append(f"+ {term}" if c > 0 else f"- {term}")
    return " ".join(parts)


def _coeff_list(p: IntPoly) -> list[str]:
    return [str(c) for c in p.coeffs]


def _add_common(p: argparse.ArgumentParser) -> None:
    # accepted both before and after the subcommand; SUPPRESS keeps the
    # subparser from clobbering a value parsed at the top level
    p.add_argument(
        "--format", choices=("json", "text"), default=argparse.SUPPRESS,
        help="output format (default text)",
    )
    p.add_argument(
        "--tol", type=_fraction, default=argparse.SUPPRESS,
        help="enclosure width target, as a rational like 1/1000000000",
    )
    p.add_argument(
        "--workers", type=int, default=argparse.SUPPRESS,
        help="parallel workers for search (default 1)",
    )


def _emit(args, payload: dict, text: str) -> None:
    if args.format == "json":
        print(json.dumps(payload))
    else:
        print(text)


def _interval_str(lo: Fraction, hi: Fraction) -> str:
    return f"[{lo}, {hi}] ~ [{float(lo):.12g}, {float(hi):.12g}]"


def _profile_dict(prof) -> dict:
    return {
        "degree": prof.degree,
        "integer_roots": [[v, m] for v, m in prof.integer_roots],
        "count_in_1_2": prof.count_in_1_2,
        "real_root_count": prof.real_root_count,
        "real_rooted": prof.real_rooted,
        "omega": {
            "lo": str(prof.gap_sum_enclosure[0]),
            "hi": str(prof.gap_sum_enclosure[1]),
        },
        "isolating_intervals": [
            [str(lo), str(hi)] for lo, hi in prof.isolating_intervals
        ],
    }


def cmd_flow(args) -> int:
    g = _load_graph(args.file)
    if args.trace:
        F, trace = flow_poly_traced(g)
        for line in trace_lines(trace):
            print(line, file=sys.stderr)
    else:
        F = flow_poly(g)
    _emit(
        args,
        {"n": g.n, "m": g.m, "coeffs": _coeff_list(F)},
        f"F(G, x) = {_poly_text(F)}\n"
        f"coefficients (constant first): {list(F.coeffs)}",
    )
    return EXIT_OK


def cmd_chromatic(args) -> int:
    g = _load_graph(args.file)
    P = chromatic_poly(g)
    _emit(
        args,
        {"n": g.n, "m": g.m, "coeffs": _coeff_list(P)},
        f"P(G, x) = {_poly_text(P)}\n"
        f"coefficients (constant first): {list(P.coeffs)}",
    )
    return EXIT_OK


def cmd_roots(args) -> int:
    g = _load_graph(args.file)
    p = chromatic_poly(g) if args.chromatic else flow_poly(g)
    name = "P" if args.chromatic else "F"
    if p.is_zero:
        _emit(args, {"poly": "0", "roots": None},
              f"{name}(G, x) = 0; every value is a root")
        return EXIT_OK
    prof = root_profile(p, args.tol)
    lines = [
        f"{name}(G, x) = {_poly_text(p)}",
        f"degree: {prof.degree}",
        f"integer roots (value, multiplicity): {prof.integer_roots}",
        f"distinct real roots: {prof.real_root_count}",
        f"roots in (1,2): {prof.count_in_1_2}",
        f"real-rooted: {prof.real_rooted}",
        f"omega enclosure: {_interval_str(*prof.gap_sum_enclosure)}",
    ]
    for lo, hi in prof.isolating_intervals:
        lines.append(f"  root in {_interval_str(lo, hi)}")
    _emit(args, {"coeffs": _coeff_list(p), "roots": _profile_dict(prof)},
          "\n".join(lines))
    return EXIT_OK


def cmd_invariants(args) -> int:
    g = _load_graph(args.file)
    try:
        inv = compute_invariants(g)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    d = asdict(inv)
    d["mean_high_degree"] = (
        None if inv.mean_high_degree is None else str(inv.mean_high_degree)
    )
    text = "\n".join(f"{k}: {v}" for k, v in d.items())
    _emit(args, d, text)
    return EXIT_OK


def cmd_classify(args) -> int:
    g = _load_graph(args.file)
    F = flow_poly(g)
    prof = root_profile(F, args.tol) if not F.is_zero else None
    cls = classify(g, F, prof)
    payload = {
        "in-G": cls.in_G,
        "in-G0": cls.in_G0,
        "integral_roots": cls.integral_roots,
    }
    text = "\n".join(f"{k}: {v}" for k, v in payload.items())
    _emit(args, payload, text)
    return EXIT_OK


def cmd_audit(args) -> int:
    g = _load_graph(args.file)
    faces = None
    if args.faces:
        faces = _load_faces(args.faces)
        validate_faces(g, faces)
    rep = audit_graph(g, faces=faces, tol=args.tol)
    d = report_to_dict(rep)
    if args.format == "json":
        print(json.dumps(d))
    else:
        print(f"graph: n={g.n} m={g.m}  F = {_poly_text(rep.flow)}")
        for k, v in d["classification"].items():
            print(f"{k}: {v}")
        for rec in rep.records:
            print(f"  [{rec.status:>14}] {rec.claim}: {rec.detail}")
    return EXIT_CHECK_FAILED if rep.failures else EXIT_OK


def cmd_dual(args) -> int:
    g = _load_graph(args.file)
    fs = _load_faces(args.faces)
    validate_faces(g, fs)
    dual = build_dual(g, fs)
    payload: dict = {
        "n": dual.n,
        "m": dual.m,
        "edges": [list(e) for e in dual.edges],
    }
    lines = [format_edge_list(dual).rstrip()]
    status = EXIT_OK
    if args.check:
        P = chromatic_poly(g)
        F = flow_poly(dual)
        ok = P == F.shift_up(1)
        payload["check"] = {
            "identity": "P(G, x) == x * F(dual, x)",
            "holds": ok,
        }
        lines.append(f"P(G, x) == x * F(dual, x): {ok}")
        if not ok:
            status = EXIT_CHECK_FAILED
    _emit(args, payload, "\n".join(lines))
    return status


def cmd_search(args) -> int:
    filters = []
    for part in args.filter:
        filters.extend(x for x in part.split(",") if x)
    try:
        cfg = SearchConfig(
            max_vertices=args.max_vertices,
            max_edges=args.max_edges,
            max_multiplicity=args.max_multiplicity,
            filters=tuple(filters),
            workers=args.workers,
            tol=args.tol,
            work_cap=args.work_cap,
        )
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE

    def emit_json(d):
        print(json.dumps(d), flush=True)

    def emit_text(d):
        cls = d["classification"]
        fails = [a["id"] for a in d["audits"] if a["status"] == "fail"]
        print(
            f"{d['graph']['id']}  n={d['graph']['n']} m={d['graph']['m']}"
            f"  in-G={cls['in-G']} in-G0={cls['in-G0']}"
            f"  fails={fails if fails else 'none'}"
        )

    emit = emit_json if args.format == "json" else emit_text
    try:
        summary = run_search(cfg, emit=emit)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    if args.format == "json":
        print(json.dumps({"summary": summary.to_dict()}))
    else:
        for code in summary.candidates_problem1:
            print(f"CANDIDATE problem1: {code}")
        for code in summary.candidates_problem2:
            print(f"CANDIDATE problem2: {code}")
        print(f"enumerated: {summary.enumerated}")
        for name, count in summary.stages:
            print(f"after {name}: {count}")
        print(f"survivors: {summary.survivors}")
        print(f"elapsed: {summary.elapsed_seconds:.2f}s")
    return EXIT_OK


def cmd_constants(args) -> int:
    if args.kind == "nroot":
        if args.k < 3:
            print("error: nroot is defined for k >= 3", file=sys.stderr)
            return EXIT_PARSE
        value = nroot(args.k)
        _emit(args, {"kind": "nroot", "k": args.k, "value": value}, str(value))
        return EXIT_OK
    # xi
    if args.k < 0:
        print("error: k must be nonnegative", file=sys.stderr)
        return EXIT_PARSE
    if args.k <= 2:
        _emit(args, {"kind": "xi", "k": args.k, "exact": "2"}, "2 (exact)")
        return EXIT_OK
    if args.k >= 6:
        _emit(
            args,
            {"kind": "xi", "k": args.k, "lower_bound": "32/27"},
            "lower bound 32/27 (exact value not tabulated for k >= 6)",
        )
        return EXIT_OK
    xt = xi_table(args.tol)
    lo, hi = xt.enclosure(args.k)
    _emit(
        args,
        {"kind": "xi", "k": args.k, "lo": str(lo), "hi": str(hi)},
        _interval_str(lo, hi),
    )
    return EXIT_OK


def _build_parser() -> _Parser:
    parser = _Parser(prog="flowpoly", description=__doc__)
    _add_common(parser)
    sub = parser.add_subparsers(dest="command", required=True)

    for name, func, doc in [
        ("flow", cmd_flow, "flow polynomial of a graph"),
        ("chromatic", cmd_chromatic, "chromatic polynomial of a graph"),
        ("roots", cmd_roots, "exact root analysis of the flow polynomial"),
        ("invariants", cmd_invariants, "structural invariants of a graph"),
        ("classify", cmd_classify, "class membership flags"),
        ("audit", cmd_audit, "run every applicable claim audit"),
    ]:
        p = sub.add_parser(name, help=doc)
        _add_common(p)
        p.add_argument("file", help="edge-list file")
        if name == "flow":
            p.add_argument(
                "--trace", action="store_true",
                help="print the reduction trace to stderr",
            )
        if name == "roots":
            p.add_argument(
                "--chromatic", action="store_true",
                help="analyze the chromatic polynomial instead",
            )
        if name == "audit":
            p.add_argument("--faces", help="faces file for dual-dependent audits")
        p.set_defaults(func=func)

    p = sub.add_parser("dual", help="planar dual from a face structure")
    _add_common(p)
    p.add_argument("file", help="edge-list file")
    p.add_argument("faces", help="faces file")
    p.add_argument(
        "--check", action="store_true",
        help="verify P(G, x) == x * F(dual, x) exactly",
    )
    p.set_defaults(func=cmd_dual)

    p = sub.add_parser("search", help="enumerate small multigraphs and audit them")
    _add_common(p)
    p.add_argument("--max-vertices", type=int, required=True)
    p.add_argument("--max-edges", type=int, required=True)
    p.add_argument("--max-multiplicity", type=int, default=4)
    p.add_argument(
        "--filter", action="append", default=[], metavar="NAME",
        help=f"repeatable; comma lists allowed; one of {', '.join(FILTER_NAMES)}",
    )
    p.add_argument(
        "--work-cap", type=int, default=10**8,
        help="refuse configurations estimated above this many steps",
    )
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("constants", help="certified constants")
    _add_common(p)
    p.add_argument("kind", choices=("xi", "nroot"))
    p.add_argument("k", type=int)
    p.set_defaults(func=cmd_constants)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    args.format = getattr(args, "format", "text")
    args.tol = getattr(args, "tol", Fraction(1, 10**9))
    args.workers = getattr(args, "workers", 1)
    try:
        return args.func(args)
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except ValueError as exc:
        # parse_edge_list and parse_faces raise ValueError with line numbers
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE


if __name__ == "__main__":
    sys.exit(main())
