"""Command-line interface.

Exit codes: 0 success, 1 usage or I/O error, 2 validation error,
3 conjecture counterexample found (witness dumped to stdout).
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import constructions
from .audit import AuditReport, audit
from .geometry import GeometryError
from .hypergraph import SegmentHypergraph, ValidationError
from .io import DocumentError, parse, serialize, to_document
from .lp import chain_report, verify_slackness
from .render import DiagramSpec, render_svg
from .search import enumerate_intersecting, enumerate_ratio_tuples, generate_intersecting, generate_random
from .solvers import NodeLimitExceeded, chromatic_number, covering_number, matching_number

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_VALIDATION = 2
EXIT_COUNTEREXAMPLE = 3


def _frac(x: Fraction) -> str:
    return str(x)


def _read_instance(path: str):
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return parse(fh.read())
    except OSError as e:
        raise SystemExit2(EXIT_USAGE, f"cannot read {path}: {e}")
    except DocumentError as e:
        raise SystemExit2(EXIT_VALIDATION, f"invalid document {path}: {e}")
    except (ValidationError, GeometryError) as e:
        raise SystemExit2(EXIT_VALIDATION, f"invalid instance {path}: {e}")


class SystemExit2(Exception):
    def __init__(self, code: int, message: str):
        super().__init__(message)
        self.code = code
        self.message = message


def _write_out(text: str, path: str | None) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


def _cmd_analyze(args) -> int:
    H = _read_instance(args.file)
    limit = args.node_limit
    try:
        tau, cover = covering_number(H, node_limit=limit)
        nu, matching = matching_number(H, node_limit=limit)
        chi, coloring = chromatic_number(H, node_limit=limit)
    except NodeLimitExceeded as e:
        print(f"unknown: {e}", file=sys.stderr)
        return EXIT_USAGE
    payload = {
        "tau": tau,
        "nu": nu,
        "chi": chi,
        "cover": sorted(list(v) if isinstance(v, tuple) else v for v in cover.vertices),
        "matching": sorted(matching.edges),
        "coloring": {str(k): v for k, v in sorted(coloring.assignment.items(), key=lambda kv: str(kv[0]))},
    }
    if args.fractional:
        rep = chain_report(H, node_limit=limit)
        slack = verify_slackness(H, rep.fractional_matching, rep.fractional_cover)
        payload["nu_star"] = _frac(rep.nu_star)
        payload["tau_star"] = _frac(rep.tau_star)
        payload["slackness_ok"] = slack.ok
    if args.json:
        print(json.dumps(payload, sort_keys=True))
    else:
        print(f"tau = {tau}  cover = {payload['cover']}")
        print(f"nu  = {nu}  matching = {payload['matching']}")
        print(f"chi = {chi}")
        if args.fractional:
            print(f"nu* = tau* = {payload['nu_star']}  (slackness ok: {payload['slackness_ok']})")
    return EXIT_OK


_CATALOG = {
    "k4": lambda a: constructions.k4_example(),
    "triangle": lambda a: constructions.triangle_R(),
    "nonfano": lambda a: constructions.nonfano_S(),
    "grid-face": lambda a: constructions.grid_face(),
    "cube": lambda a: constructions.cube_C(),
    "cube-projected": lambda a: constructions.cube_projected(),
    "lowerbound": lambda a: constructions.lowerbound_family(a.r or 5),
    "r4-example": lambda a: constructions.search_r4_example(a.box or 6),
    "six-edge-r5": lambda a: constructions.search_six_edge_r5(a.box or 5),
    "random": lambda a: generate_random(a.r or 3, a.edges, a.box or 6, a.seed),
    "intersecting": lambda a: generate_intersecting(a.r or 3, a.edges, a.box or 6, a.seed),
}


def _cmd_construct(args) -> int:
    name = args.name
    if name not in _CATALOG:
        raise SystemExit2(EXIT_USAGE, f"unknown construction {name!r}; choose from {sorted(_CATALOG)}")
    H = _CATALOG[name](args)
    if H is None:
        print(f"inconclusive: no instance found within box {args.box} (box too small?)", file=sys.stderr)
        return EXIT_USAGE
    _write_out(serialize(H, metadata={"name": name}), args.output)
    return EXIT_OK


def _cmd_search(args) -> int:
    if args.what == "ratio-tuples":
        tuples = enumerate_ratio_tuples(args.r)
        if args.json:
            for t in tuples:
                print(json.dumps([_frac(b) for b in t.as_tuple()]))
        else:
            for t in tuples:
                print("(" + ", ".join(_frac(b) for b in t.as_tuple()) + ")")
        return EXIT_OK
    if args.what == "enumerate":
        for H in enumerate_intersecting(args.r, args.box):
            sys.stdout.write(serialize(H))
        return EXIT_OK
    raise SystemExit2(EXIT_USAGE, f"unknown search mode {args.what!r}")


def _report_payload(rep: AuditReport) -> dict:
    return {
        "instance": rep.instance_id,
        "ok": rep.ok,
        "checks": [
            {
                "name": c.name,
                "expected": c.expected,
                "observed": c.observed,
                "passed": c.passed,
                "conjecture": c.conjecture,
            }
            for c in rep.checks
        ],
        "counterexample": rep.counterexample,
    }


def _audit_exit(reports: list[AuditReport], as_json: bool) -> int:
    worst = EXIT_OK
    for rep in reports:
        if as_json:
            print(json.dumps(_report_payload(rep), sort_keys=True))
        else:
            for c in rep.checks:
                status = "PASS" if c.passed else ("CONJECTURE-FAIL" if c.conjecture else "FAIL")
                print(f"[{status}] {rep.instance_id}: {c.name}: expected {c.expected}, observed {c.observed}")
        if rep.conjecture_failures:
            worst = EXIT_COUNTEREXAMPLE
            if rep.counterexample is not None:
                print(json.dumps({"counterexample": rep.counterexample}, sort_keys=True))
        elif rep.theorem_failures and worst == EXIT_OK:
            worst = EXIT_VALIDATION
    return worst


def _cmd_verify(args) -> int:
    reports = []
    if args.suite:
        catalog = [
            ("k4", constructions.k4_example()),
            ("triangle", constructions.triangle_R()),
            ("nonfano", constructions.nonfano_S()),
            ("grid-face", constructions.grid_face()),
            ("cube-projected", constructions.cube_projected()),
            ("lowerbound-5", constructions.lowerbound_family(5)),
            ("lowerbound-6", constructions.lowerbound_family(6)),
        ]
        for name, H in catalog:
            reports.append(audit(H, instance_id=name, node_limit=args.node_limit))
    else:
        if not args.file:
            raise SystemExit2(EXIT_USAGE, "verify needs a file or --suite")
        H = _read_instance(args.file)
        reports.append(audit(H, instance_id=args.file, node_limit=args.node_limit))
    return _audit_exit(reports, args.json)


def _cmd_render(args) -> int:
    H = _read_instance(args.file)
    if not isinstance(H, SegmentHypergraph):
        raise SystemExit2(EXIT_VALIDATION, "render supports segment instances only")
    overlays = set((args.overlay or "").split(",")) - {""}
    unknown = overlays - {"cover", "matching", "coloring"}
    if unknown:
        raise SystemExit2(EXIT_USAGE, f"unknown overlays: {sorted(unknown)}")
    cover = matching = coloring = None
    if "cover" in overlays:
        _, w = covering_number(H)
        cover = w.vertices
    if "matching" in overlays:
        _, w = matching_number(H)
        matching = w.edges
    if "coloring" in overlays:
        _, coloring = chromatic_number(H)
    svg = render_svg(DiagramSpec(H, cover=cover, matching=matching, coloring=coloring))
    _write_out(svg, args.output)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="seghyp",
        description="Exact analysis of lattice segment hypergraphs: tau, nu, chi, fractional LP, audits.",
    )
    p.add_argument("--threads", type=int, default=1, help="accepted for compatibility; affects nothing")
    sub = p.add_subparsers(dest="command", required=True)

    a = sub.add_parser("analyze", help="compute tau, nu, chi (and fractional invariants) of an instance")
    a.add_argument("file")
    a.add_argument("--fractional", action="store_true")
    a.add_argument("--json", action="store_true")
    a.add_argument("--node-limit", type=int, default=None)
    a.set_defaults(fn=_cmd_analyze)

    c = sub.add_parser("construct", help="emit a named construction as a JSON document")
    c.add_argument("name", help=f"one of {sorted(_CATALOG)}")
    c.add_argument("--r", type=int, default=None)
    c.add_argument("--box", type=int, default=None)
    c.add_argument("--edges", type=int, default=5)
    c.add_argument("--seed", type=int, default=0)
    c.add_argument("-o", "--output", default=None)
    c.set_defaults(fn=_cmd_construct)

    s = sub.add_parser("search", help="ratio-tuple enumeration or exhaustive intersecting-family search")
    s.add_argument("what", choices=["ratio-tuples", "enumerate"])
    s.add_argument("--r", type=int, required=True)
    s.add_argument("--box", type=int, default=3)
    s.add_argument("--json", action="store_true")
    s.set_defaults(fn=_cmd_search)

    v = sub.add_parser("verify", help="run theorem/conjecture audits")
    v.add_argument("file", nargs="?")
    v.add_argument("--suite", action="store_true", help="audit the built-in construction catalog")
    v.add_argument("--json", action="store_true")
    v.add_argument("--node-limit", type=int, default=None)
    v.set_defaults(fn=_cmd_verify)

    r = sub.add_parser("render", help="render an instance (with witness overlays) to SVG")
    r.add_argument("file")
    r.add_argument("--overlay", default=None, help="comma-separated: cover,matching,coloring")
    r.add_argument("-o", "--output", default=None)
    r.set_defaults(fn=_cmd_render)
    return p


def cli(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code not in (0, None) else EXIT_OK
    try:
        return args.fn(args)
    except SystemExit2 as e:
        print(f"error: {e.message}", file=sys.stderr)
        return e.code
    except (DocumentError, ValidationError, GeometryError) as e:
        print(f"validation error: {e}", file=sys.stderr)
        return EXIT_VALIDATION
    except OSError as e:
        print(f"io error: {e}", file=sys.stderr)
        return EXIT_USAGE


def main() -> None:
    sys.exit(cli())


if __name__ == "__main__":
    main()
