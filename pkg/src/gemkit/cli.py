"""Command-line front end.

Every subcommand reads gems either from GEM v1 files or from the
built-in catalog (file paths win when a name is both).  Reports are
printed as plain tables or, with --json, as a versioned record
("schema": 1) with deterministically ordered keys, so identical inputs
produce byte-identical output.

Exit codes: 0 success, 1 at least one verification check failed,
2 bad input (unknown file/name, malformed gem, wrong dimension).
"""

from __future__ import annotations

import argparse
import itertools
import json
import sys
from fractions import Fraction
from pathlib import Path

from .catalog import catalog_get, catalog_list
from .constructions import (
    connected_sum,
    crystallize_double,
    double,
    interval_product,
    sphere_connector_sum,
)
from .core import (
    ColoredGraph,
    GemError,
    boundary_graph,
    census,
    face_vector,
    validate,
)
from .gemfile import export_gem, load_gem, parse_gem
from .genus import (
    ManifoldMeta,
    boundary_genus_cap,
    complexity_lower_bounds,
    gem_complexity,
    genus_lower_bounds,
    rank_upper_bound,
    regular_genus,
    weak_semi_simple,
)
from .verify import verify_bounds, verify_identities


def _load_input(token: str) -> ColoredGraph:
    path = Path(token)
    if path.is_file():
        return load_gem(path)
    try:
        return catalog_get(token).graph
    except GemError:
        raise GemError(
            f"{token!r} is neither a readable file nor a catalog entry"
        )


def _jsonable(value):
    if isinstance(value, Fraction):
        return str(value) if value.denominator != 1 else int(value)
    if isinstance(value, dict):
        return {k: _jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    return value


def _emit(record: dict, as_json: bool, lines: list[str]) -> None:
    if as_json:
        record = {"schema": 1, **record}
        print(json.dumps(_jsonable(record), sort_keys=True, indent=2))
    else:
        for line in lines:
            print(line)


def _write_graph(g: ColoredGraph, out: str | None) -> None:
    text = export_gem(g)
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _meta_from_args(g: ColoredGraph, args) -> ManifoldMeta:
    if args.rank is None:
        raise GemError("this subcommand needs --rank (fundamental group "
                       "rank of the represented manifold)")
    return ManifoldMeta.for_graph(
        g,
        m=args.rank,
        boundary_genus=args.boundary_genus,
        double_rank=args.double_rank,
    )


def _report_record(report) -> dict:
    return {
        "passed": report.passed,
        "checks": [
            {
                "name": c.name,
                "statement": c.statement,
                "left": c.left,
                "right": c.right,
                "relation": c.relation,
                "passed": c.passed,
                "sharp": c.sharp,
            }
            for c in report.checks
        ],
        "skipped": [
            {"name": s.name, "reason": s.reason} for s in report.skipped
        ],
    }


def _report_lines(title: str, report) -> list[str]:
    lines = [title]
    for c in report.checks:
        mark = "PASS" if c.passed else "FAIL"
        sharp = "  (sharp)" if c.sharp else ""
        lines.append(
            f"  [{mark}] {c.name}: {c.statement}  "
            f"[{c.left} {c.relation} {c.right}]{sharp}"
        )
    for s in report.skipped:
        lines.append(f"  [skip] {s.name}: {s.reason}")
    lines.append("overall: " + ("PASS" if report.passed else "FAIL"))
    return lines


# -- subcommand handlers ---------------------------------------------------


def _cmd_info(args) -> int:
    g = _load_input(args.input)
    report = validate(g)
    fv = face_vector(g)
    counts = census(g)
    tally = g.vertex_tally()
    pair_counts = {
        f"g_{i}{j}": counts.g_of(i, j)
        for i, j in itertools.combinations(range(g.dimension + 1), 2)
    }
    boundary_counts = {
        f"bd_g_{i}{j}": counts.boundary_g_of(i, j)
        for i, j in itertools.combinations(range(g.dimension), 2)
    } if not report.closed else {}
    record = {
        "command": "info",
        "dimension": g.dimension,
        "vertices": tally.total,
        "boundary_vertices": tally.boundary,
        "connected": report.connected,
        "bipartite": report.bipartite,
        "contracted": report.contracted,
        "closed": report.closed,
        "boundary_components": report.h,
        "is_crystallization": report.is_crystallization,
        "f_vector": list(fv.f),
        "euler_characteristic": fv.euler_characteristic,
        "pair_cycle_counts": pair_counts,
        "boundary_cycle_counts": boundary_counts,
    }
    lines = [
        f"dimension {g.dimension}, {tally.total} vertices "
        f"({tally.boundary} on the boundary)",
        f"connected={report.connected} bipartite={report.bipartite} "
        f"contracted={report.contracted}",
        f"closed={report.closed} boundary components={report.h} "
        f"crystallization={report.is_crystallization}",
        f"f-vector {list(fv.f)}  chi={fv.euler_characteristic}",
        "pair cycle counts: "
        + " ".join(f"{k}={v}" for k, v in pair_counts.items()),
    ]
    if boundary_counts:
        lines.append(
            "boundary cycle counts: "
            + " ".join(f"{k}={v}" for k, v in boundary_counts.items())
        )
    _emit(record, args.json, lines)
    return 0


def _cmd_genus(args) -> int:
    g = _load_input(args.input)
    profile = regular_genus(g)
    record = {
        "command": "genus",
        "rho": profile.rho,
        "argmin_scheme": list(profile.argmin),
        "diagnostics": list(profile.diagnostics),
    }
    lines = [f"rho(Gamma) = {profile.rho}  at scheme {profile.argmin}"]
    if args.all_permutations:
        record["schemes"] = [
            {
                "scheme": list(e.scheme),
                "chi": e.chi,
                "holes": e.holes,
                "rho": e.rho,
            }
            for e in profile.entries
        ]
        lines.append("scheme                 chi_eps  holes  rho_eps")
        for e in profile.entries:
            lines.append(
                f"{str(e.scheme):22s} {e.chi:7d} {e.holes:6d}  {e.rho}"
            )
    for diag in profile.diagnostics:
        lines.append(f"warning: {diag}")
    _emit(record, args.json, lines)
    return 0


def _cmd_bounds(args) -> int:
    g = _load_input(args.input)
    meta = _meta_from_args(g, args)
    report = verify_bounds(g, meta, k_boundary=args.boundary_complexity)
    record = {"command": "bounds", **_report_record(report)}
    _emit(record, args.json, _report_lines("bounds vs attained values:", report))
    return 0 if report.passed else 1


def _cmd_double(args) -> int:
    g = _load_input(args.input)
    doubled, _ = double(g)
    _write_graph(doubled, args.output)
    return 0


def _cmd_crystallize_double(args) -> int:
    g = _load_input(args.input)
    _write_graph(crystallize_double(g), args.output)
    return 0


def _first_internal_vertex(g: ColoredGraph) -> int:
    for v in g.vertices:
        if g.mate(v, g.dimension) is not None:
            return v
    raise GemError("gem has no internal vertex to sum at")


def _cmd_connect(args) -> int:
    g1 = _load_input(args.input)
    g2 = _load_input(args.other)
    v1 = args.at[0] if args.at else _first_internal_vertex(g1)
    v2 = args.at[1] if args.at else _first_internal_vertex(g2)
    if args.via_sphere:
        out = sphere_connector_sum(g1, v1, g2, v2)
    else:
        out = connected_sum(g1, v1, g2, v2)
    _write_graph(out, args.output)
    return 0


def _cmd_product(args) -> int:
    g = _load_input(args.input)
    _write_graph(interval_product(g), args.output)
    return 0


def _cmd_boundary(args) -> int:
    g = _load_input(args.input)
    bg = boundary_graph(g)
    if bg.is_empty():
        raise GemError("gem is closed: empty boundary")
    for q in range(bg.component_count()):
        sub = bg.component_subgraph(q)
        if args.output:
            path = Path(f"{args.output}.{q + 1}.gem")
            path.write_text(export_gem(sub))
        else:
            print(f"# boundary component {q + 1} of {bg.component_count()}")
            sys.stdout.write(export_gem(sub))
    return 0


def _cmd_verify(args) -> int:
    g = _load_input(args.input)
    identities = verify_identities(g)
    reports = [("identities", identities)]
    if args.rank is not None and not g.is_closed():
        meta = _meta_from_args(g, args)
        reports.append(
            ("bounds", verify_bounds(g, meta, k_boundary=args.boundary_complexity))
        )
    record = {
        "command": "verify",
        "passed": all(r.passed for _, r in reports),
        "reports": {name: _report_record(r) for name, r in reports},
    }
    lines: list[str] = []
    for name, r in reports:
        lines.extend(_report_lines(f"{name}:", r))
    _emit(record, args.json, lines)
    return 0 if record["passed"] else 1


def _cmd_recognize(args) -> int:
    g = _load_input(args.input)
    meta = _meta_from_args(g, args)
    report = weak_semi_simple(g, meta)
    record = {
        "command": "recognize",
        "weak_semi_simple_type_one": report.type_one,
        "weak_semi_simple_type_two": report.type_two,
        "rank_upper_bound": rank_upper_bound(g),
        "boundary_genus_cap": boundary_genus_cap(g),
    }
    lines = [
        f"weak semi-simple, type I:  {report.type_one}"
        + ("  (supply --boundary-genus to decide)" if report.type_one is None else ""),
        f"weak semi-simple, type II: {report.type_two}",
        f"fundamental group rank <= {record['rank_upper_bound']}",
        f"summed boundary genus  <= {record['boundary_genus_cap']}",
    ]
    _emit(record, args.json, lines)
    return 0


def _cmd_catalog(args) -> int:
    if args.action == "list":
        record = {"command": "catalog-list", "entries": catalog_list()}
        _emit(record, args.json, catalog_list())
        return 0
    entry = catalog_get(args.name)
    if args.action == "show":
        record = {
            "command": "catalog-show",
            "name": entry.name,
            "note": entry.note,
            "dimension": entry.graph.dimension,
            "vertices": entry.graph.vertex_count,
            "meta": None
            if entry.meta is None
            else {
                "h": entry.meta.h,
                "chi": entry.meta.chi,
                "m": entry.meta.m,
                "boundary_genus": entry.meta.boundary_genus,
                "double_rank": entry.meta.double_rank,
            },
            "expected": {k: v for k, v in sorted(entry.expected.items())},
            "connector_vertices": entry.connector_vertices,
        }
        lines = [
            f"{entry.name}: dimension {entry.graph.dimension}, "
            f"{entry.graph.vertex_count} vertices",
            entry.note,
        ]
        if entry.meta is not None:
            lines.append(
                f"meta: h={entry.meta.h} chi={entry.meta.chi} m={entry.meta.m} "
                f"boundary_genus={entry.meta.boundary_genus} "
                f"double_rank={entry.meta.double_rank}"
            )
        if entry.expected:
            lines.append(
                "expected: "
                + " ".join(f"{k}={v}" for k, v in sorted(entry.expected.items()))
            )
        if entry.connector_vertices:
            lines.append(f"connector vertices: {entry.connector_vertices}")
        _emit(record, args.json, lines)
        return 0
    # export
    _write_graph(entry.graph, args.output)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gemkit",
        description="Invariants, constructions and verification for "
        "edge-colored gem graphs of PL manifolds.",
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)

    def add_meta_flags(p):
        p.add_argument("--rank", type=int, default=None,
                       help="fundamental group rank m of the manifold")
        p.add_argument("--boundary-genus", type=int, default=None,
                       help="summed regular genus of the boundary")
        p.add_argument("--double-rank", type=int, default=None,
                       help="fundamental group rank of the double")
        p.add_argument("--boundary-complexity", type=int, default=None,
                       help="gem-complexity of the boundary manifold")

    def add_common(p, output=False):
        p.add_argument("input", help="GEM v1 file or catalog entry name")
        p.add_argument("--json", action="store_true",
                       help="emit a versioned JSON record")
        if output:
            p.add_argument("-o", "--output", default=None,
                           help="write the resulting gem to this file")

    p = sub.add_parser("info", help="validation flags, tallies, censuses")
    add_common(p)
    p.set_defaults(handler=_cmd_info)

    p = sub.add_parser("genus", help="regular genus over all schemes")
    add_common(p)
    p.add_argument("--all-permutations", action="store_true",
                   help="print the per-scheme table")
    p.set_defaults(handler=_cmd_genus)

    p = sub.add_parser("bounds", help="lower bounds vs attained values")
    add_common(p)
    add_meta_flags(p)
    p.set_defaults(handler=_cmd_bounds)

    p = sub.add_parser("double", help="double along the boundary")
    add_common(p, output=True)
    p.set_defaults(handler=_cmd_double)

    p = sub.add_parser("crystallize-double",
                       help="double, then contract to a crystallization")
    add_common(p, output=True)
    p.set_defaults(handler=_cmd_crystallize_double)

    p = sub.add_parser("connect", help="connected sum of two gems")
    add_common(p, output=True)
    p.add_argument("other", help="second GEM v1 file or catalog name")
    p.add_argument("--via-sphere", action="store_true",
                   help="route the sum through the built-in sphere connector")
    p.add_argument("--at", type=int, nargs=2, metavar=("V1", "V2"),
                   help="summing vertices (default: first internal vertex "
                   "of each input)")
    p.set_defaults(handler=_cmd_connect)

    p = sub.add_parser("product",
                       help="interval product of a closed 3-manifold gem")
    add_common(p, output=True)
    p.set_defaults(handler=_cmd_product)

    p = sub.add_parser("boundary", help="export each boundary component")
    add_common(p, output=True)
    p.set_defaults(handler=_cmd_boundary)

    p = sub.add_parser("verify", help="identity and bound ledger")
    add_common(p)
    add_meta_flags(p)
    p.set_defaults(handler=_cmd_verify)

    p = sub.add_parser("recognize",
                       help="weak semi-simplicity and combinatorial caps")
    add_common(p)
    add_meta_flags(p)
    p.set_defaults(handler=_cmd_recognize)

    p = sub.add_parser("catalog", help="built-in gem catalog")
    p.add_argument("action", choices=["list", "show", "export"])
    p.add_argument("name", nargs="?", default=None)
    p.add_argument("--json", action="store_true")
    p.add_argument("-o", "--output", default=None)
    p.set_defaults(handler=_cmd_catalog)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.subcommand == "catalog" and args.action != "list" and not args.name:
        parser.error("catalog show/export need an entry name")
    try:
        return args.handler(args)
    except (GemError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
