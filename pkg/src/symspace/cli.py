"""Command-line interface.

Subcommands: rootsystem, space, table, cut, product, verify.  Exact
values are always printed alongside 12-digit decimals.  Exit codes:
0 success, 1 verification failure, 2 usage or parse error, 3 missing
data (e.g. no canonical metric).
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import catalog, geometry, killing, polytope, roots, verify
from .linalg import DimensionMismatch, format_rational

FORMATS = ("text", "markdown", "json", "tsv")


def _parse_fraction(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as e:
        raise catalog.InvalidParams(f"bad rational {text!r}") from e


def _emit_rows(header: list[str], rows: list[list[str]], fmt: str) -> str:
    if fmt == "tsv":
        return "\n".join(["\t".join(header)] + ["\t".join(r) for r in rows])
    if fmt == "markdown":
        lines = ["| " + " | ".join(header) + " |",
                 "|" + "|".join(" --- " for _ in header) + "|"]
        lines += ["| " + " | ".join(r) + " |" for r in rows]
        return "\n".join(lines)
    widths = [max(len(h), *(len(r[i]) for r in rows)) if rows else len(h)
              for i, h in enumerate(header)]
    lines = ["  ".join(h.ljust(w) for h, w in zip(header, widths))]
    lines += ["  ".join(c.ljust(w) for c, w in zip(r, widths)) for r in rows]
    return "\n".join(lines)


def cmd_rootsystem(args) -> int:
    kind = roots.parse_kind(args.kind)
    rs = roots.build(kind)
    poly = polytope.build_polytope(rs)
    data = roots.to_json_dict(rs)
    data["polytope"] = polytope.to_json_dict(poly)
    if kind.is_reduced:
        data["killing"] = killing.to_json_dict(killing.killing_data(rs))
    if args.format == "json":
        print(json.dumps(data, indent=2))
        return 0
    rows = [
        ["kind", str(rs.kind)],
        ["rank", str(rs.rank)],
        ["root count", str(len(rs.roots))],
        ["indivisible roots", str(len(rs.indivisible_roots))],
        ["highest root", " ".join(map(str, rs.highest_root))],
        ["gram", "; ".join(",".join(r) for r in rs.gram.to_json())],
        ["vertex norms sq", " ".join(format_rational(v) for v in poly.vertex_norms_sq)],
        ["i_sq", format_rational(poly.i_sq)],
        ["d_sq", format_rational(poly.d_sq)],
        ["argmax vertex", str(poly.argmax_vertex)],
    ]
    if kind.is_reduced:
        kd = killing.killing_data(rs)
        rows.append(["killing delta_sq", format_rational(kd.delta_sq)])
        rows.append(["perp subsystem", " ".join(str(k) for k in kd.perp_subsystem) or "-"])
    print(_emit_rows(["field", "value"], rows, args.format))
    return 0


def _metric_from_args(args) -> geometry.MetricSpec:
    chosen = [x for x in (args.epsilon, args.ric, "c" if args.canonical else None)
              if x is not None]
    if len(chosen) > 1:
        raise catalog.InvalidParams("use at most one of --epsilon/--ric/--canonical")
    if args.epsilon is not None:
        return geometry.MetricSpec.epsilon(_parse_fraction(args.epsilon))
    if args.ric is not None:
        return geometry.MetricSpec.ricci(_parse_fraction(args.ric))
    if args.canonical:
        return geometry.MetricSpec.canonical()
    return geometry.DEFAULT_METRIC


def _report_rows(rep) -> list[list[str]]:
    e = rep.space
    return [
        ["label", str(e.label)],
        ["space", e.name],
        ["type", e.space_type],
        ["ambient", e.ambient_name],
        ["restricted", e.restricted_name],
        ["restriction factor", format_rational(e.restriction_factor)],
        ["psi_sq (killing)", format_rational(rep.psi_sq)],
        ["epsilon", format_rational(rep.epsilon)],
        ["ricci", format_rational(rep.ricci)],
        ["kappa", format_rational(rep.kappa)],
        ["injectivity radius", str(rep.injectivity_radius)],
        ["diameter", str(rep.diameter)],
    ]


def cmd_space(args) -> int:
    rep = geometry.report(args.label, _metric_from_args(args))
    if args.format == "json":
        print(json.dumps(geometry.report_json_dict(rep), indent=2))
        return 0
    print(_emit_rows(["field", "value"], _report_rows(rep), args.format))
    return 0


def cmd_table(args) -> int:
    metric = _metric_from_args(args)
    entries = catalog.enumerate_table(args.which, args.max_param)
    if args.format == "json":
        print(json.dumps([geometry.report_json_dict(geometry.report(e.label, metric))
                          for e in entries], indent=2))
        return 0
    header = ["type", "space", "sigma", "psi_sq", "i", "i_dec", "d", "d_dec"]
    rows = []
    for e in entries:
        rep = geometry.report(e.label, metric)
        rows.append([
            str(e.label), e.name, e.restricted_name,
            format_rational(rep.psi_sq),
            rep.injectivity_radius.exact_str(), rep.injectivity_radius.decimal_str(),
            rep.diameter.exact_str(), rep.diameter.decimal_str(),
        ])
    print(_emit_rows(header, rows, args.format))
    return 0


def cmd_cut(args) -> int:
    entry = catalog.resolve(args.label)
    point = tuple(_parse_fraction(c) for c in args.point.split(","))
    details = geometry.cut_details(entry.label, point)
    data = {
        "label": str(entry.label),
        "point": [format_rational(c) for c in point],
        "classification": str(details["classification"]),
        "dominant_representative": [format_rational(c)
                                    for c in details["dominant_representative"]],
        "reflections": details["reflections"],
        "conjugate": details["conjugate"],
    }
    if args.format == "json":
        print(json.dumps(data, indent=2))
        return 0
    rows = [[k, v if isinstance(v, str) else json.dumps(v)] for k, v in data.items()]
    print(_emit_rows(["field", "value"], rows, args.format))
    return 0


def cmd_product(args) -> int:
    metric = _metric_from_args(args)
    reps = [geometry.report(label, metric) for label in args.labels]
    inj, diam = geometry.product(reps)
    data = {
        "factors": [str(r.space.label) for r in reps],
        "injectivity_radius": inj.to_json(),
        "diameter": diam.to_json(),
    }
    if args.format == "json":
        print(json.dumps(data, indent=2))
        return 0
    rows = [["factors", " ".join(data["factors"])],
            ["injectivity radius", str(inj)],
            ["diameter", str(diam)]]
    print(_emit_rows(["field", "value"], rows, args.format))
    return 0


def cmd_verify(args) -> int:
    reports = verify.run_all(args.seed, samples=args.samples,
                             table_bound=args.max_param)
    from .oracle import TSV_HEADER
    print(TSV_HEADER)
    for r in reports:
        print(r.tsv_row())
    failed = [r for r in reports if not r.passed]
    print(f"# {len(reports) - len(failed)}/{len(reports)} checks passed")
    return 1 if failed else 0


def build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(prog="symspace",
                                  description="Exact geometry of compact symmetric spaces")
    sub = top.add_subparsers(dest="command", required=True)

    def add_format(p):
        p.add_argument("--format", choices=FORMATS, default="text")

    def add_metric(p):
        p.add_argument("--epsilon", help="metric scale, a positive rational")
        p.add_argument("--ric", help="Ricci constant, a positive rational")
        p.add_argument("--canonical", action="store_true",
                       help="use the catalog's canonical metric preset")

    p = sub.add_parser("rootsystem", help="inspect a root system and its polytope")
    p.add_argument("kind")
    add_format(p)
    p.set_defaults(func=cmd_rootsystem)

    p = sub.add_parser("space", help="geometry report for one space")
    p.add_argument("label")
    add_metric(p)
    add_format(p)
    p.set_defaults(func=cmd_space)

    p = sub.add_parser("table", help="regenerate a classification table")
    p.add_argument("which", choices=("4.1", "4.2"))
    p.add_argument("--max-param", type=int, default=8)
    add_metric(p)
    add_format(p)
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("cut", help="classify a Cartan-slice point")
    p.add_argument("label")
    p.add_argument("--point", required=True, help="comma-separated rationals")
    add_format(p)
    p.set_defaults(func=cmd_cut)

    p = sub.add_parser("product", help="geometry of a product of spaces")
    p.add_argument("labels", nargs="+")
    add_metric(p)
    add_format(p)
    p.set_defaults(func=cmd_product)

    p = sub.add_parser("verify", help="run oracles and table reproduction")
    p.add_argument("--seed", type=int, default=20260810)
    p.add_argument("--samples", type=int, default=100_000)
    p.add_argument("--max-param", type=int, default=12)
    p.set_defaults(func=cmd_verify)
    return top


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except geometry.NoCanonicalMetric as e:
        print(f"error: {e}", file=sys.stderr)
        return 3
    except (catalog.InvalidParams, catalog.MissingSatakeData, roots.InvalidRank,
            DimensionMismatch, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
