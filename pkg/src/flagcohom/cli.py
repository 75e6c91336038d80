"""Command-line interface.

Subcommands: describe, betti, line, cohom, torelli, kuranishi.  Output
formats: table (default), json, csv.  Exit codes: 0 success, 2 invalid
input, 3 enumeration cap exceeded.  The enumeration cap comes from --cap,
else the FLAGCOHOM_CAP environment variable, else 10^6.  Big integers are
serialized as decimal strings in JSON; rationals as "p/q".
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from .bott import (
    cohomology_table,
    line_bundle_cohomology,
    hodge_diamond,
    table_csv_rows,
    table_json_dict,
)
from .errors import CalcError, CapExceeded
from .parabolic import build_parabolic
from .root_system import LieType, build_root_system
from .torelli import (
    CoverSpec,
    SMOOTHNESS_NOTE,
    check_torelli,
    kuranishi,
    torelli_json_dict,
)
from .weyl import DEFAULT_CAP, coset_count, levi_components, weyl_order

_RANGE_FLAGS = ("--q", "--k")


def _parse_range(text: str) -> tuple[int, int]:
    try:
        if ".." in text:
            lo, hi = text.split("..", 1)
            return int(lo), int(hi)
        v = int(text)
        return v, v
    except ValueError:
        raise argparse.ArgumentTypeError(
            f"expected an integer or a..b range, got {text!r}"
        ) from None


def _range_values(r: tuple[int, int]) -> range:
    return range(r[0], r[1] + 1)


def _pretty_frac(x: Fraction) -> str:
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def _json_frac(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


def _render_json(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


def _render_kv(pairs, fmt: str) -> str:
    if fmt == "json":
        return _render_json(dict(pairs))
    if fmt == "csv":
        lines = ["key,value"]
        lines += [f"{k},{v}" for k, v in pairs]
        return "\n".join(lines) + "\n"
    return "\n".join(f"{k}: {v}" for k, v in pairs) + "\n"


def _render_grid(headers, rows) -> str:
    cells = [headers] + [[str(x) for x in row] for row in rows]
    widths = [max(len(r[c]) for r in cells) for c in range(len(headers))]
    lines = ["  ".join(val.ljust(w) for val, w in zip(row, widths)).rstrip() for row in cells]
    return "\n".join(lines) + "\n"


def _add_common(sub):
    sub.add_argument("--type", required=True, help="family letter A..G")
    sub.add_argument("--rank", required=True, type=int)
    sub.add_argument("--node", required=True, type=int, help="simple root index, 1-based")
    sub.add_argument("--format", choices=("table", "json", "csv"), default="table")
    sub.add_argument("--cap", type=int, default=None, help="coset enumeration cap")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="flagcohom",
        description="Exact cohomology of twisted forms on G/P and cyclic-cover bounds",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("describe", help="group and parabolic constants")
    _add_common(p)

    p = sub.add_parser("betti", help="Hodge diamond diagonal h^q(Omega^q)")
    _add_common(p)

    p = sub.add_parser("line", help="cohomology of the line bundles O(k)")
    _add_common(p)
    p.add_argument("--k", required=True, type=_parse_range, help="inclusive range a..b")

    p = sub.add_parser("cohom", help="cohomology table of Omega^q(k)")
    _add_common(p)
    p.add_argument("--q", required=True, type=_parse_range, help="inclusive range a..b")
    p.add_argument("--k", required=True, type=_parse_range, help="inclusive range a..b")

    p = sub.add_parser("torelli", help="effective infinitesimal-Torelli bound")
    _add_common(p)
    p.add_argument("--d", required=True, type=int, help="degree of L = O(d)")
    p.add_argument("--N", required=True, type=int, help="covering degree")

    p = sub.add_parser("kuranishi", help="first-order deformation count of the cover")
    _add_common(p)
    p.add_argument("--d", required=True, type=int)
    p.add_argument("--N", required=True, type=int)
    p.add_argument("--kuranishi-sum-limit", choices=("N", "N-1"), default="N",
                   dest="sum_limit")

    return parser


def _resolve_cap(args) -> int:
    if args.cap is not None:
        return args.cap
    env = os.environ.get("FLAGCOHOM_CAP", "").strip()
    if env:
        return int(env)
    return DEFAULT_CAP


def _parabolic_from(args):
    rs = build_root_system(LieType(args.type.strip().upper(), args.rank))
    return build_parabolic(rs, args.node)


def _cmd_describe(args) -> str:
    pd = _parabolic_from(args)
    rs = pd.rs
    comps = levi_components(rs, pd.node)
    levi = [str(t) for t in comps]
    if args.format == "json":
        return _render_json(
            {
                "group": str(rs.lie_type),
                "node": pd.node,
                "dim": pd.dim_x,
                "positive_roots": len(rs.positive_roots),
                "compact_roots": len(pd.compact_roots),
                "c": pd.c,
                "d0": pd.d0,
                "mu": _json_frac(pd.mu),
                "weyl_order": str(weyl_order(rs.lie_type)),
                "coset_count": str(coset_count(rs, pd.node)),
                "levi": levi,
            }
        )
    pairs = [
        ("group", str(rs.lie_type)),
        ("node", pd.node),
        ("dim", pd.dim_x),
        ("positive_roots", len(rs.positive_roots)),
        ("compact_roots", len(pd.compact_roots)),
        ("c", pd.c),
        ("d0", pd.d0),
        ("mu", _pretty_frac(pd.mu)),
        ("weyl_order", weyl_order(rs.lie_type)),
        ("coset_count", coset_count(rs, pd.node)),
        ("levi", " x ".join(levi) if levi else "trivial"),
    ]
    return _render_kv(pairs, args.format)


def _cmd_betti(args) -> str:
    pd = _parabolic_from(args)
    sizes = hodge_diamond(pd, cap=_resolve_cap(args))
    if args.format == "json":
        return _render_json(
            {
                "group": str(pd.rs.lie_type),
                "node": pd.node,
                "dim": pd.dim_x,
                "sizes": sizes,
            }
        )
    if args.format == "csv":
        lines = ["q,h"] + [f"{q},{b}" for q, b in enumerate(sizes)]
        return "\n".join(lines) + "\n"
    return _render_grid(["q", "h"], list(enumerate(sizes)))


def _cmd_line(args) -> str:
    pd = _parabolic_from(args)
    ks = _range_values(args.k)
    vectors = [(k, line_bundle_cohomology(pd, k)) for k in ks]
    if args.format == "json":
        return _render_json(
            {
                "group": str(pd.rs.lie_type),
                "node": pd.node,
                "dim": pd.dim_x,
                "cells": [{"k": k, "h": [str(x) for x in v]} for k, v in vectors],
            }
        )
    if args.format == "csv":
        lines = ["k,i,h"]
        for k, v in vectors:
            for i, x in enumerate(v):
                if x:
                    lines.append(f"{k},{i},{x}")
        return "\n".join(lines) + "\n"
    headers = ["k"] + [f"h{i}" for i in range(pd.dim_x + 1)]
    rows = [[k] + list(v) for k, v in vectors]
    return _render_grid(headers, rows)


def _cmd_cohom(args) -> str:
    pd = _parabolic_from(args)
    table = cohomology_table(
        pd, _range_values(args.q), _range_values(args.k), cap=_resolve_cap(args)
    )
    if args.format == "json":
        return _render_json(table_json_dict(table))
    if args.format == "csv":
        return "\n".join(table_csv_rows(table)) + "\n"
    headers = ["q", "k"] + [f"h{i}" for i in range(pd.dim_x + 1)]
    rows = [[q, k] + list(v) for (q, k), v in table.entries.items()]
    return _render_grid(headers, rows)


def _cmd_torelli(args) -> str:
    pd = _parabolic_from(args)
    spec = CoverSpec(pd=pd, d=args.d, N=args.N)
    report = check_torelli(spec)
    kur = kuranishi(spec)
    if args.format == "json":
        return _render_json(torelli_json_dict(spec, report, kur))
    if report.reason == "exceeds_mu":
        verdict = f"holds (bound {report.bound} > mu {_pretty_frac(report.mu)})"
    elif report.reason == "exceeds_dim":
        verdict = f"holds (bound {report.bound} > n-1 = {report.n_minus_1})"
    else:
        verdict = (
            f"not established by the theorem (bound {report.bound} <= "
            f"mu {_pretty_frac(report.mu)} and <= n-1 = {report.n_minus_1})"
        )
    pairs = [
        ("group", str(pd.rs.lie_type)),
        ("node", pd.node),
        ("d", spec.d),
        ("N", spec.N),
        ("bound", report.bound),
        ("mu", _pretty_frac(report.mu)),
        ("n", pd.dim_x),
        ("torelli", verdict),
        ("h0_normal", kur.h0_normal),
        ("h1_tangent", "unknown" if kur.h1_tangent is None else kur.h1_tangent),
        ("note", SMOOTHNESS_NOTE),
    ]
    return _render_kv(pairs, args.format)


def _cmd_kuranishi(args) -> str:
    pd = _parabolic_from(args)
    spec = CoverSpec(pd=pd, d=args.d, N=args.N)
    kur = kuranishi(spec, sum_limit=args.sum_limit)
    pairs = [
        ("group", str(pd.rs.lie_type)),
        ("node", pd.node),
        ("d", spec.d),
        ("N", spec.N),
        ("sum_limit", args.sum_limit),
        ("h0_normal", str(kur.h0_normal)),
        ("tau_vanishes", kur.tau_vanishes),
        ("h1_tangent", "unknown" if kur.h1_tangent is None else str(kur.h1_tangent)),
    ]
    if args.format == "json":
        return _render_json(dict(pairs))
    if args.format == "table":
        shown = [(k, str(v).lower() if isinstance(v, bool) else v) for k, v in pairs]
        return _render_kv(shown, "table")
    return _render_kv(pairs, args.format)


_DISPATCH = {
    "describe": _cmd_describe,
    "betti": _cmd_betti,
    "line": _cmd_line,
    "cohom": _cmd_cohom,
    "torelli": _cmd_torelli,
    "kuranishi": _cmd_kuranishi,
}


def _merge_range_flags(argv: list[str]) -> list[str]:
    # lets "--k -3..-3" survive argparse, which would read "-3..-3" as a flag
    out = []
    i = 0
    while i < len(argv):
        tok = argv[i]
        if tok in _RANGE_FLAGS and i + 1 < len(argv):
            out.append(f"{tok}={argv[i + 1]}")
            i += 2
        else:
            out.append(tok)
            i += 1
    return out


def main(argv=None) -> int:
    if argv is None:
        argv = sys.argv[1:]
    parser = _build_parser()
    args = parser.parse_args(_merge_range_flags(list(argv)))
    try:
        out = _DISPATCH[args.command](args)
    except CapExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except CalcError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    sys.stdout.write(out)
    return 0


if __name__ == "__main__":
    sys.exit(main())
