"""Command-line frontend: catalog dumps, graph builds, classification, verification.

Exit codes: 0 success, 1 verification failure, 2 usage error.  Output is
deterministic byte-for-byte for identical flags.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from .catalog import Catalog, CatalogError, build_catalog
from .elements import (
    ElementClass,
    SearchBudgetError,
    construct_witness,
    exists_class,
    search_witness,
)
from .graphs import (
    IRR_ID,
    StructuralError,
    build_k3_graph,
    build_k4_graph,
    graph_dot,
    graph_json_dict,
)
from .verification import SUITES, run_suites

USAGE_ERROR = 2
VERIFY_ERROR = 1


def _write_out(text: str, out: Optional[str]) -> None:
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _catalog_json(cat: Catalog) -> str:
    entries = []
    for v in cat:
        entries.append(
            {
                "id": v.vid,
                "r": v.r,
                "d": v.d,
                "type": v.vtype,
                "s": v.diag_s,
                "t": v.diag_t,
                "lplus": v.lplus.to_json_dict(),
                "lminus": v.lminus.to_json_dict(),
            }
        )
    return json.dumps({"schema": "k4graph/1", "catalog": entries}, indent=1) + "\n"


def _catalog_table(cat: Catalog) -> str:
    header = f"{'vertex':14s} {'r':>2s} {'d':>2s} type {'s':>2s} {'t':>2s}  L+ / L-"
    lines = [header, "-" * len(header)]
    for v in cat:
        lplus = "+".join(v.lplus_summands)
        lminus = "+".join(v.lminus_summands)
        lines.append(
            f"{v.vid:14s} {v.r:2d} {v.d:2d} {v.vtype:4s} {v.diag_s:2d} {v.diag_t:2d}  "
            f"{lplus} / {lminus}"
        )
    return "\n".join(lines) + "\n"


def cmd_catalog(args: argparse.Namespace) -> int:
    cat = build_catalog()
    if args.format == "json":
        _write_out(_catalog_json(cat), args.out)
    else:
        _write_out(_catalog_table(cat), args.out)
    return 0


def cmd_build(args: argparse.Namespace) -> int:
    cat = build_catalog()
    try:
        if args.graph == "k3":
            g = build_k3_graph(cat)
        else:
            g, _ = build_k4_graph(cat)
    except StructuralError as exc:
        print(f"structural verification failed: {exc}", file=sys.stderr)
        return VERIFY_ERROR
    if args.format == "json":
        text = json.dumps(graph_json_dict(g, cat), indent=1) + "\n"
    else:
        text = graph_dot(g, cat)
    _write_out(text, args.out)
    irregular = IRR_ID if args.graph == "k4" else "[8S]_I"
    summary = f"vertices={len(g.vertex_ids)} edges={len(g.edges)} irregular={irregular}"
    print(summary, file=sys.stderr if not args.out else sys.stdout)
    return 0


def cmd_classify(args: argparse.Namespace) -> int:
    cat = build_catalog()
    try:
        v = cat.by_id(args.vertex)
    except CatalogError:
        print(f"unknown vertex id {args.vertex!r}", file=sys.stderr)
        return USAGE_ERROR
    n = 0 if args.square == -2 else 1
    for cls in (ElementClass.ODD, ElementClass.WU, ElementClass.EVEN_NON_WU):
        exists = exists_class(v, n, cls)
        line = f"{v.vid} square={args.square} {cls.value}: {'yes' if exists else 'no'}"
        if exists:
            if args.bound is not None:
                try:
                    witness = search_witness(v.lminus, args.square, cls, bound=args.bound)
                except SearchBudgetError as exc:
                    print(f"{line}  (search aborted: {exc})")
                    continue
            else:
                witness = construct_witness(v, n, cls)
            coords = list(witness.coords) if witness is not None else None
            line += f"  witness={coords}"
        print(line)
    return 0


def cmd_verify(args: argparse.Namespace) -> int:
    names = [args.suite] if args.suite else None
    try:
        results = run_suites(names)
    except (CatalogError, StructuralError) as exc:
        print(f"verification aborted: {exc}", file=sys.stderr)
        return VERIFY_ERROR
    exit_code = 0
    for res in results:
        status = "pass" if res.ok else "FAIL"
        print(f"{res.name:12s} {status}")
        for note in res.notes:
            print(f"  note: {note}")
        if not res.ok:
            exit_code = VERIFY_ERROR
            print(f"  first failing invariant: {res.failures[0]}")
            for extra in res.failures[1:4]:
                print(f"  also: {extra}")
    return exit_code


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="k4graph",
        description=(
            "Exact lattice catalog and adjacency graphs of real K3 involutions "
            "and real cubic fourfolds"
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_cat = sub.add_parser("catalog", help="dump the 75-entry vertex catalog")
    p_cat.add_argument("--format", choices=("json", "table"), default="table")
    p_cat.add_argument("--out", help="write to a file instead of stdout")
    p_cat.set_defaults(func=cmd_catalog)

    p_build = sub.add_parser("build", help="build a deformation graph")
    p_build.add_argument("--graph", choices=("k3", "k4"), required=True)
    p_build.add_argument("--format", choices=("json", "dot"), default="json")
    p_build.add_argument("--out", help="write to a file instead of stdout")
    p_build.set_defaults(func=cmd_build)

    p_exp = sub.add_parser("export", help="build a graph and write it to a file")
    p_exp.add_argument("--graph", choices=("k3", "k4"), required=True)
    p_exp.add_argument("--format", choices=("json", "dot"), default="json")
    p_exp.add_argument("--out", required=True)
    p_exp.set_defaults(func=cmd_build)

    p_cls = sub.add_parser("classify", help="existence and witnesses per element class")
    p_cls.add_argument("--vertex", required=True, help="catalog id, e.g. '[7S]'")
    p_cls.add_argument("--square", type=int, choices=(-2, 6), required=True)
    p_cls.add_argument("--bound", type=int, help="search for witnesses instead of constructing")
    p_cls.set_defaults(func=cmd_classify)

    p_ver = sub.add_parser("verify", help="run the invariant suites")
    p_ver.add_argument("--suite", choices=sorted(SUITES), help="run a single suite")
    p_ver.set_defaults(func=cmd_verify)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except OSError as exc:
        print(f"i/o failure: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
