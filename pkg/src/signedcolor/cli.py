"""Command-line interface.

Exit codes: 0 success, 1 input error, 2 verification counterexample.
All output is deterministic; ``--format json`` emits the same data as the
text rendering, machine-readable.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import replace
from fractions import Fraction

from . import formats
from .bounds import signed_line_graph
from .coloring import coloring_number, signed_chromatic_number, solve_with_colorset, zk
from .enumeration import EnumSpec
from .graph import SignedGraph
from .lists import build_uncolorable_assignment, is_degree_choosable, solve_list_coloring
from .structure import all_blocks_are_bricks, blocks, is_antibalanced, is_balanced
from .suites import SUITES, run_suite


def _read(path: str) -> str:
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def _load_graph(path: str) -> SignedGraph:
    return formats.parse_graph(_read(path)).graph


def _balance_data(res) -> dict:
    data: dict = {"holds": res.balanced}
    if res.parts is not None:
        data["parts"] = [sorted(res.parts[0]), sorted(res.parts[1])]
    if res.cycle is not None:
        data["unbalanced_cycle_edges"] = list(res.cycle)
    return data


def _cmd_analyze(args) -> tuple[int, dict]:
    g = _load_graph(args.file)
    decomp = blocks(g)
    data = {
        "vertices": g.n,
        "edges": g.m,
        "max_degree": g.max_degree,
        "min_degree": g.min_degree,
        "max_multiplicity": g.max_multiplicity,
        "coloring_number": coloring_number(g),
        "balanced": _balance_data(is_balanced(g)),
        "antibalanced": _balance_data(is_antibalanced(g)),
        "cut_vertices": sorted(decomp.cut_vertices),
        "blocks": [],
    }
    from .structure import classify_brick

    for b in decomp.blocks:
        cls = classify_brick(b.graph)
        entry = {
            "vertices": list(b.vertices),
            "brick": cls.is_brick,
            "class": cls.kind.value,
        }
        if cls.order is not None:
            entry["order"] = cls.order
        if cls.reason is not None:
            entry["reason"] = cls.reason
        data["blocks"].append(entry)
    return 0, data


def _cmd_chromatic(args) -> tuple[int, dict]:
    g = _load_graph(args.file)
    chi = signed_chromatic_number(g)
    phi = solve_with_colorset(g, zk(chi))
    return 0, {
        "chi_pm": chi,
        "coloring": {str(v): phi[v] for v in g.vertices},
    }


def _cmd_listcolor(args) -> tuple[int, dict]:
    g = _load_graph(args.file)
    lists = formats.parse_lists(_read(args.lists), g)
    phi = solve_list_coloring(g, lists)
    if phi is None:
        return 0, {"colorable": False}
    return 0, {"colorable": True, "coloring": {str(v): phi[v] for v in g.vertices}}


def _cmd_choosable(args) -> tuple[int, dict]:
    g = _load_graph(args.file)
    if not g.is_connected():
        raise ValueError("input graph must be connected")
    verdict = is_degree_choosable(g)
    data: dict = {"degree_choosable": verdict.choosable}
    if verdict.choosable:
        data["non_brick_block"] = {
            "index": verdict.non_brick_index,
            "reason": verdict.non_brick.reason,
        }
    else:
        data["uncolorable_lists"] = {
            str(v): sorted(verdict.bad_lists[v]) for v in g.vertices
        }
    return 0, data


def _cmd_badlists(args) -> tuple[int, dict]:
    g = _load_graph(args.file)
    if not g.is_connected():
        raise ValueError("input graph must be connected")
    lists = build_uncolorable_assignment(g)
    return 0, {
        "lists": {str(v): sorted(lists[v]) for v in g.vertices},
        "list_file": formats.write_lists(lists),
    }


def _cmd_linegraph(args) -> tuple[int, dict]:
    g = _load_graph(args.file)
    lg = signed_line_graph(g)
    return 0, {
        "vertices": lg.n,
        "edges": [[u, v, s] for u, v, s in lg.edges],
        "graph_file": formats.write_graph(lg),
    }


def _cmd_verify(args) -> tuple[int, dict]:
    suite_id = args.suite.upper()
    if suite_id not in SUITES:
        raise ValueError(f"unknown suite {args.suite!r}; known: {', '.join(SUITES)}")
    spec = SUITES[suite_id][1]
    overrides = {}
    if args.max_n is not None:
        overrides["max_vertices"] = args.max_n
    if args.mu is not None:
        overrides["max_multiplicity"] = args.mu
    if args.degree_cap is not None:
        overrides["degree_cap"] = args.degree_cap
    if args.modulo is not None:
        overrides["modulo"] = args.modulo
    if args.same_sign_parallels is not None:
        overrides["same_sign_parallels"] = args.same_sign_parallels == "yes"
    if overrides:
        spec = replace(spec, **overrides)
    report = run_suite(suite_id, spec)
    data = {
        "suite": report.suite,
        "description": SUITES[suite_id][2],
        "spec": {
            "max_vertices": spec.max_vertices,
            "max_multiplicity": spec.max_multiplicity,
            "modulo": spec.modulo,
            "degree_cap": spec.degree_cap,
            "same_sign_parallels": spec.same_sign_parallels,
        },
        "instances": report.instances,
        "skipped": report.skipped,
        "status": report.status,
        "notes": list(report.notes),
        "wall_time_seconds": round(report.wall_time, 3),
    }
    if report.counterexample is not None:
        data["counterexample"] = {
            "violation": report.counterexample.violation,
            "graph": report.counterexample.graph_text,
            "data": dict(report.counterexample.data),
        }
        return 2, data
    return 0, data


def _render_text(data, indent: int = 0) -> str:
    lines = []
    pad = "  " * indent
    if isinstance(data, dict):
        for key, value in data.items():
            if isinstance(value, (dict, list)) and value and not _is_flat(value):
                lines.append(f"{pad}{key}:")
                lines.append(_render_text(value, indent + 1))
            else:
                lines.append(f"{pad}{key} = {_flat(value)}")
    elif isinstance(data, list):
        for value in data:
            if isinstance(value, (dict, list)) and value and not _is_flat(value):
                lines.append(f"{pad}-")
                lines.append(_render_text(value, indent + 1))
            else:
                lines.append(f"{pad}- {_flat(value)}")
    else:
        lines.append(f"{pad}{_flat(data)}")
    return "\n".join(lines)


def _is_flat(value) -> bool:
    if isinstance(value, list):
        return all(not isinstance(x, (dict, list)) for x in value)
    return False


def _flat(value) -> str:
    if isinstance(value, str):
        return value.rstrip("\n").replace("\n", "; ") if "\n" in value else value
    if isinstance(value, list):
        return "[" + ", ".join(_flat(x) for x in value) + "]"
    if isinstance(value, Fraction):
        return str(value)
    return json.dumps(value) if isinstance(value, (dict,)) else str(value)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="signedcolor",
        description="coloring and choosability of signed multigraphs",
    )
    parser.add_argument("--format", choices=("text", "json"), default="text")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="balance, blocks, bricks, degrees")
    p.add_argument("file")
    p.set_defaults(func=_cmd_analyze)

    p = sub.add_parser("chromatic", help="signed chromatic number and a coloring")
    p.add_argument("file")
    p.set_defaults(func=_cmd_chromatic)

    p = sub.add_parser("listcolor", help="solve a list-coloring instance")
    p.add_argument("file")
    p.add_argument("--lists", required=True)
    p.set_defaults(func=_cmd_listcolor)

    p = sub.add_parser("choosable", help="degree-choosability verdict with certificate")
    p.add_argument("file")
    p.set_defaults(func=_cmd_choosable)

    p = sub.add_parser("badlists", help="uncolorable degree lists for brick-block graphs")
    p.add_argument("file")
    p.set_defaults(func=_cmd_badlists)

    p = sub.add_parser("linegraph", help="signed line graph")
    p.add_argument("file")
    p.set_defaults(func=_cmd_linegraph)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("suite", help=f"one of {', '.join(SUITES)}")
    p.add_argument("--max-n", type=int, default=None)
    p.add_argument("--mu", type=int, default=None)
    p.add_argument("--degree-cap", type=int, default=None)
    p.add_argument("--modulo", choices=("iso", "switching_iso"), default=None)
    p.add_argument("--same-sign-parallels", choices=("yes", "no"), default=None)
    p.set_defaults(func=_cmd_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        code, data = args.func(args)
    except (formats.FormatError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    if args.format == "json":
        print(json.dumps(data, sort_keys=True, default=str))
    else:
        print(_render_text(data))
    return code


if __name__ == "__main__":
    sys.exit(main())
