"""Command-line front end.

Exit codes: 0 success (nothing refuted), 1 a partition tautology was
refuted (``taut`` only), 2 usage, parse or universe errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Sequence

from . import explorer, structures, tautology
from .boolops import kept_links, link_labels
from .core import Partition, Universe, enumerate_partitions
from .errors import PartitionLogicError
from .formula import (
    METHODS,
    Apply,
    Assignment,
    Formula,
    eval_partition,
    load_corpus,
    parse,
    parse_corpus,
    to_text,
)

EXIT_OK, EXIT_REFUTED, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _emit(data, fmt: str, text: str) -> None:
    if fmt == "json":
        print(json.dumps(data, indent=2, ensure_ascii=False))
    else:
        print(text)


def _universe(args) -> Universe:
    if getattr(args, "universe", None):
        return Universe.parse(args.universe)
    if getattr(args, "n", None):
        return Universe.letters(args.n)
    raise UsageError("declare a universe with -u a,b,c or -n N")


# -- eval --------------------------------------------------------------------


def graph_dot(formula: Formula, assignment: Assignment, method: str = "graph") -> str:
    """The complete graph on the universe, each link labelled with one T/F
    letter per argument of the top-level connective; links kept by the
    connective (those it maps to F) are drawn bold."""
    u = assignment.universe
    names = u.names
    lines = ["graph G {", "  node [shape=circle];"]
    lines += [f'  "{x}";' for x in names]
    if isinstance(formula, Apply) and formula.args:
        parts = [eval_partition(a, assignment, method) for a in formula.args]
        subs = [to_text(a) for a in formula.args]
        kept = set(kept_links(formula.table, parts, u))
        for i in range(u.size):
            for j in range(i + 1, u.size):
                labels = " ".join(
                    f"{'T' if t else 'F'}_{s}" for t, s in zip(link_labels(parts, i, j), subs)
                )
                style = "style=bold, penwidth=3" if (i, j) in kept else "style=solid, color=gray"
                lines.append(f'  "{names[i]}" -- "{names[j]}" [label="{labels}", {style}];')
    else:
        for i in range(u.size):
            for j in range(i + 1, u.size):
                lines.append(f'  "{names[i]}" -- "{names[j]}" [style=solid, color=gray];')
    lines.append("}")
    return "\n".join(lines)


def cmd_eval(args) -> int:
    formula = parse(args.formula)
    universe = _universe(args)
    bindings = {}
    for item in args.bind or []:
        if "=" not in item:
            raise UsageError(f"binding {item!r} must look like name=PARTITION")
        name, literal = item.split("=", 1)
        bindings[name.strip()] = Partition.parse(literal, universe)
    assignment = Assignment(universe, bindings)
    method = args.method or "graph"
    result = eval_partition(formula, assignment, method)
    data = {
        "formula": to_text(formula),
        "method": method,
        "universe": list(universe.names),
        "bindings": {k: str(v) for k, v in bindings.items()},
        "result": {"blocks": result.named_blocks(), "rgs": list(result.rgs), "text": str(result)},
    }
    _emit(data, args.format, str(result))
    if args.emit_graph == "dot":
        dot = graph_dot(formula, assignment, method)
        if args.graph_out:
            Path(args.graph_out).write_text(dot + "\n", encoding="utf-8")
        else:
            print(dot)
    return EXIT_OK


# -- taut --------------------------------------------------------------------


def cmd_taut(args) -> int:
    entries = []
    if args.bundled:
        entries += tautology.bundled_corpus()
    if args.corpus:
        path = Path(args.corpus)
        if not path.is_file():
            raise UsageError(f"corpus file not found: {path}")
        entries += load_corpus(path)
    if args.formula:
        entries += parse_corpus(f"formula: {args.formula}")
    if not entries and not (args.bundled or args.corpus):
        raise UsageError("give a formula, --corpus PATH or --bundled")
    max_n = args.max_n or tautology.DEFAULT_MAX_N
    rows = tautology.check_corpus(entries, max_n, workers=args.workers or 1)
    data = {"max_n": max_n, "rows": [r.to_json() for r in rows]}
    _emit(data, args.format, tautology.format_report(rows))
    if any(r.error for r in rows):
        return EXIT_USAGE
    if any(r.partition.refuted for r in rows):
        return EXIT_REFUTED
    return EXIT_OK


# -- structures --------------------------------------------------------------


def cmd_structures(args) -> int:
    if args.which == "core":
        universe = _universe(args)
        if not args.partition:
            raise UsageError("core needs -p PARTITION")
        base = Partition.parse(args.partition, universe)
        core = structures.boolean_core(base, cap=args.enum_cap)
        data = {
            "base": str(base),
            "universe": list(universe.names),
            "size": len(core.members),
            "members": [str(m) for m in core.members],
        }
        text = "\n".join([f"Boolean core over {base} ({len(core.members)} members)"] + [str(m) for m in core.members])
        _emit(data, args.format, text)
        return EXIT_OK
    universe = _universe(args)
    report = structures.check_powerset_embedding(universe, cap=args.embed_cap or structures.DEFAULT_EMBEDDING_CAP)
    lines = [f"powerset embedding for U={{{','.join(universe.names)}}}"]
    for law in report.laws:
        mark = "pass" if law.passed else "FAIL"
        extra = f"  {law.counterexample}" if law.counterexample else ""
        lines.append(f"  [{mark}] {law.name} ({law.checked} checked){extra}")
    lines.append(f"core members ({len(report.members)}):")
    lines += [f"  {m}" for m in report.members]
    _emit(report.to_json(), args.format, "\n".join(lines))
    return EXIT_OK


# -- explore -----------------------------------------------------------------


def cmd_explore(args) -> int:
    n = args.n or explorer.DEFAULT_N
    universe = Universe.letters(n)
    result = explorer.compound_closure(
        universe,
        depth_cap=args.depth or explorer.DEFAULT_DEPTH_CAP,
        size_cap=args.size_cap or explorer.DEFAULT_SIZE_CAP,
        cap=max(n, explorer.DEFAULT_N),
    )
    data = result.to_json(samples=args.samples, landmarks={"peirce": explorer.PEIRCE})
    if args.csv:
        Path(args.csv).write_text(result.counts_csv(), encoding="utf-8")
    text = "\n".join(
        [
            f"n={n} saturated={data['saturated']} total={data['total']} beyond_basic={data['beyond_basic']}",
            "counts_by_depth: " + " ".join(str(c) for c in data["counts_by_depth"]),
        ]
        + [f"  depth {s['depth']}: {s['formula']}" for s in data["samples"]]
        + [
            f"  landmark {lm['name']}: in_closure={lm['in_closure']} equals_constant_1={lm['equals_constant_1']}"
            for lm in data["landmarks"]
        ]
    )
    _emit(data, args.format, text)
    return EXIT_OK


# -- enumerate ---------------------------------------------------------------


def cmd_enumerate(args) -> int:
    universe = _universe(args)
    parts = list(enumerate_partitions(universe, args.enum_cap))
    data = {"universe": list(universe.names), "count": len(parts), "partitions": [p.to_json() for p in parts]}
    _emit(data, args.format, "\n".join(str(p) for p in parts))
    return EXIT_OK


# -- parser ------------------------------------------------------------------


def build_parser() -> tuple[argparse.ArgumentParser, list[argparse.ArgumentParser]]:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--method", choices=METHODS, default=None)
    common.add_argument("--max-n", type=int, default=None)
    common.add_argument("--enum-cap", type=int, default=None)
    common.add_argument("--workers", type=int, default=1)
    common.add_argument("--config", default=None, help="JSON file of flag defaults; explicit flags win")
    common.add_argument("-u", "--universe", default=None, help="comma-separated element names")
    common.add_argument("-n", type=int, default=None, help="universe size (elements named a, b, c, ...)")

    parser = argparse.ArgumentParser(prog="partlogic", description="Boolean operations on set partitions")
    sub = parser.add_subparsers(dest="command", required=True)

    p_eval = sub.add_parser("eval", parents=[common], help="evaluate a formula on given partitions")
    p_eval.add_argument("formula")
    p_eval.add_argument("-b", "--bind", action="append", metavar="NAME=PARTITION")
    p_eval.add_argument("--emit-graph", choices=("dot",), default=None)
    p_eval.add_argument("--graph-out", default=None)
    p_eval.set_defaults(func=cmd_eval)

    p_taut = sub.add_parser("taut", parents=[common], help="classify formulas as subset/partition tautologies")
    p_taut.add_argument("formula", nargs="?")
    p_taut.add_argument("-c", "--corpus", default=None)
    p_taut.add_argument("--bundled", action="store_true", help="use the bundled laws.taut corpus")
    p_taut.set_defaults(func=cmd_taut)

    p_struct = sub.add_parser("structures", parents=[common], help="Boolean core and powerset embedding reports")
    p_struct.add_argument("which", choices=("core", "embed"))
    p_struct.add_argument("-p", "--partition", default=None)
    p_struct.add_argument("--embed-cap", type=int, default=None)
    p_struct.set_defaults(func=cmd_structures)

    p_explore = sub.add_parser("explore", parents=[common], help="closure of the sixteen binary operations")
    p_explore.add_argument("--depth", type=int, default=None)
    p_explore.add_argument("--size-cap", type=int, default=None)
    p_explore.add_argument("--samples", type=int, default=10)
    p_explore.add_argument("--csv", default=None)
    p_explore.set_defaults(func=cmd_explore)

    p_enum = sub.add_parser("enumerate", parents=[common], help="list all partitions of a universe")
    p_enum.set_defaults(func=cmd_enumerate)

    return parser, [p_eval, p_taut, p_struct, p_explore, p_enum]


def _load_config(argv: Sequence[str]) -> dict:
    pre = argparse.ArgumentParser(add_help=False)
    pre.add_argument("--config", default=None)
    known, _ = pre.parse_known_args(argv)
    if not known.config:
        return {}
    path = Path(known.config)
    if not path.is_file():
        raise UsageError(f"config file not found: {path}")
    data = json.loads(path.read_text(encoding="utf-8"))
    if not isinstance(data, dict):
        raise UsageError("config file must hold a JSON object")
    return {k.replace("-", "_"): v for k, v in data.items()}


def main(argv: Sequence[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser, subparsers = build_parser()
    try:
        config = _load_config(argv)
    except (UsageError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    for sp in subparsers:
        sp.set_defaults(**config)
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except (UsageError, PartitionLogicError, ValueError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
