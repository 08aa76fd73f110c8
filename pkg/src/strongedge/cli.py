"""Command-line entry point: color, verify, exact, gen, bench.

Exit codes: 0 success, 1 verification or internal-assertion failure,
2 input/parse errors.  `color` never exits 0 without its output passing
all three verifier checks.
"""

from __future__ import annotations

import argparse
import json
import sys

from .coloring import (
    CountingBoundError,
    NoColorAvailableError,
    coloring_from_dict,
    coloring_to_dict,
    coloring_to_json,
    strong_color,
)
from .generators import BadParameterError, GenSpec, family_names, generate
from .graph import Graph, format_edge_list, max_degree, parse_edge_list
from .oracle import DEFAULT_MAX_NODES, DEFAULT_MAX_SECONDS, exact_chi_s
from .reduction import NotTwoDegenerateError, build_schedule, format_step
from .verify import PartialColoringError, verify_all


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def _load_graph(path: str) -> Graph:
    return parse_edge_list(_read_text(path))


def _cmd_color(args) -> int:
    try:
        g = _load_graph(args.input)
    except (OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if args.trace:
        for step in build_schedule(g).steps:
            print(format_step(step), file=sys.stderr)
    try:
        coloring, stats = strong_color(g, args.delta, paranoid=args.paranoid)
    except (NotTwoDegenerateError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (NoColorAvailableError, CountingBoundError, AssertionError) as exc:
        print(f"internal assertion failed: {exc}", file=sys.stderr)
        return 1
    verdict = verify_all(g, coloring)
    if not verdict.ok:
        print(verdict.to_json(), file=sys.stderr)
        print("error: self-verification failed", file=sys.stderr)
        return 1
    payload = coloring_to_json(g, coloring, stats)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(payload + "\n")
    else:
        print(payload)
    return 0


def _cmd_verify(args) -> int:
    try:
        g = _load_graph(args.graph)
        data = json.loads(_read_text(args.coloring))
        coloring, _ = coloring_from_dict(g, data)
        verdict = verify_all(g, coloring, delta_param=coloring.delta_param)
    except (OSError, ValueError, KeyError, PartialColoringError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    print(verdict.to_json())
    return 0 if verdict.ok else 1


def _cmd_exact(args) -> int:
    try:
        g = _load_graph(args.input)
    except (OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    result = exact_chi_s(g, max_nodes=args.budget_nodes, max_seconds=args.budget_secs)
    out = {
        "chi_s": result.chi_s,
        "lower_bound": result.lower_bound,
        "nodes_explored": result.nodes_explored,
        "budget_exhausted": result.budget_exhausted,
    }
    if args.witness:
        from .coloring import RunStats
        stats = RunStats(colors_used=result.witness.distinct_colors_used())
        out["witness"] = coloring_to_dict(g, result.witness, stats)
    print(json.dumps(out, separators=(",", ":")))
    return 0


def _cmd_gen(args) -> int:
    try:
        spec = GenSpec(args.family, tuple(args.params), args.seed)
        g = generate(spec)
    except BadParameterError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    sys.stdout.write(format_edge_list(g))
    return 0


def _bench_corpus(families: list[str], count: int, seed: int,
                  max_n: int, max_delta: int) -> list[tuple[str, GenSpec]]:
    ladder = [n for n in (2, 3, 4, 5, 8, 13, 21, 30, 40, 60, 100) if n <= max_n]
    corpus: list[tuple[str, GenSpec]] = []
    for fam in families:
        if fam == "path":
            corpus += [(fam, GenSpec(fam, (n,))) for n in ladder if n >= 2]
        elif fam == "cycle":
            corpus += [(fam, GenSpec(fam, (n,))) for n in ladder if n >= 3]
        elif fam == "star":
            corpus += [(fam, GenSpec(fam, (min(k, max_delta),)))
                       for k in ladder if k >= 1]
        elif fam == "complete_bipartite_2m":
            corpus += [(fam, GenSpec(fam, (m,)))
                       for m in range(1, min(max_delta, max_n) + 1)]
        elif fam == "triangle_with_leaves":
            corpus += [(fam, GenSpec(fam, (d,))) for d in range(2, max_delta + 1)]
        elif fam == "random_tree":
            corpus += [(fam, GenSpec(fam, (5 + (i * 7) % max(1, max_n - 4),),
                                     seed=seed + i)) for i in range(count)]
        elif fam == "random_two_degenerate":
            corpus += [
                (fam, GenSpec(fam,
                              (5 + (i * 7) % max(1, max_n - 4),
                               2 + i % max(1, max_delta - 1)),
                              seed=seed + i))
                for i in range(count)
            ]
        else:
            raise BadParameterError(f"unknown family {fam!r}")
    return corpus


def _cmd_bench(args) -> int:
    families = args.families.split(",") if args.families else family_names()
    try:
        corpus = _bench_corpus(families, args.count, args.seed,
                               args.max_n, args.max_delta)
    except BadParameterError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    print("family\tn\tm\tdelta\tcolors_used\tmax_omega\tverified\tchi_s")
    all_ok = True
    for fam, spec in corpus:
        g = generate(spec)
        delta = max(1, max_degree(g))
        try:
            coloring, stats = strong_color(g, delta)
            ok = verify_all(g, coloring).ok
        except (NoColorAvailableError, CountingBoundError):
            ok = False
            coloring, stats = None, None
        all_ok = all_ok and ok
        chi = ""
        if g.m <= 14:
            res = exact_chi_s(g, max_nodes=200_000, max_seconds=2.0)
            if not res.budget_exhausted:
                chi = str(res.chi_s)
        colors_used = stats.colors_used if stats else ""
        max_omega = stats.max_omega if stats else ""
        print(f"{fam}\t{g.n}\t{g.m}\t{delta}\t{colors_used}\t{max_omega}"
              f"\t{str(ok).lower()}\t{chi}")
    return 0 if all_ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="strongedge",
        description="Strong edge-coloring of 2-degenerate graphs with a dual palette.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("color", help="color a graph and self-verify the result")
    p.add_argument("input", nargs="?", default="-",
                   help="edge-list file, or - for stdin (default)")
    p.add_argument("--delta", type=int, default=None,
                   help="palette parameter (default: max degree)")
    p.add_argument("--paranoid", action="store_true",
                   help="re-check every color choice against the full "
                        "distance-1 forbidden set")
    p.add_argument("--trace", action="store_true",
                   help="print the reduction steps to stderr")
    p.add_argument("--out", default=None, help="write the coloring JSON here")
    p.set_defaults(fn=_cmd_color)

    p = sub.add_parser("verify", help="verify a coloring JSON against a graph")
    p.add_argument("graph", help="edge-list file, or -")
    p.add_argument("coloring", help="coloring JSON file, or -")
    p.set_defaults(fn=_cmd_verify)

    p = sub.add_parser("exact", help="exact strong chromatic index (small graphs)")
    p.add_argument("input", nargs="?", default="-")
    p.add_argument("--budget-nodes", type=int, default=DEFAULT_MAX_NODES)
    p.add_argument("--budget-secs", type=float, default=DEFAULT_MAX_SECONDS)
    p.add_argument("--witness", action="store_true",
                   help="include an optimal coloring in the output")
    p.set_defaults(fn=_cmd_exact)

    p = sub.add_parser("gen", help="generate a graph as edge-list text")
    p.add_argument("family", choices=family_names())
    p.add_argument("params", nargs="*", type=int)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(fn=_cmd_gen)

    p = sub.add_parser("bench", help="run the coloring over a corpus, TSV summary")
    p.add_argument("--families", default=None,
                   help="comma-separated family names (default: all)")
    p.add_argument("--count", type=int, default=25,
                   help="number of random graphs per random family")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--max-n", type=int, default=40)
    p.add_argument("--max-delta", type=int, default=8)
    p.set_defaults(fn=_cmd_bench)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    return args.fn(args)


if __name__ == "__main__":
    sys.exit(main())
