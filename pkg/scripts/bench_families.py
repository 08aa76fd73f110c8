#!/usr/bin/env python3
"""Sweep the generator families, color and verify each graph, and report
how much slack the observed counting quantities leave.

Usage: python scripts/bench_families.py [--count 40] [--max-n 80] [--seed 0]
"""

from __future__ import annotations

import argparse
import time

from strongedge import (
    complete_bipartite_2m,
    cycle_graph,
    max_degree,
    path_graph,
    random_tree,
    random_two_degenerate,
    star_graph,
    strong_color,
    triangle_with_leaves,
    verify_all,
)


def corpus(count: int, max_n: int, seed: int):
    for n in range(2, max_n + 1, max(1, max_n // 12)):
        yield f"path({n})", path_graph(n)
        if n >= 3:
            yield f"cycle({n})", cycle_graph(n)
        yield f"star({n})", star_graph(n)
    for m in range(1, 11):
        yield f"K_2,{m}", complete_bipartite_2m(m)
    for d in range(2, 11):
        yield f"twl({d})", triangle_with_leaves(d)
    for i in range(count):
        n = 5 + (i * 17) % max(1, max_n - 4)
        yield f"tree(n={n},s={seed + i})", random_tree(n, seed + i)
    for i in range(count):
        n = 5 + (i * 13) % max(1, max_n - 4)
        cap = 3 + i % 7
        yield (f"rand2deg(n={n},cap={cap},s={seed + i})",
               random_two_degenerate(n, cap, seed + i))


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--count", type=int, default=40)
    ap.add_argument("--max-n", type=int, default=80)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    header = (f"{'graph':34} {'n':>6} {'m':>6} {'D':>3} {'colors':>6} "
              f"{'palette':>7} {'omega':>5} {'omega_cap':>9} {'ok':>3}")
    print(header)
    print("-" * len(header))
    worst_ratio = 0.0
    t0 = time.perf_counter()
    bad = 0
    for name, g in corpus(args.count, args.max_n, args.seed):
        delta = max(1, max_degree(g))
        coloring, stats = strong_color(g)
        ok = verify_all(g, coloring).ok
        bad += not ok
        cap = 4 * delta - 3
        if cap > 0 and stats.max_omega:
            worst_ratio = max(worst_ratio, stats.max_omega / cap)
        print(f"{name:34} {g.n:>6} {g.m:>6} {delta:>3} {stats.colors_used:>6} "
              f"{8 * delta - 4:>7} {stats.max_omega:>5} {cap:>9} "
              f"{'yes' if ok else 'NO':>3}")
    elapsed = time.perf_counter() - t0
    print(f"\n{elapsed:.2f}s total; worst omega/(4D-3) ratio {worst_ratio:.2f}; "
          f"{bad} verification failures")
    return 1 if bad else 0


if __name__ == "__main__":
    raise SystemExit(main())
