"""Exact strong chromatic index for small graphs.

Strong edge-coloring of g is vertex coloring of the square of its line
graph ("conflict graph"), so the oracle runs a branch-and-bound vertex
coloring there: saturation-based vertex selection, at most one new color
per node, a greedily grown clique as lower bound, and a greedy coloring
as incumbent.  Budgets (node count and wall time) turn long searches
into a best-bounds answer instead of an error.
"""

from __future__ import annotations

import time
from dataclasses import dataclass

from .coloring import EdgeColoring
from .graph import Graph, square_of_line_graph

DEFAULT_MAX_NODES = 10_000_000
DEFAULT_MAX_SECONDS = 30.0


@dataclass
class OracleResult:
    chi_s: int            # exact when budget_exhausted is False, else best upper bound
    witness: EdgeColoring  # strong coloring of g using exactly chi_s colors
    nodes_explored: int
    budget_exhausted: bool
    lower_bound: int


class _BudgetExceeded(Exception):
    pass


def _greedy_coloring(adj: list[set[int]]) -> list[int]:
    """Greedy coloring in degree-descending order (ties by id), 1-based."""
    n = len(adj)
    order = sorted(range(n), key=lambda v: (-len(adj[v]), v))
    colors = [0] * n
    for v in order:
        taken = {colors[x] for x in adj[v] if colors[x]}
        c = 1
        while c in taken:
            c += 1
        colors[v] = c
    return colors


def _greedy_clique(adj: list[set[int]]) -> list[int]:
    """Largest clique found by greedy extension from every seed vertex."""
    n = len(adj)
    if n == 0:
        return []
    order = sorted(range(n), key=lambda v: (-len(adj[v]), v))
    best: list[int] = []
    for seed in order:
        clique = [seed]
        for cand in order:
            if cand != seed and all(cand in adj[x] for x in clique):
                clique.append(cand)
        if len(clique) > len(best):
            best = clique
    return best


def greedy_upper_bound(g: Graph) -> int:
    """Colors used by a greedy strong edge-coloring; always >= chi_s."""
    h = square_of_line_graph(g)
    colors = _greedy_coloring([set(nbrs) for nbrs in h.adjacency])
    return max(colors, default=0)


def clique_lower_bound(g: Graph) -> int:
    """Size of a greedily grown clique of pairwise-conflicting edges;
    always <= chi_s."""
    h = square_of_line_graph(g)
    return len(_greedy_clique([set(nbrs) for nbrs in h.adjacency]))


def _witness_coloring(g: Graph, assignment: list[int]) -> EdgeColoring:
    """Wrap a 1-based class assignment as an EdgeColoring (base half only,
    with the smallest palette parameter the class count fits)."""
    k = max(assignment, default=0)
    delta = max(1, (k + 5) // 4)  # smallest delta with 4*delta - 2 >= k
    witness = EdgeColoring(g, delta)
    for eid, c in enumerate(assignment):
        witness.assign(eid, c)
    return witness


def exact_chi_s(g: Graph, max_nodes: int = DEFAULT_MAX_NODES,
                max_seconds: float = DEFAULT_MAX_SECONDS) -> OracleResult:
    """Exact strong chromatic index of g (intended for m up to ~25).

    If a budget runs out, returns the incumbent coloring with
    budget_exhausted=True and the best proven lower bound.
    """
    h = square_of_line_graph(g)
    n = h.n
    if n == 0:
        return OracleResult(0, EdgeColoring(g, 1), 0, False, 0)
    adj = [set(nbrs) for nbrs in h.adjacency]

    incumbent = _greedy_coloring(adj)
    best_k = max(incumbent)
    lb = max(len(_greedy_clique(adj)), 1)

    colors = [0] * n
    sat: list[set[int]] = [set() for _ in range(n)]
    uncolored = n
    nodes = 0
    deadline = time.perf_counter() + max_seconds

    def select() -> int:
        pick, key = -1, None
        for v in range(n):
            if colors[v] == 0:
                k = (len(sat[v]), len(adj[v]), -v)
                if key is None or k > key:
                    pick, key = v, k
        return pick

    def place(v: int, c: int) -> list[int]:
        colors[v] = c
        touched = []
        for x in adj[v]:
            if colors[x] == 0 and c not in sat[x]:
                sat[x].add(c)
                touched.append(x)
        return touched

    def unplace(v: int, c: int, touched: list[int]) -> None:
        colors[v] = 0
        for x in touched:
            sat[x].discard(c)

    def search(current_max: int) -> None:
        nonlocal best_k, incumbent, uncolored, nodes
        nodes += 1
        if nodes > max_nodes or (nodes % 1024 == 0
                                 and time.perf_counter() > deadline):
            raise _BudgetExceeded
        if current_max >= best_k:
            return
        if uncolored == 0:
            best_k = current_max
            incumbent = list(colors)
            return
        v = select()
        limit = min(current_max + 1, best_k - 1)
        for c in range(1, limit + 1):
            if c in sat[v]:
                continue
            touched = place(v, c)
            uncolored -= 1
            search(max(current_max, c))
            uncolored += 1
            unplace(v, c, touched)
            if best_k == lb:
                return

    exhausted = False
    if best_k > lb:
        try:
            search(0)
        except _BudgetExceeded:
            exhausted = True

    return OracleResult(
        chi_s=best_k,
        witness=_witness_coloring(g, incumbent),
        nodes_explored=nodes,
        budget_exhausted=exhausted,
        lower_bound=best_k if not exhausted else lb,
    )
