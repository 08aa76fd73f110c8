"""Graph generators: the tight lower-bound family and seeded test corpora.

Every generator returns a validated Graph and is a pure function of its
parameters (and seed, for the random families), so identical calls yield
byte-identical edge lists.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from .graph import Graph, build_graph


class BadParameterError(ValueError):
    pass


def triangle_with_leaves(leaf_degree: int) -> Graph:
    """Triangle on {0,1,2} with leaf_degree - 2 pendant leaves per vertex.

    Max degree is leaf_degree and the strong chromatic index of the result
    is 3 * leaf_degree - 3: all edges are pairwise within distance 1.
    Leaves are numbered after the triangle, grouped by attachment vertex.
    """
    if leaf_degree < 2:
        raise BadParameterError(f"leaf_degree must be >= 2, got {leaf_degree}")
    per_vertex = leaf_degree - 2
    edges = [(0, 1), (0, 2), (1, 2)]
    nxt = 3
    for anchor in range(3):
        for _ in range(per_vertex):
            edges.append((anchor, nxt))
            nxt += 1
    return build_graph(nxt, edges)


def path_graph(n: int) -> Graph:
    if n < 2:
        raise BadParameterError(f"path needs n >= 2, got {n}")
    return build_graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise BadParameterError(f"cycle needs n >= 3, got {n}")
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)])


def star_graph(k: int) -> Graph:
    """Star with center 0 and k leaves."""
    if k < 1:
        raise BadParameterError(f"star needs k >= 1, got {k}")
    return build_graph(k + 1, [(0, i) for i in range(1, k + 1)])


def complete_bipartite_2m(m: int) -> Graph:
    """K_{2,m}: sides {0, 1} and {2, ..., m+1}.  2-degenerate for every m."""
    if m < 1:
        raise BadParameterError(f"K_2m needs m >= 1, got {m}")
    edges = [(s, t) for t in range(2, m + 2) for s in (0, 1)]
    return build_graph(m + 2, edges)


def random_tree(n: int, seed: int) -> Graph:
    """Uniform-attachment random tree: vertex i joins a parent drawn from [0, i)."""
    if n < 1:
        raise BadParameterError(f"tree needs n >= 1, got {n}")
    rng = random.Random(seed)
    edges = [(rng.randrange(i), i) for i in range(1, n)]
    return build_graph(n, edges)


def random_two_degenerate(n: int, max_deg_cap: int, seed: int,
                          attach_probs: tuple[float, float, float] = (0.1, 0.3, 0.6)) -> Graph:
    """Incrementally built 2-degenerate graph with max degree <= max_deg_cap.

    Vertex 0 starts alone; each later vertex attaches to 0, 1, or 2
    distinct uniformly chosen existing vertices whose degree is still
    below the cap (probabilities per attach_probs).  Reversing insertion
    order peels the graph at degree <= 2, so the output is 2-degenerate
    by construction.
    """
    if n < 1:
        raise BadParameterError(f"n must be >= 1, got {n}")
    if max_deg_cap < 2:
        raise BadParameterError(f"max_deg_cap must be >= 2, got {max_deg_cap}")
    p0, p1, p2 = attach_probs
    if min(p0, p1, p2) < 0 or abs(p0 + p1 + p2 - 1.0) > 1e-9:
        raise BadParameterError(f"attach_probs must be a distribution, got {attach_probs}")
    rng = random.Random(seed)
    deg = [0] * n
    # pool of attachable vertices, swap-removed once saturated
    pool = [0]
    pos = [0] + [-1] * (n - 1)
    edges: list[tuple[int, int]] = []

    def pool_remove(v: int) -> None:
        i = pos[v]
        last = pool[-1]
        pool[i] = last
        pos[last] = i
        pool.pop()
        pos[v] = -1

    for v in range(1, n):
        r = rng.random()
        want = 0 if r < p0 else (1 if r < p0 + p1 else 2)
        want = min(want, len(pool))
        if want >= 1:
            a = pool[rng.randrange(len(pool))]
            edges.append((a, v))
            deg[a] += 1
            deg[v] += 1
            if deg[a] >= max_deg_cap:
                pool_remove(a)
            if want == 2 and pool:
                b = pool[rng.randrange(len(pool))]
                while b == a:
                    if len(pool) == 1:
                        b = -1
                        break
                    b = pool[rng.randrange(len(pool))]
                if b >= 0:
                    edges.append((b, v))
                    deg[b] += 1
                    deg[v] += 1
                    if deg[b] >= max_deg_cap:
                        pool_remove(b)
        if deg[v] < max_deg_cap:
            pos[v] = len(pool)
            pool.append(v)
    return build_graph(n, edges)


@dataclass(frozen=True)
class GenSpec:
    """Reproducible description of one generated graph."""

    family: str
    params: tuple[int, ...]
    seed: int = 0
    attach_probs: tuple[float, float, float] = field(default=(0.1, 0.3, 0.6))


_FAMILIES = {
    "triangle_with_leaves": (triangle_with_leaves, 1, False),
    "path": (path_graph, 1, False),
    "cycle": (cycle_graph, 1, False),
    "star": (star_graph, 1, False),
    "complete_bipartite_2m": (complete_bipartite_2m, 1, False),
    "random_tree": (random_tree, 1, True),
    "random_two_degenerate": (random_two_degenerate, 2, True),
}


def family_names() -> list[str]:
    return list(_FAMILIES)


def generate(spec: GenSpec) -> Graph:
    """Build the graph a GenSpec describes."""
    if spec.family not in _FAMILIES:
        raise BadParameterError(f"unknown family {spec.family!r}; know {sorted(_FAMILIES)}")
    fn, arity, seeded = _FAMILIES[spec.family]
    if len(spec.params) != arity:
        raise BadParameterError(
            f"family {spec.family!r} takes {arity} parameter(s), got {spec.params}")
    if not seeded:
        return fn(*spec.params)
    if spec.family == "random_two_degenerate":
        return fn(*spec.params, spec.seed, spec.attach_probs)
    return fn(*spec.params, spec.seed)
