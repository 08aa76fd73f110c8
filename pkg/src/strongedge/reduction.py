"""Reducible-vertex search and the reduction schedule.

The schedule is the peeling story of the input graph: while any vertex of
degree >= 3 remains, a reducible center (degree >= 3, at most two
neighbors of degree >= 3) is located and either a pendant neighbor is
removed or all its degree-2 spoke edges are removed at once.  Replaying
the recorded steps in reverse drives the coloring.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass

from .graph import Graph, build_graph, is_two_degenerate


class NotTwoDegenerateError(ValueError):
    pass


class PreconditionError(ValueError):
    pass


@dataclass(frozen=True)
class PendantRemoval:
    """Removal of the degree-1 vertex `pendant` hanging on `center`.

    Recorded either at a reducible center, or at a degree-2 spoke vertex
    whose partner turned out to be degree 1 (such a partner edge would
    stay pendant after the spoke edges return, so it must never be primed;
    peeling it first keeps every pendant edge on the base palette).
    """

    center: int
    pendant: int


@dataclass(frozen=True)
class SpokeRemoval:
    """Removal of all spoke edges center-v_i at a reducible center.

    anchors = (u, w) cover every neighbor of the center with degree >= 3;
    each spoke pairs a degree-2 neighbor v_i with its other neighbor u_i.
    At recording time every non-anchor neighbor of the center has degree
    exactly 2 and every partner u_i has degree >= 2.
    """

    center: int
    anchors: tuple[int, int]
    spokes: tuple[tuple[int, int], ...]


ReductionStep = PendantRemoval | SpokeRemoval


@dataclass(frozen=True)
class ReductionSchedule:
    """Recorded steps plus the residual graph (max degree <= 2) they leave.

    residual_edge_ids maps residual edge ids back to edge ids of the
    input graph.
    """

    steps: tuple[ReductionStep, ...]
    residual: Graph
    residual_edge_ids: tuple[int, ...]


def find_reducible_vertex(g: Graph, require_two_degenerate: bool = False) -> int | None:
    """Smallest-id vertex of degree >= 3 with at most two 3+-neighbors.

    Returns None iff the graph has max degree <= 2.  For 2-degenerate
    inputs one of the two always holds; pass require_two_degenerate=True
    to check that precondition explicitly.
    """
    if require_two_degenerate and not is_two_degenerate(g):
        raise NotTwoDegenerateError("graph has a subgraph of minimum degree >= 3")
    deg = g.degrees()
    for v in range(g.n):
        if deg[v] < 3:
            continue
        heavy = 0
        for x in g.adjacency[v]:
            if deg[x] >= 3:
                heavy += 1
                if heavy > 2:
                    break
        if heavy <= 2:
            return v
    return None


def classify_center(g: Graph, v: int) -> tuple[int, int, list[int], list[tuple[int, int]]]:
    """Split N(v) into two anchors, pendant neighbors, and spokes.

    Anchors take all 3+-neighbors (ascending id), padded with the
    lowest-id remaining neighbors.  Every other neighbor is returned as a
    pendant (degree 1) or as a spoke (v_i, u_i) with u_i its other
    neighbor, spokes ordered by v_i.
    """
    deg = g.degrees()
    if deg[v] < 3:
        raise PreconditionError(f"vertex {v} has degree {deg[v]} < 3")
    heavy = [x for x in g.adjacency[v] if deg[x] >= 3]
    if len(heavy) > 2:
        raise PreconditionError(f"vertex {v} has {len(heavy)} neighbors of degree >= 3")
    light = [x for x in g.adjacency[v] if deg[x] < 3]
    anchors = heavy + light[:2 - len(heavy)]
    rest = light[2 - len(heavy):]
    pendants = [x for x in rest if deg[x] == 1]
    spokes = []
    for vi in rest:
        if deg[vi] == 2:
            ui = next(x for x in g.adjacency[vi] if x != v)
            spokes.append((vi, ui))
    return anchors[0], anchors[1], pendants, spokes


def build_schedule(g: Graph) -> ReductionSchedule:
    """Peel g down to max degree <= 2, recording every removal.

    Loop invariant: the chosen center v is the smallest-id reducible
    vertex of the current graph.  If v still has a degree-1 neighbor, one
    pendant is removed; else if some spoke partner has degree 1, that
    partner is peeled first (see PendantRemoval); else all spoke edges at
    v go in a single SpokeRemoval.  Degrees are re-evaluated on the
    reduced graph at every iteration.

    Degrees and 3+-neighbor counts only ever decrease, so each vertex is
    reducible during one contiguous window; a lazy min-heap of candidates
    yields the smallest-id reducible vertex in near-linear total time.
    """
    n = g.n
    adj: list[set[int]] = [set(nbrs) for nbrs in g.adjacency]
    deg: list[int] = [len(nbrs) for nbrs in g.adjacency]
    cnt3: list[int] = [0] * n
    for v in range(n):
        c = 0
        for x in g.adjacency[v]:
            if deg[x] >= 3:
                c += 1
        cnt3[v] = c
    num3 = sum(1 for d in deg if d >= 3)
    heap = [v for v in range(n) if deg[v] >= 3 and cnt3[v] <= 2]
    heapq.heapify(heap)
    in_heap = bytearray(n)
    for v in heap:
        in_heap[v] = 1
    push = heapq.heappush

    def remove_edge(a: int, b: int) -> None:
        nonlocal num3
        da, db = deg[a], deg[b]
        adj[a].remove(b)
        adj[b].remove(a)
        deg[a] = da - 1
        deg[b] = db - 1
        if db >= 3:
            cnt3[a] -= 1
        if da >= 3:
            cnt3[b] -= 1
        if da == 3:
            num3 -= 1
            for x in adj[a]:
                cnt3[x] -= 1
                if not in_heap[x] and deg[x] >= 3 and cnt3[x] <= 2:
                    in_heap[x] = 1
                    push(heap, x)
        if db == 3:
            num3 -= 1
            for x in adj[b]:
                cnt3[x] -= 1
                if not in_heap[x] and deg[x] >= 3 and cnt3[x] <= 2:
                    in_heap[x] = 1
                    push(heap, x)
        if not in_heap[a] and deg[a] >= 3 and cnt3[a] <= 2:
            in_heap[a] = 1
            push(heap, a)
        if not in_heap[b] and deg[b] >= 3 and cnt3[b] <= 2:
            in_heap[b] = 1
            push(heap, b)

    steps: list[ReductionStep] = []
    while heap:
        v = heapq.heappop(heap)
        in_heap[v] = 0
        if deg[v] < 3 or cnt3[v] > 2:
            continue
        v1 = -1
        for x in adj[v]:
            if deg[x] == 1 and (v1 < 0 or x < v1):
                v1 = x
        if v1 >= 0:
            steps.append(PendantRemoval(v, v1))
            remove_edge(v, v1)
        else:
            heavy: list[int] = []
            light: list[int] = []
            for x in sorted(adj[v]):
                (heavy if deg[x] >= 3 else light).append(x)
            fill = 2 - len(heavy)
            anchors = heavy + light[:fill]
            spokes: list[tuple[int, int]] = []
            leaf_vi = leaf_ui = -1
            for vi in light[fill:]:
                for x in adj[vi]:
                    if x != v:
                        ui = x
                        break
                if leaf_vi < 0 and deg[ui] == 1:
                    leaf_vi, leaf_ui = vi, ui
                spokes.append((vi, ui))
            if leaf_vi >= 0:
                steps.append(PendantRemoval(leaf_vi, leaf_ui))
                remove_edge(leaf_vi, leaf_ui)
            else:
                steps.append(SpokeRemoval(v, (anchors[0], anchors[1]), tuple(spokes)))
                for vi, _ in spokes:
                    remove_edge(v, vi)
        if not in_heap[v] and deg[v] >= 3 and cnt3[v] <= 2:
            in_heap[v] = 1
            push(heap, v)

    if num3 > 0:
        raise NotTwoDegenerateError(
            "no reducible vertex left although degree >= 3 remains")
    residual_eids = [eid for eid, (a, b) in enumerate(g.edges) if b in adj[a]]
    residual = build_graph(g.n, [g.edges[eid] for eid in residual_eids])
    return ReductionSchedule(tuple(steps), residual, tuple(residual_eids))


def format_step(step: ReductionStep) -> str:
    """Stable one-line rendering used by the CLI trace output."""
    if isinstance(step, PendantRemoval):
        return f"PENDANT {step.center} {step.pendant}"
    parts = [f"SPOKES {step.center} {step.anchors[0]} {step.anchors[1]}"]
    parts.extend(f"({vi},{ui})" for vi, ui in step.spokes)
    return " ".join(parts)
