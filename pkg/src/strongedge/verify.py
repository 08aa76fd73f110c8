"""Independent checks for everything the coloring engine claims.

The checkers recompute edge-distance relations from the raw adjacency
and the raw color assignment; they share no decision logic with the
engine.  All functions are pure and report violations exhaustively in a
stable order.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .coloring import BASE, PRIMED, EdgeColoring
from .graph import Graph


class PartialColoringError(ValueError):
    pass


@dataclass(frozen=True)
class Violation:
    kind: str
    edges: tuple[int, ...] = ()
    vertices: tuple[int, ...] = ()
    colors: tuple[int, ...] = ()  # signed color keys

    def to_dict(self) -> dict:
        return {
            "kind": self.kind,
            "edges": list(self.edges),
            "vertices": list(self.vertices),
            "colors": [
                {"set": BASE if k > 0 else PRIMED, "index": abs(k)} for k in self.colors
            ],
        }


@dataclass(frozen=True)
class Verdict:
    ok: bool
    violations: tuple[Violation, ...] = ()

    @classmethod
    def from_violations(cls, violations: list[Violation]) -> Verdict:
        ordered = tuple(sorted(violations,
                               key=lambda v: (v.kind, v.edges, v.vertices, v.colors)))
        return cls(not ordered, ordered)

    def to_dict(self) -> dict:
        return {"ok": self.ok, "violations": [v.to_dict() for v in self.violations]}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), separators=(",", ":"))


def merge_verdicts(*verdicts: Verdict) -> Verdict:
    out: list[Violation] = []
    for v in verdicts:
        out.extend(v.violations)
    return Verdict.from_violations(out)


def _require_total(g: Graph, coloring: EdgeColoring) -> list[int]:
    if g.m != coloring.m:
        raise PartialColoringError("coloring has a different number of edges")
    keys = coloring.keys()
    if 0 in keys:
        raise PartialColoringError(f"edge {keys.index(0)} is uncolored")
    return keys


def _vertex_color_sets(g: Graph, keys: list[int]) -> tuple[list[set[int]], bool]:
    """Per-vertex sets of incident colors, plus whether any vertex carries
    a repeated color (which already implies a strong conflict)."""
    vsets: list[set[int]] = [set() for _ in range(g.n)]
    repeat = False
    for eid, (a, b) in enumerate(g.edges):
        k = keys[eid]
        if not k:
            continue
        sa = vsets[a]
        if k in sa:
            repeat = True
        sa.add(k)
        sb = vsets[b]
        if k in sb:
            repeat = True
        sb.add(k)
    return vsets, repeat


def _vertex_color_map(g: Graph, keys: list[int]) -> list[dict[int, list[int]]]:
    """Per vertex: color key -> ids of incident edges carrying it."""
    vc: list[dict[int, list[int]]] = [{} for _ in range(g.n)]
    for eid, (a, b) in enumerate(g.edges):
        k = keys[eid]
        if not k:
            continue
        vc[a].setdefault(k, []).append(eid)
        vc[b].setdefault(k, []).append(eid)
    return vc


def _conflicting_pairs(g: Graph, keys: list[int]) -> set[tuple[int, int, int]]:
    """All (e, f, color) with e < f within distance 1 and equally colored.

    Two edges are within distance 1 exactly when some edge touches both,
    possibly one of the pair itself; scanning each edge (x, y) for colors
    common to x's and y's incident sets therefore finds every pair.
    """
    vc = _vertex_color_map(g, keys)
    pairs: set[tuple[int, int, int]] = set()
    for eid, (x, y) in enumerate(g.edges):
        cx, cy = vc[x], vc[y]
        if len(cx) > len(cy):
            cx, cy = cy, cx
        for k, side_a in cx.items():
            side_b = cy.get(k)
            if side_b is None:
                continue
            if len(side_a) == 1 and side_a == side_b:
                continue  # only this edge itself carries k on both ends
            for e in side_a:
                for f in side_b:
                    if e != f:
                        pairs.add((e, f, k) if e < f else (f, e, k))
    return pairs


def _pairs_by_color_class(g: Graph, keys: list[int]) -> set[tuple[int, int, int]]:
    """Second formulation: check each color class is an induced matching."""
    classes: dict[int, list[int]] = {}
    for eid, k in enumerate(keys):
        if k:
            classes.setdefault(k, []).append(eid)
    pairs: set[tuple[int, int, int]] = set()
    for k, eids in classes.items():
        cover: dict[int, list[int]] = {}
        for eid in eids:
            a, b = g.edges[eid]
            cover.setdefault(a, []).append(eid)
            cover.setdefault(b, []).append(eid)
        for x, here in cover.items():
            for e in here:
                for f in here:
                    if e < f:
                        pairs.add((e, f, k))  # share the vertex x
            for y in g.adjacency[x]:
                there = cover.get(y)
                if there is None:
                    continue
                for e in here:
                    for f in there:
                        if e != f:
                            pairs.add((e, f, k) if e < f else (f, e, k))
    return pairs


def verify_strong(g: Graph, coloring: EdgeColoring, audit: bool = False) -> Verdict:
    """Check that no two edges within distance 1 share a color.

    A cheap scan looks for any color common to both endpoints of some
    edge (beyond that edge's own); only if it finds something, or a color
    repeats at a vertex, are the offending pairs enumerated exhaustively.
    With audit=True the induced-matching-per-class formulation is run as
    well and the two result sets are required to agree.
    """
    keys = _require_total(g, coloring)
    vsets, suspicious = _vertex_color_sets(g, keys)
    if not suspicious:
        for x, y in g.edges:
            if len(vsets[x] & vsets[y]) > 1:
                suspicious = True
                break
    pairs: set[tuple[int, int, int]] = set()
    if suspicious:
        pairs = _conflicting_pairs(g, keys)
    if audit:
        alt = _pairs_by_color_class(g, keys)
        if alt != pairs:
            raise RuntimeError(
                f"strong-coloring formulations disagree: {sorted(pairs ^ alt)[:5]} ...")
    return Verdict.from_violations([
        Violation("strong_conflict", edges=(e, f), colors=(k,))
        for e, f, k in pairs
    ])


def verify_theorem_properties(g: Graph, coloring: EdgeColoring) -> Verdict:
    """Check the three pendant/prime properties of a total coloring:
    pendant edges carry base colors, the twin of a pendant edge's color
    stays off every edge within distance 1, and no vertex sees a color
    together with its twin."""
    keys = _require_total(g, coloring)
    vsets, _ = _vertex_color_sets(g, keys)
    violations: list[Violation] = []

    def edges_at_with(z: int, k: int) -> list[int]:
        return [eid for eid in g.incident[z] if keys[eid] == k]

    deg = g.degrees()
    for eid, (a, b) in enumerate(g.edges):
        if deg[a] != 1 and deg[b] != 1:
            continue
        k = keys[eid]
        if k < 0:
            violations.append(Violation("pendant_not_in_b", edges=(eid,), colors=(k,)))
            continue
        zone = {a, b}
        zone.update(g.adjacency[a])
        zone.update(g.adjacency[b])
        offenders: set[int] = set()
        for z in zone:
            if -k in vsets[z]:
                offenders.update(edges_at_with(z, -k))
        for f in sorted(offenders):
            violations.append(Violation(
                "pendant_prime_within_distance_one", edges=(eid, f), colors=(k, -k)))

    for v in range(g.n):
        present = vsets[v]
        for k in present:
            if k > 0 and -k in present:
                involved = tuple(sorted(edges_at_with(v, k) + edges_at_with(v, -k)))
                violations.append(Violation(
                    "prime_pair_at_vertex", edges=involved, vertices=(v,),
                    colors=(k, -k)))
    return Verdict.from_violations(violations)


def verify_bound(coloring: EdgeColoring, delta_param: int) -> Verdict:
    """Check all indices fit the palette for delta_param and at most
    8*delta - 4 distinct colors are used."""
    limit = 4 * delta_param - 2
    violations: list[Violation] = []
    used: set[int] = set()
    for eid, k in enumerate(coloring.keys()):
        if not k:
            continue
        used.add(k)
        if abs(k) > limit:
            violations.append(Violation(
                "color_index_out_of_range", edges=(eid,), colors=(k,)))
    if len(used) > 8 * delta_param - 4:
        violations.append(Violation("too_many_colors", colors=()))
    return Verdict.from_violations(violations)


def verify_all(g: Graph, coloring: EdgeColoring,
               delta_param: int | None = None, audit: bool = False) -> Verdict:
    """All three checks merged into one verdict."""
    if delta_param is None:
        delta_param = coloring.delta_param
    return merge_verdicts(
        verify_strong(g, coloring, audit=audit),
        verify_theorem_properties(g, coloring),
        verify_bound(coloring, delta_param),
    )
