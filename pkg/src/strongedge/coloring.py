"""Dual-palette strong edge-coloring of 2-degenerate graphs.

The palette is B = {1, ..., 4*delta - 2} plus a primed twin B' of the
same size, so at most 8*delta - 4 colors are ever used.  Colors are kept
internally as signed integers: +k means (B, k), -k means (B', k), 0 means
unassigned.  Every total coloring produced here satisfies, besides being
strong:

  (1) every pendant edge carries a color from B;
  (2) a pendant edge colored c in B has no edge within distance 1
      colored c';
  (3) no vertex is incident to both c and c' for any index.

A run mutates only its own EdgeColoring; graphs and schedules are
read-only, so runs on different graphs can proceed concurrently.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .graph import Graph, is_two_degenerate, max_degree
from .reduction import (
    NotTwoDegenerateError,
    PendantRemoval,
    PreconditionError,
    SpokeRemoval,
    build_schedule,
)

BASE = "B"
PRIMED = "B'"


class NoColorAvailableError(RuntimeError):
    """The base palette was exhausted at an extension site (unreachable
    for valid inputs; raised instead of emitting an invalid coloring)."""


class CountingBoundError(RuntimeError):
    """A spoke forbidden set exceeded 4*delta - 3 (unreachable)."""


class DegreeTooHighError(ValueError):
    pass


class NotPendantError(ValueError):
    pass


class NotBColoredError(ValueError):
    pass


@dataclass(frozen=True)
class PaletteColor:
    """A color from the dual palette: half "B" or "B'", index >= 1."""

    half: str
    index: int

    def __post_init__(self):
        if self.half not in (BASE, PRIMED):
            raise ValueError(f"half must be {BASE!r} or {PRIMED!r}, got {self.half!r}")
        if self.index < 1:
            raise ValueError(f"index must be >= 1, got {self.index}")

    def prime(self) -> PaletteColor:
        """Twin color in the other half; an involution."""
        return PaletteColor(PRIMED if self.half == BASE else BASE, self.index)

    @property
    def key(self) -> int:
        return self.index if self.half == BASE else -self.index

    @classmethod
    def from_key(cls, key: int) -> PaletteColor:
        if key == 0:
            raise ValueError("key 0 means unassigned, not a color")
        return cls(BASE if key > 0 else PRIMED, abs(key))

    def __str__(self) -> str:
        return f"{self.index}'" if self.half == PRIMED else str(self.index)


@dataclass
class RunStats:
    """Evidence of the counting bounds observed during one coloring run.

    On a successful run max_omega <= 4*delta - 3 (enforced at runtime)
    and max_pendant_forbidden <= 4*delta - 6: a pendant's forbidden set
    draws on two anchors of degree <= delta plus degree-2 fill neighbors,
    and both bounds leave base colors to spare out of 4*delta - 2.
    """

    colors_used: int = 0
    max_omega: int = 0
    max_pendant_forbidden: int = 0
    steps_replayed: int = 0


class EdgeColoring:
    """Partial or total assignment edge id -> palette color.

    Tracks, per vertex, the multiset of colors on its colored incident
    edges; assign/overwrite keep that index exact, including during the
    colored-to-colored transitions of priming.
    """

    __slots__ = ("delta_param", "palette_size", "_colors", "_incident", "_edges")

    def __init__(self, g: Graph, delta_param: int):
        if delta_param < 1:
            raise ValueError(f"delta_param must be >= 1, got {delta_param}")
        self.delta_param = delta_param
        self.palette_size = 4 * delta_param - 2
        self._colors = [0] * g.m
        self._incident: list[dict[int, int]] = [{} for _ in range(g.n)]
        self._edges = g.edges

    @property
    def m(self) -> int:
        return len(self._colors)

    def key_of(self, eid: int) -> int:
        return self._colors[eid]

    def color_of(self, eid: int) -> PaletteColor | None:
        k = self._colors[eid]
        return PaletteColor.from_key(k) if k else None

    def keys(self) -> list[int]:
        """Signed color keys in edge-id order (0 = unassigned)."""
        return list(self._colors)

    def incident_keys(self, v: int):
        """Set-like view of the colors currently present at v."""
        return self._incident[v].keys()

    def is_total(self) -> bool:
        return 0 not in self._colors

    def distinct_colors_used(self) -> int:
        return len({k for k in self._colors if k})

    def _check_key(self, key: int) -> None:
        if not 1 <= abs(key) <= self.palette_size:
            raise ValueError(
                f"color index {abs(key)} outside palette [1, {self.palette_size}]")

    def _incident_add(self, v: int, key: int) -> None:
        d = self._incident[v]
        d[key] = d.get(key, 0) + 1

    def _incident_remove(self, v: int, key: int) -> None:
        d = self._incident[v]
        c = d[key] - 1
        if c:
            d[key] = c
        else:
            del d[key]

    def assign(self, eid: int, color: PaletteColor | int) -> None:
        key = color.key if isinstance(color, PaletteColor) else color
        self._check_key(key)
        if self._colors[eid]:
            raise ValueError(f"edge {eid} already colored; use overwrite")
        self._colors[eid] = key
        a, b = self._edges[eid]
        self._incident_add(a, key)
        self._incident_add(b, key)

    def overwrite(self, eid: int, color: PaletteColor | int) -> None:
        key = color.key if isinstance(color, PaletteColor) else color
        self._check_key(key)
        old = self._colors[eid]
        if not old:
            raise ValueError(f"edge {eid} not colored yet; use assign")
        self._colors[eid] = key
        a, b = self._edges[eid]
        self._incident_remove(a, old)
        self._incident_remove(b, old)
        self._incident_add(a, key)
        self._incident_add(b, key)

    def copy(self) -> EdgeColoring:
        dup = object.__new__(EdgeColoring)
        dup.delta_param = self.delta_param
        dup.palette_size = self.palette_size
        dup._colors = list(self._colors)
        dup._incident = [dict(d) for d in self._incident]
        dup._edges = self._edges
        return dup


class _DictView:
    """Adapter giving the replay's list-of-dicts adjacency the neighbor
    interface the shared checks expect."""

    __slots__ = ("adj",)

    def __init__(self, adj: list[dict[int, int]]):
        self.adj = adj

    def neighbors(self, v: int):
        return self.adj[v].keys()

    def edge_id(self, u: int, v: int) -> int:
        return self.adj[u][v]


def color_base_case(g: Graph, delta_param: int) -> EdgeColoring:
    """Strong-color a graph of max degree <= 2 with base-palette colors only.

    Walks every path component from its lowest endpoint and every cycle
    from its lowest vertex (toward the lower neighbor), assigning each
    edge the lowest index free of conflicts among already-colored edges
    within distance 1.  Uses at most 5 distinct colors and never touches
    the primed half, so the three pendant/prime properties hold trivially.
    """
    dmax = max_degree(g)
    if dmax > 2:
        raise DegreeTooHighError(f"max degree {dmax} > 2")
    if delta_param < max(1, dmax):
        raise ValueError(f"delta_param {delta_param} below max degree {dmax}")
    coloring = EdgeColoring(g, delta_param)
    visited = [False] * g.n

    def assign_lowest(a: int, b: int) -> None:
        forbidden = set()
        zone = {a, b}
        zone.update(g.adjacency[a])
        zone.update(g.adjacency[b])
        for z in zone:
            forbidden.update(coloring.incident_keys(z))
        t = 1
        while t in forbidden:
            t += 1
        if t > coloring.palette_size:
            raise NoColorAvailableError(f"palette exhausted on edge ({a}, {b})")
        coloring.assign(g.edge_id(a, b), t)

    for start in range(g.n):
        if visited[start] or g.degree(start) != 1:
            continue
        visited[start] = True
        prev, cur = -1, start
        while True:
            nxt = next((x for x in g.adjacency[cur] if x != prev), None)
            if nxt is None:
                break
            assign_lowest(cur, nxt)
            visited[nxt] = True
            prev, cur = cur, nxt
    for start in range(g.n):
        if visited[start] or g.degree(start) == 0:
            continue
        visited[start] = True
        prev, cur = -1, start
        while True:
            nxt = next(x for x in g.adjacency[cur] if x != prev)
            assign_lowest(cur, nxt)
            visited[nxt] = True
            prev, cur = cur, nxt
            if cur == start:
                break
    return coloring


def _pendant_extend(coloring: EdgeColoring, view, v: int, v1: int,
                    stats: RunStats | None) -> None:
    """Color the pendant edge v-v1: lowest base index whose color and twin
    are both absent from the colors around v."""
    forbidden = set()
    for x in view.neighbors(v):
        for c in coloring.incident_keys(x):
            forbidden.add(abs(c))
    if stats is not None and len(forbidden) > stats.max_pendant_forbidden:
        stats.max_pendant_forbidden = len(forbidden)
    t = 1
    while t in forbidden:
        t += 1
    if t > coloring.palette_size:
        raise NoColorAvailableError(
            f"no base color left for pendant edge ({v}, {v1})")
    coloring.assign(view.edge_id(v, v1), t)


def extend_pendant(coloring: EdgeColoring, g: Graph, v: int, v1: int,
                   stats: RunStats | None = None) -> EdgeColoring:
    """Extend a valid coloring of g - v1 to g by coloring the edge v-v1.

    Mutates `coloring` in place and returns it.  The chosen color c has
    both c and c' unused within distance 1 of the new edge, so all three
    properties survive.
    """
    if g.degree(v1) != 1:
        raise PreconditionError(f"vertex {v1} has degree {g.degree(v1)}, not 1")
    eid = g.edge_id(v, v1)
    if coloring.key_of(eid):
        raise PreconditionError(f"edge ({v}, {v1}) is already colored")
    _pendant_extend(coloring, g, v, v1, stats)
    return coloring


def prime_pendant(coloring: EdgeColoring, g1: Graph, eid: int) -> EdgeColoring:
    """Swap a pendant edge's base color c for its twin c'.

    The result is still a strong coloring and keeps properties (2) and
    (3); property (1) now fails exactly at this edge.  Mutates in place.
    """
    a, b = g1.edges[eid]
    if g1.degree(a) != 1 and g1.degree(b) != 1:
        raise NotPendantError(f"edge {eid} = ({a}, {b}) has no degree-1 endpoint")
    key = coloring.key_of(eid)
    if key <= 0:
        raise NotBColoredError(f"edge {eid} does not carry a base-palette color")
    coloring.overwrite(eid, -key)
    return coloring


def _spoke_extend(coloring: EdgeColoring, view, step: SpokeRemoval,
                  stats: RunStats | None, paranoid: bool) -> None:
    v = step.center
    u, w = step.anchors
    cu = coloring.key_of(view.edge_id(v, u))
    cw = coloring.key_of(view.edge_id(v, w))
    if cu == 0 or cw == 0:
        raise PreconditionError("anchor edges must be colored")

    # phase 1: prime each distinct partner edge unless its twin collides
    # with an anchor color (a shared partner edge is primed at most once)
    seen: set[int] = set()
    for vi, ui in step.spokes:
        pe = view.edge_id(vi, ui)
        if pe in seen:
            continue
        seen.add(pe)
        c = coloring.key_of(pe)
        if c <= 0:
            raise PreconditionError(
                f"partner edge ({vi}, {ui}) must carry a base-palette color")
        if -c != cu and -c != cw:
            coloring.overwrite(pe, -c)

    # phase 2: color the spokes in order, each avoiding its forbidden set
    bound = 4 * coloring.delta_param - 3
    assigned: list[int] = []
    for vi, ui in step.spokes:
        cp = coloring.key_of(view.edge_id(vi, ui))
        omega: set[int] = set()
        for c in (cu, cw):
            if c > 0:
                omega.add(c)
        for c in (cu, cw, cp):
            if c < 0:
                omega.add(-c)
        omega.update(assigned)
        for x in (ui, u, w):
            for c in coloring.incident_keys(x):
                if c > 0:
                    omega.add(c)
        if stats is not None and len(omega) > stats.max_omega:
            stats.max_omega = len(omega)
        if len(omega) > bound:
            raise CountingBoundError(
                f"forbidden set size {len(omega)} exceeds {bound} at spoke ({v}, {vi})")
        t = 1
        while t in omega:
            t += 1
        if t > coloring.palette_size:
            raise NoColorAvailableError(f"no base color left for spoke ({v}, {vi})")
        if paranoid:
            _check_choice(coloring, view, v, vi, t)
        coloring.assign(view.edge_id(v, vi), t)
        assigned.append(t)


def _check_choice(coloring: EdgeColoring, view, a: int, b: int, t: int) -> None:
    """Paranoid cross-check: t must avoid every color within distance 1 of
    the edge a-b, and its twin must be absent at both endpoints."""
    zone = {a, b}
    zone.update(view.neighbors(a))
    zone.update(view.neighbors(b))
    for z in zone:
        if t in coloring.incident_keys(z):
            raise AssertionError(
                f"color {t} for edge ({a}, {b}) collides within distance 1 at {z}")
    for z in (a, b):
        if -t in coloring.incident_keys(z):
            raise AssertionError(
                f"twin of color {t} already present at endpoint {z}")


def _check_primed(coloring: EdgeColoring, view, a: int, b: int, old: int) -> None:
    """Paranoid cross-check after priming the edge a-b away from `old`:
    the coloring around it must still be strong and twin-free, i.e. the
    new color appears exactly once in the distance-1 zone (on a-b itself)
    and the old color nowhere at all."""
    new = -old
    counts = coloring._incident
    zone = {a, b}
    zone.update(view.neighbors(a))
    zone.update(view.neighbors(b))
    for z in zone:
        expected = 1 if z in (a, b) else 0
        if counts[z].get(new, 0) != expected:
            raise AssertionError(
                f"primed color {new} duplicated near edge ({a}, {b}) at {z}")
        if counts[z].get(old, 0) != 0:
            raise AssertionError(
                f"old color {old} still within distance 1 of primed edge "
                f"({a}, {b}) at {z}")


def extend_spokes(coloring: EdgeColoring, g: Graph, step: SpokeRemoval,
                  stats: RunStats | None = None,
                  paranoid: bool = False) -> EdgeColoring:
    """Extend a valid coloring of g minus the spoke edges to all of g.

    Phase 1 primes the partner edges v_i-u_i (each was pendant, hence
    base-colored, in the smaller graph) unless the twin color collides
    with an anchor color.  Phase 2 colors each spoke v-v_i with the
    lowest base color outside its forbidden set: the anchors' base
    colors, the twins of primed colors seen on anchors and partner,
    spokes already colored at v, and the base colors present at u_i, u,
    and w.  Mutates in place and returns the coloring.
    """
    for vi, ui in step.spokes:
        if coloring.key_of(g.edge_id(step.center, vi)):
            raise PreconditionError(f"spoke edge ({step.center}, {vi}) already colored")
        g.edge_id(vi, ui)
    _spoke_extend(coloring, g, step, stats, paranoid)
    return coloring


def strong_color(g: Graph, delta_param: int | None = None,
                 paranoid: bool = False) -> tuple[EdgeColoring, RunStats]:
    """Strong edge-coloring of a 2-degenerate graph from the dual palette.

    Builds the reduction schedule, colors the residual greedily, then
    replays the steps in reverse, extending pendants and spokes.  The
    output is total, strong, satisfies the pendant/prime properties, and
    uses colors with index at most 4*delta - 2 from each half.
    """
    dmax = max_degree(g)
    if delta_param is None:
        delta_param = max(1, dmax)
    if delta_param < dmax:
        raise ValueError(f"delta_param {delta_param} below max degree {dmax}")
    if not is_two_degenerate(g):
        raise NotTwoDegenerateError("input graph is not 2-degenerate")

    schedule = build_schedule(g)
    base = color_base_case(schedule.residual, delta_param)
    coloring = EdgeColoring(g, delta_param)

    # transplant the residual colors, then replay removals in reverse;
    # everything below works on the coloring's internals directly, the
    # unit-step code path is extend_pendant / extend_spokes
    colors = coloring._colors
    incident = coloring._incident
    edges = g.edges
    edge_index = g.edge_index
    palette = coloring.palette_size
    omega_bound = 4 * delta_param - 3

    view: list[dict[int, int]] = [{} for _ in range(g.n)]
    for res_eid, orig_eid in enumerate(schedule.residual_edge_ids):
        k = base._colors[res_eid]
        colors[orig_eid] = k
        a, b = edges[orig_eid]
        view[a][b] = orig_eid
        view[b][a] = orig_eid
        d = incident[a]
        d[k] = d.get(k, 0) + 1
        d = incident[b]
        d[k] = d.get(k, 0) + 1

    stats = RunStats()
    for step in reversed(schedule.steps):
        if type(step) is PendantRemoval:
            v, v1 = step.center, step.pendant
            eid = edge_index[(v, v1) if v < v1 else (v1, v)]
            view[v][v1] = eid
            view[v1][v] = eid
            forbidden = set()
            for x in view[v]:
                forbidden.update(incident[x])
            # distinct indices: a color and its twin collapse to one
            twins = sum(1 for c in forbidden if c < 0 and -c in forbidden)
            if len(forbidden) - twins > stats.max_pendant_forbidden:
                stats.max_pendant_forbidden = len(forbidden) - twins
            t = 1
            while t in forbidden or -t in forbidden:
                t += 1
            if t > palette:
                raise NoColorAvailableError(
                    f"no base color left for pendant edge ({v}, {v1})")
            colors[eid] = t
            d = incident[v]
            d[t] = d.get(t, 0) + 1
            d = incident[v1]
            d[t] = d.get(t, 0) + 1
        else:
            v = step.center
            u, w = step.anchors
            for vi, _ in step.spokes:
                eid = edge_index[(v, vi) if v < vi else (vi, v)]
                view[v][vi] = eid
                view[vi][v] = eid
            cu = colors[view[v][u]]
            cw = colors[view[v][w]]
            seen: set[int] = set()
            for vi, ui in step.spokes:
                pe = view[vi][ui]
                if pe in seen:
                    continue
                seen.add(pe)
                c = colors[pe]
                if c <= 0:
                    raise PreconditionError(
                        f"partner edge ({vi}, {ui}) must carry a base-palette color")
                if -c != cu and -c != cw:
                    colors[pe] = -c
                    for z in edges[pe]:
                        d = incident[z]
                        cnt = d[c] - 1
                        if cnt:
                            d[c] = cnt
                        else:
                            del d[c]
                        d[-c] = d.get(-c, 0) + 1
            assigned: list[int] = []
            for vi, ui in step.spokes:
                cp = colors[view[vi][ui]]
                # raw incident keys are folded in wholesale; primed keys
                # are inert for the probe below, which only tests base
                # indices, and are subtracted from the recorded size
                omega: set[int] = {cu if cu > 0 else -cu, cw if cw > 0 else -cw}
                if cp < 0:
                    omega.add(-cp)
                omega.update(assigned)
                omega.update(incident[ui])
                omega.update(incident[u])
                omega.update(incident[w])
                size = sum(1 for c in omega if c > 0)
                if size > stats.max_omega:
                    stats.max_omega = size
                if size > omega_bound:
                    raise CountingBoundError(
                        f"forbidden set size {size} exceeds {omega_bound} "
                        f"at spoke ({v}, {vi})")
                t = 1
                while t in omega:
                    t += 1
                if t > palette:
                    raise NoColorAvailableError(
                        f"no base color left for spoke ({v}, {vi})")
                if paranoid:
                    _check_choice(coloring, _DictView(view), v, vi, t)
                eid = view[v][vi]
                colors[eid] = t
                d = incident[v]
                d[t] = d.get(t, 0) + 1
                d = incident[vi]
                d[t] = d.get(t, 0) + 1
                assigned.append(t)
        stats.steps_replayed += 1
    stats.colors_used = coloring.distinct_colors_used()
    return coloring, stats


def coloring_to_dict(g: Graph, coloring: EdgeColoring, stats: RunStats) -> dict:
    """Coloring JSON object (stable key order for byte-reproducibility)."""
    colors = []
    for eid in range(g.m):
        k = coloring.key_of(eid)
        colors.append({"set": BASE if k > 0 else PRIMED, "index": abs(k)} if k else None)
    return {
        "n": g.n,
        "delta_param": coloring.delta_param,
        "palette_size": coloring.palette_size,
        "edges": [[u, v] for u, v in g.edges],
        "colors": colors,
        "stats": {
            "colors_used": stats.colors_used,
            "max_omega": stats.max_omega,
            "max_pendant_forbidden": stats.max_pendant_forbidden,
        },
    }


def coloring_to_json(g: Graph, coloring: EdgeColoring, stats: RunStats) -> str:
    return json.dumps(coloring_to_dict(g, coloring, stats), separators=(",", ":"))


def coloring_from_dict(g: Graph, data: dict) -> tuple[EdgeColoring, dict]:
    """Rebuild an EdgeColoring from its JSON object, checking it matches g."""
    if data.get("n") != g.n:
        raise ValueError(f"coloring is for n={data.get('n')}, graph has n={g.n}")
    edges = [tuple(e) for e in data.get("edges", [])]
    if edges != list(g.edges):
        raise ValueError("coloring edge list does not match the graph")
    coloring = EdgeColoring(g, int(data["delta_param"]))
    for eid, entry in enumerate(data.get("colors", [])):
        if entry is None:
            continue
        color = PaletteColor(entry["set"], int(entry["index"]))
        coloring.assign(eid, color)
    return coloring, data.get("stats", {})
