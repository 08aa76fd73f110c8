"""Reducible-vertex search and schedule construction/replay."""

from __future__ import annotations

import pytest
from hypothesis import given, settings

from strongedge import (
    PendantRemoval,
    PreconditionError,
    SpokeRemoval,
    build_graph,
    build_schedule,
    classify_center,
    find_reducible_vertex,
    is_two_degenerate,
    max_degree,
    path_graph,
    star_graph,
    triangle_with_leaves,
)

from .strategies import two_degenerate_graphs


def brute_force_reducible(g):
    deg = g.degrees()
    for v in range(g.n):
        if deg[v] >= 3 and sum(1 for x in g.adjacency[v] if deg[x] >= 3) <= 2:
            return v
    return None


def apply_steps(g, steps):
    """Forward replay: remove each step's edges, checking recorded degrees."""
    adj = [set(nbrs) for nbrs in g.adjacency]
    for step in steps:
        if isinstance(step, PendantRemoval):
            assert len(adj[step.pendant]) == 1
            adj[step.center].remove(step.pendant)
            adj[step.pendant].remove(step.center)
        else:
            assert len(adj[step.center]) >= 3
            for vi, ui in step.spokes:
                assert len(adj[vi]) == 2
                assert ui in adj[vi]
            for vi, _ in step.spokes:
                adj[step.center].remove(vi)
                adj[vi].remove(step.center)
    return {frozenset((a, b)) for a in range(g.n) for b in adj[a] if a < b}


def test_p4_has_no_reducible_vertex():
    assert find_reducible_vertex(path_graph(4)) is None


def test_star_center_reducible():
    assert find_reducible_vertex(star_graph(5)) == 0


def test_triangle_with_leaves_reducible():
    assert find_reducible_vertex(triangle_with_leaves(4)) == 0


def test_finder_optional_precondition_check():
    k4 = build_graph(4, [(u, v) for u in range(4) for v in range(u + 1, 4)])
    from strongedge import NotTwoDegenerateError

    with pytest.raises(NotTwoDegenerateError):
        find_reducible_vertex(k4, require_two_degenerate=True)


def test_classify_center_star():
    g = star_graph(5)
    u, w, pendants, spokes = classify_center(g, 0)
    assert (u, w) == (1, 2)
    assert pendants == [3, 4, 5]
    assert spokes == []


def test_classify_center_triangle_with_leaves():
    g = triangle_with_leaves(4)
    u, w, pendants, spokes = classify_center(g, 0)
    assert (u, w) == (1, 2)
    assert pendants == [3, 4]
    assert spokes == []


def test_classify_center_spoke_pairing():
    # v=0 with heavy anchors 1 (deg 4) and 2 (deg 3), one spoke (3, 4)
    g = build_graph(10, [(0, 1), (0, 2), (0, 3), (3, 4),
                         (1, 5), (1, 6), (1, 7), (2, 8), (2, 9)])
    u, w, pendants, spokes = classify_center(g, 0)
    assert (u, w) == (1, 2)
    assert pendants == []
    assert spokes == [(3, 4)]


def test_classify_center_rejects_low_degree():
    with pytest.raises(PreconditionError):
        classify_center(path_graph(4), 1)


def test_schedule_p4_empty():
    sched = build_schedule(path_graph(4))
    assert sched.steps == ()
    assert sched.residual.m == 3


def test_schedule_star():
    g = star_graph(3)
    sched = build_schedule(g)
    assert len(sched.steps) == 1
    assert isinstance(sched.steps[0], PendantRemoval)
    assert max_degree(sched.residual) <= 2


def test_schedule_triangle_with_leaves_d3():
    sched = build_schedule(triangle_with_leaves(3))
    assert [type(s) for s in sched.steps] == [PendantRemoval] * 3
    assert sched.residual.m == 3  # the bare triangle remains


def test_schedule_peels_leaf_partner_before_spokes():
    # spoke partner 4 has degree 1: it must be peeled as a pendant first,
    # never primed later
    g = build_graph(9, [(0, 1), (0, 2), (0, 3), (3, 4),
                        (1, 5), (1, 6), (2, 7), (2, 8)])
    sched = build_schedule(g)
    assert sched.steps[0] == PendantRemoval(3, 4)
    assert all(isinstance(s, PendantRemoval) for s in sched.steps)


def test_schedule_records_spokes():
    g = build_graph(10, [(0, 1), (0, 2), (0, 3), (0, 4), (3, 5), (4, 5),
                         (1, 6), (1, 7), (2, 8), (2, 9)])
    sched = build_schedule(g)
    spoke_steps = [s for s in sched.steps if isinstance(s, SpokeRemoval)]
    assert spoke_steps == [SpokeRemoval(0, (1, 2), ((3, 5), (4, 5)))]


@settings(max_examples=120, deadline=None)
@given(two_degenerate_graphs())
def test_schedule_replay_reaches_residual(g):
    sched = build_schedule(g)
    remaining = apply_steps(g, sched.steps)
    residual_edges = {frozenset(e) for e in sched.residual.edges}
    assert remaining == residual_edges
    assert max_degree(sched.residual) <= 2
    assert [g.edges[eid] for eid in sched.residual_edge_ids] == sched.residual.edges


@settings(max_examples=120, deadline=None)
@given(two_degenerate_graphs())
def test_finder_matches_brute_force(g):
    got = find_reducible_vertex(g)
    assert got == brute_force_reducible(g)
    assert (got is None) == (max_degree(g) <= 2)


@settings(max_examples=60, deadline=None)
@given(two_degenerate_graphs(max_n=16))
def test_intermediate_graphs_stay_two_degenerate(g):
    adj = [set(nbrs) for nbrs in g.adjacency]
    for step in build_schedule(g).steps:
        pairs = [(step.center, step.pendant)] if isinstance(step, PendantRemoval) \
            else [(step.center, vi) for vi, _ in step.spokes]
        for a, b in pairs:
            adj[a].remove(b)
            adj[b].remove(a)
        sub = build_graph(g.n, [(a, b) for a in range(g.n) for b in adj[a] if a < b])
        assert is_two_degenerate(sub)
        assert max_degree(sub) <= max_degree(g)
