"""Palette arithmetic, base-case coloring, the three extension moves, and
the full coloring engine."""

from __future__ import annotations

import pytest
from hypothesis import given, settings

from strongedge import (
    BASE,
    PRIMED,
    DegreeTooHighError,
    EdgeColoring,
    NotBColoredError,
    NotPendantError,
    PaletteColor,
    SpokeRemoval,
    build_graph,
    color_base_case,
    coloring_from_dict,
    coloring_to_dict,
    coloring_to_json,
    cycle_graph,
    extend_pendant,
    extend_spokes,
    max_degree,
    path_graph,
    prime_pendant,
    star_graph,
    strong_color,
    triangle_with_leaves,
    verify_all,
    verify_strong,
    verify_theorem_properties,
)

from .strategies import two_degenerate_graphs


# ---------------------------------------------------------------- palette

def test_palette_color_prime_is_involution():
    c = PaletteColor(BASE, 7)
    assert c.prime() == PaletteColor(PRIMED, 7)
    assert c.prime().prime() == c
    assert c.key == 7 and c.prime().key == -7
    assert PaletteColor.from_key(-3) == PaletteColor(PRIMED, 3)


def test_palette_color_validation():
    with pytest.raises(ValueError):
        PaletteColor("C", 1)
    with pytest.raises(ValueError):
        PaletteColor(BASE, 0)
    with pytest.raises(ValueError):
        PaletteColor.from_key(0)


def test_edge_coloring_incident_index():
    g = path_graph(3)
    col = EdgeColoring(g, 2)
    col.assign(0, 1)
    col.assign(1, PaletteColor(BASE, 2))
    assert set(col.incident_keys(1)) == {1, 2}
    col.overwrite(1, -2)
    assert set(col.incident_keys(1)) == {1, -2}
    assert set(col.incident_keys(2)) == {-2}
    with pytest.raises(ValueError):
        col.assign(0, 3)  # already colored
    with pytest.raises(ValueError):
        col.overwrite(1, 99)  # outside palette (4*2 - 2 = 6)


# -------------------------------------------------------------- base case

def test_base_case_single_edge():
    g = build_graph(2, [(0, 1)])
    col = color_base_case(g, 1)
    assert col.key_of(0) == 1


def test_base_case_p4_walk_order():
    g = path_graph(4)
    col = color_base_case(g, 2)
    assert [col.key_of(e) for e in range(3)] == [1, 2, 3]


def test_base_case_c5_uses_five():
    g = cycle_graph(5)
    col = color_base_case(g, 2)
    assert sorted(col.key_of(e) for e in range(5)) == [1, 2, 3, 4, 5]


def test_base_case_rejects_high_degree():
    with pytest.raises(DegreeTooHighError):
        color_base_case(star_graph(3), 3)


@settings(max_examples=60)
@given(two_degenerate_graphs(max_n=20, max_cap=2))
def test_base_case_purity(g):
    if max_degree(g) > 2:
        return
    col = color_base_case(g, 2)
    keys = {col.key_of(e) for e in range(g.m)}
    assert all(k > 0 for k in keys)
    assert len(keys) <= min(5, 4 * 2 - 2)
    assert verify_all(g, col, audit=True).ok


def test_base_case_long_cycles_stay_within_five():
    for n in (3, 4, 5, 6, 7, 12, 17):
        g = cycle_graph(n)
        col = color_base_case(g, 2)
        assert len({col.key_of(e) for e in range(g.m)}) <= 5
        assert verify_strong(g, col).ok


# -------------------------------------------------------- pendant extension

def test_extend_pendant_star_grown():
    g = star_graph(3)
    col = EdgeColoring(g, 3)
    col.assign(g.edge_id(0, 1), 1)
    col.assign(g.edge_id(0, 2), 2)
    extend_pendant(col, g, 0, 3)
    assert col.key_of(g.edge_id(0, 3)) == 3


def test_extend_pendant_excludes_primed_indices():
    g = build_graph(4, [(0, 1), (0, 2), (2, 3)])
    col = EdgeColoring(g, 2)
    col.assign(g.edge_id(0, 2), 2)
    col.assign(g.edge_id(2, 3), -5)
    extend_pendant(col, g, 0, 1)
    assert col.key_of(g.edge_id(0, 1)) == 1
    col2 = EdgeColoring(g, 2)
    col2.assign(g.edge_id(0, 2), 1)
    col2.assign(g.edge_id(2, 3), -2)
    extend_pendant(col2, g, 0, 1)
    # index 2 is excluded through its primed twin, so 3 is the lowest left
    assert col2.key_of(g.edge_id(0, 1)) == 3


def test_extend_pendant_isolated_edge():
    g = build_graph(2, [(0, 1)])
    col = EdgeColoring(g, 1)
    extend_pendant(col, g, 0, 1)
    assert col.key_of(0) == 1


def test_extend_pendant_records_forbidden_size():
    from strongedge import RunStats

    g = star_graph(3)
    col = EdgeColoring(g, 3)
    col.assign(g.edge_id(0, 1), 1)
    col.assign(g.edge_id(0, 2), 2)
    stats = RunStats()
    extend_pendant(col, g, 0, 3, stats)
    assert stats.max_pendant_forbidden == 2


# ----------------------------------------------------------------- priming

def test_prime_pendant_p3():
    g = path_graph(3)
    col = EdgeColoring(g, 2)
    col.assign(0, 1)
    col.assign(1, 2)
    prime_pendant(col, g, 0)
    assert col.key_of(0) == -1
    assert verify_strong(g, col).ok
    verdict = verify_theorem_properties(g, col)
    assert [v.kind for v in verdict.violations] == ["pendant_not_in_b"]
    assert verdict.violations[0].edges == (0,)


def test_prime_pendant_single_edge():
    g = build_graph(2, [(0, 1)])
    col = EdgeColoring(g, 1)
    col.assign(0, 1)
    prime_pendant(col, g, 0)
    assert col.key_of(0) == -1


def test_prime_pendant_p4_keeps_other_properties():
    g = path_graph(4)
    col = color_base_case(g, 2)
    cd = g.edge_id(2, 3)
    prime_pendant(col, g, cd)
    assert col.key_of(cd) == -3
    assert verify_strong(g, col, audit=True).ok
    verdict = verify_theorem_properties(g, col)
    kinds = [v.kind for v in verdict.violations]
    assert kinds == ["pendant_not_in_b"]


def test_prime_pendant_errors():
    g = path_graph(4)
    col = color_base_case(g, 2)
    with pytest.raises(NotPendantError):
        prime_pendant(col, g, g.edge_id(1, 2))
    bc = g.edge_id(2, 3)
    prime_pendant(col, g, bc)
    with pytest.raises(NotBColoredError):
        prime_pendant(col, g, bc)


# ----------------------------------------------------------------- spokes

def spoke_fixture():
    # center 0, anchors 1 and 2, one spoke (3, 4)
    g = build_graph(5, [(0, 1), (0, 2), (0, 3), (3, 4)])
    col = EdgeColoring(g, 3)
    step = SpokeRemoval(0, (1, 2), ((3, 4),))
    return g, col, step


def test_extend_spokes_primes_partner_then_colors():
    g, col, step = spoke_fixture()
    col.assign(g.edge_id(0, 1), 1)
    col.assign(g.edge_id(0, 2), 2)
    col.assign(g.edge_id(3, 4), 3)
    extend_spokes(col, g, step)
    assert col.key_of(g.edge_id(3, 4)) == -3
    assert col.key_of(g.edge_id(0, 3)) == 4


def test_extend_spokes_priming_compares_full_colors():
    # partner shares the anchor's index but not its half: priming proceeds
    g, col, step = spoke_fixture()
    col.assign(g.edge_id(0, 1), 1)
    col.assign(g.edge_id(0, 2), 2)
    col.assign(g.edge_id(3, 4), 1)
    extend_spokes(col, g, step)
    assert col.key_of(g.edge_id(3, 4)) == -1


def test_extend_spokes_blocked_priming_feeds_forbidden_set():
    # anchor already carries the primed twin: partner stays in B and its
    # color is forbidden for the spoke
    g, col, step = spoke_fixture()
    col.assign(g.edge_id(0, 1), -2)
    col.assign(g.edge_id(0, 2), 1)
    col.assign(g.edge_id(3, 4), 2)
    extend_spokes(col, g, step)
    assert col.key_of(g.edge_id(3, 4)) == 2
    assert col.key_of(g.edge_id(0, 3)) == 3


def test_extend_spokes_requires_base_colored_partner():
    from strongedge import PreconditionError

    g, col, step = spoke_fixture()
    col.assign(g.edge_id(0, 1), 1)
    col.assign(g.edge_id(0, 2), 2)
    col.assign(g.edge_id(3, 4), -3)
    with pytest.raises(PreconditionError):
        extend_spokes(col, g, step)


# ------------------------------------------------------------- full engine

def test_strong_color_empty_graph():
    g = build_graph(0, [])
    col, stats = strong_color(g)
    assert stats.colors_used == 0


def test_strong_color_p5_base_only():
    g = path_graph(5)
    col, stats = strong_color(g)
    assert stats.colors_used == 3
    assert stats.steps_replayed == 0
    assert all(col.key_of(e) > 0 for e in range(g.m))


def test_strong_color_triangle_with_leaves_bound():
    g = triangle_with_leaves(3)
    col, stats = strong_color(g, delta_param=3)
    assert col.palette_size == 10
    assert stats.colors_used <= 20
    assert verify_all(g, col, delta_param=3, audit=True).ok


def test_strong_color_rejects_small_delta():
    with pytest.raises(ValueError):
        strong_color(star_graph(4), delta_param=3)


def test_strong_color_rejects_non_two_degenerate():
    from strongedge import NotTwoDegenerateError

    k4 = build_graph(4, [(u, v) for u in range(4) for v in range(u + 1, 4)])
    with pytest.raises(NotTwoDegenerateError):
        strong_color(k4)


@settings(max_examples=120, deadline=None)
@given(two_degenerate_graphs())
def test_theorem_contract(g):
    col, stats = strong_color(g)
    delta = max(1, max_degree(g))
    assert verify_all(g, col, delta_param=delta, audit=True).ok
    assert stats.max_omega <= 4 * delta - 3
    # sharp pendant bound: two full anchors plus the degree-2 fill,
    # 2*delta + 2*(delta - 3) = 4*delta - 6, and it is attained
    if delta >= 3:
        assert stats.max_pendant_forbidden <= 4 * delta - 6


@settings(max_examples=60, deadline=None)
@given(two_degenerate_graphs(max_n=20))
def test_paranoid_mode_agrees(g):
    col_a, _ = strong_color(g)
    col_b, _ = strong_color(g, paranoid=True)
    assert col_a.keys() == col_b.keys()


@settings(max_examples=80, deadline=None)
@given(two_degenerate_graphs(max_n=24))
def test_engine_matches_stepwise_public_ops(g):
    # replaying the schedule through the public extension ops, each applied
    # to the intermediate graph the step was recorded on, must land on
    # exactly the colors and stats the engine produces
    from strongedge import PendantRemoval, RunStats, build_graph, build_schedule

    engine, engine_stats = strong_color(g)
    delta = max(1, max_degree(g))
    schedule = build_schedule(g)
    base = color_base_case(schedule.residual, delta)
    full_keys = {orig: base.key_of(res)
                 for res, orig in enumerate(schedule.residual_edge_ids)}
    present = set(schedule.residual_edge_ids)
    stats = RunStats()
    for step in reversed(schedule.steps):
        if isinstance(step, PendantRemoval):
            new_edges = [(step.center, step.pendant)]
        else:
            new_edges = [(step.center, vi) for vi, _ in step.spokes]
        present.update(g.edge_id(a, b) for a, b in new_edges)
        ordered = sorted(present)
        g_step = build_graph(g.n, [g.edges[e] for e in ordered])
        col_step = EdgeColoring(g_step, delta)
        for local, full in enumerate(ordered):
            if full in full_keys:
                col_step.assign(local, full_keys[full])
        if isinstance(step, PendantRemoval):
            extend_pendant(col_step, g_step, step.center, step.pendant, stats)
        else:
            extend_spokes(col_step, g_step, step, stats, paranoid=True)
        full_keys = {full: col_step.key_of(local)
                     for local, full in enumerate(ordered)}
    assert [full_keys.get(e, 0) for e in range(g.m)] == engine.keys()
    assert stats.max_omega == engine_stats.max_omega
    assert stats.max_pendant_forbidden == engine_stats.max_pendant_forbidden


@settings(max_examples=60, deadline=None)
@given(two_degenerate_graphs())
def test_larger_palette_also_works(g):
    delta = max(1, max_degree(g)) + 2
    col, _ = strong_color(g, delta_param=delta)
    assert verify_all(g, col, delta_param=delta).ok


@settings(max_examples=60, deadline=None)
@given(two_degenerate_graphs())
def test_determinism(g):
    a, sa = strong_color(g)
    b, sb = strong_color(g)
    assert coloring_to_json(g, a, sa) == coloring_to_json(g, b, sb)


# -------------------------------------------------------------------- json

def test_coloring_json_round_trip():
    g = triangle_with_leaves(3)
    col, stats = strong_color(g)
    data = coloring_to_dict(g, col, stats)
    again, saved_stats = coloring_from_dict(g, data)
    assert again.keys() == col.keys()
    assert saved_stats["colors_used"] == stats.colors_used


def test_coloring_json_shape():
    g = path_graph(3)
    col, stats = strong_color(g)
    data = coloring_to_dict(g, col, stats)
    assert list(data) == ["n", "delta_param", "palette_size", "edges", "colors", "stats"]
    assert data["palette_size"] == 4 * data["delta_param"] - 2
    assert all(entry["set"] in (BASE, PRIMED) for entry in data["colors"])


def test_coloring_from_dict_rejects_mismatch():
    g = path_graph(3)
    col, stats = strong_color(g)
    data = coloring_to_dict(g, col, stats)
    other = path_graph(4)
    with pytest.raises(ValueError):
        coloring_from_dict(other, data)
