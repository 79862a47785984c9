import random

import pytest

from recolor import (
    CycleConflict,
    PartialColoring,
    ReconstructionError,
    available_colors,
    complete_bipartite_graph,
    complete_graph,
    cycle_graph,
    decode_cycle,
    encode_cycle,
    find_bicolored_cycle,
    make_run_config,
    path_graph,
    random_graph_max_degree,
    reconstruct_inputs,
    run,
    step,
    verify_acyclic,
    verify_partial_acyclic,
)
from recolor.acyclic import cycle_edge_ids, rule_orient

from oracles import (
    bicolored_cycles_oracle,
    excluded_colors_oracle,
    regenerate_ranks,
)


def colored_c6(K=4):
    """C6 with five edges colored alternately 1,2 and edge 6 pending."""
    g = cycle_graph(6)
    phi = PartialColoring(g, K)
    for e in range(1, 6):
        phi.pop_uncolored()
        phi.assign(e, 1 if e % 2 else 2)
    return g, phi


def test_available_colors_matches_oracle_on_random_partials():
    rng = random.Random(4)
    for _ in range(40):
        g = random_graph_max_degree(14, 4, seed=rng.randrange(1000))
        K = 4 * max(g.delta, 2) - 4
        phi = PartialColoring(g, K)
        for e in range(1, g.m + 1):
            if rng.random() < 0.6:
                used = {phi.color(f) for _, f in g.neighbors(g.pair(e)[0])}
                used |= {phi.color(f) for _, f in g.neighbors(g.pair(e)[1])}
                free = [c for c in range(1, K + 1) if c not in used]
                if free:
                    phi.assign(e, rng.choice(free))
        for e in range(1, g.m + 1):
            if phi.color(e) is None:
                want = excluded_colors_oracle(g, phi.colors, e)
                got = available_colors(g, phi, e)
                assert got == [c for c in range(1, K + 1) if c not in want]
                # exclusion never eats more than 2(delta-1) colors
                assert len(got) >= K - 2 * (g.delta - 1)


def test_second_rule_blocks_two_colored_four_cycles():
    # square u-x, x-y, y-v plus pending u-v; ux and vy share a color
    g = complete_graph(4)  # vertices 0..3, all edges present
    phi = PartialColoring(g, 8)
    e_uv = g.edge_id(0, 1)
    e_ux = g.edge_id(0, 2)
    e_vy = g.edge_id(1, 3)
    e_xy = g.edge_id(2, 3)
    for eid, c in ((e_ux, 5), (e_vy, 5), (e_xy, 7)):
        phi.assign(eid, c)
    avail = available_colors(g, phi, e_uv)
    assert 5 not in avail  # both endpoints see it
    assert 7 not in avail  # would close a 4-cycle on colors {5, 7}
    assert 6 in avail


def test_find_bicolored_cycle_on_c6():
    g, phi = colored_c6()
    phi.assign(6, 2)
    cycle = find_bicolored_cycle(g, phi, 6)
    assert cycle is not None and len(cycle) == 6
    eids = cycle_edge_ids(g, cycle)
    assert eids[0] == 6
    assert eids[1] < eids[-1]
    assert sorted(eids) == [1, 2, 3, 4, 5, 6]


def test_find_bicolored_cycle_absent_when_colors_differ():
    g, phi = colored_c6(K=5)
    phi.assign(6, 3)
    assert find_bicolored_cycle(g, phi, 6) is None


def test_step_records_conflict_and_keeps_two_edges():
    g, phi = colored_c6()
    res = step(g, phi, 1)
    assert res.entry is not None and res.entry.k == 3
    assert res.edge == 6 and res.color == 2
    assert len(res.uncolored) == 4 and 6 in res.uncolored
    kept = [e for e in range(1, 7) if phi.color(e) is not None]
    assert len(kept) == 2
    # the two kept edges are adjacent to the conflict edge's endpoints
    cycle = decode_cycle(g, 6, res.entry.k, res.entry.ell)
    oriented = rule_orient(g, cycle)
    assert sorted(kept) == sorted(cycle_edge_ids(g, oriented)[1:3])


def test_encode_decode_roundtrip_from_both_orientations():
    g, phi = colored_c6()
    phi.assign(6, 2)
    cycle = find_bicolored_cycle(g, phi, 6)
    entry = encode_cycle(g, cycle, 6)
    flipped = [cycle[1], cycle[0]] + cycle[2:][::-1]
    assert encode_cycle(g, flipped, 6) == entry
    canon = decode_cycle(g, 6, entry.k, entry.ell)
    assert canon[0] < canon[1]
    assert encode_cycle(g, canon, 6) == entry


def test_decode_rejects_inconsistent_indices():
    g = cycle_graph(6)
    # a cycle index whose label walk leaves the graph (C6 has no branching)
    with pytest.raises(Exception):
        decode_cycle(g, 1, 4, 1)


def test_rule_orient_is_idempotent_and_involutive():
    g, phi = colored_c6()
    phi.assign(6, 2)
    canon = decode_cycle(g, 6, 3, encode_cycle(g, find_bicolored_cycle(g, phi, 6), 6).ell)
    oriented = rule_orient(g, canon)
    assert rule_orient(g, oriented) == oriented
    eids = cycle_edge_ids(g, oriented)
    assert eids[1] < eids[-1]


def test_run_completes_on_forests_with_tiny_palette():
    g = path_graph(12)
    config = make_run_config(g, K=3, seed=1)
    out = run(g, config)
    assert out.completed and out.steps == g.m
    assert out.conflict_count == 0
    assert verify_acyclic(g, out.edge_colors).ok


def test_run_budget_exhaustion_is_reported():
    g = cycle_graph(6)
    config = make_run_config(g, K=4, ranks=[1] * 50, max_steps=50)
    out = run(g, config)
    assert not out.completed
    assert out.steps == 50
    assert out.conflict_count > 0
    assert verify_partial_acyclic(g, out.edge_colors).ok


def test_run_trace_conflicts_decode_back():
    g = complete_bipartite_graph(3, 3)
    hits = 0
    for seed in range(60):
        config = make_run_config(g, K=6, rank_bound=2, seed=seed)
        out = run(g, config, trace=True)
        for res in out.trace:
            if res.entry is None:
                continue
            hits += 1
            canon = decode_cycle(g, res.edge, res.entry.k, res.entry.ell)
            assert encode_cycle(g, canon, res.edge) == res.entry
            eids = cycle_edge_ids(g, rule_orient(g, canon))
            assert eids[0] == res.edge
            assert set(res.uncolored) == {eids[0]} | set(eids[3:])
    assert hits >= 10


def test_reconstruction_roundtrip_on_mixed_corpus():
    graphs = [
        complete_bipartite_graph(3, 3),
        cycle_graph(8),
        complete_graph(5),
        random_graph_max_degree(20, 4, seed=2),
    ]
    conflict_runs = 0
    for g in graphs:
        for seed in range(40):
            K = max(4, 2 * (g.delta - 1) + 2)
            config = make_run_config(g, K=K, rank_bound=2, seed=seed)
            out = run(g, config)
            got = reconstruct_inputs(g, out.record, out.edge_colors)
            assert got == regenerate_ranks(config, out.steps)
            conflict_runs += bool(out.conflict_count)
    assert conflict_runs >= 20


def test_reconstruction_rejects_tampered_inputs():
    g = complete_bipartite_graph(3, 3)
    config = make_run_config(g, K=6, rank_bound=2, seed=3)
    out = run(g, config)
    assert out.completed
    # wrong length
    with pytest.raises(ReconstructionError):
        reconstruct_inputs(g, out.record, out.edge_colors[:-1])
    # a record longer than the steps the graph admits
    with pytest.raises(ReconstructionError):
        reconstruct_inputs(g, tuple([None] * (g.m + 1)), out.edge_colors)
    # truncated final coloring state disagrees with the record
    broken = list(out.edge_colors)
    broken[3] = None
    with pytest.raises(ReconstructionError):
        reconstruct_inputs(g, out.record, broken)
    # conflict entry pointing at an impossible cycle
    bad = (CycleConflict(3, 1),) + tuple(out.record[1:])
    with pytest.raises(ReconstructionError):
        reconstruct_inputs(g, bad, out.edge_colors)


def test_verifier_flags_improper_and_cycles_like_oracle():
    g = complete_bipartite_graph(3, 3)
    rng = random.Random(11)
    agreements = 0
    for _ in range(300):
        colors = [None] + [rng.randint(1, 3) for _ in range(g.m)]
        verdict = verify_acyclic(g, colors)
        proper = all(
            len({c for c in (colors[e] for _, e in g.neighbors(v))}) == g.degree(v)
            for v in range(g.n)
        )
        cycles = bicolored_cycles_oracle(g, colors) if proper else []
        assert verdict.ok == (proper and not cycles)
        if not verdict.ok:
            kind = verdict.witness[0]
            if kind == "improper":
                _, v, e1, e2 = verdict.witness
                assert colors[e1] == colors[e2]
                assert v in g.pair(e1) and v in g.pair(e2)
            else:
                assert frozenset(verdict.witness[2]) in cycles
        agreements += 1
    assert agreements == 300


def test_perfect_matching_union_rejected_on_k4():
    # a proper 3) coloring of K4 pairs opposite edges; any two classes
    # close a 4-cycle on two colors, which the acyclic check must reject
    g = complete_graph(4)
    colors = [None] * (g.m + 1)
    for e, u, v in g.iter_edges():
        colors[e] = {(0, 1): 1, (2, 3): 1, (0, 2): 2, (1, 3): 2, (0, 3): 3, (1, 2): 3}[(u, v)]
    verdict = verify_acyclic(g, colors)
    assert not verdict.ok
    assert verdict.witness[0] == "bicolored-cycle"
    assert len(verdict.witness[2]) == 4


def test_verify_requires_total_coloring():
    g = cycle_graph(5)
    with pytest.raises(ValueError):
        verify_acyclic(g, [None] * (g.m + 1))
    assert verify_partial_acyclic(g, [None] * (g.m + 1)).ok


def test_make_run_config_validation():
    g = complete_graph(5)
    with pytest.raises(ValueError):
        make_run_config(g, K=2 * (g.delta - 1))  # zero slack
    with pytest.raises(ValueError):
        make_run_config(g, K=12, rank_bound=7)  # beyond the slack
    with pytest.raises(ValueError):
        make_run_config(g, K=12, max_steps=3)  # below edge count
    with pytest.raises(ValueError):
        make_run_config(g, K=12, ranks=[0])
    cfg = make_run_config(g, gamma=2.0)
    assert cfg.K == 4 * g.delta - 4
    cfg = make_run_config(g, K=12, ranks=[1, 2, 3])
    assert cfg.seed is None and cfg.ranks == (1, 2, 3)


def test_empty_graph_run():
    g = path_graph(1)
    config = make_run_config(g, K=1)
    out = run(g, config)
    assert out.completed and out.steps == 0 and out.record == ()
    assert reconstruct_inputs(g, out.record, out.edge_colors) == []
