"""End-to-end acceptance checks.

Every test prints one live summary line of the form

    criterion N (short name): PASS|FAIL [detail]

through the capture bypass, so the lines land in the terminal under any
pytest capture mode, then asserts the same condition.
"""
import math
import time

import pytest

from recolor import (
    DescentSet,
    acyclic_color_bound,
    acyclic_edge_coloring_family,
    check_descents,
    complete_bipartite_graph,
    complete_graph,
    count_dyck,
    count_dyck_lagrange,
    count_partial_dyck,
    cycle_graph,
    enumerate_dyck,
    expand_record,
    expected_steps_bound,
    framework_bound,
    growth_estimate,
    is_partial_dyck,
    make_run_config,
    make_star_config,
    nonrepetitive_coloring_family,
    path_graph,
    random_graph_max_degree,
    reconstruct_inputs,
    reconstruct_star_inputs,
    run,
    run_star,
    solve_characteristic,
    star_color_bound,
    star_coloring_family,
    to_dyck,
    verify_acyclic,
    verify_star_k,
)
from recolor.graphs import compute_stats

from oracles import regenerate_ranks


def announce(capsys, num: int, desc: str, ok: bool, extra: str = "") -> None:
    line = f"criterion {num} ({desc}): {'PASS' if ok else 'FAIL'}"
    if extra:
        line += f" [{extra}]"
    with capsys.disabled():
        print(line, flush=True)


CHARACTERISTIC_TABLE = [
    ("2N+4", (math.sqrt(5) - 1) / 2, 2.0),
    ("2N+6", 0.66336, 1.73688),
    ("2N+52", 0.89610, 1.13481),
    ("2N+218", 0.96341, 1.04225),
]


def test_criterion_1_characteristic_table(capsys):
    t0 = time.perf_counter()
    failures = []
    for text, tau_want, gamma_want in CHARACTERISTIC_TABLE:
        sol = solve_characteristic(DescentSet.parse(text))
        if abs(sol.tau - tau_want) >= 5e-6 or abs(sol.gamma - gamma_want) >= 5e-6:
            failures.append((text, sol.tau, sol.gamma))
    elapsed = time.perf_counter() - t0
    ok = not failures and elapsed < 1.0
    announce(capsys, 1, "characteristic-equation table", ok, f"{elapsed:.3f}s")
    assert not failures, failures
    assert elapsed < 1.0


def test_criterion_2_palette_bounds(capsys):
    failures = []
    for delta in range(2, 1001):
        gamma, K = acyclic_color_bound(delta, 3)
        if gamma != 2.0 or K != 4 * delta - 4:
            failures.append((delta, 3, gamma, K))
    # five-decimal growth rates fix the ceiling except when the target
    # sits within the table's own quantization radius of an integer;
    # there the comparison degrades to a +-1 sanity check
    skipped = 0
    for girth, gamma5 in ((7, 1.73688), (53, 1.13481), (220, 1.04225)):
        for delta in range(2, 1001):
            target = (2.0 + gamma5) * (delta - 1)
            _, K = acyclic_color_bound(delta, girth)
            if abs(target - round(target)) <= (delta - 1) * 1e-5:
                skipped += 1
                if abs(K - math.ceil(target)) > 1:
                    failures.append((delta, girth, K, target))
                continue
            if K != math.ceil(target):
                failures.append((delta, girth, K, target))
    # the radius admits about 2e-5 * sum(delta-1) / row ~ 10 cells per row
    ok = not failures and skipped <= 60
    announce(capsys, 2, "girth-driven palette sizes", ok,
             f"{skipped} near-integer targets held to +-1")
    assert not failures, failures[:5]
    assert skipped <= 60


def test_criterion_3_end_to_end_coloring(capsys):
    t0 = time.perf_counter()
    failures = []
    for i in range(50):
        n = 20 + (37 * i) % 181
        cap = 3 + i % 6
        g = random_graph_max_degree(n, cap, seed=500 + i)
        assert g.delta >= 2
        config = make_run_config(g, K=4 * g.delta - 4, seed=i)
        out = run(g, config)
        if not out.completed:
            failures.append((i, "incomplete"))
            continue
        verdict = verify_acyclic(g, out.edge_colors)
        if not verdict.ok:
            failures.append((i, verdict.witness))
    elapsed = time.perf_counter() - t0
    ok = not failures and elapsed < 60.0
    announce(capsys, 3, "50 random graphs color and verify", ok, f"{elapsed:.1f}s")
    assert not failures, failures[:5]
    assert elapsed < 60.0


def _acyclic_roundtrip_corpus():
    tight = [
        complete_bipartite_graph(4, 4),
        complete_bipartite_graph(4, 5),
        complete_bipartite_graph(3, 3),
        cycle_graph(6),
    ]
    for g in tight:
        K = 2 * (g.delta - 1) + 2
        for seed in range(175):
            yield g, make_run_config(
                g, K=K, rank_bound=2, seed=seed, max_steps=max(g.m, 150)
            )
    for gseed in (31, 32, 33):
        g = random_graph_max_degree(25, 4, seed=gseed)
        for seed in range(100):
            yield g, make_run_config(g, seed=seed)


def _star_roundtrip_corpus():
    tight = [
        (cycle_graph(8), 2),
        (cycle_graph(12), 2),
        (cycle_graph(12), 3),
        (cycle_graph(16), 3),
        (random_graph_max_degree(24, 4, seed=6), 3),
    ]
    for g, k in tight:
        for seed in range(125):
            yield g, make_star_config(
                g, k=k, colors=g.delta + 2, rank_bound=2, seed=seed,
                max_steps=max(g.n, 200),
            )
    loose = [
        (cycle_graph(9), 2),
        (random_graph_max_degree(40, 5, seed=7), 2),
        (random_graph_max_degree(30, 4, seed=8), 3),
    ]
    for g, k in loose:
        for seed in range(125):
            yield g, make_star_config(g, k=k, seed=seed)


def test_criterion_4_entropy_compression_roundtrip(capsys):
    mismatches = []
    runs = conflicted = 0
    for g, config in _acyclic_roundtrip_corpus():
        out = run(g, config)
        runs += 1
        conflicted += bool(out.conflict_count)
        got = reconstruct_inputs(g, out.record, out.edge_colors)
        if got != regenerate_ranks(config, out.steps):
            mismatches.append(("acyclic", config))
    star_runs = star_conflicted = 0
    for g, config in _star_roundtrip_corpus():
        out = run_star(g, config)
        star_runs += 1
        star_conflicted += bool(out.conflict_count)
        got = reconstruct_star_inputs(g, config.k, out.record, out.vertex_colors)
        if got != regenerate_ranks(config, out.steps):
            mismatches.append(("star", config))
    ok = (not mismatches and runs >= 1000 and conflicted >= 100
          and star_runs >= 1000 and star_conflicted >= 100)
    announce(capsys, 4, "record round trip", ok,
             f"acyclic {runs} runs/{conflicted} conflicted, "
             f"star {star_runs} runs/{star_conflicted} conflicted")
    assert not mismatches, mismatches[:3]
    assert runs >= 1000 and conflicted >= 100
    assert star_runs >= 1000 and star_conflicted >= 100


def test_criterion_5_expected_steps(capsys):
    instances = [
        complete_bipartite_graph(3, 3),
        complete_bipartite_graph(4, 4),
        complete_graph(6),
        cycle_graph(12),
        random_graph_max_degree(60, 5, seed=11),
    ]
    ratios = []
    failures = []
    for g in instances:
        K = 4 * g.delta - 3
        bound = expected_steps_bound(g.m, g.delta)
        steps = []
        for seed in range(100):
            config = make_run_config(g, K=K, rank_bound=2 * g.delta - 2, seed=seed)
            out = run(g, config)
            if not out.completed:
                failures.append((g.n, g.m, seed, "incomplete"))
            steps.append(out.steps)
        mean = sum(steps) / len(steps)
        ratios.append(mean / bound)
        if mean > bound:
            failures.append((g.n, g.m, mean, bound))
    ok = not failures
    announce(capsys, 5, "mean steps within bound", ok,
             "mean/bound ratios " + ", ".join(f"{r:.3f}" for r in ratios))
    assert not failures, failures[:5]


DYCK_SETS = ["2N+4", "2N+6", "{2}", "{3}", "{4}", "{1}∪2N+2", "N+1"]


def test_criterion_6_dyck_oracle_agreement(capsys):
    failures = []
    for text in DYCK_SETS:
        E = DescentSet.parse(text)
        for t in range(0, 301):
            a = count_dyck(t, E)
            b = count_dyck_lagrange(t, E)
            if a != b:
                failures.append((text, t, a, b))
        for t in range(0, 11):
            if count_dyck(t, E) != len(enumerate_dyck(t, E)):
                failures.append((text, t, "enumeration"))
    for ell in (2, 3, 4):
        E = DescentSet.parse("{%d}" % ell)
        for t in range(0, 301):
            if t % ell:
                want = 0
            else:
                binom = math.comb(t + 1, t // ell)
                if binom % (t + 1):
                    failures.append((ell, t, "not integral"))
                    continue
                want = binom // (t + 1)
            if count_dyck(t, E) != want:
                failures.append((ell, t, count_dyck(t, E), want))
    ok = not failures
    announce(capsys, 6, "dual counting routes agree", ok)
    assert not failures, failures[:5]


def _record_corpus():
    tight = [
        (complete_bipartite_graph(4, 4), 4000),
        (complete_bipartite_graph(3, 3), 1500),
        (cycle_graph(6), 1500),
        (cycle_graph(8), 1500),
    ]
    for g, n_seeds in tight:
        K = 2 * (g.delta - 1) + 2
        girth = compute_stats(g).girth
        for seed in range(n_seeds):
            config = make_run_config(
                g, K=K, rank_bound=2, seed=seed, max_steps=max(g.m, 150)
            )
            yield g, girth, config
    defaults = [(path_graph(8), 500)]
    for gseed in (41, 42):
        defaults.append((random_graph_max_degree(20, 4, seed=gseed), 500))
    for g, n_seeds in defaults:
        girth = compute_stats(g).girth
        for seed in range(n_seeds):
            yield g, girth, make_run_config(g, seed=seed)


def test_criterion_7_record_word_properties(capsys):
    failures = []
    total = 0
    for g, girth, config in _record_corpus():
        out = run(g, config)
        total += 1
        word = to_dyck(expand_record(out.record, g.delta))
        girth_half = 109 if math.isinf(girth) else max(2, min((int(girth) - 1) // 2, 109))
        if not is_partial_dyck(word):
            failures.append((config, "not partial-Dyck"))
        verdict = check_descents(word, girth_half=girth_half)
        if not verdict.ok:
            failures.append((config, verdict.reason))
    for text in DYCK_SETS:
        E = DescentSet.parse(text)
        s = E.min_excluding_one
        for t in range(0, 13):
            for r in range(0, t + 1):
                if count_partial_dyck(t, r, E) > count_dyck(t + r * (s - 1), E):
                    failures.append((text, t, r, "padding bound"))
    ok = not failures and total >= 10_000
    announce(capsys, 7, "record words obey descent laws", ok, f"{total} records")
    assert not failures, failures[:5]
    assert total >= 10_000


def test_criterion_8_growth_ratio_convergence(capsys):
    t0 = time.perf_counter()
    failures = []
    gaps = []
    for text in ("2N+4", "2N+6"):
        E = DescentSet.parse(text)
        gamma = solve_characteristic(E).gamma
        est = growth_estimate(E, 2000)
        gaps.append(abs(est - gamma))
        if abs(est - gamma) >= 1e-3:
            failures.append((text, est, gamma))
    elapsed = time.perf_counter() - t0
    ok = not failures and elapsed < 30.0
    announce(capsys, 8, "count growth matches gamma", ok,
             f"gaps {', '.join(f'{g:.2e}' for g in gaps)}, {elapsed:.1f}s")
    assert not failures, failures
    assert elapsed < 30.0


def _exact_star_ceiling(delta: int) -> int:
    # ceil(2 sqrt(2) delta^1.5) computed exactly: the radicand is 8 delta^3
    v = 8 * delta**3
    r = math.isqrt(v)
    return r if r * r == v else r + 1


def test_criterion_9_star_coloring(capsys):
    failures = []
    for delta in range(1, 201):
        if star_color_bound(delta, 2) != _exact_star_ceiling(delta) + delta:
            failures.append(("closed form", delta, star_color_bound(delta, 2)))
    for i in range(30):
        n = 12 + (29 * i) % 89
        cap = 3 + i % 4
        g = random_graph_max_degree(n, cap, seed=900 + i)
        config = make_star_config(g, k=2)
        out = run_star(g, config)
        if not out.completed:
            failures.append(("incomplete", i))
            continue
        verdict = verify_star_k(g, out.vertex_colors, 2)
        if not verdict.ok:
            failures.append(("verify", i, verdict.witness))
    fb = framework_bound(star_coloring_family(), 100)
    if not math.isclose(fb.colors, 3 * math.sqrt(2) * 100**1.5, rel_tol=1e-9):
        failures.append(("framework star", fb.colors))
    if solve_characteristic(DescentSet.parse("N+1")).gamma != 4.0:
        failures.append(("gamma N+1",))
    if nonrepetitive_coloring_family().descent_set() != DescentSet.parse("N+1"):
        failures.append(("nonrepetitive descent set",))
    fb = framework_bound(acyclic_edge_coloring_family(), 50)
    if round(fb.colors / 50, 1) != 7.2:
        failures.append(("framework acyclic", fb.colors / 50))
    ok = not failures
    announce(capsys, 9, "star palette and framework rates", ok)
    assert not failures, failures[:5]
