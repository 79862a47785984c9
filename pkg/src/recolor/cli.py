"""Command line front end.

Subcommands: color (acyclic edge coloring), star (star vertex coloring),
bound (palette-size calculators), dyck (constrained word counting),
verify (check a coloring against a graph), bench (seed sweep with
delimited output and optional figures).

Exit codes: 0 on success, 1 when a run fails to complete or a check
finds a violation, 2 on bad input or usage.
"""
from __future__ import annotations

import argparse
import json
import math
import random
import sys
from pathlib import Path

from . import acyclic, bounds, dyck, figures, star
from .descents import DescentSet, DescentSetError
from .graphs import (
    Graph,
    GraphFormatError,
    compute_stats,
    generate_graph,
    load_graph,
)
from .records import RecordError


# -- shared helpers ------------------------------------------------------


def _parse_gen(spec: str) -> Graph:
    model, _, rest = spec.partition(":")
    nums = [int(x) for x in rest.split(",") if x != ""]
    try:
        if model in ("cycle", "path", "complete"):
            return generate_graph(model, n=nums[0])
        if model in ("complete-bipartite", "kab"):
            return generate_graph("complete-bipartite", a=nums[0], b=nums[1])
        if model in ("random", "random-with-max-degree"):
            params = {"n": nums[0], "max_degree": nums[1]}
            if len(nums) >= 3:
                params["n_edges"] = nums[2]
            seed = nums[3] if len(nums) >= 4 else 0
            return generate_graph("random-with-max-degree", seed=seed, **params)
    except IndexError:
        raise ValueError(f"generator spec {spec!r} is missing arguments") from None
    raise ValueError(f"unknown generator model {model!r}")


def _read_graph(args: argparse.Namespace) -> Graph:
    if getattr(args, "gen", None):
        return _parse_gen(args.gen)
    if not getattr(args, "input", None):
        raise ValueError("provide --input FILE (or '-') or --gen MODEL:ARGS")
    if args.input == "-":
        text = sys.stdin.read()
    else:
        text = Path(args.input).read_text()
    fmt = args.format
    if fmt == "auto":
        has_header = any(
            line.lstrip().startswith("p ") for line in text.splitlines()
        )
        fmt = "dimacs" if has_header else "edge-list"
    return load_graph(text, fmt)


def _parse_ranks(text: str | None) -> tuple[int, ...] | None:
    if text is None:
        return None
    return tuple(int(x) for x in text.replace(",", " ").split())


def _parse_girth(text: str) -> float:
    if text.lower() in ("inf", "infinity", "acyclic"):
        return math.inf
    return int(text)


def _girth_json(girth: float) -> int | None:
    return None if math.isinf(girth) else int(girth)


def _girth_text(girth: float) -> str:
    return "inf" if math.isinf(girth) else str(int(girth))


def _emit_json(obj) -> None:
    print(json.dumps(obj, sort_keys=True))


def _coloring_text(colors) -> str:
    return " ".join("-" if c is None else str(c) for c in colors)


# -- color ---------------------------------------------------------------


def _regenerated_ranks(config, steps: int) -> list[int]:
    if config.ranks is not None:
        return list(config.ranks[:steps])
    rng = random.Random(config.seed)
    return [rng.randint(1, config.rank_bound) for _ in range(steps)]


def _cmd_color(args: argparse.Namespace) -> int:
    g = _read_graph(args)
    stats = compute_stats(g)
    config = acyclic.make_run_config(
        g,
        K=args.colors,
        gamma=args.gamma,
        rank_bound=args.rank_bound,
        max_steps=args.max_steps,
        seed=args.seed,
        ranks=_parse_ranks(args.ranks),
        girth=stats.girth,
    )
    out = acyclic.run(g, config)
    problems: list[str] = []
    if args.verify:
        verdict = (
            acyclic.verify_acyclic(g, out.edge_colors)
            if out.completed
            else acyclic.verify_partial_acyclic(g, out.edge_colors)
        )
        if not verdict.ok:
            problems.append(f"coloring violates the invariants: {verdict.witness}")
        try:
            recovered = acyclic.reconstruct_inputs(g, out.record, out.edge_colors)
            if recovered != _regenerated_ranks(config, out.steps):
                problems.append("reconstructed rank vector differs from the one used")
        except acyclic.ReconstructionError as exc:
            problems.append(f"reconstruction failed: {exc}")
    if args.json:
        payload = {
            "mode": "acyclic",
            "graph": {"n": g.n, "m": g.m, "delta": g.delta,
                      "girth": _girth_json(stats.girth)},
            "config": {"colors": config.K, "rank_bound": config.rank_bound,
                       "max_steps": config.max_steps, "seed": config.seed,
                       "k": None},
            "steps": out.steps,
            "completed": out.completed,
            "conflicts": out.conflict_count,
            "descent_histogram": {str(k): v for k, v in sorted(out.descent_histogram().items())},
            "coloring": list(out.edge_colors[1:]),
            "record": [None if e is None else [e.k, e.ell] for e in out.record],
        }
        if args.verify:
            payload["verified"] = not problems
        _emit_json(payload)
    else:
        print(f"n={g.n} m={g.m} delta={g.delta} girth={_girth_text(stats.girth)}")
        print(f"K={config.K} rank_bound={config.rank_bound} "
              f"max_steps={config.max_steps} seed={config.seed}")
        print(f"steps={out.steps} conflicts={out.conflict_count} "
              f"completed={'yes' if out.completed else 'no'}")
        print(f"coloring: {_coloring_text(out.edge_colors[1:])}")
        for p in problems:
            print(f"verify: {p}")
        if args.verify and not problems:
            print("verify: ok")
    if problems or not out.completed:
        return 1
    return 0


# -- star ----------------------------------------------------------------


def _cmd_star(args: argparse.Namespace) -> int:
    g = _read_graph(args)
    stats = compute_stats(g)
    config = star.make_star_config(
        g,
        k=args.k,
        colors=args.colors,
        rank_bound=args.rank_bound,
        max_steps=args.max_steps,
        seed=args.seed,
        ranks=_parse_ranks(args.ranks),
    )
    out = star.run_star(g, config)
    problems: list[str] = []
    if args.verify:
        verdict = (
            star.verify_star_k(g, out.vertex_colors, config.k)
            if out.completed
            else star.verify_partial_star(g, out.vertex_colors, config.k)
        )
        if not verdict.ok:
            problems.append(f"coloring violates the invariants: {verdict.witness}")
        try:
            recovered = star.reconstruct_star_inputs(g, config.k, out.record, out.vertex_colors)
            if recovered != _regenerated_ranks(config, out.steps):
                problems.append("reconstructed rank vector differs from the one used")
        except star.StarReconstructionError as exc:
            problems.append(f"reconstruction failed: {exc}")
    if args.json:
        payload = {
            "mode": "star",
            "graph": {"n": g.n, "m": g.m, "delta": g.delta,
                      "girth": _girth_json(stats.girth)},
            "config": {"colors": config.colors, "rank_bound": config.rank_bound,
                       "max_steps": config.max_steps, "seed": config.seed,
                       "k": config.k},
            "steps": out.steps,
            "completed": out.completed,
            "conflicts": out.conflict_count,
            "coloring": list(out.vertex_colors),
            "record": [None if e is None else [e.position, list(e.labels)]
                       for e in out.record],
        }
        if args.verify:
            payload["verified"] = not problems
        _emit_json(payload)
    else:
        print(f"n={g.n} m={g.m} delta={g.delta} girth={_girth_text(stats.girth)}")
        print(f"colors={config.colors} rank_bound={config.rank_bound} "
              f"max_steps={config.max_steps} seed={config.seed} k={config.k}")
        print(f"steps={out.steps} conflicts={out.conflict_count} "
              f"completed={'yes' if out.completed else 'no'}")
        print(f"coloring: {_coloring_text(out.vertex_colors)}")
        for p in problems:
            print(f"verify: {p}")
        if args.verify and not problems:
            print("verify: ok")
    if problems or not out.completed:
        return 1
    return 0


# -- bound ---------------------------------------------------------------


def _cmd_bound(args: argparse.Namespace) -> int:
    if args.E:
        sol = bounds.solve_characteristic(DescentSet.parse(args.E))
        payload = {"E": str(sol.descents), "tau": sol.tau, "gamma": sol.gamma}
        text = f"tau={sol.tau:.6f} gamma={sol.gamma:.6f}"
        if args.delta is not None:
            K = bounds._ceil_eps((2.0 + sol.gamma) * (args.delta - 1)) if args.delta > 1 else 1
            payload["K"] = K
            text += f" K={K}"
        _emit_json(payload) if args.json else print(text)
        return 0
    if args.delta is None:
        raise ValueError("--delta is required without --E")
    if args.k is not None:
        colors = bounds.star_color_bound(args.delta, args.k)
        if args.json:
            _emit_json({"delta": args.delta, "k": args.k, "colors": colors})
        else:
            print(f"colors={colors}")
        return 0
    girth = _parse_girth(args.girth)
    gamma, K = bounds.acyclic_color_bound(args.delta, girth)
    if args.json:
        _emit_json({"delta": args.delta, "girth": _girth_json(girth),
                    "gamma": gamma, "K": K})
    else:
        print(f"gamma={gamma:.6f} K={K}")
    return 0


# -- dyck ----------------------------------------------------------------


def _cmd_dyck(args: argparse.Namespace) -> int:
    E = DescentSet.parse(args.E)
    if args.ratios:
        rows = dyck.growth_ratio(E, args.t)
        try:
            gamma = bounds.solve_characteristic(E).gamma
        except bounds.InadmissibleDescentSetError:
            gamma = None
        lines = ["t,ratio"]
        lines += [f"{t},{r:.9f}" for t, r in rows]
        if len(rows) >= 2:
            lines.append(f"# estimate={dyck.growth_estimate(E, args.t):.6f}")
        if gamma is not None:
            lines.append(f"# gamma={gamma:.6f}")
        if args.figures:
            p = figures.save_ratio_figure(rows, gamma, args.figures)
            lines.append(f"# figure={p}")
        text = "\n".join(lines)
        if args.csv:
            Path(args.csv).write_text(text + "\n")
        else:
            print(text)
        return 0
    if args.enumerate:
        for word in dyck.enumerate_dyck(args.t, E, args.limit):
            print(word)
        return 0
    if args.r is not None:
        print(dyck.count_partial_dyck(args.t, args.r, E))
        return 0
    print(dyck.count_dyck(args.t, E))
    return 0


# -- verify --------------------------------------------------------------


def _witness_text(witness: tuple) -> str:
    kind = witness[0]
    if kind == "improper":
        return f"improper at vertex {witness[1]}: {witness[2]} and {witness[3]}"
    if kind == "bicolored-cycle":
        ids = "-".join(str(e) for e in witness[2])
        return f"cycle on colors {witness[1]} through edges {ids}"
    if kind == "bicolored-path":
        ids = "-".join(str(v) for v in witness[2])
        return f"path on colors {witness[1]} through vertices {ids}"
    return str(witness)


def _cmd_verify(args: argparse.Namespace) -> int:
    g = _read_graph(args)
    text = sys.stdin.read() if args.coloring == "-" else Path(args.coloring).read_text()
    payload = json.loads(text)
    if isinstance(payload, dict):
        mode = payload.get("mode")
        coloring = payload.get("coloring")
        k = (payload.get("config") or {}).get("k") or args.k
        if mode is None or coloring is None:
            raise ValueError("coloring JSON needs 'mode' and 'coloring' fields")
    else:
        mode = args.mode
        coloring = payload
        k = args.k
        if mode is None:
            raise ValueError("--mode is required for a bare coloring list")
    if mode == "acyclic":
        if len(coloring) != g.m:
            raise ValueError(f"expected {g.m} edge colors, got {len(coloring)}")
        slots = [None] + list(coloring)
        verdict = (
            acyclic.verify_partial_acyclic(g, slots)
            if any(c is None for c in coloring)
            else acyclic.verify_acyclic(g, slots)
        )
    elif mode == "star":
        if len(coloring) != g.n:
            raise ValueError(f"expected {g.n} vertex colors, got {len(coloring)}")
        verdict = (
            star.verify_partial_star(g, list(coloring), k)
            if any(c is None for c in coloring)
            else star.verify_star_k(g, list(coloring), k)
        )
    else:
        raise ValueError(f"unknown mode {mode!r}")
    if verdict.ok:
        print("ok")
        return 0
    print(f"violation: {_witness_text(verdict.witness)}")
    return 1


# -- bench ---------------------------------------------------------------


def _cmd_bench(args: argparse.Namespace) -> int:
    g = _read_graph(args)
    stats = compute_stats(g)
    delta = max(1, g.delta)
    K = args.colors if args.colors is not None else max(1, 4 * delta - 3)
    rank_bound = args.rank_bound if args.rank_bound is not None else max(1, 2 * delta - 2)
    rows = []
    steps_list: list[int] = []
    conflict_list: list[int] = []
    all_completed = True
    for i in range(args.runs):
        seed = args.seed + i
        config = acyclic.make_run_config(
            g, K=K, rank_bound=rank_bound, max_steps=args.max_steps,
            seed=seed, girth=stats.girth,
        )
        out = acyclic.run(g, config)
        max_k = max((e.k for e in out.record if e is not None), default=0)
        rows.append(f"{seed},{out.steps},{int(out.completed)},{out.conflict_count},{max_k}")
        steps_list.append(out.steps)
        conflict_list.append(out.conflict_count)
        all_completed = all_completed and out.completed
    bound = bounds.expected_steps_bound(g.m, delta) if g.m else 0.0
    lines = ["seed,steps,completed,conflicts,max_record_k"] + rows
    n_runs = max(1, args.runs)
    lines.append(f"# runs={args.runs} completed={sum(1 for r in rows if r.split(',')[2] == '1')}")
    lines.append(f"# steps_mean={sum(steps_list) / n_runs:.2f} "
                 f"steps_max={max(steps_list, default=0)}")
    lines.append(f"# conflicts_mean={sum(conflict_list) / n_runs:.2f} "
                 f"conflicts_max={max(conflict_list, default=0)}")
    lines.append(f"# expected_steps_bound={bound:.2f}")
    if args.figures:
        for p in figures.save_bench_figures(steps_list, conflict_list, bound, args.figures):
            lines.append(f"# figure={p}")
    text = "\n".join(lines)
    if args.csv:
        Path(args.csv).write_text(text + "\n")
    else:
        print(text)
    return 0 if all_completed else 1


# -- parser --------------------------------------------------------------


def _add_graph_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--input", help="graph file, or '-' for stdin")
    p.add_argument("--gen", metavar="MODEL:ARGS",
                   help="generate instead: cycle:N path:N complete:N "
                        "complete-bipartite:A,B random:N,MAXDEG[,EDGES[,SEED]]")
    p.add_argument("--format", choices=("auto", "edge-list", "dimacs"),
                   default="auto", help="graph file format (default: sniff)")


def _add_run_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--colors", type=int, help="palette size override")
    p.add_argument("--rank-bound", type=int, help="rank alphabet size override")
    p.add_argument("--max-steps", type=int, help="step budget override")
    p.add_argument("--seed", type=int, default=0, help="rank generator seed")
    p.add_argument("--ranks", help="explicit comma-separated rank vector")
    p.add_argument("--json", action="store_true", help="emit a JSON report")
    p.add_argument("--verify", action="store_true",
                   help="check invariants and round-trip the record")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="recolor",
        description="Randomized acyclic edge coloring and star vertex coloring "
                    "with replayable conflict records.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("color", help="acyclic edge coloring run")
    _add_graph_args(p)
    _add_run_args(p)
    p.add_argument("--gamma", type=float,
                   help="growth rate; palette becomes ceil((2+gamma)(delta-1))")
    p.set_defaults(func=_cmd_color)

    p = sub.add_parser("star", help="star vertex coloring run")
    _add_graph_args(p)
    _add_run_args(p)
    p.add_argument("--k", type=int, default=2,
                   help="forbid 2-colored paths on 2k vertices (default 2)")
    p.set_defaults(func=_cmd_star)

    p = sub.add_parser("bound", help="palette-size calculators")
    p.add_argument("--delta", type=int, help="maximum degree")
    p.add_argument("--girth", default="3", help="girth (integer or 'inf')")
    p.add_argument("--k", type=int, help="star parameter; prints the star bound")
    p.add_argument("--E", help="descent set, e.g. '{1,2}', '2N+2', '{1}u2N+2'")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_bound)

    p = sub.add_parser("dyck", help="constrained-word counting")
    p.add_argument("--t", type=int, required=True, help="word half-length")
    p.add_argument("--E", required=True, help="allowed descent lengths")
    p.add_argument("--r", type=int, help="count partial words with r open steps")
    p.add_argument("--enumerate", action="store_true", help="list the words")
    p.add_argument("--limit", type=int, default=10**6,
                   help="enumeration safety cap (default 1e6)")
    p.add_argument("--ratios", action="store_true",
                   help="emit consecutive-count growth ratios as CSV")
    p.add_argument("--csv", help="write delimited output here instead of stdout")
    p.add_argument("--figures", help="directory for rendered figures")
    p.set_defaults(func=_cmd_dyck)

    p = sub.add_parser("verify", help="check a coloring JSON against a graph")
    _add_graph_args(p)
    p.add_argument("--coloring", required=True,
                   help="JSON report or bare color list; '-' for stdin")
    p.add_argument("--mode", choices=("acyclic", "star"),
                   help="required when the coloring is a bare list")
    p.add_argument("--k", type=int, default=2, help="star parameter")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("bench", help="seed sweep; CSV report plus figures")
    _add_graph_args(p)
    p.add_argument("--runs", type=int, default=50, help="number of seeds (default 50)")
    p.add_argument("--seed", type=int, default=0, help="first seed (default 0)")
    p.add_argument("--colors", type=int, help="palette override (default 4*delta-3)")
    p.add_argument("--rank-bound", type=int,
                   help="rank alphabet override (default 2*delta-2)")
    p.add_argument("--max-steps", type=int, help="step budget override")
    p.add_argument("--csv", help="write the report here instead of stdout")
    p.add_argument("--figures", help="directory for rendered figures")
    p.set_defaults(func=_cmd_bench)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (GraphFormatError, RecordError, DescentSetError,
            bounds.InadmissibleDescentSetError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def console_main() -> None:
    raise SystemExit(main())
