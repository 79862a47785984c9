"""Independent reference implementations used to cross-check the library.

Everything here is deliberately written the slow, obvious way and shares
no code with the package internals beyond the Graph accessors.
"""
from __future__ import annotations

import itertools
import math
import random
from typing import Sequence

from recolor import Graph


def girth_oracle(g: Graph) -> float:
    """Shortest cycle length by per-edge removal and BFS reconnection."""
    best = math.inf
    for e, u, v in g.iter_edges():
        dist = {u: 0}
        frontier = [u]
        found = None
        while frontier and found is None:
            nxt = []
            for x in frontier:
                for y, eid in g.neighbors(x):
                    if eid == e or y in dist:
                        continue
                    dist[y] = dist[x] + 1
                    if y == v:
                        found = dist[y]
                        break
                    nxt.append(y)
                if found is not None:
                    break
            frontier = nxt
        if found is not None:
            best = min(best, found + 1)
    return best


def excluded_colors_oracle(
    g: Graph, colors: Sequence[int | None], e: int
) -> set[int]:
    """Literal reading of both exclusion rules at uncolored edge e."""
    u, v = g.pair(e)
    out: set[int] = set()
    for x in (u, v):
        for _, eid in g.neighbors(x):
            if eid != e and colors[eid] is not None:
                out.add(colors[eid])
    for x, eux in g.neighbors(u):
        if eux == e or colors[eux] is None:
            continue
        for y, evy in g.neighbors(v):
            if evy == e or colors[evy] is None:
                continue
            if colors[eux] != colors[evy] or x == y:
                continue
            exy = g.edge_id(x, y)
            if exy is not None and colors[exy] is not None:
                out.add(colors[exy])
    return out


def bicolored_cycles_oracle(
    g: Graph, colors: Sequence[int | None]
) -> list[frozenset[int]]:
    """All cycles whose edges carry exactly two colors, as edge-id sets.

    Assumes the coloring is proper on colored edges, so each vertex meets
    at most one edge per color and two-color components are paths or
    cycles.
    """
    palette = sorted({c for c in colors[1:] if c is not None})
    found: set[frozenset[int]] = set()
    for a, b in itertools.combinations(palette, 2):
        adj: dict[int, list[tuple[int, int]]] = {}
        for e, u, v in g.iter_edges():
            if colors[e] in (a, b):
                adj.setdefault(u, []).append((v, e))
                adj.setdefault(v, []).append((u, e))
        seen: set[int] = set()
        for start in adj:
            if start in seen:
                continue
            comp_v = {start}
            comp_e = set()
            stack = [start]
            while stack:
                x = stack.pop()
                seen.add(x)
                for y, e in adj[x]:
                    comp_e.add(e)
                    if y not in comp_v:
                        comp_v.add(y)
                        stack.append(y)
            if len(comp_e) >= len(comp_v):
                found.add(frozenset(comp_e))
    return sorted(found, key=sorted)


def bicolored_paths_oracle(
    g: Graph, colors: Sequence[int | None], k: int
) -> list[tuple[int, ...]]:
    """All colored simple paths on 2k vertices using exactly two colors.

    Enumerates raw simple paths with a color-set prune; each path is
    reported once, in the orientation starting at its smaller endpoint.
    """
    length = 2 * k
    out: set[tuple[int, ...]] = set()

    def extend(path: list[int], used: set[int], cset: set[int]) -> None:
        if len(path) == length:
            if len(cset) == 2:
                rev = tuple(reversed(path))
                out.add(min(tuple(path), rev))
            return
        for w, _ in g.neighbors(path[-1]):
            c = colors[w]
            if w in used or c is None:
                continue
            if len(cset | {c}) > 2:
                continue
            path.append(w)
            used.add(w)
            extend(path, used, cset | {c})
            used.remove(w)
            path.pop()

    for s in range(g.n):
        if colors[s] is not None:
            extend([s], {s}, {colors[s]})
    return sorted(out)


def brute_dyck_count(t: int, members, r: int = 0) -> int:
    """Count words by filtering every binary word of the right length.

    members is any container supporting `in` for run lengths.  Words have
    t zeros, t - r ones, every prefix balanced, and every maximal 1-run
    length allowed.
    """
    n = 2 * t - r
    if t < 0 or r < 0 or r > t:
        return 0
    count = 0
    for ones_at in itertools.combinations(range(n), t - r):
        word = ["0"] * n
        for i in ones_at:
            word[i] = "1"
        h = 0
        ok = True
        for ch in word:
            h += 1 if ch == "0" else -1
            if h < 0:
                ok = False
                break
        if not ok or h != r:
            continue
        for run in "".join(word).split("0"):
            if run and len(run) not in members:
                ok = False
                break
        if ok:
            count += 1
    return count


def random_graph_with_girth(
    n: int, max_degree: int, min_girth: int, seed: int
) -> Graph:
    """Random graph whose girth is at least min_girth.

    Candidate edges are accepted only when the endpoints are currently at
    distance >= min_girth - 1, so no short cycle can close.
    """
    rng = random.Random(seed)
    adj: dict[int, set[int]] = {v: set() for v in range(n)}
    edges: list[tuple[int, int]] = []
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    rng.shuffle(pairs)
    for u, v in pairs:
        if len(adj[u]) >= max_degree or len(adj[v]) >= max_degree:
            continue
        dist = {u: 0}
        frontier = [u]
        d = 0
        blocked = False
        while frontier and d < min_girth - 2:
            d += 1
            nxt = []
            for x in frontier:
                for y in adj[x]:
                    if y not in dist:
                        dist[y] = d
                        nxt.append(y)
            frontier = nxt
        if v in dist:
            blocked = dist[v] < min_girth - 1
        if not blocked:
            adj[u].add(v)
            adj[v].add(u)
            edges.append((u, v))
    return Graph(n, edges)


def regenerate_ranks(config, steps: int) -> list[int]:
    """The rank vector a seeded run actually consumed."""
    if config.ranks is not None:
        return list(config.ranks[:steps])
    rng = random.Random(config.seed)
    return [rng.randint(1, config.rank_bound) for _ in range(steps)]
