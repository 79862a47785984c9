"""Simple undirected graphs with stable 1-based edge indices.

Vertices are 0-based integers 0..n-1.  Edges are numbered 1..m in a fixed
order (input order for edge lists, lexicographic for DIMACS) and keep that
numbering for the lifetime of the graph.  Neighbor lists are sorted by
neighbor id; the coloring engines rely on that order when they turn cycle
and path walks into small integer labels, so it is part of the contract,
not an implementation detail.
"""
from __future__ import annotations

import math
import random
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Iterator, TextIO


class GraphFormatError(ValueError):
    """Malformed graph input; the message carries the offending line."""


@dataclass(frozen=True)
class GraphStats:
    """Maximum degree and girth (math.inf for forests)."""

    delta: int
    girth: float


class Graph:
    """Immutable simple graph.

    Loops and parallel edges are rejected at construction.  All derived
    structure (adjacency, neighbor ranks, edge lookup) is built once.
    """

    __slots__ = ("n", "m", "_edges", "_adj", "_nbr_ids", "_nbr_pos", "_eid")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]]):
        if n < 0:
            raise GraphFormatError("vertex count must be nonnegative")
        pairs: list[tuple[int, int]] = []
        eid: dict[tuple[int, int], int] = {}
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphFormatError(f"edge {u}-{v} outside vertex range 0..{n - 1}")
            if u == v:
                raise GraphFormatError(f"loop edge {u}-{v} not allowed")
            key = (u, v) if u < v else (v, u)
            if key in eid:
                raise GraphFormatError(f"duplicate edge {key[0]}-{key[1]}")
            pairs.append(key)
            eid[key] = len(pairs)
        self.n = n
        self.m = len(pairs)
        self._edges = tuple(pairs)
        self._eid = eid
        adj: list[list[tuple[int, int]]] = [[] for _ in range(n)]
        for e, (u, v) in enumerate(pairs, start=1):
            adj[u].append((v, e))
            adj[v].append((u, e))
        for rows in adj:
            rows.sort()
        self._adj = tuple(tuple(rows) for rows in adj)
        self._nbr_ids = tuple(tuple(w for w, _ in rows) for rows in self._adj)
        self._nbr_pos = tuple(
            {w: i for i, w in enumerate(ids)} for ids in self._nbr_ids
        )

    # -- basic accessors -------------------------------------------------

    def pair(self, e: int) -> tuple[int, int]:
        """Endpoints (u, v) with u < v of edge id e (1-based)."""
        return self._edges[e - 1]

    def edge_id(self, u: int, v: int) -> int | None:
        """Edge id joining u and v, or None if absent."""
        return self._eid.get((u, v) if u < v else (v, u))

    def iter_edges(self) -> Iterator[tuple[int, int, int]]:
        """Yield (edge id, u, v) in index order."""
        for e, (u, v) in enumerate(self._edges, start=1):
            yield e, u, v

    def neighbors(self, v: int) -> tuple[tuple[int, int], ...]:
        """Sorted (neighbor, edge id) pairs at v."""
        return self._adj[v]

    def neighbor_ids(self, v: int) -> tuple[int, ...]:
        return self._nbr_ids[v]

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    @property
    def delta(self) -> int:
        return max((len(rows) for rows in self._adj), default=0)

    def edges(self) -> tuple[tuple[int, int], ...]:
        return self._edges

    # -- neighbor rank arithmetic ---------------------------------------
    #
    # Ranks are 1-based positions in the sorted neighbor list of `v` with a
    # designated predecessor vertex removed.  Cycle and path codecs use
    # these to name "the next vertex" with an integer in 1..deg(v)-1.

    def rank_skipping(self, v: int, target: int, skip: int) -> int:
        pos = self._nbr_pos[v]
        p = pos[target]
        q = pos.get(skip)
        if q is not None and q < p:
            return p
        return p + 1

    def by_rank_skipping(self, v: int, rank: int, skip: int) -> int | None:
        """Inverse of rank_skipping; None when the rank is out of range."""
        ids = self._nbr_ids[v]
        q = self._nbr_pos[v].get(skip)
        i = rank - 1
        if q is not None and i >= q:
            i += 1
        if 0 <= i < len(ids) and i != q:
            return ids[i]
        return None

    def rank_plain(self, v: int, target: int) -> int:
        return self._nbr_pos[v][target] + 1

    def by_rank_plain(self, v: int, rank: int) -> int | None:
        ids = self._nbr_ids[v]
        return ids[rank - 1] if 1 <= rank <= len(ids) else None

    def __repr__(self) -> str:  # pragma: no cover - debugging aid
        return f"Graph(n={self.n}, m={self.m})"


# -- statistics ---------------------------------------------------------


def compute_stats(g: Graph) -> GraphStats:
    """Maximum degree and exact girth via BFS from every vertex.

    For each start vertex, any non-tree edge (x, w) seen during BFS closes
    a cycle of length dist(x) + dist(w) + 1 through the root; the minimum
    of those candidates over all start vertices is the girth.
    """
    best = math.inf
    for s in range(g.n):
        dist = [-1] * g.n
        parent_edge = [0] * g.n
        dist[s] = 0
        q = deque([s])
        while q:
            x = q.popleft()
            if dist[x] * 2 >= best:
                continue
            for w, e in g.neighbors(x):
                if dist[w] < 0:
                    dist[w] = dist[x] + 1
                    parent_edge[w] = e
                    q.append(w)
                elif e != parent_edge[x]:
                    cand = dist[x] + dist[w] + 1
                    if cand < best:
                        best = cand
        if best == 3:
            break
    return GraphStats(delta=g.delta, girth=best)


# -- parsing and serialization -----------------------------------------


def _parse_edge_list(lines: Iterable[str]) -> Graph:
    pairs: list[tuple[int, int]] = []
    top = -1
    for lineno, raw in enumerate(lines, start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 2:
            raise GraphFormatError(f"line {lineno}: expected 'u v', got {raw.strip()!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphFormatError(f"line {lineno}: non-integer vertex id") from None
        if u < 0 or v < 0:
            raise GraphFormatError(f"line {lineno}: negative vertex id")
        if u == v:
            raise GraphFormatError(f"line {lineno}: loop edge {u}-{v}")
        key = (u, v) if u < v else (v, u)
        if key in set(pairs):
            raise GraphFormatError(f"line {lineno}: duplicate edge {key[0]}-{key[1]}")
        pairs.append(key)
        top = max(top, u, v)
    return Graph(top + 1, pairs)


def _parse_dimacs(lines: Iterable[str]) -> Graph:
    n = None
    m_declared = None
    pairs: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    for lineno, raw in enumerate(lines, start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        if line.startswith("p"):
            parts = line.split()
            if len(parts) != 4 or parts[1] not in ("edge", "col"):
                raise GraphFormatError(f"line {lineno}: bad problem line {line!r}")
            n, m_declared = int(parts[2]), int(parts[3])
        elif line.startswith("e"):
            if n is None:
                raise GraphFormatError(f"line {lineno}: edge before problem line")
            parts = line.split()
            if len(parts) != 3:
                raise GraphFormatError(f"line {lineno}: bad edge line {line!r}")
            u, v = int(parts[1]) - 1, int(parts[2]) - 1
            if not (0 <= u < n and 0 <= v < n):
                raise GraphFormatError(f"line {lineno}: vertex out of range")
            if u == v:
                raise GraphFormatError(f"line {lineno}: loop edge")
            key = (u, v) if u < v else (v, u)
            if key in seen:
                raise GraphFormatError(f"line {lineno}: duplicate edge {key[0] + 1}-{key[1] + 1}")
            seen.add(key)
            pairs.append(key)
        else:
            raise GraphFormatError(f"line {lineno}: unrecognized line {line!r}")
    if n is None:
        raise GraphFormatError("missing problem line")
    if m_declared is not None and m_declared != len(pairs):
        raise GraphFormatError(
            f"problem line declares {m_declared} edges, found {len(pairs)}"
        )
    pairs.sort()
    return Graph(n, pairs)


def load_graph(source: str | TextIO, fmt: str = "edge-list") -> Graph:
    """Parse a graph from text or a readable stream.

    fmt is "edge-list" (one 'u v' pair per line, '#' comments) or "dimacs"
    ('p edge n m' header and 1-based 'e u v' lines).  Edge-list edges keep
    input order; DIMACS edges are renumbered in lexicographic order.
    """
    if hasattr(source, "read"):
        text = source.read()
    else:
        text = source
    lines = text.splitlines()
    if fmt == "edge-list":
        return _parse_edge_list(lines)
    if fmt == "dimacs":
        return _parse_dimacs(lines)
    raise GraphFormatError(f"unknown format {fmt!r}")


def dump_edge_list(g: Graph) -> str:
    return "".join(f"{u} {v}\n" for _, u, v in g.iter_edges())


def dump_dimacs(g: Graph) -> str:
    out = [f"p edge {g.n} {g.m}\n"]
    out.extend(f"e {u + 1} {v + 1}\n" for _, u, v in g.iter_edges())
    return "".join(out)


# -- generators ---------------------------------------------------------


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycle needs at least 3 vertices")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def path_graph(n: int) -> Graph:
    if n < 1:
        raise ValueError("path needs at least 1 vertex")
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def complete_graph(n: int) -> Graph:
    return Graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def complete_bipartite_graph(a: int, b: int) -> Graph:
    if a < 0 or b < 0:
        raise ValueError("part sizes must be nonnegative")
    return Graph(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def random_graph_max_degree(
    n: int, max_degree: int, n_edges: int | None = None, seed: int = 0
) -> Graph:
    """Random simple graph honoring a hard degree cap.

    Candidate pairs are visited in a seed-determined shuffle; a pair is
    rejected when either endpoint already sits at the cap.  With n_edges
    given, generation stops once that many edges are accepted (raises if
    the cap makes the target infeasible).
    """
    if n < 0 or max_degree < 0:
        raise ValueError("n and max_degree must be nonnegative")
    if n_edges is not None and n_edges > n * max_degree // 2:
        raise ValueError(
            f"{n_edges} edges infeasible with n={n} and degree cap {max_degree}"
        )
    rng = random.Random(seed)
    candidates = [(i, j) for i in range(n) for j in range(i + 1, n)]
    rng.shuffle(candidates)
    deg = [0] * n
    chosen: list[tuple[int, int]] = []
    for u, v in candidates:
        if n_edges is not None and len(chosen) == n_edges:
            break
        if deg[u] < max_degree and deg[v] < max_degree:
            chosen.append((u, v))
            deg[u] += 1
            deg[v] += 1
    if n_edges is not None and len(chosen) < n_edges:
        raise ValueError(
            f"could only place {len(chosen)} of {n_edges} edges under the degree cap"
        )
    return Graph(n, chosen)


def generate_graph(model: str, seed: int = 0, **params) -> Graph:
    """Dispatch to the named generator; deterministic for a fixed seed."""
    if model == "cycle":
        return cycle_graph(params["n"])
    if model == "path":
        return path_graph(params["n"])
    if model == "complete":
        return complete_graph(params["n"])
    if model == "complete-bipartite":
        return complete_bipartite_graph(params["a"], params["b"])
    if model == "random-with-max-degree":
        return random_graph_max_degree(
            params["n"], params["max_degree"], params.get("n_edges"), seed
        )
    raise ValueError(f"unknown graph model {model!r}")
