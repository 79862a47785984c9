"""Acyclic edge coloring by rank-driven local search with replayable records.

The engine colors edges in index order.  Each step takes the uncolored
edge with the smallest index and gives it the rank-th smallest available
color, where the rank comes from a seeded generator or an explicit rank
vector.  A color is unavailable at edge uv when an adjacent edge carries
it, or when it sits on an edge xy with ux and vy equally colored (that
second rule keeps every 4-cycle off two colors, so at most 2(delta - 1)
colors are ever excluded).  If the new color closes a cycle that
alternates between two colors, the engine keeps the cycle's second and
third edges, uncolors the rest, and appends a conflict entry naming the
cycle; otherwise it appends an empty entry.

The record is the whole point: together with the final coloring it
determines the rank vector exactly (reconstruct_inputs), which is the
injectivity that turns record counting into step-count bounds.  Edge
colorings are lists of length m + 1 whose slot 0 is unused, so colors
live at their 1-based edge ids.
"""
from __future__ import annotations

import heapq
import math
import random
from dataclasses import dataclass
from typing import Iterable, NamedTuple, Sequence

from .bounds import acyclic_color_bound, expected_steps_bound, _ceil_eps
from .graphs import Graph, compute_stats
from .records import CycleConflict, RecordEntry, RecordError, theta, theta_inverse


class ReconstructionError(ValueError):
    """Record and final coloring do not describe a consistent run."""


# -- configuration ------------------------------------------------------


@dataclass(frozen=True)
class RunConfig:
    """Palette size, rank alphabet, step budget, and rank source.

    ranks, when given, is the explicit rank vector (entries in
    1..rank_bound) and takes precedence over the seed.
    """

    K: int
    rank_bound: int
    max_steps: int
    seed: int | None = 0
    ranks: tuple[int, ...] | None = None


def default_max_steps(m: int, delta: int) -> int:
    """Four times the expected-steps bound, and never below m."""
    if m == 0:
        return 0
    bound = expected_steps_bound(m, max(1, delta))
    return max(m, 4 * _ceil_eps(bound))


def make_run_config(
    g: Graph,
    K: int | None = None,
    gamma: float | None = None,
    rank_bound: int | None = None,
    max_steps: int | None = None,
    seed: int | None = 0,
    ranks: Sequence[int] | None = None,
    girth: float | None = None,
) -> RunConfig:
    """Build and validate a configuration for this graph.

    With no palette size given, it comes from the girth-driven bound
    (4 delta - 4 for girth up to 6).  The rank alphabet defaults to the
    full slack K - 2(delta - 1); configurations whose slack is below 1
    are rejected because a step could run out of colors.
    """
    delta = g.delta
    if K is None:
        if gamma is not None:
            K = _ceil_eps((2.0 + gamma) * (delta - 1)) if delta > 1 else 1
        else:
            if girth is None:
                girth = compute_stats(g).girth
            _, K = acyclic_color_bound(max(delta, 1), girth)
    slack = K - 2 * (delta - 1)
    if slack < 1:
        raise ValueError(
            f"palette of {K} colors leaves no slack at delta {delta}; "
            f"need at least {2 * (delta - 1) + 1}"
        )
    if rank_bound is None:
        rank_bound = slack
    if not 1 <= rank_bound <= slack:
        raise ValueError(f"rank_bound must lie in 1..{slack}, got {rank_bound}")
    if max_steps is None:
        max_steps = default_max_steps(g.m, delta)
    if max_steps < g.m:
        raise ValueError(f"max_steps {max_steps} below edge count {g.m}")
    if ranks is not None:
        ranks = tuple(int(r) for r in ranks)
        bad = [r for r in ranks if not 1 <= r <= rank_bound]
        if bad:
            raise ValueError(f"rank {bad[0]} outside 1..{rank_bound}")
        seed = None
    return RunConfig(K=K, rank_bound=rank_bound, max_steps=max_steps, seed=seed, ranks=ranks)


# -- partial colorings ---------------------------------------------------


class PartialColoring:
    """Edge colors plus the uncolored-edge queue and per-vertex color maps.

    The color maps (vertex -> color -> edge id) are what make alternating
    walks and exclusion rules O(1) per lookup; properness is asserted on
    every assignment since a clash would silently corrupt them.
    """

    __slots__ = ("g", "K", "colors", "_at", "_heap", "colored_count")

    def __init__(self, g: Graph, K: int):
        self.g = g
        self.K = K
        self.colors: list[int | None] = [None] * (g.m + 1)
        self._at: list[dict[int, int]] = [dict() for _ in range(g.n)]
        self._heap = list(range(1, g.m + 1))
        self.colored_count = 0

    def color(self, e: int) -> int | None:
        return self.colors[e]

    def edge_at(self, v: int, c: int) -> int | None:
        """Edge with color c incident to v, unique in a proper coloring."""
        return self._at[v].get(c)

    def items_at(self, v: int):
        return self._at[v].items()

    def assign(self, e: int, c: int) -> None:
        assert self.colors[e] is None
        u, v = self.g.pair(e)
        assert c not in self._at[u] and c not in self._at[v], "improper assignment"
        self.colors[e] = c
        self._at[u][c] = e
        self._at[v][c] = e
        self.colored_count += 1

    def unassign(self, e: int) -> None:
        c = self.colors[e]
        assert c is not None
        u, v = self.g.pair(e)
        self.colors[e] = None
        del self._at[u][c]
        del self._at[v][c]
        self.colored_count -= 1

    @property
    def is_complete(self) -> bool:
        return self.colored_count == self.g.m

    def peek_uncolored(self) -> int:
        return self._heap[0]

    def pop_uncolored(self) -> int:
        return heapq.heappop(self._heap)

    def push_uncolored(self, e: int) -> None:
        heapq.heappush(self._heap, e)

    def as_list(self) -> list[int | None]:
        return list(self.colors)


# -- exclusion rules -----------------------------------------------------


def _excluded_colors(g: Graph, view, e: int) -> set[int]:
    """Colors barred at uncolored edge e under both exclusion rules.

    `view` provides color(edge) and edge_at(vertex, color); both the live
    PartialColoring and the reconstruction's array view qualify.
    """
    u, v = g.pair(e)
    excluded: set[int] = set()
    u_items = list(view.items_at(u))
    for c, _ in u_items:
        excluded.add(c)
    for c, _ in view.items_at(v):
        excluded.add(c)
    for c, e_ux in u_items:
        e_vy = view.edge_at(v, c)
        if e_vy is None:
            continue
        pu = g.pair(e_ux)
        x = pu[0] if pu[1] == u else pu[1]
        pv = g.pair(e_vy)
        y = pv[0] if pv[1] == v else pv[1]
        if x == y:
            continue
        exy = g.edge_id(x, y)
        if exy is not None:
            cxy = view.color(exy)
            if cxy is not None:
                excluded.add(cxy)
    return excluded


def available_colors(g: Graph, phi: PartialColoring, e: int) -> list[int]:
    """Sorted palette colors usable at e without breaking the invariants."""
    excluded = _excluded_colors(g, phi, e)
    return [c for c in range(1, phi.K + 1) if c not in excluded]


# -- bicolored cycle detection and its codec -----------------------------


def find_bicolored_cycle(g: Graph, phi: PartialColoring, e: int) -> list[int] | None:
    """Cycle on exactly two colors through freshly colored edge e, if any.

    For each partner color in ascending order, follows the unique
    alternating walk away from e; a proper coloring gives every vertex at
    most one edge per color, so the walk either dies or closes the cycle.
    The returned vertex list starts with e's endpoints and is oriented so
    the second cycle edge has a smaller id than the last one.
    """
    u, v = g.pair(e)
    c = phi.color(e)
    assert c is not None
    at_u = {cu for cu, _ in phi.items_at(u)}
    at_v = {cv for cv, _ in phi.items_at(v)}
    partners = sorted((at_u & at_v) - {c})
    for c2 in partners:
        seq = [u, v]
        cur = v
        want = c2
        while True:
            eid = phi.edge_at(cur, want)
            if eid is None:
                break
            a, b = g.pair(eid)
            nxt = a if b == cur else b
            if nxt == u:
                assert len(seq) % 2 == 0 and len(seq) >= 6, "short bicolored cycle"
                second = phi.edge_at(v, c2)
                last = phi.edge_at(u, c2)
                if second < last:
                    return seq
                return [seq[1], seq[0]] + seq[2:][::-1]
            seq.append(nxt)
            if len(seq) > g.n:
                raise AssertionError("alternating walk failed to terminate")
            cur = nxt
            want = c2 if want == c else c
    return None


def cycle_edge_ids(g: Graph, cycle: Sequence[int]) -> list[int]:
    """Edge ids around a vertex cycle, first edge joining cycle[0..1]."""
    n = len(cycle)
    out = []
    for i in range(n):
        eid = g.edge_id(cycle[i], cycle[(i + 1) % n])
        if eid is None:
            raise RecordError(f"no edge {cycle[i]}-{cycle[(i + 1) % n]} in graph")
        out.append(eid)
    return out


def encode_cycle(g: Graph, cycle: Sequence[int], e: int) -> CycleConflict:
    """Name a cycle through e by its index among same-length cycles.

    The cycle is rewound to a canonical traversal (the smaller endpoint
    of e first), then each later vertex is recorded as its rank in the
    predecessor-stripped sorted neighbor list of the current vertex; the
    label word folds into one integer via the mixed-radix map.  The
    canonical start makes the encoding independent of how the cycle was
    discovered, which decode_cycle relies on.
    """
    u, v = g.pair(e)
    first2 = (cycle[0], cycle[1])
    if first2 == (u, v):
        canon = list(cycle)
    elif first2 == (v, u):
        canon = [u, v] + list(cycle[2:][::-1])
    else:
        raise RecordError("cycle does not start at the conflict edge")
    if len(canon) < 6 or len(canon) % 2 != 0:
        raise RecordError(f"conflict cycle must have even length >= 6, got {len(canon)}")
    word = [
        g.rank_skipping(canon[j + 1], canon[j + 2], canon[j])
        for j in range(len(canon) - 2)
    ]
    return CycleConflict(len(canon) // 2, theta(word, g.delta))


def decode_cycle(g: Graph, e: int, k: int, ell: int) -> list[int]:
    """Inverse of encode_cycle: rebuild the canonical vertex cycle.

    Raises RecordError when the label walk leaves the graph, revisits a
    vertex, or fails to close back at e's smaller endpoint.
    """
    u, v = g.pair(e)
    word = theta_inverse(ell, k, g.delta)
    seq = [u, v]
    for label in word:
        nxt = g.by_rank_skipping(seq[-1], label, seq[-2])
        if nxt is None:
            raise RecordError(f"cycle index {ell} walks off the graph at {seq[-1]}")
        seq.append(nxt)
    if len(set(seq)) != len(seq):
        raise RecordError(f"cycle index {ell} revisits a vertex")
    if g.edge_id(seq[-1], u) is None:
        raise RecordError(f"cycle index {ell} does not close at edge {e}")
    return seq


def rule_orient(g: Graph, canon: Sequence[int]) -> list[int]:
    """Reorient a canonical cycle so the second edge id beats the last."""
    second = g.edge_id(canon[1], canon[2])
    last = g.edge_id(canon[0], canon[-1])
    if second < last:
        return list(canon)
    return [canon[1], canon[0]] + list(canon[2:][::-1])


# -- the engine ----------------------------------------------------------


class StepResult(NamedTuple):
    entry: RecordEntry
    edge: int
    color: int
    uncolored: tuple[int, ...]


def step(g: Graph, phi: PartialColoring, rank: int) -> StepResult:
    """One coloring step at the smallest uncolored edge; mutates phi."""
    e = phi.peek_uncolored()
    avail = available_colors(g, phi, e)
    if rank > len(avail):
        raise ValueError(
            f"rank {rank} exceeds the {len(avail)} available colors at edge {e}"
        )
    c = avail[rank - 1]
    phi.assign(e, c)
    cycle = find_bicolored_cycle(g, phi, e)
    if cycle is None:
        phi.pop_uncolored()
        return StepResult(None, e, c, ())
    entry = encode_cycle(g, cycle, e)
    eids = cycle_edge_ids(g, cycle)
    assert eids[0] == e
    dropped = [e]
    phi.unassign(e)
    for eid in eids[3:]:
        phi.unassign(eid)
        phi.push_uncolored(eid)
        dropped.append(eid)
    return StepResult(entry, e, c, tuple(dropped))


@dataclass(frozen=True)
class RunOutcome:
    config: RunConfig
    steps: int
    record: tuple[RecordEntry, ...]
    edge_colors: list[int | None]
    completed: bool
    trace: tuple[StepResult, ...] | None = None

    @property
    def conflict_count(self) -> int:
        return sum(1 for entry in self.record if entry is not None)

    def descent_histogram(self) -> dict[int, int]:
        """Descent length (2k - 2) -> multiplicity over the record."""
        hist: dict[int, int] = {}
        for entry in self.record:
            if entry is not None:
                length = 2 * entry.k - 2
                hist[length] = hist.get(length, 0) + 1
        return hist


def run(g: Graph, config: RunConfig, trace: bool = False) -> RunOutcome:
    """Drive steps until the coloring completes or the budget runs out."""
    phi = PartialColoring(g, config.K)
    record: list[RecordEntry] = []
    traces: list[StepResult] = []
    if config.ranks is not None:
        budget = min(config.max_steps, len(config.ranks))
        rank_of = lambda i: config.ranks[i]
    else:
        rng = random.Random(config.seed)
        budget = config.max_steps
        rank_of = lambda i: rng.randint(1, config.rank_bound)
    steps = 0
    while not phi.is_complete and steps < budget:
        res = step(g, phi, rank_of(steps))
        record.append(res.entry)
        if trace:
            traces.append(res)
        steps += 1
    return RunOutcome(
        config=config,
        steps=steps,
        record=tuple(record),
        edge_colors=phi.as_list(),
        completed=phi.is_complete,
        trace=tuple(traces) if trace else None,
    )


# -- exact reconstruction ------------------------------------------------


class _ArrayView:
    """Duck-typed coloring view over a plain color array."""

    __slots__ = ("g", "colors")

    def __init__(self, g: Graph, colors: list[int | None]):
        self.g = g
        self.colors = colors

    def color(self, e: int) -> int | None:
        return self.colors[e]

    def edge_at(self, v: int, c: int) -> int | None:
        for _, eid in self.g.neighbors(v):
            if self.colors[eid] == c:
                return eid
        return None

    def items_at(self, v: int):
        for _, eid in self.g.neighbors(v):
            c = self.colors[eid]
            if c is not None:
                yield c, eid


def _rank_of_color(g: Graph, view: _ArrayView, e: int, c: int) -> int:
    excluded = _excluded_colors(g, view, e)
    if c in excluded:
        raise ReconstructionError(f"color {c} was not available at edge {e}")
    return c - sum(1 for x in excluded if x < c)


def reconstruct_inputs(
    g: Graph, record: Sequence[RecordEntry], edge_colors: Sequence[int | None]
) -> list[int]:
    """Recover the exact rank vector from a record and final coloring.

    A forward pass replays which edge each step colored (the record alone
    determines the uncolored set at every step); a backward pass then
    peels the final coloring one step at a time, rederiving the color
    each step assigned and its rank among the colors available then.
    Inconsistent inputs raise ReconstructionError.
    """
    if len(edge_colors) != g.m + 1:
        raise ReconstructionError(
            f"expected color slots 0..{g.m}, got {len(edge_colors)}"
        )
    heap = list(range(1, g.m + 1))
    uncolored = set(heap)
    heapq.heapify(heap)
    steps_info: list[tuple[int, list[int] | None]] = []
    for entry in record:
        if not heap:
            raise ReconstructionError("record has more steps than the graph allows")
        e = heap[0]
        if entry is None:
            heapq.heappop(heap)
            uncolored.discard(e)
            steps_info.append((e, None))
        else:
            k, ell = entry
            if k < 3:
                raise ReconstructionError(f"conflict entry with k={k}")
            try:
                canon = decode_cycle(g, e, k, ell)
            except RecordError as exc:
                raise ReconstructionError(str(exc)) from exc
            eids = cycle_edge_ids(g, rule_orient(g, canon))
            if eids[0] != e:
                raise ReconstructionError("decoded cycle does not start at the step edge")
            for eid in eids[1:]:
                if eid in uncolored:
                    raise ReconstructionError(
                        f"cycle through edge {e} crosses uncolored edge {eid}"
                    )
            for eid in eids[3:]:
                uncolored.add(eid)
                heapq.heappush(heap, eid)
            steps_info.append((e, eids))
    colors = list(edge_colors)
    for e in range(1, g.m + 1):
        if (e in uncolored) != (colors[e] is None):
            raise ReconstructionError(
                f"edge {e} colored/uncolored state disagrees with the record"
            )
    view = _ArrayView(g, colors)
    ranks_rev: list[int] = []
    for e, eids in reversed(steps_info):
        if eids is None:
            c = colors[e]
            if c is None:
                raise ReconstructionError(f"edge {e} should be colored at its step")
            colors[e] = None
            ranks_rev.append(_rank_of_color(g, view, e, c))
        else:
            c2 = colors[eids[1]]
            c3 = colors[eids[2]]
            if c2 is None or c3 is None or c2 == c3:
                raise ReconstructionError("retained cycle edges lost their two colors")
            if colors[e] is not None:
                raise ReconstructionError(f"conflict step edge {e} should be uncolored")
            for idx in range(3, len(eids)):
                if colors[eids[idx]] is not None:
                    raise ReconstructionError("cycle edge colored too early")
                colors[eids[idx]] = c3 if idx % 2 == 0 else c2
            ranks_rev.append(_rank_of_color(g, view, e, c3))
    return ranks_rev[::-1]


# -- verification --------------------------------------------------------


@dataclass(frozen=True)
class AcyclicVerdict:
    ok: bool
    witness: tuple | None = None


def verify_partial_acyclic(g: Graph, edge_colors: Sequence[int | None]) -> AcyclicVerdict:
    """Check properness and two-color-union forests on colored edges only.

    Witnesses: ("improper", vertex, edge, edge) for a color clash, or
    ("bicolored-cycle", (color, color), edge-id tuple) for a cycle.
    """
    for v in range(g.n):
        seen: dict[int, int] = {}
        for _, eid in g.neighbors(v):
            c = edge_colors[eid]
            if c is None:
                continue
            if c in seen:
                return AcyclicVerdict(False, ("improper", v, seen[c], eid))
            seen[c] = eid
    by_color: dict[int, list[int]] = {}
    pairs: set[tuple[int, int]] = set()
    for v in range(g.n):
        cs = sorted({edge_colors[eid] for _, eid in g.neighbors(v)} - {None})
        for i in range(len(cs)):
            for j in range(i + 1, len(cs)):
                pairs.add((cs[i], cs[j]))
    for eid in range(1, g.m + 1):
        c = edge_colors[eid]
        if c is not None:
            by_color.setdefault(c, []).append(eid)
    for a, b in sorted(pairs):
        adj: dict[int, list[tuple[int, int]]] = {}
        for eid in by_color.get(a, []) + by_color.get(b, []):
            x, y = g.pair(eid)
            adj.setdefault(x, []).append((y, eid))
            adj.setdefault(y, []).append((x, eid))
        visited: set[int] = set()
        for start in adj:
            if start in visited:
                continue
            comp = [start]
            visited.add(start)
            edges_in_comp = set()
            qi = 0
            while qi < len(comp):
                x = comp[qi]
                qi += 1
                for y, eid in adj[x]:
                    edges_in_comp.add(eid)
                    if y not in visited:
                        visited.add(y)
                        comp.append(y)
            if len(edges_in_comp) >= len(comp):
                cycle = _extract_cycle(adj, comp[0])
                return AcyclicVerdict(False, ("bicolored-cycle", (a, b), tuple(cycle)))
    return AcyclicVerdict(True)


def _extract_cycle(adj: dict[int, list[tuple[int, int]]], start: int) -> list[int]:
    # Every vertex has degree <= 2 here, so a component with a cycle is
    # the cycle itself; walk it without backtracking.
    cur = start
    prev_edge = None
    out: list[int] = []
    while True:
        nxt = None
        for y, eid in adj[cur]:
            if eid != prev_edge:
                nxt = (y, eid)
                break
        assert nxt is not None
        out.append(nxt[1])
        cur, prev_edge = nxt
        if cur == start:
            return out


def verify_acyclic(g: Graph, edge_colors: Sequence[int | None]) -> AcyclicVerdict:
    """Total-coloring verifier; raises ValueError on uncolored edges."""
    if len(edge_colors) != g.m + 1:
        raise ValueError(f"expected color slots 0..{g.m}")
    for e in range(1, g.m + 1):
        if edge_colors[e] is None:
            raise ValueError(f"edge {e} is uncolored; verifier needs a total coloring")
    return verify_partial_acyclic(g, edge_colors)
