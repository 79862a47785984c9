"""Star vertex coloring: proper colorings with no 2k-vertex path on two colors.

Vertices are colored in index order with the rank-th smallest palette
color absent from the colored neighborhood.  Since a neighborhood holds
at most delta colors, a palette of delta + s colors always leaves s
choices, so the rank alphabet is the palette size minus delta.  When the
new color completes a path on 2k vertices that alternates between two
colors, the engine keeps the two consecutive path vertices farthest from
the step vertex, uncolors the other 2k - 2, and records the conflict as
the step vertex's position in the path plus 2k - 1 neighbor-rank labels
that let the path be rebuilt from the graph alone.  As in the edge
variant, the record plus the final coloring pin down the exact rank
vector (reconstruct_star_inputs).

Vertex colorings are plain lists of length n indexed by vertex id.
"""
from __future__ import annotations

import heapq
import random
from dataclasses import dataclass
from typing import NamedTuple, Sequence

from .acyclic import default_max_steps
from .bounds import star_color_bound
from .graphs import Graph
from .records import RecordError


class StarReconstructionError(ValueError):
    """Star record and final coloring do not describe a consistent run."""


class PathConflict(NamedTuple):
    """A bicolored 2k-vertex path, as seen from the step vertex.

    position is the step vertex's 1-based slot in the canonical path;
    labels holds 2k - 1 neighbor ranks (left arm outward, then right arm
    outward; the first step on each side is a rank in the full sorted
    neighbor list, later steps skip the predecessor).
    """

    position: int
    labels: tuple[int, ...]

    @property
    def k(self) -> int:
        return (len(self.labels) + 1) // 2


StarRecordEntry = PathConflict | None


@dataclass(frozen=True)
class StarConfig:
    colors: int
    rank_bound: int
    max_steps: int
    k: int
    seed: int | None = 0
    ranks: tuple[int, ...] | None = None


def make_star_config(
    g: Graph,
    k: int = 2,
    colors: int | None = None,
    rank_bound: int | None = None,
    max_steps: int | None = None,
    seed: int | None = 0,
    ranks: Sequence[int] | None = None,
) -> StarConfig:
    """Validated configuration; palette defaults to the proven bound."""
    if k < 2:
        raise ValueError(f"k must be at least 2, got {k}")
    delta = g.delta
    if colors is None:
        colors = star_color_bound(max(delta, 1), k)
    slack = colors - delta
    if slack < 1:
        raise ValueError(
            f"palette of {colors} colors leaves no slack at delta {delta}"
        )
    if rank_bound is None:
        rank_bound = slack
    if not 1 <= rank_bound <= slack:
        raise ValueError(f"rank_bound must lie in 1..{slack}, got {rank_bound}")
    if max_steps is None:
        max_steps = default_max_steps(g.n, max(delta, 1))
    if max_steps < g.n:
        raise ValueError(f"max_steps {max_steps} below vertex count {g.n}")
    if ranks is not None:
        ranks = tuple(int(r) for r in ranks)
        bad = [r for r in ranks if not 1 <= r <= rank_bound]
        if bad:
            raise ValueError(f"rank {bad[0]} outside 1..{rank_bound}")
        seed = None
    return StarConfig(
        colors=colors, rank_bound=rank_bound, max_steps=max_steps, k=k,
        seed=seed, ranks=ranks,
    )


# -- bicolored path detection and its codec ------------------------------


def _arms(g: Graph, colors: Sequence[int | None], v: int, b: int, limit: int):
    """Simple alternating-color arms leaving v, grouped by vertex count.

    Arm vertices exclude v and start with color b, then alternate with
    v's color.  Returns a dict length -> list of vertex tuples.
    """
    a = colors[v]
    by_len: dict[int, list[tuple[int, ...]]] = {i: [] for i in range(limit + 1)}
    by_len[0].append(())
    path: list[int] = []
    used = {v}

    def dfs(cur: int, want: int) -> None:
        if len(path) == limit:
            return
        for w, _ in g.neighbors(cur):
            if w in used or colors[w] != want:
                continue
            path.append(w)
            used.add(w)
            by_len[len(path)].append(tuple(path))
            dfs(w, a if want == b else b)
            used.remove(w)
            path.pop()

    dfs(v, b)
    return by_len


def find_bicolored_path(
    g: Graph, colors: Sequence[int | None], v: int, k: int
) -> list[int] | None:
    """Smallest canonical 2k-vertex two-colored path through colored v.

    Canonical means the lexicographically smaller of the vertex sequence
    and its reversal; among all such paths the lexicomin is returned so
    repeated searches are deterministic.
    """
    a = colors[v]
    assert a is not None
    partner_colors = sorted(
        {colors[w] for w, _ in g.neighbors(v) if colors[w] is not None} - {a}
    )
    length = 2 * k
    best: tuple[int, ...] | None = None
    for b in partner_colors:
        by_len = _arms(g, colors, v, b, length - 1)
        for p in range(1, length + 1):
            lefts = by_len[p - 1]
            rights = by_len[length - p]
            if not lefts or not rights:
                continue
            for left in lefts:
                lset = set(left)
                for right in rights:
                    if lset & set(right):
                        continue
                    seq = tuple(reversed(left)) + (v,) + right
                    canon = min(seq, seq[::-1])
                    if best is None or canon < best:
                        best = canon
    return list(best) if best is not None else None


def encode_path(g: Graph, canon: Sequence[int], v: int) -> PathConflict:
    """Record a canonical path as position-of-v plus neighbor-rank labels."""
    n = len(canon)
    p = canon.index(v) + 1
    labels: list[int] = []
    if p >= 2:
        labels.append(g.rank_plain(v, canon[p - 2]))
        for i in range(p - 2, 0, -1):
            labels.append(g.rank_skipping(canon[i], canon[i - 1], canon[i + 1]))
    if p <= n - 1:
        labels.append(g.rank_plain(v, canon[p]))
        for i in range(p, n - 1):
            labels.append(g.rank_skipping(canon[i], canon[i + 1], canon[i - 1]))
    return PathConflict(p, tuple(labels))


def decode_path(g: Graph, v: int, entry: PathConflict) -> list[int]:
    """Rebuild the canonical path a PathConflict describes around v."""
    k = entry.k
    n = 2 * k
    if len(entry.labels) != 2 * k - 1:
        raise RecordError(f"expected {2 * k - 1} labels, got {len(entry.labels)}")
    p = entry.position
    if not 1 <= p <= n:
        raise RecordError(f"position {p} outside 1..{n}")
    labels = list(entry.labels)
    left_labels = labels[: p - 1]
    right_labels = labels[p - 1 :]

    def walk(side_labels: list[int]) -> list[int]:
        out: list[int] = []
        prev = v
        for i, lab in enumerate(side_labels):
            cur = out[-1] if out else v
            if i == 0:
                nxt = g.by_rank_plain(v, lab)
            else:
                nxt = g.by_rank_skipping(cur, lab, prev)
                prev = cur
            if nxt is None:
                raise RecordError(f"label {lab} walks off the graph at {cur}")
            out.append(nxt)
        return out

    left = walk(left_labels)
    right = walk(right_labels)
    seq = list(reversed(left)) + [v] + right
    if len(set(seq)) != n:
        raise RecordError("decoded path revisits a vertex")
    return seq


def retained_pair(canon: Sequence[int], position: int, k: int) -> tuple[int, int]:
    """The two consecutive path vertices farthest from the step vertex."""
    if position <= k:
        return canon[-2], canon[-1]
    return canon[0], canon[1]


# -- the engine ----------------------------------------------------------


class StarStepResult(NamedTuple):
    entry: StarRecordEntry
    vertex: int
    color: int
    uncolored: tuple[int, ...]


@dataclass(frozen=True)
class StarOutcome:
    config: StarConfig
    steps: int
    record: tuple[StarRecordEntry, ...]
    vertex_colors: list[int | None]
    completed: bool
    trace: tuple[StarStepResult, ...] | None = None

    @property
    def conflict_count(self) -> int:
        return sum(1 for entry in self.record if entry is not None)


def star_step(
    g: Graph,
    colors: list[int | None],
    heap: list[int],
    k: int,
    palette: int,
    rank: int,
) -> StarStepResult:
    """One coloring step at the smallest uncolored vertex; mutates state."""
    v = heap[0]
    excluded = {colors[w] for w, _ in g.neighbors(v) if colors[w] is not None}
    avail = [c for c in range(1, palette + 1) if c not in excluded]
    if rank > len(avail):
        raise ValueError(
            f"rank {rank} exceeds the {len(avail)} available colors at vertex {v}"
        )
    c = avail[rank - 1]
    colors[v] = c
    canon = find_bicolored_path(g, colors, v, k)
    if canon is None:
        heapq.heappop(heap)
        return StarStepResult(None, v, c, ())
    entry = encode_path(g, canon, v)
    keep = set(retained_pair(canon, entry.position, k))
    dropped = [v]
    colors[v] = None
    for w in canon:
        if w in keep or w == v:
            continue
        colors[w] = None
        heapq.heappush(heap, w)
        dropped.append(w)
    return StarStepResult(entry, v, c, tuple(dropped))


def run_star(g: Graph, config: StarConfig, trace: bool = False) -> StarOutcome:
    """Drive star steps until completion or the budget runs out."""
    colors: list[int | None] = [None] * g.n
    heap = list(range(g.n))
    record: list[StarRecordEntry] = []
    traces: list[StarStepResult] = []
    if config.ranks is not None:
        budget = min(config.max_steps, len(config.ranks))
        rank_of = lambda i: config.ranks[i]
    else:
        rng = random.Random(config.seed)
        budget = config.max_steps
        rank_of = lambda i: rng.randint(1, config.rank_bound)
    steps = 0
    colored = 0
    while colored < g.n and steps < budget:
        res = star_step(g, colors, heap, config.k, config.colors, rank_of(steps))
        record.append(res.entry)
        if trace:
            traces.append(res)
        colored += 1 if res.entry is None else 1 - len(res.uncolored)
        steps += 1
    return StarOutcome(
        config=config,
        steps=steps,
        record=tuple(record),
        vertex_colors=colors,
        completed=colored == g.n,
        trace=tuple(traces) if trace else None,
    )


# -- exact reconstruction ------------------------------------------------


def reconstruct_star_inputs(
    g: Graph,
    k: int,
    record: Sequence[StarRecordEntry],
    vertex_colors: Sequence[int | None],
) -> list[int]:
    """Recover the exact rank vector from a star record and final coloring."""
    if len(vertex_colors) != g.n:
        raise StarReconstructionError(
            f"expected {g.n} color slots, got {len(vertex_colors)}"
        )
    heap = list(range(g.n))
    uncolored = set(heap)
    heapq.heapify(heap)
    steps_info: list[tuple[int, list[int] | None, int]] = []
    for entry in record:
        if not heap:
            raise StarReconstructionError("record has more steps than vertices allow")
        v = heap[0]
        if entry is None:
            heapq.heappop(heap)
            uncolored.discard(v)
            steps_info.append((v, None, 0))
        else:
            if entry.k != k:
                raise StarReconstructionError(
                    f"conflict entry arity {len(entry.labels)} does not match k={k}"
                )
            try:
                canon = decode_path(g, v, entry)
            except RecordError as exc:
                raise StarReconstructionError(str(exc)) from exc
            for w in canon:
                if w != v and w in uncolored:
                    raise StarReconstructionError(
                        f"path at vertex {v} crosses uncolored vertex {w}"
                    )
            keep = set(retained_pair(canon, entry.position, k))
            for w in canon:
                if w != v and w not in keep:
                    uncolored.add(w)
                    heapq.heappush(heap, w)
            steps_info.append((v, canon, entry.position))
    colors = list(vertex_colors)
    for v in range(g.n):
        if (v in uncolored) != (colors[v] is None):
            raise StarReconstructionError(
                f"vertex {v} colored/uncolored state disagrees with the record"
            )

    def rank_at(v: int, c: int) -> int:
        excluded = {colors[w] for w, _ in g.neighbors(v) if colors[w] is not None}
        if c in excluded:
            raise StarReconstructionError(f"color {c} was not available at vertex {v}")
        return c - sum(1 for x in excluded if x < c)

    ranks_rev: list[int] = []
    for v, canon, position in reversed(steps_info):
        if canon is None:
            c = colors[v]
            if c is None:
                raise StarReconstructionError(f"vertex {v} should be colored at its step")
            colors[v] = None
            ranks_rev.append(rank_at(v, c))
        else:
            r1, r2 = retained_pair(canon, position, k)
            j1, j2 = canon.index(r1) + 1, canon.index(r2) + 1
            c1, c2 = colors[r1], colors[r2]
            if c1 is None or c2 is None or c1 == c2:
                raise StarReconstructionError("retained path vertices lost their colors")
            parity_color = {j1 % 2: c1, j2 % 2: c2}
            if colors[v] is not None:
                raise StarReconstructionError(f"conflict step vertex {v} should be uncolored")
            keep = {r1, r2}
            for j, w in enumerate(canon, start=1):
                if w in keep or w == v:
                    continue
                if colors[w] is not None:
                    raise StarReconstructionError("path vertex colored too early")
                colors[w] = parity_color[j % 2]
            ranks_rev.append(rank_at(v, parity_color[position % 2]))
    return ranks_rev[::-1]


# -- verification --------------------------------------------------------


@dataclass(frozen=True)
class StarVerdict:
    ok: bool
    witness: tuple | None = None


def verify_partial_star(
    g: Graph, vertex_colors: Sequence[int | None], k: int
) -> StarVerdict:
    """Check properness and the no-bicolored-2k-path condition.

    Uncolored vertices never participate.  Witnesses are
    ("improper", u, w) or ("bicolored-path", (a, b), vertex tuple).
    """
    for _, u, w in g.iter_edges():
        cu, cw = vertex_colors[u], vertex_colors[w]
        if cu is not None and cu == cw:
            return StarVerdict(False, ("improper", u, w))
    length = 2 * k
    path: list[int] = []
    used: set[int] = set()

    def dfs(cur: int) -> tuple[int, ...] | None:
        if len(path) == length:
            return tuple(path)
        want = vertex_colors[path[-2]] if len(path) >= 2 else None
        for w, _ in g.neighbors(cur):
            if w in used:
                continue
            cw = vertex_colors[w]
            if cw is None or (want is not None and cw != want):
                continue
            if want is None and cw == vertex_colors[cur]:
                continue
            path.append(w)
            used.add(w)
            hit = dfs(w)
            if hit is not None:
                return hit
            used.remove(w)
            path.pop()
        return None

    for s in range(g.n):
        if vertex_colors[s] is None:
            continue
        path = [s]
        used = {s}
        hit = dfs(s)
        if hit is not None:
            a, b = vertex_colors[hit[0]], vertex_colors[hit[1]]
            return StarVerdict(False, ("bicolored-path", (a, b), hit))
    return StarVerdict(True)


def verify_star_k(g: Graph, vertex_colors: Sequence[int | None], k: int) -> StarVerdict:
    """Total-coloring star verifier; raises ValueError on uncolored vertices."""
    if len(vertex_colors) != g.n:
        raise ValueError(f"expected {g.n} color slots")
    for v in range(g.n):
        if vertex_colors[v] is None:
            raise ValueError(f"vertex {v} is uncolored; verifier needs a total coloring")
    return verify_partial_star(g, vertex_colors, k)
