"""Exact counting of Dyck words with descent lengths in a fixed set.

C(t, E) counts binary words with t 0s and t 1s, every prefix carrying at
least as many 0s as 1s, and every maximal 1-run (descent) of a length in
E.  Such words correspond to rooted plane trees on t+1 vertices whose
out-degrees all lie in E together with 0, which yields the convolution
recurrence used by count_dyck.  count_dyck_lagrange recomputes the same
number as [x^t] phi_E(x)^(t+1) / (t+1) with phi_E(x) = 1 + sum_{i in E}
x^i, an exact truncated power computation, so the two routes cross-check
each other.  All arithmetic is arbitrary-precision integers; ratios are
exact until the caller converts them.

Infinite descent sets are handled by collapsing run lengths beyond
max(finite part, progression start) to congruence classes modulo the
progression step, which keeps every dynamic program finite.
"""
from __future__ import annotations

from fractions import Fraction

from .descents import DescentSet


class _RunStates:
    """Collapsed run-length automaton for a descent set.

    States 0..L track exact run lengths (L = largest length that must be
    distinguished); for infinite sets, states L+1..L+d track run lengths
    above L by congruence class modulo the progression step d.  step()
    returns None when a run has grown too long to ever land in E.
    """

    def __init__(self, descents: DescentSet):
        self.descents = descents
        fin_max = max(descents.finite) if descents.finite else 0
        if descents.is_finite:
            self.exact_top = fin_max
            self.size = fin_max + 1
        else:
            self.exact_top = max(fin_max, descents.prog_start)
            self.size = self.exact_top + 1 + descents.prog_step
        self._step = []
        self._endable = []
        for s in range(self.size):
            self._step.append(self._compute_step(s))
            self._endable.append(self._compute_endable(s))

    def _represented_length(self, s: int) -> int:
        # Any run length the state stands for; lengths above exact_top
        # share endability, so one representative suffices.
        return s

    def _compute_step(self, s: int) -> int | None:
        L = self.exact_top
        if s < L:
            return s + 1
        if self.descents.is_finite:
            return None  # a run longer than every member can never close
        d = self.descents.prog_step
        if s == L:
            return L + 1
        c = s - (L + 1)
        return L + 1 + ((c + 1) % d)

    def _compute_endable(self, s: int) -> bool:
        if s == 0:
            return False
        L = self.exact_top
        if s <= L:
            return s in self.descents
        # s encodes run lengths congruent to L + 1 + (s - L - 1) mod d,
        # all above the finite part, so progression membership decides.
        d = self.descents.prog_step
        length = L + 1 + (s - (L + 1))
        return (length - self.descents.prog_start) % d == 0

    def step(self, s: int) -> int | None:
        return self._step[s]

    def endable(self, s: int) -> bool:
        return self._endable[s]

    def stoppable(self, s: int) -> bool:
        """A word may end in this state (no open run, or a valid run)."""
        return s == 0 or self._endable[s]


# -- plane-tree convolution route ---------------------------------------

_TREE_CACHE: dict[DescentSet, tuple[list[int], list[list[int]]]] = {}


def _tree_series(descents: DescentSet, upto: int) -> list[int]:
    """T[n] = number of plane trees on n vertices, out-degrees in E or 0.

    F[x][s] counts root-child sequences with x vertices in the attached
    subtrees and child-count state s; appending one subtree of size m
    advances the state, and a root is closed when its count is in E.
    Results are cached per descent set and extended in place.
    """
    states = _RunStates(descents)
    if descents not in _TREE_CACHE:
        seed_row = [0] * states.size
        seed_row[0] = 1
        _TREE_CACHE[descents] = ([0, 1], [seed_row])
    T, F = _TREE_CACHE[descents]
    while len(T) <= upto:
        x = len(F)  # next child-sequence total to fill; T[x + 1] follows
        row = [0] * states.size
        for m in range(1, x + 1):
            tm = T[m]
            if tm == 0:
                continue
            prev = F[x - m]
            for s, cnt in enumerate(prev):
                if cnt:
                    nxt = states.step(s)
                    if nxt is not None:
                        row[nxt] += cnt * tm
        F.append(row)
        T.append(sum(cnt for s, cnt in enumerate(row) if states.endable(s)))
    return T


def count_dyck(t: int, descents: DescentSet) -> int:
    """Number of Dyck words of length 2t with all descents in E."""
    if t < 0:
        raise ValueError("t must be nonnegative")
    return _tree_series(descents, t + 1)[t + 1]


# -- truncated-power route ----------------------------------------------


def count_dyck_lagrange(t: int, descents: DescentSet) -> int:
    """Same count as [x^t] phi_E(x)^(t+1) / (t+1), computed exactly.

    The coefficients of the truncated power f = phi^(t+1) follow from the
    power rule f' phi = (t+1) phi' f, which gives the classical pure
    recurrence m f_m = sum_i ((t+2) i - m) f_{m-i} over the support of
    phi; every division is exact and asserted so.
    """
    if t < 0:
        raise ValueError("t must be nonnegative")
    if t == 0:
        return 1
    support = [i for i in descents.members_upto(t) if i >= 1]
    f = [0] * (t + 1)
    f[0] = 1
    n_plus_2 = t + 2
    for m in range(1, t + 1):
        acc = 0
        for i in support:
            if i > m:
                break
            coef = n_plus_2 * i - m
            if coef:
                acc += coef * f[m - i]
        q, rem = divmod(acc, m)
        assert rem == 0, "power-series recurrence must divide exactly"
        f[m] = q
    q, rem = divmod(f[t], t + 1)
    assert rem == 0, "tree-count division must be exact"
    return q


# -- partial words and whole-series sweeps ------------------------------


def count_partial_dyck(t: int, r: int, descents: DescentSet) -> int:
    """Partial Dyck words with t 0s, t-r 1s, and all descents in E.

    Dynamic program over position, imbalance and run state; the trailing
    run, if any, must itself have a length in E.
    """
    if not 0 <= r <= t:
        raise ValueError("need 0 <= r <= t")
    states = _RunStates(descents)
    length = 2 * t - r
    # cur[h][s], h = (#0s - #1s) so far
    cur = [[0] * states.size for _ in range(t + 1)]
    cur[0][0] = 1
    for pos in range(length):
        nxt = [[0] * states.size for _ in range(t + 1)]
        for h in range(min(pos, t) + 1):
            row = cur[h]
            if h + 1 <= t:
                up = sum(cnt for s, cnt in enumerate(row) if cnt and states.stoppable(s))
                if up:
                    zeros = (pos + h) // 2 + 1
                    if zeros <= t:
                        nxt[h + 1][0] += up
            if h >= 1:
                for s, cnt in enumerate(row):
                    if cnt:
                        ns = states.step(s)
                        if ns is not None:
                            nxt[h - 1][ns] += cnt
        cur = nxt
    return sum(cnt for s, cnt in enumerate(cur[r]) if states.stoppable(s))


def count_dyck_series(t_max: int, descents: DescentSet) -> list[int]:
    """All of C(0..t_max, E) in one additive sweep over word positions.

    Equivalent to count_dyck at every index; used where thousands of
    consecutive counts are needed (ratio studies), since it avoids the
    big-integer multiplications of the convolution route.
    """
    if t_max < 0:
        raise ValueError("t_max must be nonnegative")
    states = _RunStates(descents)
    H = t_max
    # rows[s][h]; transposed relative to count_partial_dyck so each
    # position update is a handful of whole-row shifts.
    rows = [[0] * (H + 1) for _ in range(states.size)]
    rows[0][0] = 1
    sources_for: dict[int, list[int]] = {}
    for s in range(states.size):
        ns = states.step(s)
        if ns is not None:
            sources_for.setdefault(ns, []).append(s)
    stop_states = [s for s in range(states.size) if states.stoppable(s)]
    out = [0] * (t_max + 1)
    out[0] = 1
    for pos in range(2 * t_max):
        up_src = rows[0]
        for s in stop_states:
            if s != 0:
                up_src = [a + b for a, b in zip(up_src, rows[s])]
        nxt = []
        for s in range(states.size):
            srcs = sources_for.get(s, [])
            if not srcs:
                shifted = [0] * (H + 1)
            elif len(srcs) == 1:
                shifted = rows[srcs[0]][1:] + [0]
            else:
                acc = rows[srcs[0]]
                for other in srcs[1:]:
                    acc = [a + b for a, b in zip(acc, rows[other])]
                shifted = acc[1:] + [0]
            nxt.append(shifted)
        nxt[0] = [0] + up_src[:H]
        rows = nxt
        if pos % 2 == 1:
            tt = (pos + 1) // 2
            out[tt] = sum(rows[s][0] for s in stop_states)
    return out


def enumerate_dyck(t: int, descents: DescentSet, limit: int = 10**6) -> list[str]:
    """All admissible words of length 2t in lexicographic order.

    Refuses when the count exceeds `limit`; check with count_dyck first
    for large parameters.
    """
    total = count_dyck(t, descents)
    if total > limit:
        raise ValueError(f"{total} words exceed enumeration limit {limit}")
    states = _RunStates(descents)
    out: list[str] = []
    word: list[str] = []

    def rec(zeros: int, h: int, s: int):
        if len(word) == 2 * t:
            if h == 0 and states.stoppable(s):
                out.append("".join(word))
            return
        if zeros < t and states.stoppable(s):
            word.append("0")
            rec(zeros + 1, h + 1, 0)
            word.pop()
        if h >= 1:
            ns = states.step(s)
            if ns is not None:
                word.append("1")
                rec(zeros, h - 1, ns)
                word.pop()

    rec(0, 0, 0)
    assert len(out) == total, "enumeration disagrees with count"
    return out


def growth_ratio(descents: DescentSet, t_max: int) -> list[tuple[int, float]]:
    """Per-step growth of C(t, E) between consecutive nonzero counts.

    For each adjacent pair of indices a < b with positive counts, yields
    (b, (C(b)/C(a)) ** (1/(b-a))); the ratio is exact until the final
    root.  The values approach the growth constant of the family.
    """
    series = count_dyck_series(t_max, descents)
    idx = [t for t, c in enumerate(series) if c > 0]
    out: list[tuple[int, float]] = []
    for a, b in zip(idx, idx[1:]):
        ratio = Fraction(series[b], series[a])
        out.append((b, float(ratio) ** (1.0 / (b - a))))
    return out


def growth_estimate(descents: DescentSet, t_max: int) -> float:
    """Growth-rate estimate from the count series alone.

    The counts carry a polynomial factor next to the exponential, so a
    plain consecutive ratio converges like gamma * (1 - c/t).  Combining
    the last two ratios as (b*r_b - a*r_a) / (b - a) cancels that 1/t
    term and leaves an O(1/t^2) error, which is what makes tight
    tolerances reachable at moderate t.
    """
    ratios = growth_ratio(descents, t_max)
    if len(ratios) < 2:
        raise ValueError(f"need two positive counts up to t={t_max} for E={descents}")
    (a, ra), (b, rb) = ratios[-2], ratios[-1]
    return (b * rb - a * ra) / (b - a)
