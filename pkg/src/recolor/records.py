"""Codecs between run records and descent-constrained Dyck words.

A run record is a sequence with one entry per step: None for an ordinary
coloring step, or CycleConflict(k, ell) when coloring closed a 2-colored
cycle on 2k edges (ell indexes which cycle, see the engine's cycle codec).
Three progressively coarser views exist:

  expanded view   one symbol block per entry: 0 for None, and 0 followed
                  by the 2k-2 mixed-radix digits of ell for a conflict,
                  digits in 1..delta-1 with the low digit first;
  word view       the blocks concatenated (exactly invertible);
  dyck view       every nonzero symbol squashed to 1.

The dyck view of any run prefix is a partial Dyck word when 0 is read as
an up-step and 1 as a down-step, and each conflict contributes one
maximal 1-run (a descent) of even length 2k-2 >= 4.  These structural
facts are what the counting oracle turns into step bounds, so the
checkers here are deliberately strict.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, NamedTuple, Sequence

from .descents import DescentSet


class RecordError(ValueError):
    pass


class CycleConflict(NamedTuple):
    """Conflict entry: cycle on 2k edges, ell-th cycle through the edge."""

    k: int
    ell: int


RecordEntry = CycleConflict | None


# -- mixed-radix cycle index --------------------------------------------


def theta(word: Sequence[int], delta: int) -> int:
    """Fold a label word in {1..delta-1}^(2k-2) into one integer.

    Digits are low-order first: theta(w) = 1 + sum (w_i - 1) (delta-1)^(i-1).
    This is a bijection onto 1..(delta-1)^(2k-2).
    """
    if delta < 2:
        raise RecordError("delta must be at least 2 for label words")
    base = delta - 1
    value = 0
    scale = 1
    for w in word:
        if not 1 <= w <= base:
            raise RecordError(f"label {w} outside 1..{base}")
        value += (w - 1) * scale
        scale *= base
    return value + 1


def theta_inverse(ell: int, k: int, delta: int) -> tuple[int, ...]:
    """Unfold ell back into its 2k-2 labels; exact inverse of theta."""
    if delta < 2:
        raise RecordError("delta must be at least 2 for label words")
    if k < 2:
        raise RecordError(f"conflict arity k={k} below minimum 2")
    base = delta - 1
    width = 2 * k - 2
    if not 1 <= ell <= base**width:
        raise RecordError(f"cycle index {ell} outside 1..{base}^{width}")
    rest = ell - 1
    digits = []
    for _ in range(width):
        rest, d = divmod(rest, base)
        digits.append(d + 1)
    return tuple(digits)


# -- record views -------------------------------------------------------


def expand_entry(entry: RecordEntry, delta: int) -> tuple[int, ...]:
    if entry is None:
        return (0,)
    k, ell = entry
    if k < 3:
        raise RecordError(f"conflict cycle length 2k={2 * k} below minimum 6")
    return (0,) + theta_inverse(ell, k, delta)

def expand_record(record: Iterable[RecordEntry], delta: int) -> list[int]:
    """Concatenated symbol blocks of all entries (the word view)."""
    out: list[int] = []
    for entry in record:
        out.extend(expand_entry(entry, delta))
    return out


def parse_record_word(symbols: Sequence[int], delta: int) -> list[RecordEntry]:
    """Invert expand_record; rejects malformed symbol streams."""
    entries: list[RecordEntry] = []
    i = 0
    total = len(symbols)
    while i < total:
        if symbols[i] != 0:
            raise RecordError(f"symbol block at offset {i} does not start with 0")
        j = i + 1
        while j < total and symbols[j] != 0:
            j += 1
        run = j - i - 1
        if run == 0:
            entries.append(None)
        else:
            if run % 2 != 0 or run < 4:
                raise RecordError(f"digit run of length {run} at offset {i + 1}")
            k = run // 2 + 1
            entries.append(CycleConflict(k, theta(symbols[i + 1 : j], delta)))
        i = j
    return entries


def record_star_view(record: Iterable[RecordEntry], delta: int) -> str:
    """Debug view: one block per entry, blocks joined with '|'."""
    return "|".join(
        "".join(str(s) for s in expand_entry(entry, delta)) for entry in record
    )


def to_dyck(symbols: Iterable[int]) -> str:
    """Squash the word view onto the binary alphabet: 0 stays, rest to 1."""
    return "".join("0" if s == 0 else "1" for s in symbols)


# -- Dyck structure checks ----------------------------------------------


def is_partial_dyck(word: str) -> bool:
    """Every prefix has at least as many 0s as 1s."""
    h = 0
    for ch in word:
        if ch == "0":
            h += 1
        elif ch == "1":
            h -= 1
        else:
            raise RecordError(f"non-binary symbol {ch!r}")
        if h < 0:
            return False
    return True


def descent_lengths(word: str) -> list[int]:
    """Lengths of maximal 1-runs, left to right."""
    runs: list[int] = []
    run = 0
    for ch in word:
        if ch == "1":
            run += 1
        else:
            if run:
                runs.append(run)
            run = 0
    if run:
        runs.append(run)
    return runs


@dataclass(frozen=True)
class DescentVerdict:
    ok: bool
    reason: str | None = None
    offset: int | None = None
    length: int | None = None


def check_descents(word: str, girth_half: int = 1) -> DescentVerdict:
    """Check the structure a run-produced dyck view must have.

    Requires a partial Dyck word whose descents are all even and at least
    max(4, 2 * girth_half) long; girth_half is floor((girth - 1) / 2) of
    the graph the record came from (1 when unknown).
    """
    floor_len = max(4, 2 * girth_half)
    h = 0
    run = 0
    for i, ch in enumerate(word):
        if ch == "0":
            h += 1
            if run:
                if run % 2 != 0:
                    return DescentVerdict(False, "odd descent", i - run, run)
                if run < floor_len:
                    return DescentVerdict(False, "short descent", i - run, run)
            run = 0
        elif ch == "1":
            h -= 1
            run += 1
            if h < 0:
                return DescentVerdict(False, "prefix has more 1s than 0s", i, None)
        else:
            raise RecordError(f"non-binary symbol {ch!r}")
    if run:
        if run % 2 != 0:
            return DescentVerdict(False, "odd descent", len(word) - run, run)
        if run < floor_len:
            return DescentVerdict(False, "short descent", len(word) - run, run)
    return DescentVerdict(True)


def pad_to_full(word: str, descents: DescentSet) -> str:
    """Complete a partial word to a balanced one inside the same family.

    Appends one block 0^(s-1) 1^s per unit of imbalance, where s is the
    smallest member of the descent set besides 1.  The appended blocks
    start with a 0, so existing maximal runs keep their lengths and every
    new descent has length s.
    """
    if not is_partial_dyck(word):
        raise RecordError("not a partial Dyck word")
    imbalance = word.count("0") - word.count("1")
    if imbalance == 0:
        return word
    s = descents.min_excluding_one
    return word + ("0" * (s - 1) + "1" * s) * imbalance
