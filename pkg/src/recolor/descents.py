"""Descent-length sets: finite sets, arithmetic progressions, and unions.

A descent set E collects the allowed lengths of maximal 1-runs in the
Dyck words this package counts.  E doubles as the allowed out-degree set
(besides 0) for the plane trees those words map to, and as the support
of the series phi_E(x) = 1 + sum_{i in E} x^i used by the growth-rate
solver.  Members are >= 1 and E = {1} alone is rejected: with only unit
descents every word is admissible and the machinery degenerates.

Notation: "{2,5}" finite, "2N+4" the progression 4,6,8,..., "N+1" all
integers >= 1, and unions like "{1}U2N+2" (the connector may be 'U', 'u'
or the union sign).
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field


class DescentSetError(ValueError):
    pass


@dataclass(frozen=True)
class DescentSet:
    """Finite part plus at most one arithmetic progression start/step."""

    finite: frozenset[int] = frozenset()
    prog_start: int | None = None
    prog_step: int | None = None

    def __post_init__(self):
        if (self.prog_start is None) != (self.prog_step is None):
            raise DescentSetError("progression needs both start and step")
        if self.prog_start is not None:
            if self.prog_start < 1 or self.prog_step < 1:
                raise DescentSetError("progression start and step must be >= 1")
        fin = frozenset(int(x) for x in self.finite)
        if any(x < 1 for x in fin):
            raise DescentSetError("descent lengths must be >= 1")
        if self.prog_start is not None:
            fin = frozenset(x for x in fin if not self._in_progression(x))
        object.__setattr__(self, "finite", fin)
        if not fin and self.prog_start is None:
            raise DescentSetError("descent set must be nonempty")
        if self.prog_start is None and fin == frozenset({1}):
            raise DescentSetError("descent set {1} is degenerate")

    # -- constructors ---------------------------------------------------

    @classmethod
    def of(cls, *members: int) -> "DescentSet":
        return cls(finite=frozenset(members))

    @classmethod
    def progression(cls, start: int, step: int) -> "DescentSet":
        return cls(prog_start=start, prog_step=step)

    @classmethod
    def parse(cls, text: str) -> "DescentSet":
        """Parse the CLI notation described in the module docstring."""
        parts = [p.strip() for p in re.split(r"[Uu∪]", text) if p.strip()]
        finite: set[int] = set()
        prog: tuple[int, int] | None = None
        if not parts:
            raise DescentSetError(f"empty descent set notation {text!r}")
        for part in parts:
            m = re.fullmatch(r"\{\s*(\d+(?:\s*,\s*\d+)*)\s*\}", part)
            if m:
                finite.update(int(tok) for tok in m.group(1).split(","))
                continue
            m = re.fullmatch(r"(\d*)N\s*\+\s*(\d+)", part)
            if m:
                if prog is not None:
                    raise DescentSetError("at most one progression per set")
                step = int(m.group(1)) if m.group(1) else 1
                prog = (int(m.group(2)), step)
                continue
            raise DescentSetError(f"cannot parse descent set part {part!r}")
        if prog is None:
            return cls(finite=frozenset(finite))
        return cls(finite=frozenset(finite), prog_start=prog[0], prog_step=prog[1])

    # -- membership and views -------------------------------------------

    def _in_progression(self, x: int) -> bool:
        return (
            self.prog_start is not None
            and x >= self.prog_start
            and (x - self.prog_start) % self.prog_step == 0
        )

    def __contains__(self, x: int) -> bool:
        return x in self.finite or self._in_progression(x)

    def members_upto(self, limit: int) -> list[int]:
        out = {x for x in self.finite if x <= limit}
        if self.prog_start is not None:
            out.update(range(self.prog_start, limit + 1, self.prog_step))
        return sorted(out)

    @property
    def min_member(self) -> int:
        low = min(self.finite) if self.finite else None
        if self.prog_start is not None:
            low = self.prog_start if low is None else min(low, self.prog_start)
        return low

    @property
    def min_excluding_one(self) -> int:
        """Smallest member other than 1 (the padding block size)."""
        cands = [x for x in self.finite if x != 1]
        if self.prog_start is not None:
            p = self.prog_start if self.prog_start != 1 else self.prog_start + self.prog_step
            cands.append(p)
        if not cands:
            raise DescentSetError("descent set has no member besides 1")
        return min(cands)

    @property
    def is_finite(self) -> bool:
        return self.prog_start is None

    def as_2n2k(self) -> int | None:
        """k when the set is exactly the even progression 2k, 2k+2, ..."""
        if not self.finite and self.prog_step == 2 and self.prog_start % 2 == 0:
            return self.prog_start // 2
        return None

    # -- series phi_E(x) = 1 + sum_{i in E} x^i -------------------------

    @property
    def radius(self) -> float:
        return float("inf") if self.is_finite else 1.0

    def phi(self, x: float) -> float:
        total = 1.0 + sum(x**i for i in self.finite)
        if self.prog_start is not None:
            total += x**self.prog_start / (1.0 - x**self.prog_step)
        return total

    def dphi(self, x: float) -> float:
        total = sum(i * x ** (i - 1) for i in self.finite)
        if self.prog_start is not None:
            a, d = self.prog_start, self.prog_step
            den = 1.0 - x**d
            total += (a * x ** (a - 1) * den + d * x ** (d - 1) * x**a) / (den * den)
        return total

    def __str__(self) -> str:
        parts = []
        if self.finite:
            parts.append("{" + ",".join(str(x) for x in sorted(self.finite)) + "}")
        if self.prog_start is not None:
            head = "N" if self.prog_step == 1 else f"{self.prog_step}N"
            parts.append(f"{head}+{self.prog_start}")
        return "∪".join(parts)
