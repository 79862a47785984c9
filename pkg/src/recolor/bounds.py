"""Growth constants and palette sizes from the characteristic equation.

For a descent set E with series phi_E(x) = 1 + sum_{i in E} x^i, the
relevant constant is gamma = phi_E(tau)/tau where tau is the unique root
of phi_E(x) - x phi_E'(x) in (0, R) and R is the convergence radius.
gamma bounds the per-step growth of the record families counted in the
dyck module, and the palette sizes below are ceilings of gamma times a
degree term.  For the even progressions E = {2k, 2k+2, ...} the equation
clears to the polynomial

    (2k-3) x^(2k+2) + (1-2k) x^(2k) + x^4 - 2 x^2 + 1

which is positive at 0 and negative at 1, so bisection on (0, 1) finds
tau directly and without pole trouble.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Sequence

from .descents import DescentSet


class InadmissibleDescentSetError(ValueError):
    """The characteristic equation has no root below the radius."""


@dataclass(frozen=True)
class CharacteristicSolution:
    descents: DescentSet
    tau: float
    gamma: float
    residual: float


def _ceil_eps(x: float, eps: float = 1e-9) -> int:
    """Ceiling that forgives float noise just below an integer."""
    return math.ceil(x - eps)


def characteristic_polynomial_2n2k(k: int) -> Callable[[float], float]:
    """Pole-free form of the characteristic function for E = 2N+2k."""
    if k < 1:
        raise ValueError("k must be >= 1")

    def p(x: float) -> float:
        x2 = x * x
        return (2 * k - 3) * x2 ** (k + 1) + (1 - 2 * k) * x2**k + x2 * x2 - 2 * x2 + 1

    return p


def _bisect(fn: Callable[[float], float], lo: float, hi: float) -> float:
    """Sign-change bisection refined to machine precision."""
    flo = fn(lo)
    if flo == 0.0:
        return lo
    for _ in range(120):
        mid = 0.5 * (lo + hi)
        if mid == lo or mid == hi:
            break
        fmid = fn(mid)
        if fmid == 0.0:
            return mid
        if (fmid > 0) == (flo > 0):
            lo, flo = mid, fmid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def solve_characteristic(descents: DescentSet) -> CharacteristicSolution:
    """Root tau and growth constant gamma for a descent set.

    gamma is evaluated both as phi(tau)/tau and as phi'(tau); the two
    must agree to 1e-10, and values within 1e-11 of an integer snap to
    it (several families have exactly integral gamma and downstream
    ceilings must not wobble around it).
    """
    k = descents.as_2n2k()
    if k is not None and k >= 1:
        fn = characteristic_polynomial_2n2k(k)
        tau = _bisect(fn, 1e-12, 1.0 - 1e-12)
    else:
        fn = lambda x: descents.phi(x) - x * descents.dphi(x)
        hi_cap = 1.0 - 1e-9 if not descents.is_finite else None
        tau = None
        lo = 1e-9
        flo = fn(lo)
        if hi_cap is not None:
            grid = [lo + (hi_cap - lo) * i / 4096 for i in range(1, 4097)]
        else:
            grid = [lo * (1.02**i) for i in range(1, 2400)]
        prev_x, prev_f = lo, flo
        for x in grid:
            fx = fn(x)
            if fx == 0.0 or (fx > 0) != (prev_f > 0):
                tau = _bisect(fn, prev_x, x)
                break
            prev_x, prev_f = x, fx
        if tau is None:
            raise InadmissibleDescentSetError(
                f"no characteristic root below the radius for E = {descents}"
            )
    phi_t = descents.phi(tau)
    dphi_t = descents.dphi(tau)
    g1 = phi_t / tau
    g2 = dphi_t
    if abs(g1 - g2) > 1e-10 * max(1.0, abs(g1)):
        raise ArithmeticError(
            f"gamma cross-check failed for E = {descents}: {g1!r} vs {g2!r}"
        )
    gamma = g1
    snapped = round(gamma)
    if abs(gamma - snapped) < 1e-11:
        gamma = float(snapped)
    residual = abs(phi_t - tau * dphi_t)
    return CharacteristicSolution(descents, tau, gamma, residual)


# -- palette sizes ------------------------------------------------------


_GIRTH_HALF_CAP = 109  # largest tabulated regime; gamma is within 1e-2 of 1 there


def descent_set_for_girth(girth: float) -> tuple[DescentSet, int]:
    """Descent family governing cycle conflicts at a given girth.

    A graph of girth g has no 2-colored cycle shorter than 2k edges with
    k = max(2, floor((g - 1) / 2)), so conflicts shed descents in the
    even progression starting at 2k.  Infinite girth is capped at the
    largest solved regime (the bound is then within one color of its
    limit).
    """
    if girth != math.inf and girth < 3:
        raise ValueError("girth must be >= 3 or infinite")
    half = _GIRTH_HALF_CAP if girth == math.inf else int((girth - 1) // 2)
    k = max(2, min(half, _GIRTH_HALF_CAP))
    return DescentSet.progression(2 * k, 2), k


def acyclic_color_bound(delta: int, girth: float) -> tuple[float, int]:
    """(gamma, palette size) for acyclic edge coloring at this girth.

    The palette is ceil((2 + gamma) (delta - 1)); at girth up to 6 the
    constant is exactly 2 and the palette is 4 delta - 4.
    """
    if delta < 1:
        raise ValueError("delta must be >= 1")
    descents, _ = descent_set_for_girth(girth)
    gamma = solve_characteristic(descents).gamma
    if delta == 1:
        return gamma, 1
    return gamma, _ceil_eps((2.0 + gamma) * (delta - 1))


def star_color_bound(delta: int, k: int) -> int:
    """Palette size for star coloring with 2k-vertex paths forbidden.

    ceil(C * k^(1/(2k-2)) * delta^((2k-1)/(2k-2))) + delta, where C is
    the growth constant l(l-1)^(1/l - 1) of unrestricted-descent words
    at l = 2k - 2; for k = 2 this is ceil(2 sqrt(2) delta^1.5) + delta.
    """
    if delta < 1:
        raise ValueError("delta must be >= 1")
    if k < 2:
        raise ValueError("k must be >= 2")
    ell = 2 * k - 2
    growth = ell * (ell - 1) ** (1.0 / ell - 1.0) if ell > 1 else 1.0
    main = growth * k ** (1.0 / ell) * delta ** ((2 * k - 1) / ell)
    return _ceil_eps(main) + delta


# -- generic framework over configuration families ----------------------


@dataclass(frozen=True)
class ConfigurationFamily:
    """Forbidden-configuration bookkeeping for the generic bound.

    Each finite entry is (l, d) where removing one configuration of that
    kind uncolors l items and at most d(delta) configurations contain a
    given item.  An optional progression tail (start, step, d) describes
    an infinite family of entry sizes with a common count function.
    """

    name: str
    finite_entries: tuple[tuple[int, Callable[[int], float]], ...] = ()
    tail: tuple[int, int, Callable[[int, int], float]] | None = None

    def descent_set(self) -> DescentSet:
        fin = frozenset(l for l, _ in self.finite_entries)
        if self.tail is None:
            return DescentSet(finite=fin)
        start, step, _ = self.tail
        return DescentSet(finite=fin, prog_start=start, prog_step=step)


@dataclass(frozen=True)
class FrameworkBound:
    family: str
    gamma: float
    sup_term: float
    colors: float


def framework_bound(family: ConfigurationFamily, delta: int) -> FrameworkBound:
    """gamma(E) * sup over entries of d_l(delta)^(1/l).

    The tail is scanned far enough past l = e * delta to cover the
    maximizer of typical count functions (they grow at most like
    (c delta)^l, whose l-th root peaks near l = e * delta).
    """
    if delta < 1:
        raise ValueError("delta must be >= 1")
    sol = solve_characteristic(family.descent_set())

    def root(d, ell: int) -> float:
        # Counts can be huge integers; take the l-th root in log space.
        if d <= 0:
            return 0.0
        return math.exp(math.log(d) / ell)

    best = 0.0
    for ell, d_fn in family.finite_entries:
        best = max(best, root(d_fn(delta), ell))
    if family.tail is not None:
        start, step, d_fn = family.tail
        horizon = max(64, 4 * int(math.e * delta) + 8)
        for ell in range(start, horizon + 1, step):
            best = max(best, root(d_fn(ell, delta), ell))
    return FrameworkBound(family.name, sol.gamma, best, sol.gamma * best)


def star_coloring_family() -> ConfigurationFamily:
    """Two-coloring obstructions for star vertex coloring.

    Repairing a same-colored neighbor pair uncolors 1 vertex (at most
    delta such pairs per vertex); repairing a 2-colored 4-vertex path
    uncolors 2 of its vertices (at most 2 delta^3 such paths per vertex).
    """
    return ConfigurationFamily(
        name="star",
        finite_entries=(
            (1, lambda d: d),
            (2, lambda d: 2 * d**3),
        ),
    )


def nonrepetitive_coloring_family() -> ConfigurationFamily:
    """Repetitively colored even paths: a block of l vertices is uncolored
    when some 2l-path repeats its color sequence; at most l delta^(2l-1)
    such paths touch a vertex."""
    return ConfigurationFamily(
        name="nonrepetitive",
        tail=(1, 1, lambda ell, d: ell * d ** (2 * ell - 1)),
    )


def acyclic_edge_coloring_family() -> ConfigurationFamily:
    """Cycle obstructions for acyclic edge coloring in framework form:
    adjacent same-color repairs free 1 edge (2 delta candidates) and
    2-colored cycles free an even number 2j of edges (delta^(2j) walks)."""
    return ConfigurationFamily(
        name="acyclic",
        finite_entries=((1, lambda d: 2 * d),),
        tail=(2, 2, lambda ell, d: d**ell),
    )


# -- step-count expectations --------------------------------------------


def expected_steps_t0(m: int, delta: int) -> float:
    """Pivot step count before the completion probability takes over."""
    if m < 1 or delta < 1:
        raise ValueError("m and delta must be >= 1")
    return m * math.log(32 * delta) / math.log1p(1.0 / (2 * delta))


def expected_steps_bound(m: int, delta: int) -> float:
    """Upper bound on the expected number of coloring steps when the
    palette has one color of slack over 4 delta - 4."""
    if m < 1 or delta < 1:
        raise ValueError("m and delta must be >= 1")
    return (m * math.log(32 * delta) + 1.0) / math.log1p(1.0 / (2 * delta))
