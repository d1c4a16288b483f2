"""Exact graph toughness by exhaustive cut enumeration.

Four quantities share one scan: classical toughness min |S| / c(G-S), the
variation with denominator c(G-S) - 1, and their bipartite one-sided versions
where S may only be drawn from a single side of the bipartition.  Values are
exact rationals; complete graphs (and bipartite graphs no one-sided proper
subset disconnects) get the distinguished INFINITE value, which compares
greater than every finite ratio.

Enumeration visits cuts by increasing size and lexicographically within a
size, and the reported witness is always the first minimizer in that order,
so results are deterministic.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from itertools import combinations
from typing import Iterable

from .graphs import Graph, SidePartition

INFINITE = math.inf  # sentinel: no disconnecting cut exists
ENUMERATION_CAP = 22  # full scans are 2^n; anything larger is refused


class ToughnessKind(Enum):
    TOUGHNESS = "toughness"  # denominator c(G-S)
    VARIATION = "variation"  # denominator c(G-S) - 1


@dataclass(frozen=True)
class CutWitness:
    """A disconnecting vertex cut with its component count and ratio.

    ``ratio`` equals Fraction(|cut|, components - shift) for the quantity the
    witness belongs to; ``side`` is "X" or "Y" for one-sided bipartite cuts.
    """

    cut: frozenset[int]
    components: int
    ratio: Fraction
    side: str | None = None


def components_after_deletion(g: Graph, cut: Iterable[int]) -> int:
    """Number of connected components of G - cut."""
    removed = frozenset(cut)
    for v in removed:
        if not 0 <= v < g.n:
            raise ValueError(f"cut vertex {v} out of range")
    if len(removed) == g.n:
        raise ValueError("cut must not delete every vertex")
    mask = 0
    for v in removed:
        mask |= 1 << v
    return _component_count(g.masks, (1 << g.n) - 1 & ~mask)


def _component_count(masks, remaining: int) -> int:
    count = 0
    while remaining:
        comp = remaining & -remaining
        while True:
            frontier = 0
            work = comp
            while work:
                bit = work & -work
                work ^= bit
                frontier |= masks[bit.bit_length() - 1]
            grown = comp | (frontier & remaining)
            if grown == comp:
                break
            comp = grown
        remaining &= ~comp
        count += 1
    return count


def _scan_min(g, universe, max_size, shift, divisible_only=False):
    """Minimum cut ratio over subsets of ``universe`` up to ``max_size``.

    Returns (best ratio or INFINITE, (cut tuple, components) or None).  Sizes
    are pruned once even the best case (all remaining vertices isolated)
    cannot beat the current minimum; within the scanned range the first
    strict minimizer is kept.
    """
    n = g.n
    masks = g.masks
    full = (1 << n) - 1
    best = INFINITE
    witness = None
    for size in range(1, max_size + 1):
        if best is not INFINITE and Fraction(size, n - size - shift) >= best:
            break
        for combo in combinations(universe, size):
            cut_mask = 0
            for v in combo:
                cut_mask |= 1 << v
            c = _component_count(masks, full & ~cut_mask)
            if c < 2:
                continue
            if divisible_only:
                d = c - shift
                if size % d != 0 and d % size != 0:
                    continue
            ratio = Fraction(size, c - shift)
            if ratio < best:
                best = ratio
                witness = (combo, c)
    return best, witness


def _check_cap(size: int, cap: int) -> None:
    if size > cap:
        raise ValueError(
            f"cut enumeration over {size} vertices exceeds cap {cap}; "
            "raise cap explicitly if you really want 2^n subsets"
        )


def _require_connected(g: Graph) -> None:
    if not g.is_connected():
        raise ValueError("toughness is defined for connected graphs only")


def toughness(
    g: Graph, cap: int = ENUMERATION_CAP
) -> tuple[Fraction | float, CutWitness | None]:
    """Classical toughness min |S| / c(G-S); INFINITE for complete graphs."""
    _require_connected(g)
    _check_cap(g.n, cap)
    if g.is_complete():
        return INFINITE, None
    best, raw = _scan_min(g, range(g.n), g.n - 2, shift=0)
    combo, c = raw
    return best, CutWitness(frozenset(combo), c, best)


def variation_toughness(
    g: Graph, cap: int = ENUMERATION_CAP, divisible_only: bool = False
) -> tuple[Fraction | float, CutWitness | None]:
    """Variation toughness min |S| / (c(G-S) - 1); INFINITE for complete graphs.

    ``divisible_only`` restricts the scan to cuts where |S| and c(G-S) - 1
    divide one another; it is off by default and exists only for exploring
    that restricted notion.
    """
    _require_connected(g)
    _check_cap(g.n, cap)
    if g.is_complete():
        return INFINITE, None
    best, raw = _scan_min(g, range(g.n), g.n - 2, shift=1, divisible_only=divisible_only)
    if raw is None:
        return INFINITE, None
    combo, c = raw
    return best, CutWitness(frozenset(combo), c, best)


def is_tau_tough(
    g: Graph, tau: Fraction | int, cap: int = ENUMERATION_CAP
) -> tuple[bool, CutWitness | None]:
    """Whether every disconnecting cut satisfies |S| >= tau * (c(G-S) - 1).

    On failure the witness is the first violating cut in enumeration order,
    which need not be the global minimizer; the verdict is what matters and
    stopping early keeps dense graphs affordable.
    """
    _require_connected(g)
    _check_cap(g.n, cap)
    tau = Fraction(tau)
    if g.is_complete():
        return True, None
    n = g.n
    full = (1 << n) - 1
    for size in range(1, n - 1):
        if Fraction(size, n - size - 1) >= tau:
            break  # even c = n - size components cannot violate tau
        for combo in combinations(range(n), size):
            cut_mask = 0
            for v in combo:
                cut_mask |= 1 << v
            c = _component_count(g.masks, full & ~cut_mask)
            if c < 2:
                continue
            ratio = Fraction(size, c - 1)
            if ratio < tau:
                return False, CutWitness(frozenset(combo), c, ratio)
    return True, None


def bipartite_toughness(
    g: Graph,
    sides: SidePartition,
    kind: ToughnessKind = ToughnessKind.VARIATION,
    cap: int = ENUMERATION_CAP,
) -> tuple[Fraction | float, CutWitness | None]:
    """One-sided toughness: cuts range over proper subsets of a single side.

    Both sides are scanned (side X first) and the overall minimum wins; the
    witness records which side its cut came from.  The VARIATION kind uses
    denominator c(G-S) - 1 and requires a balanced bipartition.
    """
    _require_connected(g)
    sides.validate_for(g)
    kind = ToughnessKind(kind)
    shift = 1 if kind is ToughnessKind.VARIATION else 0
    if kind is ToughnessKind.VARIATION and not sides.is_balanced():
        raise ValueError("one-sided variation toughness requires a balanced bipartition")
    _check_cap(max(len(sides.x), len(sides.y)), cap)
    best = INFINITE
    witness = None
    for label, side in (("X", sides.x), ("Y", sides.y)):
        universe = sorted(side)
        if len(universe) < 2:
            continue  # no nonempty proper subset can exist
        found, raw = _scan_min(g, universe, len(universe) - 1, shift)
        if found < best:
            combo, c = raw
            best = found
            witness = CutWitness(frozenset(combo), c, found, side=label)
    return best, witness
