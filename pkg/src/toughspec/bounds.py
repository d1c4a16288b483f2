"""Classical spectral-radius upper bounds and the toughness margin of the
(proved) Brouwer conjecture for regular graphs.

Each bound check reports the slack rhs - rho and whether the graph sits in the
bound's exact equality class, which is decided structurally rather than by
floating-point coincidence alone.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from .graphs import Graph, bipartition_of
from .spectra import second_largest_absolute_eigenvalue, spectral_radius
from .toughness import ENUMERATION_CAP, toughness

EQUALITY_SLACK = 1e-7


class Bound(str, Enum):
    HONG = "hong"  # rho <= sqrt(2m - n + 1)
    DEGREE = "degree"  # rho <= (d-1)/2 + sqrt(2m - n*d + (d+1)^2/4), d = min degree
    NOSAL = "nosal"  # rho <= sqrt(m) for bipartite graphs


@dataclass
class BoundReport:
    bound: Bound
    lhs: float  # spectral radius
    rhs: float  # bound value
    slack: float  # rhs - lhs, >= -1e-8 when the hypotheses hold
    equality_case: bool


def _is_star(g: Graph) -> bool:
    if g.n < 2:
        return False
    degs = sorted(g.degrees())
    return degs[-1] == g.n - 1 and all(d == 1 for d in degs[:-1])


def _hong(g: Graph) -> float:
    if g.n > 1 and g.min_degree() < 1:
        raise ValueError("bound requires minimum degree >= 1")
    return math.sqrt(2 * g.m - g.n + 1)


def _degree_refined(g: Graph) -> float:
    d = g.min_degree()
    if d < 1:
        raise ValueError("bound requires minimum degree >= 1")
    return (d - 1) / 2 + math.sqrt(2 * g.m - g.n * d + (d + 1) ** 2 / 4)


def _nosal_equality(g: Graph) -> bool:
    # complete bipartite plus isolated vertices (edgeless counts degenerately)
    if g.m == 0:
        return True
    covered = [v for v in range(g.n) if g.degree(v) > 0]
    h = g.induced(covered)
    if not h.is_connected():
        return False
    sides = bipartition_of(h)
    return sides is not None and h.m == len(sides.x) * len(sides.y)


def check_bound(g: Graph, bound: Bound | str, tol: float = 1e-10) -> BoundReport:
    """Evaluate one spectral upper bound on g and report slack and equality."""
    bound = Bound(bound)
    if g.n < 1:
        raise ValueError("bound check needs at least one vertex")
    if bound is Bound.HONG:
        rhs = _hong(g)
        structural = _is_star(g) or g.is_complete()
    elif bound is Bound.DEGREE:
        rhs = _degree_refined(g)
        degs = set(g.degrees())
        structural = len(degs) == 1 or degs == {g.min_degree(), g.n - 1}
    else:
        if bipartition_of(g) is None:
            raise ValueError("bound applies to bipartite graphs only")
        rhs = math.sqrt(g.m)
        structural = _nosal_equality(g)
    lhs = spectral_radius(g, tol=tol).radius
    slack = rhs - lhs
    return BoundReport(bound, lhs, rhs, slack, slack <= EQUALITY_SLACK and structural)


@dataclass
class BrouwerReport:
    """Toughness margin t - (d / lambda - 1) for a connected regular graph."""

    t: Fraction
    d: int
    lam: float
    margin: float


def brouwer_margin(
    g: Graph, cap: int = ENUMERATION_CAP, tol: float = 1e-10
) -> BrouwerReport:
    """Margin of the toughness-vs-eigenvalue inequality t > d/lambda - 1.

    The toughness term is exact (enumeration); lambda is the second largest
    absolute eigenvalue from the dense solver.  Complete graphs are excluded
    since their toughness is INFINITE.
    """
    if not g.is_connected():
        raise ValueError("margin needs a connected graph")
    degs = set(g.degrees())
    if len(degs) != 1:
        raise ValueError("margin is defined for regular graphs")
    if g.is_complete():
        raise ValueError("complete graphs have infinite toughness; margin undefined")
    d = g.degrees()[0]
    t, _ = toughness(g, cap=cap)
    lam = second_largest_absolute_eigenvalue(g)
    if lam <= tol:
        raise ValueError("second eigenvalue vanishes; margin undefined")
    return BrouwerReport(t, d, lam, float(t) - (d / lam - 1.0))
