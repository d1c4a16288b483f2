"""Seeded random graph models: G(n, p), balanced bipartite G(n/2, n/2, p),
and random regular graphs via the pairing model.

Every function accepts either an integer seed or an existing random.Random, so
callers that need many dependent draws (rejection sampling, per-sample seed
splits) can thread one generator through.  Identical seeds give identical
graphs.
"""

from __future__ import annotations

import random
from enum import Enum

from .graphs import Bipartite, Graph, SidePartition


class RandomModel(str, Enum):
    GNP = "gnp"
    REGULAR = "regular"
    BALANCED_BIPARTITE = "balanced-bipartite"


def _rng(seed: int | random.Random) -> random.Random:
    return seed if isinstance(seed, random.Random) else random.Random(seed)


def sample_seed(master: int, index: int) -> int:
    """Counter-based split of a master seed into independent per-sample seeds."""
    return master * 1_000_000_007 + index


def gnp(n: int, p: float, seed: int | random.Random) -> Graph:
    """Erdos-Renyi G(n, p)."""
    if n < 1:
        raise ValueError("gnp needs n >= 1")
    if not 0.0 <= p <= 1.0:
        raise ValueError("gnp needs 0 <= p <= 1")
    rng = _rng(seed)
    edges = [
        (u, v)
        for u in range(n)
        for v in range(u + 1, n)
        if rng.random() < p
    ]
    return Graph(n, edges)


def connected_gnp(
    n: int, p: float, seed: int | random.Random, max_tries: int = 10_000
) -> Graph:
    """G(n, p) conditioned on connectivity by rejection."""
    rng = _rng(seed)
    for _ in range(max_tries):
        g = gnp(n, p, rng)
        if g.is_connected():
            return g
    raise RuntimeError(f"no connected G({n}, {p}) sample within {max_tries} tries")


def balanced_bipartite_gnp(n: int, p: float, seed: int | random.Random) -> Bipartite:
    """Random balanced bipartite graph: each cross pair is an edge with prob p."""
    if n < 2 or n % 2:
        raise ValueError("balanced bipartite model needs even n >= 2")
    if not 0.0 <= p <= 1.0:
        raise ValueError("needs 0 <= p <= 1")
    rng = _rng(seed)
    half = n // 2
    edges = [
        (u, half + v)
        for u in range(half)
        for v in range(half)
        if rng.random() < p
    ]
    g = Graph(n, edges)
    sides = SidePartition(frozenset(range(half)), frozenset(range(half, n)))
    return Bipartite(g, sides)


def random_regular(
    n: int, d: int, seed: int | random.Random, max_tries: int = 5_000
) -> Graph:
    """Random d-regular graph by the pairing model with simple-graph rejection."""
    if n < 1 or d < 0 or d >= n:
        raise ValueError("regular model needs 0 <= d < n")
    if n * d % 2:
        raise ValueError("regular model needs n*d even")
    rng = _rng(seed)
    points = [v for v in range(n) for _ in range(d)]
    for _ in range(max_tries):
        rng.shuffle(points)
        edges = set()
        ok = True
        for k in range(0, len(points), 2):
            u, v = points[k], points[k + 1]
            if u == v:
                ok = False
                break
            key = (u, v) if u < v else (v, u)
            if key in edges:
                ok = False
                break
            edges.add(key)
        if ok:
            return Graph(n, sorted(edges))
    raise RuntimeError(f"no simple {d}-regular pairing on {n} vertices within {max_tries} tries")


def random_graph(model: RandomModel | str, seed: int | random.Random, *, n: int,
                 p: float = 0.5, d: int = 3) -> Graph | Bipartite:
    """Dispatch by model name; parameters beyond n default sensibly."""
    model = RandomModel(model)
    if model is RandomModel.GNP:
        return gnp(n, p, seed)
    if model is RandomModel.BALANCED_BIPARTITE:
        return balanced_bipartite_gnp(n, p, seed)
    return random_regular(n, d, seed)
