"""Simple-graph core: immutable graphs, side partitions, and the join operations
used to assemble the extremal families (disjoint union, join, bipartite join).

Vertices are always 0..n-1.  Binary operations relabel deterministically: the
first operand keeps its indices, the second is shifted by the first's order.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, NamedTuple


class Graph:
    """Immutable undirected simple graph on vertices 0..n-1.

    Adjacency is kept both as sorted neighbor tuples (``adj``) and as
    per-vertex bitmasks (``masks``); the masks make component counting during
    cut enumeration cheap.  Instances are value-like: equality and hashing are
    by (n, adjacency).
    """

    __slots__ = ("n", "adj", "masks", "m")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()) -> None:
        if n < 1:
            raise ValueError("graph needs at least one vertex")
        sets: list[set[int]] = [set() for _ in range(n)]
        seen: set[tuple[int, int]] = set()
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            key = (u, v) if u < v else (v, u)
            if key in seen:
                raise ValueError(f"duplicate edge {key}")
            seen.add(key)
            sets[u].add(v)
            sets[v].add(u)
        self.n = n
        self.adj = tuple(tuple(sorted(s)) for s in sets)
        self.masks = tuple(sum(1 << w for w in nbrs) for nbrs in self.adj)
        self.m = len(seen)

    # -- basic accessors ---------------------------------------------------

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def degrees(self) -> tuple[int, ...]:
        return tuple(len(nbrs) for nbrs in self.adj)

    def min_degree(self) -> int:
        return min(self.degrees())

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def edges(self) -> list[tuple[int, int]]:
        """All edges as (u, v) with u < v, sorted lexicographically."""
        return [(u, v) for u in range(self.n) for v in self.adj[u] if u < v]

    def is_complete(self) -> bool:
        return self.m == self.n * (self.n - 1) // 2

    # -- connectivity ------------------------------------------------------

    def components(self) -> list[tuple[int, ...]]:
        """Vertex sets of connected components, ordered by smallest member."""
        remaining = (1 << self.n) - 1
        comps = []
        while remaining:
            comp = remaining & -remaining  # BFS from lowest unvisited vertex
            while True:
                frontier = 0
                work = comp
                while work:
                    bit = work & -work
                    work ^= bit
                    frontier |= self.masks[bit.bit_length() - 1]
                grown = comp | (frontier & remaining)
                if grown == comp:
                    break
                comp = grown
            comps.append(tuple(v for v in range(self.n) if comp >> v & 1))
            remaining &= ~comp
        return comps

    def is_connected(self) -> bool:
        return len(self.components()) == 1

    # -- derived graphs ----------------------------------------------------

    def induced(self, vertices: Iterable[int]) -> Graph:
        """Induced subgraph, relabeled onto 0..k-1 in ascending vertex order."""
        keep = sorted(set(vertices))
        if not keep:
            raise ValueError("induced subgraph needs at least one vertex")
        index = {v: i for i, v in enumerate(keep)}
        edges = [
            (index[u], index[v])
            for u, v in self.edges()
            if u in index and v in index
        ]
        return Graph(len(keep), edges)

    def with_edges(self, extra: Iterable[tuple[int, int]]) -> Graph:
        """Copy with the given edges added; rejects edges already present."""
        new = set(self.edges())
        for u, v in extra:
            key = (u, v) if u < v else (v, u)
            if key in new:
                raise ValueError(f"edge {key} already present")
            new.add(key)
        return Graph(self.n, sorted(new))

    def without_edges(self, gone: Iterable[tuple[int, int]]) -> Graph:
        """Copy with the given edges removed; rejects edges not present."""
        have = set(self.edges())
        drop = set()
        for u, v in gone:
            key = (u, v) if u < v else (v, u)
            if key not in have:
                raise ValueError(f"edge {key} not present")
            drop.add(key)
        return Graph(self.n, sorted(have - drop))

    # -- value semantics ---------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        return hash((self.n, self.adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


@dataclass(frozen=True)
class SidePartition:
    """Two-coloring of a bipartite graph's vertex set into sides X and Y."""

    x: frozenset[int]
    y: frozenset[int]

    def validate_for(self, g: Graph) -> None:
        if self.x & self.y:
            raise ValueError("sides are not disjoint")
        if self.x | self.y != frozenset(range(g.n)):
            raise ValueError("sides do not cover the vertex set")
        for u, v in g.edges():
            if (u in self.x) == (v in self.x):
                raise ValueError(f"edge ({u}, {v}) does not cross the sides")

    def is_balanced(self) -> bool:
        return len(self.x) == len(self.y)

    def side_of(self, v: int) -> str:
        return "X" if v in self.x else "Y"


class Bipartite(NamedTuple):
    """A graph together with a side partition witnessing bipartiteness."""

    graph: Graph
    sides: SidePartition


# ---------------------------------------------------------------------------
# named constructions
# ---------------------------------------------------------------------------


def complete(n: int) -> Graph:
    """Complete graph on n >= 1 vertices."""
    if n < 1:
        raise ValueError("complete graph needs n >= 1")
    return Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def empty(n: int) -> Graph:
    """Edgeless graph on n >= 1 vertices."""
    if n < 1:
        raise ValueError("empty graph needs n >= 1")
    return Graph(n)


def complete_bipartite(p: int, q: int) -> Bipartite:
    """K_{p,q} with side X = 0..p-1 and side Y = p..p+q-1."""
    if p < 1 or q < 1:
        raise ValueError("complete bipartite graph needs p, q >= 1")
    g = Graph(p + q, [(u, p + v) for u in range(p) for v in range(q)])
    return Bipartite(g, SidePartition(frozenset(range(p)), frozenset(range(p, p + q))))


def empty_bipartite(a: int, b: int) -> Bipartite:
    """Edgeless graph on a + b >= 1 vertices with declared sides (a may be 0)."""
    if a < 0 or b < 0 or a + b < 1:
        raise ValueError("empty bipartite graph needs a, b >= 0 with a + b >= 1")
    g = Graph(a + b)
    return Bipartite(g, SidePartition(frozenset(range(a)), frozenset(range(a, a + b))))


def disjoint_union(parts: Iterable[Graph]) -> Graph:
    """Disjoint union; part k is shifted by the total order of parts before it."""
    parts = list(parts)
    if not parts:
        raise ValueError("disjoint union needs at least one part")
    edges: list[tuple[int, int]] = []
    offset = 0
    for g in parts:
        edges.extend((u + offset, v + offset) for u, v in g.edges())
        offset += g.n
    return Graph(offset, edges)

def join(g1: Graph, g2: Graph) -> Graph:
    """Join: disjoint union plus every edge between the two vertex sets."""
    edges = list(g1.edges())
    edges.extend((u + g1.n, v + g1.n) for u, v in g2.edges())
    edges.extend((u, v + g1.n) for u in range(g1.n) for v in range(g2.n))
    return Graph(g1.n + g2.n, edges)


def bipartite_join(b1: Bipartite, b2: Bipartite) -> Bipartite:
    """Bipartite join: adds all X1-Y2 and X2-Y1 edges, keeping sides bipartite.

    Unlike the plain join this never creates an edge inside a side, so the
    result is again bipartite with X = X1 u X2 and Y = Y1 u Y2.
    """
    g1, s1 = b1
    g2, s2 = b2
    s1.validate_for(g1)
    s2.validate_for(g2)
    off = g1.n
    edges = list(g1.edges())
    edges.extend((u + off, v + off) for u, v in g2.edges())
    edges.extend((u, v + off) for u in s1.x for v in s2.y)
    edges.extend((u + off, v) for u in s2.x for v in s1.y)
    sides = SidePartition(
        s1.x | frozenset(u + off for u in s2.x),
        s1.y | frozenset(v + off for v in s2.y),
    )
    return Bipartite(Graph(off + g2.n, edges), sides)


def cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycle needs n >= 3")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def path(n: int) -> Graph:
    if n < 1:
        raise ValueError("path needs n >= 1")
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def petersen() -> Graph:
    """The Petersen graph: outer 5-cycle 0..4, inner pentagram 5..9."""
    edges = [(i, (i + 1) % 5) for i in range(5)]
    edges += [(i, 5 + i) for i in range(5)]
    edges += [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph(10, edges)


def bipartition_of(g: Graph) -> SidePartition | None:
    """Two-color g by BFS, or return None if some component has an odd cycle.

    Deterministic: components are explored from their smallest vertex, which
    is always colored into side X.
    """
    color: dict[int, int] = {}
    for comp in g.components():
        root = comp[0]
        color[root] = 0
        queue = [root]
        while queue:
            u = queue.pop()
            for w in g.adj[u]:
                if w not in color:
                    color[w] = 1 - color[u]
                    queue.append(w)
                elif color[w] == color[u]:
                    return None
    return SidePartition(
        frozenset(v for v in range(g.n) if color.get(v) == 0),
        frozenset(v for v in range(g.n) if color.get(v) == 1),
    )
