"""Immutable simple graphs over dense integer vertex ids.

Vertex sets are plain Python ints used as bit masks: bit ``v`` is set when
vertex ``v`` is a member.  Python ints grow as needed, so the same
representation serves small and large graphs alike.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator


class GraphError(ValueError):
    """Raised for malformed graphs or out-of-range vertex sets."""


def bits(mask: int) -> Iterator[int]:
    """Yield the members of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def members(mask: int) -> list[int]:
    return list(bits(mask))


def to_mask(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        if v < 0:
            raise GraphError(f"negative vertex id {v}")
        m |= 1 << v
    return m


def popcount(mask: int) -> int:
    return bin(mask).count("1")


def lowest(mask: int) -> int:
    """Smallest member of a non-empty mask."""
    return (mask & -mask).bit_length() - 1


@dataclass(frozen=True, eq=True)
class Graph:
    """A finite simple undirected graph on vertices ``0..n-1``.

    ``adj[v]`` is the neighbor mask of ``v``.  Use :meth:`from_edges` or
    one of the named constructors rather than building ``adj`` by hand;
    the constructor only validates.
    """

    n: int
    adj: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.n < 0 or len(self.adj) != self.n:
            raise GraphError("adjacency length must equal n")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.adj):
            if row & ~full:
                raise GraphError(f"vertex {v} has a neighbor outside 0..{self.n - 1}")
            if row >> v & 1:
                raise GraphError(f"self-loop at {v}")
            for u in bits(row):
                if not self.adj[u] >> v & 1:
                    raise GraphError(f"asymmetric adjacency between {v} and {u}")

    # -- construction -------------------------------------------------

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> Graph:
        rows = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise GraphError(f"self-loop at {u}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, tuple(rows))

    @classmethod
    def empty(cls, n: int) -> Graph:
        return cls(n, (0,) * n)

    @classmethod
    def complete(cls, n: int) -> Graph:
        full = (1 << n) - 1
        return cls(n, tuple(full & ~(1 << v) for v in range(n)))

    @classmethod
    def path(cls, n: int) -> Graph:
        return cls.from_edges(n, ((i, i + 1) for i in range(n - 1)))

    @classmethod
    def cycle(cls, n: int) -> Graph:
        if n < 3:
            raise GraphError("a cycle needs at least 3 vertices")
        return cls.from_edges(n, ((i, (i + 1) % n) for i in range(n)))

    @classmethod
    def complete_bipartite(cls, p: int, q: int) -> Graph:
        return cls.from_edges(p + q, ((i, p + j) for i in range(p) for j in range(q)))

    # -- basic queries ------------------------------------------------

    @property
    def vertex_mask(self) -> int:
        return (1 << self.n) - 1

    @cached_property
    def num_edges(self) -> int:
        return sum(popcount(r) for r in self.adj) // 2

    def edges(self) -> list[tuple[int, int]]:
        """Edges as ``(u, v)`` with ``u < v``, sorted."""
        return [(u, v) for u in range(self.n) for v in bits(self.adj[u] >> (u + 1) << (u + 1))]

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def degree(self, v: int, within: int | None = None) -> int:
        self._check_vertex(v)
        row = self.adj[v]
        return popcount(row if within is None else row & within)

    def min_degree(self, within: int | None = None) -> tuple[int, int]:
        """``(vertex, degree)`` of minimum degree, smallest id on ties.

        With ``within`` the degrees are those of the induced subgraph.
        """
        scope = self.vertex_mask if within is None else within
        if not scope:
            raise GraphError("minimum degree of the null graph is undefined")
        best = None
        for v in bits(scope):
            d = popcount(self.adj[v] & scope)
            if best is None or d < best[1]:
                best = (v, d)
        return best

    def _check_vertex(self, v: int) -> None:
        if not 0 <= v < self.n:
            raise GraphError(f"vertex {v} out of range for n={self.n}")

    def _check_set(self, s: int) -> None:
        if s < 0 or s >> self.n:
            raise GraphError(f"vertex set {members(s) if s >= 0 else s} not within 0..{self.n - 1}")

    # -- neighborhood vocabulary -------------------------------------

    def neighborhood(self, s: int) -> int:
        """Vertices outside ``s`` with a neighbor in ``s``."""
        self._check_set(s)
        out = 0
        for v in bits(s):
            out |= self.adj[v]
        return out & ~s

    def closed_neighborhood(self, s: int) -> int:
        return s | self.neighborhood(s)

    def frontier(self, s: int) -> int:
        """Vertices of ``s`` with a neighbor outside ``s``."""
        self._check_set(s)
        outside = self.vertex_mask & ~s
        return sum(1 << v for v in bits(s) if self.adj[v] & outside)

    def is_clique(self, s: int) -> bool:
        for v in bits(s):
            if (s & ~(1 << v)) & ~self.adj[v]:
                return False
        return True

    def is_stable(self, s: int) -> bool:
        return all(not (self.adj[v] & s) for v in bits(s))

    def is_simplicial(self, v: int) -> bool:
        return self.is_clique(self.adj[v])

    # -- structure ----------------------------------------------------

    def induced_subgraph(self, s: int) -> tuple[Graph, list[int]]:
        """``G[s]`` relabelled to ``0..|s|-1`` plus the new-id -> old-id list."""
        self._check_set(s)
        old = members(s)
        index = {v: i for i, v in enumerate(old)}
        rows = []
        for v in old:
            rows.append(sum(1 << index[u] for u in bits(self.adj[v] & s)))
        return Graph(len(old), tuple(rows)), old

    def reach(self, start: int, within: int) -> int:
        """Mask of vertices reachable from ``start`` inside ``within``."""
        seen = 1 << start
        layer = seen
        adj = self.adj
        while layer:
            nxt = 0
            while layer:
                low = layer & -layer
                nxt |= adj[low.bit_length() - 1]
                layer ^= low
            layer = nxt & within & ~seen
            seen |= layer
        return seen

    def components(self, within: int | None = None) -> list[int]:
        """Connected components of ``G[within]`` sorted by (size, smallest id)."""
        rest = self.vertex_mask if within is None else within
        self._check_set(rest)
        comps = []
        while rest:
            comp = self.reach(lowest(rest), rest)
            comps.append(comp)
            rest &= ~comp
        comps.sort(key=lambda c: (popcount(c), lowest(c)))
        return comps

    def is_connected(self, within: int | None = None) -> bool:
        scope = self.vertex_mask if within is None else within
        if not scope:
            return True
        return self.reach(lowest(scope), scope) == scope

    def without(self, s: int) -> int:
        """Mask of ``V(G)`` minus ``s``."""
        return self.vertex_mask & ~s

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.num_edges})"


def disjoint_union(*graphs: Graph) -> Graph:
    edges = []
    offset = 0
    for g in graphs:
        edges.extend((u + offset, v + offset) for u, v in g.edges())
        offset += g.n
    return Graph.from_edges(offset, edges)


def glue_at(g1: Graph, g2: Graph, pairs: Iterable[tuple[int, int]]) -> Graph:
    """Glue ``g2`` onto ``g1`` identifying ``g2``-vertex ``b`` with ``g1``-vertex ``a``.

    Vertices of ``g2`` that are not identified get ids after ``g1``'s.  The
    result is the edge union, so callers wanting a true gluing must make the
    two graphs agree on the identified vertices.
    """
    ident = {b: a for a, b in pairs}
    mapping = {}
    nxt = g1.n
    for v in range(g2.n):
        if v in ident:
            mapping[v] = ident[v]
        else:
            mapping[v] = nxt
            nxt += 1
    edges = set(g1.edges())
    for u, v in g2.edges():
        a, b = sorted((mapping[u], mapping[v]))
        edges.add((a, b))
    return Graph.from_edges(nxt, edges)
