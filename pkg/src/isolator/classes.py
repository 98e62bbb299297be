"""Membership oracles for hereditary graph classes.

An oracle answers "is ``G[s]`` in the class?" for a vertex mask ``s``.
Heredity is a caller promise that the enumerators in :mod:`isolator.oracle`
rely on for pruning.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

import networkx as nx
from networkx.algorithms.isomorphism import GraphMatcher

from .graph import Graph, bits, popcount


@dataclass(frozen=True)
class ClassOracle:
    name: str
    test: Callable[[Graph, int], bool] = field(compare=False)
    cliques_only: bool = False  # every member is a complete graph

    def __call__(self, g: Graph, s: int | None = None) -> bool:
        return self.test(g, g.vertex_mask if s is None else s)


def complete_graphs() -> ClassOracle:
    return ClassOracle("complete", lambda g, s: g.is_clique(s), cliques_only=True)


def at_most_vertices(m: int) -> ClassOracle:
    return ClassOracle(f"order<={m}", lambda g, s: popcount(s) <= m)


def _to_nx(g: Graph, s: int) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(bits(s))
    h.add_edges_from((u, v) for u in bits(s) for v in bits(g.adj[u] & s) if u < v)
    return h


def induced_subgraphs_of(host: Graph, name: str | None = None) -> ClassOracle:
    """Graphs isomorphic to an induced subgraph of ``host``."""
    host_nx = _to_nx(host, host.vertex_mask)
    cache: dict[tuple, bool] = {}

    def test(g: Graph, s: int) -> bool:
        if popcount(s) > host.n:
            return False
        sub, _ = g.induced_subgraph(s)
        key = (sub.n, sub.adj)
        if key not in cache:
            cache[key] = GraphMatcher(host_nx, _to_nx(sub, sub.vertex_mask)).subgraph_is_isomorphic()
        return cache[key]

    return ClassOracle(name or f"induced<={host!r}", test)


def complete_minus_edge(n: int) -> Graph:
    """``K_n`` with the edge ``{0, 1}`` removed."""
    return Graph.from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n) if (u, v) != (0, 1)])


def k6_minus_edge_class() -> ClassOracle:
    """Induced subgraphs of ``K_6`` minus an edge.

    At most one non-edge, and exactly one when all 6 vertices are present.
    """

    def test(g: Graph, s: int) -> bool:
        size = popcount(s)
        if size > 6:
            return False
        missing = 0
        for v in bits(s):
            missing += popcount(s & ~g.adj[v] & ~(1 << v))
        missing //= 2
        return missing == 1 if size == 6 else missing <= 1

    return ClassOracle("K6-e", test)


def predicate(name: str, fn: Callable[[Graph], bool]) -> ClassOracle:
    """Wrap a whole-graph predicate; it is applied to relabelled induced subgraphs."""
    return ClassOracle(name, lambda g, s: fn(g.induced_subgraph(s)[0]))


def without_small_cutset(k: int) -> ClassOracle:
    """Graphs with no cutset of size at most k: complete or (k+1)-connected.

    Not hereditary, so it certifies glue-tree leaves but must not drive the
    pruned basic-set search.
    """
    from .connectivity import is_k_connected

    return ClassOracle(f"no-cutset<={k}", lambda g, s: g.is_clique(s) or is_k_connected(g, k + 1, s))


BUILTIN = {
    "complete": complete_graphs,
    "k6-minus-edge": k6_minus_edge_class,
}


def by_name(name: str) -> ClassOracle:
    """``complete``, ``k6-minus-edge``, ``order<=M`` or ``no-cutset<=K``."""
    if name in BUILTIN:
        return BUILTIN[name]()
    for prefix, make in (("order<=", at_most_vertices), ("no-cutset<=", without_small_cutset)):
        if name.startswith(prefix):
            try:
                return make(int(name[len(prefix):]))
            except ValueError:
                break
    raise ValueError(f"unknown class {name!r}; expected one of {sorted(BUILTIN)}, order<=M or no-cutset<=K")


__all__ = [
    "ClassOracle",
    "at_most_vertices",
    "by_name",
    "complete_graphs",
    "complete_minus_edge",
    "induced_subgraphs_of",
    "k6_minus_edge_class",
    "predicate",
    "without_small_cutset",
]
