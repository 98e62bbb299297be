"""Vertex cutsets and k-connectivity.

Two independent deciders are provided.  ``method="enum"`` tries every vertex
subset up to the requested size; ``method="flow"`` runs unit-capacity
augmenting paths on the vertex-split digraph, checking only the pairs that
Even's argument requires.  Every function works on an induced subgraph given
by a ``within`` mask so callers never need to relabel.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from itertools import combinations

from .graph import Graph, bits, members, popcount

METHODS = ("flow", "enum")


@dataclass(frozen=True)
class Cutset:
    """A vertex set whose removal disconnects the graph, with a witness split.

    ``side_a`` is the first component (in :meth:`Graph.components` order) of
    the remaining graph and ``side_b`` is everything else.
    """

    vertices: int
    side_a: int
    side_b: int

    @property
    def size(self) -> int:
        return popcount(self.vertices)


def _debug_enabled() -> bool:
    return os.environ.get("ISOLATOR_DEBUG", "") not in ("", "0")


def _split(g: Graph, within: int, cut: int) -> Cutset | None:
    rest = within & ~cut
    if popcount(rest) < 2:
        return None
    comps = g.components(rest)
    if len(comps) < 2:
        return None
    return Cutset(cut, comps[0], rest & ~comps[0])


def _enum_cutset(g: Graph, k: int, within: int) -> Cutset | None:
    verts = members(within)
    for size in range(0, min(k, len(verts)) + 1):
        for combo in combinations(verts, size):
            cut = 0
            for v in combo:
                cut |= 1 << v
            found = _split(g, within, cut)
            if found is not None:
                return found
    return None


def local_vertex_cut(g: Graph, s: int, t: int, within: int, limit: int) -> tuple[int, int]:
    """Max number of internally disjoint s-t paths in ``G[within]``, capped at ``limit``.

    Returns ``(flow, cut)``; when ``flow < limit`` the mask ``cut`` is a
    minimum s-t vertex separator.  ``s`` and ``t`` must be non-adjacent.
    """
    adj = g.adj
    used = set()  # vertices whose in->out arc carries flow
    flow_edges = set()  # (u, w): one unit from out(u) into in(w)
    flow = 0
    while flow < limit:
        # nodes: (v, 0) = in(v), (v, 1) = out(v)
        start = (s, 1)
        parent = {start: None}
        queue = [start]
        found = False
        qi = 0
        while qi < len(queue) and not found:
            node = queue[qi]
            qi += 1
            v, side = node
            if side == 1:
                for w in bits(adj[v] & within):
                    nxt = (w, 0)
                    if nxt not in parent:
                        parent[nxt] = node
                        if w == t:
                            found = True
                            break
                        queue.append(nxt)
                if not found and v != s and v in used:
                    nxt = (v, 0)
                    if nxt not in parent:
                        parent[nxt] = node
                        queue.append(nxt)
            else:
                if v not in used:
                    nxt = (v, 1)
                    if nxt not in parent:
                        parent[nxt] = node
                        queue.append(nxt)
                for u in bits(adj[v] & within):
                    if (u, v) in flow_edges:
                        nxt = (u, 1)
                        if nxt not in parent:
                            parent[nxt] = node
                            queue.append(nxt)
        if not found:
            reach_in = {v for (v, side) in parent if side == 0}
            reach_out = {v for (v, side) in parent if side == 1}
            cut = 0
            for v in reach_in - reach_out:
                cut |= 1 << v
            return flow, cut
        node = (t, 0)
        while parent[node] is not None:
            prev = parent[node]
            (a, sa), (b, sb) = prev, node
            if sa == 1 and sb == 0 and a != b:
                if (b, a) in flow_edges:
                    flow_edges.discard((b, a))
                else:
                    flow_edges.add((a, b))
            elif sa == 0 and sb == 1 and a == b:
                used.add(a)
            elif sa == 1 and sb == 0 and a == b:
                used.discard(a)
            else:  # in(a) -> out(b) along a reversed edge arc
                flow_edges.discard((b, a))
            node = prev
        flow += 1
    return flow, 0


def _flow_cutset(g: Graph, k: int, within: int) -> Cutset | None:
    verts = members(within)
    for i, v in enumerate(verts[: k + 1]):
        for w in verts[i + 1:]:
            if g.adj[v] >> w & 1:
                continue
            flow, cut = local_vertex_cut(g, v, w, within, k + 1)
            if flow <= k:
                found = _split(g, within, cut)
                if found is None:
                    raise AssertionError("flow separator does not disconnect")
                return found
    return None


def find_small_cutset(g: Graph, k: int, within: int | None = None, method: str = "flow") -> Cutset | None:
    """Some cutset of ``G[within]`` of size at most ``k``, or ``None``."""
    scope = g.vertex_mask if within is None else within
    if method == "flow":
        found = _flow_cutset(g, k, scope)
    elif method == "enum":
        found = _enum_cutset(g, k, scope)
    else:
        raise ValueError(f"unknown method {method!r}")
    if _debug_enabled():
        other = _enum_cutset(g, k, scope) if method == "flow" else _flow_cutset(g, k, scope)
        assert (found is None) == (other is None), "connectivity implementations disagree"
    return found


def find_cutset_at_most(g: Graph, k: int, within: int | None = None) -> Cutset | None:
    """First cutset of size <= k by (size, lexicographic ids), with its split."""
    scope = g.vertex_mask if within is None else within
    return _enum_cutset(g, k, scope)


def is_k_connected(g: Graph, k: int, within: int | None = None, method: str = "flow",
                   check: bool = False) -> bool:
    """At least ``k+1`` vertices and no cutset of size at most ``k-1``."""
    if k < 0:
        raise ValueError("k must be non-negative")
    scope = g.vertex_mask if within is None else within
    if popcount(scope) < k + 1:
        return False
    if k == 0:
        return True
    answer = find_small_cutset(g, k - 1, scope, method) is None
    if check:
        other = "enum" if method == "flow" else "flow"
        if answer != (find_small_cutset(g, k - 1, scope, other) is None):
            raise AssertionError("connectivity implementations disagree")
    return answer


def vertex_connectivity(g: Graph, within: int | None = None, method: str = "flow") -> int:
    """Largest k such that ``G[within]`` is k-connected (0 when none)."""
    scope = g.vertex_mask if within is None else within
    k = 0
    while is_k_connected(g, k + 1, scope, method):
        k += 1
    return k


def degree_core(g: Graph, within: int, d: int) -> int:
    """Largest subset of ``within`` inducing minimum degree >= d."""
    s = within
    changed = True
    while changed and s:
        changed = False
        for v in bits(s):
            if popcount(g.adj[v] & s) < d:
                s &= ~(1 << v)
                changed = True
    return s


__all__ = [
    "Cutset",
    "METHODS",
    "degree_core",
    "find_cutset_at_most",
    "find_small_cutset",
    "is_k_connected",
    "local_vertex_cut",
    "vertex_connectivity",
]
