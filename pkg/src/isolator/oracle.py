"""Brute-force ground truth over vertex subsets.

Two enumeration engines back every query:

* connected blocks: all ``W`` with ``G[W]`` (k+1)-connected.  The pruned
  search peels to the (k+1)-core, splits into components, splits further
  along any cutset of size at most k, and otherwise emits the set and
  recurses on its one-vertex deletions.  The unpruned reference walks all
  subsets in Gray-code order.
* basic sets: all nonempty ``A`` with ``G[A]`` in a hereditary class, by a
  depth-first search over increasing vertex ids that stops as soon as a set
  leaves the class (heredity makes this exact).  Clique-only classes extend
  along common neighborhoods instead.

Every result carries its witness; ties go to the smallest witness mask.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterator

from .classes import ClassOracle
from .connectivity import degree_core, find_small_cutset, is_k_connected
from .graph import Graph, bits, members, popcount
from .weights import k_weight_set

UNPRUNED_LIMIT = 20


class EnumerationLimit(ValueError):
    pass


@dataclass
class OracleResult:
    min: int | None
    witness: int | None
    enumerated_count: int = 0
    pruned_count: int = 0
    extra: dict = field(default_factory=dict)

    def offer(self, value: int, mask: int) -> None:
        if self.min is None or (value, mask) < (self.min, self.witness):
            self.min, self.witness = value, mask

    def to_json(self) -> dict:
        out = {
            "min": self.min,
            "witness": None if self.witness is None else members(self.witness),
            "enumerated_count": self.enumerated_count,
            "pruned_count": self.pruned_count,
        }
        out.update(self.extra)
        return out


@dataclass
class EnumStats:
    enumerated: int = 0
    pruned: int = 0


# -- subset walks ----------------------------------------------------------------


def gray_subsets(universe: int) -> Iterator[int]:
    """All subsets of ``universe`` in reflected Gray-code order, starting from the empty set."""
    verts = members(universe)
    cur = 0
    yield cur
    for i in range(1, 1 << len(verts)):
        flip = (i & -i).bit_length() - 1
        cur ^= 1 << verts[flip]
        yield cur


# -- connected blocks ----------------------------------------------------------------


def _clique_blocks(scope: int, k: int) -> Iterator[int]:
    verts = members(scope)
    for size in range(k + 2, len(verts) + 1):
        for combo in combinations(verts, size):
            m = 0
            for v in combo:
                m |= 1 << v
            yield m


def enumerate_connected_blocks(g: Graph, k: int, within: int | None = None, prune: bool = True,
                               stats: EnumStats | None = None) -> Iterator[int]:
    """Every ``W ⊆ within`` with ``G[W]`` (k+1)-connected, each exactly once."""
    scope = g.vertex_mask if within is None else within
    st = stats if stats is not None else EnumStats()
    if not prune:
        if popcount(scope) > UNPRUNED_LIMIT:
            raise EnumerationLimit(f"unpruned enumeration is limited to {UNPRUNED_LIMIT} vertices")
        for s in gray_subsets(scope):
            st.enumerated += 1
            if popcount(s) >= k + 2 and is_k_connected(g, k + 1, s):
                yield s
        return

    seen: set[int] = set()
    emitted: set[int] = set()
    stack = [scope]
    while stack:
        s = stack.pop()
        if s in seen:
            st.pruned += 1
            continue
        seen.add(s)
        st.enumerated += 1
        core = degree_core(g, s, k + 1)
        if core != s:
            st.pruned += 1
            if core:
                stack.append(core)
            continue
        comps = g.components(s)
        if len(comps) > 1:
            stack.extend(c for c in comps if popcount(c) >= k + 2)
            continue
        if popcount(s) < k + 2:
            continue
        if g.is_clique(s):
            # every subset of a clique with k+2 or more vertices qualifies
            for w in _clique_blocks(s, k):
                if w not in emitted:
                    emitted.add(w)
                    yield w
            continue
        cut = find_small_cutset(g, k, s)
        if cut is not None:
            rest = s & ~cut.vertices
            stack.extend(d | cut.vertices for d in g.components(rest))
            continue
        if s not in emitted:
            emitted.add(s)
            yield s
        for v in bits(s):
            stack.append(s & ~(1 << v))


def sets_without_small_cutset(g: Graph, k: int, within: int | None = None, prune: bool = True,
                              stats: EnumStats | None = None) -> Iterator[int]:
    """Nonempty ``H`` with no cutset of size at most k: the cliques and the (k+1)-connected sets."""
    scope = g.vertex_mask if within is None else within
    seen: set[int] = set()
    for w in enumerate_cliques(g, scope):
        seen.add(w)
        yield w
    for w in enumerate_connected_blocks(g, k, scope, prune, stats):
        if w not in seen:
            yield w


# -- basic sets ----------------------------------------------------------------------


def enumerate_cliques(g: Graph, within: int | None = None) -> Iterator[int]:
    """Every nonempty clique of ``G[within]``."""
    scope = g.vertex_mask if within is None else within
    adj = g.adj
    stack = [(0, scope)]
    while stack:
        clique, cand = stack.pop()
        while cand:
            low = cand & -cand
            v = low.bit_length() - 1
            cand ^= low
            grown = clique | low
            yield grown
            stack.append((grown, cand & adj[v]))


def enumerate_basic_sets(g: Graph, oracle: ClassOracle, within: int | None = None,
                         stats: EnumStats | None = None) -> Iterator[int]:
    """Every nonempty ``A`` with ``G[A]`` in the (hereditary) class."""
    scope = g.vertex_mask if within is None else within
    st = stats if stats is not None else EnumStats()
    if oracle.cliques_only:
        for a in enumerate_cliques(g, scope):
            st.enumerated += 1
            if oracle(g, a):
                yield a
        return
    stack = [(0, scope)]
    while stack:
        base, cand = stack.pop()
        while cand:
            low = cand & -cand
            cand ^= low
            grown = base | low
            st.enumerated += 1
            if oracle(g, grown):
                yield grown
                stack.append((grown, cand))
            else:
                st.pruned += 1


# -- queries ---------------------------------------------------------------------------


def min_frontier_basic(g: Graph, oracle: ClassOracle) -> OracleResult:
    """Minimum ``|N(A)|`` over basic ``A`` with ``N[A] != V``."""
    st = EnumStats()
    res = OracleResult(None, None)
    full = g.vertex_mask
    for a in enumerate_basic_sets(g, oracle, full, st):
        nb = g.neighborhood(a)
        if a | nb != full:
            res.offer(popcount(nb), a)
    res.enumerated_count, res.pruned_count = st.enumerated, st.pruned
    return res


def min_cut_basic_block(g: Graph, oracle: ClassOracle) -> OracleResult:
    """Minimum ``|∂(W)|`` over basic ``W != V`` with ``∂(W) ⊊ W``."""
    st = EnumStats()
    res = OracleResult(None, None)
    full = g.vertex_mask
    for w in enumerate_basic_sets(g, oracle, full, st):
        if w == full:
            continue
        fr = g.frontier(w)
        if fr != w:
            res.offer(popcount(fr), w)
    res.enumerated_count, res.pruned_count = st.enumerated, st.pruned
    return res


def block_weight(g: Graph, k: int, w: int) -> int:
    """``w^k`` of the frontier of ``W`` against the rest of the graph."""
    return k_weight_set(g, k, g.vertex_mask & ~w, g.frontier(w))


def min_weight_connected_block(g: Graph, k: int, prune: bool = True) -> OracleResult:
    """Minimum frontier k-weight over (k+1)-connected ``W != V`` with ``∂(W) ⊊ W``."""
    st = EnumStats()
    res = OracleResult(None, None)
    full = g.vertex_mask
    for w in enumerate_connected_blocks(g, k, full, prune, st):
        if w == full:
            continue
        fr = g.frontier(w)
        if fr == w:
            continue
        res.offer(k_weight_set(g, k, full & ~w, fr), w)
    res.enumerated_count, res.pruned_count = st.enumerated, st.pruned
    return res


def check_no_small_cutset_frontier(g: Graph, k: int, c: int, prune: bool = True) -> OracleResult:
    """Does every induced ``H`` without a cutset of size <= k have ``|N(H)| >= c``?

    ``extra["holds"]`` is the answer; ``min`` and ``witness`` give the smallest
    neighborhood found, which is the counterexample when the answer is no.
    """
    st = EnumStats()
    res = OracleResult(None, None)
    for h in sets_without_small_cutset(g, k, None, prune, st):
        res.offer(popcount(g.neighborhood(h)), h)
    res.enumerated_count, res.pruned_count = st.enumerated, st.pruned
    res.extra["holds"] = res.min is None or res.min >= c
    return res


__all__ = [
    "EnumStats",
    "EnumerationLimit",
    "OracleResult",
    "UNPRUNED_LIMIT",
    "block_weight",
    "check_no_small_cutset_frontier",
    "enumerate_basic_sets",
    "enumerate_cliques",
    "enumerate_connected_blocks",
    "gray_subsets",
    "min_cut_basic_block",
    "min_frontier_basic",
    "min_weight_connected_block",
    "sets_without_small_cutset",
]
