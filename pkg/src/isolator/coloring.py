"""Exact colorings, the König merge of two colorings, and chromatic extraction.

Everything here is exact: chromatic numbers come from a DSATUR
branch-and-bound seeded with a maximum-clique lower bound, so sizes are
capped (``DEFAULT_LIMIT`` vertices) and larger inputs raise
:class:`SizeLimitExceeded`.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from .connectivity import is_k_connected
from .graph import Graph, bits, lowest, popcount
from .isolation import (Isolated, InternalInvariantBroken, PreconditionViolated, WholeGraphConnected,
                        isolate)
from .weights import CutPartition

DEFAULT_LIMIT = 20


class SizeLimitExceeded(ValueError):
    pass


@dataclass(frozen=True)
class Coloring:
    """``color_of[v]`` for every colored vertex; colors are ``0..num_colors-1``, all used."""

    color_of: dict

    @classmethod
    def from_classes(cls, classes) -> Coloring:
        out = {}
        for i, cls_mask in enumerate(m for m in classes if m):
            for v in bits(cls_mask):
                if v in out:
                    raise ValueError(f"vertex {v} in two color classes")
                out[v] = i
        return cls(out)

    @property
    def num_colors(self) -> int:
        return len(set(self.color_of.values()))

    @property
    def vertices(self) -> int:
        m = 0
        for v in self.color_of:
            m |= 1 << v
        return m

    def classes(self) -> list[int]:
        out = [0] * self.num_colors
        for v, c in self.color_of.items():
            out[c] |= 1 << v
        return out

    def is_proper(self, g: Graph) -> bool:
        cols = set(self.color_of.values())
        if cols != set(range(len(cols))):
            return False
        for cls_mask in self.classes():
            if not g.is_stable(cls_mask):
                return False
        return True

    def to_json(self, n: int | None = None) -> dict:
        size = n if n is not None else (max(self.color_of) + 1 if self.color_of else 0)
        return {"colors": [self.color_of.get(v, -1) for v in range(size)], "num_colors": self.num_colors}

    @classmethod
    def from_json(cls, data: dict) -> Coloring:
        return cls({v: c for v, c in enumerate(data["colors"]) if c >= 0})


# -- cliques -------------------------------------------------------------------


def max_clique(g: Graph, within: int | None = None) -> int:
    """A maximum clique of ``G[within]`` as a mask (smallest mask among ties is not guaranteed)."""
    scope = g.vertex_mask if within is None else within
    adj = g.adj
    best = [0, 0]  # size, mask

    def expand(clique: int, size: int, cand: int) -> None:
        if not cand:
            if size > best[0]:
                best[0], best[1] = size, clique
            return
        if size + popcount(cand) <= best[0]:
            return
        # branch on vertices outside the neighborhood of a max-degree pivot
        pivot = max(bits(cand), key=lambda u: popcount(adj[u] & cand))
        for v in bits(cand & ~adj[pivot]):
            if size + popcount(cand) <= best[0]:
                return
            expand(clique | 1 << v, size + 1, cand & adj[v])
            cand &= ~(1 << v)

    expand(0, 0, scope)
    return best[1]


def clique_number(g: Graph, within: int | None = None) -> int:
    return popcount(max_clique(g, within))


# -- exact chromatic number ----------------------------------------------------------


def _greedy_dsatur(adj: list[int], n: int) -> list[int]:
    color = [-1] * n
    classes: list[int] = []
    for _ in range(n):
        best_v, best_key = -1, None
        for v in range(n):
            if color[v] >= 0:
                continue
            sat = sum(1 for m in classes if m & adj[v])
            key = (sat, popcount(adj[v]))
            if best_key is None or key > best_key:
                best_v, best_key = v, key
        for i, m in enumerate(classes):
            if not m & adj[best_v]:
                classes[i] |= 1 << best_v
                color[best_v] = i
                break
        else:
            classes.append(1 << best_v)
            color[best_v] = len(classes) - 1
    return color


def _chromatic_relabelled(h: Graph) -> tuple[int, list[int]]:
    n = h.n
    if n == 0:
        return 0, []
    adj = list(h.adj)
    lower = clique_number(h)
    best_color = _greedy_dsatur(adj, n)
    best = [max(best_color) + 1, best_color]
    if best[0] == lower:
        return best[0], best_color

    color = [-1] * n
    classes: list[int] = []

    def search(colored: int) -> bool:
        if colored == n:
            best[0], best[1] = len(classes), color[:]
            return best[0] == lower
        # DSATUR choice: most distinct neighbor colors, then most uncolored neighbors
        pick, pick_key = -1, None
        for v in range(n):
            if color[v] >= 0:
                continue
            sat = 0
            for m in classes:
                if m & adj[v]:
                    sat += 1
            key = (sat, popcount(adj[v]))
            if pick_key is None or key > pick_key:
                pick, pick_key = v, key
        for i in range(len(classes)):
            if not classes[i] & adj[pick]:
                classes[i] |= 1 << pick
                color[pick] = i
                if search(colored + 1):
                    return True
                classes[i] &= ~(1 << pick)
                color[pick] = -1
        if len(classes) + 1 < best[0]:
            classes.append(1 << pick)
            color[pick] = len(classes) - 1
            if search(colored + 1):
                return True
            classes.pop()
            color[pick] = -1
        return False

    search(0)
    return best[0], best[1]


def exact_chromatic(g: Graph, within: int | None = None, limit: int = DEFAULT_LIMIT) -> tuple[int, Coloring]:
    """``(chi, optimal coloring)`` of ``G[within]``; raises :class:`SizeLimitExceeded` above ``limit``."""
    scope = g.vertex_mask if within is None else within
    if popcount(scope) > limit:
        raise SizeLimitExceeded(f"{popcount(scope)} vertices exceed the exact-coloring limit {limit}")
    h, old = g.induced_subgraph(scope)
    chi, color = _chromatic_relabelled(h)
    return chi, Coloring({old[i]: c for i, c in enumerate(color)})


def chromatic_number(g: Graph, within: int | None = None, limit: int = DEFAULT_LIMIT) -> int:
    return exact_chromatic(g, within, limit)[0]


def critical_subgraph(g: Graph, within: int | None = None, limit: int = DEFAULT_LIMIT) -> int:
    """A vertex-critical induced subgraph with the same chromatic number."""
    s = g.vertex_mask if within is None else within
    chi = chromatic_number(g, s, limit)
    changed = True
    while changed:
        changed = False
        for v in bits(s):
            if chromatic_number(g, s & ~(1 << v), limit) == chi:
                s &= ~(1 << v)
                changed = True
    return s


# -- merging two colorings ---------------------------------------------------------


def max_bipartite_matching(left: int, right: int, edges: Callable[[int], list[int]]) -> dict[int, int]:
    """Augmenting-path maximum matching; returns ``{left: right}``."""
    match_r: dict[int, int] = {}

    def augment(u: int, seen: set) -> bool:
        for w in edges(u):
            if w in seen:
                continue
            seen.add(w)
            if w not in match_r or augment(match_r[w], seen):
                match_r[w] = u
                return True
        return False

    for u in range(left):
        augment(u, set())
    return {u: w for w, u in match_r.items()}


def konig_cover(left: int, right: int, edges: Callable[[int], list[int]],
                matching: dict[int, int]) -> tuple[set, set]:
    """Minimum vertex cover ``(left part, right part)`` from a maximum matching."""
    match_r = {w: u for u, w in matching.items()}
    reach_l = {u for u in range(left) if u not in matching}
    reach_r: set = set()
    stack = list(reach_l)
    while stack:
        u = stack.pop()
        for w in edges(u):
            if w in reach_r or matching.get(u) == w:
                continue
            reach_r.add(w)
            nxt = match_r.get(w)
            if nxt is not None and nxt not in reach_l:
                reach_l.add(nxt)
                stack.append(nxt)
    return set(range(left)) - reach_l, reach_r


def cross_edges(g: Graph, x: int, y: int) -> int:
    return sum(popcount(g.adj[v] & y) for v in bits(x))


def merge_colorings(g: Graph, x: int, y: int, col_x: Coloring, col_y: Coloring,
                    within: int | None = None) -> Coloring:
    """Color ``G[x | y]`` with at most ``max(s, t, q + 1)`` colors by pairing anti-complete classes."""
    scope = g.vertex_mask if within is None else within
    if x & y or (x | y) != scope:
        raise ValueError("X and Y must partition the vertex set")
    if col_x.vertices != x or col_y.vertices != y:
        raise ValueError("colorings must cover exactly X and Y")
    if not col_x.is_proper(g) or not col_y.is_proper(g):
        raise ValueError("input colorings must be proper")
    xs, ys = col_x.classes(), col_y.classes()
    s, t = len(xs), len(ys)
    reach = [0] * s
    for i, m in enumerate(xs):
        for v in bits(m):
            reach[i] |= g.adj[v]

    def edges(i: int) -> list[int]:
        return [j for j in range(t) if not reach[i] & ys[j]]

    matching = max_bipartite_matching(s, t, edges)
    cover_l, cover_r = konig_cover(s, t, edges, matching)
    if len(cover_l) + len(cover_r) != len(matching):
        raise InternalInvariantBroken("König cover size differs from the matching size")
    classes = [xs[i] | ys[j] for i, j in sorted(matching.items())]
    classes += [xs[i] for i in range(s) if i not in matching]
    matched_r = set(matching.values())
    classes += [ys[j] for j in range(t) if j not in matched_r]
    out = Coloring.from_classes(classes)
    q = cross_edges(g, x, y)
    if out.num_colors > max(s, t, q + 1):
        raise InternalInvariantBroken("merged coloring exceeds max{s, t, q+1}")
    return out


def restrict(col: Coloring, s: int) -> Coloring:
    """Drop vertices outside ``s`` and renumber the surviving classes."""
    return Coloring.from_classes([m & s for m in col.classes()])


# -- chromatic extraction ------------------------------------------------------------


def extraction_bound(k: int, c: int) -> int:
    return max(c + 2 * k - 2, 2 * k * k)


def th_col_merge(g: Graph, k: int, p: CutPartition, c: int, within: int | None = None,
                 limit: int = DEFAULT_LIMIT) -> Coloring:
    """Color ``G[within]`` from a cut-partition whose block is ``c``-colorable.

    Follows the merge construction that rules out a low-chromatic block:
    the strong part of C is colored together with B, the weak part with A,
    and the two halves are joined by :func:`merge_colorings`.  When
    ``w_B(C) <= 2k^2 - 1`` and ``chi(G[B | C]) <= M`` the result has at most
    ``M = max(c + 2k - 2, 2k^2, chi(G[B | C]))`` colors.
    """
    scope = g.vertex_mask if within is None else within
    a, b, cc = p.a, p.b, p.c
    strong = sum(1 << v for v in bits(cc) if popcount(g.adj[v] & b) >= k + 1)
    weak = cc & ~strong
    _, col_bs = exact_chromatic(g, b | strong, limit)
    touched = [m for m in col_bs.classes() if m & strong]
    s_all = 0
    for m in touched:
        s_all |= m
    r = len(touched)
    left = a | weak
    right = b & ~s_all
    if r <= 2 * k - 2:
        _, col_left = exact_chromatic(g, left, limit)
        extra = touched
    else:
        pick = None
        for m in touched:
            if not any(g.adj[v] & (m & ~strong) for v in bits(left)):
                pick = m
                break
        if pick is None:
            raise InternalInvariantBroken("A ∪ C_W meets every strong color class")
        c_s = lowest(pick & strong)
        _, col_aux = exact_chromatic(g, left | 1 << c_s, limit)
        s_prime = next(m for m in col_aux.classes() if m >> c_s & 1)
        left &= ~s_prime
        col_left = restrict(col_aux, left)
        extra = [m | s_prime if m == pick else m for m in touched]
    col_right = restrict(col_bs, right)
    if left and right:
        merged = merge_colorings(g, left, right, col_left, col_right, left | right)
        base = merged.classes()
    else:
        base = col_left.classes() + col_right.classes()
    out = Coloring.from_classes(base + extra)
    if out.vertices != scope or not out.is_proper(g):
        raise InternalInvariantBroken("merge construction produced an improper coloring")
    return out


def extract_chromatic_connected(g: Graph, k: int, c: int, limit: int = DEFAULT_LIMIT) -> int:
    """A vertex set inducing a (k+1)-connected subgraph with chromatic number above ``c``."""
    if k < 1 or c < 0:
        raise PreconditionViolated("parameters", "need k >= 1 and c >= 0")
    chi = chromatic_number(g, None, limit)
    bound = extraction_bound(k, c)
    if chi <= bound:
        raise PreconditionViolated("chromatic bound", f"chi(G) = {chi} <= {bound}")
    crit = critical_subgraph(g, None, limit)
    if is_k_connected(g, k + 1, crit):
        return crit
    h, old = g.induced_subgraph(crit)
    out = isolate(h, k)
    if isinstance(out, WholeGraphConnected):
        raise InternalInvariantBroken("connectivity implementations disagree on the critical subgraph")
    if not isinstance(out, Isolated):
        raise InternalInvariantBroken(f"critical graph with chi = {chi} has a vertex of degree {out.degree}")
    block = sum(1 << old[v] for v in bits(out.partition.block))
    if chromatic_number(g, block, limit) > c:
        return block
    # the block is c-colorable: rebuild a coloring of the critical graph to expose the contradiction
    col = th_col_merge(h, k, out.partition, c, limit=limit)
    raise InternalInvariantBroken(
        f"block is {c}-colorable; merge construction colors the critical graph with "
        f"{col.num_colors} colors although chi = {chi}")


def verify_chi_bound(tree, k: int, f: Callable[[int], int], limit: int = DEFAULT_LIMIT) -> dict:
    """Check ``chi <= max(f(omega) + 2k - 2, 2k^2)`` on the graph a glue tree realizes."""
    from .constructions import realize

    g = realize(tree).graph
    omega = clique_number(g)
    chi = chromatic_number(g, None, limit)
    bound = max(f(omega) + 2 * k - 2, 2 * k * k)
    return {"ok": chi <= bound, "omega": omega, "chi": chi, "bound": bound}


__all__ = [
    "Coloring",
    "DEFAULT_LIMIT",
    "SizeLimitExceeded",
    "chromatic_number",
    "clique_number",
    "critical_subgraph",
    "cross_edges",
    "exact_chromatic",
    "extract_chromatic_connected",
    "extraction_bound",
    "konig_cover",
    "max_bipartite_matching",
    "max_clique",
    "merge_colorings",
    "restrict",
    "th_col_merge",
    "verify_chi_bound",
]
