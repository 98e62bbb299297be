"""Labeled witness graphs and glue-tree membership certificates.

A glue tree is a constructive proof that a graph lies in the k-closure of a
basic class: leaves are basic graphs, and each internal node glues its two
children along the labels they share (at most ``k`` of them, inducing the
same graph on both sides).  Trees work purely on vertex labels, so the same
labeled vertex may appear in many leaves.

Generators fix every free index choice by taking the lowest available
vertex, and label vertices with the names used in the constructions
(``a_j,l#t``, ``c_j^i``, ``u_j``, ``v_l`` and so on).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from functools import cached_property
from typing import Callable, Iterable, Union

from .classes import ClassOracle, complete_graphs
from .connectivity import find_cutset_at_most, is_k_connected
from .graph import Graph, GraphError, bits, members, popcount

Edge = tuple[str, str]


def _edge(a: str, b: str) -> Edge:
    if a == b:
        raise GraphError(f"self-loop at {a!r}")
    return (a, b) if a < b else (b, a)


# -- labeled graphs ---------------------------------------------------------------


@dataclass(frozen=True)
class LabeledGraph:
    graph: Graph
    labels: tuple[str, ...]
    roles: dict = field(default_factory=dict, compare=False, repr=False)

    def __post_init__(self) -> None:
        if len(self.labels) != self.graph.n:
            raise GraphError("one label per vertex required")
        if len(set(self.labels)) != len(self.labels):
            raise GraphError("labels must be unique")

    @classmethod
    def build(cls, labels: Iterable[str], edges: Iterable[Edge], roles: dict | None = None) -> LabeledGraph:
        labels = tuple(labels)
        index = {name: i for i, name in enumerate(labels)}
        if len(index) != len(labels):
            raise GraphError("labels must be unique")
        g = Graph.from_edges(len(labels), ((index[a], index[b]) for a, b in edges))
        return cls(g, labels, {k: tuple(v) for k, v in (roles or {}).items()})

    @cached_property
    def index(self) -> dict:
        return {name: i for i, name in enumerate(self.labels)}

    def vertex(self, label: str) -> int:
        return self.index[label]

    def mask(self, labels: Iterable[str]) -> int:
        m = 0
        for name in labels:
            m |= 1 << self.index[name]
        return m

    def role(self, name: str) -> int:
        return self.mask(self.roles[name])

    def names(self, mask: int) -> list[str]:
        return [self.labels[v] for v in bits(mask)]

    def labeled_edges(self) -> set:
        return {_edge(self.labels[u], self.labels[v]) for u, v in self.graph.edges()}

    def same_as(self, other: LabeledGraph) -> bool:
        """Equal as labeled graphs, ignoring vertex order."""
        return set(self.labels) == set(other.labels) and self.labeled_edges() == other.labeled_edges()

    def to_json(self) -> dict:
        return {
            "labels": list(self.labels),
            "edges": [list(e) for e in self.graph.edges()],
            "roles": {k: list(v) for k, v in self.roles.items()},
        }


# -- glue trees --------------------------------------------------------------------


@dataclass(frozen=True)
class Leaf:
    tag: str
    labels: tuple[str, ...]
    edges: tuple[Edge, ...]

    @cached_property
    def label_set(self) -> frozenset:
        return frozenset(self.labels)

    @cached_property
    def edge_set(self) -> frozenset:
        return frozenset(_edge(a, b) for a, b in self.edges)

    def to_json(self) -> dict:
        return {"kind": "leaf", "tag": self.tag, "labels": list(self.labels),
                "edges": [list(e) for e in self.edges]}


@dataclass(frozen=True)
class Glue:
    k: int
    left: GlueTree
    right: GlueTree
    shared: tuple[str, ...]

    @cached_property
    def label_set(self) -> frozenset:
        return self.left.label_set | self.right.label_set

    @cached_property
    def edge_set(self) -> frozenset:
        return self.left.edge_set | self.right.edge_set

    def to_json(self) -> dict:
        return {"kind": "glue", "k": self.k, "shared": list(self.shared),
                "left": self.left.to_json(), "right": self.right.to_json()}


GlueTree = Union[Leaf, Glue]


def leaf(tag: str, labels: Iterable[str], edges: Iterable[Edge] = ()) -> Leaf:
    return Leaf(tag, tuple(labels), tuple(sorted({_edge(a, b) for a, b in edges})))


def clique_leaf(labels: Iterable[str]) -> Leaf:
    labels = tuple(labels)
    return leaf("complete", labels, ((a, b) for i, a in enumerate(labels) for b in labels[i + 1:]))


def glue(left: GlueTree, right: GlueTree, k: int) -> Glue:
    """Glue along all shared labels."""
    return Glue(k, left, right, tuple(sorted(left.label_set & right.label_set)))


def glue_all(trees: list[GlueTree], k: int) -> GlueTree:
    out = trees[0]
    for t in trees[1:]:
        out = glue(out, t, k)
    return out


def tree_from_json(data: dict) -> GlueTree:
    try:
        if data["kind"] == "leaf":
            return Leaf(str(data["tag"]), tuple(data["labels"]), tuple(tuple(e) for e in data["edges"]))
        if data["kind"] == "glue":
            return Glue(int(data["k"]), tree_from_json(data["left"]), tree_from_json(data["right"]),
                        tuple(data["shared"]))
    except (KeyError, TypeError) as exc:
        raise ValueError(f"malformed glue tree: {exc}") from None
    raise ValueError(f"unknown glue-tree node kind {data.get('kind')!r}")


def relabel(t: GlueTree, fn: Callable[[str], str]) -> GlueTree:
    if isinstance(t, Leaf):
        return Leaf(t.tag, tuple(fn(x) for x in t.labels), tuple(_edge(fn(a), fn(b)) for a, b in t.edges))
    return Glue(t.k, relabel(t.left, fn), relabel(t.right, fn), tuple(sorted(fn(x) for x in t.shared)))


def _label_order(t: GlueTree) -> list[str]:
    order: list[str] = []
    seen: set = set()
    stack = [t]
    while stack:
        node = stack.pop()
        if isinstance(node, Leaf):
            for x in node.labels:
                if x not in seen:
                    seen.add(x)
                    order.append(x)
        else:
            stack.append(node.right)
            stack.append(node.left)
    return order


def realize(t: GlueTree) -> LabeledGraph:
    """The union graph; vertices are numbered by first appearance, left to right."""
    return LabeledGraph.build(_label_order(t), t.edge_set)


@dataclass(frozen=True)
class GlueReport:
    ok: bool
    message: str = ""
    leaves: int = 0
    glues: int = 0

    def __bool__(self) -> bool:
        return self.ok


def validate_glue_tree(t: GlueTree, oracle: ClassOracle | None = None, k: int | None = None) -> GlueReport:
    """Check every leaf against the class and every glue node's sharing rules."""
    oracle = oracle or complete_graphs()
    counts = [0, 0]
    stack = [t]
    while stack:
        node = stack.pop()
        if isinstance(node, Leaf):
            counts[0] += 1
            if len(node.label_set) != len(node.labels):
                return GlueReport(False, f"leaf {node.tag!r} repeats a label")
            for a, b in node.edges:
                if a not in node.label_set or b not in node.label_set or a == b:
                    return GlueReport(False, f"leaf {node.tag!r} has a bad edge {a}-{b}")
            lg = LabeledGraph.build(node.labels, node.edges)
            if not oracle(lg.graph):
                return GlueReport(False, f"leaf {node.tag!r} on {list(node.labels)} is not in class {oracle.name}")
            continue
        counts[1] += 1
        limit = node.k if k is None else min(node.k, k)
        shared = node.left.label_set & node.right.label_set
        if set(node.shared) != shared:
            return GlueReport(False, f"declared shared set {list(node.shared)} differs from {sorted(shared)}")
        if len(shared) > limit:
            return GlueReport(False, f"glue along {len(shared)} > {limit} vertices")
        left_in = {e for e in node.left.edge_set if e[0] in shared and e[1] in shared}
        right_in = {e for e in node.right.edge_set if e[0] in shared and e[1] in shared}
        if left_in != right_in:
            diff = sorted(left_in ^ right_in)
            return GlueReport(False, f"sides disagree on the shared set at edge {diff[0]}")
        stack.append(node.right)
        stack.append(node.left)
    return GlueReport(True, "", counts[0], counts[1])


def decompose_small_cutsets(lg: LabeledGraph, k: int, within: int | None = None,
                            blocks: bool = False) -> GlueTree:
    """A glue tree splitting along smallest cutsets of size <= k.

    Leaves are complete.  With ``blocks`` set, pieces with no small cutset
    become ``"block"`` leaves; otherwise they raise :class:`ValueError`.
    Every graph on at most ``k + 1`` vertices decomposes into complete leaves.
    """
    g = lg.graph
    scope = g.vertex_mask if within is None else within
    if g.is_clique(scope):
        return clique_leaf(lg.names(scope))
    cut = find_cutset_at_most(g, k, scope)
    if cut is None:
        if blocks:
            return leaf("block", lg.names(scope),
                        ((lg.labels[u], lg.labels[v]) for u, v in g.edges() if scope >> u & scope >> v & 1))
        raise ValueError(f"{lg.names(scope)} is neither complete nor split by <= {k} vertices")
    return Glue(k, decompose_small_cutsets(lg, k, cut.side_a | cut.vertices, blocks),
                decompose_small_cutsets(lg, k, cut.side_b | cut.vertices, blocks),
                tuple(sorted(lg.names(cut.vertices))))


def add_low_degree_vertex(t: GlueTree, label: str, neighbors: Iterable[str], k: int) -> Glue:
    """Extend a tree by a new vertex of degree at most k, gluing on its closed neighborhood."""
    nbrs = tuple(sorted(set(neighbors)))
    if len(nbrs) > k:
        raise ValueError(f"new vertex {label!r} has degree {len(nbrs)} > {k}")
    if label in t.label_set:
        raise ValueError(f"label {label!r} already present")
    missing = set(nbrs) - t.label_set
    if missing:
        raise ValueError(f"neighbors {sorted(missing)} are not in the tree")
    inner = [e for e in t.edge_set if e[0] in nbrs and e[1] in nbrs]
    small = LabeledGraph.build((label,) + nbrs, inner + [(label, x) for x in nbrs])
    return Glue(k, t, decompose_small_cutsets(small, k), nbrs)


# -- Mader trees ------------------------------------------------------------------------


def mader_tree(c: int, k: int = 1) -> LabeledGraph:
    """Two copies of the previous graph plus an apex complete to both; ``2^(c+1) - 1`` vertices.

    ``k`` is recorded in the roles only: the construction itself does not depend on it.
    """
    if c < 0:
        raise ValueError("c must be non-negative")
    if k < 1:
        raise ValueError("k must be positive")

    def build(depth: int, prefix: str) -> tuple[list[str], list[Edge]]:
        apex = prefix or "v"
        if depth == 0:
            return [apex], []
        labels, edges = [apex], []
        for side in "01":
            sub_labels, sub_edges = build(depth - 1, f"{apex}.{side}")
            labels += sub_labels
            edges += sub_edges
            edges += [(apex, x) for x in sub_labels]
        return labels, edges

    labels, edges = build(c, "")
    return LabeledGraph.build(labels, edges, {"apex": ["v"], f"params:c={c},k={k}": []})


# -- psi witness ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Construction:
    graph: LabeledGraph
    tree: GlueTree
    k: int
    parts: dict = field(default_factory=dict, compare=False, repr=False)


def psi_witness_piece(k: int) -> tuple[LabeledGraph, GlueTree]:
    """The graph H: k+1 cliques with vertices v_l and u_j attached."""
    if k < 2:
        raise ValueError("k must be at least 2")
    labels: list[str] = []
    edges: list[Edge] = []
    roles: dict[str, list[str]] = {}
    blocks: dict[tuple[int, int], list[str]] = {}
    c_name: dict[tuple[int, int], str] = {}
    for j in range(1, k + 2):
        size = k * k + k - 1 if j <= k else k * k + k
        a_j = []
        for l in range(1, k + 1):
            blk = [f"a_{j},{l}#{t}" for t in range(1, k + 1)]
            blocks[j, l] = blk
            roles[f"A_{j},{l}"] = blk
            a_j += blk
        uppers = [i for i in range(1, k + 1) if i != j]
        assert len(uppers) == size - k * k
        c_j = []
        for i in uppers:
            c_name[j, i] = f"c_{j}^{i}"
            c_j.append(c_name[j, i])
        roles[f"C_{j}"] = c_j
        a_j += c_j
        roles[f"A_{j}"] = a_j
        labels += a_j
        edges += [(x, y) for n, x in enumerate(a_j) for y in a_j[n + 1:]]
    v_labels = [f"v_{l}" for l in range(1, k + 1)]
    u_labels = [f"u_{j}" for j in range(1, k + 1)]
    labels += v_labels + u_labels
    for l in range(1, k + 1):
        edges += [(f"v_{l}", x) for j in range(1, k + 2) for x in blocks[j, l]]
    for j in range(1, k + 1):
        edges += [(f"u_{j}", c_name[i, j]) for i in range(1, k + 2) if i != j]
    roles["V"] = v_labels
    roles["S"] = u_labels
    h = LabeledGraph.build(labels, edges, roles)

    pieces = []
    for j in range(1, k + 2):
        t: GlueTree = clique_leaf(roles[f"A_{j}"])
        for l in range(1, k + 1):
            t = add_low_degree_vertex(t, f"v_{l}", blocks[j, l], k)
        pieces.append(t)
    tree = glue_all(pieces, k)
    for j in range(1, k + 1):
        tree = add_low_degree_vertex(tree, f"u_{j}", [c_name[i, j] for i in range(1, k + 2) if i != j], k)
    return h, tree


def psi_witness(k: int) -> Construction:
    """k+1 copies of H glued along S = {u_1..u_k}."""
    h, h_tree = psi_witness_piece(k)
    shared = set(h.roles["S"])
    copies = k + 1

    def name(r: int) -> Callable[[str], str]:
        return lambda x: x if x in shared else f"H{r}:{x}"

    labels: list[str] = []
    for r in range(1, copies + 1):
        labels += [name(r)(x) for x in h.labels if x not in shared]
    labels += list(h.roles["S"])
    edges = [(name(r)(a), name(r)(b)) for r in range(1, copies + 1) for a, b in h.labeled_edges()]
    roles = {"S": list(h.roles["S"])}
    for r in range(1, copies + 1):
        for role, members_ in h.roles.items():
            if role != "S":
                roles[f"H{r}:{role}"] = [name(r)(x) for x in members_]
    g = LabeledGraph.build(labels, set(_edge(a, b) for a, b in edges), roles)
    tree = glue_all([relabel(h_tree, name(r)) for r in range(1, copies + 1)], k)
    return Construction(g, tree, k, {"H": h, "H_tree": h_tree})


# -- i-good partitions -----------------------------------------------------------------------


def _log2_exact(k: int) -> int:
    m = k.bit_length() - 1
    if k < 1 or 1 << m != k:
        raise ValueError(f"{k} is not a power of two")
    return m


def phi_clique_size(m: int) -> int:
    k = 1 << m
    return m * k // 2 + k - 1


def phi_frontier_size(m: int, i: int) -> int:
    k = 1 << m
    return sum(k // 2 + k // (1 << l) for l in range(1, i + 1))


@dataclass(frozen=True)
class GoodPartition:
    construction: Construction
    cliques: tuple[tuple[str, ...], ...]  # A_1 .. A_{2^i}
    m: int
    i: int


def _good_state(m: int, i: int):
    """(labels per clique, edge set, tree) of the i-good graph with cliques A_1..A_{2^i}."""
    k = 1 << m
    s = phi_clique_size(m)
    cliques = [[f"A{1}#{t}" for t in range(1, s + 1)]]
    edges = {_edge(a, b) for n, a in enumerate(cliques[0]) for b in cliques[0][n + 1:]}
    tree: GlueTree = clique_leaf(cliques[0])
    roles: dict[str, list[str]] = {}
    for level in range(i):
        half = 1 << level
        part = k // (1 << (level + 1))
        shift = lambda x, h=half: f"A{int(x[1:x.index('#')]) + h}{x[x.index('#'):]}"
        copy_cliques = [[shift(x) for x in a] for a in cliques]
        copy_edges = {_edge(shift(a), shift(b)) for a, b in edges}
        copy_tree = relabel(tree, shift)
        all_cliques = cliques + copy_cliques
        all_edges = edges | copy_edges
        frontier_now = _frontiers(all_cliques, all_edges)
        b_set: dict[int, list[str]] = {}
        c_set: dict[tuple[int, int], list[str]] = {}
        for j in range(1, 2 * half + 1):
            interior = [x for x in all_cliques[j - 1] if x not in frontier_now[j - 1]]
            targets = range(half + 1, 2 * half + 1) if j <= half else range(1, half + 1)
            need = (1 + len(targets)) * part
            if len(interior) < need:
                raise AssertionError("interior too small for the next level")
            b_set[j] = interior[:part]
            for n, tgt in enumerate(targets):
                c_set[j, tgt] = interior[part * (n + 1): part * (n + 2)]
            roles[f"B_{j}@{level + 1}"] = b_set[j]
            for tgt in targets:
                roles[f"C_{j}^{tgt}@{level + 1}"] = c_set[j, tgt]
        cross = set()
        for j in range(1, half + 1):
            for l in range(1, half + 1):
                cross |= {_edge(b, c) for b in b_set[j] for c in c_set[half + l, j]}
                cross |= {_edge(b, c) for b in b_set[half + j] for c in c_set[l, half + j]}
        # H_x: cliques B_x ∪ C_l^x glued along B_x
        def h_tree(x: int, sources: range) -> GlueTree:
            return glue_all([clique_leaf(b_set[x] + c_set[l, x]) for l in sources], k)

        left = tree
        for j in range(1, half + 1):
            left = glue(left, h_tree(half + j, range(1, half + 1)), k)
        right = copy_tree
        for j in range(1, half + 1):
            right = glue(right, h_tree(j, range(half + 1, 2 * half + 1)), k)
        tree = glue(left, right, k)
        cliques = all_cliques
        edges = all_edges | cross
    return cliques, edges, tree, roles


def _frontiers(cliques: list[list[str]], edges: set) -> list[set]:
    owner = {x: n for n, a in enumerate(cliques) for x in a}
    out = [set() for _ in cliques]
    for a, b in edges:
        if owner[a] != owner[b]:
            out[owner[a]].add(a)
            out[owner[b]].add(b)
    return out


def phi_igood(m: int, i: int) -> GoodPartition:
    """The i-good graph for ``k = 2^m`` with its partition into cliques and glue tree."""
    if m < 1:
        raise ValueError("m must be positive")
    if not 0 <= i <= m:
        raise ValueError("i must lie in 0..m")
    k = 1 << m
    cliques, edges, tree, roles = _good_state(m, i)
    labels = [x for a in cliques for x in a]
    for j, a in enumerate(cliques, start=1):
        roles[f"A_{j}"] = a
    g = LabeledGraph.build(labels, edges, roles)
    return GoodPartition(Construction(g, tree, k), tuple(tuple(a) for a in cliques), m, i)


def check_good_partition(gp: GoodPartition) -> dict:
    """Properties (a)-(d) of an i-good partition, each by direct computation."""
    from .oracle import enumerate_cliques

    lg = gp.construction.graph
    g = lg.graph
    k = 1 << gp.m
    size = phi_clique_size(gp.m)
    bound = phi_frontier_size(gp.m, gp.i)
    masks = [lg.mask(a) for a in gp.cliques]
    a_ok = all(g.is_clique(a) and popcount(a) == size for a in masks)
    union = 0
    for a in masks:
        union |= a
    a_ok = a_ok and union == g.vertex_mask and sum(map(popcount, masks)) == g.n
    frontier_sizes = [popcount(g.frontier(a)) for a in masks]
    b_ok = all(f == bound for f in frontier_sizes)
    c_min = None
    for a in masks:
        sub = a
        while sub:
            nb = popcount(g.neighborhood(sub))
            c_min = nb if c_min is None else min(c_min, nb)
            sub = (sub - 1) & a
    c_ok = c_min is None or c_min >= bound
    d_ok = True
    for w in enumerate_cliques(g):
        if popcount(w) > k and not any(w & ~a == 0 for a in masks):
            d_ok = False
            break
    return {"a": a_ok, "b": b_ok, "c": c_ok, "d": d_ok, "clique_size": size,
            "frontier_sizes": frontier_sizes, "frontier_target": bound, "min_neighborhood": c_min}


# -- usable covers ------------------------------------------------------------------------


@dataclass(frozen=True)
class UsableWitness:
    h0: LabeledGraph
    h: LabeledGraph
    g: LabeledGraph
    cover: tuple[tuple[str, ...], ...]  # A_1 .. A_2k in H0
    h0_tree: GlueTree
    h_tree: GlueTree
    g_tree: GlueTree
    k: int
    d: int


def usable_witness(m: int, d: int) -> UsableWitness:
    """H0 with a (m+1)-usable cover, H = H0 plus v_1..v_k, and G = d copies of H glued on the v's."""
    if m < 1:
        raise ValueError("m must be positive")
    k = 1 << m
    if d < 3 * k:
        raise ValueError(f"d must be at least 3k = {3 * k}")
    cover = [[f"A1#{t}" for t in range(1, d + 2)]]
    edges = {_edge(a, b) for n, a in enumerate(cover[0]) for b in cover[0][n + 1:]}
    tree: GlueTree = clique_leaf(cover[0])
    for level in range(m + 1):
        half = 1 << level
        overlap = 1 << (m - level)
        fronts = _frontier_in(cover, edges)
        ident: dict[str, str] = {}
        for j in range(half):
            interior = [x for x in cover[j] if x not in fronts[j]]
            own = [x for x in interior if _owner(x) == j + 1]
            copy_interior = [x for x in interior if _owner(x) == j + 1]
            # the copy of A_j becomes A_{half + j}; its lowest interior vertices are identified
            for x, y in zip(own[:overlap], copy_interior[:overlap]):
                ident[_shift(y, half)] = x

        def rename(x: str, h=half, idm=ident) -> str:
            y = _shift(x, h)
            return idm.get(y, y)

        copy_cover = [[rename(x) for x in a] for a in cover]
        copy_edges = {_edge(rename(a), rename(b)) for a, b in edges}
        tree = glue(tree, relabel(tree, rename), k)
        cover = cover + copy_cover
        edges = edges | copy_edges
    labels = list(dict.fromkeys(x for a in cover for x in a))
    roles = {f"A_{j}": a for j, a in enumerate(cover, start=1)}
    h0 = LabeledGraph.build(labels, edges, roles)

    fronts = _frontier_in(cover, edges)
    c_sets = []
    for j, a in enumerate(cover):
        interior = [x for x in a if x not in fronts[j]]
        c_sets.append(interior[: k // 2])
        roles[f"C_{j + 1}"] = c_sets[-1]
    h_edges = set(edges)
    h_tree = tree
    v_labels = [f"v_{j}" for j in range(1, k + 1)]
    for j in range(1, k + 1):
        nb = c_sets[j - 1] + c_sets[k + j - 1]
        h_edges |= {_edge(f"v_{j}", x) for x in nb}
        h_tree = add_low_degree_vertex(h_tree, f"v_{j}", nb, k)
    roles["V"] = v_labels
    h = LabeledGraph.build(labels + v_labels, h_edges, roles)

    shared = set(v_labels)

    def name(r: int) -> Callable[[str], str]:
        return lambda x: x if x in shared else f"H{r}:{x}"

    g_labels = [name(r)(x) for r in range(1, d + 1) for x in labels] + v_labels
    g_edges = {_edge(name(r)(a), name(r)(b)) for r in range(1, d + 1) for a, b in h_edges}
    g = LabeledGraph.build(g_labels, g_edges, {"V": v_labels})
    g_tree = glue_all([relabel(h_tree, name(r)) for r in range(1, d + 1)], k)
    return UsableWitness(h0, h, g, tuple(tuple(a) for a in cover), tree, h_tree, g_tree, k, d)


def _owner(x: str) -> int:
    return int(x[1:x.index("#")])


def _shift(x: str, h: int) -> str:
    return f"A{_owner(x) + h}{x[x.index('#'):]}"


def _frontier_in(cover: list[list[str]], edges: set) -> list[set]:
    """Frontier of each cover clique inside the union graph."""
    members_of = [set(a) for a in cover]
    nbrs: dict[str, set] = {}
    for a, b in edges:
        nbrs.setdefault(a, set()).add(b)
        nbrs.setdefault(b, set()).add(a)
    return [{x for x in a if nbrs.get(x, set()) - a} for a in members_of]


def check_usable_cover(uw: UsableWitness) -> dict:
    """Properties (a)-(c) of the cover in H0 and property (i) of H, by direct computation."""
    lg = uw.h0
    g = lg.graph
    k = uw.k
    masks = [lg.mask(a) for a in uw.cover]
    union = 0
    for a in masks:
        union |= a
    out = {"a": union == g.vertex_mask and all(g.is_clique(a) for a in masks)}
    b_ok = True
    for a in masks:
        fr = g.frontier(a)
        rest = g.vertex_mask & ~a
        if popcount(a) != uw.d + 1 or popcount(fr) != 2 * k - 1:
            b_ok = False
        if any(popcount(g.adj[v] & rest) < k + 1 for v in bits(fr)):
            b_ok = False
    out["b"] = b_ok
    interiors = [a & ~g.frontier(a) for a in masks]
    c_ok = True
    for x in range(len(interiors)):
        for y in range(x + 1, len(interiors)):
            if interiors[x] & interiors[y] or g.neighborhood(interiors[x]) & interiors[y]:
                c_ok = False
    out["c"] = c_ok
    h = uw.h.graph
    v_mask = uw.h.role("V")
    out["i"] = (all(h.degree(v) == k for v in bits(v_mask))
                and all(h.degree(v) >= uw.d for v in bits(h.vertex_mask & ~v_mask)))
    return out


# -- high average degree without small frontiers ---------------------------------------------


def girth(g: Graph) -> int | None:
    """Length of a shortest cycle, or ``None`` for forests."""
    best = None
    for s in range(g.n):
        dist = {s: 0}
        parent = {s: -1}
        queue = [s]
        qi = 0
        while qi < len(queue):
            v = queue[qi]
            qi += 1
            for w in bits(g.adj[v]):
                if w not in dist:
                    dist[w] = dist[v] + 1
                    parent[w] = v
                    queue.append(w)
                elif parent[v] != w:
                    length = dist[v] + dist[w] + 1
                    if best is None or length < best:
                        best = length
    return best


def pendant_girth_graph(base: Graph, d: int) -> LabeledGraph:
    """Attach one pendant vertex to every vertex of a (2d-2)-regular base of girth d."""
    if d < 3:
        raise ValueError("d must be at least 3")
    if base.n == 0 or any(base.degree(v) != 2 * d - 2 for v in range(base.n)):
        raise ValueError(f"base must be {2 * d - 2}-regular")
    if girth(base) != d:
        raise ValueError(f"base must have girth {d}, found {girth(base)}")
    labels = [f"g{v}" for v in range(base.n)] + [f"p{v}" for v in range(base.n)]
    edges = [(f"g{u}", f"g{v}") for u, v in base.edges()] + [(f"g{v}", f"p{v}") for v in range(base.n)]
    return LabeledGraph.build(labels, edges, {"base": labels[: base.n], "pendants": labels[base.n:]})


def biclique_cage(d: int) -> Graph:
    """The girth-4 cage K_{6,6}; only ``d = 4`` is built in."""
    if d != 4:
        raise ValueError("only d = 4 is built in; supply another (2d-2)-regular girth-d base")
    return Graph.complete_bipartite(6, 6)


def average_degree(g: Graph) -> float:
    return 2 * g.num_edges / g.n if g.n else 0.0


def min_two_connected_frontier(g: Graph) -> tuple[int | None, int | None]:
    """Smallest ``|∂(H)|`` over 2-connected induced ``H``, with a witness."""
    from .oracle import enumerate_connected_blocks

    best = (None, None)
    for w in enumerate_connected_blocks(g, 1):
        f = popcount(g.frontier(w))
        if best[0] is None or (f, w) < best:
            best = (f, w)
    return best


# -- figure candidates ------------------------------------------------------------------------


class FigureClaim(enum.Enum):
    PHI2_CHAIN = "phi2-chain"
    MIN_DEGREE_4 = "min-degree-4"


@dataclass(frozen=True)
class FigureReport:
    ok: bool
    claim: FigureClaim
    in_class: bool | None = None
    violations: tuple = ()
    details: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        return {"ok": self.ok, "claim": self.claim.value, "in_class": self.in_class,
                "violations": [list(v) if isinstance(v, (list, tuple)) else v for v in self.violations],
                "details": self.details}


def verify_figure_candidate(lg: LabeledGraph, claim: FigureClaim, allowed: Iterable[str] = (),
                            oracle: ClassOracle | None = None) -> FigureReport:
    """Check a user-supplied graph against one of the figure claims.

    ``PHI2_CHAIN``: every nonempty X in the class (default: induced subgraphs of
    K_6 minus an edge) with ``|N(X)| < 5`` must be a subset of ``allowed``.
    ``MIN_DEGREE_4``: minimum degree exactly 4 and no 3-connected induced subgraph.
    """
    g = lg.graph
    if claim is FigureClaim.PHI2_CHAIN:
        from .classes import k6_minus_edge_class
        from .oracle import enumerate_basic_sets

        cls = oracle or k6_minus_edge_class()
        allowed_mask = lg.mask(allowed)
        small = []
        bad = []
        for x in enumerate_basic_sets(g, cls):
            if popcount(g.neighborhood(x)) < 5:
                small.append(x)
                if x & ~allowed_mask:
                    bad.append(lg.names(x))
        return FigureReport(not bad, claim, cls(g), tuple(bad),
                            {"small_neighborhood_sets": len(small)})
    if claim is FigureClaim.MIN_DEGREE_4:
        from .oracle import enumerate_connected_blocks

        violations = []
        delta = g.min_degree()[1] if g.n else None
        if delta != 4:
            violations.append(f"minimum degree is {delta}, not 4")
        for w in enumerate_connected_blocks(g, 2):
            violations.append(lg.names(w))
            break
        return FigureReport(not violations, claim, None, tuple(violations), {"min_degree": delta})
    raise ValueError(f"unknown claim {claim!r}")


def psi_witness_properties(c: Construction) -> dict:
    """The four claimed properties of the psi witness, via the oracle module."""
    from .oracle import min_cut_basic_block, min_frontier_basic

    g = c.graph.graph
    k = c.k
    cls = complete_graphs()
    cut = min_cut_basic_block(g, cls)
    front = min_frontier_basic(g, cls)
    simplicial = [v for v in range(g.n) if g.is_simplicial(v)]
    return {
        "min_degree": g.min_degree()[1],
        "target_min_degree": k * k + k - 1,
        "complete": g.is_clique(g.vertex_mask),
        "simplicial": simplicial,
        "min_cut_basic_block": cut.min,
        "min_frontier_basic": front.min,
        "min_frontier_witness": None if front.witness is None else c.graph.names(front.witness),
        "target_frontier": 2 * k - 1,
    }


def is_k_connected_labeled(lg: LabeledGraph, k: int, names: Iterable[str]) -> bool:
    return is_k_connected(lg.graph, k, lg.mask(names))


__all__ = [
    "Construction",
    "FigureClaim",
    "FigureReport",
    "Glue",
    "GlueReport",
    "GlueTree",
    "GoodPartition",
    "LabeledGraph",
    "Leaf",
    "UsableWitness",
    "add_low_degree_vertex",
    "average_degree",
    "biclique_cage",
    "check_good_partition",
    "check_usable_cover",
    "clique_leaf",
    "decompose_small_cutsets",
    "girth",
    "glue",
    "glue_all",
    "leaf",
    "mader_tree",
    "min_two_connected_frontier",
    "pendant_girth_graph",
    "phi_clique_size",
    "phi_frontier_size",
    "phi_igood",
    "psi_witness",
    "psi_witness_piece",
    "psi_witness_properties",
    "realize",
    "relabel",
    "tree_from_json",
    "usable_witness",
    "validate_glue_tree",
    "verify_figure_candidate",
]
