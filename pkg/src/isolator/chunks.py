"""Chunks, their half-integer powers, and the k = 2 certificates built on them.

A chunk of ``G`` is a pair ``(X, Y)`` of disjoint vertex sets with
``N(X) ⊆ Y``.  Its power depends only on ``|X|`` and ``|Y|`` and is read from
a fixed table whose entries are multiples of one half, so powers are kept as
:class:`HalfInt` and summed exactly.

Every function takes an optional ``within`` mask and then works on the
induced subgraph ``G[within]`` without relabelling; degrees and
neighborhoods are measured inside the mask.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Union

from .connectivity import find_small_cutset, is_k_connected
from .graph import Graph, bits, lowest, members, popcount
from .isolation import InternalInvariantBroken
from .weights import CutPartition, validate_cut_partition


@dataclass(frozen=True, order=True)
class HalfInt:
    """A non-negative multiple of one half, stored as twice its value."""

    doubled: int

    @classmethod
    def of(cls, value) -> HalfInt:
        d = value * 2
        if d != int(d) or d < 0:
            raise ValueError(f"{value!r} is not a non-negative multiple of 1/2")
        return cls(int(d))

    def __add__(self, other: HalfInt) -> HalfInt:
        return HalfInt(self.doubled + other.doubled)

    def __float__(self) -> float:
        return self.doubled / 2

    def __str__(self) -> str:
        whole, half = divmod(self.doubled, 2)
        return f"{whole}.5" if half else str(whole)

    def to_json(self):
        return self.doubled // 2 if self.doubled % 2 == 0 else self.doubled / 2


ZERO = HalfInt(0)

# doubled powers; row = min(|X|, 5), column = min(|Y|, 6)
_TABLE = (
    (0, 0, 0, 0, 0, 0, 0),
    (4, 4, 4, 3, 2, 2, 0),
    (5, 5, 5, 4, 4, 2, 0),
    (6, 6, 6, 6, 4, 2, 0),
    (8, 8, 8, 6, 4, 2, 0),
    (12, 8, 8, 6, 4, 2, 0),
)


def power(x_size: int, y_size: int) -> HalfInt:
    if x_size < 0 or y_size < 0:
        raise ValueError("set sizes must be non-negative")
    return HalfInt(_TABLE[min(x_size, 5)][min(y_size, 6)])


@dataclass(frozen=True)
class Chunk:
    x: int
    y: int

    @property
    def power(self) -> HalfInt:
        return power(popcount(self.x), popcount(self.y))

    def to_json(self) -> dict:
        return {"x": members(self.x), "y": members(self.y)}


@dataclass(frozen=True)
class ChunkReport:
    ok: bool
    total: HalfInt
    violation: str | None = None
    message: str = ""

    def __bool__(self) -> bool:
        return self.ok


def chunk_power_sum(chunks: Iterable[Chunk]) -> HalfInt:
    total = ZERO
    for ch in chunks:
        total = total + ch.power
    return total


def _scope(g: Graph, within: int | None) -> int:
    return g.vertex_mask if within is None else within


def _nbhd(g: Graph, s: int, within: int) -> int:
    out = 0
    for v in bits(s):
        out |= g.adj[v]
    return out & within & ~s


def is_chunk(g: Graph, ch: Chunk, within: int | None = None) -> bool:
    scope = _scope(g, within)
    return (not ch.x & ch.y and not (ch.x | ch.y) & ~scope
            and not _nbhd(g, ch.x, scope) & ~ch.y)


def validate_chunks(g: Graph, chunks: list[Chunk], within: int | None = None,
                    need_total: bool = True) -> ChunkReport:
    """Check the chunk property, then (a) disjoint X's, (b) 3-connectivity, (c) total >= 6."""
    scope = _scope(g, within)
    total = chunk_power_sum(chunks)
    seen = 0
    for i, ch in enumerate(chunks):
        if not is_chunk(g, ch, scope):
            return ChunkReport(False, total, "chunk", f"pair {i} is not a chunk")
        if seen & ch.x:
            return ChunkReport(False, total, "a", f"X of pair {i} meets an earlier X")
        seen |= ch.x
    for i, ch in enumerate(chunks):
        if popcount(ch.x) >= 2 and not is_k_connected(g, 3, ch.x | ch.y):
            return ChunkReport(False, total, "b", f"G[X ∪ Y] of pair {i} is not 3-connected")
    if need_total and total < HalfInt(12):
        return ChunkReport(False, total, "c", f"power sum {total} < 6")
    return ChunkReport(True, total)


# -- deleting a small set C ----------------------------------------------------

OUTCOME_BOUNDS = {
    "i": HalfInt(8), "ii": HalfInt(7), "iii": HalfInt(6), "iv": HalfInt(6),
    "v": HalfInt(6), "vi": HalfInt(5), "vii": HalfInt(4),
}


def delete_c_outcome(g: Graph, chunks: list[Chunk], c: int, new_total: HalfInt,
                     within: int | None = None) -> str | None:
    """First of the labels i..vii whose condition holds, or ``None``."""
    scope = _scope(g, within)
    degs = sorted(popcount(g.adj[v] & scope) for v in bits(c))
    two = len(degs) == 2

    def at_least(label: str) -> bool:
        return new_total >= OUTCOME_BOUNDS[label]

    if at_least("i"):
        return "i"
    # (ii) is read as "degree at most 3", which is what its proof establishes
    if at_least("ii") and degs and degs[0] <= 3:
        return "ii"
    if at_least("iii") and degs and degs[0] <= 2:
        return "iii"
    if at_least("iv") and two and g.adj[lowest(c)] & c:
        for ch in chunks:
            if popcount(ch.x) == 5 and not ch.y and not c & ~ch.x:
                return "iv"
    if two and at_least("v") and degs[1] <= 3:
        return "v"
    if two and at_least("vi") and degs[0] <= 2 and degs[1] <= 3:
        return "vi"
    if two and at_least("vii") and degs[1] <= 2:
        return "vii"
    return None


def apply_delete_c(g: Graph, chunks: list[Chunk], c: int, within: int | None = None,
                   check: bool = True) -> tuple[list[Chunk], str | None]:
    """Move ``C`` from every X into the matching Y; classify the outcome when the input sum is >= 6.

    The label is ``None`` when the input sum is below 6 (no claim is made then).
    """
    scope = _scope(g, within)
    if popcount(c) > 2:
        raise ValueError("C must have at most two vertices")
    if c & ~scope:
        raise ValueError("C must lie inside the graph")
    if check:
        report = validate_chunks(g, chunks, scope, need_total=False)
        if not report:
            raise ValueError(f"invalid input chunks: {report.message}")
    new = [Chunk(ch.x & ~c, ch.y | (ch.x & c)) for ch in chunks]
    if chunk_power_sum(chunks) < HalfInt(12):
        return new, None
    label = delete_c_outcome(g, chunks, c, chunk_power_sum(new), scope)
    if label is None:
        raise InternalInvariantBroken("no outcome of the deletion step holds")
    return new, label


# -- chunk search --------------------------------------------------------------


def _first_two_cutset(g: Graph, within: int) -> tuple[int, int, int] | None:
    verts = members(within)
    for x, y in combinations(verts, 2):
        cut = 1 << x | 1 << y
        rest = within & ~cut
        comps = g.components(rest)
        if len(comps) >= 2:
            return cut, comps[0], rest & ~comps[0]
    return None


def find_chunks(g: Graph, within: int | None = None) -> list[Chunk]:
    """Chunks satisfying (a), (b) and power sum >= 6, by recursion on 2-cutsets.

    Chunks whose X becomes empty after a deletion step carry no power and
    are dropped.
    """
    scope = _scope(g, within)
    n = popcount(scope)
    if n < 3:
        raise ValueError("chunks need at least three vertices")
    if n <= 4:
        return [Chunk(1 << v, scope & ~(1 << v)) for v in bits(scope)]
    if find_small_cutset(g, 2, scope) is None:
        return [Chunk(scope, 0)]
    split = _first_two_cutset(g, scope)
    if split is None:
        raise InternalInvariantBroken("graph on >= 5 vertices is not 3-connected but has no 2-cutset")
    c, side1, side2 = split
    out = []
    for side in (side1, side2):
        sub = c | side
        parts, _ = apply_delete_c(g, find_chunks(g, sub), c, sub, check=False)
        out.extend(ch for ch in parts if ch.x)
    for v in bits(c):
        out.append(Chunk(1 << v, g.adj[v] & scope))
    if chunk_power_sum(out) < HalfInt(12):
        raise InternalInvariantBroken("chunk power sum fell below 6")
    return out


# -- psi_c(2) <= 5 ----------------------------------------------------------------


@dataclass(frozen=True)
class ThreeConnected:
    kind = "connected"

    def to_json(self) -> dict:
        return {"kind": self.kind}


@dataclass(frozen=True)
class Isolated5:
    partition: CutPartition
    kind = "isolated"

    def to_json(self) -> dict:
        return {"kind": self.kind, "partition": self.partition.to_json()}


@dataclass(frozen=True)
class LowDegree5:
    vertex: int
    degree: int
    kind = "low_degree"

    def to_json(self) -> dict:
        return {"kind": self.kind, "vertex": self.vertex, "degree": self.degree}


Psi2Outcome = Union[ThreeConnected, Isolated5, LowDegree5]


def psi_c2_certificate(g: Graph) -> Psi2Outcome:
    """3-connected, a 3-connected block behind at most 5 vertices, or a vertex of degree <= 5."""
    if g.n < 3:
        if g.n == 0:
            raise ValueError("the null graph has no vertex")
        v, d = g.min_degree()
        return LowDegree5(v, d)
    chunks = find_chunks(g)
    chosen = next(ch for ch in chunks if ch.power > ZERO)
    if popcount(chosen.x) == 1:
        v = lowest(chosen.x)
        return LowDegree5(v, g.degree(v))
    if chosen.x | chosen.y == g.vertex_mask:
        return ThreeConnected()
    p = CutPartition(chosen.x, g.vertex_mask & ~(chosen.x | chosen.y), chosen.y)
    if not validate_cut_partition(g, p):
        raise InternalInvariantBroken("chunk does not yield a cut-partition")
    return Isolated5(p)


# -- minimum degree 5 forces a 3-connected induced subgraph --------------------------

CASES = {"i": (3, 0), "ii": (2, 2), "iii": (1, 4), "iv": (0, 6)}  # (#deg<=2, #further deg<=4)


@dataclass(frozen=True)
class DegreeCertificate24:
    case: str
    witnesses: tuple[tuple[int, int], ...]  # (vertex, degree), degree <= 2 ones first
    kind = "degree_certificate"

    def to_json(self) -> dict:
        return {"kind": self.kind, "case": self.case, "witnesses": [list(w) for w in self.witnesses]}


@dataclass(frozen=True)
class ThreeConnectedSubgraph:
    vertices: int
    kind = "three_connected_subgraph"

    def to_json(self) -> dict:
        return {"kind": self.kind, "vertices": members(self.vertices)}


def check_degree_certificate(g: Graph, cert: DegreeCertificate24, within: int | None = None) -> str | None:
    """``None`` when the certificate holds, else a description of the problem."""
    scope = _scope(g, within)
    if cert.case not in CASES:
        return f"unknown case {cert.case!r}"
    low, mid = CASES[cert.case]
    if len(cert.witnesses) != low + mid:
        return f"case {cert.case} needs {low + mid} witnesses"
    vs = [v for v, _ in cert.witnesses]
    if len(set(vs)) != len(vs):
        return "witnesses are not distinct"
    for i, (v, d) in enumerate(cert.witnesses):
        if not 0 <= v < g.n or not scope >> v & 1:
            return f"witness {v} outside the graph"
        real = popcount(g.adj[v] & scope)
        if real != d:
            return f"witness {v} has degree {real}, not {d}"
        if d > (2 if i < low else 4):
            return f"witness {v} has degree {d}, too large for case {cert.case}"
    return None


def _best_certificate(g: Graph, pool: int, scope: int) -> DegreeCertificate24 | None:
    ranked = sorted((popcount(g.adj[v] & scope), v) for v in bits(pool))
    low = [(v, d) for d, v in ranked if d <= 2]
    mid = [(v, d) for d, v in ranked if d <= 4]
    for case, (nl, nm) in CASES.items():
        if len(low) >= nl and len(mid) >= nl + nm:
            chosen = low[:nl]
            rest = [w for w in mid if w not in chosen][:nm]
            return DegreeCertificate24(case, tuple(chosen + rest))
    return None


def _witness_mask(cert: DegreeCertificate24) -> int:
    m = 0
    for v, _ in cert.witnesses:
        m |= 1 << v
    return m


def _mader(g: Graph, scope: int):
    n = popcount(scope)
    if n == 3:
        return _best_certificate(g, scope, scope)
    v, d = g.min_degree(scope)
    if d <= 2:
        sub = _mader(g, scope & ~(1 << v))
        if isinstance(sub, ThreeConnectedSubgraph):
            return sub
        pool = _witness_mask(sub) | 1 << v
    else:
        cut = find_small_cutset(g, 2, scope)
        if cut is None:
            return ThreeConnectedSubgraph(scope)
        pool = cut.vertices
        for side in (cut.side_a, cut.side_b):
            sub = _mader(g, side | cut.vertices)
            if isinstance(sub, ThreeConnectedSubgraph):
                return sub
            pool |= _witness_mask(sub)
    cert = _best_certificate(g, pool, scope)
    if cert is None:
        raise InternalInvariantBroken("no degree certificate case can be lifted")
    return cert


def mader_minimum_degree_5(g: Graph) -> ThreeConnectedSubgraph | DegreeCertificate24:
    """A 3-connected induced subgraph, or a certificate of few low-degree vertices."""
    if g.n < 3:
        raise ValueError("need at least three vertices")
    return _mader(g, g.vertex_mask)


__all__ = [
    "CASES",
    "Chunk",
    "ChunkReport",
    "DegreeCertificate24",
    "HalfInt",
    "Isolated5",
    "LowDegree5",
    "OUTCOME_BOUNDS",
    "ThreeConnected",
    "ThreeConnectedSubgraph",
    "apply_delete_c",
    "check_degree_certificate",
    "chunk_power_sum",
    "delete_c_outcome",
    "find_chunks",
    "is_chunk",
    "mader_minimum_degree_5",
    "power",
    "psi_c2_certificate",
    "validate_chunks",
]
