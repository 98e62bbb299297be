"""Cut-partitions and k-weights."""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .graph import Graph, bits, members, popcount, to_mask


class Strength(enum.Enum):
    WEAK = "weak"
    STRONG = "strong"


class Violation(enum.Enum):
    OUT_OF_RANGE = "out_of_range"
    OVERLAP = "overlap"
    NOT_COVERING = "not_covering"
    A_EMPTY = "a_empty"
    B_EMPTY = "b_empty"
    A_B_EDGE = "a_b_edge"


@dataclass(frozen=True)
class CutPartition:
    """A triple ``(a, b, c)`` of vertex masks.

    Nothing is checked on construction; use :func:`validate_cut_partition`.
    """

    a: int
    b: int
    c: int

    @classmethod
    def of(cls, a, b, c) -> CutPartition:
        return cls(to_mask(a), to_mask(b), to_mask(c))

    @property
    def block(self) -> int:
        """``a | c``, the side that the isolation algorithm keeps."""
        return self.a | self.c

    def to_json(self) -> dict:
        return {"a": members(self.a), "b": members(self.b), "c": members(self.c)}

    @classmethod
    def from_json(cls, data: dict) -> CutPartition:
        try:
            return cls.of(data["a"], data["b"], data["c"])
        except (KeyError, TypeError) as exc:
            raise ValueError(f"malformed cut-partition JSON: {exc}") from None


@dataclass(frozen=True)
class PartitionReport:
    ok: bool
    violation: Violation | None = None
    message: str = ""

    def __bool__(self) -> bool:
        return self.ok


def validate_cut_partition(g: Graph, p: CutPartition) -> PartitionReport:
    """Check that ``p`` partitions V(G), a and b are non-empty, and a is anti-complete to b."""
    full = g.vertex_mask
    if (p.a | p.b | p.c) & ~full or min(p.a, p.b, p.c) < 0:
        return PartitionReport(False, Violation.OUT_OF_RANGE, "vertex id outside the graph")
    if p.a & p.b or p.a & p.c or p.b & p.c:
        return PartitionReport(False, Violation.OVERLAP, "parts are not pairwise disjoint")
    if p.a | p.b | p.c != full:
        missing = members(full & ~(p.a | p.b | p.c))
        return PartitionReport(False, Violation.NOT_COVERING, f"vertices {missing} are in no part")
    if not p.a:
        return PartitionReport(False, Violation.A_EMPTY, "A empty")
    if not p.b:
        return PartitionReport(False, Violation.B_EMPTY, "B empty")
    for v in bits(p.a):
        hit = g.adj[v] & p.b
        if hit:
            u = (hit & -hit).bit_length() - 1
            return PartitionReport(False, Violation.A_B_EDGE, f"A–B edge {v}-{u}")
    return PartitionReport(True)


def _check_outside(g: Graph, z: int, v: int) -> None:
    g._check_vertex(v)
    if z >> v & 1:
        raise ValueError(f"vertex {v} belongs to the reference set")


def classify_strength(g: Graph, k: int, z: int, v: int) -> Strength:
    _check_outside(g, z, v)
    return Strength.STRONG if popcount(g.adj[v] & z) >= k + 1 else Strength.WEAK


def k_weight_vertex(g: Graph, k: int, z: int, v: int) -> int:
    """1 with no neighbors in z, the neighbor count up to k, and k when k-strong."""
    _check_outside(g, z, v)
    d = popcount(g.adj[v] & z)
    if d == 0:
        return 1
    return min(d, k)


def k_weight_set(g: Graph, k: int, z: int, y: int) -> int:
    if y & z:
        raise ValueError("weighted set must be disjoint from the reference set")
    g._check_set(y)
    adj = g.adj
    total = 0
    for v in bits(y):
        d = popcount(adj[v] & z)
        total += 1 if d == 0 else min(d, k)
    return total


def partition_weight(g: Graph, k: int, p: CutPartition) -> int:
    """``w_b^k(c)``."""
    return k_weight_set(g, k, p.b, p.c)


def is_better(p1: CutPartition, p2: CutPartition) -> bool:
    """True when ``p2`` keeps a strictly smaller ``a | c`` than ``p1``."""
    s1, s2 = p1.block, p2.block
    return s2 != s1 and s2 & ~s1 == 0
