"""Isolating a (k+1)-connected induced subgraph behind a light cutset.

:func:`isolate` returns one of three certificates: the whole graph is
(k+1)-connected, a cut-partition ``(A, B, C)`` whose block ``G[A | C]`` is
(k+1)-connected with ``w_B^k(C) <= 2k^2 - 1``, or a vertex of degree at most
``2k^2 - 1``.  The loop repeatedly shrinks ``A | C`` with
:func:`improve_cut_partition` until the block is (k+1)-connected.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from .classes import ClassOracle
from .connectivity import find_small_cutset, is_k_connected
from .graph import Graph, members, popcount
from .weights import CutPartition, is_better, partition_weight, k_weight_set, validate_cut_partition


class PreconditionViolated(ValueError):
    def __init__(self, clause: str, detail: str = ""):
        self.clause = clause
        super().__init__(f"{clause}: {detail}" if detail else clause)


class InternalInvariantBroken(AssertionError):
    """A branch the correctness argument rules out was reached."""


class OracleContradiction(ValueError):
    """A block with no small cutset failed the class oracle."""


def weight_bound(k: int) -> int:
    return 2 * k * k - 1


# -- outcomes ---------------------------------------------------------------


@dataclass(frozen=True)
class WholeGraphConnected:
    kind = "connected"

    def to_json(self) -> dict:
        return {"kind": self.kind}


@dataclass(frozen=True)
class Isolated:
    partition: CutPartition
    weight: int
    kind = "isolated"

    def to_json(self) -> dict:
        return {"kind": self.kind, "partition": self.partition.to_json(), "weight": self.weight}


@dataclass(frozen=True)
class LowDegree:
    vertex: int
    degree: int
    kind = "low_degree"

    def to_json(self) -> dict:
        return {"kind": self.kind, "vertex": self.vertex, "degree": self.degree}


IsolationOutcome = Union[WholeGraphConnected, Isolated, LowDegree]


def outcome_from_json(data: dict) -> IsolationOutcome:
    kind = data.get("kind")
    if kind == "connected":
        return WholeGraphConnected()
    if kind == "isolated":
        return Isolated(CutPartition.from_json(data["partition"]), int(data["weight"]))
    if kind == "low_degree":
        return LowDegree(int(data["vertex"]), int(data["degree"]))
    raise ValueError(f"unknown outcome kind {kind!r}")


class ConnectedBlock:
    """Returned by :func:`improve_cut_partition` when ``G[a | c]`` is already (k+1)-connected."""

    def __repr__(self) -> str:
        return "ConnectedBlock"


CONNECTED_BLOCK = ConnectedBlock()


# -- the improvement step ---------------------------------------------------


def _side_key(g: Graph, k: int, b: int, c: int, side: int):
    return (k_weight_set(g, k, b, c & side), popcount(side), members(side))


def improve_cut_partition(g: Graph, k: int, p: CutPartition, method: str = "flow"):
    """One improvement step: :data:`CONNECTED_BLOCK` or a strictly better partition.

    Preconditions (checked): min degree above ``2k^2 - 1``, ``p`` a valid
    cut-partition, and ``w_b^k(c) <= 2k^2 - 1``.
    """
    bound = weight_bound(k)
    if k < 1:
        raise PreconditionViolated("k >= 1", f"got k={k}")
    if g.n == 0:
        raise PreconditionViolated("min degree", "null graph")
    v, d = g.min_degree()
    if d <= bound:
        raise PreconditionViolated("min degree", f"vertex {v} has degree {d} <= {bound}")
    report = validate_cut_partition(g, p)
    if not report:
        raise PreconditionViolated("valid cut-partition", report.message)
    w = partition_weight(g, k, p)
    if w > bound:
        raise PreconditionViolated("weight bound", f"w_B(C) = {w} > {bound}")

    a, b, c = p.a, p.b, p.c
    block = a | c
    if is_k_connected(g, k + 1, block, method):
        return CONNECTED_BLOCK
    # every vertex of a has all its >= 2k^2 neighbors inside block, so |block| >= k+2
    cut = find_small_cutset(g, k, block, method)
    if cut is None:
        raise InternalInvariantBroken("block is not (k+1)-connected yet has no cutset of size <= k")
    s = cut.vertices
    s_a, s_b = cut.side_a, cut.side_b
    if _side_key(g, k, b, c, s_b) < _side_key(g, k, b, c, s_a):
        s_a, s_b = s_b, s_a
    if k_weight_set(g, k, b, c & s_a) > k * k - 1:
        raise InternalInvariantBroken("lighter side exceeds k^2 - 1")

    if a & s_a:
        new = CutPartition(a & s_a, b | s_b, s | (c & s_a))
    else:
        for u in members(c & s_a):
            if popcount(g.adj[u] & b) <= k:
                raise InternalInvariantBroken(f"weak vertex {u} in C ∩ S_A contradicts the degree bound")
        if not a & s_b:
            raise InternalInvariantBroken("A ⊆ S contradicts the degree bound")
        new = CutPartition(a & s_b, b | s_a, s | (c & s_b))

    if not validate_cut_partition(g, new):
        raise InternalInvariantBroken("produced an invalid cut-partition")
    if not is_better(p, new):
        raise InternalInvariantBroken("produced partition is not better")
    if partition_weight(g, k, new) > bound:
        raise InternalInvariantBroken("produced partition exceeds the weight bound")
    return new


def isolate(g: Graph, k: int, method: str = "flow", trace: list | None = None) -> IsolationOutcome:
    """Run the isolation algorithm; ``trace`` (if given) collects every partition visited."""
    if k < 1:
        raise ValueError("k must be positive")
    if g.n == 0:
        raise ValueError("isolation needs a non-null graph")
    bound = weight_bound(k)
    v, d = g.min_degree()
    if d <= bound:
        return LowDegree(v, d)
    cut = find_small_cutset(g, k, g.vertex_mask, method)
    if cut is None:
        # n >= 2k^2 + 1 >= k + 2 here
        return WholeGraphConnected()
    p = CutPartition(cut.side_a, cut.side_b, cut.vertices)
    while True:
        if trace is not None:
            trace.append(p)
        step = improve_cut_partition(g, k, p, method)
        if step is CONNECTED_BLOCK:
            return Isolated(p, partition_weight(g, k, p))
        if popcount(step.block) >= popcount(p.block):
            raise InternalInvariantBroken("no progress")
        p = step


# -- closure-class corollaries ---------------------------------------------


@dataclass(frozen=True)
class InClass:
    kind = "in_class"

    def to_json(self) -> dict:
        return {"kind": self.kind}


@dataclass(frozen=True)
class IsolatedBasic:
    partition: CutPartition
    kind = "isolated_basic"

    def to_json(self) -> dict:
        return {"kind": self.kind, "partition": self.partition.to_json()}


def classify_closure(g: Graph, k: int, oracle: ClassOracle, method: str = "flow"):
    """InClass, IsolatedBasic (block in the class, ``|c| <= 2k^2-1``) or LowDegree.

    The caller promises that ``g`` lies in the k-closure of the oracle's
    hereditary class; a (k+1)-connected block outside the class breaks that
    promise and raises :class:`OracleContradiction`.
    """
    if oracle(g):
        return InClass()
    out = isolate(g, k, method)
    if isinstance(out, WholeGraphConnected):
        raise OracleContradiction(f"G is {k + 1}-connected but not in class {oracle.name}")
    if isinstance(out, Isolated):
        if not oracle(g, out.partition.block):
            raise OracleContradiction(
                f"block {members(out.partition.block)} is {k + 1}-connected but not in class {oracle.name}")
        return IsolatedBasic(out.partition)
    return out


def isolate_basic_interior(g: Graph, k: int, oracle: ClassOracle, method: str = "flow"):
    """InClass, or a cut-partition with ``G[a]`` in the class and ``|c| <= 2k^2 - 1``."""
    out = classify_closure(g, k, oracle, method)
    if isinstance(out, InClass):
        return out
    if isinstance(out, IsolatedBasic):
        if not oracle(g, out.partition.a):
            raise OracleContradiction("class oracle is not hereditary")
        return out.partition
    v = out.vertex
    closed = g.adj[v] | 1 << v
    if closed != g.vertex_mask:
        return CutPartition(1 << v, g.vertex_mask & ~closed, g.adj[v])
    # v has minimum degree and no non-neighbor: G is complete
    if not oracle(g):
        raise OracleContradiction(f"complete graph not in class {oracle.name}")
    return InClass()
