"""Independent checks for every certificate the algorithms emit.

Each verifier takes the graph, the parameters and the certificate JSON, and
returns a list of violation strings (empty when the certificate holds).
Connectivity is re-checked with the subset-enumeration engine, so a bug in
the flow engine the algorithms use cannot vouch for itself.
"""

from __future__ import annotations

from .coloring import DEFAULT_LIMIT, chromatic_number
from .connectivity import is_k_connected
from .graph import Graph, GraphError, popcount, to_mask
from .isolation import weight_bound
from .weights import CutPartition, partition_weight, validate_cut_partition

SCHEMA = "isolator/1"
CHECK_METHOD = "enum"


def _mask(g: Graph, ids) -> int:
    if not isinstance(ids, list) or not all(isinstance(v, int) for v in ids):
        raise ValueError("vertex lists must be lists of integers")
    if len(set(ids)) != len(ids):
        raise ValueError("vertex list repeats a vertex")
    m = to_mask(ids)
    g._check_set(m)
    return m


def _partition(g: Graph, data) -> tuple[CutPartition | None, list[str]]:
    try:
        p = CutPartition.from_json(data)
        g._check_set(p.a | p.b | p.c)
    except (KeyError, TypeError, ValueError, GraphError) as exc:
        return None, [f"malformed partition: {exc}"]
    report = validate_cut_partition(g, p)
    if not report:
        return None, [f"invalid cut-partition: {report.message}"]
    return p, []


def _connected(g: Graph, k: int, s: int) -> bool:
    return is_k_connected(g, k, s, CHECK_METHOD)


def _low_degree(g: Graph, cert: dict, bound: int) -> list[str]:
    v, d = cert.get("vertex"), cert.get("degree")
    if not isinstance(v, int) or not 0 <= v < g.n:
        return [f"vertex {v!r} is not in the graph"]
    if g.degree(v) != d:
        return [f"vertex {v} has degree {g.degree(v)}, certificate says {d}"]
    if d > bound:
        return [f"degree {d} exceeds {bound}"]
    return []


def verify_isolation(g: Graph, k: int, cert: dict) -> list[str]:
    """Check an isolation outcome against the three-way guarantee."""
    bound = weight_bound(k)
    kind = cert.get("kind")
    if kind == "connected":
        return [] if _connected(g, k + 1, g.vertex_mask) else [f"G is not {k + 1}-connected"]
    if kind == "low_degree":
        return _low_degree(g, cert, bound)
    if kind != "isolated":
        return [f"unknown outcome kind {kind!r}"]
    p, errs = _partition(g, cert.get("partition"))
    if p is None:
        return errs
    out = []
    if not _connected(g, k + 1, p.block):
        out.append(f"G[a ∪ c] is not {k + 1}-connected")
    w = partition_weight(g, k, p)
    if cert.get("weight") != w:
        out.append(f"weight is {w}, certificate says {cert.get('weight')}")
    if w > bound:
        out.append(f"weight {w} exceeds {bound}")
    return out


def verify_psi2(g: Graph, cert: dict) -> list[str]:
    """Check a ``chunk2`` outcome: 3-connected, a block behind at most 5 vertices, or degree <= 5."""
    kind = cert.get("kind")
    if kind == "connected":
        return [] if _connected(g, 3, g.vertex_mask) else ["G is not 3-connected"]
    if kind == "low_degree":
        return _low_degree(g, cert, 5)
    if kind != "isolated":
        return [f"unknown outcome kind {kind!r}"]
    p, errs = _partition(g, cert.get("partition"))
    if p is None:
        return errs
    out = []
    if not _connected(g, 3, p.block):
        out.append("G[a ∪ c] is not 3-connected")
    if popcount(p.c) > 5:
        out.append(f"|c| = {popcount(p.c)} exceeds 5")
    return out


def verify_mader5(g: Graph, cert: dict) -> list[str]:
    from .chunks import DegreeCertificate24, check_degree_certificate

    kind = cert.get("kind")
    if kind == "three_connected_subgraph":
        try:
            s = _mask(g, cert.get("vertices"))
        except (ValueError, GraphError) as exc:
            return [str(exc)]
        return [] if _connected(g, 3, s) else ["the given set does not induce a 3-connected graph"]
    if kind == "degree_certificate":
        try:
            dc = DegreeCertificate24(str(cert["case"]), tuple((int(v), int(d)) for v, d in cert["witnesses"]))
        except (KeyError, TypeError, ValueError) as exc:
            return [f"malformed degree certificate: {exc}"]
        err = check_degree_certificate(g, dc)
        return [] if err is None else [err]
    return [f"unknown certificate kind {kind!r}"]


def verify_color_extract(g: Graph, k: int, c: int, cert: dict, limit: int = DEFAULT_LIMIT) -> list[str]:
    if cert.get("kind") != "chromatic_block":
        return [f"unknown certificate kind {cert.get('kind')!r}"]
    try:
        s = _mask(g, cert.get("vertices"))
    except (ValueError, GraphError) as exc:
        return [str(exc)]
    out = []
    if not _connected(g, k + 1, s):
        out.append(f"the given set does not induce a {k + 1}-connected graph")
    chi = chromatic_number(g, s, limit)
    if chi <= c:
        out.append(f"chi = {chi} does not exceed {c}")
    if cert.get("chi") != chi:
        out.append(f"chi is {chi}, certificate says {cert.get('chi')}")
    return out


__all__ = [
    "SCHEMA",
    "verify_color_extract",
    "verify_isolation",
    "verify_mader5",
    "verify_psi2",
]
