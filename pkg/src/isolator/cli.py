"""Command-line interface.

Every subcommand prints one JSON document carrying ``"schema": "isolator/1"``
(``convert`` prints the converted graph instead).  Exit codes: 0 on success,
2 on input errors, 3 when ``verify`` finds a violation.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import __version__
from .certificates import SCHEMA, verify_color_extract, verify_isolation, verify_mader5, verify_psi2
from .classes import by_name
from .coloring import DEFAULT_LIMIT, SizeLimitExceeded, exact_chromatic, extract_chromatic_connected
from .connectivity import METHODS
from .formats import GraphFormatError, dump_graph, from_edgelist, from_graph6, read_graph
from .graph import Graph, GraphError, members

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_VIOLATION = 3


class InputError(Exception):
    def __init__(self, kind: str, message: str):
        self.kind = kind
        super().__init__(message)


def _emit(doc: dict, out: str | None) -> None:
    text = json.dumps({"schema": SCHEMA, **doc}, sort_keys=True)
    if out:
        Path(out).write_text(text + "\n", encoding="utf-8")
    print(text)


def _load_graph(args) -> Graph:
    path = args.input
    if path is None:
        raise InputError("missing-input", "--in is required")
    try:
        if path == "-":
            text = sys.stdin.read()
            return from_graph6(text) if args.format == "graph6" else from_edgelist(text)
        return read_graph(path, args.format)
    except OSError as exc:
        raise InputError("unreadable-file", f"cannot read {path}: {exc.strerror or exc}") from None
    except (GraphFormatError, GraphError) as exc:
        raise InputError("malformed-graph", f"malformed graph in {path}: {exc}") from None


def _load_json(path: str) -> dict:
    try:
        data = json.loads(Path(path).read_text(encoding="utf-8"))
    except OSError as exc:
        raise InputError("unreadable-file", f"cannot read {path}: {exc.strerror or exc}") from None
    except json.JSONDecodeError as exc:
        raise InputError("malformed-json", f"malformed JSON in {path}: {exc}") from None
    if not isinstance(data, dict):
        raise InputError("malformed-json", f"{path} does not hold a JSON object")
    return data


def _positive(name: str, value: int | None, minimum: int = 1) -> int:
    if value is None:
        raise InputError("missing-parameter", f"--{name} is required")
    if value < minimum:
        raise InputError("parameter-out-of-range", f"--{name} must be at least {minimum}, got {value}")
    return value


def _oracle(name: str):
    try:
        return by_name(name)
    except ValueError as exc:
        raise InputError("parameter-out-of-range", str(exc)) from None


# -- algorithm subcommands -----------------------------------------------------------


def cmd_isolate(args) -> int:
    from .isolation import isolate

    k = _positive("k", args.k)
    g = _load_graph(args)
    if g.n == 0:
        raise InputError("parameter-out-of-range", "isolation needs a non-null graph")
    _emit(isolate(g, k, args.method).to_json(), args.out)
    return EXIT_OK


def cmd_chunk2(args) -> int:
    from .chunks import find_chunks, psi_c2_certificate

    g = _load_graph(args)
    if g.n == 0:
        raise InputError("parameter-out-of-range", "the null graph has no vertex")
    doc = psi_c2_certificate(g).to_json()
    if g.n >= 3 and g.is_connected():
        doc["chunks"] = [ch.to_json() for ch in find_chunks(g)]
    _emit(doc, args.out)
    return EXIT_OK


def cmd_mader5(args) -> int:
    from .chunks import mader_minimum_degree_5

    g = _load_graph(args)
    if g.n < 3:
        raise InputError("parameter-out-of-range", f"need at least three vertices, got {g.n}")
    _emit(mader_minimum_degree_5(g).to_json(), args.out)
    return EXIT_OK


def cmd_color_extract(args) -> int:
    from .isolation import PreconditionViolated

    k = _positive("k", args.k)
    c = _positive("c", args.c, 0)
    g = _load_graph(args)
    try:
        s = extract_chromatic_connected(g, k, c, args.limit)
    except PreconditionViolated as exc:
        raise InputError("precondition", str(exc)) from None
    except SizeLimitExceeded as exc:
        raise InputError("parameter-out-of-range", str(exc)) from None
    chi, col = exact_chromatic(g, s, args.limit)
    _emit({"kind": "chromatic_block", "vertices": members(s), "chi": chi,
           "coloring": {str(v): col.color_of[v] for v in members(s)}}, args.out)
    return EXIT_OK


# -- constructions ----------------------------------------------------------------------

FAMILIES = ("mader-tree", "psi-witness", "phi-igood", "usable-witness", "pendant-girth")


def cmd_construct(args) -> int:
    from . import constructions as C

    fam = args.family
    try:
        if fam == "mader-tree":
            c = _positive("c", args.c, 0)
            k = _positive("k", args.k)
            lg = C.mader_tree(c, k)
            tree = C.decompose_small_cutsets(lg, k, blocks=True)
            cls, params = f"no-cutset<={k}", {"c": c, "k": k}
        elif fam == "psi-witness":
            k = _positive("k", args.k, 2)
            con = C.psi_witness(k)
            lg, tree, cls, params = con.graph, con.tree, "complete", {"k": k}
        elif fam == "phi-igood":
            m = _positive("m", args.m)
            i = _positive("i", args.i, 0)
            gp = C.phi_igood(m, i)
            lg, tree, cls, params = gp.construction.graph, gp.construction.tree, "complete", {"m": m, "i": i}
        elif fam == "usable-witness":
            m = _positive("m", args.m)
            d = _positive("d", args.d)
            uw = C.usable_witness(m, d)
            lg, tree = {"h0": (uw.h0, uw.h0_tree), "h": (uw.h, uw.h_tree), "g": (uw.g, uw.g_tree)}[args.part]
            cls, params = "complete", {"m": m, "d": d, "part": args.part}
        else:
            d = _positive("d", args.d, 3)
            base = _load_graph(args) if args.input else C.biclique_cage(d)
            lg = C.pendant_girth_graph(base, d)
            tree = C.decompose_small_cutsets(lg, 1, blocks=True)
            cls, params = "no-cutset<=1", {"d": d}
    except ValueError as exc:
        raise InputError("parameter-out-of-range", str(exc)) from None
    g = lg.graph
    _emit({"kind": "construction", "family": fam, "params": params, "n": g.n, "m": g.num_edges,
           "edgelist": dump_graph(g), "labels": list(lg.labels),
           "roles": {k: list(v) for k, v in lg.roles.items()},
           "basic_class": cls, "glue_tree": tree.to_json()}, args.out)
    return EXIT_OK


# -- oracle queries -----------------------------------------------------------------------

ORACLE_KINDS = ("frontier-basic", "cut-basic", "weight-block", "no-small-cutset-frontier")


def cmd_oracle(args) -> int:
    from . import oracle as O

    g = _load_graph(args)
    try:
        if args.kind == "frontier-basic":
            res = O.min_frontier_basic(g, _oracle(args.class_))
        elif args.kind == "cut-basic":
            res = O.min_cut_basic_block(g, _oracle(args.class_))
        elif args.kind == "weight-block":
            res = O.min_weight_connected_block(g, _positive("k", args.k), not args.no_prune)
        else:
            k = _positive("k", args.k)
            c = _positive("c", args.c, 0)
            res = O.check_no_small_cutset_frontier(g, k, c, not args.no_prune)
    except O.EnumerationLimit as exc:
        raise InputError("parameter-out-of-range", str(exc)) from None
    _emit({"kind": "oracle", "query": args.kind, **res.to_json()}, args.out)
    return EXIT_OK


# -- verification -----------------------------------------------------------------------------

SUBJECTS = ("isolation", "chunk2", "mader5", "color-extract", "glue-tree", "partition", "figure")


def cmd_verify(args) -> int:
    from .weights import CutPartition, validate_cut_partition

    cert = _load_json(args.cert) if args.cert else None
    subject = args.subject
    if subject == "glue-tree":
        return _verify_tree(args, cert)
    if subject == "figure":
        return _verify_figure(args)
    if cert is None:
        raise InputError("missing-input", "--cert is required")
    g = _load_graph(args)
    if subject == "isolation":
        violations = verify_isolation(g, _positive("k", args.k), cert)
    elif subject == "chunk2":
        violations = verify_psi2(g, cert)
    elif subject == "mader5":
        violations = verify_mader5(g, cert)
    elif subject == "color-extract":
        violations = verify_color_extract(g, _positive("k", args.k), _positive("c", args.c, 0), cert, args.limit)
    else:
        try:
            report = validate_cut_partition(g, CutPartition.from_json(cert.get("partition", cert)))
            violations = [] if report else [report.message]
        except (ValueError, GraphError) as exc:
            violations = [f"malformed partition: {exc}"]
    return _verdict(subject, violations, args.out)


def _verdict(subject: str, violations: list, out: str | None, **extra) -> int:
    _emit({"kind": "verification", "subject": subject, "ok": not violations,
           "violations": violations, **extra}, out)
    return EXIT_OK if not violations else EXIT_VIOLATION


def _verify_tree(args, cert: dict | None) -> int:
    from .constructions import realize, tree_from_json, validate_glue_tree

    if cert is None:
        raise InputError("missing-input", "--cert is required")
    try:
        tree = tree_from_json(cert.get("glue_tree", cert))
    except ValueError as exc:
        raise InputError("malformed-json", str(exc)) from None
    cls = _oracle(args.class_ or cert.get("basic_class", "complete"))
    report = validate_glue_tree(tree, cls, args.k)
    violations = [] if report else [report.message]
    if report and "edgelist" in cert:
        lg = realize(tree)
        try:
            claimed = from_edgelist(cert["edgelist"])
        except GraphFormatError as exc:
            raise InputError("malformed-graph", str(exc)) from None
        index = {name: i for i, name in enumerate(cert.get("labels", []))}
        if len(index) != claimed.n or set(index) != set(lg.labels):
            violations.append("realized labels differ from the certificate's label map")
        else:
            realized = {frozenset((index[lg.labels[u]], index[lg.labels[v]])) for u, v in lg.graph.edges()}
            if realized != {frozenset(e) for e in claimed.edges()}:
                violations.append("realized graph differs from the certificate's edge list")
    return _verdict("glue-tree", violations, args.out, leaves=report.leaves, glues=report.glues)


def _verify_figure(args) -> int:
    from .constructions import FigureClaim, LabeledGraph, verify_figure_candidate

    g = _load_graph(args)
    lg = LabeledGraph(g, tuple(str(v) for v in range(g.n)))
    allowed = [a for a in (args.allowed or "").split(",") if a]
    try:
        claim = FigureClaim(args.claim)
        report = verify_figure_candidate(lg, claim, allowed, _oracle(args.class_) if args.class_ else None)
    except (ValueError, KeyError) as exc:
        raise InputError("parameter-out-of-range", str(exc)) from None
    doc = report.to_json()
    return _verdict("figure", list(doc["violations"]), args.out,
                    claim=doc["claim"], in_class=doc["in_class"], details=doc["details"])


# -- conversion ----------------------------------------------------------------------------------


def cmd_convert(args) -> int:
    g = _load_graph(args)
    text = dump_graph(g, args.to)
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)
    return EXIT_OK


# -- parser ------------------------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="isolator", description="Isolating highly connected induced subgraphs.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, graph: bool = True):
        if graph:
            p.add_argument("--in", dest="input", help="graph file (edge list or graph6; '-' for stdin)")
            p.add_argument("--format", choices=("edgelist", "graph6"), help="input format (default: by suffix)")
        p.add_argument("--out", help="also write the output to this file")

    p = sub.add_parser("isolate", help="isolate a (k+1)-connected block behind a light cutset")
    common(p)
    p.add_argument("--k", type=int)
    p.add_argument("--method", choices=METHODS, default="flow")
    p.set_defaults(func=cmd_isolate)

    p = sub.add_parser("chunk2", help="3-connected block behind at most 5 vertices, or a vertex of degree <= 5")
    common(p)
    p.set_defaults(func=cmd_chunk2)

    p = sub.add_parser("mader5", help="3-connected induced subgraph or a low-degree certificate")
    common(p)
    p.set_defaults(func=cmd_mader5)

    p = sub.add_parser("color-extract", help="(k+1)-connected induced subgraph with chromatic number above c")
    common(p)
    p.add_argument("--k", type=int)
    p.add_argument("--c", type=int)
    p.add_argument("--limit", type=int, default=DEFAULT_LIMIT, help="largest graph for exact coloring")
    p.set_defaults(func=cmd_color_extract)

    p = sub.add_parser("construct", help="generate a witness family with its glue tree")
    p.add_argument("family", choices=FAMILIES)
    common(p)
    for name in ("k", "c", "m", "i", "d"):
        p.add_argument(f"--{name}", type=int)
    p.add_argument("--part", choices=("h0", "h", "g"), default="g", help="usable-witness graph to emit")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("oracle", help="brute-force minima over vertex subsets")
    p.add_argument("kind", choices=ORACLE_KINDS)
    common(p)
    p.add_argument("--k", type=int)
    p.add_argument("--c", type=int)
    p.add_argument("--class", dest="class_", default="complete",
                   help="complete, k6-minus-edge or order<=M")
    p.add_argument("--no-prune", action="store_true", help="plain subset enumeration (at most 20 vertices)")
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("verify", help="check a certificate; exit 3 on violation")
    p.add_argument("subject", choices=SUBJECTS)
    common(p)
    p.add_argument("--cert", help="certificate JSON")
    p.add_argument("--k", type=int)
    p.add_argument("--c", type=int)
    p.add_argument("--class", dest="class_", help="basic class for glue-tree / figure checks")
    p.add_argument("--claim", choices=("phi2-chain", "min-degree-4"), default="min-degree-4")
    p.add_argument("--allowed", help="comma-separated vertex ids allowed by the phi2-chain claim")
    p.add_argument("--limit", type=int, default=DEFAULT_LIMIT)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("convert", help="convert between edge-list and graph6")
    common(p)
    p.add_argument("--to", choices=("edgelist", "graph6"), required=True)
    p.set_defaults(func=cmd_convert)
    return parser


def run(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except InputError as exc:
        print(f"isolator: {exc}", file=sys.stderr)
        _emit({"kind": "error", "error": exc.kind, "message": str(exc)}, None)
        return EXIT_INPUT


def main() -> None:
    sys.exit(run())


__all__ = ["EXIT_INPUT", "EXIT_OK", "EXIT_VIOLATION", "build_parser", "main", "run"]
