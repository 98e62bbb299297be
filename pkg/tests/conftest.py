from __future__ import annotations

import random

import networkx as nx
import pytest
from hypothesis import strategies as st

from isolator.graph import Graph


def from_nx(h: nx.Graph) -> Graph:
    index = {v: i for i, v in enumerate(sorted(h.nodes()))}
    return Graph.from_edges(len(index), ((index[u], index[v]) for u, v in h.edges()))


def atlas(max_n: int, connected: bool = True) -> list[Graph]:
    """Every graph on 1..max_n vertices up to isomorphism (max_n <= 7)."""
    out = []
    for h in nx.graph_atlas_g()[1:]:
        if h.number_of_nodes() > max_n:
            break
        if not connected or nx.is_connected(h):
            out.append(from_nx(h))
    return out


def random_graph(rng: random.Random, n: int, p: float | None = None) -> Graph:
    p = rng.random() if p is None else p
    return Graph.from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p])


def random_graphs(seed: int, count: int, n_lo: int, n_hi: int, p: float | None = None) -> list[Graph]:
    rng = random.Random(seed)
    return [random_graph(rng, rng.randint(n_lo, n_hi), p) for _ in range(count)]


def glue_cliques(sizes: list[int], overlaps: list[int]) -> Graph:
    """A chain of cliques, each sharing ``overlaps[i]`` vertices with the previous one."""
    edges: set = set()
    start = 0
    prev: list[int] = []
    nxt = 0
    for i, s in enumerate(sizes):
        shared = prev[len(prev) - overlaps[i - 1]:] if i else []
        fresh = list(range(nxt, nxt + s - len(shared)))
        nxt += len(fresh)
        clique = shared + fresh
        edges |= {(min(u, v), max(u, v)) for u in clique for v in clique if u != v}
        prev = clique
        start = nxt
    return Graph.from_edges(start, edges)


@st.composite
def graphs(draw, max_n: int = 10, min_n: int = 0):
    n = draw(st.integers(min_n, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    chosen = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph.from_edges(n, [e for e, keep in zip(pairs, chosen) if keep])


@st.composite
def graph_and_set(draw, max_n: int = 10, min_n: int = 1):
    g = draw(graphs(max_n, min_n))
    s = draw(st.integers(0, (1 << g.n) - 1))
    return g, s


@pytest.fixture
def two_k4() -> Graph:
    """Two K_4's sharing vertex 3."""
    return glue_cliques([4, 4], [1])


# acceptance verdicts, one line per criterion, shown after the test session
ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[2].rstrip(":"))):
            terminalreporter.write_line(line)
