"""Shared brute-force helpers.  Everything here is deliberately naive so it
can serve as an independent check on the optimised code."""

from itertools import combinations, permutations

import networkx as nx
import pytest
from hypothesis import strategies as st

from genturan.graph import Graph


def brute_count_copies(g: Graph, t: Graph) -> int:
    """Distinct edge sets of subgraphs isomorphic to t, found by trying every
    ordered choice of |V(t)| host vertices."""
    seen = set()
    te = list(t.edges)
    for verts in permutations(range(g.n), t.n):
        if all(g.has_edge(verts[a], verts[b]) for a, b in te):
            seen.add(frozenset(frozenset((verts[a], verts[b])) for a, b in te))
    return len(seen)


def brute_contains(g: Graph, h: Graph) -> bool:
    te = list(h.edges)
    return any(all(g.has_edge(p[a], p[b]) for a, b in te) for p in permutations(range(g.n), h.n))


def all_graphs(n: int):
    """Every labelled graph on n vertices."""
    pairs = list(combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        yield Graph(n, [pairs[i] for i in range(len(pairs)) if mask >> i & 1])


def nx_to_graph(h: nx.Graph) -> Graph:
    idx = {v: i for i, v in enumerate(sorted(h.nodes))}
    return Graph(len(idx), [(idx[a], idx[b]) for a, b in h.edges if a != b])


@st.composite
def graphs(draw, min_n=0, max_n=8):
    n = draw(st.integers(min_n, max_n))
    pairs = list(combinations(range(n), 2))
    keep = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph(n, [e for e, k in zip(pairs, keep) if k])


@pytest.fixture
def petersen():
    from genturan.graph import petersen_graph

    return petersen_graph()
