"""Exact subgraph counting, freeness tests, spectral summaries and the
friendship-graph finder."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from .graph import Graph, GraphError, _bits
from .matcher import Matcher, has_embedding


def _is_clique(t: Graph) -> bool:
    return t.m == t.n * (t.n - 1) // 2


def automorphism_count(t: Graph) -> int:
    """|Aut(t)| as the number of injective edge-preserving maps t -> t."""
    t.require_simple("automorphism_count")
    return Matcher(t, t).count()


def count_cliques(g: Graph, k: int) -> int:
    """Number of K_k subgraphs, by ordered clique extension on bitmasks."""
    g = g.strip_loops()
    if k == 0:
        return 1
    if k == 1:
        return g.n
    adj = g.adj
    total = 0

    def extend(cand: int, depth: int) -> int:
        if depth == 1:
            return cand.bit_count()
        s = 0
        while cand:
            low = cand & -cand
            v = low.bit_length() - 1
            cand ^= low
            # only larger neighbours keep each clique counted once
            s += extend(cand & adj[v], depth - 1)
        return s

    for v in range(g.n):
        higher = adj[v] >> (v + 1) << (v + 1)
        total += extend(higher, k - 1)
    return total


def count_triangles(g: Graph) -> int:
    return count_cliques(g, 3)


def count_copies(g: Graph, t: Graph) -> int:
    """Number of (not necessarily induced) copies of t in g."""
    g.require_simple("count_copies (host)")
    t.require_simple("count_copies (pattern)")
    if t.isolated_vertices():
        raise GraphError("pattern must not have isolated vertices")
    if t.n > 10:
        raise GraphError("pattern limited to 10 vertices")
    if _is_clique(t):
        return count_cliques(g, t.n)
    return Matcher(t, g).count() // automorphism_count(t)


def count_copies_through_edge(g: Graph, t: Graph, u: int, v: int) -> int:
    """Copies of t in g + uv that use the edge uv."""
    h = g if g.has_edge(u, v) else g.add_edge(u, v)
    if _is_clique(t):
        common = h.adj[u] & h.adj[v]
        return count_cliques(h.induced(_bits(common)), t.n - 2) if t.n > 2 else 1
    total = 0
    for a, b in t.edges:
        total += Matcher(t, h, {a: u, b: v}).count()
        total += Matcher(t, h, {a: v, b: u}).count()
    return total // automorphism_count(t)


def contains_copy(g: Graph, h: Graph) -> bool:
    """True iff g has a subgraph isomorphic to h.

    Hosts produced by a partial blow-up carry sibling metadata; the search
    then only opens the first untouched copy of each replicated component.
    """
    siblings = getattr(g, "siblings", None)
    g = g.strip_loops()
    h.require_simple("contains_copy (pattern)")
    if h.n > g.n or h.m > g.m:
        return False
    if h.n >= 1 and _is_clique(h):
        return _has_clique(g, h.n)
    return has_embedding(h, g, siblings=siblings)


def contains_copy_through_edge(g: Graph, h: Graph, u: int, v: int) -> bool:
    """Does g + uv contain a copy of h using the edge uv?"""
    hg = g if g.has_edge(u, v) else g.add_edge(u, v)
    for a, b in h.edges:
        if Matcher(h, hg, {a: u, b: v}).exists() or Matcher(h, hg, {a: v, b: u}).exists():
            return True
    return False


def _has_clique(g: Graph, k: int) -> bool:
    adj = g.adj

    def grow(cand: int, need: int) -> bool:
        if need == 0:
            return True
        if cand.bit_count() < need:
            return False
        while cand:
            low = cand & -cand
            v = low.bit_length() - 1
            cand ^= low
            if grow(cand & adj[v], need - 1):
                return True
        return False

    return grow((1 << g.n) - 1, k)


def is_free(g: Graph, h: Graph) -> bool:
    return not contains_copy(g, h)


def is_kst_free(g: Graph, s: int, t: int) -> bool:
    """K_{s,t}-freeness of the loop-stripped graph via common neighbourhoods
    of every s-set (s <= t)."""
    g = g.strip_loops()
    s, t = min(s, t), max(s, t)
    adj = g.adj
    # sets of s vertices whose common neighbourhood reaches t
    def rec(start: int, depth: int, common: int, members: int) -> bool:
        if depth == s:
            return (common & ~members).bit_count() >= t
        for v in range(start, g.n):
            c = common & adj[v]
            if c.bit_count() < t:
                continue
            if rec(v + 1, depth + 1, c, members | 1 << v):
                return True
        return False

    return not rec(0, 0, (1 << g.n) - 1, 0)


def common_neighbor_count(g: Graph, u: int, v: int) -> int:
    """|N(u) & N(v)|, where a looped endpoint adjacent to the other one
    counts itself as a common neighbour."""
    if u == v:
        raise GraphError("common_neighbor_count needs two distinct vertices")
    common = (g.adj[u] & g.adj[v]).bit_count()
    if g.adj[u] >> v & 1:
        common += (u in g.loops) + (v in g.loops)
    return common


def closed_walk_count_3(g: Graph) -> int:
    """trace(A^3) with loop entries 1, in exact integer arithmetic."""
    a = g.adjacency_matrix(loop_value=1).astype(object) if g.n > 3000 else g.adjacency_matrix(loop_value=1)
    a2 = a @ a
    return int((a2 * a.T).sum())


@dataclass
class SpectrumSummary:
    eigenvalues: list[float]
    clusters: list[tuple[float, int]] = field(default_factory=list)
    tol: float = 1e-7

    def multiplicities(self, digits: int = 6) -> dict[float, int]:
        return {round(v, digits) + 0.0: m for v, m in self.clusters}

    def matches(self, expected: dict[float, int], tol: float = 1e-6) -> bool:
        remaining = dict(self.clusters)
        if len(expected) != len(remaining):
            return False
        for val, mult in expected.items():
            hit = [c for c in remaining if abs(c - val) <= tol]
            if len(hit) != 1 or remaining[hit[0]] != mult:
                return False
            del remaining[hit[0]]
        return not remaining


def cluster_values(values: Sequence[float], tol: float) -> list[tuple[float, int]]:
    out: list[list[float]] = []
    for x in sorted(values):
        if out and x - out[-1][-1] <= tol:
            out[-1].append(x)
        else:
            out.append([x])
    return [(float(np.mean(c)), len(c)) for c in out]


def spectrum(g: Graph, tol: float = 1e-7) -> SpectrumSummary:
    if g.n > 2000:
        raise GraphError("spectrum limited to n <= 2000")
    if g.n == 0:
        return SpectrumSummary([], [], tol)
    vals = np.linalg.eigvalsh(g.adjacency_matrix(loop_value=1).astype(float))
    vals = sorted(float(x) for x in vals)
    return SpectrumSummary(vals, cluster_values(vals, tol), tol)


def edge_triangle_counts(g: Graph) -> dict[tuple[int, int], int]:
    g = g.strip_loops()
    return {(u, v): (g.adj[u] & g.adj[v]).bit_count() for u, v in g.edges}


def max_book_width(g: Graph) -> int:
    """Largest number of triangles on a single edge."""
    counts = edge_triangle_counts(g)
    return max(counts.values(), default=0)


# -- friendship graphs ---------------------------------------------------------


@dataclass
class FriendshipEmbedding:
    hub: int
    pairs: list[tuple[int, int]]

    @property
    def leaves(self) -> list[int]:
        return [x for p in self.pairs for x in p]

    def is_valid(self, g: Graph, c: int) -> bool:
        vs = [self.hub] + self.leaves
        if len(self.pairs) != c or len(set(vs)) != len(vs):
            return False
        return all(g.has_edge(self.hub, a) and g.has_edge(self.hub, b) and g.has_edge(a, b) for a, b in self.pairs)


def friendship_threshold(c: int, n: int) -> int:
    """Triangle count guaranteeing an F_c in an n-vertex graph, c >= 2."""
    return (9 * c - 15) * (c + 1) * n


def _greedy_edge_disjoint_triangles(g: Graph) -> list[tuple[int, int, int]]:
    used: set[tuple[int, int]] = set()
    family = []
    for a in range(g.n):
        for b in _bits(g.adj[a] >> (a + 1) << (a + 1)):
            for c in _bits(g.adj[a] & g.adj[b] >> (b + 1) << (b + 1)):
                es = ((a, b), (a, c), (b, c))
                if any(e in used for e in es):
                    continue
                used.update(es)
                family.append((a, b, c))
    return family


def find_friendship(g: Graph, c: int) -> FriendshipEmbedding | None:
    """Look for F_c following the maximal edge-disjoint triangle argument.

    1. Greedy maximal family of edge-disjoint triangles.  A vertex on c of
       them is the hub of an F_c.
    2. Otherwise colour the family greedily (smallest free colour, no two
       triangles of one colour share a vertex), and for each colour class
       (largest first) group every triangle of g sharing an edge with a
       coloured triangle into that triangle's cluster.  A vertex external to
       c distinct clusters is the hub of an F_c.

    Success is guaranteed once g has (9c-15)(c+1)n triangles; below that
    the search may still succeed.  Returns None when it finds nothing.
    """
    g.require_simple("find_friendship")
    if c < 1:
        raise GraphError("c must be >= 1")
    family = _greedy_edge_disjoint_triangles(g)
    at: dict[int, list[tuple[int, int, int]]] = {}
    for tri in family:
        for v in tri:
            at.setdefault(v, []).append(tri)
    for v in sorted(at):
        if len(at[v]) >= c:
            pairs = [tuple(x for x in tri if x != v) for tri in at[v][:c]]
            return FriendshipEmbedding(v, pairs)
    if c < 2 or not family:
        return None

    # greedy proper colouring of the family (conflict = shared vertex)
    color: list[int] = []
    for i, tri in enumerate(family):
        taken = {color[j] for j in range(i) if set(tri) & set(family[j])}
        k = 0
        while k in taken:
            k += 1
        color.append(k)

    classes: dict[int, list[int]] = {}
    for i, k in enumerate(color):
        classes.setdefault(k, []).append(i)

    edge_owner: dict[int, dict[tuple[int, int], int]] = {}
    for k, idxs in classes.items():
        owner = {}
        for i in idxs:
            a, b, cc = family[i]
            for e in ((a, b), (a, cc), (b, cc)):
                owner[e] = i
        edge_owner[k] = owner

    all_triangles = [
        (a, b, cc)
        for a in range(g.n)
        for b in _bits(g.adj[a] >> (a + 1) << (a + 1))
        for cc in _bits(g.adj[a] & g.adj[b] >> (b + 1) << (b + 1))
    ]

    def cluster_size(k: int) -> int:
        owner = edge_owner[k]
        return sum(1 for (a, b, cc) in all_triangles if (a, b) in owner or (a, cc) in owner or (b, cc) in owner)

    for k in sorted(classes, key=lambda k: (-cluster_size(k), k)):
        owner = edge_owner[k]
        # external vertex -> {cluster id: the centre edge it attaches to}
        external: dict[int, dict[int, tuple[int, int]]] = {}
        for a, b, cc in all_triangles:
            for e, x in (((a, b), cc), ((a, cc), b), ((b, cc), a)):
                i = owner.get(e)
                if i is None or x in family[i]:
                    continue
                external.setdefault(x, {}).setdefault(i, e)
        for x in sorted(external):
            clusters = external[x]
            if len(clusters) >= c:
                pairs = [clusters[i] for i in sorted(clusters)[:c]]
                return FriendshipEmbedding(x, [tuple(p) for p in pairs])
    return None


def find_friendship_exact(g: Graph, c: int) -> FriendshipEmbedding | None:
    """Exhaustive F_c search (reference oracle)."""
    from .constructions import friendship

    emb = Matcher(friendship(c), g.strip_loops()).first()
    if emb is None:
        return None
    return FriendshipEmbedding(emb[0], [(emb[2 * i + 1], emb[2 * i + 2]) for i in range(c)])
