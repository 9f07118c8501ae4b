"""Small dense undirected graphs with optional loops.

Adjacency is kept as one integer bitmask per vertex.  Loops live in a
separate set so the simple-graph algorithms never see them; a Graph with
no loops is *simple*.
"""

from __future__ import annotations

import json
from functools import cached_property
from itertools import combinations
from typing import Iterable, Iterator, Sequence


class GraphError(ValueError):
    pass


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class Graph:
    """Undirected graph on vertices ``0..n-1``.

    Instances are treated as immutable; every "modifying" method returns a
    new graph.
    """

    __slots__ = ("n", "adj", "loops", "__dict__")

    def __init__(self, n: int, edges: Iterable[Sequence[int]] = (), loops: Iterable[int] = ()):
        if n < 0:
            raise GraphError(f"negative vertex count {n}")
        adj = [0] * n
        for e in edges:
            u, v = e
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge {(u, v)} out of range for n={n}")
            if u == v:
                raise GraphError(f"self-pair {(u, v)} in edge list; use loops=")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        lp = frozenset(loops)
        for v in lp:
            if not 0 <= v < n:
                raise GraphError(f"loop vertex {v} out of range for n={n}")
        self.n = n
        self.adj = tuple(adj)
        self.loops = lp

    @classmethod
    def from_adjacency(cls, adj: Sequence[int], loops: Iterable[int] = ()) -> "Graph":
        g = cls.__new__(cls)
        g.n = len(adj)
        g.adj = tuple(adj)
        g.loops = frozenset(loops)
        for v, row in enumerate(g.adj):
            if row >> v & 1 or row >> g.n:
                raise GraphError(f"bad adjacency row for vertex {v}")
        return g

    # -- basic queries ------------------------------------------------------

    @cached_property
    def edges(self) -> frozenset[tuple[int, int]]:
        return frozenset((u, v) for u in range(self.n) for v in _bits(self.adj[u] >> (u + 1) << (u + 1)))

    def edge_list(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    @property
    def m(self) -> int:
        return sum(r.bit_count() for r in self.adj) // 2

    @property
    def is_simple(self) -> bool:
        return not self.loops

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def neighbors(self, v: int) -> list[int]:
        return list(_bits(self.adj[v]))

    def degree(self, v: int, count_loops: bool = False) -> int:
        d = self.adj[v].bit_count()
        if count_loops and v in self.loops:
            d += 1
        return d

    def degrees(self, count_loops: bool = False) -> list[int]:
        return [self.degree(v, count_loops) for v in range(self.n)]

    def require_simple(self, what: str = "operation") -> None:
        if self.loops:
            raise GraphError(f"{what} requires a simple graph (found {len(self.loops)} loops)")

    def isolated_vertices(self) -> list[int]:
        return [v for v in range(self.n) if not self.adj[v]]

    # -- derived graphs -----------------------------------------------------

    def strip_loops(self) -> "Graph":
        return Graph.from_adjacency(self.adj)

    def add_edge(self, u: int, v: int) -> "Graph":
        if u == v:
            raise GraphError("use loops= for self-loops")
        adj = list(self.adj)
        adj[u] |= 1 << v
        adj[v] |= 1 << u
        return Graph.from_adjacency(adj, self.loops)

    def remove_edge(self, u: int, v: int) -> "Graph":
        adj = list(self.adj)
        adj[u] &= ~(1 << v)
        adj[v] &= ~(1 << u)
        return Graph.from_adjacency(adj, self.loops)

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Vertex ``v`` becomes ``perm[v]``."""
        if sorted(perm) != list(range(self.n)):
            raise GraphError("relabel needs a permutation of range(n)")
        return Graph(self.n, [(perm[u], perm[v]) for u, v in self.edges], [perm[v] for v in self.loops])

    def induced(self, vertices: Iterable[int]) -> "Graph":
        vs = sorted(set(vertices))
        pos = {v: i for i, v in enumerate(vs)}
        keep = sum(1 << v for v in vs)
        edges = [(pos[u], pos[w]) for u in vs for w in _bits(self.adj[u] & keep) if u < w]
        return Graph(len(vs), edges, [pos[v] for v in self.loops if v in pos])

    def complement(self) -> "Graph":
        self.require_simple("complement")
        full = (1 << self.n) - 1
        return Graph.from_adjacency([full & ~row & ~(1 << v) for v, row in enumerate(self.adj)])

    def disjoint_union(self, other: "Graph") -> "Graph":
        off = self.n
        edges = list(self.edges) + [(u + off, v + off) for u, v in other.edges]
        loops = list(self.loops) + [v + off for v in other.loops]
        return Graph(self.n + other.n, edges, loops)

    # -- adjacency matrix / serialisation ------------------------------------

    def adjacency_matrix(self, loop_value: int = 1):
        import numpy as np

        a = np.zeros((self.n, self.n), dtype=np.int64)
        for u, v in self.edges:
            a[u, v] = a[v, u] = 1
        for v in self.loops:
            a[v, v] = loop_value
        return a

    def to_dict(self) -> dict:
        return {"n": self.n, "edges": [list(e) for e in self.edge_list()], "loops": sorted(self.loops)}

    @classmethod
    def from_dict(cls, d: dict) -> "Graph":
        try:
            return cls(int(d["n"]), [tuple(e) for e in d.get("edges", [])], d.get("loops", []))
        except (KeyError, TypeError) as exc:
            raise GraphError(f"bad graph JSON: {exc}") from exc

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_json(cls, text: str) -> "Graph":
        return cls.from_dict(json.loads(text))

    def to_networkx(self):
        import networkx as nx

        g = nx.Graph()
        g.add_nodes_from(range(self.n))
        g.add_edges_from(self.edges)
        g.add_edges_from((v, v) for v in self.loops)
        return g

    # -- dunder -------------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.adj == other.adj and self.loops == other.loops

    def __hash__(self) -> int:
        return hash((self.n, self.adj, self.loops))

    def __repr__(self) -> str:
        extra = f", loops={sorted(self.loops)}" if self.loops else ""
        return f"Graph(n={self.n}, m={self.m}{extra})"


# -- standard small graphs ----------------------------------------------------


def empty_graph(n: int) -> Graph:
    return Graph(n)


def complete_graph(n: int) -> Graph:
    return Graph(n, combinations(range(n), 2))


def path_graph(n: int) -> Graph:
    """Path on ``n`` vertices."""
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise GraphError("cycles need at least 3 vertices")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def star_graph(leaves: int) -> Graph:
    """K_{1,leaves} with centre 0."""
    return Graph(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def complete_bipartite(a: int, b: int) -> Graph:
    return Graph(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def petersen_graph() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph(10, outer + spokes + inner)


def cube_graph() -> Graph:
    return Graph(8, [(u, u ^ (1 << b)) for u in range(8) for b in range(3) if u < u ^ (1 << b)])


def disjoint_copies(g: Graph, k: int) -> Graph:
    out = Graph(0)
    for _ in range(k):
        out = out.disjoint_union(g)
    return out


# -- structural queries -------------------------------------------------------


def two_core(g: Graph) -> tuple[Graph, list[int]]:
    """Strip vertices of degree <= 1 until none remain.

    Returns the induced core and the sorted list of surviving original
    vertex indices.
    """
    g.require_simple("two_core")
    alive = (1 << g.n) - 1
    changed = True
    while changed:
        changed = False
        for v in _bits(alive):
            if (g.adj[v] & alive).bit_count() <= 1:
                alive &= ~(1 << v)
                changed = True
    keep = list(_bits(alive))
    return g.induced(keep), keep


def degeneracy(g: Graph) -> int:
    g = g.strip_loops()
    alive = (1 << g.n) - 1
    best = 0
    while alive:
        v = min(_bits(alive), key=lambda x: (g.adj[x] & alive).bit_count())
        best = max(best, (g.adj[v] & alive).bit_count())
        alive &= ~(1 << v)
    return best


def connected_components(g: Graph, within: int | None = None) -> list[list[int]]:
    """Components of the subgraph induced by the ``within`` vertex mask."""
    todo = (1 << g.n) - 1 if within is None else within
    comps = []
    while todo:
        start = todo & -todo
        seen = start
        frontier = start
        while frontier:
            nxt = 0
            for v in _bits(frontier):
                nxt |= g.adj[v]
            nxt &= todo & ~seen
            seen |= nxt
            frontier = nxt
        todo &= ~seen
        comps.append(list(_bits(seen)))
    return comps


def is_connected(g: Graph) -> bool:
    return g.n <= 1 or len(connected_components(g)) == 1


def is_tree(g: Graph) -> bool:
    return g.is_simple and g.n >= 1 and g.m == g.n - 1 and is_connected(g)


def bipartition(g: Graph) -> tuple[list[int], list[int]] | None:
    """Two-colouring (side 0, side 1) or None when g has an odd cycle."""
    color = [-1] * g.n
    for s in range(g.n):
        if color[s] >= 0:
            continue
        color[s] = 0
        stack = [s]
        while stack:
            v = stack.pop()
            for w in _bits(g.adj[v]):
                if color[w] < 0:
                    color[w] = 1 - color[v]
                    stack.append(w)
                elif color[w] == color[v]:
                    return None
    return [v for v in range(g.n) if color[v] == 0], [v for v in range(g.n) if color[v] == 1]


def has_cycle_length_in(g: Graph, lo: int, hi: int) -> bool:
    """Exact test for a simple cycle whose length lies in ``[lo, hi]``."""
    g.require_simple("has_cycle_length_in")
    if not 3 <= lo <= hi:
        raise GraphError(f"need 3 <= lo <= hi, got {lo}, {hi}")
    hi = min(hi, g.n)
    adj = g.adj
    # cycles are rooted at their smallest vertex; paths only use larger ones
    for s in range(g.n):
        above = ~((1 << (s + 1)) - 1)
        stack = [(s, 1 << s, 1)]
        while stack:
            v, used, length = stack.pop()
            if length >= lo and adj[v] >> s & 1:
                return True
            if length == hi:
                continue
            for w in _bits(adj[v] & above & ~used):
                stack.append((w, used | 1 << w, length + 1))
    return False


def cycle_lengths(g: Graph, max_len: int | None = None) -> set[int]:
    """All lengths of simple cycles in g (up to ``max_len``)."""
    g.require_simple("cycle_lengths")
    top = g.n if max_len is None else min(max_len, g.n)
    found = set()
    adj = g.adj
    for s in range(g.n):
        above = ~((1 << (s + 1)) - 1)
        stack = [(s, 1 << s, 1)]
        while stack:
            v, used, length = stack.pop()
            if length >= 3 and adj[v] >> s & 1:
                found.add(length)
            if length == top:
                continue
            for w in _bits(adj[v] & above & ~used):
                stack.append((w, used | 1 << w, length + 1))
    return found


def has_hamilton_path(g: Graph) -> bool:
    """Held-Karp style DP over vertex subsets."""
    g = g.strip_loops()
    n = g.n
    if n <= 1:
        return True
    full = (1 << n) - 1
    # reach[mask] = set of end vertices of paths covering exactly mask
    reach = [0] * (1 << n)
    for v in range(n):
        reach[1 << v] = 1 << v
    for mask in range(1, full + 1):
        ends = reach[mask]
        if not ends:
            continue
        for v in _bits(ends):
            for w in _bits(g.adj[v] & ~mask):
                reach[mask | 1 << w] |= 1 << w
    return reach[full] != 0
