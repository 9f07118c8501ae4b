"""Canonical labelling by partition refinement and individualisation.

The search tree is the usual one: refine the ordered partition to an
equitable one, individualise each vertex of the first smallest
non-singleton cell, recurse.  Every leaf gives a relabelling; the
canonical form is the lexicographically largest relabelled adjacency.
Automorphisms found when two leaves coincide prune sibling branches that
lie in one orbit of the pointwise stabiliser of the current prefix.
"""

from __future__ import annotations

from typing import Sequence

from .graph import Graph, _bits
from .graph6 import encode_g6


def refine(adj: Sequence[int], cells: list[list[int]]) -> list[list[int]]:
    """Coarsest equitable refinement of an ordered partition.

    Split order depends only on neighbour counts, so the procedure commutes
    with relabelling.
    """
    cells = [list(c) for c in cells]
    while True:
        masks = [sum(1 << v for v in c) for c in cells]
        out: list[list[int]] = []
        split = False
        for c in cells:
            if len(c) == 1:
                out.append(c)
                continue
            sig: dict[tuple[int, ...], list[int]] = {}
            for v in c:
                row = adj[v]
                sig.setdefault(tuple((row & m).bit_count() for m in masks), []).append(v)
            if len(sig) == 1:
                out.append(c)
                continue
            split = True
            for key in sorted(sig):
                out.append(sig[key])
        cells = out
        if not split:
            return cells


def _certificate(adj: Sequence[int], order: Sequence[int]) -> tuple[int, ...]:
    pos = {v: i for i, v in enumerate(order)}
    rows = []
    for v in order:
        r = 0
        for w in _bits(adj[v]):
            r |= 1 << pos[w]
        rows.append(r)
    return tuple(rows)


class _Orbits:
    def __init__(self, n: int):
        self.parent = list(range(n))

    def find(self, x: int) -> int:
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, a: int, b: int) -> None:
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[max(ra, rb)] = min(ra, rb)


def canonical_form(adj: Sequence[int], n: int | None = None):
    """Return (certificate, order, automorphisms).

    ``order[i]`` is the vertex placed at position i of the canonical
    labelling; ``automorphisms`` are the ones met during the search.
    """
    n = len(adj) if n is None else n
    if n == 0:
        return (), [], []
    best: list = [None, None]
    seen_leaves: dict[tuple[int, ...], tuple[list[int], list[int]]] = {}
    automorphisms: list[list[int]] = []

    def leaf(order: list[int], prefix: list[int]) -> int | None:
        cert = _certificate(adj, order)
        hit = seen_leaves.get(cert)
        if hit is not None:
            other, other_prefix = hit
            gamma = [0] * n
            for a, b in zip(order, other):
                gamma[a] = b
            automorphisms.append(gamma)
            # the subtree below the common ancestor is an image of one
            # already explored: jump back to that ancestor
            d = 0
            while d < len(prefix) and d < len(other_prefix) and prefix[d] == other_prefix[d]:
                d += 1
            return d
        seen_leaves[cert] = (order, prefix)
        if best[0] is None or cert > best[0]:
            best[0], best[1] = cert, order
        return None

    def search(cells: list[list[int]], prefix: list[int]) -> int | None:
        cells = refine(adj, cells)
        if len(cells) == n:
            return leaf([c[0] for c in cells], prefix)
        depth = len(prefix)
        idx = min((i for i, c in enumerate(cells) if len(c) > 1), key=lambda i: (len(cells[i]), i))
        target = cells[idx]
        tried: list[int] = []
        for v in sorted(target):
            if tried and automorphisms:
                orb = _Orbits(n)
                for g in automorphisms:
                    if all(g[p] == p for p in prefix):
                        for x in range(n):
                            orb.union(x, g[x])
                rv = orb.find(v)
                if any(orb.find(w) == rv for w in tried):
                    continue
            rest = [w for w in target if w != v]
            jump = search(cells[:idx] + [[v], rest] + cells[idx + 1 :], prefix + [v])
            tried.append(v)
            if jump is not None and jump < depth:
                return jump
        return None

    search([list(range(n))], [])
    return best[0], best[1], automorphisms


def canonical_relabeling(g: Graph) -> list[int]:
    """perm with perm[v] = canonical position of v."""
    g.require_simple("canonical labelling")
    _, order, _ = canonical_form(g.adj, g.n)
    perm = [0] * g.n
    for i, v in enumerate(order):
        perm[v] = i
    return perm


def canonical_graph(g: Graph) -> Graph:
    return g.relabel(canonical_relabeling(g)) if g.n else g


def canonical_label(g: Graph) -> bytes:
    """Byte string equal for two graphs iff they are isomorphic.

    The bytes are the graph6 encoding of the canonical relabelling.
    """
    g.require_simple("canonical_label")
    return encode_g6(canonical_graph(g)).encode("ascii")


def canonical_label_adj(adj: Sequence[int]) -> bytes:
    """Fast path for enumeration code that works on raw bitmask rows."""
    cert, _, _ = canonical_form(adj)
    n = len(adj)
    return bytes([n & 0xFF, n >> 8]) + b"".join(r.to_bytes((n + 7) // 8 or 1, "little") for r in cert)


def automorphism_generators(g: Graph) -> list[list[int]]:
    """Automorphisms met by the canonical search (used to prune augmentations)."""
    g.require_simple("automorphism_generators")
    return canonical_form(g.adj, g.n)[2]


def is_isomorphic(g1: Graph, g2: Graph) -> bool:
    g1.require_simple("is_isomorphic")
    g2.require_simple("is_isomorphic")
    if g1.n != g2.n or g1.m != g2.m:
        return False
    if sorted(g1.degrees()) != sorted(g2.degrees()):
        return False
    return canonical_label(g1) == canonical_label(g2)
