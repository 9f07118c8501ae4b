"""Exact ex(n, T, H) by isomorph-free enumeration of H-free graphs, a
hill-climbing lower-bound search, and a JSON-lines certificate store."""

from __future__ import annotations

import json
import logging
import os
import random
import time
from dataclasses import asdict, dataclass
from itertools import combinations
from pathlib import Path

from . import __version__
from .canon import _Orbits, canonical_form, canonical_label, canonical_label_adj
from .graph import Graph, GraphError
from .graph6 import decode_g6, encode_g6
from .matcher import Matcher
from .counting import contains_copy, count_copies, count_copies_through_edge

log = logging.getLogger(__name__)

EXACT_LIMIT = 10


@dataclass
class Certificate:
    n: int
    t_g6: str
    h_g6: str
    value: int
    kind: str  # "exact" or "lower-bound"
    witness_g6: str
    method: str  # "exhaustive" or "hillclimb"
    seed: int | None = None
    elapsed: float = 0.0
    version: str = __version__

    def witness(self) -> Graph:
        return decode_g6(self.witness_g6)

    def to_json(self) -> str:
        return json.dumps(asdict(self), sort_keys=True)

    @classmethod
    def from_json(cls, text: str) -> "Certificate":
        return cls(**json.loads(text))

    def verify(self) -> None:
        """Raise GraphError unless the witness backs the claimed value."""
        if self.kind not in ("exact", "lower-bound"):
            raise GraphError(f"unknown certificate kind {self.kind!r}")
        w, t, h = self.witness(), decode_g6(self.t_g6), decode_g6(self.h_g6)
        if w.n != self.n:
            raise GraphError(f"witness has {w.n} vertices, expected {self.n}")
        if contains_copy(w, h):
            raise GraphError("witness contains the forbidden graph")
        got = count_copies(w, t) if t.n <= w.n else 0
        if got != self.value:
            raise GraphError(f"witness has {got} copies, certificate claims {self.value}")


# -- isomorph-free enumeration ---------------------------------------------------------------


def _is_clique(h: Graph) -> bool:
    return h.m == h.n * (h.n - 1) // 2


def _clique_through(adj: list[int], u: int, v: int, k: int) -> bool:
    """Is there a K_k containing both u and v (edge uv present)?"""
    need = k - 2

    def grow(cand: int, need: int) -> bool:
        if need == 0:
            return True
        if cand.bit_count() < need:
            return False
        while cand:
            low = cand & -cand
            cand ^= low
            if grow(cand & adj[low.bit_length() - 1], need - 1):
                return True
        return False

    return grow(adj[u] & adj[v], need)


def _creates_copy(adj: list[int], n: int, h: Graph, u: int, v: int) -> bool:
    """Does the graph with rows ``adj`` (edge uv included) hold a copy of h
    through uv?"""
    if _is_clique(h):
        return _clique_through(adj, u, v, h.n)
    host = Graph.from_adjacency(adj)
    for a, b in h.edges:
        if Matcher(h, host, {a: u, b: v}).exists() or Matcher(h, host, {a: v, b: u}).exists():
            return True
    return False


@dataclass
class FreeGraphs:
    """All H-free graphs on n vertices up to isomorphism, by edge count."""

    n: int
    h_label: bytes | None
    levels: list[list[Graph]]

    def all(self) -> list[Graph]:
        return [g for lvl in self.levels for g in lvl]

    def maximal(self) -> list[Graph]:
        return [g for g in self.all() if getattr(g, "_maximal", False)]


_enum_cache: dict[tuple[int, bytes | None, bool], FreeGraphs] = {}


def enumerate_free_graphs(n: int, h: Graph | None = None, max_n: int = EXACT_LIMIT) -> FreeGraphs:
    """Every h-free graph on n vertices (every graph if h is None), one per
    isomorphism class, grown level by level by adding one edge.

    h-freeness is closed under deleting edges, so each h-free graph arises
    from an h-free graph with one edge fewer and pruning children holding h
    is sound.  Children from non-edges in one orbit of the automorphisms
    found for the parent are isomorphic, so only one per orbit is tried.
    """
    if n > max_n:
        raise GraphError(f"exact enumeration limited to n <= {max_n}; use ex_lower_search")
    if h is not None:
        h.require_simple("enumerate_free_graphs (pattern)")
    key = (n, canonical_label(h) if h is not None else None, True)
    if key in _enum_cache:
        return _enum_cache[key]
    start = time.perf_counter()
    empty = Graph(n)
    levels: list[list[Graph]] = [[empty]]
    frontier = [empty]
    while frontier:
        nxt: dict[bytes, tuple[int, ...]] = {}
        for g in frontier:
            adj = g.adj
            _, _, autos = canonical_form(adj, n)
            orb = _Orbits(n * n)
            for gamma in autos:
                for u, v in combinations(range(n), 2):
                    a, b = gamma[u], gamma[v]
                    if a > b:
                        a, b = b, a
                    orb.union(u * n + v, a * n + b)
            tried = set()
            grew = False
            for u, v in combinations(range(n), 2):
                if adj[u] >> v & 1:
                    continue
                r = orb.find(u * n + v)
                if r in tried:
                    continue
                tried.add(r)
                child = list(adj)
                child[u] |= 1 << v
                child[v] |= 1 << u
                if h is not None and _creates_copy(child, n, h, u, v):
                    continue
                grew = True
                lab = canonical_label_adj(child)
                if lab not in nxt:
                    nxt[lab] = tuple(child)
            g._maximal = not grew  # type: ignore[attr-defined]
        if not nxt:
            break
        # deterministic order: by canonical key
        frontier = [Graph.from_adjacency(nxt[k]) for k in sorted(nxt)]
        levels.append(frontier)
    res = FreeGraphs(n, key[1], levels)
    _enum_cache[key] = res
    log.info("enumerated %d graphs (n=%d) in %.2fs", sum(len(l) for l in levels), n, time.perf_counter() - start)
    return res


def enumerate_graphs(n: int) -> list[Graph]:
    """All graphs on n vertices up to isomorphism."""
    return enumerate_free_graphs(n, None).all()


def ex_exact(n: int, t: Graph, h: Graph) -> Certificate:
    """Exact maximum number of copies of t over h-free n-vertex graphs.

    Copy counts only grow when edges are added, so only edge-maximal h-free
    graphs are scored.  Among optima the one with the least canonical label
    is returned as witness.
    """
    t.require_simple("ex_exact (t)")
    h.require_simple("ex_exact (h)")
    if t.isolated_vertices() or h.isolated_vertices():
        raise GraphError("patterns must not have isolated vertices")
    if n > EXACT_LIMIT:
        raise GraphError(f"ex_exact limited to n <= {EXACT_LIMIT}; use ex_lower_search")
    start = time.perf_counter()
    fam = enumerate_free_graphs(n, h)
    best: tuple[int, bytes, Graph] | None = None
    for g in fam.maximal():
        c = count_copies(g, t) if t.n <= n else 0
        if best is None or c > best[0] or (c == best[0] and canonical_label(g) < best[1]):
            best = (c, canonical_label(g), g)
    assert best is not None
    return Certificate(
        n=n,
        t_g6=encode_g6(t),
        h_g6=encode_g6(h),
        value=best[0],
        kind="exact",
        witness_g6=best[1].decode("ascii"),
        method="exhaustive",
        elapsed=round(time.perf_counter() - start, 6),
    )


# -- lower-bound search ----------------------------------------------------------------------------


def _start_pool(n: int, h: Graph) -> list[tuple[str, Graph]]:
    from .bounds import chromatic_number
    from .constructions import clique_union, multipartite, turan

    pool: list[tuple[str, Graph]] = [("empty", Graph(n))]
    if 2 <= h.n - 1 <= n:
        pool.append(("clique_union", clique_union(n, h.n - 1)))
    chi = chromatic_number(h)
    if chi >= 3:
        pool.append(("turan", turan(n, chi - 1)))
    if n >= 3:
        pool.append(("k1ab", multipartite([1, (n - 1) // 2, n - 1 - (n - 1) // 2])))
    return [(name, g) for name, g in pool if not contains_copy(g, h)]


def ex_lower_search(n: int, t: Graph, h: Graph, seed: int = 0, budget: int = 2000) -> Certificate:
    """Hill climbing over edge flips that keep the graph h-free.

    Starts from the best of a few h-free constructions, proposes random
    flips, keeps those that do not lower the count of t, and returns the
    best graph seen.  Always a valid lower bound, never an exactness claim.
    """
    if n > 500:
        raise GraphError("ex_lower_search limited to n <= 500")
    t.require_simple("ex_lower_search (t)")
    h.require_simple("ex_lower_search (h)")
    start = time.perf_counter()
    rng = random.Random(seed)
    pool = [(count_copies(g, t) if t.n <= n else 0, name, g) for name, g in _start_pool(n, h)]
    pool.sort(key=lambda x: -x[0])
    cur_val, _, g = pool[0]
    best_val, best = cur_val, g
    pairs = list(combinations(range(n), 2))
    for _ in range(budget):
        u, v = rng.choice(pairs)
        if g.has_edge(u, v):
            loss = count_copies_through_edge(g, t, u, v)
            if loss == 0 or rng.random() < 0.05:
                g = g.remove_edge(u, v)
                cur_val -= loss
        else:
            if _creates_copy(list(g.add_edge(u, v).adj), n, h, u, v):
                continue
            gain = count_copies_through_edge(g, t, u, v)
            g = g.add_edge(u, v)
            cur_val += gain
        if cur_val > best_val:
            best_val, best = cur_val, g
    if contains_copy(best, h):  # pragma: no cover - guarded invariant
        raise RuntimeError("search produced a graph containing h")
    return Certificate(
        n=n,
        t_g6=encode_g6(t),
        h_g6=encode_g6(h),
        value=best_val,
        kind="lower-bound",
        witness_g6=encode_g6(best),
        method="hillclimb",
        seed=seed,
        elapsed=round(time.perf_counter() - start, 6),
    )


# -- certificate store -------------------------------------------------------------------------------


class CertificateStore:
    """Append-only JSON-lines file of verified certificates.

    Keyed by (n, canonical label of t, canonical label of h).  ``get``
    returns the best known record: exact beats lower-bound, then larger
    value wins, then the later record.
    """

    ENV = "GENTURAN_STORE"

    def __init__(self, path: str | os.PathLike | None = None):
        path = path or os.environ.get(self.ENV) or "certificates.jsonl"
        self.path = Path(path)

    @staticmethod
    def key(n: int, t: Graph, h: Graph) -> tuple[int, str, str]:
        return (n, canonical_label(t).decode(), canonical_label(h).decode())

    def _key_of(self, cert: Certificate) -> tuple[int, str, str]:
        return self.key(cert.n, decode_g6(cert.t_g6), decode_g6(cert.h_g6))

    def put(self, cert: Certificate, verify: bool = True) -> None:
        if verify:
            cert.verify()
        self.path.parent.mkdir(parents=True, exist_ok=True)
        with self.path.open("a", encoding="utf-8") as fh:
            fh.write(cert.to_json() + "\n")

    def list(self, verify: bool = False) -> list[Certificate]:
        if not self.path.exists():
            return []
        out = []
        with self.path.open(encoding="utf-8") as fh:
            for line in fh:
                line = line.strip()
                if not line:
                    continue
                cert = Certificate.from_json(line)
                if verify:
                    cert.verify()
                out.append(cert)
        return out

    def get(self, n: int, t: Graph, h: Graph, verify: bool = False) -> Certificate | None:
        want = self.key(n, t, h)
        best = None
        for cert in self.list(verify=verify):
            if cert.n != n or self._key_of(cert) != want:
                continue
            rank = (cert.kind == "exact", cert.value)
            if best is None or rank >= best[0]:
                best = (rank, cert)
        return best[1] if best else None


__all__ = [
    "Certificate",
    "CertificateStore",
    "FreeGraphs",
    "enumerate_free_graphs",
    "enumerate_graphs",
    "ex_exact",
    "ex_lower_search",
]
