"""Generators for the extremal graphs: blow-ups, friendship graphs and
books, multipartite/Turan graphs, projective norm graphs, polarity-type
graphs over GF(q), progression-free sets and Ruzsa-Szemeredi graphs, the
random triangle-girth construction, clique unions, girth-5 hypergraphs and
the Hamilton-path gadgets.

Every generator documents its vertex index layout.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from itertools import combinations
from typing import Sequence

import numpy as np

from .graph import Graph, GraphError, _bits, complete_graph, connected_components, has_cycle_length_in
from .gfield import FieldError, field_of_order, norm_exponent, prime_power, unit_subgroup
from .matcher import SiblingInfo


# -- blow-ups ------------------------------------------------------------------


def uniform_blowup(h: Graph, s: int) -> Graph:
    """s-blow-up: copy j of vertex v gets index v*s + j."""
    h.require_simple("uniform_blowup")
    if s < 1:
        raise GraphError("blow-up factor must be >= 1")
    edges = [(u * s + i, v * s + j) for u, v in h.edges for i in range(s) for j in range(s)]
    return Graph(h.n * s, edges)


@dataclass(frozen=True)
class BlowupSpec:
    base: Graph
    fixed: tuple[int, ...]
    multiplicity: int

    def __post_init__(self):
        object.__setattr__(self, "fixed", tuple(sorted(set(self.fixed))))
        if self.multiplicity < 1:
            raise GraphError("blow-up multiplicity must be >= 1")
        if any(not 0 <= u < self.base.n for u in self.fixed):
            raise GraphError("fixed set must be a subset of the base vertices")


class BlowupGraph(Graph):
    """A Graph remembering where each vertex came from.

    ``origin[v]`` is the base vertex v copies, ``block[v]`` is
    ``(component, copy)`` or None for fixed vertices.
    """

    origin: list[int]
    block: list[tuple[int, int] | None]
    components: list[list[int]]
    siblings: SiblingInfo


def partial_blowup(spec: BlowupSpec) -> BlowupGraph:
    """(U,h) blow-up.

    Layout: the fixed vertices U first (ascending), then for each component
    C of base - U (ordered by smallest vertex) its h copies in turn, each
    copy listing C's vertices in ascending order.
    """
    base, U, h = spec.base, spec.fixed, spec.multiplicity
    base.require_simple("partial_blowup")
    umask = sum(1 << u for u in U)
    rest = ((1 << base.n) - 1) & ~umask
    comps = sorted(connected_components(base, rest), key=min) if rest else []
    index: dict[tuple[int, int], int] = {}  # (base vertex, copy) -> new index; fixed use copy -1
    origin: list[int] = []
    block: list[tuple[int, int] | None] = []
    for u in U:
        index[(u, -1)] = len(origin)
        origin.append(u)
        block.append(None)
    comp_of = {}
    for ci, comp in enumerate(comps):
        for v in comp:
            comp_of[v] = ci
        for j in range(h):
            for v in comp:
                index[(v, j)] = len(origin)
                origin.append(v)
                block.append((ci, j))
    edges = []
    for a, b in base.edges:
        if a in comp_of and b in comp_of:
            for j in range(h):
                edges.append((index[(a, j)], index[(b, j)]))
        elif a in comp_of or b in comp_of:
            x, u = (a, b) if a in comp_of else (b, a)
            for j in range(h):
                edges.append((index[(x, j)], index[(u, -1)]))
        else:
            edges.append((index[(a, -1)], index[(b, -1)]))
    g = BlowupGraph(len(origin), edges)
    g.origin = origin
    g.block = block
    g.components = comps
    g.siblings = SiblingInfo(g.n, block)
    return g


def scaled_blowup(base: Graph, fixed: Sequence[int], n: int) -> BlowupGraph:
    """The (U, floor((n-|U|)/(t-|U|))) blow-up, at most n vertices."""
    free = base.n - len(set(fixed))
    if free <= 0:
        raise GraphError("nothing to blow up")
    h = (n - len(set(fixed))) // free
    return partial_blowup(BlowupSpec(base, tuple(fixed), max(h, 1)))


# -- small families --------------------------------------------------------------


def friendship(k: int) -> Graph:
    """F_k: hub 0, triangles {0, 2i+1, 2i+2}."""
    if k < 1:
        raise GraphError("friendship graph needs k >= 1")
    edges = []
    for i in range(k):
        a, b = 2 * i + 1, 2 * i + 2
        edges += [(0, a), (0, b), (a, b)]
    return Graph(2 * k + 1, edges)


def book(s: int) -> Graph:
    """B_s: spine 0-1, pages 2..s+1."""
    if s < 1:
        raise GraphError("book needs s >= 1")
    return Graph(s + 2, [(0, 1)] + [(x, p) for p in range(2, s + 2) for x in (0, 1)])


def multipartite(class_sizes: Sequence[int]) -> Graph:
    """Complete multipartite graph, classes laid out consecutively."""
    if any(c < 1 for c in class_sizes):
        raise GraphError("class sizes must be >= 1")
    starts = np.cumsum([0] + list(class_sizes))
    n = int(starts[-1])
    cls = [i for i, c in enumerate(class_sizes) for _ in range(c)]
    return Graph(n, [(u, v) for u, v in combinations(range(n), 2) if cls[u] != cls[v]])


def turan_sizes(n: int, r: int) -> list[int]:
    """Class sizes of T(n, r), non-increasing."""
    if r < 1:
        raise GraphError("need r >= 1")
    return [(n + i) // r for i in range(r - 1, -1, -1) if (n + i) // r > 0]


def turan(n: int, r: int) -> Graph:
    sizes = turan_sizes(n, r)
    return multipartite(sizes) if sizes else Graph(0)


def clique_union(n: int, t: int) -> Graph:
    """floor(n/t) disjoint K_t followed by a clique on the n mod t leftovers."""
    if not 1 <= t <= n:
        raise GraphError("need 1 <= t <= n")
    edges = []
    for start in range(0, n, t):
        block = range(start, min(start + t, n))
        edges += list(combinations(block, 2))
    return Graph(n, edges)


# -- algebraic constructions -------------------------------------------------------


def norm_graph(q: int, s: int) -> Graph:
    """Projective norm graph H(q, s) with loops.

    Vertices are pairs (A, a), A in GF(q^(s-1)) and a in GF(q)^*, the latter
    realised as the nonzero elements of the order-q subfield.  Index of
    (A, a) is A * (q-1) + rank(a), where A is the integer code of the
    element and rank orders the subfield units by code.
    """
    try:
        p, k = prime_power(q)
    except FieldError as exc:
        raise GraphError(str(exc)) from exc
    if s < 2:
        raise GraphError("norm graph needs s >= 2")
    big_q = q ** (s - 1)
    if q**s > 2 * 10**5:
        raise GraphError(f"q^s = {q**s} exceeds desk-scale limit")
    F = field_of_order(big_q)
    units = [x for x in F.subfield(q) if x]
    rank = {x: i for i, x in enumerate(units)}
    ne = norm_exponent(q, s)
    norm = np.array([F.power(x, ne) for x in range(big_q)], dtype=np.int64)
    digits = np.array([F.coeffs(x) for x in range(big_q)], dtype=np.int64)
    weights = np.array([F.p**i for i in range(F.k)], dtype=np.int64)
    log = np.array([F.log(x) if x else -1 for x in range(big_q)], dtype=np.int64)
    exp = np.array([F.exp(i) for i in range(big_q - 1)], dtype=np.int64)
    unit_rank = np.full(big_q, -1, dtype=np.int64)
    for x, i in rank.items():
        unit_rank[x] = i
    qm1 = q - 1
    n = big_q * qm1
    adj = [0] * n
    loops = []
    for A in range(big_q):
        sums = ((digits[A] + digits) % F.p) @ weights  # codes of A + B over all B
        nv = norm[sums]
        for ai, a in enumerate(units):
            v = A * qm1 + ai
            ok = nv != 0
            # b = N(A+B) / a
            b = np.where(ok, exp[(log[np.where(ok, nv, 1)] - F.log(a)) % (big_q - 1)], 0)
            br = np.where(ok, unit_rank[b], -1)
            Bs = np.nonzero(br >= 0)[0]
            row = 0
            for B, bi in zip(Bs.tolist(), br[Bs].tolist()):
                w = B * qm1 + bi
                if w == v:
                    loops.append(v)
                else:
                    row |= 1 << w
            adj[v] = row
    return Graph.from_adjacency(adj, loops)


def furedi_classes(q: int, t: int) -> tuple[list[tuple[int, int]], object, set[int]]:
    """Canonical representatives of nonzero pairs over GF(q) modulo scaling by
    the order-(t-1) unit subgroup."""
    F = field_of_order(q)
    if t < 2 or (q - 1) % (t - 1):
        raise GraphError(f"t-1 = {t - 1} must divide q-1 = {q - 1}")
    A = sorted(x.value for x in unit_subgroup(F, t - 1))
    reps = set()
    for a in range(q):
        for b in range(q):
            if a == 0 and b == 0:
                continue
            lead = a if a else b
            lam = min(A, key=lambda z: F.mul(z, lead))
            reps.add((F.mul(lam, a), F.mul(lam, b)))
    return sorted(reps), F, set(A)


def furedi_graph(q: int, t: int) -> Graph:
    """Polarity-type graph: vertices are classes of nonzero pairs (a, b),
    sorted by the codes of the canonical representative; (a,b) ~ (c,d) iff
    ac + bd lies in the order-(t-1) subgroup.  Loops where a^2 + b^2 does."""
    if q * q > 10**5:
        raise GraphError("q^2 exceeds desk-scale limit")
    reps, F, A = furedi_classes(q, t)
    n = len(reps)
    adj = [0] * n
    loops = []
    for i, (a, b) in enumerate(reps):
        for j in range(i, n):
            c, d = reps[j]
            if F.add(F.mul(a, c), F.mul(b, d)) in A:
                if i == j:
                    loops.append(i)
                else:
                    adj[i] |= 1 << j
                    adj[j] |= 1 << i
    return Graph.from_adjacency(adj, loops)


# -- progression-free sets and books ---------------------------------------------------


def is_3ap_free(S: Sequence[int]) -> bool:
    elems = sorted(set(S))
    present = set(elems)
    for i, x in enumerate(elems):
        for z in elems[i + 1 :]:
            if (x + z) % 2 == 0 and (x + z) // 2 in present:
                return False
    return True


@dataclass
class ProgressionFreeSet:
    elements: list[int]
    method: str

    @property
    def size(self) -> int:
        return len(self.elements)


EXACT_PROGRESSION_LIMIT = 50  # the exact search is exponential; r3(50) takes seconds

_r3_cache: list[int] = [0]


def _r3(m: int) -> int:
    while len(_r3_cache) <= m:
        _extend_r3()
    return _r3_cache[m]


def _search_ap_free(m: int, target: int, need_last: bool) -> list[int] | None:
    """A 3-AP-free subset of {1..m} of size ``target`` containing 1 (and m if
    need_last), or None.  Branch and bound on the prefix table r3."""
    best: list[int] | None = None

    def rec(chosen: list[int], forbidden: int, nxt: int) -> bool:
        nonlocal best
        if len(chosen) == target:
            if not need_last or chosen[-1] == m:
                best = list(chosen)
                return True
            return False
        last = chosen[-1]
        for x in range(nxt, m + 1):
            if forbidden >> x & 1:
                continue
            # elements after x live in (x, m]
            if len(chosen) + 1 + _r3_cache_len_safe(m - x) < target:
                break
            f = forbidden
            for y in chosen:
                z = 2 * x - y
                if z <= m:
                    f |= 1 << z
            chosen.append(x)
            if rec(chosen, f, x + 1):
                return True
            chosen.pop()
        del last
        return False

    forbidden = 0
    if target == 0:
        return []
    if rec([1], forbidden, 2) if target > 1 else True:
        return best if target > 1 else [1]
    return None


def _r3_cache_len_safe(k: int) -> int:
    return _r3_cache[k] if k < len(_r3_cache) else k


def _extend_r3() -> None:
    m = len(_r3_cache)
    prev = _r3_cache[-1]
    # an optimal set one larger than r3(m-1) must contain both 1 and m
    found = _search_ap_free(m, prev + 1, need_last=True)
    _r3_cache.append(prev + 1 if found is not None else prev)


def max_progression_free(n: int) -> list[int]:
    """A maximum 3-AP-free subset of {1..n} (lexicographically first found)."""
    size = _r3(n)
    found = _search_ap_free(n, size, need_last=False)
    assert found is not None and len(found) == size
    return found


def behrend_digit_set(n: int) -> list[int]:
    """Digit construction: numbers below n whose base-d digits are at most
    (d-1)//2 (so sums never carry) and whose digit vector lies on the most
    populated sphere.  Bases 3..ceil(exp(sqrt(ln n))) are all tried and the
    largest shell wins."""
    if n < 3:
        return list(range(1, n + 1))
    top = max(3, math.ceil(math.exp(math.sqrt(math.log(n)))))
    best: list[int] = []
    for d in range(3, top + 1):
        half = (d - 1) // 2
        shells: dict[int, list[int]] = {}
        # enumerate digit vectors of numbers < n with all digits <= half
        ndig = 1
        while d**ndig < n:
            ndig += 1
        stack = [(0, 0, 0)]  # (position, value, sum of squares)
        while stack:
            pos, val, sq = stack.pop()
            if pos == ndig:
                if val < n:
                    shells.setdefault(sq, []).append(val + 1)
                continue
            for a in range(half + 1):
                nv = val + a * d**pos
                if nv >= n:
                    break
                stack.append((pos + 1, nv, sq + a * a))
        shell = max(shells.values(), key=lambda s: (len(s), [-x for x in sorted(s)]))
        if len(shell) > len(best):
            best = sorted(shell)
    return best


def behrend_set(n: int) -> ProgressionFreeSet:
    """3-AP-free subset of {1..n}: exact maximum by branch and bound when
    n <= 50, otherwise the larger of Behrend's digit construction and the
    base-3 set (better for moderate n)."""
    if n < 1:
        raise GraphError("n must be >= 1")
    if n <= EXACT_PROGRESSION_LIMIT:
        return ProgressionFreeSet(max_progression_free(n), "exact")
    digits, ternary = behrend_digit_set(n), ternary_set(n)
    if len(ternary) > len(digits):
        return ProgressionFreeSet(ternary, "ternary")
    return ProgressionFreeSet(digits, "behrend-digits")


def ternary_set(n: int) -> list[int]:
    """1 + every number below n whose base-3 digits are 0 or 1: digitwise
    sums never carry, so x + z = 2y forces x = y = z."""
    out = []
    k = 0
    while True:
        v, x, place = k, 0, 1
        while v:
            x += (v & 1) * place
            v >>= 1
            place *= 3
        if x >= n:
            return out
        out.append(x + 1)
        k += 1


def rsz_graph(n: int, S: Sequence[int]) -> Graph:
    """Tripartite graph with parts X=[n], Y=[2n], Z=[3n]: vertex x of X is
    x-1, y of Y is n+y-1, z of Z is 3n+z-1.  For x in X, s in S it holds the
    triangle {x, x+s, x+2s}."""
    S = sorted(set(S))
    if any(not 1 <= s <= n for s in S):
        raise GraphError("S must be a subset of {1..n}")
    if not is_3ap_free(S):
        raise GraphError("S contains a 3-term arithmetic progression")
    edges = set()
    for x in range(1, n + 1):
        for s in S:
            a, b, c = x - 1, n + x + s - 1, 3 * n + x + 2 * s - 1
            edges.update({(a, b), (a, c), (b, c)})
    return Graph(6 * n, edges)


# -- random triangle construction --------------------------------------------------------


@dataclass
class RandomGirthParams:
    n: int
    k: int
    seed: int = 0

    @property
    def p(self) -> float:
        return 0.5 * self.n ** (-(2 * self.k - 3) / (self.k - 1))

    def validate(self) -> None:
        if self.k < 4:
            raise GraphError("k must be >= 4")
        if self.n < 3:
            raise GraphError("n must be >= 3")
        if math.comb(self.n, 3) * self.p < 1:
            raise GraphError("n too small: expected number of picked triangles below 1")


def _sample_triples(n: int, count: int, rng: np.random.Generator) -> list[tuple[int, int, int]]:
    seen: set[tuple[int, int, int]] = set()
    out = []
    while len(out) < count:
        batch = rng.integers(0, n, size=(2 * (count - len(out)) + 8, 3))
        for row in batch.tolist():
            a, b, c = sorted(row)
            if a == b or b == c:
                continue
            t = (a, b, c)
            if t in seen:
                continue
            seen.add(t)
            out.append(t)
            if len(out) == count:
                break
    return out


def _short_labelled_cycles(triangles: list[tuple[int, int, int]], alive: list[bool], kmax: int) -> list[tuple[int, tuple[int, ...], tuple[int, ...]]]:
    """Cycles of length 3..kmax whose edges come from distinct triangles.

    Returned as (length, vertices, triangle ids) in order of increasing
    length, then lexicographic vertices/labels; each undirected cycle once.
    """
    labels: dict[tuple[int, int], list[int]] = {}
    nbrs: dict[int, set[int]] = {}
    for i, (a, b, c) in enumerate(triangles):
        if not alive[i]:
            continue
        for u, v in ((a, b), (a, c), (b, c)):
            labels.setdefault((u, v), []).append(i)
            nbrs.setdefault(u, set()).add(v)
            nbrs.setdefault(v, set()).add(u)

    def lab(u: int, v: int) -> list[int]:
        return labels[(u, v) if u < v else (v, u)]

    found = []
    for s in sorted(nbrs):
        # simple paths from s through vertices > s
        stack = [(s, (s,), ())]
        while stack:
            v, path, labs = stack.pop()
            L = len(path)
            if L >= 3 and s in nbrs[v] and path[1] < path[-1]:
                for l in lab(v, s):
                    if l not in labs:
                        found.append((L, path, labs + (l,)))
            if L == kmax:
                continue
            for w in nbrs[v]:
                if w <= s or w in path:
                    continue
                for l in lab(v, w):
                    if l not in labs:
                        stack.append((w, path + (w,), labs + (l,)))
    found.sort()
    return found


def random_girth_graph(params: RandomGirthParams) -> tuple[Graph, dict]:
    """Union of randomly picked triangles after destroying every short cycle
    built from distinct triangles.

    The number of picked triples is drawn from Binomial(C(n,3), p) and that
    many distinct uniform triples are taken.  Offending configurations are
    handled in discovery order: pairs of triangles sharing two vertices
    first, then labelled cycles by increasing length; from each one still
    intact the highest-numbered triangle is deleted.
    """
    params.validate()
    n, k = params.n, params.k
    rng = np.random.default_rng(params.seed)
    X = int(rng.binomial(math.comb(n, 3), params.p))
    triangles = sorted(_sample_triples(n, X, rng))
    alive = [True] * len(triangles)
    y = {i: 0 for i in range(2, k + 1)}

    by_edge: dict[tuple[int, int], list[int]] = {}
    for i, (a, b, c) in enumerate(triangles):
        for e in ((a, b), (a, c), (b, c)):
            by_edge.setdefault(e, []).append(i)
    pairs = sorted({(i, j) for ids in by_edge.values() for i, j in combinations(sorted(ids), 2)})
    y[2] = len(pairs)
    removed = 0
    for i, j in pairs:
        if alive[i] and alive[j]:
            alive[j] = False
            removed += 1

    all_alive = [True] * len(triangles)
    cycles_initial = _short_labelled_cycles(triangles, all_alive, k)
    for L, _, _ in cycles_initial:
        y[L] += 1
    for L, _, labs in cycles_initial:
        if all(alive[i] for i in labs):
            alive[max(labs)] = False
            removed += 1

    edges = set()
    kept = [t for i, t in enumerate(triangles) if alive[i]]
    for a, b, c in kept:
        edges.update({(a, b), (a, c), (b, c)})
    g = Graph(n, edges)
    if has_cycle_length_in(g, 4, k):  # pragma: no cover - guarded invariant
        raise RuntimeError("short cycle survived the deletion step")
    sum_y = sum(y.values())
    stats = {
        "n": n,
        "k": k,
        "seed": params.seed,
        "p": params.p,
        "X": X,
        "Y": {str(i): v for i, v in y.items()},
        "sum_Y": sum_y,
        "Z": X - sum_y,
        "removed": removed,
        "kept_triangles": len(kept),
    }
    return g, stats


# -- hypergraphs ---------------------------------------------------------------------


@dataclass
class Hypergraph:
    n: int
    edges: list[tuple[int, ...]] = field(default_factory=list)

    def __post_init__(self):
        self.edges = [tuple(sorted(e)) for e in self.edges]
        sizes = {len(e) for e in self.edges}
        if len(sizes) > 1:
            raise GraphError("hypergraph must be uniform")
        if len(set(self.edges)) != len(self.edges):
            raise GraphError("duplicate hyperedges")
        if any(not 0 <= v < self.n for e in self.edges for v in e):
            raise GraphError("hyperedge vertex out of range")

    @property
    def uniformity(self) -> int | None:
        return len(self.edges[0]) if self.edges else None


def berge_girth_at_least_5(h: Hypergraph) -> bool:
    """No Berge cycle of length 2, 3 or 4 (exhaustive over edge tuples)."""
    E = [set(e) for e in h.edges]
    m = len(E)
    for i, j in combinations(range(m), 2):
        if len(E[i] & E[j]) >= 2:
            return False
    # length 3: edges e1,e2,e3 with distinct vertices v12, v23, v31
    for i, j, k in combinations(range(m), 3):
        for a in E[i] & E[j]:
            for b in E[j] & E[k]:
                for c in E[k] & E[i]:
                    if len({a, b, c}) == 3:
                        return False
    # length 4: cyclic order e1 e2 e3 e4 (three distinct cyclic orders per 4-set)
    for quad in combinations(range(m), 4):
        i, j, k, l = quad
        for order in ((i, j, k, l), (i, j, l, k), (i, k, j, l)):
            e = [E[x] for x in order]
            for a in e[0] & e[1]:
                for b in e[1] & e[2]:
                    for c in e[2] & e[3]:
                        for d in e[3] & e[0]:
                            if len({a, b, c, d}) == 4:
                                return False
    return True


def _closes_short_cycle(new: tuple[int, ...], E: list[frozenset[int]], inc: dict[int, list[int]]) -> bool:
    ns = set(new)
    for f in E:
        if len(ns & f) >= 2:
            return True
    for v1, v2 in combinations(new, 2):
        # Berge path v1 -f1- w -f2- v2
        for i1 in inc.get(v1, ()):
            f1 = E[i1]
            for w in f1:
                if w in (v1, v2):
                    continue
                for i2 in inc.get(w, ()):
                    if i2 == i1:
                        continue
                    f2 = E[i2]
                    if v2 in f2:
                        return True
                    # Berge path v1 -f1- w -f2- x -f3- v2
                    for x in f2:
                        if x in (v1, v2, w):
                            continue
                        for i3 in inc.get(x, ()):
                            if i3 not in (i1, i2) and v2 in E[i3]:
                                return True
    return False


def greedy_girth5_hypergraph(n: int, m: int, seed: int = 0, attempts: int | None = None) -> Hypergraph:
    """Random greedy m-uniform hypergraph of Berge girth >= 5: random m-sets
    are proposed and kept only when they share at most one vertex with every
    edge and close no Berge cycle of length 3 or 4."""
    if not 3 <= m <= n:
        raise GraphError("need n >= m >= 3")
    rng = np.random.default_rng(seed)
    attempts = 40 * n if attempts is None else attempts
    E: list[frozenset[int]] = []
    inc: dict[int, list[int]] = {}
    seen = set()
    for _ in range(attempts):
        cand = tuple(sorted(rng.choice(n, size=m, replace=False).tolist()))
        if cand in seen:
            continue
        seen.add(cand)
        if _closes_short_cycle(cand, E, inc):
            continue
        idx = len(E)
        E.append(frozenset(cand))
        for v in cand:
            inc.setdefault(v, []).append(idx)
    return Hypergraph(n, [tuple(sorted(e)) for e in E])


def hyper_to_graph(h: Hypergraph) -> Graph:
    """Replace each hyperedge by a clique on its vertices."""
    edges = set()
    for e in h.edges:
        edges.update(combinations(sorted(e), 2))
    return Graph(h.n, edges)


# -- Hamilton path gadgets ---------------------------------------------------------------


def incidence_graph(g: Graph) -> Graph:
    """Vertex-edge incidence graph: original vertices 0..n-1, then one vertex
    n+i per edge in sorted edge order."""
    g.require_simple("incidence_graph")
    el = g.edge_list()
    return Graph(g.n + len(el), [(x, g.n + i) for i, e in enumerate(el) for x in e])


def min_degree_amplifier(g: Graph) -> Graph:
    """Add a (d+2)-clique on vertices n..n+d+1 and join vertex n to all of
    V(g); minimum degree rises from d to d+1."""
    g.require_simple("min_degree_amplifier")
    if g.n == 0:
        raise GraphError("empty graph")
    d = min(g.degrees())
    if d < 1:
        raise GraphError("amplifier needs minimum degree >= 1")
    n = g.n
    clique = range(n, n + d + 2)
    edges = list(g.edges) + list(combinations(clique, 2)) + [(v, n) for v in range(n)]
    return Graph(n + d + 2, edges)


def amplify_to_min_degree(g: Graph, delta: int) -> Graph:
    while min(g.degrees()) < delta:
        g = min_degree_amplifier(g)
    return g


__all__ = [
    "BlowupGraph",
    "BlowupSpec",
    "Hypergraph",
    "ProgressionFreeSet",
    "RandomGirthParams",
    "behrend_set",
    "ternary_set",
    "berge_girth_at_least_5",
    "book",
    "clique_union",
    "complete_graph",
    "friendship",
    "furedi_graph",
    "greedy_girth5_hypergraph",
    "hyper_to_graph",
    "incidence_graph",
    "is_3ap_free",
    "min_degree_amplifier",
    "multipartite",
    "norm_graph",
    "partial_blowup",
    "random_girth_graph",
    "rsz_graph",
    "turan",
    "uniform_blowup",
]
