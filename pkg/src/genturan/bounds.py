"""Closed-form bound evaluators, the homomorphism test behind the dense
dichotomy, the multipartite optimiser, Zykov symmetrisation and the
triangle growth classifier."""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from itertools import combinations, combinations_with_replacement
from typing import Iterator

from .graph import Graph, GraphError, _bits, has_cycle_length_in
from .constructions import multipartite, turan_sizes
from .counting import count_copies, contains_copy


# -- exact Turan counts ------------------------------------------------------------


def _turan_class_sizes(n: int, k: int) -> list[int]:
    """floor((n+i)/(k-1)) for i = 0..k-2."""
    return [(n + i) // (k - 1) for i in range(k - 1)]


def erdos_turan_count(n: int, t: int, k: int) -> int:
    """K_t copies in the Turan graph T(n, k-1): the elementary symmetric
    polynomial e_t of its class sizes (strictly increasing class indices)."""
    if not 2 <= t < k:
        raise GraphError("need 2 <= t < k")
    if k > n:
        raise GraphError("need k <= n")
    sizes = _turan_class_sizes(n, k)
    return sum(math.prod(sizes[i] for i in idx) for idx in combinations(range(k - 1), t))


def erdos_turan_sum_nonstrict(n: int, t: int, k: int) -> int:
    """The same sum over non-decreasing index tuples (i_1 <= ... <= i_t).
    Kept to document that this reading overcounts: (6,3,4) gives 80."""
    sizes = _turan_class_sizes(n, k)
    return sum(math.prod(sizes[i] for i in idx) for idx in combinations_with_replacement(range(k - 1), t))


# -- homomorphisms -------------------------------------------------------------------


def find_homomorphism(h: Graph, t: Graph) -> dict[int, int] | None:
    """An edge-preserving map V(h) -> V(t), or None."""
    h.require_simple("find_homomorphism")
    t = t.strip_loops()
    order = sorted(range(h.n), key=lambda v: -h.degree(v))
    # put each vertex after one of its neighbours where possible
    seen, ordered = set(), []
    for start in order:
        if start in seen:
            continue
        queue = [start]
        seen.add(start)
        while queue:
            v = queue.pop(0)
            ordered.append(v)
            for w in sorted(_bits(h.adj[v]), key=lambda x: -h.degree(x)):
                if w not in seen:
                    seen.add(w)
                    queue.append(w)
    img: dict[int, int] = {}
    full = (1 << t.n) - 1

    def rec(i: int) -> bool:
        if i == len(ordered):
            return True
        v = ordered[i]
        cand = full
        for w in _bits(h.adj[v]):
            if w in img:
                cand &= t.adj[img[w]]
        for x in _bits(cand):
            img[v] = x
            if rec(i + 1):
                return True
            del img[v]
        return False

    return dict(img) if rec(0) else None


def blowup_contains(t: Graph, h: Graph) -> bool:
    """Is h a subgraph of some blow-up of t?  Same as a homomorphism h -> t."""
    return find_homomorphism(h, t) is not None


def chromatic_number(g: Graph) -> int:
    """Smallest k with a proper k-colouring, by exhaustive colouring."""
    g = g.strip_loops()
    if g.n == 0:
        return 0
    order = sorted(range(g.n), key=lambda v: -g.degree(v))
    for k in range(1, g.n + 1):
        colour = [-1] * g.n

        def rec(i: int, used: int) -> bool:
            if i == g.n:
                return True
            v = order[i]
            banned = {colour[w] for w in _bits(g.adj[v])}
            for c in range(min(used + 1, k)):
                if c not in banned:
                    colour[v] = c
                    if rec(i + 1, max(used, c + 1)):
                        return True
                    colour[v] = -1
            return False

        if rec(0, 0):
            return k
    return g.n  # pragma: no cover


# -- asymptotic upper bounds ----------------------------------------------------------


@dataclass
class BoundValue:
    formula: str
    params: dict
    value: float
    exact: bool = False
    vacuous: bool = False
    exponent: float | None = None

    def to_dict(self) -> dict:
        return {
            "formula": self.formula,
            "params": self.params,
            "value": self.value,
            "exact": self.exact,
            "vacuous": self.vacuous,
            "exponent": self.exponent,
        }


def kmkst_exponent(m: int, s: int) -> float:
    return m - m * (m - 1) / (2 * s)


def kmkst_upper(n: int, m: int, s: int, t: int) -> BoundValue:
    """Leading term of the bound on K_m copies in K_{s,t}-free graphs:
    (1/m!) (t-1)^{m(m-1)/2s} n^{m - m(m-1)/2s}."""
    if not (m >= 2 and t >= s >= m - 1 >= 1):
        raise GraphError("need t >= s >= m-1 >= 1")
    e = kmkst_exponent(m, s)
    value = (t - 1) ** (m * (m - 1) / (2 * s)) * n**e / math.factorial(m)
    return BoundValue("kmkst", {"n": n, "m": m, "s": s, "t": t}, value, vacuous=(t == 1), exponent=e)


def kst_upper(n: int, s: int, t: int) -> BoundValue:
    """Kovari-Sos-Turan leading term (1/2)(t-1)^{1/s} n^{2-1/s}."""
    b = kmkst_upper(n, 2, s, t)
    b.formula = "kst"
    b.params = {"n": n, "s": s, "t": t}
    return b


def l53_exponent(s: int) -> float:
    return (s + 1) / 2


def l53_upper(n: int, m: int, s: int, t: int) -> BoundValue:
    """(m-s)! (t-1)^{(s-1)/2} / m! * C(t-1, m-s) * n^{(s+1)/2}."""
    if not (t >= s >= 1 and t + s > m and m >= s):
        raise GraphError("need t >= s >= 1, m >= s and t + s > m")
    coef = math.factorial(m - s) * (t - 1) ** ((s - 1) / 2) / math.factorial(m) * math.comb(t - 1, m - s)
    value = coef * n ** l53_exponent(s)
    return BoundValue("l53", {"n": n, "m": m, "s": s, "t": t}, value, vacuous=(coef == 0), exponent=l53_exponent(s))


def kab_upper(n: int, a: int, b: int, s: int, t: int) -> BoundValue:
    """1/(a! (b!)^{1-a/s}) C(t-1,b)^{a/s} n^{a+b-ab/s}, halved when a = b.
    A zero binomial (t-1 < b) gives 0 and marks the bound vacuous."""
    if not (a <= s <= t and a <= b and a >= 1):
        raise GraphError("need 1 <= a <= s <= t and a <= b")
    binom = math.comb(t - 1, b)
    e = a + b - a * b / s
    coef = binom ** (a / s) / (math.factorial(a) * math.factorial(b) ** (1 - a / s)) if binom else 0.0
    if a == b:
        coef /= 2
    params = {"n": n, "a": a, "b": b, "s": s, "t": t}
    return BoundValue("kab", params, coef * n**e, vacuous=(binom == 0 or b >= t), exponent=e)


BOUNDS = {
    "kst": (kst_upper, ("n", "s", "t")),
    "kmkst": (kmkst_upper, ("n", "m", "s", "t")),
    "l53": (l53_upper, ("n", "m", "s", "t")),
    "kab": (kab_upper, ("n", "a", "b", "s", "t")),
}


# -- multipartite optimisation ------------------------------------------------------------


def _partitions(n: int, parts: int, largest: int | None = None) -> Iterator[list[int]]:
    """Partitions of n into at most ``parts`` positive parts, non-increasing."""
    largest = n if largest is None else largest
    if n == 0:
        yield []
        return
    if parts == 0:
        return
    for first in range(min(n, largest), 0, -1):
        if first * parts < n:
            break
        for rest in _partitions(n - first, parts - 1, first):
            yield [first] + rest


def _pattern_kind(pattern: Graph) -> tuple[str, tuple[int, ...]]:
    n, m = pattern.n, pattern.m
    if m == n * (n - 1) // 2:
        return "clique", (n,)
    parts = pattern_bipartition_sizes(pattern)
    if parts is not None:
        return "biclique", parts
    raise GraphError("pattern must be a clique or a complete bipartite graph")


def pattern_bipartition_sizes(g: Graph) -> tuple[int, int] | None:
    """(a, b) with a <= b if g is K_{a,b}, else None."""
    from .graph import bipartition

    sides = bipartition(g)
    if sides is None or g.isolated_vertices():
        return None
    a, b = len(sides[0]), len(sides[1])
    if g.m != a * b:
        return None
    return (min(a, b), max(a, b))


def multipartite_copy_count(sizes: list[int], pattern: Graph) -> int:
    """Exact copies of a clique or complete bipartite pattern in the complete
    multipartite graph with the given class sizes."""
    kind, par = _pattern_kind(pattern)
    if kind == "clique":
        (m,) = par
        e = [1] + [0] * m  # elementary symmetric polynomials
        for c in sizes:
            for j in range(m, 0, -1):
                e[j] += e[j - 1] * c
        return e[m]
    a, b = par
    # bivariate generating function: a class gives i vertices to side A or
    # j vertices to side B, never both
    poly = {(0, 0): 1}
    for c in sizes:
        terms = [((i, 0), math.comb(c, i)) for i in range(min(c, a) + 1)]
        terms += [((0, j), math.comb(c, j)) for j in range(1, min(c, b) + 1)]
        new: dict[tuple[int, int], int] = {}
        for (x, y), v in poly.items():
            for (i, j), w in terms:
                if x + i <= a and y + j <= b:
                    new[(x + i, y + j)] = new.get((x + i, y + j), 0) + v * w
        poly = new
    total = poly.get((a, b), 0)
    return total // 2 if a == b else total


def multipartite_maximize(n: int, max_classes: int, pattern: Graph, limit: int = 2_000_000) -> tuple[list[int], int]:
    """Best partition of n into at most ``max_classes`` parts for the pattern
    count.  Ties go to the lexicographically largest size vector."""
    if n > 200:
        raise GraphError("n limited to 200")
    _pattern_kind(pattern)
    best: tuple[int, list[int]] | None = None
    for i, sizes in enumerate(_partitions(n, max_classes)):
        if i >= limit:
            raise GraphError(f"more than {limit} partitions; reduce n or max_classes")
        c = multipartite_copy_count(sizes, pattern)
        if best is None or c > best[0]:
            best = (c, sizes)
    assert best is not None
    return best[1], best[0]


# -- Zykov symmetrisation ------------------------------------------------------------------


def twin_classes(g: Graph) -> list[list[int]]:
    classes: dict[int, list[int]] = {}
    for v in range(g.n):
        classes.setdefault(g.adj[v], []).append(v)
    return sorted(classes.values())


def is_complete_multipartite(g: Graph) -> bool:
    """Every nonadjacent pair has the same neighbourhood."""
    for u, v in combinations(range(g.n), 2):
        if not g.adj[u] >> v & 1 and g.adj[u] != g.adj[v]:
            return False
    return True


def _clone_class(g: Graph, members: list[int], model: int) -> Graph:
    """Give every vertex in ``members`` the neighbourhood of ``model``."""
    adj = list(g.adj)
    target = adj[model]
    for x in members:
        for w in _bits(adj[x]):
            adj[w] &= ~(1 << x)
        adj[x] = 0
    for x in members:
        adj[x] = target
        for w in _bits(target):
            adj[w] |= 1 << x
    return Graph.from_adjacency(adj)


@dataclass
class ZykovTrace:
    steps: list[dict] = field(default_factory=list)


def zykov_symmetrize(g: Graph, t: int, pattern: Graph, seed: int = 0, max_steps: int | None = None, trace: ZykovTrace | None = None) -> Graph:
    """Symmetrise a K_t-free graph into a complete multipartite one without
    losing copies of ``pattern``.

    Each step takes a nonadjacent pair u, v with different neighbourhoods
    and turns the whole twin class of one into clones of the other; the
    direction with the larger exact pattern count wins, a seeded coin
    breaks ties.  Twin classes only merge, so at most n steps happen.
    """
    g.require_simple("zykov_symmetrize")
    if t < 2:
        raise GraphError("need t >= 2")
    from .graph import complete_graph

    if contains_copy(g, complete_graph(t)):
        raise GraphError(f"input contains K_{t}")
    _pattern_kind(pattern)
    rng = random.Random(seed)
    cap = g.n + 1 if max_steps is None else max_steps
    current = count_copies(g, pattern) if pattern.n <= g.n else 0
    for _ in range(cap):
        pair = next(
            ((u, v) for u, v in combinations(range(g.n), 2) if not g.adj[u] >> v & 1 and g.adj[u] != g.adj[v]),
            None,
        )
        if pair is None:
            return g
        u, v = pair
        cu = [x for x in range(g.n) if g.adj[x] == g.adj[u]]
        cv = [x for x in range(g.n) if g.adj[x] == g.adj[v]]
        to_v = _clone_class(g, cu, v)
        to_u = _clone_class(g, cv, u)
        cnt_v = count_copies(to_v, pattern) if pattern.n <= g.n else 0
        cnt_u = count_copies(to_u, pattern) if pattern.n <= g.n else 0
        if cnt_v > cnt_u or (cnt_v == cnt_u and rng.random() < 0.5):
            g, new = to_v, cnt_v
        else:
            g, new = to_u, cnt_u
        if new < current:
            raise RuntimeError(f"symmetrisation step lowered the count from {current} to {new}")
        if trace is not None:
            trace.steps.append({"pair": [u, v], "count": new})
        current = new
    if is_complete_multipartite(g):
        return g
    raise RuntimeError("symmetrisation did not converge within the step cap")


# -- triangle growth -------------------------------------------------------------------------


@dataclass
class GrowthClass:
    kind: str  # "linear" or "superlinear"
    constant: int | None
    reason: str

    @property
    def linear(self) -> bool:
        return self.kind == "linear"


def has_two_disjoint_triangles(h: Graph) -> bool:
    tris = [
        (a, b, c)
        for a in range(h.n)
        for b in _bits(h.adj[a] >> (a + 1) << (a + 1))
        for c in _bits(h.adj[a] & h.adj[b] >> (b + 1) << (b + 1))
    ]
    return any(not set(x) & set(y) for x, y in combinations(tris, 2))


def classify_k3_growth(h: Graph) -> GrowthClass:
    """Linear iff h has no cycle longer than 3 and no two vertex-disjoint
    triangles; the linear constant is 10 |V(h)|^2."""
    h.require_simple("classify_k3_growth")
    if h.isolated_vertices():
        raise GraphError("pattern must not have isolated vertices")
    if h.n >= 4 and has_cycle_length_in(h, 4, h.n):
        return GrowthClass("superlinear", None, "cycle of length > 3")
    if has_two_disjoint_triangles(h):
        return GrowthClass("superlinear", None, "two vertex-disjoint triangles")
    return GrowthClass("linear", 10 * h.n**2, "subgraph of an extended friendship graph")


__all__ = [
    "BOUNDS",
    "BoundValue",
    "GrowthClass",
    "blowup_contains",
    "chromatic_number",
    "classify_k3_growth",
    "erdos_turan_count",
    "erdos_turan_sum_nonstrict",
    "find_homomorphism",
    "is_complete_multipartite",
    "kab_upper",
    "kmkst_upper",
    "kst_upper",
    "l53_upper",
    "multipartite",
    "multipartite_copy_count",
    "multipartite_maximize",
    "turan_sizes",
    "zykov_symmetrize",
]
