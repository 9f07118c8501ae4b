"""Independence number, minimum edge covers, U(Gamma)-sets, the tree growth
exponent m(T,H), the cover/blow-up criterion for Theta(n^alpha) growth and
the Hamilton path reduction."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations, product
from typing import Iterator, Sequence

from .graph import (
    Graph,
    GraphError,
    _bits,
    bipartition,
    connected_components,
    has_hamilton_path,
    is_tree,
    path_graph,
)
from .constructions import BlowupSpec, incidence_graph, partial_blowup
from .counting import contains_copy


# -- independence and matchings ---------------------------------------------------------


def max_independent_set(g: Graph) -> int:
    """alpha(g) by branch and bound on bitmasks (fine up to ~40 vertices)."""
    g = g.strip_loops()
    if g.n > 60:
        raise GraphError("max_independent_set limited to 60 vertices")
    adj = g.adj

    @lru_cache(maxsize=None)
    def alpha(mask: int) -> int:
        if not mask:
            return 0
        # vertices of degree <= 1 inside mask can always be taken
        best_v, best_d = -1, -1
        for v in _bits(mask):
            d = (adj[v] & mask).bit_count()
            if d <= 1:
                return 1 + alpha(mask & ~(1 << v) & ~adj[v])
            if d > best_d:
                best_v, best_d = v, d
        v = best_v
        without = alpha(mask & ~(1 << v))
        if without >= (mask & ~adj[v]).bit_count():
            return without
        return max(without, 1 + alpha(mask & ~(1 << v) & ~adj[v]))

    return alpha((1 << g.n) - 1)


def _kuhn_matching(g: Graph, left: Sequence[int], mask: int) -> int:
    """Maximum matching of a bipartite graph restricted to ``mask``."""
    match: dict[int, int] = {}

    def augment(u: int, seen: set[int]) -> bool:
        for w in _bits(g.adj[u] & mask):
            if w in seen:
                continue
            seen.add(w)
            if w not in match or augment(match[w], seen):
                match[w] = u
                return True
        return False

    return sum(1 for u in left if mask >> u & 1 and augment(u, set()))


def max_matching_size(g: Graph, mask: int | None = None) -> int:
    """nu of the subgraph induced by ``mask`` (all vertices by default)."""
    g = g.strip_loops()
    mask = (1 << g.n) - 1 if mask is None else mask
    sides = bipartition(g)
    if sides is not None:
        return _kuhn_matching(g, sides[0], mask)
    adj = g.adj

    @lru_cache(maxsize=None)
    def nu(m: int) -> int:
        if not m:
            return 0
        low = m & -m
        v = low.bit_length() - 1
        rest = m ^ low
        best = nu(rest)
        for w in _bits(adj[v] & rest):
            best = max(best, 1 + nu(rest & ~(1 << w)))
        return best

    return nu(mask)


@dataclass(frozen=True)
class EdgeCover:
    edges: tuple[tuple[int, int], ...]
    minimal: bool = True

    def __len__(self) -> int:
        return len(self.edges)

    def covers(self, g: Graph) -> bool:
        hit = 0
        for u, v in self.edges:
            if not g.has_edge(u, v):
                return False
            hit |= 1 << u | 1 << v
        return hit == (1 << g.n) - 1

    def stars(self) -> list[tuple[int | None, list[tuple[int, int]]]]:
        """Components of the cover: (centre, edges).  Centre is None for a
        single edge."""
        comp_of: dict[int, int] = {}
        comps: list[list[tuple[int, int]]] = []
        for e in self.edges:
            ids = {comp_of[x] for x in e if x in comp_of}
            if not ids:
                comps.append([e])
                idx = len(comps) - 1
            else:
                idx = min(ids)
                for other in sorted(ids - {idx}, reverse=True):
                    comps[idx] += comps[other]
                    comps[other] = []
                comps[idx].append(e)
            for c in comps[idx]:
                for x in c:
                    comp_of[x] = idx
        out = []
        for es in comps:
            if not es:
                continue
            if len(es) == 1:
                out.append((None, es))
                continue
            deg: dict[int, int] = {}
            for u, v in es:
                deg[u] = deg.get(u, 0) + 1
                deg[v] = deg.get(v, 0) + 1
            centre = max(deg, key=lambda x: deg[x])
            if deg[centre] != len(es):
                raise GraphError("cover component is not a star; cover not minimum")
            out.append((centre, sorted(es)))
        return out


def min_edge_cover_size(g: Graph) -> int:
    g.require_simple("min_edge_cover_size")
    if g.isolated_vertices():
        raise GraphError("edge cover undefined with isolated vertices")
    return g.n - max_matching_size(g)


def min_edge_covers(g: Graph, budget: int | None = None) -> tuple[int, Iterator[EdgeCover]]:
    """Size of a minimum edge cover and an iterator over all of them.

    Branches on the uncovered vertex with fewest usable edges, taking its
    i-th edge and excluding the earlier ones, so each cover appears once.
    Prunes with chosen + |W| - nu(g[W]) > size, W the uncovered vertices.
    The iterator stops after ``budget`` covers if one is given.
    """
    size = min_edge_cover_size(g)
    n = g.n
    full = (1 << n) - 1
    inc: list[list[tuple[int, int]]] = [[] for _ in range(n)]
    for u, v in g.edge_list():
        inc[u].append((u, v))
        inc[v].append((u, v))

    def gen() -> Iterator[EdgeCover]:
        emitted = 0
        chosen: list[tuple[int, int]] = []

        def rec(covered: int, excluded: frozenset) -> Iterator[EdgeCover]:
            nonlocal emitted
            if covered == full:
                yield EdgeCover(tuple(sorted(chosen)), True)
                return
            W = full & ~covered
            if len(chosen) + W.bit_count() - max_matching_size(g, W) > size:
                return
            best = None
            for v in _bits(W):
                opts = [e for e in inc[v] if e not in excluded]
                if best is None or len(opts) < len(best[1]):
                    best = (v, opts)
                    if len(opts) <= 1:
                        break
            v, opts = best
            ex = set(excluded)
            for e in opts:
                chosen.append(e)
                yield from rec(covered | 1 << e[0] | 1 << e[1], frozenset(ex))
                chosen.pop()
                ex.add(e)

        for cover in rec(0, frozenset()):
            yield cover
            emitted += 1
            if budget is not None and emitted >= budget:
                return

    return size, gen()


# -- U(Gamma)-sets ---------------------------------------------------------------------


def is_u_gamma_set(t: Graph, cover: EdgeCover, U: Sequence[int] | int) -> bool:
    """Definition check: each component of t - U meets exactly one cover edge
    and there are exactly |cover| components."""
    umask = U if isinstance(U, int) else sum(1 << u for u in U)
    rest = ((1 << t.n) - 1) & ~umask
    comps = connected_components(t, rest) if rest else []
    if len(comps) != len(cover.edges):
        return False
    for comp in comps:
        cset = set(comp)
        if sum(1 for u, v in cover.edges if u in cset or v in cset) != 1:
            return False
    return True


def u_gamma_sets_bruteforce(t: Graph, cover: EdgeCover) -> list[tuple[int, ...]]:
    return [U for r in range(t.n + 1) for U in combinations(range(t.n), r) if is_u_gamma_set(t, cover, U)]


def u_gamma_sets(t: Graph, cover: EdgeCover) -> Iterator[tuple[int, ...]]:
    """All U(Gamma)-sets of t for a minimum cover, as sorted vertex tuples.

    Components of t - U must be in bijection with the cover edges, so every
    cover edge keeps an endpoint outside U.  A star centre with two or more
    edges is then forced into U and its leaves out of U; a lone cover edge
    leaves three options.  Candidates are confirmed by the definition.
    """
    if not cover.covers(t):
        raise GraphError("not an edge cover of t")
    base = 0
    choices: list[list[int]] = []
    for centre, es in cover.stars():
        if centre is None:
            (u, v), = es
            choices.append([0, 1 << u, 1 << v])  # both out, or which endpoint goes into U
        else:
            base |= 1 << centre
    seen = set()
    for pick in product(*choices) if choices else [()]:
        umask = base | sum(pick)
        if umask in seen:
            continue
        seen.add(umask)
        if is_u_gamma_set(t, cover, umask):
            yield tuple(_bits(umask))


# -- containment in blow-ups -----------------------------------------------------------------


def _is_path(h: Graph) -> bool:
    return h.n >= 1 and is_tree(h) and max(h.degrees(), default=0) <= 2


def _longest_paths_in(t: Graph, comp: list[int]) -> dict[tuple[int, int], int]:
    """Vertex count of the longest path inside ``comp`` from x to y."""
    cmask = sum(1 << x for x in comp)
    best: dict[tuple[int, int], int] = {}
    for start in comp:
        stack = [(start, 1 << start, 1)]
        while stack:
            v, used, length = stack.pop()
            key = (start, v)
            if best.get(key, 0) < length:
                best[key] = length
            for w in _bits(t.adj[v] & cmask & ~used):
                stack.append((w, used | 1 << w, length + 1))
    return best


def longest_path_in_blowup(t: Graph, U: Sequence[int]) -> int:
    """Vertex count of a longest path in the (U, h) blow-up of t when every
    component has as many copies as the path could want.

    Exact whenever h is at least the length being asked about, since a path
    re-entering a copy can always switch to an unused one.
    """
    U = sorted(set(U))
    umask = sum(1 << u for u in U)
    rest = ((1 << t.n) - 1) & ~umask
    comps = connected_components(t, rest) if rest else []
    lp = [_longest_paths_in(t, c) for c in comps]
    whole = max((max(d.values()) for d in lp), default=0)
    k = len(U)
    NEG = -1
    hang = [0] * k
    gain = [[NEG] * k for _ in range(k)]
    for i, u in enumerate(U):
        for ci, comp in enumerate(comps):
            nbr = [x for x in comp if t.adj[u] >> x & 1]
            for x in nbr:
                for y in comp:
                    hang[i] = max(hang[i], lp[ci].get((y, x), 0))
            for j, w in enumerate(U):
                if j == i:
                    continue
                for x in nbr:
                    for y in comp:
                        if t.adj[w] >> y & 1 and (x, y) in lp[ci]:
                            gain[i][j] = max(gain[i][j], lp[ci][(x, y)])
        for j, w in enumerate(U):
            if j != i and t.adj[u] >> w & 1:
                gain[i][j] = max(gain[i][j], 0)
    best = whole
    if k == 0:
        return best
    dp: dict[tuple[int, int], int] = {}
    for i in range(k):
        dp[(1 << i, i)] = 1 + hang[i]
    for mask in range(1, 1 << k):
        for i in _bits(mask):
            val = dp.get((mask, i))
            if val is None:
                continue
            best = max(best, val + hang[i])
            for j in range(k):
                if mask >> j & 1 or gain[i][j] < 0:
                    continue
                key = (mask | 1 << j, j)
                cand = val + 1 + gain[i][j]
                if dp.get(key, -1) < cand:
                    dp[key] = cand
    return best


def blowup_contains_pattern(t: Graph, U: Sequence[int], h: Graph, multiplicity: int | None = None) -> bool:
    """Does the (U, multiplicity) blow-up of t contain h?  multiplicity
    defaults to |V(h)|.  Paths go through the subset DP over U, anything
    else through the sibling-pruned matcher."""
    mult = h.n if multiplicity is None else multiplicity
    if _is_path(h) and mult >= h.n:
        return longest_path_in_blowup(t, U) >= h.n
    return contains_copy(partial_blowup(BlowupSpec(t, tuple(U), mult)), h)


# -- m(T, H) -----------------------------------------------------------------------------------


@dataclass
class MValue:
    m: int
    witness: tuple[int, ...]


def component_count(t: Graph, U: Sequence[int]) -> int:
    rest = ((1 << t.n) - 1) & ~sum(1 << u for u in U)
    return len(connected_components(t, rest)) if rest else 0


def m_value(t: Graph, h: Graph) -> MValue:
    """Largest number of components of t - U over all U whose (U, |V(h)|)
    blow-up is h-free; ties go to the lexicographically least U."""
    if not (is_tree(t) and is_tree(h)):
        raise GraphError("m_value needs two trees")
    if t.n > 16:
        raise GraphError("t limited to 16 vertices")
    if contains_copy(t, h):
        raise GraphError("h is a subgraph of t: every blow-up contains h")
    subsets = [U for r in range(t.n + 1) for U in combinations(range(t.n), r)]
    ranked = sorted(subsets, key=lambda U: (-component_count(t, U), U))
    for U in ranked:
        if not blowup_contains_pattern(t, U, h):
            return MValue(component_count(t, U), U)
    raise AssertionError("U = V(t) is always h-free")  # pragma: no cover


# -- Theta(n^alpha) criterion -----------------------------------------------------------------


@dataclass
class ThetaResult:
    holds: bool | None  # None: cover budget exhausted
    mode: str
    alpha: int
    cover: EdgeCover | None = None
    U: tuple[int, ...] | None = None
    refuting_cover: EdgeCover | None = None
    covers_checked: int = 0
    witnesses: list[tuple[EdgeCover, tuple[int, ...]]] = field(default_factory=list)

    @property
    def inconclusive(self) -> bool:
        return self.holds is None

    def to_dict(self) -> dict:
        return {
            "holds": self.holds,
            "mode": self.mode,
            "alpha": self.alpha,
            "cover": [list(e) for e in self.cover.edges] if self.cover else None,
            "U": list(self.U) if self.U is not None else None,
            "refuting_cover": [list(e) for e in self.refuting_cover.edges] if self.refuting_cover else None,
            "covers_checked": self.covers_checked,
        }


def _good_u(t: Graph, cover: EdgeCover, h: Graph, memo: dict) -> tuple[int, ...] | None:
    for U in u_gamma_sets(t, cover):
        if U not in memo:
            memo[U] = not blowup_contains_pattern(t, U, h)
        if memo[U]:
            return U
    return None


def theta_alpha_check(t: Graph, h: Graph, mode: str = "exists", budget: int = 10**5) -> ThetaResult:
    """Is there a minimum edge cover (mode "exists"), or does every minimum
    edge cover (mode "all") admit a U(Gamma)-set whose (U, |V(h)|) blow-up
    is h-free?"""
    if mode not in ("exists", "all"):
        raise GraphError(f"unknown mode {mode!r}")
    t.require_simple("theta_alpha_check")
    if bipartition(t) is None or t.isolated_vertices():
        raise GraphError("t must be bipartite without isolated vertices")
    if not is_tree(h):
        raise GraphError("h must be a tree")
    alpha = max_independent_set(t)
    _, covers = min_edge_covers(t, budget=budget + 1)
    memo: dict[tuple[int, ...], bool] = {}
    res = ThetaResult(None, mode, alpha)
    for cover in covers:
        if res.covers_checked >= budget:
            return res  # inconclusive: more covers than the budget allows
        res.covers_checked += 1
        U = _good_u(t, cover, h, memo)
        if mode == "exists" and U is not None:
            res.holds, res.cover, res.U = True, cover, U
            return res
        if mode == "all":
            if U is None:
                res.holds, res.refuting_cover = False, cover
                return res
            res.witnesses.append((cover, U))
            if res.cover is None:
                res.cover, res.U = cover, U
    res.holds = mode == "all"
    return res


def witness_blowup(t: Graph, U: Sequence[int], n: int):
    """(U, floor((n-|U|)/(|V(t)|-|U|))) blow-up: at most n vertices."""
    k = len(set(U))
    if t.n == k:
        raise GraphError("U covers all of t")
    mult = (n - k) // (t.n - k)
    if mult < 1:
        raise GraphError("n too small for a blow-up")
    return partial_blowup(BlowupSpec(t, tuple(U), mult))


# -- Hamilton path reduction ---------------------------------------------------------------------


def hamilton_reduce(g: Graph) -> tuple[Graph, Graph]:
    """(incidence graph of g, path on 2|V(g)|+1 vertices)."""
    g.require_simple("hamilton_reduce")
    if g.n > 12:
        raise GraphError("hamilton_reduce limited to 12 vertices")
    if g.n == 0 or min(g.degrees()) < 4:
        raise GraphError("minimum degree must be >= 4; apply constructions.min_degree_amplifier first")
    return incidence_graph(g), path_graph(2 * g.n + 1)


__all__ = [
    "EdgeCover",
    "MValue",
    "ThetaResult",
    "blowup_contains_pattern",
    "has_hamilton_path",
    "hamilton_reduce",
    "is_u_gamma_set",
    "longest_path_in_blowup",
    "m_value",
    "max_independent_set",
    "max_matching_size",
    "min_edge_cover_size",
    "min_edge_covers",
    "theta_alpha_check",
    "u_gamma_sets",
    "u_gamma_sets_bruteforce",
    "witness_blowup",
]
