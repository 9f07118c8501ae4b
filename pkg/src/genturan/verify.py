"""Verification suites: each runs one acceptance check and returns a report
of per-claim records.  ``quick`` trims the parameter grids; ``full`` runs
them as specified."""

from __future__ import annotations

import math
import random
import time
from dataclasses import dataclass, field
from itertools import combinations
from typing import Callable

from . import bounds, constructions as C, counting, trees
from .graph import Graph, bipartition, complete_graph, cycle_graph, disjoint_copies, is_connected, is_tree, path_graph, two_core
from .canon import is_isomorphic
from .graph6 import encode_g6
from .oracle import enumerate_graphs, enumerate_free_graphs, ex_exact


@dataclass
class ClaimRecord:
    claim: str
    anchor: str
    status: str  # pass, fail, skip
    expected: object = None
    measured: object = None
    tol: object = None
    elapsed: float = 0.0

    def to_dict(self, deterministic: bool = False) -> dict:
        d = {
            "claim": self.claim,
            "anchor": self.anchor,
            "status": self.status,
            "expected": self.expected,
            "measured": self.measured,
            "tol": self.tol,
        }
        if not deterministic:
            d["elapsed"] = round(self.elapsed, 4)
        return d


@dataclass
class VerificationReport:
    suite: str
    scale: str
    seed: int
    claims: list[ClaimRecord] = field(default_factory=list)

    @property
    def status(self) -> str:
        if any(c.status == "fail" for c in self.claims):
            return "fail"
        return "pass"

    def to_dict(self, deterministic: bool = False) -> dict:
        return {
            "suite": self.suite,
            "scale": self.scale,
            "seed": self.seed,
            "status": self.status,
            "claims": [c.to_dict(deterministic) for c in self.claims],
        }


class _Recorder:
    def __init__(self, report: VerificationReport):
        self.report = report
        self.t0 = time.perf_counter()

    def add(self, claim: str, anchor: str, ok: bool, expected=None, measured=None, tol=None) -> bool:
        now = time.perf_counter()
        self.report.claims.append(ClaimRecord(claim, anchor, "pass" if ok else "fail", expected, measured, tol, now - self.t0))
        self.t0 = now
        return ok


# -- individual suites ------------------------------------------------------------------------------


def suite_erdos_turan(rec: _Recorder, scale: str, seed: int) -> None:
    top = 8 if scale == "full" else 7
    for n in range(4, top + 1):
        for k in range(3, 6):
            for t in range(2, k):
                if k > n:
                    continue
                got = ex_exact(n, complete_graph(t), complete_graph(k)).value
                want = bounds.erdos_turan_count(n, t, k)
                rec.add(f"ex({n},K{t},K{k})", "Turan-graph count", got == want, want, got, 0)


def suite_mantel(rec: _Recorder, scale: str, seed: int) -> None:
    for n in range(4, 9):
        got = ex_exact(n, complete_graph(2), complete_graph(3)).value
        rec.add(f"ex({n},K2,K3)", "Mantel", got == n * n // 4, n * n // 4, got, 0)


def norm_graph_spectrum_expected(q: int) -> dict[float, int]:
    """Eigenvalue multiplicities listed for H(q,3)."""
    top = q * q - 1
    return {
        float(top): 1,
        0.0: q - 2,
        1.0: top / 2,
        -1.0: top / 2,
        float(q): top * (q - 2) / 2,
        float(-q): top * (q - 2) / 2,
    }


def suite_norm_graph(rec: _Recorder, scale: str, seed: int) -> None:
    qs = (3, 4, 5) if scale == "full" else (3, 4)
    for q in qs:
        g = C.norm_graph(q, 3)
        rec.add(f"q={q} |V|", "norm graph size", g.n == q**3 - q**2, q**3 - q**2, g.n, 0)
        degs = sorted(set(g.degrees(count_loops=True)))
        rec.add(f"q={q} regularity", "norm graph regular", degs == [q * q - 1], q * q - 1, degs, 0)
        sp = counting.spectrum(g)
        expected = {k: v for k, v in norm_graph_spectrum_expected(q).items() if v}
        measured = {f"{v:.6f}": m for v, m in sp.clusters}
        rec.add(
            f"q={q} spectrum",
            "norm graph eigenvalue list",
            sp.matches(expected, tol=1e-6),
            {f"{k:.6f}": v for k, v in expected.items()},
            measured,
            1e-6,
        )
        w = counting.closed_walk_count_3(g)
        rec.add(f"q={q} closed 3-walks", "closed walk count", w == (q * q - 1) ** 3, (q * q - 1) ** 3, w, 0)
        free = counting.is_kst_free(g, 3, 3)
        rec.add(f"q={q} K33-free", "norm graph K_{3,3}-free", free, True, free)
        tri = counting.count_triangles(g)
        gap = abs((q * q - 1) ** 3 - 6 * tri)
        rec.add(f"q={q} loop-walk correction", "walks through loops", gap <= 8 * q**4, f"<= {8 * q**4}", gap, 8 * q**4)


def suite_furedi(rec: _Recorder, scale: str, seed: int) -> None:
    params = [(5, 3), (9, 3), (13, 3), (17, 3), (13, 5)] if scale == "full" else [(5, 3), (9, 3), (13, 5)]
    for q, t in params:
        g = C.furedi_graph(q, t)
        want_n = (q * q - 1) // (t - 1)
        rec.add(f"({q},{t}) n", "polarity graph size", g.n == want_n, want_n, g.n, 0)
        degs = sorted(set(g.degrees(count_loops=True)))
        rec.add(f"({q},{t}) regularity", "polarity graph regular", degs == [q], q, degs, 0)
        hist: dict[int, int] = {}
        for u, v in combinations(range(g.n), 2):
            c = counting.common_neighbor_count(g, u, v)
            hist[c] = hist.get(c, 0) + 1
        rec.add(
            f"({q},{t}) common neighbours",
            "every pair has t-1 common neighbours",
            set(hist) == {t - 1},
            {str(t - 1): g.n * (g.n - 1) // 2},
            {str(k): v for k, v in sorted(hist.items())},
            0,
        )
        free = counting.is_kst_free(g, 2, t)
        rec.add(f"({q},{t}) K2t-free", "polarity graph K_{2,t}-free", free, True, free)
        if (q, t) == (17, 3):
            tri = counting.count_triangles(g)
            ratio = tri / ((t - 1) ** 1.5 * g.n**1.5 / 6)
            rec.add(f"({q},{t}) triangle ratio", "triangle asymptote", 0.75 <= ratio <= 1.25, "[0.75, 1.25]", round(ratio, 6), 0.25)


def suite_books(rec: _Recorder, scale: str, seed: int) -> None:
    n = 50
    S = C.behrend_set(n).elements
    g = C.rsz_graph(n, S)
    width = counting.max_book_width(g)
    counts = set(counting.edge_triangle_counts(g).values())
    rec.add("every edge in one triangle", "unique triangles", counts == {1} and width == 1, 1, sorted(counts), 0)
    tri = counting.count_triangles(g)
    rec.add("triangle count", "n|S| triangles", tri == n * len(S), n * len(S), tri, 0)
    free = not counting.contains_copy(g, C.book(2))
    rec.add("2-book-free", "no 2-book", free, True, free)


def suite_random_girth(rec: _Recorder, scale: str, seed: int) -> None:
    n, k = 500, 4
    thresh = 0.03 * n ** (4 / 3)
    hits = []
    seeds = [seed, seed + 1, seed + 2]
    for s in seeds:
        g, stats = C.random_girth_graph(C.RandomGirthParams(n, k, s))
        no_c4 = not counting.contains_copy(g, cycle_graph(4))
        rec.add(f"seed {s} C4-free", "no short cycles", no_c4, True, no_c4)
        tri = counting.count_triangles(g)
        hits.append(tri >= thresh)
        rec.report.claims[-1].measured = {"C4_free": no_c4, "triangles": tri, "X": stats["X"], "sum_Y": stats["sum_Y"]}
    rec.add("triangles >= 0.03 n^(4/3) in >= 2 of 3 seeds", "triangle lower bound", sum(hits) >= 2, ">= 2", sum(hits), round(thresh, 3))


def is_extended_friendship_subgraph(h: Graph) -> bool:
    """2-core empty or a friendship graph (independent of the classifier)."""
    core, _ = two_core(h)
    if core.n == 0:
        return True
    if core.n % 2 == 0:
        return False
    return is_isomorphic(core, C.friendship((core.n - 1) // 2))


def suite_triangles_linear(rec: _Recorder, scale: str, seed: int) -> None:
    disagree = []
    checked = 0
    for n in range(2, 7):
        for h in enumerate_graphs(n):
            if h.isolated_vertices():
                continue
            checked += 1
            if bounds.classify_k3_growth(h).linear != is_extended_friendship_subgraph(h):
                disagree.append(encode_g6(h))
    rec.add("classifier vs 2-core", "linear growth criterion", not disagree, 0, {"checked": checked, "disagree": disagree}, 0)

    two_tri = disjoint_copies(complete_graph(3), 2)
    k133 = C.multipartite([1, 3, 3])
    wit_ok = not counting.contains_copy(k133, two_tri) and counting.count_triangles(k133) == 9
    val = ex_exact(7, complete_graph(3), two_tri).value
    rec.add("ex(7,K3,2K3) >= 9 via K_{1,3,3}", "floor((n-1)^2/4)", wit_ok and val >= 9, ">= 9", {"ex": val, "witness_ok": wit_ok}, 0)

    samples = 10_000 if scale == "full" else 1_000
    rng = random.Random(seed)
    invalid = 0
    missed = 0
    met = 0
    c1_mismatch = 0
    for _ in range(samples):
        n = 8
        p = rng.random()
        edges = [(u, v) for u, v in combinations(range(n), 2) if rng.random() < p]
        g = Graph(n, edges)
        tri = counting.count_triangles(g)
        for c in (2, 3):
            found = counting.find_friendship(g, c)
            if found is not None and not found.is_valid(g, c):
                invalid += 1
            if tri >= counting.friendship_threshold(c, n):
                met += 1
                if found is None:
                    missed += 1
        f1 = counting.find_friendship(g, 1)
        if (f1 is not None) != (counting.find_friendship_exact(g, 1) is not None):
            c1_mismatch += 1
    rec.add(
        "find_friendship on 8-vertex sample",
        "friendship finder",
        invalid == 0 and missed == 0 and c1_mismatch == 0,
        {"invalid": 0, "missed": 0},
        {"samples": samples, "threshold_met": met, "invalid": invalid, "missed": missed, "c1_mismatch": c1_mismatch},
        0,
    )
    k9 = complete_graph(9)
    ok = counting.count_triangles(k9) >= counting.friendship_threshold(2, 9)
    f = counting.find_friendship(k9, 2)
    rec.add("K9, c=2 above threshold", "friendship finder", ok and f is not None and f.is_valid(k9, 2), True, f is not None)


def suite_erdos_gallai(rec: _Recorder, scale: str, seed: int) -> None:
    for k, num, den in ((5, 2, 3), (7, 4, 3)):
        worst = None
        bad = 0
        for n in range(1, 8):
            for g in enumerate_free_graphs(n, cycle_graph(k)).all():
                tri = counting.count_triangles(g)
                if den * tri > num * g.m:
                    bad += 1
                if g.m and (worst is None or tri * worst[1] > worst[0] * g.m):
                    worst = (tri, g.m)
        rec.add(f"C{k}-free: N(K3) <= {num}/{den}|E|", "triangles per edge", bad == 0, f"<= {num}/{den}", {"violations": bad, "max_ratio": f"{worst[0]}/{worst[1]}"}, 0)


def connected_bipartite(max_n: int, min_n: int = 2) -> list[Graph]:
    return [g for n in range(min_n, max_n + 1) for g in enumerate_graphs(n) if is_connected(g) and bipartition(g) is not None]


def trees_up_to(max_n: int, min_n: int = 2) -> list[Graph]:
    return [g for n in range(min_n, max_n + 1) for g in enumerate_graphs(n) if is_tree(g)]


def _exponent_estimate(t: Graph, U: tuple[int, ...]) -> tuple[float, int, int]:
    b30 = trees.witness_blowup(t, U, 30)
    b60 = trees.witness_blowup(t, U, 60)
    c30 = counting.count_copies(b30, t)
    c60 = counting.count_copies(b60, t)
    return math.log(c60 / c30) / math.log(b60.n / b30.n), c30, c60


def suite_trees(rec: _Recorder, scale: str, seed: int) -> None:
    bip_max = 7 if scale == "full" else 6
    bad = []
    cnt = 0
    for g in connected_bipartite(bip_max):
        cnt += 1
        if trees.max_independent_set(g) != trees.min_edge_cover_size(g):
            bad.append(encode_g6(g))
    rec.add("alpha = minimum edge cover", "independence/cover duality", not bad, 0, {"graphs": cnt, "bad": bad}, 0)

    t_max, h_max = (5, 6) if scale == "full" else (4, 5)
    disagree = []
    true_pairs = []
    pairs = 0
    for t in connected_bipartite(t_max):
        for h in trees_up_to(h_max):
            pairs += 1
            ex = trees.theta_alpha_check(t, h, "exists")
            al = trees.theta_alpha_check(t, h, "all")
            if ex.holds != al.holds or ex.holds is None:
                disagree.append((encode_g6(t), encode_g6(h)))
            if ex.holds:
                true_pairs.append((t, h, ex))
    rec.add("exists-cover and all-covers modes agree", "equivalent conditions", not disagree, 0, {"pairs": pairs, "disagree": disagree}, 0)

    fixtures = [((3, 4), 2), ((3, "star3"), 1), ((2, 3), 1)]
    for (tn, hn), want in fixtures:
        t = path_graph(tn)
        h = C.multipartite([1, 3]) if hn == "star3" else path_graph(hn)
        got = trees.m_value(t, h).m
        name = "K_{1,3}" if hn == "star3" else f"P_{hn}"
        rec.add(f"m(P_{tn},{name})", "growth exponent", got == want, want, got, 0)

    free_fail = []
    few = []
    expo_bad = []
    for t, h, res in true_pairs:
        U = res.U
        b60 = trees.witness_blowup(t, U, 60)
        if counting.contains_copy(b60, h):
            free_fail.append((encode_g6(t), encode_g6(h)))
            continue
        alpha = res.alpha
        mult = (60 - len(U)) // (t.n - len(U))
        est, c30, c60 = _exponent_estimate(t, U)
        if c60 < mult**alpha:
            few.append((encode_g6(t), encode_g6(h), c60, mult**alpha))
        if abs(est - alpha) > 0.35:
            expo_bad.append((encode_g6(t), encode_g6(h), alpha, round(est, 4)))
    rec.add("witness blow-ups at n=60 are H-free", "blow-up construction", not free_fail, 0, {"pairs": len(true_pairs), "fail": free_fail}, 0)
    rec.add("copies >= h'^alpha at n=60", "blow-up construction", not few, 0, {"fail": few}, 0)
    rec.add("exponent estimate within 0.35 of alpha", "Theta(n^alpha)", not expo_bad, 0, {"fail": expo_bad}, 0.35)


def suite_hamilton(rec: _Recorder, scale: str, seed: int) -> None:
    for g, name in ((complete_graph(5), "K5"), (C.multipartite([4, 6]), "K_{4,6}")):
        T, H = trees.hamilton_reduce(g)
        traceable = trees.has_hamilton_path(g)
        res = trees.theta_alpha_check(T, H)
        rec.add(
            f"{name}: criterion false iff traceable",
            "Hamilton path reduction",
            res.holds is not None and res.holds == (not traceable),
            not traceable,
            {"theta": res.holds, "traceable": traceable, "covers_checked": res.covers_checked},
            0,
        )
    top = 7 if scale == "full" else 6
    bad = []
    cnt = 0
    from .graph import has_hamilton_path

    for n in range(2, top + 1):
        for g in enumerate_graphs(n):
            if min(g.degrees()) < 1:
                continue
            cnt += 1
            if has_hamilton_path(C.min_degree_amplifier(g)) != has_hamilton_path(g):
                bad.append(encode_g6(g))
    rec.add("amplifier preserves traceability", "degree amplifier", not bad, 0, {"graphs": cnt, "bad": bad}, 0)


def suite_constructions_oracle(rec: _Recorder, scale: str, seed: int) -> None:
    """Every H-free construction at n <= 8 is beaten or matched by ex_exact."""
    cases: list[tuple[str, int, Graph, Graph, Graph]] = []
    K = complete_graph
    for n in range(4, 9):
        for t in range(2, min(n, 4) + 1):
            # clique_union(n, t) is K_{t+1}-free and K_{1,t}-free
            g = C.clique_union(n, t)
            for m in range(2, t + 1):
                cases.append((f"clique_union({n},{t})", n, g, K(m), K(t + 1)))
                if t >= 2:
                    cases.append((f"clique_union({n},{t})", n, g, K(m), C.multipartite([1, t])))
        for r in range(2, 4):
            sizes = C.turan_sizes(n, r)
            g = C.multipartite(sizes)
            for m in range(2, r + 1):
                cases.append((f"multipartite({sizes})", n, g, K(m), K(r + 1)))
        cases.append((f"multipartite([1,{(n - 1) // 2},{n - 1 - (n - 1) // 2}])", n, C.multipartite([1, (n - 1) // 2, n - 1 - (n - 1) // 2]), K(3), disjoint_copies(K(3), 2)))
    # blow-up witnesses from small theta-true pairs
    for t in (path_graph(2), path_graph(3), path_graph(4)):
        for h in trees_up_to(4, 3):
            res = trees.theta_alpha_check(t, h)
            if res.holds:
                b = trees.witness_blowup(t, res.U, 8)
                cases.append((f"blowup({encode_g6(t)},{list(res.U)})", 8, Graph.from_adjacency(b.adj), t, h))
    if scale != "full":
        cases = [c for c in cases if c[1] <= 7]
    bad = []
    for name, n, g, t, h in cases:
        if g.n != n:
            g = Graph(n, g.edges)
        if counting.contains_copy(g, h):
            bad.append((name, "not H-free"))
            continue
        have = counting.count_copies(g, t) if t.n <= n else 0
        val = ex_exact(n, t, h).value
        if val < have:
            bad.append((name, encode_g6(t), encode_g6(h), have, val))
    rec.add("ex_exact >= construction count", "constructions vs oracle", not bad, 0, {"cases": len(cases), "bad": bad}, 0)


SUITES: dict[str, tuple[int, Callable]] = {
    "erdos-turan": (1, suite_erdos_turan),
    "mantel": (2, suite_mantel),
    "norm-graph": (3, suite_norm_graph),
    "furedi": (4, suite_furedi),
    "books": (5, suite_books),
    "random-girth": (6, suite_random_girth),
    "triangles-linear": (7, suite_triangles_linear),
    "erdos-gallai": (8, suite_erdos_gallai),
    "trees": (9, suite_trees),
    "hamilton": (10, suite_hamilton),
    "constructions-oracle": (11, suite_constructions_oracle),
}


def run_verify(suite: str, scale: str = "quick", seed: int = 1) -> VerificationReport:
    if suite not in SUITES:
        raise KeyError(f"unknown suite {suite!r}; choose from {', '.join(SUITES)}")
    if scale not in ("quick", "full"):
        raise ValueError("scale must be quick or full")
    report = VerificationReport(suite, scale, seed)
    SUITES[suite][1](_Recorder(report), scale, seed)
    return report
