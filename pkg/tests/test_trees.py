from itertools import combinations

import networkx as nx
import pytest
from hypothesis import given, settings, strategies as st

from genturan import constructions as C
from genturan import trees as T
from genturan.counting import contains_copy, count_copies
from genturan.graph import (
    Graph,
    GraphError,
    bipartition,
    complete_bipartite,
    complete_graph,
    cycle_graph,
    disjoint_copies,
    has_hamilton_path,
    is_connected,
    is_tree,
    path_graph,
    star_graph,
)

from conftest import all_graphs, brute_contains, graphs, nx_to_graph


def brute_alpha(g):
    for r in range(g.n, -1, -1):
        for S in combinations(range(g.n), r):
            if not any(g.has_edge(a, b) for a, b in combinations(S, 2)):
                return r
    return 0


def brute_min_covers(g):
    """All minimum edge covers by subset enumeration of the edge set."""
    edges = sorted(g.edges)
    full = set(range(g.n))
    for r in range(len(edges) + 1):
        found = [set(c) for c in combinations(edges, r) if {x for e in c for x in e} == full]
        if found:
            return r, found
    return None, []


def bipartite_no_isolated(g):
    return g.n >= 2 and not g.isolated_vertices() and bipartition(g) is not None


# -- independence, matchings, covers ----------------------------------------------------------------


def test_cover_examples():
    size, covers = T.min_edge_covers(path_graph(4))
    covers = list(covers)
    assert T.max_independent_set(path_graph(4)) == 2 and size == 2
    assert [c.edges for c in covers] == [((0, 1), (2, 3))]
    size, covers = T.min_edge_covers(cycle_graph(4))
    assert T.max_independent_set(cycle_graph(4)) == 2 and size == 2 and len(list(covers)) == 2
    size, covers = T.min_edge_covers(star_graph(5))
    covers = list(covers)
    assert T.max_independent_set(star_graph(5)) == 5 and size == 5 and len(covers) == 1 and len(covers[0]) == 5


def test_cover_needs_no_isolated_vertices():
    with pytest.raises(GraphError):
        T.min_edge_cover_size(Graph(3, [(0, 1)]))


@settings(max_examples=80, deadline=None)
@given(graphs(max_n=10))
def test_independence_number_matches_brute_force(g):
    assert T.max_independent_set(g) == brute_alpha(g)


@settings(max_examples=80, deadline=None)
@given(graphs(max_n=10))
def test_matching_matches_networkx(g):
    assert T.max_matching_size(g) == len(nx.max_weight_matching(g.to_networkx(), maxcardinality=True))


@settings(max_examples=60, deadline=None)
@given(graphs(min_n=2, max_n=7))
def test_all_minimum_covers_match_brute_force(g):
    if g.isolated_vertices():
        return
    size, it = T.min_edge_covers(g)
    ours = [set(c.edges) for c in it]
    want_size, want = brute_min_covers(g)
    assert size == want_size
    assert len(ours) == len(want) and all(c in want for c in ours)
    assert all(len(c) == size for c in ours)


def test_cover_budget_stops_early():
    _, it = T.min_edge_covers(disjoint_copies(cycle_graph(4), 4), budget=5)
    assert len(list(it)) == 5


def test_koenig_gallai_on_connected_bipartite_graphs():
    checked = 0
    for n in range(2, 8):
        for h in nx.graph_atlas_g():
            if h.number_of_nodes() != n or not nx.is_connected(h) or not nx.is_bipartite(h):
                continue
            g = nx_to_graph(h)
            assert T.max_independent_set(g) == T.min_edge_cover_size(g)
            checked += 1
    assert checked > 50


@settings(max_examples=60, deadline=None)
@given(graphs(min_n=2, max_n=8))
def test_minimum_covers_are_unions_of_stars(g):
    if g.isolated_vertices():
        return
    _, it = T.min_edge_covers(g, budget=50)
    for cover in it:
        sub = Graph(g.n, cover.edges)
        assert not contains_copy(sub, path_graph(4))
        assert cover.covers(g)
        stars = cover.stars()
        assert sum(len(es) for _, es in stars) == len(cover)


# -- U(Gamma)-sets -------------------------------------------------------------------------------------


def test_u_gamma_c4():
    c4 = cycle_graph(4)  # a=0, b=1, c=2, d=3
    cover = T.EdgeCover(((0, 1), (2, 3)))
    assert sorted(T.u_gamma_sets(c4, cover)) == [(0, 2), (1, 3)]
    assert T.u_gamma_sets_bruteforce(c4, cover) == [(0, 2), (1, 3)]


def test_u_gamma_two_edges():
    g = disjoint_copies(complete_graph(2), 2)
    cover = T.EdgeCover(((0, 1), (2, 3)))
    assert next(T.u_gamma_sets(g, cover)) == ()


def test_u_gamma_p4():
    p4 = path_graph(4)
    cover = T.EdgeCover(((0, 1), (2, 3)))
    assert not T.is_u_gamma_set(p4, cover, ())
    assert T.is_u_gamma_set(p4, cover, (1,))
    assert set(T.u_gamma_sets(p4, cover)) == set(T.u_gamma_sets_bruteforce(p4, cover))


def test_u_gamma_rejects_non_cover():
    with pytest.raises(GraphError):
        list(T.u_gamma_sets(path_graph(4), T.EdgeCover(((0, 1),))))


@settings(max_examples=80, deadline=None)
@given(graphs(min_n=2, max_n=8))
def test_u_gamma_sets_match_definition(g):
    if not bipartite_no_isolated(g):
        return
    _, it = T.min_edge_covers(g, budget=6)
    for cover in it:
        fast = sorted(T.u_gamma_sets(g, cover))
        slow = T.u_gamma_sets_bruteforce(g, cover)
        assert fast == sorted(slow)
        for U in fast:
            # components are single vertices or cover edges
            rest = [v for v in range(g.n) if v not in U]
            sub = g.induced(rest).to_networkx()
            for comp in nx.connected_components(sub):
                comp = sorted(rest[i] for i in comp)
                assert len(comp) == 1 or (len(comp) == 2 and tuple(comp) in cover.edges)


# -- blow-up containment ---------------------------------------------------------------------------------


def has_path_on(g, k):
    """Depth-first search for a simple path on k vertices."""

    def walk(v, used, length):
        if length == k:
            return True
        return any(walk(w, used | {w}, length + 1) for w in g.neighbors(v) if w not in used)

    return any(walk(v, {v}, 1) for v in range(g.n))


@settings(max_examples=60, deadline=None)
@given(graphs(min_n=1, max_n=5), st.data(), st.integers(2, 7))
def test_longest_path_in_blowup_matches_search(t, data, k):
    U = tuple(sorted(data.draw(st.sets(st.integers(0, t.n - 1)))))
    b = C.partial_blowup(C.BlowupSpec(t, U, k))
    assert T.blowup_contains_pattern(t, U, path_graph(k)) == has_path_on(b, k)


# -- m-value ----------------------------------------------------------------------------------------------


def test_m_value_fixtures():
    r = T.m_value(path_graph(3), path_graph(4))
    assert (r.m, r.witness) == (2, (1,))
    r = T.m_value(path_graph(3), star_graph(3))
    assert (r.m, r.witness) == (1, ())
    r = T.m_value(complete_graph(2), path_graph(3))
    assert (r.m, r.witness) == (1, ())


def test_m_value_rejects_subgraph_and_non_trees():
    with pytest.raises(GraphError):
        T.m_value(path_graph(5), path_graph(3))
    with pytest.raises(GraphError):
        T.m_value(cycle_graph(4), path_graph(5))


def small_trees(max_n):
    for n in range(2, max_n + 1):
        for h in nx.nonisomorphic_trees(n):
            yield nx_to_graph(h)


def brute_m_value(t, h):
    best = None
    for r in range(t.n + 1):
        for U in combinations(range(t.n), r):
            b = C.partial_blowup(C.BlowupSpec(t, U, h.n))
            if not brute_contains(b, h):
                comps = T.component_count(t, U)
                if best is None or comps > best:
                    best = comps
    return best


def test_m_value_matches_brute_force():
    pairs = 0
    for t in small_trees(4):
        for h in small_trees(4):
            if contains_copy(t, h):
                continue
            assert T.m_value(t, h).m == brute_m_value(t, h)
            pairs += 1
    assert pairs >= 5


def test_m_value_monotone_in_pattern():
    for t in small_trees(5):
        for h in small_trees(5):
            if contains_copy(t, h):
                continue
            base = T.m_value(t, h).m
            for leaf_at in range(h.n):
                bigger = Graph(h.n + 1, list(h.edges) + [(leaf_at, h.n)])
                assert T.m_value(t, bigger).m >= base


# -- Theta(n^alpha) criterion --------------------------------------------------------------------------


def test_theta_examples():
    r = T.theta_alpha_check(disjoint_copies(complete_graph(2), 2), path_graph(4))
    assert r.holds and r.U == () and set(r.cover.edges) == {(0, 1), (2, 3)}
    for mode in ("exists", "all"):
        assert T.theta_alpha_check(cycle_graph(4), path_graph(4), mode).holds is False
    r = T.theta_alpha_check(complete_graph(2), star_graph(2))
    assert r.holds and r.U == ()


def test_theta_domain_errors():
    with pytest.raises(GraphError):
        T.theta_alpha_check(complete_graph(3), path_graph(3))
    with pytest.raises(GraphError):
        T.theta_alpha_check(path_graph(3), cycle_graph(4))
    with pytest.raises(GraphError):
        T.theta_alpha_check(path_graph(3), path_graph(3), mode="some")


def test_theta_all_mode_budget_is_inconclusive():
    t = disjoint_copies(cycle_graph(4), 3)  # 8 minimum covers
    r = T.theta_alpha_check(t, path_graph(6), mode="all", budget=3)
    assert r.holds is None and r.inconclusive and r.covers_checked == 3


def test_theta_modes_agree_on_small_sweep():
    bip = [nx_to_graph(h) for h in nx.graph_atlas_g() if 2 <= h.number_of_nodes() <= 4 and nx.is_connected(h) and nx.is_bipartite(h)]
    for t in bip:
        for h in small_trees(5):
            a = T.theta_alpha_check(t, h, "exists").holds
            b = T.theta_alpha_check(t, h, "all").holds
            assert a == b


@pytest.mark.parametrize(
    "t,h",
    [
        (disjoint_copies(complete_graph(2), 2), path_graph(4)),
        (path_graph(4), path_graph(5)),
        (complete_graph(2), path_graph(3)),
        (disjoint_copies(complete_graph(2), 2), path_graph(5)),
        (star_graph(3), path_graph(4)),
    ],
)
def test_theta_true_witness_blowup(t, h):
    r = T.theta_alpha_check(t, h)
    assert r.holds
    b = T.witness_blowup(t, r.U, 40)
    assert b.n <= 40
    assert not brute_contains(b, h) if b.n <= 12 else not contains_copy(b, h)
    copies = count_copies(Graph.from_adjacency(b.adj), t)
    assert copies >= ((40 - len(r.U)) // (t.n - len(r.U))) ** (T.component_count(t, r.U))


# -- Hamilton reduction --------------------------------------------------------------------------------


def test_hamilton_reduce_shapes():
    tg, hg = T.hamilton_reduce(complete_graph(5))
    assert (tg.n, tg.m) == (15, 20) and is_tree(hg) and hg.n == 11 and max(hg.degrees()) == 2


def test_hamilton_reduce_k5():
    assert has_hamilton_path(complete_graph(5))
    tg, hg = T.hamilton_reduce(complete_graph(5))
    assert T.theta_alpha_check(tg, hg).holds is False


def test_hamilton_reduce_k46():
    g = complete_bipartite(4, 6)
    assert not has_hamilton_path(g)
    tg, hg = T.hamilton_reduce(g)
    assert T.theta_alpha_check(tg, hg).holds is True


def test_hamilton_reduce_needs_min_degree_four():
    with pytest.raises(GraphError):
        T.hamilton_reduce(cycle_graph(6))
