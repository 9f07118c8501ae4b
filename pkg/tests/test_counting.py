import random
from itertools import combinations, permutations

import networkx as nx
import numpy as np
import pytest
from hypothesis import assume, given, settings, strategies as st

from genturan import constructions as C
from genturan.counting import (
    automorphism_count,
    closed_walk_count_3,
    common_neighbor_count,
    contains_copy,
    count_cliques,
    count_copies,
    count_copies_through_edge,
    count_triangles,
    find_friendship,
    find_friendship_exact,
    friendship_threshold,
    is_kst_free,
    max_book_width,
    spectrum,
)
from genturan.graph import (
    Graph,
    GraphError,
    complete_bipartite,
    complete_graph,
    cycle_graph,
    disjoint_copies,
    has_cycle_length_in,
    path_graph,
    star_graph,
)

from conftest import brute_contains, brute_count_copies, graphs

SMALL_PATTERNS = [
    complete_graph(2),
    path_graph(3),
    complete_graph(3),
    path_graph(4),
    star_graph(3),
    cycle_graph(4),
    complete_graph(4),
    cycle_graph(5),
    C.friendship(2),
    complete_bipartite(2, 3),
]


# -- copy counting ---------------------------------------------------------------------------------


def test_count_copies_examples(petersen):
    assert count_copies(complete_graph(4), complete_graph(3)) == 4
    assert count_copies(cycle_graph(5), path_graph(3)) == 5
    assert count_copies(petersen, cycle_graph(5)) == 12


def test_petersen_c5_by_brute_force(petersen):
    maps = sum(1 for p in permutations(range(10), 5) if all(petersen.has_edge(p[i], p[(i + 1) % 5]) for i in range(5)))
    assert maps // 10 == 12


def test_count_rejects_isolated_pattern_vertices():
    with pytest.raises(GraphError):
        count_copies(complete_graph(4), Graph(3, [(0, 1)]))


@settings(max_examples=80, deadline=None)
@given(graphs(max_n=7), st.sampled_from(SMALL_PATTERNS))
def test_count_copies_matches_brute_force(g, t):
    assert count_copies(g, t) == brute_count_copies(g, t)


@settings(max_examples=60, deadline=None)
@given(graphs(max_n=8), st.sampled_from(SMALL_PATTERNS), st.data())
def test_count_copies_monotone_under_edge_addition(g, t, data):
    missing = [e for e in combinations(range(g.n), 2) if not g.has_edge(*e)]
    assume(missing)
    u, v = data.draw(st.sampled_from(missing))
    bigger = g.add_edge(u, v)
    gain = count_copies_through_edge(g, t, u, v)
    assert count_copies(bigger, t) == count_copies(g, t) + gain >= count_copies(g, t)


@settings(max_examples=40, deadline=None)
@given(graphs(max_n=9), st.integers(2, 5))
def test_clique_counts_match_networkx(g, k):
    want = sum(1 for c in nx.enumerate_all_cliques(g.to_networkx()) if len(c) == k)
    assert count_cliques(g, k) == want


@pytest.mark.parametrize("t", [complete_graph(3), path_graph(3), cycle_graph(4), star_graph(3)])
@pytest.mark.parametrize("s", [1, 2, 3])
def test_blowup_has_at_least_s_to_the_t_copies(t, s):
    assert count_copies(C.uniform_blowup(t, s), t) >= s**t.n


# -- containment -------------------------------------------------------------------------------------


def test_contains_copy_examples():
    k2m = C.partial_blowup(C.BlowupSpec(complete_bipartite(2, 1), (0, 1), 6))
    assert contains_copy(complete_bipartite(2, 6), path_graph(5))
    assert contains_copy(k2m, path_graph(5)) == brute_contains(complete_bipartite(2, 6), path_graph(5))
    assert not contains_copy(C.book(4), cycle_graph(5))
    assert not contains_copy(C.uniform_blowup(cycle_graph(5), 2), complete_graph(3))


@settings(max_examples=80, deadline=None)
@given(graphs(max_n=7), st.sampled_from(SMALL_PATTERNS))
def test_contains_copy_matches_brute_force(g, h):
    assert contains_copy(g, h) == brute_contains(g, h)


@settings(max_examples=60, deadline=None)
@given(graphs(min_n=1, max_n=5), st.data(), st.sampled_from(SMALL_PATTERNS[:7]))
def test_contains_copy_on_tagged_blowups(t, data, h):
    # the sibling quotient must not change the answer
    U = tuple(sorted(data.draw(st.sets(st.integers(0, t.n - 1)))))
    b = C.partial_blowup(C.BlowupSpec(t, U, h.n))
    plain = Graph.from_adjacency(b.adj)
    assert contains_copy(b, h) == contains_copy(plain, h) == brute_contains(plain, h)


@settings(max_examples=40, deadline=None)
@given(graphs(max_n=8), st.integers(1, 3), st.integers(1, 3))
def test_kst_free_matches_brute_force(g, s, t):
    assume(s <= t)
    found = any(
        len(set.intersection(*(set(g.neighbors(v)) for v in S)) - set(S)) >= t for S in combinations(range(g.n), s)
    )
    assert is_kst_free(g, s, t) == (not found)


# -- automorphisms ------------------------------------------------------------------------------------


def test_automorphism_examples(petersen):
    assert automorphism_count(complete_graph(4)) == 24
    assert automorphism_count(path_graph(3)) == 2
    assert automorphism_count(petersen) == 120


@settings(max_examples=40, deadline=None)
@given(graphs(max_n=7))
def test_automorphisms_match_networkx(g):
    h = g.to_networkx()
    want = sum(1 for _ in nx.algorithms.isomorphism.GraphMatcher(h, h).isomorphisms_iter())
    assert automorphism_count(g) == want


# -- common neighbours and walks -----------------------------------------------------------------------------


def test_common_neighbor_examples():
    assert common_neighbor_count(cycle_graph(4), 0, 2) == 2
    assert common_neighbor_count(Graph(3, [(0, 1), (1, 2), (0, 2)], loops=[0]), 0, 1) == 2
    with pytest.raises(GraphError):
        common_neighbor_count(cycle_graph(4), 1, 1)


def test_closed_walk_examples():
    assert closed_walk_count_3(complete_graph(3)) == 6
    assert closed_walk_count_3(C.norm_graph(3, 3)) == 512
    assert closed_walk_count_3(Graph(1, loops=[0])) == 1


@settings(max_examples=60, deadline=None)
@given(graphs(max_n=9), st.data())
def test_closed_walks_match_matrix_power(g, data):
    loops = data.draw(st.sets(st.integers(0, max(g.n - 1, 0)))) if g.n else set()
    h = Graph(g.n, g.edges, loops)
    a = np.zeros((g.n, g.n), dtype=np.int64)
    for u, v in g.edges:
        a[u, v] = a[v, u] = 1
    for v in loops:
        a[v, v] = 1
    assert closed_walk_count_3(h) == int(np.trace(np.linalg.matrix_power(a, 3)))
    assert count_triangles(g) == closed_walk_count_3(g) // 6


# -- spectrum ----------------------------------------------------------------------------------------------


def test_spectrum_norm_graph_q3():
    sp = spectrum(C.norm_graph(3, 3))
    assert sp.matches({8: 1, 0: 1, 1: 4, -1: 4, 3: 4, -3: 4}, tol=1e-6)


def test_spectrum_small_examples():
    assert spectrum(cycle_graph(4)).matches({2: 1, 0: 2, -2: 1})
    assert spectrum(star_graph(4)).matches({2: 1, 0: 3, -2: 1})


@settings(max_examples=60, deadline=None)
@given(graphs(min_n=1, max_n=10), st.data())
def test_spectrum_trace_identities(g, data):
    loops = data.draw(st.sets(st.integers(0, g.n - 1)))
    h = Graph(g.n, g.edges, loops)
    sp = spectrum(h)
    ev = np.array(sp.eigenvalues)
    assert len(ev) == g.n
    assert abs(ev.sum() - len(loops)) <= 1e-6 * g.n
    assert abs((ev**2).sum() - (2 * g.m + len(loops))) <= 1e-6 * max(g.n, 1)
    assert sum(m for _, m in sp.clusters) == g.n


def test_spectrum_clusters_stable_across_tolerances():
    g = C.norm_graph(3, 3)
    ref = spectrum(g, 1e-7).clusters
    for tol in (1e-8, 1e-6):
        got = spectrum(g, tol).clusters
        assert [m for _, m in got] == [m for _, m in ref]


# -- books -------------------------------------------------------------------------------------------------


def test_book_width_examples():
    assert max_book_width(C.rsz_graph(10, [1, 2, 4, 5])) == 1
    assert max_book_width(complete_graph(4)) == 2
    assert max_book_width(cycle_graph(5)) == 0


# -- Erdos-Gallai style bounds on small graphs ---------------------------------------------------------------


@settings(max_examples=150, deadline=None)
@given(graphs(max_n=8))
def test_triangles_in_c5_free_graphs(g):
    assume(not has_cycle_length_in(g, 5, 5))
    assert 3 * count_triangles(g) <= 2 * g.m


@settings(max_examples=150, deadline=None)
@given(graphs(max_n=8))
def test_triangles_in_c7_free_graphs(g):
    assume(not has_cycle_length_in(g, 7, 7))
    assert 3 * count_triangles(g) <= 4 * g.m


# -- friendship finder ---------------------------------------------------------------------------------------


def test_find_friendship_examples():
    emb = find_friendship(complete_graph(5), 2)
    assert emb is not None and emb.is_valid(complete_graph(5), 2)
    emb = find_friendship(C.friendship(3), 3)
    assert emb is not None and emb.hub == 0

def has_f2_by_triangle_pairs(g):
    """Two triangles meeting in exactly one vertex."""
    tris = [set(t) for t in combinations(range(g.n), 3) if g.has_edge(t[0], t[1]) and g.has_edge(t[0], t[2]) and g.has_edge(t[1], t[2])]
    return any(len(a & b) == 1 for a, b in combinations(tris, 2))


def test_find_friendship_on_rsz_graph():
    # every x in X sits on one triangle per element of S, and these meet only at x,
    # so an F_2 is present (the oracle decides this, not the example's prose)
    g = C.rsz_graph(10, [1, 2, 4, 5])
    assert has_f2_by_triangle_pairs(g)
    for finder in (find_friendship, find_friendship_exact):
        emb = finder(g, 2)
        assert emb is not None and emb.is_valid(g, 2)


def test_friendship_threshold_formula():
    assert friendship_threshold(2, 10) == 3 * 3 * 10
    assert friendship_threshold(3, 4) == 12 * 4 * 4


@settings(max_examples=120, deadline=None)
@given(graphs(max_n=9), st.integers(1, 4))
def test_find_friendship_output_valid_and_sound(g, c):
    emb = find_friendship(g, c)
    if emb is not None:
        assert emb.is_valid(g, c)
        leaves = emb.leaves
        assert len(set(leaves)) == 2 * c and emb.hub not in leaves
    else:
        # whenever the guarantee applies, the finder must succeed
        if c >= 2 and g.n:
            assert count_triangles(g) < friendship_threshold(c, g.n)


def test_find_friendship_above_threshold():
    g = complete_graph(9)
    assert count_triangles(g) >= friendship_threshold(2, 9)
    emb = find_friendship(g, 2)
    assert emb is not None and emb.is_valid(g, 2)


def test_find_friendship_exact_agrees_with_brute_force():
    rng = random.Random(11)
    f2 = C.friendship(2)
    for _ in range(150):
        n = rng.randint(5, 7)
        g = Graph(n, [e for e in combinations(range(n), 2) if rng.random() < 0.5])
        assert (find_friendship_exact(g, 2) is not None) == brute_contains(g, f2)


@pytest.mark.parametrize("k", [2, 3, 4])
def test_friendship_finder_on_disjoint_friendships(k):
    g = disjoint_copies(C.friendship(k), 2)
    emb = find_friendship(g, k)
    assert emb is not None and emb.is_valid(g, k)
