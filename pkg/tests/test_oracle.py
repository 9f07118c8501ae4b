import json

import networkx as nx
import pytest
from hypothesis import given, settings, strategies as st

from genturan import constructions as C
from genturan.bounds import erdos_turan_count
from genturan.canon import is_isomorphic
from genturan.graph import (
    Graph,
    GraphError,
    complete_graph,
    cycle_graph,
    disjoint_copies,
    path_graph,
    star_graph,
)
from genturan.graph6 import encode_g6
from genturan.oracle import (
    Certificate,
    CertificateStore,
    enumerate_free_graphs,
    enumerate_graphs,
    ex_exact,
    ex_lower_search,
)

from conftest import brute_contains, brute_count_copies, nx_to_graph


def atlas(n):
    return [nx_to_graph(h) for h in nx.graph_atlas_g() if h.number_of_nodes() == n]


def brute_ex(n, t, h):
    """Best copy count of t over every h-free graph in the atlas."""
    return max(brute_count_copies(g, t) if t.n <= n else 0 for g in atlas(n) if not brute_contains(g, h))


# -- enumeration ------------------------------------------------------------------------------------


@pytest.mark.parametrize("n,count", [(1, 1), (2, 2), (3, 4), (4, 11), (5, 34), (6, 156), (7, 1044)])
def test_graph_counts(n, count):
    assert len(enumerate_graphs(n)) == count == len(atlas(n))


@pytest.mark.parametrize("h", [complete_graph(3), cycle_graph(4), path_graph(4), star_graph(3)])
@pytest.mark.parametrize("n", [4, 5, 6])
def test_free_graph_counts_match_atlas(n, h):
    ours = enumerate_free_graphs(n, h).all()
    want = [g for g in atlas(n) if not brute_contains(g, h)]
    assert len(ours) == len(want)
    assert all(not brute_contains(g, h) for g in ours)


def test_enumeration_is_isomorph_free():
    gs = enumerate_graphs(5)
    assert not any(is_isomorphic(a, b) for i, a in enumerate(gs) for b in gs[i + 1 :])


def test_enumeration_size_limit():
    with pytest.raises(GraphError):
        ex_exact(11, complete_graph(3), complete_graph(4))


# -- exact values --------------------------------------------------------------------------------------


def test_exact_examples():
    c = ex_exact(5, complete_graph(3), complete_graph(4))
    assert c.value == 4 and is_isomorphic(c.witness(), C.turan(5, 3))
    assert ex_exact(6, complete_graph(2), cycle_graph(4)).value == 7
    c = ex_exact(5, complete_graph(3), cycle_graph(5))
    k4_k1 = Graph(5, complete_graph(4).edges)
    # K4 plus an isolated vertex attains the optimum; K4 plus a pendant edge
    # ties it and has the smaller canonical label, so either may be returned
    assert c.value == 4 == brute_count_copies(k4_k1, complete_graph(3))
    assert not brute_contains(k4_k1, cycle_graph(5))
    c.verify()


@pytest.mark.parametrize(
    "t,h",
    [
        (complete_graph(2), complete_graph(3)),
        (complete_graph(3), complete_graph(4)),
        (path_graph(3), complete_graph(3)),
        (complete_graph(3), C.friendship(2)),
        (complete_graph(2), path_graph(4)),
        (complete_graph(3), disjoint_copies(complete_graph(2), 2)),
    ],
)
def test_exact_matches_atlas_search(t, h):
    for n in (4, 5, 6):
        c = ex_exact(n, t, h)
        assert c.value == brute_ex(n, t, h)
        c.verify()


def test_mantel_values():
    for n in range(3, 10):
        assert ex_exact(n, complete_graph(2), complete_graph(3)).value == n * n // 4


def test_erdos_values():
    for n in range(4, 9):
        for t, k in ((2, 4), (3, 4)):
            assert ex_exact(n, complete_graph(t), complete_graph(k)).value == erdos_turan_count(n, t, k)


# -- lower-bound search ---------------------------------------------------------------------------------


def test_lower_search_examples():
    c = ex_lower_search(12, complete_graph(3), star_graph(4), seed=0)
    assert c.kind == "lower-bound" and c.value >= 12
    c.verify()
    c = ex_lower_search(13, complete_graph(3), disjoint_copies(complete_graph(3), 2), seed=0)
    assert c.value >= 36
    c.verify()


@settings(max_examples=15, deadline=None)
@given(st.integers(4, 7), st.sampled_from([complete_graph(3), cycle_graph(4), path_graph(4)]), st.integers(0, 100))
def test_lower_search_never_beats_exact(n, h, seed):
    c = ex_lower_search(n, complete_graph(2), h, seed=seed, budget=300)
    c.verify()
    assert c.value <= ex_exact(n, complete_graph(2), h).value


def test_lower_search_is_seeded():
    a = ex_lower_search(10, complete_graph(3), complete_graph(4), seed=5, budget=400)
    b = ex_lower_search(10, complete_graph(3), complete_graph(4), seed=5, budget=400)
    assert (a.value, a.witness_g6) == (b.value, b.witness_g6)


# -- certificates and store ---------------------------------------------------------------------------------


def test_certificate_json_round_trip():
    c = ex_exact(5, complete_graph(3), complete_graph(4))
    back = Certificate.from_json(c.to_json())
    assert back == c
    assert json.loads(c.to_json())["kind"] == "exact"


def test_bad_certificates_are_rejected(tmp_path):
    store = CertificateStore(tmp_path / "c.jsonl")
    good = ex_exact(5, complete_graph(3), complete_graph(4))
    inflated = Certificate(**{**good.__dict__, "value": good.value + 1})
    with pytest.raises(GraphError):
        store.put(inflated)
    with_copy = Certificate(**{**good.__dict__, "witness_g6": encode_g6(complete_graph(5)), "value": 10})
    with pytest.raises(GraphError):
        store.put(with_copy)
    assert store.list() == []


def test_store_keeps_exact_over_later_lower_bound(tmp_path):
    store = CertificateStore(tmp_path / "c.jsonl")
    t, h = complete_graph(3), complete_graph(4)
    exact = ex_exact(7, t, h)
    store.put(exact)
    weaker = ex_lower_search(7, t, h, seed=1, budget=0)
    store.put(weaker)
    got = store.get(7, t, h, verify=True)
    assert got.kind == "exact" and got.value == exact.value
    assert len(store.list()) == 2


def test_store_key_ignores_labelling(tmp_path):
    store = CertificateStore(tmp_path / "c.jsonl")
    store.put(ex_exact(5, path_graph(3), complete_graph(3)))
    relabelled = Graph(3, [(0, 2), (2, 1)])
    assert store.get(5, relabelled, complete_graph(3)) is not None
    assert store.get(6, relabelled, complete_graph(3)) is None


def test_store_path_from_environment(tmp_path, monkeypatch):
    monkeypatch.setenv(CertificateStore.ENV, str(tmp_path / "env.jsonl"))
    assert CertificateStore().path == tmp_path / "env.jsonl"
