import random
from fractions import Fraction

import numpy as np
import pytest

import oracles
from kwiener.connectivity import vertex_connectivity
from kwiener.errors import ParameterError, TheoremViolation
from kwiener.graph import Graph, cycle_graph, diameter, is_connected, path_graph, statuses, wiener
from kwiener.harary import harary
from kwiener import search
from kwiener.search import (
    KStats,
    batch_invariants,
    enumerate_graphs,
    extremal_wiener,
    graph_from_mask,
    mask_from_graph,
    scan_graphs,
    verify_diameter_bound,
    verify_entringer,
    verify_status_bound,
)


@pytest.mark.parametrize("n, count", [(1, 1), (2, 2), (3, 8), (4, 64), (5, 1024)])
def test_enumeration_counts(n, count):
    assert sum(1 for _ in enumerate_graphs(n)) == count


def test_enumeration_order_and_uniqueness():
    gs = list(enumerate_graphs(4))
    assert len(set(gs)) == 64
    assert [mask_from_graph(g) for g in gs] == list(range(64))


def test_connected_count_n5():
    assert sum(1 for g in enumerate_graphs(5) if is_connected(g)) == 728
    assert scan_graphs(5).connected_count == 728


def test_enumeration_cap():
    with pytest.raises(ParameterError):
        next(enumerate_graphs(9))
    with pytest.raises(ParameterError):
        scan_graphs(8)


def _reference(g):
    if not is_connected(g):
        return {"connected": False, "kappa": 0 if g.n > 1 else None}
    st = statuses(g)
    return {
        "connected": True,
        "kappa": vertex_connectivity(g) if g.n > 1 else None,
        "wiener": wiener(g),
        "diameter": diameter(g),
        "max_status": max(st),
    }


def _compare(n, masks):
    inv = batch_invariants(n, np.array(masks))
    for j, mask in enumerate(masks):
        ref = _reference(graph_from_mask(n, mask))
        assert bool(inv["connected"][j]) == ref["connected"], mask
        if ref["kappa"] is not None:
            assert int(inv["kappa"][j]) == ref["kappa"], mask
        if ref["connected"]:
            for key in ("wiener", "diameter", "max_status"):
                assert int(inv[key][j]) == ref[key], (mask, key)


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_kernel_matches_graph_core_exhaustively(n):
    _compare(n, list(range(2 ** (n * (n - 1) // 2))))


def test_kernel_matches_graph_core_sample_n6_n7():
    rng = random.Random(7)
    _compare(6, rng.sample(range(2 ** 15), 1500))
    _compare(7, rng.sample(range(2 ** 21), 500))


def test_kernel_connectivity_matches_subset_oracle_n6():
    rng = random.Random(11)
    masks = rng.sample(range(2 ** 15), 400)
    inv = batch_invariants(6, np.array(masks))
    for j, mask in enumerate(masks):
        g = graph_from_mask(6, mask)
        assert int(inv["kappa"][j]) == oracles.connectivity(6, g.edges())


def test_extremal_examples():
    rep = extremal_wiener(4, 1)
    assert rep.max_wiener == 10 and rep.bound == 12 and not rep.tight
    assert rep.k_connected_count == 38 and rep.graphs_scanned == 64
    assert wiener(graph_from_mask(4, mask_from_graph(path_graph(4)))) == 10
    witness = Graph.from_edges(4, rep.witness)
    assert diameter(witness) == 3  # a path

    rep = extremal_wiener(5, 2)
    assert rep.max_wiener == 15 and rep.bound == 15 and rep.tight and rep.gap == 0
    assert rep.harary_attains
    assert Graph.from_edges(5, rep.witness).degrees() == [2] * 5

    rep = extremal_wiener(6, 4)
    assert rep.max_wiener == 18 == rep.bound_floor and rep.tight and rep.harary_attains
    assert rep.k_connected_count == 76


def test_extremal_report_odd_k_gap():
    rep = extremal_wiener(5, 3)
    assert rep.bound == Fraction(25, 2) and rep.bound_floor == 12
    assert rep.max_wiener <= rep.bound_floor
    assert rep.gap == rep.bound - rep.max_wiener


def test_extremal_domain():
    with pytest.raises(ParameterError):
        extremal_wiener(5, 4)
    with pytest.raises(ParameterError):
        extremal_wiener(5, 0)


def test_entringer_examples():
    rep = verify_entringer(4)
    assert (rep.min_wiener, rep.max_wiener) == (6, 10) and rep.ok
    rep = verify_entringer(5)
    assert (rep.min_wiener, rep.max_wiener) == (10, 20) and rep.ok
    assert rep.max_count == 60
    rep = verify_entringer(2)
    assert rep.min_wiener == rep.max_wiener == 1 and rep.ok


def test_diameter_bound_examples():
    rep = verify_diameter_bound(6, 2)
    assert rep.max_diameter == 3 == rep.bound and rep.attained
    assert diameter(cycle_graph(6)) == 3
    rep = verify_diameter_bound(5, 1)
    assert rep.max_diameter == 4 == rep.bound
    rep = verify_diameter_bound(6, 3)
    assert rep.max_diameter <= 2 == rep.bound


def test_status_bound_report():
    rep = verify_status_bound(6, 2)
    assert rep.max_status == 9 == rep.bound
    g = Graph.from_edges(6, rep.witness)
    assert statuses(g)[rep.witness_vertex] == 9


def test_workers_and_chunking_do_not_change_results(monkeypatch):
    base = scan_graphs(6)
    monkeypatch.setattr(search, "CHUNK_BITS", 9)
    chunks = []
    parallel = scan_graphs(6, workers=2, progress=lambda d, t, g: chunks.append((d, t, g)))
    assert parallel == base
    assert len(chunks) == 64 and chunks[-1] == (64, 64, 2 ** 15)


def test_violation_aborts_with_witness(monkeypatch):
    # pretend the bound were one lower so the extremal cycle becomes a counterexample
    monkeypatch.setattr(search, "wiener_bound", lambda n, k: Fraction(14) if k == 2 else Fraction(99))
    summary = scan_graphs(5)
    with pytest.raises(TheoremViolation) as info:
        extremal_wiener(5, 2, summary=summary)
    assert wiener(info.value.witness) == 15


def test_kstats_merge_prefers_smaller_mask_on_ties():
    a = KStats(2, count=1, max_wiener=5, wiener_witness=9)
    b = KStats(2, count=2, max_wiener=5, wiener_witness=3)
    assert a.merge(b).wiener_witness == 3 == b.merge(a).wiener_witness
    assert a.merge(b).count == 3


def test_harary_mask_is_enumerated():
    h = harary(4, 7)
    assert graph_from_mask(7, mask_from_graph(h)) == h
