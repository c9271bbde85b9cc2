"""Acceptance criteria. Each test records a PASS/FAIL line shown in the terminal summary."""

import itertools
import random

import oracles
from kwiener.connectivity import is_k_connected, vertex_connectivity
from kwiener.errors import TheoremViolation
from kwiener.formulas import (
    compare_mean_distance,
    status_bound,
    verify_closed_forms,
    wiener_bound,
)
from kwiener.graph import Graph, add_edge, is_connected, path_graph, statuses, wiener
from kwiener.harary import harary, rotation_is_automorphism
from kwiener.search import (
    extremal_wiener,
    scan_graphs,
    verify_diameter_bound,
    verify_entringer,
    verify_status_bound,
)

MAX_N = 7


def _pairs(max_n=MAX_N):
    return [(n, k) for n in range(3, max_n + 1) for k in range(1, n - 1)]


def test_ac1_closed_forms_match_bfs(record_criterion):
    report = verify_closed_forms(range(2, 11), range(2, 61))
    bad_pairs = sorted({(m.k, m.n) for m in report.mismatches})
    detail = f"{len(report.pairs)} pairs, {len(bad_pairs)} with mismatches"
    if bad_pairs:
        detail += f", first {bad_pairs[:3]}"
    record_criterion(1, "closed forms equal BFS for 2<=k<=10, k+2<=n<=60", report.ok, detail)
    assert report.pairs == [(k, n) for k in range(2, 11) for n in range(k + 2, 61)]
    assert report.ok, f"{len(report.mismatches)} mismatches over {len(bad_pairs)} pairs, e.g. {report.mismatches[:3]}"


def test_ac2_wiener_bound_holds(record_criterion):
    checked, violations = 0, []
    for n, k in _pairs():
        try:
            rep = extremal_wiener(n, k)
        except TheoremViolation as exc:
            violations.append((n, k, str(exc)))
            continue
        checked += rep.k_connected_count
        if rep.max_wiener > rep.bound:
            violations.append((n, k, rep.max_wiener))
    ok = not violations
    record_criterion(2, "no k-connected graph exceeds the Wiener bound (n<=7)", ok,
                     f"{checked} (graph, k) pairs checked, {len(violations)} violations")
    assert ok, violations


def test_ac3_wiener_bound_sharp_for_even_k(record_criterion):
    failures = []
    for k in (2, 4):
        for n in range(k + 2, MAX_N + 1):
            rep = extremal_wiener(n, k)
            h = harary(k, n)
            if not (rep.max_wiener == rep.bound == wiener(h) and rep.tight
                    and rep.harary_attains and is_k_connected(h, k)):
                failures.append((n, k, rep.max_wiener, rep.bound))
    ok = not failures
    record_criterion(3, "max W = bound, attained by H(k,n), k in {2,4}, n<=7", ok,
                     f"{len(failures)} failures")
    assert ok, failures


def test_ac4_diameter_bound(record_criterion):
    failures = []
    for n, k in _pairs():
        rep = verify_diameter_bound(n, k)
        if rep.max_diameter > rep.bound:
            failures.append(("exceeds", n, k))
        if k in (1, 2) and rep.max_diameter != rep.bound:
            failures.append(("not attained", n, k))
    ok = not failures
    record_criterion(4, "max diameter <= bound, equality for k=1,2 (n<=7)", ok, f"{len(failures)} failures")
    assert ok, failures


def test_ac5_status_bound(record_criterion):
    failures = []
    for n, k in _pairs():
        rep = verify_status_bound(n, k)
        if rep.max_status > rep.bound:
            failures.append(("exceeds", n, k))
        if k == 1:
            if not (rep.attained and statuses(path_graph(n))[0] == rep.bound):
                failures.append(("path end", n, k))
        if k % 2 == 0:
            if not (rep.attained and set(statuses(harary(k, n))) == {status_bound(n, k)}):
                failures.append(("harary", n, k))
    ok = not failures
    record_criterion(5, "vertex status <= bound, equality at k=1 and even k (n<=7)", ok,
                     f"{len(failures)} failures")
    assert ok, failures


def test_ac6_entringer(record_criterion):
    failures = []
    for n in range(2, MAX_N + 1):
        rep = verify_entringer(n)
        if not rep.ok:
            failures.append(rep)
        assert rep.min_wiener == n * (n - 1) // 2
        assert rep.max_wiener == n * (n * n - 1) // 6
    ok = not failures
    record_criterion(6, "min W only at K_n, max W exactly at paths (n<=7)", ok, f"{len(failures)} failures")
    assert ok, failures


def _random_connected_graph(rng, n):
    while True:
        p = rng.uniform(0.15, 0.85)
        edges = [(u, v) for u, v in itertools.combinations(range(n), 2) if rng.random() < p]
        g = Graph.from_edges(n, edges)
        if is_connected(g) and not g.is_complete():
            return g


def test_ac7_edge_addition_decreases_wiener(record_criterion):
    rng = random.Random(20240607)
    samples, violations = 10_000, []
    for _ in range(samples):
        g = _random_connected_graph(rng, rng.randint(3, 10))
        non_edges = [(u, v) for u, v in itertools.combinations(range(g.n), 2) if not g.has_edge(u, v)]
        u, v = rng.choice(non_edges)
        if not wiener(add_edge(g, u, v)) < wiener(g):
            violations.append((g.edges(), u, v))
    ok = not violations
    record_criterion(7, "adding an edge strictly lowers W (10,000 samples, n<=10)", ok,
                     f"{len(violations)} violations")
    assert ok, violations[:3]


def test_ac8_harary_structure(record_criterion):
    failures = []
    swept = 0
    for k in range(2, 11):
        for n in range(k + 1, 61):
            swept += 1
            g = harary(k, n)
            degs = g.degrees()
            if g.num_edges != -(-k * n // 2):
                failures.append(("edges", k, n))
            if not is_k_connected(g, k):
                failures.append(("k-connected", k, n))
            if k % 2 == 0 or n % 2 == 0:
                if not rotation_is_automorphism(g) or set(degs) != {k}:
                    failures.append(("rotation", k, n))
            else:
                z = (n - 1) // 2
                if not (degs[z] == k + 1 and degs.count(k + 1) == 1 and degs.count(k) == n - 1):
                    failures.append(("degrees", k, n))
    ok = not failures
    record_criterion(8, "Harary edge count, k-connectivity, rotation, degrees", ok,
                     f"{swept} graphs, {len(failures)} failures")
    assert ok, failures


def test_ac9_mean_distance_comparator(record_criterion, capsys):
    checked, bad = compare_mean_distance(range(2, 11), range(2, 61))
    with capsys.disabled():
        print(f"\nmean-distance comparator: {checked} (n, even k) pairs, {len(bad)} discrepancies")
        for d in bad:
            print(f"  n={d.n} k={d.k}: scaled mean bound {d.scaled_mean_bound} != {d.wiener_bound}")
    expected = [(n, k) for k in range(2, 11, 2) for n in range(k + 2, 61)]
    assert checked == len(expected)
    for n, k in expected[:5]:
        assert wiener_bound(n, k).denominator == 1
    ok = not bad
    record_criterion(9, "mean-distance form x n(n-1)/2 equals Wiener bound, even k", ok,
                     f"{checked} pairs, {len(bad)} discrepancies")
    assert ok, bad


def test_ac10_connectivity_oracle(record_criterion):
    mismatches = []
    exhaustive = 0
    for n in range(2, 6):
        pairs = list(itertools.combinations(range(n), 2))
        for mask in range(2 ** len(pairs)):
            edges = [pairs[i] for i in range(len(pairs)) if mask >> i & 1]
            exhaustive += 1
            if vertex_connectivity(Graph.from_edges(n, edges)) != oracles.connectivity(n, edges):
                mismatches.append(edges)
    rng = random.Random(6)
    pairs6 = list(itertools.combinations(range(6), 2))
    for _ in range(10_000):
        mask = rng.getrandbits(len(pairs6))
        edges = [pairs6[i] for i in range(len(pairs6)) if mask >> i & 1]
        if vertex_connectivity(Graph.from_edges(6, edges)) != oracles.connectivity(6, edges):
            mismatches.append(edges)
    ok = not mismatches
    record_criterion(10, "flow connectivity equals subset-deletion oracle (n<=6)", ok,
                     f"{exhaustive} exhaustive + 10000 random at n=6, {len(mismatches)} mismatches")
    assert ok, mismatches[:3]


def test_scan_is_exhaustive():
    for n in range(1, MAX_N + 1):
        assert scan_graphs(n).graphs_scanned == 2 ** (n * (n - 1) // 2)
