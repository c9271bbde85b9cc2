"""Exhaustive search over all labeled graphs of small order.

Graph number ``mask`` on ``n`` vertices contains edge ``pairs[i]`` iff bit
``i`` of ``mask`` is set, where ``pairs`` lists ``(u, v)``, ``u < v``, in
lexicographic order. Masks are scanned in increasing order.

The scan is cut into chunks by the high bits of the mask. Each chunk is
evaluated with vectorised bitmask BFS (numpy, one array slot per graph)
and reduced to per-k maxima, with ties broken towards the smallest mask.
Chunk results merge associatively in prefix order, so the outcome does not
depend on the number of workers.
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass, field, replace
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from typing import Callable, Iterator, Optional

import numpy as np

from .connectivity import is_k_connected
from .errors import ParameterError, TheoremViolation
from .formulas import diameter_bound, status_bound, wiener_bound
from .graph import Graph, diameter, statuses, wiener
from .harary import harary

__all__ = [
    "MAX_ORDER",
    "DEFAULT_MAX_ORDER",
    "edge_pairs",
    "graph_from_mask",
    "mask_from_graph",
    "enumerate_graphs",
    "batch_invariants",
    "KStats",
    "ScanSummary",
    "scan_graphs",
    "ExtremalReport",
    "DiameterReport",
    "StatusReport",
    "EntringerReport",
    "extremal_wiener",
    "verify_diameter_bound",
    "verify_status_bound",
    "verify_entringer",
]

MAX_ORDER = 8
DEFAULT_MAX_ORDER = 7
CHUNK_BITS = 16

_POP8 = np.array([bin(i).count("1") for i in range(256)], dtype=np.int16)


@lru_cache(maxsize=None)
def edge_pairs(n: int) -> tuple:
    return tuple(combinations(range(n), 2))


def _check_order(n, allow_large=True):
    if not 1 <= n <= MAX_ORDER:
        raise ParameterError(f"enumeration supports 1 <= n <= {MAX_ORDER}, got n={n}")
    if n > DEFAULT_MAX_ORDER and not allow_large:
        raise ParameterError(
            f"n={n} means {2 ** (n * (n - 1) // 2)} graphs; pass allow_large=True (CLI: --full)"
        )


def graph_from_mask(n: int, mask: int) -> Graph:
    pairs = edge_pairs(n)
    return Graph.from_edges(n, [pairs[i] for i in range(len(pairs)) if mask >> i & 1])


def mask_from_graph(g: Graph) -> int:
    index = {e: i for i, e in enumerate(edge_pairs(g.n))}
    return sum(1 << index[e] for e in g.edges())


def enumerate_graphs(n: int) -> Iterator[Graph]:
    """Yield every labeled simple graph on ``n`` vertices, by increasing mask."""
    _check_order(n)
    for mask in range(2 ** len(edge_pairs(n))):
        yield graph_from_mask(n, mask)


# ---------------------------------------------------------------------------
# vectorised kernel


def _adjacency(n, masks):
    adj = [np.zeros(masks.shape, dtype=np.uint8) for _ in range(n)]
    for i, (u, v) in enumerate(edge_pairs(n)):
        bit = ((masks >> i) & 1).astype(np.uint8)
        adj[u] |= bit << v
        adj[v] |= bit << u
    return adj


def _expand(reach, adj, within=None):
    nxt = reach.copy()
    for u, a in enumerate(adj):
        nxt |= ((reach >> u) & 1) * a
    if within is not None:
        nxt &= within
    return nxt


def _connectivity(n, adj, connected, mindeg):
    # kappa = min(min degree, smallest separating set); only separators smaller
    # than the current value can lower it, which prunes most of the work
    kappa = np.where(connected, mindeg, 0).astype(np.int16)
    full = (1 << n) - 1
    for size in range(1, n - 1):
        idx = np.nonzero(kappa > size)[0]
        if idx.size == 0:
            break
        sub = [a[idx] for a in adj]
        cut_here = np.zeros(idx.size, dtype=bool)
        for removed in combinations(range(n), size):
            keep = full & ~sum(1 << v for v in removed)
            start = keep & -keep
            reach = np.full(idx.size, start, dtype=np.uint8)
            for _ in range(n - size - 1):
                nxt = _expand(reach, sub, np.uint8(keep))
                if np.array_equal(nxt, reach):
                    break
                reach = nxt
            cut_here |= reach != keep
        kappa[idx[cut_here]] = size
    return kappa


def batch_invariants(n: int, masks) -> dict:
    """Distance and connectivity invariants for a batch of graph masks.

    Returns a dict of arrays aligned with ``masks``: ``connected``,
    ``edges``, ``min_degree``, ``max_degree``, ``wiener``, ``diameter``,
    ``max_status``, ``argmax_status`` and ``kappa``. Distance entries are
    only meaningful where ``connected`` is true.
    """
    masks = np.asarray(masks, dtype=np.int64)
    adj = _adjacency(n, masks)
    deg = np.stack([_POP8[a] for a in adj])
    size = masks.size
    status = np.zeros((n, size), dtype=np.int32)
    ecc = np.zeros((n, size), dtype=np.int16)
    connected = np.ones(size, dtype=bool)
    full = (1 << n) - 1
    for s in range(n):
        reach = np.full(size, 1 << s, dtype=np.uint8)
        count = np.ones(size, dtype=np.int16)
        for d in range(1, n):
            nxt = _expand(reach, adj)
            new_count = _POP8[nxt]
            gained = new_count - count
            if not gained.any():
                break
            status[s] += d * gained
            ecc[s] = np.where(gained > 0, d, ecc[s])
            reach, count = nxt, new_count
        if s == 0:
            connected = reach == full
    mindeg = deg.min(axis=0)
    total = status.sum(axis=0)
    return {
        "connected": connected,
        "edges": deg.sum(axis=0) // 2,
        "min_degree": mindeg,
        "max_degree": deg.max(axis=0),
        "wiener": total // 2,
        "diameter": ecc.max(axis=0),
        "max_status": status.max(axis=0),
        "argmax_status": status.argmax(axis=0),
        "kappa": _connectivity(n, adj, connected, mindeg),
    }


# ---------------------------------------------------------------------------
# reduction


def _better(value, mask, best_value, best_mask):
    if best_value is None or value > best_value:
        return True
    return value == best_value and mask < best_mask


@dataclass
class KStats:
    """Per-k aggregate over the k-connected graphs seen so far."""

    k: int
    count: int = 0
    max_wiener: Optional[int] = None
    wiener_witness: Optional[int] = None
    max_diameter: Optional[int] = None
    diameter_witness: Optional[int] = None
    max_status: Optional[int] = None
    status_witness: Optional[tuple] = None  # (mask, vertex)
    violations: dict = field(default_factory=dict)  # kind -> (count, smallest mask)

    def merge(self, other: "KStats") -> "KStats":
        out = replace(self, violations=dict(self.violations))
        out.count += other.count
        if other.max_wiener is not None and _better(
            other.max_wiener, other.wiener_witness, out.max_wiener, out.wiener_witness
        ):
            out.max_wiener, out.wiener_witness = other.max_wiener, other.wiener_witness
        if other.max_diameter is not None and _better(
            other.max_diameter, other.diameter_witness, out.max_diameter, out.diameter_witness
        ):
            out.max_diameter, out.diameter_witness = other.max_diameter, other.diameter_witness
        if other.max_status is not None and _better(
            other.max_status, other.status_witness, out.max_status, out.status_witness
        ):
            out.max_status, out.status_witness = other.max_status, other.status_witness
        for kind, (c, m) in other.violations.items():
            c0, m0 = out.violations.get(kind, (0, m))
            out.violations[kind] = (c0 + c, min(m0, m))
        return out


@dataclass
class ScanSummary:
    """Merged result of an exhaustive scan over all graphs of order ``n``."""

    n: int
    graphs_scanned: int = 0
    connected_count: int = 0
    min_wiener: Optional[int] = None
    min_wiener_count: int = 0
    min_wiener_witness: Optional[int] = None
    max_wiener: Optional[int] = None
    max_wiener_count: int = 0
    max_wiener_paths: int = 0
    max_wiener_witness: Optional[int] = None
    per_k: dict = field(default_factory=dict)

    def merge(self, other: "ScanSummary") -> "ScanSummary":
        out = ScanSummary(self.n)
        out.graphs_scanned = self.graphs_scanned + other.graphs_scanned
        out.connected_count = self.connected_count + other.connected_count

        lo = [s for s in (self, other) if s.min_wiener is not None]
        if lo:
            best = min(s.min_wiener for s in lo)
            out.min_wiener = best
            out.min_wiener_count = sum(s.min_wiener_count for s in lo if s.min_wiener == best)
            out.min_wiener_witness = min(s.min_wiener_witness for s in lo if s.min_wiener == best)
        hi = [s for s in (self, other) if s.max_wiener is not None]
        if hi:
            best = max(s.max_wiener for s in hi)
            top = [s for s in hi if s.max_wiener == best]
            out.max_wiener = best
            out.max_wiener_count = sum(s.max_wiener_count for s in top)
            out.max_wiener_paths = sum(s.max_wiener_paths for s in top)
            out.max_wiener_witness = min(s.max_wiener_witness for s in top)

        for k in sorted(set(self.per_k) | set(other.per_k)):
            a, b = self.per_k.get(k), other.per_k.get(k)
            out.per_k[k] = b if a is None else a if b is None else a.merge(b)
        return out


def _first(masks, values, best):
    hit = np.nonzero(values == best)[0]
    return int(masks[hit[0]])


def _reduce_chunk(n, masks, inv) -> ScanSummary:
    out = ScanSummary(n, graphs_scanned=int(masks.size))
    # a single vertex counts as connected; kappa is only defined from n = 2
    conn = inv["connected"]
    out.connected_count = int(conn.sum())
    if out.connected_count:
        cm = masks[conn]
        w = inv["wiener"][conn]
        lo, hi = int(w.min()), int(w.max())
        out.min_wiener, out.max_wiener = lo, hi
        out.min_wiener_count = int((w == lo).sum())
        out.min_wiener_witness = _first(cm, w, lo)
        top = w == hi
        out.max_wiener_count = int(top.sum())
        is_path = (inv["edges"][conn] == n - 1) & (inv["max_degree"][conn] <= 2)
        out.max_wiener_paths = int((top & is_path).sum())
        out.max_wiener_witness = _first(cm, w, hi)

    for k in range(1, n - 1):
        st = KStats(k)
        sel = inv["kappa"] >= k
        st.count = int(sel.sum())
        if st.count:
            km = masks[sel]
            w = inv["wiener"][sel].astype(np.int64)
            dia = inv["diameter"][sel].astype(np.int64)
            ms = inv["max_status"][sel].astype(np.int64)
            st.max_wiener = int(w.max())
            st.wiener_witness = _first(km, w, st.max_wiener)
            st.max_diameter = int(dia.max())
            st.diameter_witness = _first(km, dia, st.max_diameter)
            st.max_status = int(ms.max())
            j = int(np.nonzero(ms == st.max_status)[0][0])
            st.status_witness = (int(km[j]), int(inv["argmax_status"][sel][j]))

            wb, sb, db = wiener_bound(n, k), status_bound(n, k), diameter_bound(n, k)
            checks = {
                "wiener": w * wb.denominator > wb.numerator,
                "status": ms * sb.denominator > sb.numerator,
                "diameter": dia > db,
            }
            for kind, bad in checks.items():
                if bad.any():
                    st.violations[kind] = (int(bad.sum()), int(km[bad].min()))
        out.per_k[k] = st
    return out


def _scan_chunk(args) -> ScanSummary:
    n, prefix, low_bits = args
    masks = (np.int64(prefix) << low_bits) + np.arange(1 << low_bits, dtype=np.int64)
    return _reduce_chunk(n, masks, batch_invariants(n, masks))


def _default_workers():
    env = os.environ.get("WIENER_WORKERS")
    return int(env) if env else 1


def scan_graphs(
    n: int,
    workers: Optional[int] = None,
    progress: Optional[Callable[[int, int, int], None]] = None,
    allow_large: bool = False,
) -> ScanSummary:
    """Evaluate every labeled graph of order ``n`` and merge the results.

    Parameters
    ----------
    n : int
        Order, ``1 <= n <= 7`` by default; 8 needs ``allow_large``.
    workers : int, optional
        Process count. Defaults to ``$WIENER_WORKERS`` or 1.
    progress : callable, optional
        Called as ``progress(chunks_done, chunks_total, graphs_done)``
        after each chunk is merged.
    """
    _check_order(n, allow_large)
    if workers is None:
        workers = _default_workers()
    num_edges = len(edge_pairs(n))
    low = min(num_edges, CHUNK_BITS)
    jobs = [(n, p, low) for p in range(1 << (num_edges - low))]
    summary = ScanSummary(n)

    def consume(results):
        nonlocal summary
        for i, part in enumerate(results, 1):
            summary = summary.merge(part)
            if progress is not None:
                progress(i, len(jobs), summary.graphs_scanned)

    if workers > 1 and len(jobs) > 1:
        from concurrent.futures import ProcessPoolExecutor

        with ProcessPoolExecutor(max_workers=workers) as pool:
            consume(pool.map(_scan_chunk, jobs))
    else:
        consume(map(_scan_chunk, jobs))
    return summary


@lru_cache(maxsize=None)
def _cached_scan(n, allow_large):
    return scan_graphs(n, allow_large=allow_large)


def _summary(n, summary, allow_large):
    if summary is not None:
        if summary.n != n:
            raise ParameterError(f"summary is for n={summary.n}, not n={n}")
        return summary
    return _cached_scan(n, allow_large)


def _check_k(n, k):
    if not (k >= 1 and n - 1 > k):
        raise ParameterError(f"need n - 1 > k >= 1, got n={n}, k={k}")


def _raise_violations(n, st: KStats):
    for kind in ("wiener", "status", "diameter"):
        if kind in st.violations:
            count, mask = st.violations[kind]
            g = graph_from_mask(n, mask)
            raise TheoremViolation(
                f"{count} {st.k}-connected graph(s) of order {n} exceed the {kind} bound; "
                f"first witness edges={g.edges()}",
                witness=g,
            )


# ---------------------------------------------------------------------------
# reports


@dataclass(frozen=True)
class ExtremalReport:
    n: int
    k: int
    graphs_scanned: int
    k_connected_count: int
    max_wiener: int
    witness: tuple
    bound: Fraction
    bound_floor: int
    gap: Fraction
    tight: bool
    harary_attains: Optional[bool] = None


def extremal_wiener(n: int, k: int, summary: Optional[ScanSummary] = None,
                    allow_large: bool = False) -> ExtremalReport:
    """Maximum Wiener index over all k-connected graphs of order ``n``.

    Raises :class:`TheoremViolation` if any k-connected graph exceeds
    :func:`wiener_bound`. The witness is re-verified with BFS and the flow
    based connectivity test before the report is returned.
    """
    _check_k(n, k)
    summary = _summary(n, summary, allow_large)
    st = summary.per_k[k]
    _raise_violations(n, st)
    if not st.count:
        raise ParameterError(f"no {k}-connected graph of order {n}")
    g = graph_from_mask(n, st.wiener_witness)
    assert wiener(g) == st.max_wiener and is_k_connected(g, k)
    bound = wiener_bound(n, k)
    gap = bound - st.max_wiener
    attains = None
    if k >= 2:
        h = harary(k, n)
        attains = is_k_connected(h, k) and wiener(h) == st.max_wiener
    return ExtremalReport(
        n=n,
        k=k,
        graphs_scanned=summary.graphs_scanned,
        k_connected_count=st.count,
        max_wiener=st.max_wiener,
        witness=tuple(g.edges()),
        bound=bound,
        bound_floor=math.floor(bound),
        gap=gap,
        tight=gap == 0,
        harary_attains=attains,
    )


@dataclass(frozen=True)
class DiameterReport:
    n: int
    k: int
    max_diameter: int
    witness: tuple
    bound: int
    attained: bool


def verify_diameter_bound(n: int, k: int, summary: Optional[ScanSummary] = None,
                          allow_large: bool = False) -> DiameterReport:
    _check_k(n, k)
    summary = _summary(n, summary, allow_large)
    st = summary.per_k[k]
    _raise_violations(n, st)
    g = graph_from_mask(n, st.diameter_witness)
    assert diameter(g) == st.max_diameter
    bound = diameter_bound(n, k)
    return DiameterReport(n, k, st.max_diameter, tuple(g.edges()), bound, st.max_diameter == bound)


@dataclass(frozen=True)
class StatusReport:
    n: int
    k: int
    max_status: int
    witness: tuple
    witness_vertex: int
    bound: Fraction
    attained: bool


def verify_status_bound(n: int, k: int, summary: Optional[ScanSummary] = None,
                        allow_large: bool = False) -> StatusReport:
    """Largest vertex status over all k-connected graphs of order ``n``."""
    _check_k(n, k)
    summary = _summary(n, summary, allow_large)
    st = summary.per_k[k]
    _raise_violations(n, st)
    mask, vertex = st.status_witness
    g = graph_from_mask(n, mask)
    assert statuses(g)[vertex] == st.max_status
    bound = status_bound(n, k)
    return StatusReport(n, k, st.max_status, tuple(g.edges()), vertex, bound, st.max_status == bound)


@dataclass(frozen=True)
class EntringerReport:
    n: int
    connected_count: int
    min_wiener: int
    min_count: int
    min_unique_complete: bool
    max_wiener: int
    max_count: int
    max_all_paths: bool
    labeled_paths: int

    @property
    def ok(self) -> bool:
        n = self.n
        return (
            self.min_wiener == n * (n - 1) // 2
            and self.min_unique_complete
            and self.max_wiener == n * (n * n - 1) // 6
            and self.max_all_paths
        )


def verify_entringer(n: int, summary: Optional[ScanSummary] = None,
                     allow_large: bool = False) -> EntringerReport:
    """Extremes of the Wiener index over all connected graphs of order ``n``.

    The minimum must be attained only by K_n; every maximiser must be a
    path, and all ``n!/2`` labeled paths must be maximisers.
    """
    if n < 2:
        raise ParameterError(f"need n >= 2, got n={n}")
    summary = _summary(n, summary, allow_large)
    complete_mask = (1 << len(edge_pairs(n))) - 1
    labeled_paths = math.factorial(n) // 2
    return EntringerReport(
        n=n,
        connected_count=summary.connected_count,
        min_wiener=summary.min_wiener,
        min_count=summary.min_wiener_count,
        min_unique_complete=summary.min_wiener_count == 1 and summary.min_wiener_witness == complete_mask,
        max_wiener=summary.max_wiener,
        max_count=summary.max_wiener_count,
        max_all_paths=summary.max_wiener_paths == summary.max_wiener_count == labeled_paths,
        labeled_paths=labeled_paths,
    )
