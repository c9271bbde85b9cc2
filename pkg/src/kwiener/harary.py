"""Harary graphs H(k, n): k-connected graphs of order n with ceil(kn/2) edges."""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .errors import ParameterError
from .graph import Graph

__all__ = ["HararyCase", "HararySpec", "harary", "harary_spec", "rotation_is_automorphism"]


class HararyCase(enum.Enum):
    EVEN = "Even"
    ODD_EVEN = "OddEven"
    ODD_ODD = "OddOdd"


@dataclass(frozen=True)
class HararySpec:
    k: int
    n: int
    case: HararyCase


def harary_spec(k: int, n: int) -> HararySpec:
    if k < 2:
        raise ParameterError(f"Harary graph needs k >= 2, got k={k}")
    if n <= k:
        raise ParameterError(f"Harary graph needs n > k, got k={k}, n={n}")
    if k % 2 == 0:
        case = HararyCase.EVEN
    elif n % 2 == 0:
        case = HararyCase.ODD_EVEN
    else:
        case = HararyCase.ODD_ODD
    return HararySpec(k, n, case)


def _circulant_edges(n, reach):
    edges = set()
    for i in range(n):
        for j in range(1, reach + 1):
            u, v = i, (i + j) % n
            edges.add((min(u, v), max(u, v)))
    return edges


def harary(k: int, n: int) -> Graph:
    """Build H(k, n) on vertices placed ``0..n-1`` around a circle.

    * k even: each vertex joins the nearest ``k/2`` vertices on each side.
    * k odd, n even: the nearest ``(k-1)/2`` on each side plus the
      diametrically opposite vertex ``i + n/2``.
    * k, n odd: H(k-1, n) plus the chords ``{i, i + (n-1)/2}`` for
      ``0 <= i <= (n-1)/2``. Vertex ``(n-1)/2`` ends up with degree k+1.

    Raises
    ------
    ParameterError
        Unless ``n > k >= 2``.
    """
    spec = harary_spec(k, n)
    edges = _circulant_edges(n, k // 2)
    if spec.case is HararyCase.ODD_EVEN:
        for i in range(n // 2):
            edges.add((i, i + n // 2))
    elif spec.case is HararyCase.ODD_ODD:
        half = (n - 1) // 2
        for i in range(half + 1):
            edges.add((i, i + half))
    return Graph.from_edges(n, sorted(edges))


def rotation_is_automorphism(g: Graph) -> bool:
    """Whether ``i -> i + 1 (mod n)`` maps the edge set onto itself."""
    n = g.n
    edges = set(g.edges())
    for u, v in edges:
        a, b = (u + 1) % n, (v + 1) % n
        if (min(a, b), max(a, b)) not in edges:
            return False
    return True
