"""Closed forms for Harary graphs and upper bounds for k-connected graphs.

Everything is evaluated in exact rational arithmetic; floors are integer
divisions on non-negative operands.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .errors import ParameterError
from .graph import diameter as bfs_diameter
from .graph import statuses, wiener
from .harary import harary

__all__ = [
    "Regime",
    "HararyClosedForm",
    "BoundReport",
    "harary_closed_form",
    "diameter_bound",
    "status_bound",
    "wiener_bound",
    "mean_distance_bound",
    "bound_report",
    "Mismatch",
    "VerificationReport",
    "verify_closed_forms",
    "MeanDistanceDiscrepancy",
    "compare_mean_distance",
]

HALF = Fraction(1, 2)
QUARTER = Fraction(1, 4)


class Regime:
    EVEN = "Even"
    ODD_EVEN_SMALL = "OddEven-small"
    ODD_EVEN_LARGE = "OddEven-large"
    ODD_ODD_SMALL = "OddOdd-small"
    ODD_ODD_3K = "OddOdd-3k"
    ODD_ODD_LARGE = "OddOdd-large"


@dataclass(frozen=True)
class HararyClosedForm:
    """Diameter, vertex statuses and Wiener index of H(k, n).

    ``status_x`` is the status of a degree-k vertex; ``status_z`` is the
    status of the single degree-(k+1) vertex and only exists when k and n
    are both odd.
    """

    k: int
    n: int
    regime: str
    diameter: int
    status_x: Fraction
    status_z: Optional[Fraction]
    wiener: Fraction


def _floordiv(a, b):
    if a < 0 or b <= 0:
        raise ParameterError(f"floor({a}/{b}) outside the non-negative domain")
    return a // b


def harary_closed_form(k: int, n: int) -> HararyClosedForm:
    """Evaluate the closed forms for H(k, n), ``n - 1 > k >= 2``."""
    if not (k >= 2 and n - 1 > k):
        raise ParameterError(f"closed forms need n - 1 > k >= 2, got k={k}, n={n}")
    if k % 2 == 0:
        d = _floordiv(n + k - 2, k)
        q = 2 * n + k - 2 - k * d
        return HararyClosedForm(k, n, Regime.EVEN, d, HALF * d * q, None, QUARTER * n * d * q)

    if n % 2 == 0:
        # k odd, n even: n = 3k is impossible
        assert n != 3 * k
        if n <= 3 * k - 1:
            sx = Fraction(2 * n - k - 2)
            return HararyClosedForm(k, n, Regime.ODD_EVEN_SMALL, 2, sx, None, HALF * n * (2 * n - k - 2))
        assert n >= 3 * k + 1
        d = _floordiv(n - k - 3, 2 * (k - 1)) + 2
        q = 2 * n + 4 * k - 8 - 2 * (k - 1) * d
        sx = HALF * d * q - (k - 2)
        w = QUARTER * n * d * q - HALF * n * (k - 2)
        return HararyClosedForm(k, n, Regime.ODD_EVEN_LARGE, d, sx, None, w)

    # both odd: n = 3k - 1 and n = 3k + 1 are impossible
    assert n not in (3 * k - 1, 3 * k + 1)
    if n <= 3 * k - 2:
        sz = Fraction(2 * n - k - 3)
        sx = Fraction(2 * n - k - 2)
        w = HALF * n * (2 * n - k - 2) - HALF
        return HararyClosedForm(k, n, Regime.ODD_ODD_SMALL, 2, sx, sz, w)
    if n == 3 * k:
        sz = Fraction(2 * n - k - 3)
        sx = Fraction(2 * n - k - 1)
        w = HALF * n * (2 * n - k - 1) - 1
        return HararyClosedForm(k, n, Regime.ODD_ODD_3K, 3, sx, sz, w)
    assert n >= 3 * k + 2
    d = _floordiv(n - k - 2, 2 * (k - 1)) + 2
    sz = HALF * d * (2 * n + 4 * k - 10 - 2 * (k - 1) * d) - (k - 3)
    q = 2 * n + 4 * k - 8 - 2 * (k - 1) * d
    sx = HALF * d * q - (k - 2)
    w = QUARTER * n * d * q - HALF * (n * (k - 2) + d - 1)
    return HararyClosedForm(k, n, Regime.ODD_ODD_LARGE, d, sx, sz, w)


def _check_bound_domain(n, k):
    # k = n - 1 is accepted: the expressions then give the complete-graph values
    if not (k >= 1 and n - 1 >= k):
        raise ParameterError(f"bounds need n - 1 > k >= 1, got n={n}, k={k}")


def diameter_bound(n: int, k: int) -> int:
    """Largest possible diameter of a k-connected graph of order n."""
    _check_bound_domain(n, k)
    return _floordiv(n + k - 2, k)


def status_bound(n: int, k: int) -> Fraction:
    """Largest possible vertex status in a k-connected graph of order n."""
    d = diameter_bound(n, k)
    return HALF * d * (2 * n + k - 2 - k * d)


def wiener_bound(n: int, k: int) -> Fraction:
    """Upper bound on the Wiener index of a k-connected graph of order n.

    May be non-integral for odd k, e.g. ``wiener_bound(5, 3) == 25/2``.
    """
    d = diameter_bound(n, k)
    return QUARTER * n * d * (2 * n + k - 2 - k * d)


def mean_distance_bound(n: int, k: int) -> Fraction:
    """Mean-distance form of the Wiener bound, for even ``k`` only.

    Evaluates ``floor((n+k-1)/k) * (n - 1 - (k/2) floor((n-1)/k)) / (n - 1)``.
    """
    if not (k >= 2 and n - 1 > k):
        raise ParameterError(f"mean-distance bound needs n - 1 > k >= 2, got n={n}, k={k}")
    if k % 2:
        raise ParameterError(f"mean-distance bound is only supported for even k, got k={k}")
    a = _floordiv(n + k - 1, k)
    b = _floordiv(n - 1, k)
    return a * (n - 1 - Fraction(k, 2) * b) / (n - 1)


@dataclass(frozen=True)
class BoundReport:
    n: int
    k: int
    diameter_bound: int
    status_bound: Fraction
    wiener_bound: Fraction
    wiener_bound_floor: int
    mean_distance_bound: Optional[Fraction]
    boundary: bool = False

    @property
    def note(self) -> str:
        if self.boundary:
            return "boundary case k = n - 1: formula coincides with the complete graph"
        return ""


def bound_report(n: int, k: int) -> BoundReport:
    wb = wiener_bound(n, k)
    boundary = k == n - 1
    mean = None
    if k % 2 == 0 and not boundary:
        mean = mean_distance_bound(n, k)
    return BoundReport(
        n=n,
        k=k,
        diameter_bound=diameter_bound(n, k),
        status_bound=status_bound(n, k),
        wiener_bound=wb,
        wiener_bound_floor=wb.numerator // wb.denominator,
        mean_distance_bound=mean,
        boundary=boundary,
    )


@dataclass(frozen=True)
class Mismatch:
    k: int
    n: int
    quantity: str
    expected: object
    observed: object


@dataclass
class VerificationReport:
    pairs: list = field(default_factory=list)
    mismatches: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.mismatches


def _check_pair(kn):
    k, n = kn
    cf = harary_closed_form(k, n)
    g = harary(k, n)
    out = []
    d = bfs_diameter(g)
    if d != cf.diameter:
        out.append(Mismatch(k, n, "diameter", cf.diameter, d))
    st = statuses(g)
    z = (n - 1) // 2 if cf.status_z is not None else None
    for v, s in enumerate(st):
        want = cf.status_z if v == z else cf.status_x
        if s != want:
            label = "status_z" if v == z else "status_x"
            out.append(Mismatch(k, n, f"{label}[{v}]", want, s))
    w = wiener(g)
    if w != cf.wiener:
        out.append(Mismatch(k, n, "wiener", cf.wiener, w))
    return out


def verify_closed_forms(k_range, n_range, workers: int = 1) -> VerificationReport:
    """Compare every closed form against BFS on the constructed graph.

    Pairs outside ``n - 1 > k >= 2`` are skipped. Every vertex status is
    checked, with vertex ``(n-1)/2`` compared against the degree-(k+1)
    formula when k and n are both odd.
    """
    pairs = sorted((k, n) for k in k_range for n in n_range if k >= 2 and n - 1 > k)
    if workers > 1 and len(pairs) > 1:
        from concurrent.futures import ProcessPoolExecutor

        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_check_pair, pairs, chunksize=8))
    else:
        results = [_check_pair(p) for p in pairs]
    report = VerificationReport(pairs=pairs)
    for found in results:
        report.mismatches.extend(found)
    return report


@dataclass(frozen=True)
class MeanDistanceDiscrepancy:
    n: int
    k: int
    scaled_mean_bound: Fraction
    wiener_bound: Fraction


def compare_mean_distance(k_range, n_range) -> tuple[int, list]:
    """Check ``mean_distance_bound * n(n-1)/2 == wiener_bound`` for even k.

    Returns the number of pairs compared and the list of discrepancies.
    """
    checked = 0
    bad = []
    for k in k_range:
        if k < 2 or k % 2:
            continue
        for n in n_range:
            if n - 1 <= k:
                continue
            checked += 1
            scaled = mean_distance_bound(n, k) * (n * (n - 1) // 2)
            wb = wiener_bound(n, k)
            if scaled != wb:
                bad.append(MeanDistanceDiscrepancy(n, k, scaled, wb))
    return checked, bad
