"""Classical invariants of weaving knots from the algebra coefficients.

The closure of the three-strand braid power carries a trace-induced
two-variable invariant; specializing the trace variable produces all the
polynomial invariants handled here:

* Jones:      V(t)  = t^{-n-1} ( (1+t)^2 C0 + (1+t)(C1+C2) t^2 + (C12+C21) t^4 )
* Alexander:  Delta(t) = t^{-n+1} ( C12 + C21 )
* HOMFLY-PT:  eliminate the trace variable via z = a^2 (1-q)/(1-a^2), so
  w = 1-q+z = (1-q)/(1-a^2) and the closure expression splits into three
  a^2-slices

      G_{-1} = q^{1-n}  C0 / (1-q)^2
      G_0    = q^{1-n} ( (C1+C2)/(1-q) - 2 C0/(1-q)^2 )
      G_1    = q^{1-n} ( C0/(1-q)^2 - (C1+C2)/(1-q) + C12 + C21 )

  each of which is symmetric under q -> 1/q and rewrites exactly in powers
  of y = q + 1/q - 2 = z^2, giving H(a,z) = sum_j G~_j(z^2) a^{2j}.  The
  divisions and the symmetric rewriting must be exact; failures raise
  ChangeOfVariablesError.  Signs are pinned by the n=4 table value.

Signature and the Rasmussen s-invariant come from the alternating-diagram
count formulas; the bracket state sum in :mod:`weavekit.bracket` provides
an independent Jones oracle.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .bracket import jones_bracket_oracle
from .errors import ChangeOfVariablesError, NonDivisible, RangeError
from .hecke import HeckeCoeffs, coeffs
from .laurent import BiLaurentPoly, LaurentPoly, laurent

__all__ = [
    "WeaveId",
    "DiagramCounts",
    "diagram_counts",
    "signature_alternating",
    "signature",
    "rasmussen_s",
    "jones",
    "jones_from_coeffs",
    "jones_bracket_oracle",
    "alexander",
    "alexander_from_coeffs",
    "seifert_genus",
    "homfly",
    "homfly_from_coeffs",
    "specialize_jones",
    "specialize_alexander",
    "jones_coefficient_formulas",
]


@dataclass(frozen=True)
class WeaveId:
    """The weaving link W(p,n): closure of (sigma1 sigma2^{-1} ...)^n on p strands.

    It is a knot exactly when gcd(p,n) = 1; operations that require a knot
    say so.
    """

    p: int
    n: int

    def __post_init__(self) -> None:
        if self.p < 2:
            raise RangeError(f"strand count must be >= 2, got {self.p}")
        if self.n < 1:
            raise RangeError(f"braid power must be >= 1, got {self.n}")

    def is_knot(self) -> bool:
        return math.gcd(self.p, self.n) == 1


@dataclass(frozen=True)
class DiagramCounts:
    """Crossing and Seifert-circle counts of the standard alternating diagram."""

    crossings: int
    negatives: int
    positives: int
    a_circles: int


def diagram_counts(w: WeaveId) -> DiagramCounts:
    """Counts for the standard diagram of W(p,n), split by strand parity."""
    if w.p < 3:
        raise RangeError("diagram counts are defined for p >= 3")
    n = w.n
    if w.p % 2 == 1:
        k = (w.p - 1) // 2
        return DiagramCounts(
            crossings=2 * k * n, negatives=k * n, positives=k * n,
            a_circles=1 + k * n,
        )
    k = w.p // 2
    return DiagramCounts(
        crossings=(2 * k - 1) * n, negatives=(k - 1) * n, positives=k * n,
        a_circles=(k - 1) * n + 2,
    )


def signature_alternating(o: int, y: int) -> int:
    """Signature of a non-split reduced alternating diagram from its counts.

    ``o`` counts the circles of the all-A smoothing, ``y`` the positive
    crossings.
    """
    return o - y - 1


def signature(w: WeaveId) -> int:
    """Signature of W(p,n): zero for odd p, 1-n for even p."""
    if w.p % 2 == 1:
        return 0
    return 1 - w.n


def rasmussen_s(w: WeaveId) -> int:
    """Rasmussen s-invariant; equals the signature for alternating knots."""
    return signature(w)


# ---------------------------------------------------------------------------
# Jones / Alexander
# ---------------------------------------------------------------------------


def jones_from_coeffs(h: HeckeCoeffs) -> LaurentPoly:
    """Assemble V(t) from an already-computed coefficient record."""
    one_plus_t = laurent(0, [1, 1])
    body = (
        one_plus_t * one_plus_t * h.c0
        + (one_plus_t * (h.c1 + h.c2)).shift(2)
        + (h.c12 + h.c21).shift(4)
    )
    return body.shift(-h.n - 1)


def jones(n: int) -> LaurentPoly:
    """Jones polynomial of the closure of (sigma1 sigma2^{-1})^n.

    Defined for every n >= 1; when 3 | n the closure is a 3-component link
    and the knot-only span statements do not apply.
    """
    return jones_from_coeffs(coeffs(n))


def alexander_from_coeffs(h: HeckeCoeffs) -> LaurentPoly:
    """Assemble Delta(t) from an already-computed coefficient record."""
    return (h.c12 + h.c21).shift(1 - h.n)


def alexander(n: int) -> LaurentPoly:
    """Alexander polynomial of W(3,n), symmetric with degree n-1."""
    return alexander_from_coeffs(coeffs(n))


def seifert_genus(n: int) -> int:
    """Seifert genus n-1, read off the Alexander polynomial.

    Requires a knot (gcd(3,n)=1); the polynomial must be monic up to sign,
    which is what makes the complement fibered.
    """
    if math.gcd(3, n) != 1:
        raise RangeError(f"W(3,{n}) is a link; genus requires gcd(3,n)=1")
    delta = alexander(n)
    top = delta.coefficient(delta.highest_exp)
    assert abs(top) == 1, f"Alexander polynomial not monic at n={n}"
    assert delta.span() % 2 == 0
    return delta.span() // 2


# ---------------------------------------------------------------------------
# HOMFLY-PT
# ---------------------------------------------------------------------------


def _symmetric_to_z_even(g: LaurentPoly) -> dict[int, int]:
    """Rewrite a q->1/q symmetric Laurent polynomial in powers of z^2.

    Uses y = q + 1/q - 2 = z^2: repeatedly strip the top coefficient c at
    q^d with c*y^d (whose q-expansion is monic at q^d).  Returns a map
    z-exponent (even) -> coefficient.
    """
    if g != g.invert_variable():
        raise ChangeOfVariablesError("slice not symmetric under q -> 1/q")
    y = laurent(-1, [1, -2, 1])
    y_pow = [LaurentPoly.one()]
    out: dict[int, int] = {}
    cur = g
    while not cur.is_zero() and cur.highest_exp > 0:
        d = cur.highest_exp
        c = cur.coefficient(d)
        while len(y_pow) <= d:
            y_pow.append(y_pow[-1] * y)
        cur = cur - c * y_pow[d]
        if not cur.is_zero() and cur.highest_exp >= d:
            raise ChangeOfVariablesError("degree did not drop in rewriting")
        out[2 * d] = c
    if not cur.is_zero():
        if cur.span() != 0:
            raise ChangeOfVariablesError("non-constant remainder in rewriting")
        out[0] = cur.coefficient(0)
    return out


def homfly_from_coeffs(h: HeckeCoeffs) -> BiLaurentPoly:
    """Assemble H(a,z) from an already-computed coefficient record."""
    one_minus_q = laurent(0, [1, -1])
    sq = one_minus_q * one_minus_q
    try:
        c0_div2 = h.c0.exact_div(sq)
        c12_div = (h.c1 + h.c2).exact_div(one_minus_q)
    except NonDivisible as exc:
        hint = " (3 | n gives a 3-component link, outside this pipeline)" \
            if h.n % 3 == 0 else ""
        raise ChangeOfVariablesError(
            f"trace elimination inexact at n={h.n}{hint}: {exc}"
        ) from exc
    shift = 1 - h.n
    slices = {
        -1: c0_div2.shift(shift),
        0: (c12_div - 2 * c0_div2).shift(shift),
        1: (c0_div2 - c12_div + h.c12 + h.c21).shift(shift),
    }
    entries = []
    for j, g in slices.items():
        for ze, c in _symmetric_to_z_even(g).items():
            entries.append((2 * j, ze, c))
    return BiLaurentPoly.from_entries(entries)


def homfly(n: int) -> BiLaurentPoly:
    """HOMFLY-PT polynomial of W(3,n) in (a, z), unknot normalized to 1."""
    return homfly_from_coeffs(coeffs(n))


def _substitute_z2(h: BiLaurentPoly, a_exponent_scale: int) -> LaurentPoly:
    """Map a -> t^scale and z^2 -> t - 2 + 1/t, returning a polynomial in t."""
    y_t = laurent(-1, [1, -2, 1])
    y_pow = [LaurentPoly.one()]
    acc = LaurentPoly.zero()
    for (ea, ez), c in sorted(h.terms.items()):
        if ez % 2 != 0 or ez < 0:
            raise ChangeOfVariablesError("odd or negative z-exponent")
        d = ez // 2
        while len(y_pow) <= d:
            y_pow.append(y_pow[-1] * y_t)
        acc = acc + (c * y_pow[d]).shift(ea * a_exponent_scale)
    return acc


def specialize_jones(h: BiLaurentPoly) -> LaurentPoly:
    """The Jones specialization a -> t, z^2 -> t - 2 + 1/t."""
    return _substitute_z2(h, 1)


def specialize_alexander(h: BiLaurentPoly) -> LaurentPoly:
    """The Alexander specialization a -> 1, z^2 -> t - 2 + 1/t."""
    return _substitute_z2(h, 0)


# ---------------------------------------------------------------------------
# Closed forms for the low-order Jones coefficients
# ---------------------------------------------------------------------------

_JONES_COEFF_THRESHOLDS = {0: 2, 1: 3, 2: 5, 3: 5}


def jones_coefficient_formulas(n: int, k: int) -> int:
    """Closed-form coefficient of t^(-n+k) in V (k-th from the bottom).

    Valid for k in {0,1,2,3} from the per-k threshold upward; by
    amphichirality the same value sits at t^(n-k).
    """
    if k not in _JONES_COEFF_THRESHOLDS:
        raise RangeError(f"no closed form for offset k={k}")
    if n < _JONES_COEFF_THRESHOLDS[k]:
        raise RangeError(f"offset {k} formula requires n >= {_JONES_COEFF_THRESHOLDS[k]}")
    sign = (-1) ** n
    if k == 0:
        return sign
    if k == 1:
        return -sign * n
    if k == 2:
        return sign * n * (n - 1) // 2
    return -sign * (n * (n - 1) * (n - 2) // 6 + n)
