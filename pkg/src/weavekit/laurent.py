"""Exact Laurent-polynomial arithmetic over arbitrary-precision integers.

One-variable values are stored densely: a ``lowest_exp`` and the coefficient
run from that exponent upward.  The polynomials that arise here (transfer
coefficients, Jones/Alexander specializations, homology generating
functions) have essentially no internal gaps, so the dense layout wastes
nothing and keeps convolution products simple.  Two-variable values are kept
as a sparse map from exponent pairs to coefficients.

Canonical form: the first and last stored coefficients are nonzero, and the
zero polynomial is the unique value with an empty coefficient run and
``lowest_exp == 0``.  All values are immutable and all operations are pure,
so instances may be shared freely across threads.

Coefficients are Python ints throughout — they exceed 2**450 in the larger
computations, so there is deliberately no machine-integer fast path.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Iterator, Mapping

from .errors import NonDivisible

__all__ = [
    "LaurentPoly",
    "BiLaurentPoly",
    "laurent",
    "format_laurent",
]


def _trim(lowest_exp: int, coeffs: Iterable[int]) -> tuple[int, tuple[int, ...]]:
    """Strip zero coefficients from both ends; zero maps to (0, ())."""
    run = list(coeffs)
    lo = 0
    hi = len(run)
    while lo < hi and run[lo] == 0:
        lo += 1
    while hi > lo and run[hi - 1] == 0:
        hi -= 1
    if lo == hi:
        return 0, ()
    return lowest_exp + lo, tuple(run[lo:hi])


@dataclass(frozen=True)
class LaurentPoly:
    """A Laurent polynomial sum(coeffs[k] * x**(lowest_exp + k))."""

    lowest_exp: int = 0
    coeffs: tuple[int, ...] = ()

    # -- constructors -----------------------------------------------------

    @staticmethod
    def zero() -> LaurentPoly:
        return LaurentPoly(0, ())

    @staticmethod
    def one() -> LaurentPoly:
        return LaurentPoly(0, (1,))

    @staticmethod
    def monomial(c: int, e: int = 0) -> LaurentPoly:
        if c == 0:
            return LaurentPoly.zero()
        return LaurentPoly(e, (c,))

    @staticmethod
    def from_terms(terms: Mapping[int, int]) -> LaurentPoly:
        """Build from an exponent -> coefficient map (zeros allowed)."""
        nonzero = {e: c for e, c in terms.items() if c != 0}
        if not nonzero:
            return LaurentPoly.zero()
        lo = min(nonzero)
        hi = max(nonzero)
        run = [nonzero.get(e, 0) for e in range(lo, hi + 1)]
        return LaurentPoly(lo, tuple(run))

    # -- inspection -------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def highest_exp(self) -> int:
        """Exponent of the last stored coefficient (0 for the zero value)."""
        if not self.coeffs:
            return 0
        return self.lowest_exp + len(self.coeffs) - 1

    def span(self) -> int:
        """highest_exp - lowest_exp (0 for monomials and for zero)."""
        return self.highest_exp - self.lowest_exp

    def coefficient(self, k: int) -> int:
        """The exact coefficient of x**k."""
        idx = k - self.lowest_exp
        if 0 <= idx < len(self.coeffs):
            return self.coeffs[idx]
        return 0

    def terms(self) -> Iterator[tuple[int, int]]:
        """Yield (exponent, coefficient) pairs, ascending, zeros skipped."""
        for k, c in enumerate(self.coeffs):
            if c != 0:
                yield self.lowest_exp + k, c

    def eval_rational(self, x: Fraction | int) -> Fraction:
        """Evaluate exactly at a rational point (Horner from the top)."""
        x = Fraction(x)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc * x**self.lowest_exp

    # -- ring operations --------------------------------------------------

    def __add__(self, other: LaurentPoly) -> LaurentPoly:
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        if self.is_zero():
            return other
        if other.is_zero():
            return self
        lo = min(self.lowest_exp, other.lowest_exp)
        hi = max(self.highest_exp, other.highest_exp)
        run = [0] * (hi - lo + 1)
        for k, c in enumerate(self.coeffs):
            run[self.lowest_exp + k - lo] += c
        for k, c in enumerate(other.coeffs):
            run[other.lowest_exp + k - lo] += c
        return LaurentPoly(*_trim(lo, run))

    def __neg__(self) -> LaurentPoly:
        return LaurentPoly(self.lowest_exp, tuple(-c for c in self.coeffs))

    def __sub__(self, other: LaurentPoly) -> LaurentPoly:
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other: LaurentPoly | int) -> LaurentPoly:
        if isinstance(other, int):
            other = LaurentPoly.monomial(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        if self.is_zero() or other.is_zero():
            return LaurentPoly.zero()
        run = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                run[i + j] += a * b
        return LaurentPoly(*_trim(self.lowest_exp + other.lowest_exp, run))

    __rmul__ = __mul__

    def shift(self, k: int) -> LaurentPoly:
        """Multiply by x**k."""
        if self.is_zero():
            return self
        return LaurentPoly(self.lowest_exp + k, self.coeffs)

    def exact_div(self, d: LaurentPoly) -> LaurentPoly:
        """Exact quotient in the Laurent ring; NonDivisible on remainder."""
        if d.is_zero():
            raise NonDivisible("division by the zero polynomial")
        if self.is_zero():
            return LaurentPoly.zero()
        # Long division of the underlying ordinary polynomials, top down.
        rem = list(self.coeffs)
        div = d.coeffs
        dn = len(div)
        lead = div[-1]
        qlen = len(rem) - dn + 1
        if qlen <= 0:
            raise NonDivisible("divisor span exceeds dividend span")
        quot = [0] * qlen
        for i in range(qlen - 1, -1, -1):
            top = rem[i + dn - 1]
            if top == 0:
                continue
            c, r = divmod(top, lead)
            if r != 0:
                raise NonDivisible("leading coefficient does not divide exactly")
            quot[i] = c
            for j, b in enumerate(div):
                rem[i + j] -= c * b
        if any(rem):
            raise NonDivisible("nonzero remainder")
        return LaurentPoly(*_trim(self.lowest_exp - d.lowest_exp, quot))

    # -- substitutions ----------------------------------------------------

    def substitute_power(self, k: int) -> LaurentPoly:
        """x -> x**k on exponents (k nonzero; k may be negative)."""
        if k == 0:
            raise ValueError("substitute_power requires a nonzero exponent")
        if k == 1 or self.is_zero():
            return self
        return LaurentPoly.from_terms({e * k: c for e, c in self.terms()})

    def invert_variable(self) -> LaurentPoly:
        """x -> 1/x, i.e. reverse the coefficient run."""
        return self.substitute_power(-1)

    def alternate_signs(self) -> LaurentPoly:
        """Multiply the coefficient of x**k by (-1)**k."""
        run = tuple(
            -c if (self.lowest_exp + i) % 2 else c
            for i, c in enumerate(self.coeffs)
        )
        return LaurentPoly(self.lowest_exp, run)

    # -- serialization ----------------------------------------------------

    def to_json(self) -> dict:
        """{"lowest_exp": int, "coeffs": [decimal strings]} (exact at any size)."""
        return {"lowest_exp": self.lowest_exp, "coeffs": [str(c) for c in self.coeffs]}

    @staticmethod
    def from_json(obj: Mapping) -> LaurentPoly:
        return LaurentPoly(*_trim(int(obj["lowest_exp"]), [int(s) for s in obj["coeffs"]]))


def laurent(lowest_exp: int, coeffs: Iterable[int]) -> LaurentPoly:
    """Convenience constructor with canonical trimming."""
    return LaurentPoly(*_trim(lowest_exp, coeffs))


def format_laurent(p: LaurentPoly, var: str = "t") -> str:
    """Human-readable rendering, descending exponents: ``t^4 - 4t^3 + ... + t^-4``."""
    if p.is_zero():
        return "0"
    parts: list[str] = []
    for e, c in sorted(p.terms(), reverse=True):
        mag = abs(c)
        if e == 0:
            body = str(mag)
        else:
            pow_ = var if e == 1 else f"{var}^{e}"
            body = pow_ if mag == 1 else f"{mag}{pow_}"
        if not parts:
            parts.append(body if c > 0 else f"-{body}")
        else:
            parts.append(f"+ {body}" if c > 0 else f"- {body}")
    return " ".join(parts)


@dataclass(frozen=True)
class BiLaurentPoly:
    """A sparse two-variable Laurent polynomial sum(c * x**e1 * y**e2).

    ``terms`` maps exponent pairs to nonzero coefficients.  Equality is
    coefficientwise; construction drops zeros.
    """

    terms: Mapping[tuple[int, int], int] = field(default_factory=dict)

    def __post_init__(self) -> None:
        cleaned = {k: c for k, c in self.terms.items() if c != 0}
        object.__setattr__(self, "terms", cleaned)

    @staticmethod
    def zero() -> BiLaurentPoly:
        return BiLaurentPoly({})

    @staticmethod
    def from_entries(entries: Iterable[tuple[int, int, int]]) -> BiLaurentPoly:
        """Accumulate (e1, e2, c) triples, summing duplicates."""
        acc: dict[tuple[int, int], int] = {}
        for e1, e2, c in entries:
            acc[(e1, e2)] = acc.get((e1, e2), 0) + c
        return BiLaurentPoly(acc)

    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, e1: int, e2: int) -> int:
        return self.terms.get((e1, e2), 0)

    def __add__(self, other: BiLaurentPoly) -> BiLaurentPoly:
        if not isinstance(other, BiLaurentPoly):
            return NotImplemented
        acc = dict(self.terms)
        for k, c in other.terms.items():
            acc[k] = acc.get(k, 0) + c
        return BiLaurentPoly(acc)

    def __neg__(self) -> BiLaurentPoly:
        return BiLaurentPoly({k: -c for k, c in self.terms.items()})

    def __sub__(self, other: BiLaurentPoly) -> BiLaurentPoly:
        if not isinstance(other, BiLaurentPoly):
            return NotImplemented
        return self + (-other)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BiLaurentPoly):
            return NotImplemented
        return dict(self.terms) == dict(other.terms)

    def slice_first(self, e1: int) -> LaurentPoly:
        """The one-variable coefficient of x**e1 (a polynomial in y)."""
        return LaurentPoly.from_terms(
            {k[1]: c for k, c in self.terms.items() if k[0] == e1}
        )

    def first_exponents(self) -> list[int]:
        """Sorted distinct exponents of the first variable."""
        return sorted({e1 for e1, _ in self.terms})

    def to_json(self) -> list[dict]:
        """Sorted [{"e1", "e2", "c"}] with decimal-string coefficients."""
        return [
            {"e1": e1, "e2": e2, "c": str(self.terms[(e1, e2)])}
            for e1, e2 in sorted(self.terms)
        ]

    @staticmethod
    def from_json(entries: Iterable[Mapping]) -> BiLaurentPoly:
        return BiLaurentPoly.from_entries(
            (int(t["e1"]), int(t["e2"]), int(t["c"])) for t in entries
        )
