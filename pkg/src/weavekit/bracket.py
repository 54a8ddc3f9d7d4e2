"""Kauffman-bracket state sum over the standard closed three-braid diagram.

This is an independent route to the Jones polynomial used purely as an
oracle: it never touches the algebra coefficients.  The diagram of the
closure of (sigma1·sigma2^{-1})^n has 2n crossings stacked in levels
0..2n-1 — even levels carry the positive sigma1 crossing (strands 0,1),
odd levels the negative sigma2 crossing (strands 1,2) — and the closure
identifies level 2n with level 0.

Each crossing resolves two ways.  The bracket weights are

    positive crossing:  A * (pass-through)  +  A^{-1} * (cap/cup)
    negative crossing:  A^{-1} * (pass-through)  +  A * (cap/cup)

and a state with exponent sum e and c closed circles contributes
A^e * delta^(c-1) with delta = -A^2 - A^{-2}.  The diagram has writhe
zero, so no writhe correction is needed and the bracket equals the Jones
polynomial after A -> t^{-1/4}; every surviving exponent of A must then
be divisible by four, which is asserted.

Circles are counted with a union-find over the 6n arc segments (one per
level and strand position).  The pass-through identifications of the
uninvolved strand are state-independent and merged once into a template.
The state range may be split across worker processes; each chunk returns
an (exponent, circle-count) histogram and summation is order-independent,
so results are bit-identical for any split.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from typing import Iterable

from .errors import RangeError, StateSumParityError
from .laurent import LaurentPoly, laurent

__all__ = ["jones_bracket_oracle"]

_MAX_POWER = 10  # 2^(2n) states; beyond this the sum is impractical


def _diagram(n: int):
    """Static crossing data: endpoint indices, signs, and the template parent."""
    levels = 2 * n
    nodes = 3 * levels

    def idx(level: int, pos: int) -> int:
        return 3 * (level % levels) + pos

    crossings = []
    parent = list(range(nodes))
    for lv in range(levels):
        a = 0 if lv % 2 == 0 else 1
        through = 2 if lv % 2 == 0 else 0
        positive = lv % 2 == 0
        crossings.append(
            (idx(lv, a), idx(lv, a + 1), idx(lv + 1, a), idx(lv + 1, a + 1), positive)
        )
        # The strand not involved in this crossing just continues downward.
        _union(parent, idx(lv, through), idx(lv + 1, through))
    return crossings, parent


def _find(parent: list[int], x: int) -> int:
    while parent[x] != x:
        parent[x] = parent[parent[x]]
        x = parent[x]
    return x


def _union(parent: list[int], x: int, y: int) -> None:
    rx, ry = _find(parent, x), _find(parent, y)
    if rx != ry:
        parent[ry] = rx


def _histogram(n: int, start: int, stop: int) -> dict[tuple[int, int], int]:
    """Count states by (A-exponent, circle count) over the index range."""
    crossings, template = _diagram(n)
    nodes = len(template)
    pos_mask = sum(1 << k for k in range(2 * n) if k % 2 == 0)
    neg_mask = sum(1 << k for k in range(2 * n) if k % 2 == 1)
    counts: dict[tuple[int, int], int] = {}
    for state in range(start, stop):
        parent = template.copy()
        for k, (in_a, in_b, out_a, out_b, _pos) in enumerate(crossings):
            if state >> k & 1:
                _union(parent, in_a, in_b)      # cap/cup resolution
                _union(parent, out_a, out_b)
            else:
                _union(parent, in_a, out_a)     # pass-through resolution
                _union(parent, in_b, out_b)
        circles = len({_find(parent, x) for x in range(nodes)})
        # bit 1 on a positive crossing picks the A^{-1} term, on a negative
        # crossing the A term; exponent sum collapses to a popcount formula.
        exp = 2 * ((state & neg_mask).bit_count() - (state & pos_mask).bit_count())
        key = (exp, circles)
        counts[key] = counts.get(key, 0) + 1
    return counts


def _merge(parts: Iterable[dict[tuple[int, int], int]]) -> dict[tuple[int, int], int]:
    total: dict[tuple[int, int], int] = {}
    for part in parts:
        for key, c in part.items():
            total[key] = total.get(key, 0) + c
    return total


def jones_bracket_oracle(n: int, jobs: int = 1) -> LaurentPoly:
    """Jones polynomial of W(3,n) by brute-force bracket summation.

    Enumerates all 2^(2n) resolutions; n <= 10 is enforced.  ``jobs``
    splits the state range over processes; the result is identical for
    any split.
    """
    if n < 1:
        raise RangeError(f"braid power must be >= 1, got {n}")
    if n > _MAX_POWER:
        raise RangeError(f"state sum limited to n <= {_MAX_POWER}, got {n}")

    total_states = 1 << (2 * n)
    if jobs <= 1 or total_states < 1 << 12:
        counts = _histogram(n, 0, total_states)
    else:
        chunk = -(-total_states // jobs)
        spans = [
            (n, lo, min(lo + chunk, total_states))
            for lo in range(0, total_states, chunk)
        ]
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            counts = _merge(pool.map(_histogram, *zip(*spans)))

    delta = laurent(-2, [-1, 0, 0, 0, -1])      # -A^2 - A^{-2}
    max_circles = max(c for _, c in counts)
    delta_pow = [LaurentPoly.one()]
    for _ in range(max_circles - 1):
        delta_pow.append(delta_pow[-1] * delta)

    bracket: dict[int, int] = {}
    for (exp, circles), mult in counts.items():
        for term_exp, term_c in delta_pow[circles - 1].terms():
            e = exp + term_exp
            bracket[e] = bracket.get(e, 0) + mult * term_c

    out: dict[int, int] = {}
    for e, c in bracket.items():
        if c == 0:
            continue
        if e % 4 != 0:
            raise StateSumParityError(
                f"bracket exponent {e} not divisible by 4 at n={n}"
            )
        out[-e // 4] = c                        # A -> t^{-1/4}
    return LaurentPoly.from_terms(out)
