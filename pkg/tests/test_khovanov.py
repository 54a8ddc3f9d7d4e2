"""Reconstruction chain tests: Kh', bigraded tables, integral torsion rules."""

from __future__ import annotations

import pytest

from weavekit.errors import NegativeCoefficient, RangeError
from weavekit.hecke import coeffs, step
from weavekit.invariants import jones, jones_from_coeffs
from weavekit.khovanov import (
    betti_line,
    betti_line_of,
    check_support,
    euler_check,
    integral_kh,
    kh_prime,
    kh_table,
    kh_table_from_jones,
    KhTable,
)
from weavekit.laurent import LaurentPoly, laurent

# Reference integral table for W(3,4): (i, j) -> (free rank, 2-torsion exp).
INTEGRAL_GOLDEN_N4 = {
    (4, 9): (1, 0), (3, 7): (3, 0), (4, 7): (0, 1), (2, 5): (3, 0),
    (3, 5): (1, 3), (1, 3): (4, 0), (2, 3): (3, 3), (0, 1): (5, 0),
    (1, 1): (3, 4), (-1, -1): (3, 0), (0, -1): (5, 4), (-2, -3): (3, 0),
    (-1, -3): (4, 3), (-3, -5): (1, 0), (-2, -5): (3, 3), (-3, -7): (3, 1),
    (-4, -9): (1, 0),
}

W310_LINE = [1, 9, 36, 94, 196, 346, 529, 721, 879, 970,
             971, 879, 721, 529, 346, 196, 94, 36, 9, 1]


def test_kh_prime_examples():
    assert kh_prime(jones(2), 0) == laurent(-2, [1, 0, 0, 1])     # x^-2 + x
    assert kh_prime(LaurentPoly.one(), 0) == LaurentPoly.zero()
    kp4 = kh_prime(jones(4), 0)
    assert kp4 == laurent(-4, [1, 3, 3, 4, 4, 3, 3, 1])


def test_kh_prime_rejects_non_alternating_input():
    with pytest.raises(NegativeCoefficient):
        kh_prime(jones(4), 2)       # wrong signature breaks positivity


def test_kh_table_figure_eight():
    kh = kh_table(2)
    assert kh.dims == {
        (-2, -5): 1, (-1, -1): 1, (0, -1): 1, (0, 1): 1, (1, 1): 1, (2, 5): 1,
    }


def test_kh_table_unknot():
    kh = kh_table(1)
    assert kh.dims == {(0, -1): 1, (0, 1): 1}


def test_kh_table_rejects_links():
    with pytest.raises(RangeError):
        kh_table(6)
    with pytest.raises(RangeError):
        betti_line(9)


def test_betti_line_w310():
    line = betti_line(10)
    assert [i for i, _ in line] == list(range(-9, 11))
    assert [d for _, d in line] == W310_LINE
    assert sum(d for _, d in line) == 7563
    assert dict(line)[0] == 970
    assert dict(line)[1] == 971


def test_betti_line_w311_summary():
    line = betti_line(11)
    assert sum(d for _, d in line) == 19801
    assert dict(line)[0] == 2431


def test_betti_line_mirror_symmetry():
    for n in (4, 5, 10, 11, 13):
        s = dict(betti_line(n))
        for i in range(-(n - 1), 0):
            assert s[i] == s[1 - i]
        assert s[1] == s[0] + 1


def test_knight_move_pairing():
    for n in (2, 4, 5, 10, 11):
        kh = kh_table(n)
        lo = min(i for i, _ in kh.dims)
        hi = max(i for i, _ in kh.dims)
        for i in range(lo - 1, hi + 1):
            left = kh.dim(i, 2 * i - 1) - (1 if i == 0 else 0)
            right = kh.dim(i + 1, 2 * i + 3) - (1 if i + 1 == 0 else 0)
            assert left == right, (n, i)
        assert kh.dim(0, -1) == kh.dim(0, 1)


def test_integral_w34_full_table():
    table = integral_kh(4)
    assert {k: v for k, v in table.entries.items() if v != (0, 0)} == INTEGRAL_GOLDEN_N4


def test_integral_figure_eight():
    table = integral_kh(2)
    torsion = {k: t for k, (f, t) in table.entries.items() if t}
    assert torsion == {(-1, -3): 1, (2, 3): 1}


def test_integral_free_ranks_copy_rational():
    for n in (2, 4, 5, 10):
        kh = kh_table(n)
        table = integral_kh(n)
        for key, d in kh.dims.items():
            assert table.free_rank(*key) == d


def test_integral_total_torsion():
    for n in (2, 4, 5, 10, 11):
        table = integral_kh(n)
        line_total = sum(d for _, d in betti_line(n))
        assert table.total_torsion() == line_total - 1


def test_euler_and_support_sweep():
    h = coeffs(1)
    checked = 0
    while h.n < 40:
        h = step(h)
        if h.n % 3 == 0:
            continue
        v = jones_from_coeffs(h)
        kh = kh_table_from_jones(h.n, v)
        assert euler_check(kh, v)
        assert check_support(kh, 3, h.n)
        checked += 1
    assert checked > 20


def test_support_detects_spurious_entry():
    kh = kh_table(4)
    bad = KhTable(n=4, sigma=0, dims={**kh.dims, (0, 5): 1})
    assert not check_support(bad, 3, 4)
    assert not euler_check(bad, jones(4))


def test_support_even_strand_lines():
    # Synthetic table on the lines j = 2i + n - 1 +- 1 for even p.
    n = 5
    dims = {(0, n - 1 + 1): 1, (0, n - 1 - 1): 1, (2, 4 + n - 1 + 1): 3}
    assert check_support(KhTable(n=n, sigma=1 - n, dims=dims), 4, n)
    dims[(1, 0)] = 1
    assert not check_support(KhTable(n=n, sigma=1 - n, dims=dims), 4, n)
