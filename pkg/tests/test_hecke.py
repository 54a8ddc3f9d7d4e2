"""Recursion-vs-oracle agreement and closed-form structure of the H3 coefficients."""

from __future__ import annotations

import pytest

from weavekit.errors import RangeError, RecursionInvariantViolated
from weavekit.hecke import (
    HeckeCoeffs,
    check_structure,
    coeffs,
    initial_coeffs,
    oracle_matrix_power,
    second_order_coeffs,
    step,
)
from weavekit.laurent import LaurentPoly, laurent

# Hand-checked expansions for small braid powers.
GOLDEN = {
    2: {
        "C0": laurent(1, [1, -2, 1]),
        "C1": laurent(0, [-1, 3, -3, 1]),
        "C2": laurent(1, [1, -1]),
        "C12": laurent(0, [-1, 2, -1]),
        "C21": laurent(1, [1]),
    },
    3: {
        "C0": laurent(1, [-1, 4, -5, 4, -1]),
        "C1": laurent(0, [1, -4, 7, -7, 4, -1]),
        "C2": laurent(1, [-1, 3, -3, 1]),
        "C12": laurent(0, [1, -3, 4, -3, 1]),
        "C21": laurent(1, [-1, 2, -1]),
    },
    4: {
        "C0": laurent(1, [1, -5, 10, -12, 10, -5, 1]),
        "C1": laurent(0, [-1, 5, -11, 16, -16, 11, -5, 1]),
        "C2": laurent(1, [1, -4, 7, -7, 4, -1]),
        "C12": laurent(0, [-1, 4, -7, 9, -7, 4, -1]),
        "C21": laurent(1, [1, -3, 4, -3, 1]),
    },
}


def test_initial_coeffs():
    h = initial_coeffs()
    assert h.n == 1
    assert h.c1 == laurent(0, [1, -1])
    assert h.c12 == LaurentPoly.one()
    assert h.c0.is_zero() and h.c2.is_zero() and h.c21.is_zero()
    assert h.c1.coefficient(0) == 1
    assert h.c12.span() == 0


@pytest.mark.parametrize("n", sorted(GOLDEN))
def test_coeffs_golden(n):
    assert coeffs(n).as_dict() == GOLDEN[n]


def test_step_from_initial():
    assert step(initial_coeffs()).as_dict() == GOLDEN[2]


def test_step_rejects_corrupt_state():
    bad = HeckeCoeffs(
        n=2,
        c0=GOLDEN[2]["C0"],
        c1=GOLDEN[2]["C1"],
        c2=laurent(1, [1]),            # inconsistent with c21
        c12=GOLDEN[2]["C12"],
        c21=laurent(1, [1]),
    )
    with pytest.raises(RecursionInvariantViolated):
        step(bad)


@pytest.mark.parametrize("n", range(1, 9))
def test_oracle_matches_recursion(n):
    assert oracle_matrix_power(n) == coeffs(n)


def test_range_errors():
    with pytest.raises(RangeError):
        coeffs(0)
    with pytest.raises(RangeError):
        oracle_matrix_power(0)
    with pytest.raises(RangeError):
        check_structure(initial_coeffs())
    with pytest.raises(RangeError):
        second_order_coeffs(2)


def test_structure_passes_through_40():
    h = initial_coeffs()
    for _ in range(2, 41):
        h = step(h)
        report = check_structure(h)
        assert report.passed, (h.n, report.failures())


def test_structure_detects_corruption():
    h = coeffs(5)
    bad = HeckeCoeffs(n=5, c0=h.c0 + LaurentPoly.one(),
                      c1=h.c1, c2=h.c2, c12=h.c12, c21=h.c21)
    report = check_structure(bad)
    assert not report.passed
    assert "trailing_c0" in report.failures()


def test_second_order_examples():
    r4 = second_order_coeffs(4)
    assert r4.c_n_1_2 == -11
    assert r4.c_n_1_3 == 16
    assert r4.c_n_0_2 == -5
    r3 = second_order_coeffs(3)
    assert r3.c_n_21_2 == 2
    assert r3.c_n_0_3 is None and r3.c_n_1_2 is None


@pytest.mark.parametrize("n", range(3, 31))
def test_second_order_matches_extraction(n):
    h = coeffs(n)
    r = second_order_coeffs(n)
    assert r.c_n_0_2 == h.c0.coefficient(2)
    assert r.c_n_21_2 == h.c21.coefficient(2)
    if r.c_n_1_2 is not None:
        assert r.c_n_1_2 == h.c1.coefficient(2)
    if r.c_n_1_3 is not None:
        assert r.c_n_1_3 == h.c1.coefficient(3)
    if r.c_n_0_3 is not None:
        assert r.c_n_0_3 == h.c0.coefficient(3)
