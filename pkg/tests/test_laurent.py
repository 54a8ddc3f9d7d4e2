"""Ring-axiom and serialization tests for the exact polynomial layer."""

from __future__ import annotations

import json
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from weavekit.errors import NonDivisible
from weavekit.laurent import BiLaurentPoly, LaurentPoly, format_laurent, laurent

# Coefficients span several orders of magnitude so that carries and
# cancellation both get exercised; exponents go negative.
polys = st.builds(
    laurent,
    st.integers(min_value=-6, max_value=6),
    st.lists(st.integers(min_value=-(10**12), max_value=10**12), max_size=9),
)
nonzero_polys = polys.filter(lambda p: not p.is_zero())


def test_canonical_trim():
    p = laurent(-2, [0, 0, 3, 0, 5, 0, 0])
    assert p.lowest_exp == 0
    assert p.coeffs == (3, 0, 5)
    assert laurent(4, [0, 0]) == LaurentPoly.zero()
    assert LaurentPoly.zero().lowest_exp == 0


def test_trim_idempotent():
    p = laurent(-3, [0, 7, -1, 0])
    q = laurent(p.lowest_exp, p.coeffs)
    assert p == q


def test_coefficientwise_sum():
    p = laurent(1, [1, -2, 1])        # q - 2q^2 + q^3
    q = laurent(2, [1])               # q^2
    assert p + q == laurent(1, [1, -1, 1])
    c21 = laurent(0, [-1, 3, -3, 1])
    c212 = laurent(0, [-1, 2, -1])
    assert c21 + c212 == laurent(0, [-2, 5, -4, 1])


def test_monomial_inverse_product():
    t = LaurentPoly.monomial(1, 1)
    tinv = LaurentPoly.monomial(1, -1)
    assert t * tinv == LaurentPoly.one()


def test_square_of_linear():
    p = laurent(0, [-1, 1])           # q - 1
    assert p * p == laurent(0, [1, -2, 1])


def test_span_multiplicative():
    p = laurent(-1, [2, 0, 3])
    q = laurent(2, [1, 5])
    assert (p * q).span() == p.span() + q.span()


@settings(max_examples=250)
@given(polys, polys, polys)
def test_add_associative_commutative(p, q, r):
    assert (p + q) + r == p + (q + r)
    assert p + q == q + p


@settings(max_examples=250)
@given(polys, polys, polys)
def test_mul_associative(p, q, r):
    assert (p * q) * r == p * (q * r)


@settings(max_examples=250)
@given(polys, polys)
def test_mul_commutative(p, q):
    assert p * q == q * p


@settings(max_examples=250)
@given(polys, polys, polys)
def test_distributive(p, q, r):
    assert p * (q + r) == p * q + p * r


@settings(max_examples=250)
@given(polys, nonzero_polys)
def test_exact_div_round_trip(p, d):
    assert (p * d).exact_div(d) == p


def test_exact_div_examples():
    p = laurent(-4, [1, 0, -1, 0, 0, 0, -1, 0, 1])   # Q^-4 - Q^-2 - Q^2 + Q^4
    d = laurent(0, [1, 0, -1])                        # 1 - Q^2
    assert p.exact_div(d) == laurent(-4, [1, 0, 0, 0, 0, 0, -1])
    assert p.exact_div(LaurentPoly.one()) == p
    assert laurent(0, [1, 0, 0, 0, -1]).exact_div(d) == laurent(0, [1, 0, 1])


def test_exact_div_failure():
    with pytest.raises(NonDivisible):
        laurent(0, [1, 1, 1]).exact_div(laurent(0, [1, 0, -1]))
    with pytest.raises(NonDivisible):
        laurent(0, [2]).exact_div(LaurentPoly.zero())


def test_substitute_power():
    p = laurent(-2, [1, -1, 1, -1, 1])    # t^-2 - t^-1 + 1 - t + t^2
    doubled = p.substitute_power(2)
    assert doubled == laurent(-4, [1, 0, -1, 0, 1, 0, -1, 0, 1])
    assert p.substitute_power(1) == p
    assert p.substitute_power(-1) == laurent(-2, [1, -1, 1, -1, 1])


@settings(max_examples=250)
@given(polys)
def test_substitute_power_involution(p):
    assert p.invert_variable().invert_variable() == p


def test_alternate_signs():
    assert laurent(0, [1, 1]).alternate_signs() == laurent(0, [1, -1])
    assert laurent(-2, [1, 0, 0, 1]).alternate_signs() == laurent(-2, [1, 0, 0, -1])


def test_coefficient_and_span():
    p = laurent(-4, [1, -4, 6, -7, 9, -7, 6, -4, 1])
    assert p.span() == 8
    assert p.coefficient(-4) == 1
    assert p.coefficient(0) == 9
    assert p.coefficient(17) == 0


def test_eval_rational():
    p = laurent(0, [-1, 1])
    assert p.eval_rational(1) == 0
    q = laurent(-1, [1, 0, 1])        # x^-1 + x
    assert q.eval_rational(Fraction(1, 2)) == Fraction(5, 2)


def test_json_round_trip():
    p = laurent(-3, [10**40, 0, -7, 1])
    blob = json.dumps(p.to_json())
    assert LaurentPoly.from_json(json.loads(blob)) == p
    assert json.loads(blob)["coeffs"][0] == str(10**40)


@settings(max_examples=250)
@given(polys)
def test_json_round_trip_random(p):
    assert LaurentPoly.from_json(p.to_json()) == p


def test_format_laurent():
    p = laurent(-4, [1, -4, 6, -7, 9, -7, 6, -4, 1])
    assert format_laurent(p) == "t^4 - 4t^3 + 6t^2 - 7t + 9 - 7t^-1 + 6t^-2 - 4t^-3 + t^-4"
    assert format_laurent(LaurentPoly.zero()) == "0"
    assert format_laurent(laurent(1, [-1]), var="q") == "-q"


def test_bilaurent_basics():
    h = BiLaurentPoly.from_entries([(2, 0, 1), (0, 2, -1), (2, 0, 2), (0, 0, -1)])
    assert h.coefficient(2, 0) == 3
    assert h.coefficient(0, 2) == -1
    assert h.coefficient(5, 5) == 0
    assert (h - h).is_zero()
    assert h.slice_first(2) == laurent(0, [3])
    assert h.first_exponents() == [0, 2]


def test_bilaurent_json_round_trip():
    h = BiLaurentPoly.from_entries([(-2, 4, 10**30), (2, 0, -1)])
    blob = json.dumps(h.to_json())
    assert BiLaurentPoly.from_json(json.loads(blob)) == h
