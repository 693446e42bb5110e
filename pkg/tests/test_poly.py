"""Exact-polynomial arithmetic: pinned values, ring laws, text round-trips."""

from __future__ import annotations

import random

import pytest

from conwaykit.poly import IntPoly, PolySyntaxError, format_poly, parse_poly


def P(text: str) -> IntPoly:
    return parse_poly(text)


# -- pinned arithmetic -------------------------------------------------------


def test_product_of_torus_factors():
    # (1+5z^2+5z^4+z^6)(1+z^2), checked by hand term by term
    assert P("1+5z^2+5z^4+z^6") * P("1+z^2") == P("1+6z^2+10z^4+6z^6+z^8")


def test_difference_of_composite_polynomials():
    assert P("1+4z^2+8z^4+6z^6+z^8") - P("1+4z^2+3z^4+z^6") == P("5z^4+5z^6+z^8")


def test_shift_multiplies_by_z():
    assert P("2z+2z^3").shift(1) == P("2z^2+2z^4")
    assert P("5z^4+5z^6+z^8").shift(1) == P("5z^5+5z^7+z^9")
    assert IntPoly.zero().shift(3) == IntPoly.zero()
    with pytest.raises(ValueError):
        P("1").shift(-1)


def test_coeff_lookup():
    p = P("1+4z^2+3z^4+z^6")
    assert [p.coeff(k) for k in range(8)] == [1, 0, 4, 0, 3, 0, 1, 0]
    assert p.coeff(100) == 0
    with pytest.raises(ValueError):
        p.coeff(-1)


def test_parity_classification():
    assert P("1+4z^2+3z^4+z^6").parity() == "even"
    assert P("2z+2z^3").parity() == "odd"
    assert P("1+z").parity() == "mixed"
    assert IntPoly.zero().parity() == "zero"
    assert P("7").parity() == "even"


def test_degree():
    assert IntPoly.zero().degree == -1
    assert P("5").degree == 0
    assert P("1+6z^2+10z^4+6z^6+z^8").degree == 8


# -- normalization -----------------------------------------------------------


def test_trailing_zeros_are_trimmed():
    assert IntPoly((1, 2, 0, 0)) == IntPoly((1, 2))
    assert IntPoly((0, 0, 0)) == IntPoly.zero()
    assert IntPoly((1, 2, 0, 0)).coeffs == (1, 2)


def test_normalization_is_idempotent():
    rng = random.Random(7)
    for _ in range(100):
        cs = [rng.randint(-9, 9) for _ in range(rng.randint(0, 9))]
        p = IntPoly(cs)
        assert IntPoly(p.coeffs) == p
        assert not p.coeffs or p.coeffs[-1] != 0


def test_subtraction_cancels_to_zero():
    p = P("1+6z^2+10z^4+6z^6+z^8")
    assert p - p == IntPoly.zero()
    assert format_poly(p - p) == "0"


# -- ring laws on random triples ---------------------------------------------


def _random_poly(rng: random.Random) -> IntPoly:
    return IntPoly([rng.randint(-9, 9) for _ in range(rng.randint(0, 9))])


def test_ring_axioms_on_random_triples():
    rng = random.Random(20240)
    for _ in range(200):
        p, q, r = (_random_poly(rng) for _ in range(3))
        assert p + q == q + p
        assert p * q == q * p
        assert (p + q) + r == p + (q + r)
        assert (p * q) * r == p * (q * r)
        assert p * (q + r) == p * q + p * r
        assert p + IntPoly.zero() == p
        assert p * IntPoly.one() == p


def test_degree_additivity_for_nonzero_products():
    rng = random.Random(20241)
    seen = 0
    while seen < 100:
        p, q = _random_poly(rng), _random_poly(rng)
        if not p or not q:
            continue
        assert (p * q).degree == p.degree + q.degree  # Z has no zero divisors
        seen += 1


def test_scalar_multiplication():
    assert 3 * P("1+z^2") == P("3+3z^2")
    assert -1 * P("2z") == P("-2z")
    assert 0 * P("1+z^2") == IntPoly.zero()


# -- text form ---------------------------------------------------------------


def test_format_canonical_examples():
    assert format_poly(P("1+z^2")) == "1+z^2"
    assert format_poly(P("2z+2z^3")) == "2z+2z^3"
    assert format_poly(IntPoly.zero()) == "0"
    assert format_poly(IntPoly((0, -2, 0, 1))) == "-2z+z^3"
    assert format_poly(IntPoly((-1,))) == "-1"
    assert format_poly(IntPoly.z()) == "z"


def test_parse_accepts_grammar_forms():
    assert P("17") == IntPoly((17,))
    assert P("z") == IntPoly((0, 1))
    assert P("3z") == IntPoly((0, 3))
    assert P("z^5") == IntPoly((0, 0, 0, 0, 0, 1))
    assert P("4z^3") == IntPoly((0, 0, 0, 4))
    assert P("1-z^2-z^4") == IntPoly((1, 0, -1, 0, -1))
    assert P("-2+z") == IntPoly((-2, 1))
    assert P("1+1") == IntPoly((2,))  # repeated powers accumulate


def test_round_trip_on_random_polynomials():
    rng = random.Random(20242)
    for _ in range(100):
        p = _random_poly(rng)
        assert parse_poly(format_poly(p)) == p


def test_syntax_errors_carry_position():
    for text, pos in [("", 0), ("1+", 2), ("x", 0), ("1++2", 2), ("2z^", 2), ("1 + z", 1)]:
        with pytest.raises(PolySyntaxError) as exc:
            parse_poly(text)
        assert exc.value.position == pos


def test_parse_rejects_stray_suffix():
    with pytest.raises(PolySyntaxError):
        parse_poly("1+z^2)")
