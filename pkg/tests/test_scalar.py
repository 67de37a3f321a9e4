from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from icosym.scalar import GOLDEN, GOLDEN_CONJ, ONE, SQRT5, ZERO, Qsqrt5, parse, render

# hand-derived frozen values: phi = (1+√5)/2 satisfies phi² = phi + 1 = (3+√5)/2,
# phi·(−1+√5)/2 = (−1+5−√5+√5)/4 = 1, and (√5)·(√5/5) = 1
PHI_SQUARED = Qsqrt5(Fraction(3, 2), Fraction(1, 2))
PHI_INVERSE = Qsqrt5(Fraction(-1, 2), Fraction(1, 2))
SQRT5_INVERSE = Qsqrt5(0, Fraction(1, 5))


def test_golden_ratio_square():
    assert GOLDEN * GOLDEN == PHI_SQUARED
    assert GOLDEN * GOLDEN == GOLDEN + 1


def test_golden_ratio_inverse():
    assert GOLDEN.inv() == PHI_INVERSE
    assert GOLDEN * GOLDEN.inv() == ONE


def test_sqrt5_inverse():
    assert SQRT5.inv() == SQRT5_INVERSE
    assert SQRT5 * SQRT5 == Qsqrt5(5)


def test_conjugate_swaps_golden_pair():
    assert GOLDEN.conj() == GOLDEN_CONJ
    assert GOLDEN_CONJ.conj() == GOLDEN
    assert GOLDEN + GOLDEN_CONJ == ONE
    assert GOLDEN * GOLDEN_CONJ == Qsqrt5(-1)


def test_norm_is_product_with_conjugate():
    x = Qsqrt5(Fraction(7, 3), Fraction(-2, 5))
    assert x * x.conj() == Qsqrt5(x.norm())


def test_inverse_of_zero_raises():
    with pytest.raises(ZeroDivisionError):
        ZERO.inv()
    with pytest.raises(ZeroDivisionError):
        Qsqrt5(0, 0).inv()


def test_mixed_arithmetic_with_rationals():
    assert 1 + SQRT5 == Qsqrt5(1, 1)
    assert Fraction(1, 2) * SQRT5 == Qsqrt5(0, Fraction(1, 2))
    assert 2 - GOLDEN == Qsqrt5(Fraction(3, 2), Fraction(-1, 2))
    assert 1 / SQRT5 == SQRT5_INVERSE
    assert GOLDEN ** -1 == PHI_INVERSE
    assert GOLDEN ** 0 == ONE


def test_equality_and_hash_against_rationals():
    assert Qsqrt5(3) == 3
    assert Qsqrt5(Fraction(1, 2)) == Fraction(1, 2)
    assert Qsqrt5(3) != Qsqrt5(3, 1)
    assert hash(Qsqrt5(3)) == hash(3)
    assert hash(Qsqrt5(Fraction(1, 2))) == hash(Fraction(1, 2))


def test_immutability():
    with pytest.raises(AttributeError):
        GOLDEN.a = Fraction(0)  # type: ignore[misc]


@pytest.mark.parametrize(
    "value,text",
    [
        (ZERO, "0"),
        (Qsqrt5(Fraction(3, 2)), "3/2"),
        (Qsqrt5(-1), "-1"),
        (SQRT5, "√5"),
        (-SQRT5, "-√5"),
        (Qsqrt5(0, Fraction(2, 3)), "2/3√5"),
        (GOLDEN, "1/2 + 1/2√5"),
        (GOLDEN_CONJ, "1/2 - 1/2√5"),
        (Qsqrt5(-2, -3), "-2 - 3√5"),
    ],
)
def test_render_fixed_forms(value, text):
    assert render(value) == text
    assert parse(text) == value


def test_parse_accepts_ascii_surd():
    assert parse("1/2 + 1/2sqrt5") == GOLDEN
    assert parse("sqrt5") == SQRT5
    assert parse("-3sqrt5") == Qsqrt5(0, -3)


@pytest.mark.parametrize("bad", ["", "x", "1 +", "√7", "1/0", "2 2"])
def test_parse_rejects_garbage(bad):
    with pytest.raises(ValueError):
        parse(bad)


rationals = st.fractions(min_value=-1000, max_value=1000, max_denominator=1000)
scalars = st.builds(Qsqrt5, rationals, rationals)


@settings(max_examples=200)
@given(scalars, scalars, scalars)
def test_field_axioms(x, y, z):
    assert (x + y) + z == x + (y + z)
    assert (x * y) * z == x * (y * z)
    assert x * (y + z) == x * y + x * z
    assert x + y == y + x
    assert x * y == y * x


@settings(max_examples=200)
@given(scalars, scalars)
def test_conjugation_is_a_field_automorphism(x, y):
    assert (x + y).conj() == x.conj() + y.conj()
    assert (x * y).conj() == x.conj() * y.conj()


@settings(max_examples=200)
@given(scalars)
def test_inverse_and_render_round_trip(x):
    if not x.is_zero():
        assert x * x.inv() == ONE
    assert parse(render(x)) == x
