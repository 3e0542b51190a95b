"""Number tower: canonical forms, floors, comparisons, arcs, literals."""

import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from beattyseq import exactreal as xr
from beattyseq.errors import IncompatibleSurds, PrecisionExhausted
from beattyseq.exactreal import (
    Arc,
    CirclePoint,
    DecimalInterval,
    QuadraticIrrational,
    arc,
    parse_real,
    format_real,
)

from conftest import GOLDEN

PHI = QuadraticIrrational.make(1, 1, 5, 2)  # (1+sqrt5)/2


# -- construction and canonical form ------------------------------------------


def test_quadratic_canonicalization():
    q = QuadraticIrrational(2, 2, 5, 4)
    assert (q.p, q.s, q.d, q.r) == (1, 1, 5, 2)
    q2 = QuadraticIrrational(-1, -1, 5, -2)
    assert (q2.p, q2.s, q2.d, q2.r) == (1, 1, 5, 2)


def test_canonicalization_idempotent():
    q = QuadraticIrrational(GOLDEN.p, GOLDEN.s, GOLDEN.d, GOLDEN.r)
    assert q == GOLDEN


def test_rejects_rational_disguised_as_quadratic():
    with pytest.raises(ValueError):
        QuadraticIrrational(3, 0, 5, 2)


def test_rejects_non_squarefree_d():
    with pytest.raises(ValueError):
        QuadraticIrrational(0, 1, 8, 1)


def test_make_normalizes_square_part():
    v = QuadraticIrrational.make(0, 1, 8, 2)  # sqrt8/2 = sqrt2
    assert v == QuadraticIrrational.make(0, 1, 2, 1)
    assert QuadraticIrrational.make(3, 2, 1, 4) == Fraction(5, 4)
    assert QuadraticIrrational.make(3, 5, 0, 2) == Fraction(3, 2)


def test_surd_cancellation_demotes_to_fraction():
    assert GOLDEN + GOLDEN.make(1, -1, 5, 2) == Fraction(0)
    conj = QuadraticIrrational.make(-1, -1, 5, 2)
    assert GOLDEN * conj == Fraction(-1)  # (sqrt5-1)(-sqrt5-1)/4 = (1-5)/4
    assert GOLDEN * Fraction(0) == Fraction(0)


# -- floor / frac / compare / is_integer ---------------------------------------


def test_floor_examples():
    assert xr.floor(Fraction(7, 2)) == 3
    assert xr.floor(PHI) == 1
    assert xr.floor(DecimalInterval(Fraction("2.71827"), Fraction("2.71829"), "e")) == 2


def test_floor_negative_quadratic():
    assert xr.floor(-PHI) == -2
    assert xr.floor(QuadraticIrrational.make(-7, -3, 2, 2)) == -6  # (-7-3sqrt2)/2


def test_floor_interval_straddling_integer():
    with pytest.raises(PrecisionExhausted):
        xr.floor(DecimalInterval(Fraction("1.9999"), Fraction("2.0001")))


def test_frac_examples():
    assert xr.frac(Fraction(7, 2)) == Fraction(1, 2)
    assert xr.frac(Fraction(-1, 3)) == Fraction(2, 3)
    assert xr.frac(GOLDEN) == GOLDEN  # already in [0,1): floor is 0
    assert xr.floor(GOLDEN) == 0


def test_compare_examples():
    assert xr.compare(Fraction(1, 2), Fraction(2, 3)) == -1
    assert xr.compare(QuadraticIrrational.make(0, 1, 2, 1), Fraction(3, 2)) == -1
    assert xr.compare(GOLDEN, GOLDEN) == 0
    assert xr.compare(PHI, GOLDEN) == 1


def test_compare_incompatible_surds():
    with pytest.raises(IncompatibleSurds):
        xr.compare(QuadraticIrrational.make(0, 1, 2, 1), QuadraticIrrational.make(0, 1, 3, 1))


def test_is_integer():
    assert xr.is_integer(Fraction(6, 3)) is True
    assert xr.is_integer(Fraction(5, 3)) is False
    assert xr.is_integer(QuadraticIrrational.make(1, 2, 3, 5)) is False
    assert xr.is_integer(DecimalInterval(Fraction("1.9999"), Fraction("2.0001"))) is None
    assert xr.is_integer(DecimalInterval(Fraction("1.2"), Fraction("1.4"))) is False
    assert xr.is_integer(DecimalInterval(Fraction(2), Fraction(2))) is True


def test_compare_intervals():
    a = DecimalInterval(Fraction(1), Fraction(2))
    b = DecimalInterval(Fraction(3), Fraction(4))
    assert xr.compare(a, b) == -1
    assert xr.compare(b, a) == 1
    with pytest.raises(PrecisionExhausted):
        xr.compare(a, DecimalInterval(Fraction(2), Fraction(3)))
    assert xr.compare(DecimalInterval(Fraction(5), Fraction(5)), Fraction(5)) == 0


# -- interval arithmetic ---------------------------------------------------------


def test_interval_arithmetic_exact_endpoints():
    e = parse_real("~2.71828:e")
    v = 3 - e
    assert isinstance(v, DecimalInterval)
    assert v.width == e.width  # subtraction adds no width
    prod = e * e
    assert prod.low == e.low * e.low and prod.high == e.high * e.high


def test_interval_division_by_zero_straddler():
    z = DecimalInterval(Fraction(-1), Fraction(1))
    with pytest.raises(PrecisionExhausted):
        1 / z


def test_mixed_quadratic_interval_arithmetic():
    e = parse_real("~2.71828:e")
    v = GOLDEN + e
    assert isinstance(v, DecimalInterval)
    assert float(v.low) < 0.6180339887498949 + 2.71828 < float(v.high)


# -- circle order and arcs -------------------------------------------------------


def test_in_order_examples():
    assert xr.in_order(0, Fraction(1, 4), Fraction(1, 2)) is True
    assert xr.in_order(0, Fraction(3, 4), Fraction(1, 2)) is False
    assert xr.in_order(Fraction(9, 10), Fraction(1, 10), Fraction(3, 10)) is True


def test_in_order_degenerate_endpoints():
    assert xr.in_order(Fraction(1, 3), Fraction(1, 3), Fraction(2, 3)) is True
    assert xr.in_order(Fraction(1, 3), Fraction(2, 3), Fraction(2, 3)) is True
    assert xr.in_order(Fraction(1, 3), Fraction(4, 3), Fraction(2, 3)) is True  # mod 1


def test_exactly_one_order_for_distinct_points():
    rng = random.Random(1234)
    for _ in range(300):
        vals = rng.sample(range(1, 97), 3)
        w, x, y = (Fraction(v, 97) for v in vals)
        assert xr.in_order(w, x, y) != xr.in_order(w, y, x)


def test_arc_examples():
    a = arc(Fraction(-1, 2), 0, left_closed=False, right_closed=True)
    assert a.contains(0) is True
    assert a.contains(Fraction(-1, 2)) is False
    empty = arc(Fraction(1, 3), Fraction(4, 3), right_closed=True)  # endpoints congruent
    assert empty.contains(Fraction(1, 3)) is False
    assert empty.contains(Fraction(1, 2)) is False


def test_arc_membership_mod_one():
    a = arc(Fraction(3, 4), Fraction(1, 4), left_closed=True)
    for x in (Fraction(7, 8), Fraction(0), Fraction(1, 8), Fraction(3, 4)):
        for n in (-2, -1, 0, 1, 5):
            assert a.contains(x + n) == a.contains(x)
    assert a.contains(Fraction(1, 2)) is False


def test_closed_closed_arc():
    a = arc(Fraction(1, 4), Fraction(3, 4), left_closed=True, right_closed=True)
    assert a.contains(Fraction(1, 4)) and a.contains(Fraction(3, 4))
    assert not a.contains(Fraction(7, 8))


def test_congruence():
    assert CirclePoint(Fraction(5, 4)).congruent(CirclePoint(Fraction(1, 4))) is True
    assert CirclePoint(GOLDEN).congruent(CirclePoint(GOLDEN + 3)) is True
    assert CirclePoint(GOLDEN).congruent(CirclePoint(Fraction(1, 2))) is False


# -- randomized agreement against high-precision intervals ----------------------


def test_quadratic_compare_agrees_with_100_digit_intervals():
    rng = random.Random(20240917)
    for _ in range(1000):
        d = rng.choice([2, 3, 5, 6, 7, 10, 11, 13, 15, 17])
        x = QuadraticIrrational.make(rng.randint(-50, 50), rng.choice([-3, -2, -1, 1, 2, 3]),
                                     d, rng.randint(1, 20))
        y_rational = rng.random() < 0.5
        if y_rational:
            y = Fraction(rng.randint(-100, 100), rng.randint(1, 40))
        else:
            y = QuadraticIrrational.make(rng.randint(-50, 50), rng.choice([-3, -2, -1, 1, 2, 3]),
                                         d, rng.randint(1, 20))
        exact = xr.compare(x, y)
        ix, iy = xr.enclose(x, 100), xr.enclose(y, 100)
        if ix.high < iy.low:
            assert exact == -1
        elif ix.low > iy.high:
            assert exact == 1
        else:
            assert exact == 0


# -- properties ----------------------------------------------------------------

fractions_st = st.fractions(min_value=-1000, max_value=1000, max_denominator=999)


@given(fractions_st)
def test_floor_frac_identity_rational(x):
    f = xr.frac(x)
    assert 0 <= f < 1
    assert xr.floor(x) + f == x


@given(st.integers(-40, 40), st.sampled_from([-2, -1, 1, 2]),
       st.sampled_from([2, 3, 5, 7, 13]), st.integers(1, 15))
def test_floor_frac_identity_quadratic(p, s, d, r):
    x = QuadraticIrrational.make(p, s, d, r)
    f = xr.frac(x)
    assert xr.compare(f, 0) >= 0 and xr.compare(f, 1) < 0
    assert xr.floor(x) + f == x


@given(fractions_st, fractions_st)
def test_compare_antisymmetric(x, y):
    assert xr.compare(x, y) == -xr.compare(y, x)


# -- literal grammar -------------------------------------------------------------


@pytest.mark.parametrize("text", ["3/7", "-3/7", "0", "17", "(-1+1*sqrt 5)/2",
                                  "(3-2*sqrt 7)/5", "(0+1*sqrt 2)/1"])
def test_literal_round_trip(text):
    v = parse_real(text)
    assert parse_real(format_real(v)) == v


def test_unicode_minus_accepted():
    assert parse_real("(−1+1*sqrt 5)/2") == GOLDEN


def test_interval_literal():
    v = parse_real("~2.718281828459045:e")
    assert isinstance(v, DecimalInterval)
    assert v.label == "e"
    assert v.width == Fraction(1, 10**15)
    assert format_real(v) == "~2.718281828459045:e"


def test_interval_literal_integer_digits():
    v = parse_real("~3")
    assert v.low == Fraction(5, 2) and v.high == Fraction(7, 2)


def test_bad_literals_rejected():
    for bad in ["", "x", "1/0x", "(1+sqrt 5)/2", "~abc", "3/7/2"]:
        with pytest.raises(ValueError):
            parse_real(bad)


def test_format_exact_canonical():
    assert format_real(Fraction(6, 3)) == "2"
    assert format_real(GOLDEN) == "(-1+1*sqrt 5)/2"
    assert format_real(QuadraticIrrational.make(3, -2, 7, 5)) == "(3-2*sqrt 7)/5"
