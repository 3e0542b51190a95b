"""Beatty sequence operations against spec examples and brute-force oracles."""

import random
from fractions import Fraction
from math import isqrt

import pytest

from beattyseq import beatty as bt
from beattyseq import exactreal as xr
from beattyseq.beatty import BeattySpec, coverage_bits
from beattyseq.errors import DensityOutOfRange, NotRationalDensity, PrecisionExhausted

from conftest import GOLDEN, GOLDEN_SQ, REP12, SQRT2M1


def spec(a, o=0):
    return BeattySpec(a, o)


# -- term -----------------------------------------------------------------------


def test_term_examples(three_minus_e):
    assert bt.term(spec(three_minus_e, Fraction(2, 5)), 1) == 2
    assert bt.term(spec(Fraction(1, 2)), 3) == 6
    assert bt.term(spec(GOLDEN), 1) == 1  # 1/alpha = (1+sqrt5)/2


def test_term_rejects_bad_index():
    with pytest.raises(ValueError):
        bt.term(spec(Fraction(1, 2)), 0)


# -- membership -------------------------------------------------------------------


def test_membership_examples(three_minus_e):
    assert bt.membership(spec(three_minus_e, Fraction(2, 5)), 2) is True
    assert bt.membership(spec(Fraction(1, 2)), 4) is True
    assert bt.membership(spec(Fraction(1, 2)), 3) is False
    assert bt.membership(spec(GOLDEN), 1) is True


def test_membership_density_range():
    with pytest.raises(DensityOutOfRange):
        bt.membership(spec(Fraction(3, 2)), 1)
    with pytest.raises(DensityOutOfRange):
        bt.membership(spec(Fraction(1)), 1)


def test_membership_closed_endpoint_at_denominator_multiples():
    # alpha = 1/2: k = 2 sits exactly on the closed right arc endpoint
    assert bt.membership(spec(Fraction(1, 2)), 2) is True
    # the floor-difference description would say 0 there
    a = Fraction(1, 2)
    assert xr.floor(3 * a) - xr.floor(2 * a) == 0


# -- counting ---------------------------------------------------------------------


def test_count_below_examples(three_minus_e):
    assert bt.count_below(spec(Fraction(1, 2)), 7) == 3
    assert bt.count_below(spec(three_minus_e, Fraction(2, 5)), 10) == 3
    assert bt.count_below(spec(Fraction(1, 2)), 0) == 0


def test_count_matches_enumeration():
    rng = random.Random(99)
    for _ in range(150):
        q = rng.randint(2, 30)
        a = rng.randint(1, q - 1)
        off = Fraction(rng.randint(-2 * q, 2 * q), rng.randint(1, 10))
        s = spec(Fraction(a, q), off)
        k = rng.randint(2, 400)
        terms = bt.enumerate_terms(s, k - 1)
        assert bt.count_below(s, k) == len(terms), (s, k)


# -- normalization ----------------------------------------------------------------


def test_normalize_examples():
    assert bt.normalize_rational_offset(spec(Fraction(1, 3), Fraction(1, 4))).offset == Fraction(1, 3)
    assert bt.normalize_rational_offset(spec(Fraction(2, 5), Fraction(2, 5))).offset == Fraction(2, 5)
    assert bt.normalize_rational_offset(spec(Fraction(1, 2), Fraction(-1, 10))).offset == 0


def test_normalize_requires_rational():
    with pytest.raises(NotRationalDensity):
        bt.normalize_rational_offset(spec(GOLDEN, 0))


def test_normalize_preserves_sequence():
    rng = random.Random(31337)
    for _ in range(100):
        q = rng.randint(2, 12)
        a = rng.randint(1, q - 1)
        off = Fraction(rng.randint(-50, 50), rng.randint(1, 20))
        s = spec(Fraction(a, q), off)
        n = bt.normalize_rational_offset(s)
        bound = 10 * q * q
        assert bt.enumerate_terms(s, bound) == bt.enumerate_terms(n, bound)


def test_normalize_quadratic_offset():
    s = spec(Fraction(1, 2), GOLDEN)  # ceil(2*golden) = 2
    assert bt.normalize_rational_offset(s).offset == Fraction(2, 2)


# -- enumeration -------------------------------------------------------------------


def test_enumerate_examples(fig1_specs):
    sa, sb = fig1_specs
    # the published caption says {2,5,9,13,16}; exact arithmetic gives 12
    # (13*(3-e) = 3.662... > 3.6), and the complement sequence picks up 13
    assert bt.enumerate_terms(sa, 16) == [2, 5, 9, 12, 16]
    assert bt.enumerate_terms(sb, 8) == [1, 3, 4, 6, 7, 8]
    assert bt.enumerate_terms(spec(Fraction(1, 2)), 7) == [2, 4, 6]


def test_enumerate_caption_sets_come_from_third_offsets(three_minus_e, e_minus_two):
    # offsets +-1/3 generate exactly the sets printed in the figure caption
    sa = spec(three_minus_e, Fraction(1, 3))
    sb = spec(e_minus_two, Fraction(-1, 3))
    assert bt.enumerate_terms(sa, 16) == [2, 5, 9, 13, 16]
    assert bt.enumerate_terms(sb, 8) == [1, 3, 4, 6, 7, 8]


def test_enumerate_alpha_above_one_repeats():
    s = spec(Fraction(3, 2))
    terms = bt.enumerate_terms(s, 10)
    assert terms == sorted(terms)
    assert len(terms) > len(set(terms))  # floors repeat for alpha > 1


def test_enumerate_includes_nonpositive_terms():
    s = spec(Fraction(1, 2), Fraction(3, 2))
    assert bt.enumerate_terms(s, 5)[0] <= 0


# -- oracle equivalence -------------------------------------------------------------


def test_membership_equals_enumeration():
    rng = random.Random(4242)
    specs = [
        spec(Fraction(1, 2)),
        spec(Fraction(2, 5), Fraction(2, 5)),
        spec(Fraction(3, 7), Fraction(-1, 3)),
        spec(GOLDEN),
        spec(SQRT2M1, Fraction(1, 5)),
        spec(REP12, Fraction(-1, 7)),
        spec(GOLDEN_SQ, GOLDEN - 1),
    ]
    for s in specs:
        in_seq = set(bt.enumerate_terms(s, 1000))
        sample = list(range(-100, 50)) + [rng.randint(50, 1000) for _ in range(200)]
        for k in sample:
            assert bt.membership(s, k) == (k in in_seq), (s, k)


def test_characteristic_formula_agreement_bulk():
    # irrational alpha, zero offset: membership equals the floor difference
    for alpha in (GOLDEN, SQRT2M1):
        s = spec(alpha)
        mask = coverage_bits(s, 100_000)
        p, sc, d, r = alpha.p, alpha.s, alpha.d, alpha.r

        def fl(k):
            n = sc * sc * d * k * k
            t = isqrt(n) if sc > 0 else -(isqrt(n) + 1)
            return (k * p + t) // r

        for k in range(1, 100_001):
            expect = fl(k + 1) - fl(k) == 1
            assert ((mask >> (k - 1)) & 1) == expect, k


def test_coverage_bits_matches_membership():
    rng = random.Random(777)
    specs = [
        spec(Fraction(2, 7), Fraction(3, 4)),
        spec(Fraction(5, 9), Fraction(-13, 6)),
        spec(GOLDEN, Fraction(1, 3)),
        spec(SQRT2M1, SQRT2M1),
        spec(GOLDEN, GOLDEN - 1),
        spec(Fraction(7, 5), Fraction(1, 2)),  # alpha > 1 goes through the kernel path
    ]
    for s in specs:
        n = rng.randint(50, 300)
        mask = coverage_bits(s, n)
        if xr.compare(s.alpha, 1) < 0:
            for k in range(1, n + 1):
                assert ((mask >> (k - 1)) & 1) == bt.membership(s, k), (s, k)
        else:
            covered = {t for t in bt.enumerate_terms(s, n) if t >= 1}
            assert mask == sum(1 << (k - 1) for k in covered)


def test_spec_validation():
    with pytest.raises(DensityOutOfRange):
        BeattySpec(Fraction(0), 0)
    with pytest.raises(DensityOutOfRange):
        BeattySpec(Fraction(-1, 2), 0)


def test_interval_precision_failure_surfaces():
    coarse = xr.parse_real("~0.3:rough")
    s = spec(coarse, 0)
    with pytest.raises(PrecisionExhausted):
        bt.term(s, 1)
