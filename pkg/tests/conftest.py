"""Shared fixtures: the fixed irrational densities and the e enclosure."""

from decimal import Decimal, getcontext
from fractions import Fraction

import pytest

from beattyseq import exactreal as xr
from beattyseq.exactreal import QuadraticIrrational

GOLDEN = QuadraticIrrational.make(-1, 1, 5, 2)      # (sqrt5 - 1)/2 = [0;(1)]
SQRT2M1 = QuadraticIrrational.make(-1, 1, 2, 1)     # sqrt2 - 1     = [0;(2)]
REP3 = QuadraticIrrational.make(-3, 1, 13, 2)       # [0;(3)]       = (sqrt13-3)/2
REP12 = QuadraticIrrational.make(-1, 1, 3, 1)       # [0;(1,2)]     = sqrt3 - 1
GOLDEN_SQ = QuadraticIrrational.make(3, -1, 5, 2)   # (3 - sqrt5)/2 = [0;2,(1)]

FIVE_IRRATIONALS = {
    "golden": GOLDEN,
    "sqrt2-1": SQRT2M1,
    "rep3": REP3,
    "rep12": REP12,
    "golden-sq": GOLDEN_SQ,
}

# the four densities of the decomposition acceptance criterion
BROWN_ALPHAS = {k: FIVE_IRRATIONALS[k] for k in ("golden", "sqrt2-1", "rep3", "rep12")}


def e_digits(digits: int = 60) -> str:
    """Decimal digits of e, e.g. '2.71828...' with `digits` fractional-ish length."""
    getcontext().prec = digits + 20
    total = Decimal(0)
    term = Decimal(1)
    for n in range(1, digits + 40):
        total += term
        term /= n
    return str(+total)[: digits + 2]  # "2." plus `digits` digits


@pytest.fixture(scope="session")
def e_interval():
    """60-digit enclosure of e as a DecimalInterval literal."""
    return xr.parse_real(f"~{e_digits(60)}:e")


@pytest.fixture(scope="session")
def three_minus_e(e_interval):
    return 3 - e_interval


@pytest.fixture(scope="session")
def e_minus_two(e_interval):
    return e_interval - 2


@pytest.fixture(scope="session")
def fig1_specs(three_minus_e, e_minus_two):
    from beattyseq.beatty import BeattySpec

    return (
        BeattySpec(three_minus_e, Fraction(2, 5)),
        BeattySpec(e_minus_two, Fraction(-2, 5)),
    )
