"""Beatty sequences: terms, membership, counting, offset normalization.

A spec (alpha, offset) names the sequence floor((n - offset)/alpha) for
n = 1, 2, ...  Membership of an integer k is decided by the circle-arc
criterion: k belongs iff k*alpha + offset > 0 AND k*alpha lies in the
half-open arc (-alpha-offset, -offset] mod 1.  Counting uses the exact
prefix formula |B ∩ (-inf, k)| = max(0, ceil(k*alpha + offset) - 1).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import exactreal as xr
from ._kernels import member_bits
from .errors import DensityOutOfRange, NotRationalDensity
from .exactreal import Arc, CirclePoint, DecimalInterval, QuadraticIrrational, RealValue


@dataclass(frozen=True)
class BeattySpec:
    """Density alpha > 0 and offset alpha' of one Beatty sequence."""

    alpha: RealValue
    offset: RealValue

    def __post_init__(self):
        object.__setattr__(self, "alpha", xr.as_real(self.alpha))
        object.__setattr__(self, "offset", xr.as_real(self.offset))
        if xr.compare(self.alpha, 0) <= 0:
            raise DensityOutOfRange(f"alpha must be positive, got {xr.format_real(self.alpha)}")

    def __str__(self):
        return f"B({xr.format_real(self.alpha)}, {xr.format_real(self.offset)})"


def term(spec: BeattySpec, n: int) -> int:
    """The n-th term floor((n - offset)/alpha), n >= 1."""
    if n < 1:
        raise ValueError("term index starts at 1")
    return xr.floor((n - spec.offset) / spec.alpha)


def _arc_of(spec: BeattySpec) -> Arc:
    a, off = spec.alpha, spec.offset
    return Arc(CirclePoint(-a - off), CirclePoint(-off), left_closed=False, right_closed=True)


def membership(spec: BeattySpec, k: int) -> bool:
    """Membership of k via the arc criterion (requires 0 < alpha < 1)."""
    a, off = spec.alpha, spec.offset
    if xr.compare(a, 0) <= 0 or xr.compare(a, 1) >= 0:
        raise DensityOutOfRange(
            f"membership criterion needs 0 < alpha < 1, got {xr.format_real(a)}"
        )
    if xr.compare(k * a + off, 0) <= 0:
        return False
    return _arc_of(spec).contains(CirclePoint(k * a))


def count_below(spec: BeattySpec, k: int) -> int:
    """|B(alpha, offset) ∩ (-inf, k)| = max(0, ceil(k*alpha + offset) - 1)."""
    c = xr.ceil(k * spec.alpha + spec.offset)
    return c - 1 if c > 0 else 0


def normalize_rational_offset(spec: BeattySpec) -> BeattySpec:
    """Snap the offset of a rational-density spec to ceil(q*offset)/q.

    The output names the identical sequence; q is the canonical denominator
    of alpha.
    """
    if not isinstance(spec.alpha, Fraction):
        raise NotRationalDensity(
            f"normalization needs rational alpha, got {xr.format_real(spec.alpha)}"
        )
    q = spec.alpha.denominator
    return BeattySpec(spec.alpha, Fraction(xr.ceil(q * spec.offset), q))


def enumerate_terms(spec: BeattySpec, bound: int) -> list[int]:
    """All terms <= bound, in order of n (strictly increasing for alpha <= 1)."""
    if bound < 1:
        raise ValueError("bound must be at least 1")
    out: list[int] = []
    n = 1
    while True:
        t = term(spec, n)
        if t > bound:
            return out
        out.append(t)
        n += 1


def coverage_bits(spec: BeattySpec, n: int) -> int:
    """Packed membership of 1..n: bit k-1 set iff k is in the sequence.

    Dispatches to the periodic fast path for rational specs with
    0 < alpha < 1, to the bit kernel for exact specs, and to the per-k
    membership loop otherwise.  Semantics are set-coverage, so the result
    is meaningful for every alpha > 0.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n == 0:
        return 0
    a, off = spec.alpha, spec.offset
    if isinstance(a, Fraction) and isinstance(off, Fraction):
        if 0 < a < 1:
            return _rational_coverage_bits(
                a.numerator, a.denominator, off.numerator, off.denominator, n
            )
        raw = member_bits(a.numerator, 0, a.denominator, off.numerator, 0, off.denominator, 1, n)
        return int.from_bytes(raw, "little")
    if isinstance(a, QuadraticIrrational) and not isinstance(off, DecimalInterval):
        if isinstance(off, Fraction):
            pb, sb, rb = off.numerator, 0, off.denominator
        else:
            if off.d != a.d:
                # arc comparisons would raise IncompatibleSurds; let them
                return _generic_coverage_bits(spec, n)
            pb, sb, rb = off.p, off.s, off.r
        raw = member_bits(a.p, a.s, a.r, pb, sb, rb, a.d, n)
        return int.from_bytes(raw, "little")
    return _generic_coverage_bits(spec, n)


def _generic_coverage_bits(spec: BeattySpec, n: int) -> int:
    mask = 0
    for k in range(1, n + 1):
        if membership(spec, k):
            mask |= 1 << (k - 1)
    return mask


def _rational_coverage_bits(a: int, q: int, ap: int, aq: int, n: int) -> int:
    """Periodic construction for alpha = a/q in (0,1), offset ap/aq.

    Membership of k reduces to an integer window test on the scaled circle
    Z/(q*aq): k is in the sequence iff k*a*aq + ap*q > 0 (positivity) and
    0 < ((k+1)*a*aq + ap*q) mod (q*aq) <= a*aq (the arc clause).  The arc
    clause has period q in k, so one q-bit pattern is tiled across the
    window after the positivity transient.
    """
    if aq < 0:
        ap, aq = -ap, -aq
    M = q * aq
    step = a * aq
    base = ap * q

    def arc_ok(k: int) -> bool:
        u = ((k + 1) * step + base) % M
        return 0 < u <= step

    # positivity k*step + base > 0 holds exactly for k > k0
    k0 = 0 if base > 0 else (-base) // step
    if k0 >= n:
        return 0
    pattern = 0
    for j in range(q):  # bits for k = k0+1 .. k0+q
        if arc_ok(k0 + 1 + j):
            pattern |= 1 << j
    reps = (n - k0 + q - 1) // q
    tiled = pattern * (((1 << (q * reps)) - 1) // ((1 << q) - 1))
    mask = tiled << k0
    mask &= (1 << n) - 1
    # transient below k0 never passes positivity; bits stay clear there
    return mask
