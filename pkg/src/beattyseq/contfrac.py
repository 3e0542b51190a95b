"""Continued fractions, continuants, and greedy digit expansions of integers.

The expansion of a rational density is finite (canonical: final quotient
at least 2); a quadratic irrational yields an eventually periodic
expansion, detected exactly by state repetition.  Continuants q_0 = 1,
q_1 = a_1, q_i = a_i*q_{i-1} + q_{i-2} index the greedy expansion of an
integer m as m = sum z_i * q_i (Ostrowski/Zeckendorf digits).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Iterator

from . import exactreal as xr
from .errors import (
    DensityOutOfRange,
    IntervalNotSupported,
    InsufficientQuotients,
    RequiresIrrational,
)
from .exactreal import QuadraticIrrational, RealValue


class CFKind(Enum):
    FINITE_EXACT = "finite"
    PERIODIC_EXACT = "periodic"
    TRUNCATED = "truncated"


@dataclass(frozen=True)
class CFExpansion:
    """Partial quotients a_1, a_2, ... of a value in (0, 1).

    ``initial`` holds all quotients for finite/truncated expansions and the
    preperiod for periodic ones; ``period`` repeats forever after that.
    ``source`` remembers the expanded value when it is known exactly.
    """

    initial: tuple[int, ...]
    period: tuple[int, ...]
    kind: CFKind
    source: RealValue | None = field(default=None, compare=False)

    def __post_init__(self):
        if any(a < 1 for a in self.initial + self.period):
            raise ValueError("partial quotients must be positive")
        if (self.kind is CFKind.PERIODIC_EXACT) != bool(self.period):
            raise ValueError("period present iff kind is periodic")

    @property
    def preperiod_len(self) -> int:
        return len(self.initial)

    @property
    def period_len(self) -> int:
        return len(self.period)

    @property
    def partial_quotients(self) -> tuple[int, ...]:
        return self.initial

    def available(self) -> int | None:
        """Number of quotients on hand, or None when unbounded."""
        return None if self.period else len(self.initial)

    def quotient(self, i: int) -> int:
        """a_i, 1-based."""
        if i < 1:
            raise IndexError("quotient indices start at 1")
        if i <= len(self.initial):
            return self.initial[i - 1]
        if self.period:
            return self.period[(i - 1 - len(self.initial)) % len(self.period)]
        raise InsufficientQuotients(
            f"a_{i} not available in a {self.kind.value} expansion of length {len(self.initial)}"
        )

    def quotients(self, count: int) -> list[int]:
        return [self.quotient(i) for i in range(1, count + 1)]

    def iter_quotients(self) -> Iterator[int]:
        i = 1
        while True:
            try:
                yield self.quotient(i)
            except InsufficientQuotients:
                return
            i += 1

    def __str__(self):
        body = ",".join(map(str, self.initial))
        if self.period:
            per = ",".join(map(str, self.period))
            return f"[0;{body}{',' if body else ''}({per}) repeating]"
        suffix = ",..." if self.kind is CFKind.TRUNCATED else ""
        return f"[0;{body}{suffix}]"


def cf_expand(x: RealValue, max_terms: int = 64) -> CFExpansion:
    """Continued fraction of x in (0,1); exact kinds only.

    Rationals get the canonical finite form (last quotient >= 2 unless the
    expansion has a single term).  Quadratic irrationals are driven until
    the remainder state repeats, giving the exact period; if that does not
    happen within max_terms quotients the result is Truncated.
    """
    x = xr.as_real(x)
    if isinstance(x, xr.DecimalInterval):
        raise IntervalNotSupported("continued fractions need exact input")
    if xr.compare(x, 0) <= 0 or xr.compare(x, 1) >= 0:
        raise DensityOutOfRange(f"cf_expand needs 0 < x < 1, got {xr.format_real(x)}")
    if max_terms < 1:
        raise ValueError("max_terms must be positive")

    if isinstance(x, Fraction):
        # Euclid on (num, den); quotients of 1/x, 1/frac(1/x), ...
        num, den = x.numerator, x.denominator
        quots = []
        while num:
            a, rem = divmod(den, num)
            quots.append(a)
            den, num = num, rem
        # Euclid already yields the canonical form (last quotient >= 2 when
        # the expansion has more than one term)
        return CFExpansion(tuple(quots), (), CFKind.FINITE_EXACT, source=x)

    seen: dict[tuple[int, int, int, int], int] = {}
    quots: list[int] = []
    y = x
    while len(quots) < max_terms:
        key = (y.p, y.s, y.d, y.r)
        if key in seen:
            cut = seen[key]
            return CFExpansion(
                tuple(quots[:cut]), tuple(quots[cut:]), CFKind.PERIODIC_EXACT, source=x
            )
        seen[key] = len(quots)
        inv = 1 / y
        a = xr.floor(inv)
        quots.append(a)
        nxt = inv - a
        if isinstance(nxt, Fraction):  # cannot happen for irrational y
            raise AssertionError("irrational remainder became rational")
        y = nxt
    return CFExpansion(tuple(quots), (), CFKind.TRUNCATED, source=x)


def cf_value(cf: CFExpansion) -> RealValue:
    """Reconstruct the exact value of a finite or periodic expansion."""
    if cf.kind is CFKind.TRUNCATED:
        raise InsufficientQuotients("cannot reconstruct a truncated expansion")
    if cf.kind is CFKind.FINITE_EXACT:
        v = Fraction(0)
        for a in reversed(cf.initial):
            v = Fraction(1, 1) / (a + v)
        return v
    # tail T = [0; period, period, ...]: fold Moebius maps t -> 1/(a+t),
    # i.e. matrices [[0,1],[1,a]], then solve C*T^2 + (D-A)*T - B = 0
    A, B, C, D = 1, 0, 0, 1
    for a in cf.period:
        A, B, C, D = B, A + a * B, D, C + a * D
    disc = (D - A) * (D - A) + 4 * B * C
    root = QuadraticIrrational.make(A - D, 1, disc, 2 * C)
    t = root  # positive root: T > 0
    v: RealValue = t
    for a in reversed(cf.initial):
        v = 1 / (a + v)
    return v


def continuants(cf: CFExpansion, count: int) -> list[int]:
    """q_0 .. q_count (count+1 values) via q_i = a_i*q_{i-1} + q_{i-2}."""
    if count < 0:
        raise ValueError("count must be nonnegative")
    qs = [1]
    prev2, prev1 = 0, 1
    for i in range(1, count + 1):
        a = cf.quotient(i)
        prev2, prev1 = prev1, a * prev1 + prev2
        qs.append(prev1)
    return qs


def convergents(cf: CFExpansion, count: int) -> list[tuple[int, int]]:
    """(p_i, q_i) for i = 0..count; p seeded 0, 1 by the companion recurrence."""
    qs = continuants(cf, count)
    ps = [0]
    prev2, prev1 = 1, 0
    for i in range(1, count + 1):
        a = cf.quotient(i)
        prev2, prev1 = prev1, a * prev1 + prev2
        ps.append(prev1)
    return list(zip(ps, qs))


def continuants_upto(cf: CFExpansion, bound: int) -> list[int]:
    """All continuants q_0, q_1, ... while q_i <= bound (at least q_0)."""
    qs = [1]
    prev2, prev1 = 0, 1
    i = 1
    while True:
        try:
            a = cf.quotient(i)
        except InsufficientQuotients:
            return qs
        nxt = a * prev1 + prev2
        if nxt > bound:
            return qs
        qs.append(nxt)
        prev2, prev1 = prev1, nxt
        i += 1


@dataclass(frozen=True)
class OstrowskiDigits:
    """Digits z_0, z_1, ..., z_t (least significant first), summing to m."""

    digits: tuple[int, ...]
    m: int

    @property
    def t(self) -> int:
        return len(self.digits) - 1

    def __str__(self):
        body = "".join(
            str(z) if z < 10 else f"[{z}]" for z in reversed(self.digits)
        )
        return f"({body})_α"


def ostrowski_expand(m: int, cf: CFExpansion) -> OstrowskiDigits:
    """Greedy expansion of m >= 1 over the continuants of cf.

    Greedy means: always subtract the largest continuant that fits, and on
    equal values (q_0 = q_1 = 1 when a_1 = 1) the one with the larger
    index, which is what forces z_0 = 0 whenever a_1 = 1.
    """
    if m < 1:
        raise ValueError("m must be positive")
    qs = continuants_upto(cf, m)
    if cf.kind is CFKind.TRUNCATED and len(qs) - 1 >= len(cf.initial):
        # ran out of quotients before a continuant exceeded m: the greedy
        # top digit cannot be certified
        raise InsufficientQuotients(
            f"continuants of {cf} stop at {qs[-1]}, not enough to expand {m}"
        )
    digits = [0] * len(qs)
    rem = m
    for i in range(len(qs) - 1, -1, -1):
        if rem == 0:
            break
        z, rem = divmod(rem, qs[i])
        digits[i] = z
    assert rem == 0
    while len(digits) > 1 and digits[-1] == 0:
        digits.pop()
    return OstrowskiDigits(tuple(digits), m)


def validate_ostrowski(digits: OstrowskiDigits, cf: CFExpansion) -> bool:
    """Check the uniqueness constraints of the digit string against cf.

    The digit riding on q_i is capped by the next partial quotient: z_0 <=
    a_1 - 1 and z_i <= a_{i+1} for i >= 1, with z_i = a_{i+1} forcing
    z_{i-1} = 0.  (For constant-quotient expansions such as the golden
    ratio or sqrt(2)-1 this coincides with the familiar z_i <= a_i form.)
    """
    zs = digits.digits
    if any(z < 0 for z in zs):
        return False
    try:
        if zs[0] > cf.quotient(1) - 1:
            return False
        for i in range(1, len(zs)):
            cap = cf.quotient(i + 1)
            if zs[i] > cap:
                return False
            if zs[i] == cap and zs[i - 1] != 0:
                return False
    except InsufficientQuotients:
        return False
    return True


def nearest_int_distance(x: RealValue) -> RealValue:
    """Distance from x to the nearest integer, in [0, 1/2]."""
    f = xr.frac(x)
    g = 1 - f
    return f if xr.compare(f, g) <= 0 else g


def check_spacing(cf: CFExpansion, t: int) -> bool:
    """Exhaustively verify the best-approximation spacing at index t.

    For every s with 1 <= s < q_{t+1}: dist(s*alpha) >= dist(q_t*alpha),
    with equality exactly at s = q_t.  (Negative s mirror positive ones.)
    This is a verifier of the classical continued-fraction theorem, not a
    proof.
    """
    if t < 0:
        raise ValueError("t must be nonnegative")
    alpha = cf.source if cf.source is not None else cf_value(cf)
    if not isinstance(alpha, QuadraticIrrational):
        raise RequiresIrrational("spacing verification needs an exact irrational")
    qs = continuants(cf, t + 1)
    q_t, q_next = qs[t], qs[t + 1]
    ref = nearest_int_distance(q_t * alpha)
    for s in range(1, q_next):
        c = xr.compare(nearest_int_distance(s * alpha), ref)
        if s == q_t:
            if c != 0:
                return False
        elif c <= 0:
            return False
    return True
