"""Exact number tower and circle-arc machinery.

Three kinds of value flow through the package:

* ``Rational`` -- an alias of :class:`fractions.Fraction`, which already
  guarantees the canonical form (positive denominator, reduced).
* :class:`QuadraticIrrational` -- (p + s*sqrt(d))/r with squarefree d.
  Arithmetic between two of these demands equal d.
* :class:`DecimalInterval` -- a rational interval certifying an otherwise
  unrepresentable constant.  Every operation on an interval either returns
  a certified answer or raises :class:`PrecisionExhausted`; intervals are
  never refined implicitly.

On top of the tower sit floors, fractional parts, three-way comparison,
and membership in circular arcs of R/Z (points are compared modulo 1).
All values are immutable; every function here is pure.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from math import floor as _pyfloor, gcd, isqrt
from typing import Union

from ._numutil import is_squarefree, squarefree_decompose
from .errors import IncompatibleSurds, PrecisionExhausted

Rational = Fraction

_DEFAULT_INTERVAL_DIGITS = 60


def default_interval_digits() -> int:
    """Digits used when a quadratic value must be enclosed in an interval."""
    return _DEFAULT_INTERVAL_DIGITS


def set_default_interval_digits(n: int) -> None:
    global _DEFAULT_INTERVAL_DIGITS
    if n < 1:
        raise ValueError("interval precision must be at least 1 digit")
    _DEFAULT_INTERVAL_DIGITS = n


class QuadraticIrrational:
    """(p + s*sqrt(d)) / r with integer p, s, r and squarefree d >= 2.

    Canonical form: r > 0, gcd(p, s, r) = 1, s != 0.  A would-be value with
    s = 0 is a Rational and the constructor rejects it; arithmetic that
    cancels the surd demotes the result to Fraction automatically.
    """

    __slots__ = ("p", "s", "d", "r")

    def __init__(self, p: int, s: int, d: int, r: int, _validated: bool = False):
        if r == 0:
            raise ZeroDivisionError("denominator r must be nonzero")
        if s == 0:
            raise ValueError("s = 0 would be rational; use Fraction instead")
        if not _validated:
            if d < 2:
                raise ValueError("d must be >= 2")
            if not is_squarefree(d):
                raise ValueError(f"d = {d} is not squarefree")
        if r < 0:
            p, s, r = -p, -s, -r
        g = gcd(gcd(abs(p), abs(s)), r)
        if g > 1:
            p, s, r = p // g, s // g, r // g
        self.p = p
        self.s = s
        self.d = d
        self.r = r

    # -- construction helpers -------------------------------------------------

    @staticmethod
    def make(p: int, s: int, radicand: int, r: int) -> RealValue:
        """Build (p + s*sqrt(radicand))/r, normalizing the radicand.

        Square factors move into s; radicand 0 or 1 (or s = 0) demotes to
        Fraction.
        """
        if radicand < 0:
            raise ValueError("negative radicand")
        if radicand in (0, 1):
            return Fraction(p + s * radicand, r)
        sq, d = squarefree_decompose(radicand)
        s *= sq
        if d == 1 or s == 0:
            return Fraction(p + s, r) if d == 1 else Fraction(p, r)
        return QuadraticIrrational(p, s, d, r, _validated=True)

    # -- internals ------------------------------------------------------------

    def _same_d(self, other: "QuadraticIrrational") -> None:
        if self.d != other.d:
            raise IncompatibleSurds(f"sqrt({self.d}) vs sqrt({other.d})")

    @staticmethod
    def _build(p: int, s: int, d: int, r: int) -> RealValue:
        if s == 0:
            return Fraction(p, r)
        return QuadraticIrrational(p, s, d, r, _validated=True)

    def _sign(self) -> int:
        p, s, d = self.p, self.s, self.d
        if p == 0:
            return 1 if s > 0 else -1
        if p > 0 and s > 0:
            return 1
        if p < 0 and s < 0:
            return -1
        # opposite signs: compare p^2 with s^2 d (never equal, d squarefree)
        if s > 0:
            return 1 if s * s * d > p * p else -1
        return 1 if p * p > s * s * d else -1

    # -- arithmetic -----------------------------------------------------------

    def __neg__(self) -> "QuadraticIrrational":
        return QuadraticIrrational(-self.p, -self.s, self.d, self.r, _validated=True)

    def __add__(self, other):
        if isinstance(other, int):
            other = Fraction(other)
        if isinstance(other, Fraction):
            a, b = other.numerator, other.denominator
            return self._build(self.p * b + a * self.r, self.s * b, self.d, self.r * b)
        if isinstance(other, QuadraticIrrational):
            self._same_d(other)
            return self._build(
                self.p * other.r + other.p * self.r,
                self.s * other.r + other.s * self.r,
                self.d,
                self.r * other.r,
            )
        if isinstance(other, DecimalInterval):
            return enclose(self) + other
        return NotImplemented

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, (int, Fraction, QuadraticIrrational, DecimalInterval)):
            return self + (-other)
        return NotImplemented

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            other = Fraction(other)
        if isinstance(other, Fraction):
            a, b = other.numerator, other.denominator
            return self._build(self.p * a, self.s * a, self.d, self.r * b)
        if isinstance(other, QuadraticIrrational):
            self._same_d(other)
            return self._build(
                self.p * other.p + self.s * other.s * self.d,
                self.p * other.s + self.s * other.p,
                self.d,
                self.r * other.r,
            )
        if isinstance(other, DecimalInterval):
            return enclose(self) * other
        return NotImplemented

    __rmul__ = __mul__

    def _inverse(self) -> "QuadraticIrrational":
        # conjugate trick: r(p - s sqrt d) / (p^2 - s^2 d); never zero
        norm = self.p * self.p - self.s * self.s * self.d
        return QuadraticIrrational(self.r * self.p, -self.r * self.s, self.d, norm)

    def __truediv__(self, other):
        if isinstance(other, int):
            other = Fraction(other)
        if isinstance(other, Fraction):
            if other == 0:
                raise ZeroDivisionError("division by zero")
            return self * Fraction(other.denominator, other.numerator)
        if isinstance(other, QuadraticIrrational):
            self._same_d(other)
            return self * other._inverse()
        if isinstance(other, DecimalInterval):
            return enclose(self) / other
        return NotImplemented

    def __rtruediv__(self, other):
        inv = self._inverse()
        if isinstance(other, (int, Fraction)):
            return inv * other
        if isinstance(other, DecimalInterval):
            return other * enclose(inv)
        return NotImplemented

    # -- comparison / hashing ---------------------------------------------------

    def __eq__(self, other) -> bool:
        if isinstance(other, QuadraticIrrational):
            return (self.p, self.s, self.d, self.r) == (other.p, other.s, other.d, other.r)
        if isinstance(other, (int, Fraction)):
            return False  # s != 0 means irrational
        return NotImplemented

    def __hash__(self):
        return hash(("quad", self.p, self.s, self.d, self.r))

    def __repr__(self):
        return f"QuadraticIrrational(p={self.p}, s={self.s}, d={self.d}, r={self.r})"

    def __str__(self):
        return format_real(self)

    def __float__(self):
        return (self.p + self.s * self.d ** 0.5) / self.r


class DecimalInterval:
    """A certified enclosure [low, high] with exact rational endpoints.

    The width is fixed by the constructing literal; arithmetic combines
    endpoints exactly, so no operation widens the result beyond what the
    inputs force.  Questions the interval cannot answer raise
    PrecisionExhausted.
    """

    __slots__ = ("low", "high", "label", "_literal")

    def __init__(self, low: Fraction, high: Fraction, label: str = "", _literal: str | None = None):
        low = Fraction(low)
        high = Fraction(high)
        if low > high:
            raise ValueError("interval endpoints out of order")
        self.low = low
        self.high = high
        self.label = label
        self._literal = _literal

    @staticmethod
    def from_midpoint_literal(digits: str, label: str = "") -> "DecimalInterval":
        """Midpoint decimal string with half-ulp-of-last-digit radius."""
        mid = Fraction(digits)
        if "." in digits:
            radius = Fraction(1, 2 * 10 ** len(digits.split(".", 1)[1]))
        else:
            radius = Fraction(1, 2)
        lit = f"~{digits}" + (f":{label}" if label else "")
        return DecimalInterval(mid - radius, mid + radius, label, _literal=lit)

    @property
    def width(self) -> Fraction:
        return self.high - self.low

    def _relabel(self) -> str:
        return ""  # arithmetic results describe no single named constant

    def __neg__(self):
        return DecimalInterval(-self.high, -self.low, self._relabel())

    def __add__(self, other):
        o = _as_interval(other)
        if o is None:
            return NotImplemented
        return DecimalInterval(self.low + o.low, self.high + o.high, self._relabel())

    __radd__ = __add__

    def __sub__(self, other):
        o = _as_interval(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = _as_interval(other)
        if o is None:
            return NotImplemented
        prods = (self.low * o.low, self.low * o.high, self.high * o.low, self.high * o.high)
        return DecimalInterval(min(prods), max(prods), self._relabel())

    __rmul__ = __mul__

    def _inverse(self):
        if self.low <= 0 <= self.high:
            raise PrecisionExhausted(f"interval {self} straddles zero; cannot invert")
        return DecimalInterval(1 / self.high, 1 / self.low, self._relabel())

    def __truediv__(self, other):
        o = _as_interval(other)
        if o is None:
            return NotImplemented
        return self * o._inverse()

    def __rtruediv__(self, other):
        o = _as_interval(other)
        if o is None:
            return NotImplemented
        return o * self._inverse()

    def __eq__(self, other) -> bool:
        if isinstance(other, DecimalInterval):
            return (self.low, self.high) == (other.low, other.high)
        return NotImplemented

    def __hash__(self):
        return hash(("ival", self.low, self.high))

    def __repr__(self):
        tag = f", label={self.label!r}" if self.label else ""
        return f"DecimalInterval({self.low!r}, {self.high!r}{tag})"

    def __str__(self):
        return format_real(self)

    def __float__(self):
        return float((self.low + self.high) / 2)


RealValue = Union[Fraction, QuadraticIrrational, DecimalInterval]
ExactReal = Union[Fraction, QuadraticIrrational]


def _as_interval(x) -> DecimalInterval | None:
    if isinstance(x, DecimalInterval):
        return x
    if isinstance(x, int):
        x = Fraction(x)
    if isinstance(x, Fraction):
        return DecimalInterval(x, x)
    if isinstance(x, QuadraticIrrational):
        return enclose(x)
    return None


def enclose(x: RealValue, digits: int | None = None) -> DecimalInterval:
    """Rational enclosure of x; exact values become (near-)point intervals."""
    if isinstance(x, DecimalInterval):
        return x
    if isinstance(x, int):
        x = Fraction(x)
    if isinstance(x, Fraction):
        return DecimalInterval(x, x)
    scale = 10 ** (digits or _DEFAULT_INTERVAL_DIGITS)
    t = isqrt(x.d * scale * scale)  # t <= sqrt(d)*scale < t+1
    if x.s > 0:
        lo, hi = x.p * scale + x.s * t, x.p * scale + x.s * (t + 1)
    else:
        lo, hi = x.p * scale + x.s * (t + 1), x.p * scale + x.s * t
    den = x.r * scale
    return DecimalInterval(Fraction(lo, den), Fraction(hi, den))


def as_real(x) -> RealValue:
    """Coerce int/str/Fraction into the RealValue union."""
    if isinstance(x, (Fraction, QuadraticIrrational, DecimalInterval)):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return parse_real(x)
    raise TypeError(f"cannot interpret {x!r} as an exact real")


# -- floors, fractional parts, order ------------------------------------------


def floor(x: RealValue) -> int:
    """Greatest integer <= x; exact for Fraction/QuadraticIrrational."""
    if isinstance(x, int):
        return x
    if isinstance(x, Fraction):
        return _pyfloor(x)
    if isinstance(x, QuadraticIrrational):
        n = x.s * x.s * x.d
        t = isqrt(n) if x.s > 0 else -(isqrt(n) + 1)  # floor(s*sqrt(d)), never exact
        return (x.p + t) // x.r
    if isinstance(x, DecimalInterval):
        fl, fh = _pyfloor(x.low), _pyfloor(x.high)
        if fl != fh:
            raise PrecisionExhausted(
                f"floor undecided: interval {x} straddles the integer {fh}"
            )
        return fl
    raise TypeError(f"not a RealValue: {x!r}")


def ceil(x: RealValue) -> int:
    x = as_real(x)
    return -floor(-x)


def frac(x: RealValue) -> RealValue:
    """x - floor(x), in [0, 1); same exactness class as x."""
    x = as_real(x)
    return x - floor(x)


def compare(x: RealValue, y: RealValue) -> int:
    """-1, 0, +1 for x < y, x = y, x > y, decided exactly or not at all."""
    x, y = as_real(x), as_real(y)
    if isinstance(x, DecimalInterval) or isinstance(y, DecimalInterval):
        ix, iy = _as_interval(x), _as_interval(y)
        if ix.high < iy.low:
            return -1
        if ix.low > iy.high:
            return 1
        if ix.low == ix.high == iy.low == iy.high:
            return 0
        raise PrecisionExhausted(f"cannot order overlapping intervals {ix} and {iy}")
    diff = x - y
    if isinstance(diff, Fraction):
        return (diff > 0) - (diff < 0)
    return diff._sign()


def is_integer(x: RealValue) -> bool | None:
    """True / False exactly, or None when an interval cannot decide."""
    x = as_real(x)
    if isinstance(x, Fraction):
        return x.denominator == 1
    if isinstance(x, QuadraticIrrational):
        return False
    if x.low == x.high:
        return x.low.denominator == 1
    if ceil(x.low) > _pyfloor(x.high):
        return False  # no integer inside
    return None


# -- the circle R/Z -------------------------------------------------------------


@dataclass(frozen=True)
class CirclePoint:
    """A real number considered modulo 1."""

    value: RealValue

    def congruent(self, other: "CirclePoint") -> bool | None:
        return is_integer(self.value - other.value)

    def __str__(self):
        return f"{format_real(self.value)} (mod 1)"


def _point(x) -> CirclePoint:
    return x if isinstance(x, CirclePoint) else CirclePoint(as_real(x))


def in_order(w, x, y) -> bool:
    """True iff x lies on the counter-clockwise arc from w to y (mod 1).

    Degenerate cases follow the endpoint convention: x congruent to w or to
    y counts as in order; open/closed distinctions belong to Arc.
    """
    w, x, y = _point(w), _point(x), _point(y)
    u = frac(x.value - w.value)
    v = frac(y.value - w.value)
    return compare(u, v) <= 0


@dataclass(frozen=True)
class Arc:
    """Directed circular arc from left to right with open/closed endpoints.

    Empty whenever the endpoints are congruent mod 1, regardless of flags.
    """

    left: CirclePoint
    right: CirclePoint
    left_closed: bool = False
    right_closed: bool = False

    def contains(self, x) -> bool:
        cong = self.left.congruent(self.right)
        if cong is None:
            raise PrecisionExhausted("arc endpoints cannot be certified distinct mod 1")
        if cong:
            return False
        x = _point(x)
        u = frac(x.value - self.left.value)
        v = frac(self.right.value - self.left.value)
        if compare(u, 0) == 0:
            return self.left_closed
        c = compare(u, v)
        if c == 0:
            return self.right_closed
        return c < 0

    def __str__(self):
        lb = "[" if self.left_closed else "("
        rb = "]" if self.right_closed else ")"
        return f"{lb}{format_real(self.left.value)}, {format_real(self.right.value)}{rb}"


def arc(left, right, left_closed: bool = False, right_closed: bool = False) -> Arc:
    return Arc(_point(left), _point(right), left_closed, right_closed)


def arc_contains(a: Arc, x) -> bool:
    return a.contains(x)


# -- literal grammar -------------------------------------------------------------

_RAT_RE = re.compile(r"^([+-]?\d+)(?:/(\d+))?$")
_QUAD_RE = re.compile(
    r"^\(\s*([+-]?\d+)\s*([+-])\s*(\d+)\s*\*\s*sqrt\s+(\d+)\s*\)\s*/\s*(\d+)$"
)
_IVAL_RE = re.compile(r"^~([+-]?\d+(?:\.\d+)?)(?::(.*))?$")


def parse_real(text: str) -> RealValue:
    """Parse the textual literal grammar.

    Forms: ``3/7`` or ``-5`` (rational); ``(-1+1*sqrt 5)/2`` (quadratic);
    ``~2.71828:e`` (interval literal, half-ulp radius, optional label).
    Unicode minus is accepted everywhere.
    """
    t = text.strip().replace("−", "-")
    m = _RAT_RE.match(t)
    if m:
        return Fraction(int(m.group(1)), int(m.group(2) or 1))
    m = _QUAD_RE.match(t)
    if m:
        p = int(m.group(1))
        s = int(m.group(3)) * (1 if m.group(2) == "+" else -1)
        return QuadraticIrrational.make(p, s, int(m.group(4)), int(m.group(5)))
    m = _IVAL_RE.match(t)
    if m:
        return DecimalInterval.from_midpoint_literal(m.group(1), m.group(2) or "")
    raise ValueError(f"unrecognized real literal: {text!r}")


def format_real(x: RealValue) -> str:
    """Canonical literal; bit-exact round-trip for the exact forms."""
    x = as_real(x)
    if isinstance(x, Fraction):
        return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"
    if isinstance(x, QuadraticIrrational):
        sign = "+" if x.s > 0 else "-"
        return f"({x.p}{sign}{abs(x.s)}*sqrt {x.d})/{x.r}"
    if x._literal is not None:
        return x._literal
    tag = f":{x.label}" if x.label else ""
    return f"~({x.low}..{x.high}){tag}"
