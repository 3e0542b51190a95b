"""The tiling verdict: five exact conditions, and finite-window oracles.

Two Beatty sequences tile N iff they are disjoint with union N.  The
condition checker decides this exactly for rational and quadratic inputs:

1. 0 < alpha < 1
2. alpha + beta = 1
3. 0 <= alpha + alpha' <= 1
4. (alpha irrational)  alpha' + beta' = 0  and  k*alpha + alpha' is never
   an integer for integer k >= 2
5. (alpha rational, q minimal with q*alpha integral)  1/q <= alpha+alpha'
   and ceil(q*alpha') + ceil(q*beta') = 1

The brute-force window oracle is deliberately independent: it marks actual
sequence coverage of [1, N] and reports the smallest violation.  A term
<= 0 in either sequence already breaks "union is N" even when the window
itself is covered exactly, so the oracle reports that as a violation of
its own kind (``out_of_domain``).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from . import exactreal as xr
from .beatty import BeattySpec, coverage_bits, normalize_rational_offset, term
from .errors import PrecisionExhausted, RequiresIrrational
from .exactreal import DecimalInterval, QuadraticIrrational

_CONDITION_ORDER = ("1", "2", "3", "4a", "4b", "5a", "5b")


@dataclass(frozen=True)
class TilePair:
    a: BeattySpec
    b: BeattySpec

    def swapped(self) -> "TilePair":
        return TilePair(self.b, self.a)

    def __str__(self):
        return f"({self.a}, {self.b})"


@dataclass(frozen=True)
class Verdict:
    """Outcome of the condition check.

    tiles is "yes", "no" or "unknown"; failed lists the certainly-violated
    condition identifiers; witness carries the integer k of a 4b failure.
    """

    tiles: str
    failed: tuple[str, ...] = ()
    witness: int | None = None

    def __post_init__(self):
        if self.tiles not in ("yes", "no", "unknown"):
            raise ValueError(f"bad verdict {self.tiles!r}")
        if (self.tiles == "yes") != (not self.failed) and self.tiles != "unknown":
            raise ValueError("failed conditions inconsistent with verdict")

    def as_json(self) -> dict:
        out: dict = {"tiles": self.tiles}
        if self.failed:
            out["failed"] = list(self.failed)
        if self.witness is not None:
            out["witness"] = self.witness
        return out


@dataclass(frozen=True)
class TilingReport:
    """What a finite window [1, N] (or [-W, W] for Z) actually shows."""

    window_end: int
    status: str  # tiles | doubly_covered | uncovered | out_of_domain
    k: int | None = None

    def __post_init__(self):
        if self.status not in ("tiles", "doubly_covered", "uncovered", "out_of_domain"):
            raise ValueError(f"bad status {self.status!r}")

    @property
    def tiles(self) -> bool:
        return self.status == "tiles"

    def as_json(self) -> dict:
        out: dict = {"window": self.window_end, "status": self.status}
        if self.k is not None:
            out["k"] = self.k
        return out


def _tri(thunk) -> bool | None:
    """Evaluate a boolean clause; None when intervals cannot decide."""
    try:
        return thunk()
    except PrecisionExhausted:
        return None


def _is_rational_flag(x) -> bool | None:
    if isinstance(x, Fraction):
        return True
    if isinstance(x, QuadraticIrrational):
        return False
    return None  # interval: rationality unknowable


def _integral_witness(alpha: QuadraticIrrational, offset, lo: int | None) -> int | None:
    """The unique-or-absent integer k with k*alpha + offset integral.

    For quadratic alpha the surd parts must cancel, fixing a single
    rational candidate for k; lo = 2 restricts to the N-theorem range,
    lo = None allows any integer (Z theorem).
    """
    if isinstance(offset, Fraction):
        candidates = [0]
    else:
        # k*(s_a/r_a) + s_o/r_o = 0 has one rational solution
        k = Fraction(-offset.s * alpha.r, alpha.s * offset.r)
        candidates = [int(k)] if k.denominator == 1 else []
    for k in candidates:
        if lo is not None and k < lo:
            continue
        if xr.is_integer(k * alpha + offset):
            return k
    return None


def check_conditions(pair: TilePair) -> Verdict:
    """Evaluate Fraenkel's five conditions exactly.

    Interval inputs may leave clauses undecided; the verdict is then
    "unknown" unless some other clause already failed for certain.
    """
    a, ao = pair.a.alpha, pair.a.offset
    b, bo = pair.b.alpha, pair.b.offset

    results: dict[str, bool | None] = {}
    witness: int | None = None

    results["1"] = _tri(lambda: xr.compare(a, 1) < 0)  # alpha > 0 is enforced by BeattySpec
    results["2"] = _tri(lambda: xr.compare(a + b, 1) == 0)
    results["3"] = _tri(
        lambda: xr.compare(a + ao, 0) >= 0 and xr.compare(a + ao, 1) <= 0
    )

    rational = _is_rational_flag(a)
    if rational is False:
        results["4a"] = _tri(lambda: xr.compare(ao + bo, 0) == 0)
        if isinstance(ao, DecimalInterval):
            results["4b"] = None
        else:
            witness = _integral_witness(a, ao, lo=2)
            results["4b"] = witness is None
    elif rational is True:
        q = a.denominator
        na = _tri(lambda: normalize_rational_offset(pair.a))
        ca = _tri(lambda: xr.ceil(q * ao))
        cb = _tri(lambda: xr.ceil(q * bo))
        if na is not None:
            results["5a"] = _tri(lambda: xr.compare(a + na.offset, Fraction(1, q)) >= 0)
        else:
            results["5a"] = None
        if ca is not None and cb is not None:
            results["5b"] = ca + cb == 1
            # double-entry: the normalized-offset form alpha'+beta' = 1/q
            # must agree whenever beta shares the denominator
            if isinstance(b, Fraction) and b.denominator == q and na is not None:
                nb = normalize_rational_offset(pair.b)
                assert (na.offset + nb.offset == Fraction(1, q)) == results["5b"]
        else:
            results["5b"] = None
    else:
        results["4a"] = results["4b"] = results["5a"] = results["5b"] = None

    failed = tuple(c for c in _CONDITION_ORDER if results.get(c) is False)
    if failed:
        return Verdict("no", failed, witness if "4b" in failed else None)
    if any(v is None for v in results.values()):
        return Verdict("unknown")
    return Verdict("yes")


def check_conditions_z(pair: TilePair) -> Verdict:
    """Two-sided variant: when do the sequences (indexed over all of Z) tile Z.

    Requires exact irrational (quadratic) densities.  Conditions:
    alpha + beta = 1; alpha' + beta' integral; k*alpha + alpha' never
    integral for any integer k.  Failed-condition identifiers reuse the
    closest N-theorem labels: "2", "4a", "4b".
    """
    a, ao = pair.a.alpha, pair.a.offset
    b, bo = pair.b.alpha, pair.b.offset
    if not isinstance(a, QuadraticIrrational) or not isinstance(b, QuadraticIrrational):
        raise RequiresIrrational("the Z tiling theorem needs irrational densities")

    results: dict[str, bool | None] = {}
    results["2"] = _tri(lambda: xr.compare(a + b, 1) == 0)
    results["4a"] = _tri(lambda: xr.is_integer(ao + bo))
    witness: int | None = None
    if isinstance(ao, DecimalInterval):
        results["4b"] = None
    else:
        witness = _integral_witness(a, ao, lo=None)
        results["4b"] = witness is None

    failed = tuple(c for c in ("2", "4a", "4b") if results[c] is False)
    if failed:
        return Verdict("no", failed, witness if "4b" in failed else None)
    if any(v is None for v in results.values()):
        return Verdict("unknown")
    return Verdict("yes")


def brute_force_tiling(pair: TilePair, window_end: int) -> TilingReport:
    """Mark actual coverage of [1, window_end]; report the smallest violation.

    Violations, smallest position first: a term <= 0 anywhere
    (out_of_domain, breaks union = N), then in-window double coverage or
    gaps.  PrecisionExhausted from any term is a hard error, never treated
    as absence.
    """
    if window_end < 1:
        raise ValueError("window_end must be at least 1")
    t_min = min(term(pair.a, 1), term(pair.b, 1))
    if t_min <= 0:
        return TilingReport(window_end, "out_of_domain", t_min)
    mask_a = coverage_bits(pair.a, window_end)
    mask_b = coverage_bits(pair.b, window_end)
    full = (1 << window_end) - 1
    dup = mask_a & mask_b
    missing = full & ~(mask_a | mask_b)
    if not dup and not missing:
        return TilingReport(window_end, "tiles")
    v = dup | missing
    k = (v & -v).bit_length()  # lowest set bit, 1-based = the integer k
    status = "doubly_covered" if (dup >> (k - 1)) & 1 else "uncovered"
    return TilingReport(window_end, status, k)


def brute_force_tiling_z(pair: TilePair, radius: int) -> TilingReport:
    """Window oracle for the Z theorem over [-radius, radius].

    Enumerates terms of both two-sided sequences landing in the window and
    reports the leftmost double cover or gap.
    """
    if radius < 0:
        raise ValueError("radius must be nonnegative")
    width = 2 * radius + 1
    masks = []
    for spec in (pair.a, pair.b):
        al, off = spec.alpha, spec.offset
        mask = 0
        n = xr.ceil(-radius * al + off)  # first n with term(n) >= -radius
        while True:
            t = xr.floor((n - off) / al)
            if t > radius:
                break
            if t >= -radius:
                mask |= 1 << (t + radius)
            n += 1
        masks.append(mask)
    full = (1 << width) - 1
    dup = masks[0] & masks[1]
    missing = full & ~(masks[0] | masks[1])
    if not dup and not missing:
        return TilingReport(radius, "tiles")
    v = dup | missing
    pos = (v & -v).bit_length() - 1
    k = pos - radius
    status = "doubly_covered" if (dup >> pos) & 1 else "uncovered"
    return TilingReport(radius, status, k)


def symmetry_normal_form(pair: TilePair) -> TilePair:
    """Order the pair so the first spec has the smaller (alpha, offset)."""
    c = xr.compare(pair.a.alpha, pair.b.alpha)
    if c == 0:
        c = xr.compare(pair.a.offset, pair.b.offset)
    return pair.swapped() if c > 0 else pair
