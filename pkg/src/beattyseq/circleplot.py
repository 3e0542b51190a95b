"""Figure-style SVG: the unit circle, the arcs A and B, and points k*alpha.

Coordinates are computed from the exact values through 40-digit decimal
trigonometry and only then rounded to 6 decimals, so identical inputs
yield identical bytes on every platform.  Which arc a point belongs to is
decided by the exact membership test, never by the rendered floats.
"""

from __future__ import annotations

from decimal import ROUND_HALF_EVEN, Decimal, localcontext
from fractions import Fraction

from . import exactreal as xr
from .beatty import membership
from .fraenkel import TilePair
from .exactreal import DecimalInterval, QuadraticIrrational, RealValue

_PI = Decimal("3.141592653589793238462643383279502884197169399375105820974944592")
_PREC = 40
_Q6 = Decimal("0.000001")

_SIZE = 440
_CX = Decimal(220)
_CY = Decimal(220)
_R = Decimal(150)  # main circle
_R_A = Decimal(132)  # arc A, drawn inside
_R_B = Decimal(117)  # arc B, further inside
_R_LABEL = Decimal(168)

_COL_A = "#1f77b4"
_COL_B = "#d62728"
_COL_NEITHER = "#7f7f7f"


def _midpoint(x: RealValue) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, QuadraticIrrational):
        e = xr.enclose(x, 35)
        return (e.low + e.high) / 2
    if isinstance(x, DecimalInterval):
        return (x.low + x.high) / 2
    raise TypeError(x)


def _sin(x: Decimal) -> Decimal:
    term = x
    total = x
    xx = x * x
    n = 1
    last = None
    while total != last:
        last = total
        term *= -xx / ((2 * n) * (2 * n + 1))
        total += term
        n += 1
    return total


def _cos(x: Decimal) -> Decimal:
    term = Decimal(1)
    total = Decimal(1)
    xx = x * x
    n = 1
    last = None
    while total != last:
        last = total
        term *= -xx / ((2 * n - 1) * (2 * n))
        total += term
        n += 1
    return total


def _xy(turns: Fraction, radius: Decimal) -> tuple[str, str]:
    """Point at `turns` revolutions counterclockwise from the x axis."""
    with localcontext() as ctx:
        ctx.prec = _PREC
        theta = 2 * _PI * Decimal(turns.numerator) / Decimal(turns.denominator)
        x = _CX + radius * _cos(theta)
        y = _CY - radius * _sin(theta)  # SVG y grows downward
    return (
        str(x.quantize(_Q6, rounding=ROUND_HALF_EVEN)),
        str(y.quantize(_Q6, rounding=ROUND_HALF_EVEN)),
    )


def _turns(x: RealValue) -> Fraction:
    return _midpoint(xr.frac(x))


def _arc_path(left: RealValue, right: RealValue, radius: Decimal, color: str) -> str:
    t1 = _turns(left)
    t2 = _turns(right)
    span = (t2 - t1) % 1
    x1, y1 = _xy(t1, radius)
    x2, y2 = _xy(t2, radius)
    large = 1 if span > Fraction(1, 2) else 0
    # sweep 0 walks counterclockwise in mathematical orientation
    return (
        f'<path d="M {x1} {y1} A {radius} {radius} 0 {large} 0 {x2} {y2}" '
        f'fill="none" stroke="{color}" stroke-width="7" stroke-linecap="butt"/>'
    )


def _endpoint_marker(at: RealValue, radius: Decimal, closed: bool, color: str) -> str:
    x, y = _xy(_turns(at), radius)
    if closed:
        return f'<circle cx="{x}" cy="{y}" r="4" fill="{color}" stroke="none"/>'
    return f'<circle cx="{x}" cy="{y}" r="4" fill="white" stroke="{color}" stroke-width="1.5"/>'


def circle_svg(pair: TilePair, k_max: int) -> str:
    """Render the two membership arcs and the points k*alpha, 0 <= k <= k_max."""
    if k_max < 0:
        raise ValueError("k_max must be nonnegative")
    a, ao = pair.a.alpha, pair.a.offset
    b, bo = pair.b.alpha, pair.b.offset

    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{_SIZE}" height="{_SIZE}" '
        f'viewBox="0 0 {_SIZE} {_SIZE}">',
        f'<rect width="{_SIZE}" height="{_SIZE}" fill="white"/>',
        f'<circle cx="{_CX}" cy="{_CY}" r="{_R}" fill="none" stroke="black" stroke-width="1"/>',
    ]

    # arc A = (-alpha-alpha', -alpha'] and arc B = [beta', beta+beta')
    a_left, a_right = -a - ao, -ao
    b_left, b_right = bo, b + bo
    parts.append(_arc_path(a_left, a_right, _R_A, _COL_A))
    parts.append(_endpoint_marker(a_left, _R_A, False, _COL_A))
    parts.append(_endpoint_marker(a_right, _R_A, True, _COL_A))
    parts.append(_arc_path(b_left, b_right, _R_B, _COL_B))
    parts.append(_endpoint_marker(b_left, _R_B, True, _COL_B))
    parts.append(_endpoint_marker(b_right, _R_B, False, _COL_B))

    ax, ay = _xy(_turns(a_left + (a_right - a_left) / 2), _R_A - Decimal(16))
    bx, by = _xy(_turns(b_left + (b_right - b_left) / 2), _R_B - Decimal(16))
    parts.append(f'<text x="{ax}" y="{ay}" font-size="15" fill="{_COL_A}" '
                 f'text-anchor="middle" dominant-baseline="middle" font-style="italic">A</text>')
    parts.append(f'<text x="{bx}" y="{by}" font-size="15" fill="{_COL_B}" '
                 f'text-anchor="middle" dominant-baseline="middle" font-style="italic">B</text>')

    for k in range(k_max + 1):
        point = k * a
        color = _COL_NEITHER
        if k >= 1:
            if membership(pair.a, k):
                color = _COL_A
            elif membership(pair.b, k):
                color = _COL_B
        x, y = _xy(_turns(point), _R)
        lx, ly = _xy(_turns(point), _R_LABEL)
        parts.append(f'<circle cx="{x}" cy="{y}" r="3" fill="{color}"/>')
        parts.append(f'<text x="{lx}" y="{ly}" font-size="11" fill="{color}" '
                     f'text-anchor="middle" dominant-baseline="middle">{k}</text>')

    parts.append(
        f'<text x="10" y="{_SIZE - 10}" font-size="11" fill="black">'
        f'A from B{_esc(pair.a)}; B from B{_esc(pair.b)}; points k*alpha</text>'
    )
    parts.append("</svg>")
    return "\n".join(parts) + "\n"


def _esc(spec) -> str:
    return (
        f"({xr.format_real(spec.alpha)}, {xr.format_real(spec.offset)})"
        .replace("&", "&amp;").replace("<", "&lt;").replace(">", "&gt;")
    )
