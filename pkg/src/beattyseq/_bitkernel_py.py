"""Pure-Python membership-bit kernel.

Same contract as the compiled kernel in ``_bitkernel.pyx``; see
``_kernels.py`` for how one of the two gets selected at import time.

``member_bits(pa, sa, ra, pb, sb, rb, d, n)`` returns ``n`` bits packed
little-endian (bit k-1 of the returned bytes corresponds to k), where bit
k-1 is set iff k belongs to the Beatty sequence with density
alpha = (pa + sa*sqrt(d))/ra and offset alpha' = (pb + sb*sqrt(d))/rb.

The bits come from consecutive differences of the prefix-counting formula
|B ∩ (-inf, j)| = max(0, ceil(j*alpha + alpha') - 1), which needs one exact
integer square root per index.  Requires 0 < alpha <= 1 so that the
difference is always 0 or 1; callers enforce that.
"""

from math import isqrt


def member_bits(pa: int, sa: int, ra: int, pb: int, sb: int, rb: int, d: int, n: int) -> bytes:
    if n < 0:
        raise ValueError("n must be nonnegative")
    if ra <= 0 or rb <= 0:
        raise ValueError("denominators must be positive")
    out = bytearray((n + 7) // 8)
    R = ra * rb
    PA, PB = pa * rb, pb * ra
    SA, SB = sa * rb, sb * ra

    def cnt(P: int, S: int) -> int:
        # max(0, ceil((P + S*sqrt(d))/R) - 1)
        if S == 0:
            c = -((-P) // R)
        else:
            t = isqrt(S * S * d) if S > 0 else -(isqrt(S * S * d) + 1)
            c = (P + t) // R + 1  # value irrational, so ceil = floor + 1
        return c - 1 if c > 0 else 0

    prev = cnt(PA + PB, SA + SB)
    P, S = PA + PB, SA + SB
    for k in range(1, n + 1):
        P += PA
        S += SA
        cur = cnt(P, S)
        if cur != prev:
            out[(k - 1) >> 3] |= 1 << ((k - 1) & 7)
            prev = cur
    return bytes(out)
