# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled membership-bit kernel.

Contract identical to ``_bitkernel_py.member_bits``: n little-endian-packed
membership bits for the Beatty sequence with density (pa+sa*sqrt(d))/ra and
offset (pb+sb*sqrt(d))/rb, derived from differences of the prefix-counting
formula max(0, ceil(j*alpha+alpha') - 1).

All inner arithmetic runs in 128-bit integers.  Inputs whose intermediate
values could overflow raise OverflowError up front; the dispatcher in
``_kernels.py`` then falls back to the pure-Python kernel.
"""

from libc.math cimport sqrtl

cdef extern from *:
    ctypedef long long i128 "__int128"
    ctypedef unsigned long long u128 "unsigned __int128"

_LIMIT = 1 << 126


cdef inline unsigned long long _isqrt_u128(u128 x) noexcept:
    cdef long double xf = <long double> x
    cdef unsigned long long r = <unsigned long long> sqrtl(xf)
    while r > 0 and (<u128> r) * r > x:
        r -= 1
    while (<u128> (r + 1)) * (r + 1) <= x:
        r += 1
    return r


cdef inline i128 _floordiv(i128 a, i128 b) noexcept:
    # b > 0; C division truncates toward zero
    cdef i128 q = a / b
    if a % b != 0 and a < 0:
        q -= 1
    return q


cdef inline i128 _cnt(i128 P, i128 S, i128 R, i128 d) noexcept:
    cdef i128 c, t
    cdef u128 sq
    if S == 0:
        c = _floordiv(P + R - 1, R)
    else:
        if S > 0:
            sq = (<u128> S) * (<u128> S) * (<u128> d)
            t = <i128> _isqrt_u128(sq)
        else:
            sq = (<u128> (-S)) * (<u128> (-S)) * (<u128> d)
            t = -(<i128> _isqrt_u128(sq)) - 1
        c = _floordiv(P + t, R) + 1
    return c - 1 if c > 0 else 0


def member_bits(pa, sa, ra, pb, sb, rb, d, n):
    if n < 0:
        raise ValueError("n must be nonnegative")
    if ra <= 0 or rb <= 0:
        raise ValueError("denominators must be positive")
    # range guards, evaluated with Python integers
    max_s = abs(sa * rb) * (n + 1) + abs(sb * ra)
    max_p = abs(pa * rb) * (n + 1) + abs(pb * ra)
    if max_s * max_s * d >= _LIMIT or max_p + max_s * (d + 1) + ra * rb >= _LIMIT:
        raise OverflowError("inputs exceed the 128-bit kernel range")

    out = bytearray((n + 7) // 8)
    cdef unsigned char[::1] buf = out
    cdef i128 PA = <i128> (pa * rb)
    cdef i128 PB = <i128> (pb * ra)
    cdef i128 SA = <i128> (sa * rb)
    cdef i128 SB = <i128> (sb * ra)
    cdef i128 R = <i128> (ra * rb)
    cdef i128 dd = <i128> d
    cdef i128 P = PA + PB
    cdef i128 S = SA + SB
    cdef i128 prev = _cnt(P, S, R, dd)
    cdef i128 cur
    cdef long long k, nn = n
    for k in range(1, nn + 1):
        P += PA
        S += SA
        cur = _cnt(P, S, R, dd)
        if cur != prev:
            buf[(k - 1) >> 3] |= 1 << ((k - 1) & 7)
            prev = cur
    return bytes(out)
