"""Kernel selection: compiled extension when available, pure Python otherwise.

The compiled kernel (``_bitkernel``, built from ``_bitkernel.pyx``) covers
inputs whose intermediates fit in 128 bits and raises OverflowError past
that; the dispatcher silently retries with the pure kernel, which has no
range limit.  Set ``BEATTYSEQ_PURE=1`` to force the pure path (used by the
benchmark and for debugging).
"""

import os

from . import _bitkernel_py

try:
    from . import _bitkernel  # compiled extension
except ImportError:  # pragma: no cover - depends on how the package was built
    _bitkernel = None

HAVE_COMPILED = _bitkernel is not None
_FORCE_PURE = os.environ.get("BEATTYSEQ_PURE", "") not in ("", "0")


def member_bits(pa: int, sa: int, ra: int, pb: int, sb: int, rb: int, d: int, n: int) -> bytes:
    if _bitkernel is not None and not _FORCE_PURE:
        try:
            return _bitkernel.member_bits(pa, sa, ra, pb, sb, rb, d, n)
        except OverflowError:
            pass
    return _bitkernel_py.member_bits(pa, sa, ra, pb, sb, rb, d, n)


def active_kernel() -> str:
    return "compiled" if (HAVE_COMPILED and not _FORCE_PURE) else "pure-python"
