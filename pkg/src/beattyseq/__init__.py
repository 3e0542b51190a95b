"""Exact arithmetic for Beatty sequence tilings and Sturmian word structure.

Submodules:

* ``exactreal``  -- rational / quadratic-irrational / interval number tower,
  floors, comparisons, and circle arcs
* ``beatty``     -- Beatty sequence terms, membership, counting
* ``fraenkel``   -- the five tiling conditions and brute-force window oracles
* ``contfrac``   -- continued fractions, continuants, greedy digit expansions
* ``sturmian``   -- characteristic words and their prefix decompositions
* ``cli``        -- command-line front end (``beattyseq`` entry point)
"""

from . import beatty, contfrac, exactreal, fraenkel, sturmian  # noqa: F401
from ._kernels import HAVE_COMPILED, active_kernel  # noqa: F401
from .errors import (  # noqa: F401
    BeattyseqError,
    DensityOutOfRange,
    IncompatibleSurds,
    InsufficientQuotients,
    IntervalNotSupported,
    NotRationalDensity,
    PrecisionExhausted,
    RequiresIrrational,
)

__version__ = "0.1.0"
