"""Exception types shared by every module of the package."""


class BeattyseqError(Exception):
    """Base class for all library-specific failures."""


class PrecisionExhausted(BeattyseqError):
    """An interval-backed value was too wide to certify the requested answer.

    Raised instead of guessing.  The caller may retry with a literal that
    carries more digits; intervals are never refined behind the caller's back.
    """


class IncompatibleSurds(BeattyseqError):
    """Exact arithmetic between quadratic irrationals over different sqrt(d)."""


class DensityOutOfRange(BeattyseqError):
    """An operation required a density inside a range (usually 0 < alpha < 1)."""


class NotRationalDensity(BeattyseqError):
    """Offset normalization was asked for on a non-rational density."""


class IntervalNotSupported(BeattyseqError):
    """The operation is only defined for exact (rational/quadratic) inputs."""


class InsufficientQuotients(BeattyseqError):
    """A truncated or finite continued fraction ran out of partial quotients."""


class RequiresIrrational(BeattyseqError):
    """The operation is only defined for irrational densities."""
