# core/errors.py


class QuotNefError(Exception):
    """Base class for every error raised by the nef-cone toolkit."""


class DimensionMismatchError(QuotNefError, ValueError):
    pass


class UnsupportedDimensionError(QuotNefError):
    pass


class ZeroGeneratorError(QuotNefError, ValueError):
    pass


class InvalidParamsError(QuotNefError, ValueError):
    pass


class InvalidBasisError(QuotNefError):
    """Basis tag not valid for the given curve parameters (e.g. ALPHA_L0 without t)."""


class InvalidCurveError(QuotNefError):
    """Curve class requested outside the hypotheses of its construction."""


class NoUpperBoundError(QuotNefError):
    pass


class HypothesisError(QuotNefError):
    """A theorem-database row was requested but its hypotheses are not met."""


class ConfigError(QuotNefError):
    pass


class ClassParseError(QuotNefError, ValueError):
    pass
