"""Exception hierarchy.  Every domain error derives from :class:`QuiverError`."""


class QuiverError(Exception):
    """Base class for domain errors (CLI exit status 1)."""


class CyclicQuiver(QuiverError):
    pass


class InvalidRelation(QuiverError):
    pass


class ShapeMismatch(QuiverError):
    pass


class UnsupportedStrategy(QuiverError):
    pass


class NotMultipleOfIsotropicRoot(QuiverError):
    pass


class DecompositionFailure(QuiverError):
    pass


class PdimTooLarge(QuiverError):
    pass


class NonSquare(QuiverError):
    pass


class WeightMismatch(QuiverError):
    pass


class NoDimensionVector(QuiverError):
    pass


class TooLarge(QuiverError):
    pass


class BadWeights(QuiverError):
    pass


class BadParameters(QuiverError):
    pass


class VerificationFailed(QuiverError):
    pass


class ExceptionalPoint(QuiverError):
    pass


class FormatError(QuiverError):
    """Malformed algebra or module text file."""
