"""Exception types shared across the package.

Every error raised by the library derives from GhSimplexError so callers can
catch one base type. The CLI maps subfamilies onto process exit codes.
"""

from __future__ import annotations


class GhSimplexError(Exception):
    """Base class for all errors raised by this package."""


class MetricValidationError(GhSimplexError):
    """A candidate distance matrix failed one of the metric axioms."""


class NonZeroDiagonalError(MetricValidationError):
    pass


class AsymmetricMatrixError(MetricValidationError):
    pass


class NegativeDistanceError(MetricValidationError):
    pass


class ZeroOffDiagonalError(MetricValidationError):
    """Two distinct points at distance zero (points must be separated)."""


class NonFiniteEntryError(MetricValidationError):
    """NaN or infinite entry in a distance matrix."""


class TriangleViolationError(MetricValidationError):
    """Triangle inequality failure; carries the violating index triple."""

    def __init__(self, i: int, j: int, k: int, d_ik: float, d_ij: float, d_jk: float):
        self.triple = (i, j, k)
        self.d_ik = d_ik
        self.d_ij = d_ij
        self.d_jk = d_jk
        super().__init__(
            f"triangle inequality violated at (i={i}, j={j}, k={k}): "
            f"d[{i}][{k}] = {d_ik} > {d_ij} + {d_jk} = d[{i}][{j}] + d[{j}][{k}]"
        )


class NonPositiveScaleError(GhSimplexError):
    """Scale factors and simplex side lengths must be strictly positive."""


class ZeroPointsError(GhSimplexError):
    """A metric space needs at least one point."""


class EmptySetError(GhSimplexError):
    """Point sets used in set-distance computations must be non-empty."""


class EmptyRelationError(GhSimplexError):
    """Distortion is undefined for an empty relation."""


class BadCardinalityError(GhSimplexError):
    """Block count m out of range for the operation at hand."""


class NonPositiveLambdaError(GhSimplexError):
    """Simplex side length must be strictly positive."""


class SizeThresholdExceededError(GhSimplexError):
    """Correspondence enumeration would exceed the configured cap."""


class EnumerationTooLargeError(GhSimplexError):
    """Partition enumeration would exceed the configured cap."""


class InvalidCharacteristicsError(GhSimplexError):
    """Characteristics record violates its internal ordering invariants."""


class BadParamsError(GhSimplexError):
    """Bad parameter combination for a generator or preset."""


class ParseError(GhSimplexError):
    """Malformed input file (CSV or JSON)."""
