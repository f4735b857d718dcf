"""Exception types raised across the package."""


class QWeightError(ValueError):
    """Base class for all parameter and domain errors."""

    reason = "invalid"

    def __init__(self, message, reason=None):
        super().__init__(message)
        if reason is not None:
            self.reason = reason


class InvalidFamilyError(QWeightError):
    """(n, d) does not describe a superelliptic family of genus >= 2.

    ``reason`` is one of ``"n_below_2"``, ``"degree_not_above_n"``,
    ``"genus_below_2"``.
    """


class InvalidParameterError(QWeightError):
    reason = "invalid_parameter"


class InfiniteGapSetError(QWeightError):
    """The generators share a common factor, so infinitely many gaps exist."""

    reason = "infinite_gap_set"


class UnsupportedQueryError(QWeightError):
    """The quantity is not determined by (n, d, q) alone."""

    reason = "unsupported"


class HypothesisError(QWeightError):
    """A corollary formula was requested where its congruence fails."""

    reason = "hypothesis_failed"


class IntegralityError(ArithmeticError):
    """A closed form that must be an integer came out fractional."""
