"""Exception types shared across the package."""

from __future__ import annotations


class CatalysisError(Exception):
    """Base class for every error this package raises on purpose."""


class DomainError(CatalysisError, ValueError):
    """A numeric argument lies outside its documented domain."""


class EmptyInput(CatalysisError, ValueError):
    """A spectrum was built from an empty sequence."""


class NotNormalized(CatalysisError, ValueError):
    """Spectrum weights deviate from unit sum by more than the tolerance."""


class NegativeEntry(CatalysisError, ValueError):
    """A spectrum weight is negative."""


class DeterministicRegime(CatalysisError, ValueError):
    """Search requested where the conversion already succeeds with certainty."""


class OddCopies(CatalysisError, ValueError):
    """Pairwise planning needs an even number of copies."""


class BadArity(CatalysisError, ValueError):
    """Requested group count is impossible for the given number of copies."""
