"""Exception types shared across the package."""


class NBLabError(Exception):
    """Base class for package-specific errors."""


class DomainError(NBLabError, ValueError):
    """Input lies outside the documented domain of an operation."""


class PoleError(DomainError):
    """Evaluation requested at (or within guard distance of) a pole."""


class UnstablePointError(DomainError):
    """Evaluation refused near a point where the algorithm loses accuracy."""


class CapacityError(NBLabError, OverflowError):
    """An integer result would not fit the 64-bit fields used on disk."""


class UnsupportedWeightError(NBLabError, ValueError):
    """The requested operation is only available for the default weight."""


class CacheError(NBLabError, IOError):
    """A Gram cache file is unreadable: bad magic, version, or checksum."""


class ConditioningError(NBLabError, ArithmeticError):
    """Gram system too ill-conditioned even after the ridge ladder."""

    def __init__(self, message: str, cond_estimate: float = float("inf")):
        super().__init__(message)
        self.cond_estimate = cond_estimate
