"""Exception types shared across the package."""


class GBentError(Exception):
    """Base class for all errors raised by gbent."""


class InvalidInputError(GBentError, ValueError):
    """Malformed input: wrong length, bad digit, non power-of-two size."""


class DomainError(GBentError, ValueError):
    """Input is well formed but outside the domain of the operation."""


class UnsupportedError(GBentError):
    """Parameters beyond the scale this package handles."""


class DimensionMismatch(DomainError):
    pass


class PropertyViolation(DomainError):
    """A structural precondition (bentness, Hadamard property) failed."""

    label = "PropertyViolation"

    def __init__(self, where: int, message: str = ""):
        self.where = where
        super().__init__(message or f"{self.label}({where})")

    def __str__(self) -> str:
        return f"{self.label}({self.where})"


class NonBentComponent(PropertyViolation):
    label = "NonBentComponent"

    @property
    def index(self) -> int:
        return self.where


class HadamardViolation(PropertyViolation):
    label = "HadamardViolation"

    @property
    def point(self) -> int:
        return self.where


class DualHadamardViolation(HadamardViolation):
    label = "DualHadamardViolation"
