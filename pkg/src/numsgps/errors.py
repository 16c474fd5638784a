"""Exception types shared across the package."""


class NumsgpsError(Exception):
    """Base class for all package-specific errors."""


class GcdNotOne(NumsgpsError):
    """Generators have gcd > 1, so the complement would be infinite."""


class NotCoprime(NumsgpsError):
    """A two-generator closed form was asked for non-coprime inputs."""


class Overflow(NumsgpsError):
    """A derived quantity exceeds the 64-bit working range."""


class BoundTooLarge(NumsgpsError):
    """A scan would exceed the configured element budget."""


class NotMember(NumsgpsError):
    """The queried integer is not an element of the semigroup."""

    def __init__(self, message, element=None):
        super().__init__(message)
        self.element = element


class ZeroElement(NumsgpsError):
    """The invariant is undefined for the element 0."""


class NotThreeGenerated(NumsgpsError):
    """The operation requires embedding dimension exactly 3."""


class InsufficientData(NumsgpsError):
    """Too little of the sequence is available to judge periodicity."""


class NoRepresentation(NumsgpsError):
    """No canonical representation with non-negative coefficients exists."""


class InvalidFamilyParams(NumsgpsError):
    """Family parameters violate the preconditions of the construction."""


class InvalidParams(NumsgpsError):
    """Random-model parameters are out of range."""
