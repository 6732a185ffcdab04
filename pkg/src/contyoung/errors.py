"""Exception hierarchy shared by every module and mapped to CLI exit codes."""


class ContYoungError(Exception):
    """Base class for all package errors."""

    exit_code = 1


class DomainError(ContYoungError, ValueError):
    """An argument lies outside the domain of the operation."""

    exit_code = 3


class ResourceError(ContYoungError, RuntimeError):
    """An enumeration or table request exceeds its resource guard."""

    exit_code = 4


class NumericError(ContYoungError, ArithmeticError):
    """A numerical procedure failed to reach its tolerance."""

    exit_code = 5


class RangeError(NumericError):
    """Input would overflow floating point evaluation."""
