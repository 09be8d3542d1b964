"""Exception hierarchy shared across the package.

The CLI maps these onto distinct exit codes, so keep the split stable:
bad user input / out-of-domain arguments vs. exceeded resource limits.
"""


class StringPrimeError(Exception):
    """Base class for all package errors."""


class InvalidInputError(StringPrimeError, ValueError):
    """Malformed input, e.g. a pattern with non-digit characters."""


class DomainError(StringPrimeError, ValueError):
    """Argument outside the mathematical domain of an operation."""


class ResourceLimitError(StringPrimeError, RuntimeError):
    """Request exceeds a configured ceiling (sieve range, etc.)."""


class CountOverflowError(StringPrimeError, OverflowError):
    """Exact count exceeds the supported 128-bit range."""
