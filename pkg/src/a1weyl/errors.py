"""Shared exception types for the library and its CLI."""


class A1WeylError(Exception):
    """Base class for every error raised by this package."""


class ConfigError(A1WeylError):
    """A semilattice configuration is malformed."""


class WordParseError(A1WeylError):
    """A word in the shared text format could not be parsed."""


class DomainError(A1WeylError):
    """An input lies outside the mathematical domain of the operation."""


class InternalCheckError(A1WeylError):
    """A cross-check that should be impossible to violate has failed."""
