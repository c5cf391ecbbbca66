"""Exception types shared across the package."""

from __future__ import annotations


class CyclePrefixError(Exception):
    """Base class for all errors raised by this package."""


class ParameterError(CyclePrefixError, ValueError):
    """Network parameters are invalid or outside an operation's supported range."""


class VertexError(CyclePrefixError, ValueError):
    """A vertex or symbol is malformed for the given network parameters."""


class SameVertexError(CyclePrefixError, ValueError):
    """The operation is undefined when source and destination coincide."""


class DomainError(CyclePrefixError, ValueError):
    """An input lies outside the operation's domain (e.g. a pairing query for
    the one neighbor that is excluded from the pairing)."""


class UndefinedStatisticError(CyclePrefixError, ValueError):
    """A vertex statistic is undefined for this vertex (no qualifying symbol)."""


class InstanceTooLargeError(CyclePrefixError, RuntimeError):
    """The instance exceeds the configured vertex cap for exhaustive work."""
