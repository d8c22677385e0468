"""Exception types raised by docmetrics."""
from __future__ import annotations


class DocMetricsError(Exception):
    """Base class for all library errors."""


class ParseError(DocMetricsError, ValueError):
    """Malformed input. ``lineno`` is 1-based, or None when not line-bound."""

    def __init__(self, message: str, lineno: int | None = None):
        self.lineno = lineno
        if lineno is not None:
            message = f"line {lineno}: {message}"
        super().__init__(message)


class ConfigError(DocMetricsError, ValueError):
    """Invalid metric selection, resources, or threshold configuration."""


class RequiresSyntaxError(DocMetricsError, ValueError):
    """A syntactic metric was requested for a document without annotations."""
