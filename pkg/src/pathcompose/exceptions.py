"""Exception types raised across the package."""


class PathComposeError(Exception):
    """Base class for all errors raised by pathcompose."""


class InputError(PathComposeError, ValueError):
    """Invalid argument: duplicate labels, bad weights, oversized input."""


class DimensionError(InputError):
    """Two matrices (or a matrix and a vertex map) disagree on their labels."""


class LabelError(PathComposeError, KeyError):
    """A vertex label that does not exist in the relevant vertex set."""

    def __str__(self):
        return str(self.args[0]) if self.args else ""


class ParseError(PathComposeError, ValueError):
    """Malformed graph or gluing file."""


class CacheError(PathComposeError):
    """A precompile cache could not be written or read back."""


class CacheVersionError(CacheError):
    """Cache file carries an unsupported ``format_version``."""


class CorruptCacheError(CacheError):
    """Cache file is structurally valid JSON but its matrices are inconsistent."""
