"""Exception hierarchy shared by the library and the command line."""


class DProjError(Exception):
    """Base class for all errors raised by :mod:`dproj`."""


class InvalidInputError(DProjError, ValueError):
    """Malformed or inconsistent input data."""


class PreconditionError(DProjError, ValueError):
    """An operation was called outside its domain (e.g. a non-effective grading)."""


class DomainError(DProjError, ValueError):
    """The input is well formed but the requested object does not exist."""


class ResourceLimitError(DProjError, RuntimeError):
    """A search exceeded its step budget; nothing was silently truncated."""
