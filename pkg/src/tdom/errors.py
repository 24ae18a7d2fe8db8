"""Exception hierarchy shared by every module."""


class TdomError(Exception):
    """Base class for all package errors."""


class InputError(TdomError, ValueError):
    """A caller violated a precondition (bad arguments, malformed files)."""


class ResourceError(TdomError):
    """An exhaustive routine was asked for an instance beyond its size limit."""


class InvariantError(TdomError, AssertionError):
    """A guaranteed postcondition failed. This always indicates a bug."""
