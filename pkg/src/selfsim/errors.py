"""Exception hierarchy shared by every module.

The CLI maps ``InputError`` to exit code 2 and ``ResourceError`` (including
its subclasses) to exit code 3.
"""


class SelfSimError(Exception):
    pass


class InputError(SelfSimError, ValueError):
    """Malformed or out-of-range input."""


class ResourceError(SelfSimError):
    """A configured guard (state bound, memo budget, search budget) was hit."""


class StateExplosionError(ResourceError):
    pass


class SizeError(ResourceError):
    """Enumeration refused because the object is larger than its guard."""
