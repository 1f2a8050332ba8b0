"""Exception types raised across the package."""


class InvalidArgument(ValueError):
    """A parameter or input object is outside an operation's domain."""


class UnsupportedParameters(ValueError):
    """The parameters violate a construction's hypothesis (e.g. wrong parity)."""


class ResourceExhausted(RuntimeError):
    """A search ran out of its time or node budget before reaching a verdict."""
