"""Exception types shared across the package.

Everything raised deliberately by this package derives from
:class:`NcfourierError`, so callers (in particular the CLI) can separate
"the input or request was bad" from genuine bugs.
"""

__all__ = [
    "NcfourierError",
    "ShapeMismatchError",
    "ParameterError",
    "GroupDataError",
    "ConfigError",
    "NumericsError",
]


class NcfourierError(Exception):
    """Base class for errors raised by this package."""


class ShapeMismatchError(NcfourierError, ValueError):
    """Operands live on different algebras or have inconsistent shapes."""


class ParameterError(NcfourierError, ValueError):
    """A numeric parameter violates a documented precondition."""


class GroupDataError(NcfourierError, ValueError):
    """A group data file or table violates a structural invariant."""


class ConfigError(NcfourierError, ValueError):
    """A campaign configuration is malformed or inconsistent."""


class NumericsError(NcfourierError, RuntimeError):
    """A dense linear-algebra routine failed to converge."""
