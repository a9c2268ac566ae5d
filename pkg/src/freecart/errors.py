"""Exception types shared across the library."""


class FreecartError(Exception):
    """Base class for every error raised by this library."""


class TypeMismatch(FreecartError):
    """An arrow term fails to typecheck.

    Carries the path (child-index tuple) of the offending subterm.
    """

    def __init__(self, message, path=()):
        super().__init__(message)
        self.path = tuple(path)


class ModeViolation(FreecartError):
    """The terminal object or its arrow is used in binary-products mode."""

    def __init__(self, message, path=()):
        super().__init__(message)
        self.path = tuple(path)


class PositionOutOfRange(FreecartError):
    """A 1-based letter position falls outside an object's letter count."""


class ArityMismatch(FreecartError):
    """Graph operands do not have matching letter counts."""


class InvalidRedex(FreecartError):
    """A reduction step was requested at an address that is not a redex."""


class IncompatibleGraph(FreecartError):
    """A graph does not fit the given domain and codomain objects."""


class Unrealizable(FreecartError):
    """No term with the requested type exists in binary-products mode."""


class AlreadyEqual(FreecartError):
    """A collapse witness was requested for a pair of equal arrows."""


class InternalError(FreecartError):
    """An internal soundness check failed; this indicates a bug."""
