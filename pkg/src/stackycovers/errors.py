"""Exception hierarchy shared by every module."""


class StackyCoversError(Exception):
    """Base class for all errors raised by this package."""


class DomainError(StackyCoversError, ValueError):
    """Parameters lie outside the range where a classifier is defined."""


class HypothesisError(StackyCoversError, ValueError):
    """A standing hypothesis of a classification result does not hold."""


class MembershipError(StackyCoversError, ValueError):
    """A vector is not an integer combination of a lattice basis."""


class EmptySystem(StackyCoversError, ValueError):
    """A congruence system with no constraints was supplied."""


class InjectivityFailure(StackyCoversError, ArithmeticError):
    """A character map that must be injective turned out not to be."""


class CapExceeded(StackyCoversError, RuntimeError):
    """An enumeration would exceed its configured cap."""
