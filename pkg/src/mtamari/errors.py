"""Exception hierarchy shared by all modules."""


class TamariError(Exception):
    """Base class for every error raised by :mod:`mtamari`."""


class PathError(TamariError, ValueError):
    pass


class BadCharacter(PathError):
    pass


class UnbalancedPath(PathError):
    pass


class BelowAxis(PathError):
    pass


class NotMDyck(PathError):
    pass


class EmptyPath(PathError):
    pass


class SizeMismatch(TamariError, ValueError):
    pass


class InvalidLeaf(TamariError, ValueError):
    pass


class ResourceLimit(TamariError, RuntimeError):
    """Raised instead of building a structure past the configured cap."""


class NotALattice(TamariError, AssertionError):
    """A pair without a unique meet or join was found."""


class NonIntegral(TamariError, ArithmeticError):
    """A closed formula that must produce an integer did not."""


class OutOfRange(TamariError, ValueError):
    pass


class DegenerateEvaluation(TamariError, ValueError):
    pass


class NonDivisible(TamariError, ArithmeticError):
    """An exact polynomial division left a remainder."""
