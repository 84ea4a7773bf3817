"""Exception hierarchy shared by every module of the package."""


class GentrigError(Exception):
    """Base class for all errors raised by gentrig."""


class ParameterError(GentrigError, ValueError):
    """Series parameters are inadmissible (e.g. c a nonpositive integer)."""


class DomainError(GentrigError, ValueError):
    """An argument lies outside the domain of the requested function."""


class DivergenceError(GentrigError, ArithmeticError):
    """The requested quantity is infinite (e.g. 2F1 at z=1 with c-a-b <= 0)."""


class ConvergenceError(GentrigError, ArithmeticError):
    """An iterative procedure hit its iteration or subdivision cap."""


class RangeError(GentrigError, OverflowError):
    """A finite input produced a non-finite result."""
