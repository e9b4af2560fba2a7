"""Exception hierarchy shared by every module of the package."""


class SubtopeError(Exception):
    """Base class for all errors raised by this package."""


class DomainError(SubtopeError, ValueError):
    """An argument lies outside the domain of the operation."""


class NotAdjacentError(DomainError):
    """Two topes are not at Hamming distance 1."""


class NotACycleError(DomainError):
    """A vertex sequence is not a cycle of the hypercube graph."""


class NotSymmetricError(NotACycleError):
    """A cycle violates antipodal symmetry ``D[k + t] == -D[k]``."""


class NotATopeError(DomainError):
    """Coordinates recovered for a tope are not ternary with odd support."""


class SingularError(SubtopeError, ArithmeticError):
    """A matrix required to be invertible is singular (typically odd ``t``)."""


class OracleContradictionError(SubtopeError, RuntimeError):
    """Brute-force enumeration found zero or several solutions."""
