"""Exception hierarchy shared by the library and the CLI"""


class QPrimeError(Exception):
    """Base class for every error raised by this package"""


class DomainError(QPrimeError, ValueError):
    """An argument lies outside the domain of an operation"""


class EvaluationError(QPrimeError, ZeroDivisionError):
    """Division by zero or evaluation at a root of a denominator"""


class ResourceGuardExceeded(QPrimeError):
    """An enumeration grew past its configured cap"""

    def __init__(self, message: str, size: int, limit: int):
        super().__init__(message)
        self.size = size
        self.limit = limit

    def __reduce__(self):
        return (self.__class__, (str(self), self.size, self.limit))


class DegreeGuardExceeded(QPrimeError):
    """
    Groebner completion reached a degree above the guard.

    Carries the partial state so callers can report how far it got.
    """

    def __init__(self, message: str, degree: int, guard: int, partial=(), pair_count: int = 0):
        super().__init__(message)
        self.degree = degree
        self.guard = guard
        self.partial = tuple(partial)
        self.pair_count = pair_count

    def __reduce__(self):
        # partial elements cross process boundaries in rendered form
        return (
            self.__class__,
            (str(self), self.degree, self.guard, tuple(str(g) for g in self.partial), self.pair_count),
        )


class TruncatedBasisError(QPrimeError):
    """A computation needs a complete basis but got a truncated one"""
