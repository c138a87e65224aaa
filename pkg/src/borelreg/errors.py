"""Exception hierarchy shared by every module of the package."""


class BorelRegError(Exception):
    """Base class for all errors raised by borelreg."""


class RingMismatchError(BorelRegError, ValueError):
    """Two objects live in polynomial rings with different numbers of variables."""


class DomainError(BorelRegError, ValueError):
    """An operation was applied outside the domain where it is defined."""


class ZeroIdealError(DomainError):
    pass


class UnitIdealError(DomainError):
    pass


class UnitMonomialError(DomainError):
    pass


class IndexOutOfRangeError(DomainError, IndexError):
    pass


class NotAChainError(DomainError):
    """The associated primes are not totally ordered by inclusion."""


class BudgetExceededError(BorelRegError):
    """The Betti oracle would need more multidegree cells than allowed."""

    def __init__(self, cells, budget):
        self.cells = cells
        self.budget = budget
        super().__init__(
            f"multidegree lattice has {cells} cells, budget is {budget}")


class ParseError(BorelRegError, ValueError):
    def __init__(self, message, line, column):
        self.line = line
        self.column = column
        super().__init__(f"line {line}, column {column}: {message}")
