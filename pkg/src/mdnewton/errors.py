"""Exception types raised across the package."""


class MDError(Exception):
    """Base class for all package errors."""


class DivisionByZero(MDError, ZeroDivisionError):
    pass


class NegativeOperand(MDError, ValueError):
    pass


class PrecisionMismatch(MDError, ValueError):
    pass


class OrderMismatch(MDError, ValueError):
    pass


class DimensionMismatch(MDError, ValueError):
    pass


class IndexOutOfRange(MDError, IndexError):
    pass


class DuplicateVariable(MDError, ValueError):
    pass


class EmptyMonomial(MDError, ValueError):
    pass


class LastCoefficientZero(MDError, ValueError):
    """The trailing series coefficient vanishes, so no ratio estimate exists."""


class SingularDiagonal(MDError, ArithmeticError):
    def __init__(self, index):
        super().__init__(f"zero diagonal entry at index {index}")
        self.index = index


class MaxIterationsExceeded(MDError, RuntimeError):
    """Newton did not converge; ``result`` holds the best state reached."""

    def __init__(self, result):
        super().__init__(f"no convergence after {result.iterations} iterations")
        self.result = result
