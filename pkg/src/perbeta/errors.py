"""Exception hierarchy. Everything raised on purpose derives from PerBetaError."""


class PerBetaError(Exception):
    pass


class DegenerateInput(PerBetaError, ValueError):
    pass


class PreconditionViolated(PerBetaError, ValueError):
    pass


class InexactDivision(PerBetaError, ArithmeticError):
    pass


class ZeroInversion(PerBetaError, ZeroDivisionError):
    pass


class NonInvertible(PerBetaError, ArithmeticError):
    """The element shares a factor with the minimal polynomial (so it is reducible)."""


class CertificateError(PerBetaError, AssertionError):
    """x^i - x^j - n p(x) = r(x) m(x) failed to hold exactly."""


class SearchBudgetExceeded(PerBetaError):
    def __init__(self, message: str, suggestion: str = "retry with method='graph'"):
        super().__init__(f"{message} ({suggestion})")
        self.suggestion = suggestion


class NoPath(PerBetaError):
    def __init__(self, message: str, states_explored: int):
        super().__init__(f"{message}; exhausted {states_explored} states")
        self.states_explored = states_explored


class InvalidPath(PerBetaError, ValueError):
    pass


class SizeBudgetExceeded(PerBetaError):
    pass


class DensityViolated(PerBetaError, ValueError):
    pass


class ValidationFailed(PerBetaError):
    pass


class BudgetTooSmall(PerBetaError, ValueError):
    pass
