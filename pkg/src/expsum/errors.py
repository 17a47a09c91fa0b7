"""Exception hierarchy shared across the package."""


class ExpsumError(Exception):
    """Base class for all errors raised by this package."""


class IncommensurableFrequencies(ExpsumError):
    """Two frequencies have no rational ratio, so no common period exists."""


class NotAlmostPeriodic(ExpsumError):
    """The unbounded frequencies are incommensurable: the translation module
    is {0} and no periodic/bounded splitting exists."""


class AlreadyBounded(ExpsumError):
    """The sum has no unbounded part; splitting it is the trivial f = 0 + f
    and is rejected so that caller mistakes surface early."""


class InvalidTau(ExpsumError):
    """The requested translation is not a positive element of the
    translation module."""


class ConstantFunction(ExpsumError):
    """A constant sum has no fundamental period."""


class NonFiniteEvaluation(ExpsumError):
    """An evaluator produced a non-finite value during quadrature."""

    def __init__(self, t: float, message: str | None = None):
        self.t = t
        super().__init__(message or f"evaluator returned a non-finite value at t = {t!r}")


class SpecError(ExpsumError):
    """An input document failed to parse or validate."""

    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        self.line = line
        self.column = column
        if line is not None:
            message = f"line {line}, column {column}: {message}"
        super().__init__(message)
