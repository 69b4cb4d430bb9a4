"""Exception hierarchy."""


class ExtremeZerosError(Exception):
    """Base class for all errors raised by this package."""


class ParameterDomainError(ExtremeZerosError, ValueError):
    """A family parameter or degree lies outside its valid domain."""


class DegenerateNormalizationError(ExtremeZerosError, ValueError):
    """The standard normalization makes the polynomial vanish identically."""


class DegenerateQuadraticError(ExtremeZerosError, ValueError):
    pass


class NoRealRootsError(ExtremeZerosError, ValueError):
    pass


class ConvergenceError(ExtremeZerosError, RuntimeError):
    """Bisection did not shrink a bracket below tolerance within budget."""

    def __init__(self, message, bracket):
        super().__init__(message)
        self.bracket = bracket
