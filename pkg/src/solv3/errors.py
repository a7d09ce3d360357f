"""Exception types shared across the package."""


class DomainError(ValueError):
    """Input outside the domain of an operation (e.g. an invalid triple)."""


class StratumError(RuntimeError):
    """A triple sits too close to incompatible nongeneric strata to classify."""


class NumericalError(ArithmeticError):
    """A numerical procedure failed its own convergence check."""
