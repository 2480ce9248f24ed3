"""Exception types shared across the package."""


class DomainError(ValueError):
    """An argument lies outside the domain of the requested function."""


class ConvergenceError(ArithmeticError):
    """A series or iteration failed to reach its tolerance within budget."""


class FitError(RuntimeError):
    """A numerical power-law fit did not describe the data."""


class RootError(RuntimeError):
    """A root bracket could not be established."""
