"""Exception types shared across the package."""


class NumericalError(RuntimeError):
    """Raised when a numerical procedure fails in a way that signals bad
    input or an internal defect: an indefinite mass matrix, an eigensolve
    that does not converge, squared frequencies more negative than
    round-off can explain, or a mode that mixes decoupled blocks.
    """
