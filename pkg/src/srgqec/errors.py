"""Exception types raised across the package."""


class InputError(ValueError):
    """Malformed or out-of-range input."""


class DisconnectedError(ValueError):
    """Graph distance is undefined because the graph is disconnected."""


class NumericalError(RuntimeError):
    """A numerical routine failed to meet its accuracy contract."""


class NotQEClass(Exception):
    """The graph admits no quadratic embedding.

    ``min_eigenvalue`` is the most negative eigenvalue of the centred Gram
    matrix, the witness that it is not positive semidefinite.
    """

    def __init__(self, min_eigenvalue: float, message: str | None = None):
        self.min_eigenvalue = min_eigenvalue
        super().__init__(message or f"not of QE class (Gram matrix eigenvalue {min_eigenvalue:.3e} < 0)")
