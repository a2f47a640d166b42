"""Shared exception types."""


class NumericalError(RuntimeError):
    """A numerical routine (quadrature, optimizer) failed to meet its tolerance.

    Carries the best available estimate in ``estimate`` when one exists.
    """

    def __init__(self, message, estimate=None):
        super().__init__(message)
        self.estimate = estimate
