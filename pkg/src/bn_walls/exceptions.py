"""Error types shared by the computation modules and the CLI."""


class InvalidInputError(ValueError):
    """A precondition of an operation does not hold for the given arguments."""


class BoundaryPolarizationError(InvalidInputError):
    """A polarization required to be ample lies on the boundary of the ample cone."""


class ConsistencyError(RuntimeError):
    """An identity that must hold by construction was violated.

    Signals a bug in a formula rather than bad input; the CLI exits with code 2.
    """
