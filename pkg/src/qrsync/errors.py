"""Exception types shared across the package."""


class ConsistencyError(RuntimeError):
    """An internal check that a proven identity holds has failed.

    Raised for theorem violations such as a minimal polynomial with a
    coefficient outside GF(2).  Seeing one means a bug, not bad input.
    """
