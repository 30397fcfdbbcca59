class InvalidSolution(ValueError):
    """Raised when values cannot form a grid-valid solution vector."""

    pass


class LatticeMapError(ValueError):
    """Raised for ragged, malformed or out-of-range half-lattice maps."""

    pass
