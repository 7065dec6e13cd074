"""Exception types raised across the package."""


class SuperluminalInput(ValueError):
    """Velocity at or beyond the speed of light (inside the guard band)."""


class NotLorentz(ValueError):
    """Matrix fails a Lorentz-group membership check."""

    def __init__(self, check, residual):
        self.check = check
        self.residual = residual
        super().__init__(f"{check} violated (residual {residual:.3e})")


class InvalidDimension(ValueError):
    """Fock truncation dimension too small."""


class NonConvergence(RuntimeError):
    """Taylor series in the matrix exponential hit its term cap."""


class IllConditionedProjection(RuntimeError):
    """Gram matrix of the restricted generator basis is near singular."""
