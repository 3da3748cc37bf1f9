"""Exception types shared across the package."""


class RegimeError(ValueError):
    """Parameter regime in which a requested computation is ill-defined or unstable."""


class SingularTwist(RegimeError):
    """Twist value sitting on a pole of a twisted trace."""


class DivergentSeries(ArithmeticError):
    """Series argument outside the convergence disk, or the iteration cap was hit."""


class PoleCollision(ValueError):
    """Spectral points collide with a zero of a weight-function denominator."""


class NoConvergence(RuntimeError):
    """Iterative solver failed to reach the requested residual."""


class RepMismatch(TypeError):
    """Operator requested over an incompatible representation family."""


class BudgetExceeded(ValueError):
    """Requested brute-force enumeration exceeds the configured budget."""
