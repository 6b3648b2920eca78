"""Exception types raised across the package."""


class AslabError(Exception):
    """Base class for all package errors."""


class ConfigurationError(AslabError, ValueError):
    """Invalid grid, solver or run configuration."""


class QuotientFloorError(AslabError):
    """A pointwise quotient denominator fell below its floor.

    Carries the offending node index and denominator value.
    """

    def __init__(self, node: int, value: float, floor: float):
        self.node = int(node)
        self.value = float(value)
        self.floor = float(floor)
        super().__init__(
            f"denominator {value:.3e} below floor {floor:.3e} at node {node}"
        )


class NoSolitaryWaveError(AslabError, ValueError):
    """Requested wave speed admits no solitary wave (|C| must exceed 1)."""


class NewtonConvergenceError(AslabError):
    """Newton iteration failed to reach its residual tolerance."""

    def __init__(self, message: str, residual_norm: float, iterations: int):
        self.residual_norm = float(residual_norm)
        self.iterations = int(iterations)
        super().__init__(message)


class LinearSolveError(AslabError):
    """Inner Krylov solve stagnated or hit its iteration cap."""


class InvalidStateError(AslabError, ValueError):
    """Evolution state contains non-finite values on input."""


class BlowUpError(AslabError):
    """Non-finite values appeared during time stepping.

    Carries the RK4 stage (1-4) and the time at which the step started.
    """

    def __init__(self, stage: int, t: float):
        self.stage = int(stage)
        self.t = float(t)
        super().__init__(f"non-finite values in RK4 stage {stage} at t={t:.6g}")


class FitError(AslabError):
    """Spectral decay regression failed (degenerate window)."""


class WindowUnderflowError(FitError):
    """A coefficient inside the fit window vanished."""


class UnknownPresetError(AslabError, KeyError):
    """Preset name not found in the catalog."""
