"""Exception hierarchy shared across the package."""


class SimulationError(Exception):
    """Base class for all package errors."""


class ConfigError(SimulationError):
    """Invalid configuration document or CLI arguments (exit code 2)."""

    def __init__(self, message, path=None, line=None):
        self.path = path
        self.line = line
        loc = ""
        if path:
            loc += f" at '{path}'"
        if line is not None:
            loc += f" (line {line})"
        super().__init__(f"{message}{loc}")


class NumericalError(SimulationError):
    """Runtime numerical failure (exit code 3)."""


class NearDefectiveMatrixError(NumericalError):
    """Eigenvector matrix too ill-conditioned to trust modal analysis."""

    def __init__(self, condition_estimate, threshold):
        self.condition_estimate = condition_estimate
        self.threshold = threshold
        super().__init__(
            f"eigenvector matrix condition estimate {condition_estimate:.3e} exceeds "
            f"{threshold:.1e}; matrix is near-defective. Jittering atom positions "
            "usually lifts the near-degeneracy."
        )


class ChannelExtinctError(NumericalError):
    """A decay channel carries too little flux for rate ratios to be defined."""


class HorizonError(NumericalError):
    """Emission trace does not extend far enough for the requested integral."""


class CloudTooDenseError(NumericalError):
    """Minimum-separation resampling exhausted its retry budget."""


class FitError(NumericalError):
    """Nonlinear fit failed; carries the best iterate found."""

    def __init__(self, message, best=None):
        self.best = best
        super().__init__(message)
