# -*- coding: utf-8 -*-
"""Error Classes.

Errors are split in two families. Validation errors describe bad input
(configuration, schedules, files) and map to exit code 1 on the command
line. Numerical errors describe a computation that could not be completed
and map to exit code 2; each carries a diagnostics record.

"""

# Standard Library Imports
from typing import Any
from typing import Dict
from typing import Optional

__all__ = [
    "BaseError",
    "ValidationError",
    "ConfigError",
    "UnknownKeyError",
    "MissingFileError",
    "ScheduleError",
    "NumericalError",
    "StepSizeUnderflow",
    "NonFinite",
    "NearPureState",
    "NotPositiveDefinite",
    "TooFewSamples",
    "TruncationLeak",
    "NonFiniteLoss",
    "NotConverged",
]


class BaseError(Exception):
    """Base class for errors."""


class ValidationError(BaseError):
    """Base class for errors caused by invalid input."""


class ConfigError(ValidationError):
    """Raised when a configuration value is invalid."""


class UnknownKeyError(ConfigError):
    """Raised when a configuration key is not part of the schema.

    Args:
        key: Offending key.

    """

    def __init__(self, key: str) -> None:
        self.key = key
        super().__init__(f"unknown configuration key '{key!s}'")


class MissingFileError(ValidationError):
    """Raised when an input file does not exist.

    Args:
        path: Path to missing file.

    """

    def __init__(self, path: Any) -> None:
        self.path = path
        super().__init__(f"file not found: {path!s}")


class ScheduleError(ValidationError):
    """Raised when a detuning schedule is malformed."""


class NumericalError(BaseError):
    """Base class for numerical failures.

    Args:
        message: Error message.
        diagnostics (optional): Diagnostics record. Default ``None``.

    """

    def __init__(
        self, message: str, diagnostics: Optional[Dict[str, Any]] = None
    ) -> None:
        super().__init__(message)
        self.diagnostics = dict(diagnostics or {})
        self.diagnostics.setdefault("error", type(self).__name__)
        self.diagnostics.setdefault("message", message)


class StepSizeUnderflow(NumericalError):
    """Raised when the adaptive integrator step collapses."""


class NonFinite(NumericalError):
    """Raised when a state entry becomes NaN or infinite."""


class NearPureState(NumericalError):
    """Raised when the mixed-state Fisher information matrix is singular."""


class NotPositiveDefinite(NumericalError):
    """Raised when a covariance matrix fails Cholesky factorization."""


class TooFewSamples(NumericalError):
    """Raised when a band average is requested with fewer than two samples."""


class TruncationLeak(NumericalError):
    """Raised when population reaches the top Fock level."""


class NonFiniteLoss(NumericalError):
    """Raised when a policy update produces a non-finite loss."""


class NotConverged(NumericalError):
    """Raised when a steady state is not reached within the horizon cap."""
