"""Exception hierarchy shared across the package."""


class RydnashError(Exception):
    """Base class for every error raised by this package."""


class InvalidInput(RydnashError):
    """Malformed argument: non-finite coordinate, bad waveform, bad profile."""


class DegenerateLayout(RydnashError):
    """Two atoms coincide, so the pair interaction diverges."""


class UndefinedRadius(RydnashError):
    """Blockade radius is undefined when drive and detuning both vanish."""


class InvalidAgent(RydnashError):
    """Agent index outside the graph's node range."""


class TooLarge(RydnashError):
    """Exhaustive enumeration refused: node count above the configured limit."""

    def __init__(self, n: int, limit: int):
        super().__init__(f"{n} nodes exceeds the exhaustive limit of {limit}")
        self.n = n
        self.limit = limit


class InvalidSet(RydnashError):
    """Node set contains indices outside the graph."""


class NotIndependent(RydnashError):
    """Operation requires an independent set."""


class InvalidState(RydnashError):
    """State vector has the wrong dimension or is not normalized."""


class IntegrationFailure(RydnashError):
    """Time integration did not converge before reaching the step floor."""


class ConstraintViolation(RydnashError):
    """Requested run breaks a hardware limit.

    Carries the offending :class:`~rydnash.geometry.ValidationReport` when
    raised by the pipeline, so callers can persist it.
    """

    def __init__(self, message: str, report=None):
        super().__init__(message)
        self.report = report


class IncompatibleRuns(RydnashError):
    """Attempted to compare results computed on different graphs."""


class ConfigError(RydnashError):
    """Configuration file is missing, malformed, or has unknown fields."""
