"""Exception types shared across the package."""


class SwimlabError(Exception):
    """Base class for all package-specific errors."""


class OutOfTankError(SwimlabError, ValueError):
    """A position lies outside the tank beyond the allowed tolerance."""


class UndefinedAngleError(SwimlabError, ValueError):
    """An angular quantity is undefined (zero velocity, coincident points, ...)."""


class DimensionMismatchError(SwimlabError, ValueError):
    """Network input or parameter dimensions do not compose."""


class NumericError(SwimlabError, ArithmeticError):
    """A numeric computation produced non-finite values."""


class WeightFormatError(SwimlabError, ValueError):
    """A weight file is corrupt, truncated, or has the wrong version/shape.

    ``offset`` is the byte offset at which parsing failed, when known.
    """

    def __init__(self, message, offset=None):
        if offset is not None:
            message = f"{message} (byte offset {offset})"
        super().__init__(message)
        self.offset = offset


class InputError(SwimlabError, ValueError):
    """Invalid input to a simulation or analytics operation."""


class InsufficientDataError(InputError):
    """Too few samples/experiments for the requested statistic."""


class GridMismatchError(InputError):
    """Two histograms do not share a common bin grid."""


class TrajectoryFormatError(SwimlabError, ValueError):
    """A trajectory file violates the canonical on-disk format."""


class IngestError(SwimlabError, ValueError):
    """External data cannot be converted to the canonical format."""


class ConfigError(SwimlabError, ValueError):
    """A run configuration is invalid; ``problems`` lists every issue found."""

    def __init__(self, problems):
        if isinstance(problems, str):
            problems = [problems]
        self.problems = list(problems)
        super().__init__("; ".join(self.problems))


class TrainingDivergedError(SwimlabError, ArithmeticError):
    """Training produced a non-finite loss; carries the last finite checkpoint."""

    def __init__(self, message, checkpoint=None, history=None):
        super().__init__(message)
        self.checkpoint = checkpoint
        self.history = history or []
