"""Exception types shared across the pipeline.

The CLI maps these onto exit codes: config/parse problems exit 3,
I/O problems exit 2, numerical failures exit 4.
"""


class PipelineError(Exception):
    """Base class for every error raised by this package."""


class DegenerateInputError(PipelineError, ValueError):
    """Input too small or empty for the requested operation."""


class ShapeError(PipelineError, ValueError):
    """Array/raster shape incompatible with the operation."""


class DomainError(PipelineError, ValueError):
    """Numeric value outside its required domain (e.g. non-simplex probs)."""


class ArityError(PipelineError, ValueError):
    """Count arguments inconsistent (k > n, mismatched lengths, empty sets)."""


class CapacityError(PipelineError, ValueError):
    """Requested layout does not fit (e.g. cores cannot pack on the canvas)."""


class ConfigError(PipelineError, ValueError):
    """Invalid configuration object or CLI parameters."""


class FormatError(PipelineError, ValueError):
    """Malformed binary container or structured file."""


class ParseError(FormatError):
    """Malformed row in a text input; carries the 1-based line number."""

    def __init__(self, message: str, line: int | None = None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class TrainingDivergedError(PipelineError, ArithmeticError):
    """Loss became non-finite during optimization."""
