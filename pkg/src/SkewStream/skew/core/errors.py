from typing import Optional


class ArgumentError(ValueError):
    """Invalid argument passed to a library operation."""


class ConfigError(ValueError):
    """Invalid experiment configuration; raised before any work starts."""


class GenerationError(ValueError):
    """A synthetic drift stream cannot be generated as specified."""


class UndefinedAUCError(ValueError):
    """AUC requested for labels that contain a single class."""


class DataError(ValueError):
    def __init__(self, message: str, line: Optional[int] = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
