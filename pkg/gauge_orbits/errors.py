class GaugeOrbitError(Exception):
    """Base error. Carries the CLI exit code and a stable error code."""

    exit_code = 1
    code = "E_INTERNAL"

    def __init__(self, message: str) -> None:
        super().__init__(message)
        self.message = message


class InvalidInputError(GaugeOrbitError):
    exit_code = 2
    code = "E_INPUT"


class CoordinateMismatchError(InvalidInputError):
    code = "E_COORDINATES"


class InconsistentSectorError(InvalidInputError):
    code = "E_SECTOR"


class NotASurfaceError(InvalidInputError):
    code = "E_NOT_SURFACE"


class ModelSchemaError(InvalidInputError):
    code = "E_MODEL_SCHEMA"


class ModelInvariantError(GaugeOrbitError):
    exit_code = 3
    code = "E_MODEL_INVARIANT"
