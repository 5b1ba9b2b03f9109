"""
Error types raised by the toolkit

Every error is a ValueError carrying a stable machine-readable code, so the
CLI can turn it into an error envelope and an exit status.
"""

from typing import Any


class BuresError(ValueError):
    """Base class for all toolkit errors"""

    code = "bures_error"

    def to_dict(self) -> dict[str, str]:
        return {"code": self.code, "message": str(self)}


class NotPsd(BuresError):
    code = "not_psd"


class NotPd(BuresError):
    code = "not_pd"


class DimensionMismatch(BuresError):
    code = "dimension_mismatch"


class ParamOutOfRange(BuresError):
    code = "param_out_of_range"


class NegativeDiscriminant(BuresError):
    """The bracket under the distance square root went clearly negative"""

    code = "negative_discriminant"


class InvalidProblem(BuresError):
    """Problem input could not be parsed or failed structural validation"""

    code = "invalid_problem"


class NotConverged(BuresError):
    """Fixed-point solve hit max_iter; the partial solution is attached"""

    code = "not_converged"

    def __init__(self, message: str, solution: Any = None):
        super().__init__(message)
        self.solution = solution
