from enum import Enum


class SolutionKind(Enum):
    EMPTY = "empty"
    FINITE = "finite"
    INFINITE = "infinite"


class SolveResponse(Enum):
    SOLVED = "SOLVED"
    NO_LINEAR_SOLUTION = "NO_LINEAR_SOLUTION"
    NO_DEGREE4_SOLUTION = "NO_DEGREE4_SOLUTION"
    NO_QUADRIC_SOLUTION = "NO_QUADRIC_SOLUTION"
    NO_WITNESS_WITHIN_BOUND = "NO_WITNESS_WITHIN_BOUND"


class ExitCode(Enum):
    SUCCESS = 0
    INTERNAL_ERROR = 1
    INVALID_INPUT = 2
    MODEL_VALIDATION = 3
