"""Exact solutions of the Lyapunov equation ``A^H X + X A + C = O``
through the Jordan structure of ``A``."""

from .block import (
    BlockEquation,
    Field,
    IncompatibleError,
    PreconditionError,
    Refinement,
    SolutionSet,
    Violation,
    solve_block,
)
from .exact import Definiteness, Matrix, Scalar, ShapeError, definiteness
from .general import (
    Decomposition,
    InvalidDecompositionError,
    UndecomposableError,
    affine_sets_equal,
    decompose,
    oracle_solve,
    solve_general,
    validate_decomposition,
)
from .jordan import (
    KSet,
    construct_invertible_solution,
    dim_solutions,
    has_invertible_solution,
    has_positive_definite_solution,
    k_set,
    solve_jordan,
)
from .structured import JordanSpec, WeyrCharacteristic, assemble, jordan_block, weyr, y_matrix

__version__ = "0.1.0"

__all__ = [
    "BlockEquation",
    "Field",
    "IncompatibleError",
    "PreconditionError",
    "Refinement",
    "SolutionSet",
    "Violation",
    "solve_block",
    "Definiteness",
    "Matrix",
    "Scalar",
    "ShapeError",
    "definiteness",
    "Decomposition",
    "InvalidDecompositionError",
    "UndecomposableError",
    "affine_sets_equal",
    "decompose",
    "oracle_solve",
    "solve_general",
    "validate_decomposition",
    "KSet",
    "construct_invertible_solution",
    "dim_solutions",
    "has_invertible_solution",
    "has_positive_definite_solution",
    "k_set",
    "solve_jordan",
    "JordanSpec",
    "WeyrCharacteristic",
    "assemble",
    "jordan_block",
    "weyr",
    "y_matrix",
]
