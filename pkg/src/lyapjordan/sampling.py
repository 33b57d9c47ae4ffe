"""Seeded random Gaussian-rational data for trials and tests."""

from __future__ import annotations

import random
from fractions import Fraction

from .exact import Matrix, Scalar

__all__ = ["random_rational", "random_scalar", "random_matrix", "random_invertible"]


def random_rational(rng: random.Random, bound: int = 5, max_den: int = 3) -> Fraction:
    return Fraction(rng.randint(-bound, bound), rng.randint(1, max_den))


def random_scalar(rng: random.Random, bound: int = 5, max_den: int = 3, real: bool = False) -> Scalar:
    re = random_rational(rng, bound, max_den)
    im = Fraction(0) if real else random_rational(rng, bound, max_den)
    return Scalar(re, im)


def random_matrix(rng: random.Random, rows: int, cols: int, real: bool = False, **kw) -> Matrix:
    return Matrix(rows, cols, [random_scalar(rng, real=real, **kw) for _ in range(rows * cols)])


def random_invertible(rng: random.Random, n: int, real: bool = False) -> Matrix:
    """Unit lower times unit upper triangular, so the determinant is 1."""
    lower = Matrix.from_function(
        n, n, lambda i, j: 1 if i == j else (random_scalar(rng, 2, 1, real) if i > j else 0)
    )
    upper = Matrix.from_function(
        n, n, lambda i, j: 1 if i == j else (random_scalar(rng, 2, 1, real) if i < j else 0)
    )
    return lower @ upper
