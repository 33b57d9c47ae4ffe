"""Shared builders and independent oracles for the test suite."""

from __future__ import annotations

import random
from fractions import Fraction

from lyapjordan.exact import Matrix, Scalar, rank
from lyapjordan.structured import JordanSpec

EIGEN_POOL = [Scalar(0), Scalar(1), Scalar(-1), Scalar(2), Scalar(-2), Scalar(0, 1), Scalar(0, -1),
              Scalar(1, 1), Scalar(-1, 1)]


def m(rows) -> Matrix:
    """Matrix from nested lists; strings go through Scalar.parse."""
    return Matrix.from_rows([[Scalar.parse(e) if isinstance(e, str) else e for e in row] for row in rows])


def cmat(values: dict, n: int, default=0) -> Matrix:
    """n x n matrix from {(i, j): value} with 1-based keys."""
    return Matrix.from_function(n, n, lambda i, j: values.get((i + 1, j + 1), default))


def weyr_by_rank(a: Matrix, lam) -> list[int]:
    """w_k = rank(N^(k-1)) - rank(N^k) for N = A - lam I, until it vanishes."""
    n = a.rows
    nm = a - Matrix.identity(n) * Scalar.coerce(lam)
    ranks = [n]
    w = []
    power = Matrix.identity(n)
    while True:
        power = power @ nm
        ranks.append(rank(power))
        step = ranks[-2] - ranks[-1]
        if step == 0:
            return w
        w.append(step)


def random_spec(rng: random.Random, max_total: int = 5, pool=EIGEN_POOL) -> JordanSpec:
    total = rng.randint(1, max_total)
    blocks = []
    while total:
        size = rng.randint(1, total)
        blocks.append((rng.choice(pool), size))
        total -= size
    return JordanSpec(tuple(blocks))


def frac(p, q=1) -> Fraction:
    return Fraction(p, q)


# worked examples ------------------------------------------------------------

SPEC_MIXED = JordanSpec.of((0, 1), (0, 2), (2, 1))
A_DENSE = Matrix.from_rows([[0, 0, 0, 0], [-1, 0, 0, 0], [0, 0, 0, 0], [0, 0, 2, 2]])
P_DENSE = Matrix.from_rows([[0, 0, 1, 0], [0, -1, 0, 0], [-1, 0, 1, 0], [1, 0, -1, 1]])


def unit4(i, j, value=1):
    return Matrix.from_function(4, 4, lambda a, b: value if (a + 1, b + 1) == (i, j) else 0)


def _entries(c):
    return {(i + 1, j + 1): c[i, j] for i in range(c.rows) for j in range(c.cols)}


def mixed_compatible_rhs(rng, real=False, hermitian=False) -> Matrix:
    """Random C with c11 = c12 = c21 = c22 = 0 and c23 = c32."""
    from lyapjordan.exact import conj_transpose
    from lyapjordan.sampling import random_matrix

    c = random_matrix(rng, 4, 4, real=real)
    if hermitian:
        c = c + conj_transpose(c)
    v = _entries(c)
    for key in [(1, 1), (1, 2), (2, 1), (2, 2)]:
        v[key] = Scalar(0)
    shared = Scalar(v[2, 3].re) if hermitian else v[2, 3]
    v[2, 3] = v[3, 2] = shared
    return cmat(v, 4)


def mixed_particular(c, refined=False) -> Matrix:
    """Displayed family with its parameters set to 0."""
    cc = lambda i, j: c[i - 1, j - 1]  # noqa: E731
    x23 = -cc(3, 3) / 2 if refined else Scalar(0)
    x32 = -cc(3, 3) / 2 if refined else -cc(3, 3)
    return Matrix.from_rows([
        [0, -cc(1, 3), 0, -cc(1, 4) / 2],
        [-cc(3, 1), -cc(2, 3), x23, -cc(2, 4) / 2],
        [0, x32, 0, cc(2, 4) / 4 - cc(3, 4) / 2],
        [-cc(4, 1) / 2, -cc(4, 2) / 2, cc(4, 2) / 4 - cc(4, 3) / 2, -cc(4, 4) / 4],
    ])


def dense_compatible_rhs(rng) -> Matrix:
    """Random C satisfying the five compatibility conditions."""
    from lyapjordan.sampling import random_matrix

    v = _entries(random_matrix(rng, 4, 4))
    v[2, 2] = Scalar(0)
    v[4, 2] = v[3, 2]
    v[2, 4] = v[2, 3]
    v[1, 2] = v[2, 1]
    v[4, 4] = -v[3, 3] + v[4, 3] + v[3, 4]
    return cmat(v, 4)


def dense_conditions(c) -> list:
    cc = lambda i, j: c[i - 1, j - 1]  # noqa: E731
    return [
        cc(3, 3) - cc(4, 3) - cc(3, 4) + cc(4, 4),
        cc(3, 2) - cc(4, 2),
        cc(2, 3) - cc(2, 4),
        cc(2, 2),
        -cc(2, 1) - cc(2, 3) + cc(2, 4) + cc(1, 2) + cc(3, 2) - cc(4, 2),
    ]


def dense_particular(c) -> Matrix:
    cc = lambda i, j: c[i - 1, j - 1]  # noqa: E731
    return Matrix.from_rows([
        [0, cc(1, 1) + cc(1, 3) - cc(1, 4), -cc(2, 3) / 4 - cc(1, 4) / 2, -cc(2, 3) / 4 - cc(1, 4) / 2],
        [-cc(1, 3) + cc(1, 4), cc(1, 2), cc(1, 3) - cc(1, 4) - cc(2, 3) / 2, -cc(2, 3) / 2],
        [-cc(3, 2) / 4 - cc(4, 1) / 2, cc(3, 1) - cc(4, 1) - cc(3, 2) / 2,
         -cc(3, 3) * 3 / 4 + cc(3, 4) / 4 + cc(4, 3) / 4, -cc(3, 3) / 4 + cc(4, 3) / 4 - cc(3, 4) / 4],
        [-cc(3, 2) / 4 - cc(4, 1) / 2, -cc(3, 2) / 2,
         -cc(3, 3) / 4 + cc(3, 4) / 4 - cc(4, 3) / 4, cc(3, 3) / 4 - cc(4, 3) / 4 - cc(3, 4) / 4],
    ])


def dense_homogeneous_family():
    """Homogeneous family in the parameters x, y, z, t, u."""
    from lyapjordan.block import SolutionSet

    e = unit4
    return SolutionSet(True, Matrix.zeros(4), [
        e(1, 1) - e(1, 3) - e(3, 1) + e(3, 3),
        e(1, 1) - e(3, 1),
        e(1, 1) - e(1, 3),
        e(1, 2) - e(2, 1),
        e(1, 1),
    ])


def mixed_homogeneous_families():
    from lyapjordan.block import Field, SolutionSet
    from lyapjordan.exact import I

    e = unit4
    zero = Matrix.zeros(4)
    general = SolutionSet(True, zero, [e(1, 1), e(1, 3), e(3, 1), e(2, 3) - e(3, 2), e(3, 3)])
    hermitian = SolutionSet(True, zero, [
        e(1, 1), e(1, 3) + e(3, 1), e(1, 3, I) - e(3, 1, I), e(2, 3, I) - e(3, 2, I), e(3, 3)], Field.REAL)
    symmetric = SolutionSet(True, zero, [e(1, 1), e(1, 3) + e(3, 1), e(3, 3)], Field.REAL)
    return general, hermitian, symmetric
