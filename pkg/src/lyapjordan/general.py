"""Lyapunov equations for arbitrary ``A`` through a supplied Jordan
decomposition, and the brute-force Kronecker oracle used to check them.

With ``A P = P J`` the substitution ``Z = P^H X P`` turns the equation into
``J^H Z + Z J + P^H C P = O``; solutions map back through
``X = P^{-H} Z P^{-1}``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .block import Field, PreconditionError, Refinement, SolutionSet, Violation
from .exact import (
    ZERO,
    Matrix,
    Scalar,
    ShapeError,
    congruence,
    conj_transpose,
    determinant,
    inverse,
    kron,
    rank,
    rank_and_nullspace,
    solve_linear,
    span_rank,
)
from .jordan import solve_jordan
from .structured import JordanSpec, assemble

__all__ = [
    "Decomposition",
    "InvalidDecompositionError",
    "UndecomposableError",
    "validate_decomposition",
    "solve_general",
    "vectorized_operator",
    "oracle_solve",
    "affine_sets_equal",
    "decompose",
]


class InvalidDecompositionError(ValueError):
    """``A P != P J`` or ``P`` is singular."""


class UndecomposableError(ValueError):
    """The best-effort decomposer could not split the characteristic polynomial."""


@dataclass(frozen=True)
class Decomposition:
    A: Matrix
    P: Matrix
    spec: JordanSpec


def validate_decomposition(d: Decomposition) -> bool:
    n = d.spec.total
    if d.A.shape != (n, n) or d.P.shape != (n, n):
        raise ShapeError(f"A {d.A.shape} and P {d.P.shape} must both be {n}x{n}")
    if determinant(d.P).is_zero():
        return False
    return d.A @ d.P == d.P @ assemble(d.spec)


def solve_general(d: Decomposition, C: Matrix, refinement=Refinement.GENERAL) -> SolutionSet:
    refinement = Refinement(refinement)
    if not validate_decomposition(d):
        raise InvalidDecompositionError("A P != P J_A or P is singular")
    n = d.spec.total
    if C.shape != (n, n):
        raise ShapeError(f"C has shape {C.shape}, expected ({n}, {n})")
    if refinement is Refinement.SYMMETRIC and not (d.A.is_real() and d.P.is_real() and d.spec.is_real()):
        raise PreconditionError("symmetric refinement needs real A, J_A and P_A")

    D = congruence(d.P, C)
    z = solve_jordan(d.spec, D, refinement)
    if not z.compatible:
        return z
    q = inverse(d.P)
    back = lambda m: congruence(q, m)  # noqa: E731
    return SolutionSet(True, back(z.particular), [back(b) for b in z.basis], z.field)


def vectorized_operator(a: Matrix) -> Matrix:
    """``I (x) A^H + conj(A^H) (x) I`` acting on column-stacked ``vec(X)``."""
    n = a.rows
    ah = conj_transpose(a)
    eye = Matrix.identity(n)
    return kron(eye, ah) + kron(ah.conj(), eye)


def oracle_solve(A: Matrix, C: Matrix) -> SolutionSet:
    """Solve the Lyapunov equation as a dense ``n^2 x n^2`` linear system.

    An inconsistent system is certified by a left null vector ``y`` of the
    operator with ``y . vec(-C) != 0``; that value is the reported residual.
    """
    if not A.is_square() or C.shape != A.shape:
        raise ShapeError(f"A {A.shape} and C {C.shape} must be equal square shapes")
    n = A.rows
    m = vectorized_operator(A)
    rhs = Matrix(n * n, 1, (-v for v in C.vec()))
    x, null = solve_linear(m, rhs)
    basis = [Matrix.unvec(v, n, n) for v in null]
    if x is not None:
        return SolutionSet(True, Matrix.unvec(x.entries, n, n), basis)
    _, left = rank_and_nullspace(m.T)
    b = rhs.entries
    for k, y in enumerate(left):
        val = sum((yi * bi for yi, bi in zip(y, b)), ZERO)
        if val:
            return SolutionSet.incompatible([Violation(k, val)])
    raise ArithmeticError("inconsistent system without a certificate")


def affine_sets_equal(s1: SolutionSet, s2: SolutionSet) -> bool:
    """Same affine set: equal compatibility, equal spans, particular
    solutions differing by an element of the span. Spans are compared over
    the sets' common field."""
    if s1.compatible != s2.compatible:
        return False
    if not s1.compatible:
        return True
    if s1.field != s2.field:
        return False
    if s1.particular.shape != s2.particular.shape:
        return False
    real = s1.field is Field.REAL
    v1 = [b.entries for b in s1.basis]
    v2 = [b.entries for b in s2.basis]
    r1 = span_rank(v1, real)
    r2 = span_rank(v2, real)
    if r1 != r2 or span_rank(v1 + v2, real) != r1:
        return False
    diff = (s1.particular - s2.particular).entries
    return span_rank(v1 + [diff], real) == r1


# best-effort Jordan decomposition -------------------------------------------


def _candidate_eigenvalues(bound: int):
    for a, b in itertools.product(range(-bound, bound + 1), repeat=2):
        yield Scalar(a, b)


def _nullspace_matrix_power(n_mat: Matrix, k: int):
    return rank_and_nullspace(n_mat ** k)[1]


def decompose(A: Matrix, bound: int = 6) -> Decomposition:
    """Jordan decomposition for matrices whose eigenvalues are Gaussian
    integers with parts in ``[-bound, bound]``.

    Raises :class:`UndecomposableError` when the located eigenvalues do not
    account for the full dimension.
    """
    if not A.is_square():
        raise ShapeError("decompose needs a square matrix")
    n = A.rows
    eye = Matrix.identity(n)
    found = []
    total = 0
    for lam in _candidate_eigenvalues(bound):
        nm = A - eye * lam
        if rank(nm) == n:
            continue
        alg = n - rank(nm ** n)
        found.append((lam, alg))
        total += alg
        if total == n:
            break
    if total != n:
        raise UndecomposableError(
            f"eigenvalues with parts in [-{bound}, {bound}] cover {total} of {n} dimensions"
        )

    blocks, columns = [], []
    for lam, alg in found:
        nm = A - eye * lam
        ranks = [n]
        k = 0
        while ranks[-1] > n - alg:
            k += 1
            ranks.append(rank(nm ** k))
        index = k
        w = [ranks[i - 1] - ranks[i] for i in range(1, index + 1)]
        w.append(0)
        chains: list[tuple[int, list[tuple]]] = []
        for level in range(index, 0, -1):
            new = w[level - 1] - w[level]
            if not new:
                continue
            # independent modulo ker N^(level-1) and images of longer chains
            span = [tuple(v) for v in _nullspace_matrix_power(nm, level - 1)] if level > 1 else []
            for length, chain in chains:
                span.append(chain[level - 1])
            base = span_rank(span)
            for v in _nullspace_matrix_power(nm, level):
                if not new:
                    break
                if span_rank(span + [v]) > base:
                    span.append(v)
                    base += 1
                    new -= 1
                    chain = [v]
                    for _ in range(level - 1):
                        chain.insert(0, _apply(nm, chain[0]))
                    chains.append((level, chain))
        for length, chain in sorted(chains, key=lambda c: -c[0]):
            blocks.append((lam, length))
            columns.extend(chain)
    p = Matrix(n, n, (columns[j][i] for i in range(n) for j in range(n)))
    d = Decomposition(A, p, JordanSpec(tuple(blocks)))
    if not validate_decomposition(d):
        raise UndecomposableError("chain construction failed to produce a valid decomposition")
    return d


def _apply(m: Matrix, v) -> tuple:
    return (m @ Matrix(len(v), 1, v)).entries
