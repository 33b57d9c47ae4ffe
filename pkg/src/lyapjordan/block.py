"""Sylvester-Lyapunov equations with Jordan blocks,

    J_r(lam)^H X + X J_s(mu) + C = O.

Shifting both blocks to a single parameter ``nu = lam + conj(mu)`` splits
the problem into three regimes: homogeneous, ``nu != 0`` (unique solution
built from shifted Pascal matrices) and ``nu == 0`` (alternating-sum
compatibility conditions and a parametric family). Hermitian and real
symmetric refinements are provided for square blocks.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Sequence

from .exact import (
    I,
    ZERO,
    Definiteness,
    Matrix,
    Scalar,
    ShapeError,
    conj_transpose,
    definiteness,
    is_hermitian,
    is_real_symmetric,
)
from .structured import jordan_block, x_matrix, y_matrix

__all__ = [
    "Refinement",
    "Field",
    "Violation",
    "SolutionSet",
    "BlockEquation",
    "IncompatibleError",
    "PreconditionError",
    "reduce_to_nu",
    "solve_homogeneous",
    "hermitian_homogeneous_basis",
    "symmetric_homogeneous_basis",
    "solve_nonzero_nu",
    "classify_unique_solution",
    "compatibility_zero_nu",
    "particular_zero_nu",
    "hermitian_zero_nu",
    "symmetric_zero_nu",
    "solve_block",
]


class Refinement(str, enum.Enum):
    GENERAL = "general"
    HERMITIAN = "hermitian"
    SYMMETRIC = "symmetric"


class Field(str, enum.Enum):
    COMPLEX = "complex"
    REAL = "real"


class PreconditionError(ValueError):
    """An operation was called outside its domain."""


class IncompatibleError(ValueError):
    """The equation has no solution; ``violations`` holds the failed conditions."""

    def __init__(self, message: str, violations):
        super().__init__(message)
        self.violations = list(violations)


@dataclass(frozen=True)
class Violation:
    """A failed compatibility condition.

    ``index`` is the condition index ``i`` of the alternating sum over the
    anti-diagonal ``i`` (so ``i = 2`` is ``c_11 = 0``); ``block`` is the
    1-based block pair when reported from a Jordan matrix.
    """

    index: int
    residual: Scalar
    block: tuple[int, int] | None = None

    def at(self, block: tuple[int, int]) -> "Violation":
        return Violation(self.index, self.residual, block)


@dataclass(frozen=True)
class SolutionSet:
    """Affine solution set ``particular + span(basis)`` over ``field``."""

    compatible: bool
    particular: Matrix | None
    basis: tuple[Matrix, ...] = ()
    field: Field = Field.COMPLEX
    violated_conditions: tuple[Violation, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "basis", tuple(self.basis))
        object.__setattr__(self, "violated_conditions", tuple(self.violated_conditions))
        object.__setattr__(self, "field", Field(self.field))
        if not self.compatible and (self.particular is not None or not self.violated_conditions):
            raise ValueError("an incompatible set carries violations and no particular solution")

    @property
    def dimension(self) -> int:
        return len(self.basis)

    @classmethod
    def incompatible(cls, violations, field=Field.COMPLEX) -> "SolutionSet":
        return cls(False, None, (), field, tuple(violations))

    def element(self, coeffs: Sequence) -> Matrix:
        """``particular + sum(coeffs[k] * basis[k])``."""
        if not self.compatible:
            raise IncompatibleError("empty solution set", self.violated_conditions)
        if len(coeffs) != len(self.basis):
            raise ValueError(f"expected {len(self.basis)} coefficients, got {len(coeffs)}")
        x = self.particular
        for c, b in zip(coeffs, self.basis):
            c = Scalar.coerce(c)
            if self.field is Field.REAL and not c.is_real():
                raise ValueError("real solution sets take real coefficients")
            x = x + b * c
        return x


@dataclass(frozen=True)
class BlockEquation:
    lam: Scalar
    mu: Scalar
    r: int
    s: int
    C: Matrix

    def __post_init__(self):
        object.__setattr__(self, "lam", Scalar.coerce(self.lam))
        object.__setattr__(self, "mu", Scalar.coerce(self.mu))
        if self.r < 1 or self.s < 1:
            raise ValueError("block orders must be positive")
        if self.C.shape != (self.r, self.s):
            raise ShapeError(f"C has shape {self.C.shape}, expected ({self.r}, {self.s})")

    @property
    def nu(self) -> Scalar:
        return self.lam + self.mu.conj()

    def residual(self, x: Matrix) -> Matrix:
        return (
            conj_transpose(jordan_block(self.lam, self.r)) @ x
            + x @ jordan_block(self.mu, self.s)
            + self.C
        )


def reduce_to_nu(eq: BlockEquation) -> BlockEquation:
    """Equivalent equation with blocks ``J_r(nu)`` and ``J_s(0)``."""
    return BlockEquation(eq.nu, ZERO, eq.r, eq.s, eq.C)


# homogeneous ---------------------------------------------------------------


def solve_homogeneous(nu, r: int, s: int) -> SolutionSet:
    nu = Scalar.coerce(nu)
    zero = Matrix.zeros(r, s)
    if nu:
        return SolutionSet(True, zero)
    return SolutionSet(True, zero, [y_matrix(t, r, s) for t in range(1, min(r, s) + 1)])


def hermitian_homogeneous_basis(r: int) -> SolutionSet:
    """Real basis of the Hermitian solutions of ``J_r(0)^T X + X J_r(0) = O``."""
    shift = 0 if r % 2 == 0 else 1
    basis = [y_matrix(t, r, r) * (I ** (t - shift)) for t in range(1, r + 1)]
    return SolutionSet(True, Matrix.zeros(r, r), basis, Field.REAL)


def symmetric_homogeneous_basis(r: int) -> SolutionSet:
    # Y_t is symmetric exactly when t and r have equal parity
    basis = [y_matrix(t, r, r) for t in range(1, r + 1) if (t - r) % 2 == 0]
    return SolutionSet(True, Matrix.zeros(r, r), basis, Field.REAL)


# nu != 0 -------------------------------------------------------------------


def solve_nonzero_nu(nu, C: Matrix) -> SolutionSet:
    """Unique solution of ``J_r(nu)^H X + X J_s(0) + C = O`` for ``nu != 0``.

    The equation reads ``conj(nu) x_ij + x_{i-1,j} + x_{i,j-1} + c_ij = 0``
    entrywise, so the Pascal parameter is ``-1/conj(nu)``.
    """
    nu = Scalar.coerce(nu)
    if not nu:
        raise PreconditionError("solve_nonzero_nu needs nu != 0")
    r, s = C.shape
    y = -(nu.conj().inverse())
    x = Matrix.zeros(r, s)
    for i in range(1, r + 1):
        for j in range(1, s + 1):
            c = C[i - 1, j - 1]
            if c:
                x = x + x_matrix(i, j, r, s, y) * c
    return SolutionSet(True, x)


def classify_unique_solution(nu, C: Matrix) -> Definiteness:
    """Definiteness of the unique solution for real ``nu != 0`` and Hermitian
    positive semidefinite ``C``.

    The class is computed from exact minors and then checked against the
    predicted sign: ``nu > 0`` gives the negative side, ``nu < 0`` the
    positive side, strictly definite when ``c_11 != 0`` or ``C`` is definite.
    """
    nu = Scalar.coerce(nu)
    if not nu or not nu.is_real():
        raise PreconditionError("nu must be real and nonzero")
    if not C.is_square():
        raise PreconditionError("C must be square")
    c_class = definiteness(C) if is_hermitian(C) else None
    if c_class not in (Definiteness.POSITIVE_DEFINITE, Definiteness.POSITIVE_SEMIDEFINITE):
        raise PreconditionError("C must be Hermitian positive semidefinite")
    x = solve_nonzero_nu(nu, C).particular
    negative = nu.re > 0
    strict = bool(C[0, 0]) or c_class is Definiteness.POSITIVE_DEFINITE
    if negative:
        semi, definite = Definiteness.NEGATIVE_SEMIDEFINITE, Definiteness.NEGATIVE_DEFINITE
    else:
        semi, definite = Definiteness.POSITIVE_SEMIDEFINITE, Definiteness.POSITIVE_DEFINITE
    if x.is_zero():
        actual = semi
    else:
        actual = definiteness(x)
    allowed = {definite} if strict else {semi, definite}
    if actual not in allowed:
        raise AssertionError(f"solution classified {actual.value}, expected one of {sorted(a.value for a in allowed)}")
    return actual


# nu == 0 -------------------------------------------------------------------


def _alternating_sum(C: Matrix, i: int) -> Scalar:
    # c_{i-1,1} - c_{i-2,2} + ... ; the sign makes i = 2 read c_11
    acc = ZERO
    for j in range(1, i):
        term = C[i - j - 1, j - 1]
        acc = acc + term if j % 2 else acc - term
    return acc


def compatibility_zero_nu(C: Matrix) -> tuple[bool, list[Violation]]:
    """Alternating anti-diagonal sums for ``i = 2 .. min(r, s) + 1``."""
    r, s = C.shape
    violations = []
    for i in range(2, min(r, s) + 2):
        res = _alternating_sum(C, i)
        if res:
            violations.append(Violation(i, res))
    return not violations, violations


def particular_zero_nu(C: Matrix) -> Matrix:
    """Particular solution with zero last column (``r <= s``) or zero last
    row (``r > s``)."""
    ok, violations = compatibility_zero_nu(C)
    if not ok:
        raise IncompatibleError("C violates the nu = 0 compatibility conditions", violations)
    r, s = C.shape

    def c(a, b):
        return C[a - 1, b - 1]

    def entry(i0, j0):
        i, j = i0 + 1, j0 + 1
        acc = ZERO
        if r <= s:
            if j == s:
                return ZERO
            for k in range(1, min(i, s - j) + 1):
                term = c(i - k + 1, j + k)
                acc = acc - term if k % 2 else acc + term
        else:
            if i == r:
                return ZERO
            for k in range(1, min(j, r - i) + 1):
                term = c(i + k, j - k + 1)
                acc = acc - term if k % 2 else acc + term
        return acc

    return Matrix.from_function(r, s, entry)


def _require_square(C: Matrix):
    if not C.is_square():
        raise PreconditionError(f"refinement needs a square block, got {C.shape}")


def hermitian_zero_nu(C: Matrix) -> SolutionSet:
    _require_square(C)
    if not is_hermitian(C):
        raise PreconditionError("Hermitian refinement needs a Hermitian C")
    r = C.rows

    def c(a, b):
        return C[a - 1, b - 1]

    violations = []
    if c(1, 1):
        violations.append(Violation(2, c(1, 1)))
    for alpha in range(1, r // 2 + 1):
        acc = ZERO
        for j in range(1, alpha + 1):
            im = Scalar(c(j, 2 * alpha + 1 - j).im)
            acc = acc + im if j % 2 == 0 else acc - im
        if acc:
            violations.append(Violation(2 * alpha + 1, acc))
    for alpha in range(2, (r + 1) // 2 + 1):
        acc = c(alpha, alpha) if alpha % 2 == 0 else -c(alpha, alpha)
        for j in range(1, alpha):
            re = Scalar(2 * c(j, 2 * alpha - j).re)
            acc = acc + re if j % 2 == 0 else acc - re
        if acc:
            violations.append(Violation(2 * alpha, acc))
    if violations:
        violations.sort(key=lambda v: v.index)
        return SolutionSet.incompatible(violations, Field.REAL)
    x = particular_zero_nu(C)
    xh = (x + conj_transpose(x)) / 2
    return SolutionSet(True, xh, hermitian_homogeneous_basis(r).basis, Field.REAL)


def symmetric_zero_nu(C: Matrix) -> SolutionSet:
    _require_square(C)
    if not is_real_symmetric(C):
        raise PreconditionError("symmetric refinement needs a real symmetric C")
    r = C.rows

    def c(a, b):
        return C[a - 1, b - 1]

    violations = []
    if c(1, 1):
        violations.append(Violation(2, c(1, 1)))
    for alpha in range(2, (r + 1) // 2 + 1):
        acc = c(alpha, alpha) if alpha % 2 == 0 else -c(alpha, alpha)
        for j in range(1, alpha):
            term = c(j, 2 * alpha - j) * 2
            acc = acc + term if j % 2 == 0 else acc - term
        if acc:
            violations.append(Violation(2 * alpha, acc))
    if violations:
        return SolutionSet.incompatible(violations, Field.REAL)
    x = particular_zero_nu(C)
    xs = (x + x.T) / 2
    return SolutionSet(True, xs, symmetric_homogeneous_basis(r).basis, Field.REAL)


# dispatcher ----------------------------------------------------------------


def _first_nonzero(m: Matrix) -> Scalar:
    return next(e for e in m.entries if e)


def solve_block(eq: BlockEquation, refinement=Refinement.GENERAL) -> SolutionSet:
    refinement = Refinement(refinement)
    C = eq.C
    if refinement is Refinement.HERMITIAN:
        _require_square(C)
        if not is_hermitian(C):
            raise PreconditionError("Hermitian refinement needs a Hermitian C")
    elif refinement is Refinement.SYMMETRIC:
        _require_square(C)
        if not is_real_symmetric(C):
            raise PreconditionError("symmetric refinement needs a real symmetric C")

    nu = reduce_to_nu(eq).lam
    if not nu:
        if refinement is Refinement.HERMITIAN:
            return hermitian_zero_nu(C)
        if refinement is Refinement.SYMMETRIC:
            return symmetric_zero_nu(C)
        ok, violations = compatibility_zero_nu(C)
        if not ok:
            return SolutionSet.incompatible(violations)
        return SolutionSet(True, particular_zero_nu(C), solve_homogeneous(nu, eq.r, eq.s).basis)

    x = solve_nonzero_nu(nu, C).particular
    if refinement is Refinement.GENERAL:
        return SolutionSet(True, x)
    # the unique solution is the only candidate; index 0 flags a structure defect
    if refinement is Refinement.HERMITIAN:
        defect = x - conj_transpose(x)
    else:
        defect = (x - x.T) if x.is_real() else x.conj() - x
    if defect.is_zero():
        return SolutionSet(True, x, (), Field.REAL)
    return SolutionSet.incompatible([Violation(0, _first_nonzero(defect))], Field.REAL)
