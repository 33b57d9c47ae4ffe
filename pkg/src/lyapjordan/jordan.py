"""Lyapunov equations ``A^H X + X A + C = O`` with ``A`` a Jordan matrix.

Partitioning ``X`` and ``C`` along the Jordan blocks turns the equation into
``k**2`` independent block equations; homogeneous solutions live only on the
block pairs ``(alpha, beta)`` with ``lam_alpha + conj(lam_beta) == 0``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .block import (
    BlockEquation,
    Field,
    PreconditionError,
    Refinement,
    SolutionSet,
    solve_block,
)
from .exact import (
    I,
    ZERO,
    Matrix,
    Scalar,
    ShapeError,
    congruence,
    conj_transpose,
    direct_sum,
    inverse,
    is_hermitian,
    is_real_symmetric,
)
from .structured import JordanSpec, weyr, y_matrix

__all__ = [
    "KSet",
    "BlockPartition",
    "k_set",
    "solve_jordan",
    "dim_solutions",
    "has_positive_definite_solution",
    "has_invertible_solution",
    "construct_invertible_solution",
    "invertible_grouping",
    "lyapunov_residual",
]


@dataclass(frozen=True)
class KSet:
    """1-based block pairs with ``lam_alpha + conj(lam_beta) == 0``."""

    pairs: frozenset

    def __contains__(self, pair) -> bool:
        return tuple(pair) in self.pairs

    def __iter__(self):
        return iter(sorted(self.pairs))

    def __len__(self):
        return len(self.pairs)


@dataclass(frozen=True)
class BlockPartition:
    """Block offsets of a Jordan spec; block indices here are 0-based."""

    spec: JordanSpec

    @property
    def offsets(self) -> tuple[int, ...]:
        return self.spec.offsets

    def slice(self, alpha: int) -> tuple[int, int]:
        off = self.offsets[alpha]
        return off, off + self.spec.sizes[alpha]

    def block(self, m: Matrix, alpha: int, beta: int) -> Matrix:
        r0, r1 = self.slice(alpha)
        c0, c1 = self.slice(beta)
        return m.submatrix(r0, r1, c0, c1)

    def embed(self, b: Matrix, alpha: int, beta: int) -> Matrix:
        n = self.spec.total
        r0, _ = self.slice(alpha)
        c0, _ = self.slice(beta)
        e = [ZERO] * (n * n)
        for i in range(b.rows):
            for j in range(b.cols):
                e[(r0 + i) * n + c0 + j] = b[i, j]
        return Matrix(n, n, e)

    def assemble(self, blocks: dict) -> Matrix:
        """Place ``{(alpha, beta): block}`` into one matrix."""
        n = self.spec.total
        e = [ZERO] * (n * n)
        for (alpha, beta), b in blocks.items():
            r0, _ = self.slice(alpha)
            c0, _ = self.slice(beta)
            for i in range(b.rows):
                for j in range(b.cols):
                    e[(r0 + i) * n + c0 + j] = b[i, j]
        return Matrix(n, n, e)


def k_set(spec: JordanSpec) -> KSet:
    lams = spec.lambdas
    return KSet(
        frozenset(
            (a + 1, b + 1)
            for a in range(len(lams))
            for b in range(len(lams))
            if (lams[a] + lams[b].conj()).is_zero()
        )
    )


def lyapunov_residual(a: Matrix, x: Matrix, c: Matrix | None = None) -> Matrix:
    res = conj_transpose(a) @ x + x @ a
    return res + c if c is not None else res


def _check_refinement(spec: JordanSpec, C: Matrix, refinement: Refinement):
    if refinement is Refinement.HERMITIAN and not is_hermitian(C):
        raise PreconditionError("Hermitian refinement needs a Hermitian C")
    if refinement is Refinement.SYMMETRIC:
        if not spec.is_real():
            raise PreconditionError("symmetric refinement needs a real Jordan matrix")
        if not is_real_symmetric(C):
            raise PreconditionError("symmetric refinement needs a real symmetric C")


def solve_jordan(spec: JordanSpec, C: Matrix, refinement=Refinement.GENERAL) -> SolutionSet:
    """Solve ``J^H X + X J + C = O`` for ``J = assemble(spec)`` block by block."""
    refinement = Refinement(refinement)
    n = spec.total
    if C.shape != (n, n):
        raise ShapeError(f"C has shape {C.shape}, expected ({n}, {n})")
    _check_refinement(spec, C, refinement)

    part = BlockPartition(spec)
    k = spec.k
    lams, sizes = spec.lambdas, spec.sizes
    results: dict[tuple[int, int], SolutionSet] = {}
    violations = []
    for a in range(k):
        for b in range(k):
            eq = BlockEquation(lams[a], lams[b], sizes[a], sizes[b], part.block(C, a, b))
            sub = refinement if (a == b and refinement is not Refinement.GENERAL) else Refinement.GENERAL
            res = solve_block(eq, sub)
            results[a, b] = res
            if not res.compatible:
                violations.extend(v.at((a + 1, b + 1)) for v in res.violated_conditions)

    field = Field.COMPLEX if refinement is Refinement.GENERAL else Field.REAL
    if violations:
        return SolutionSet.incompatible(violations, field)

    x = part.assemble({ab: res.particular for ab, res in results.items()})
    basis = []
    if refinement is Refinement.GENERAL:
        for (a, b), res in sorted(results.items()):
            basis.extend(part.embed(e, a, b) for e in res.basis)
        return SolutionSet(True, x, basis, field)

    if refinement is Refinement.HERMITIAN:
        x = (x + conj_transpose(x)) / 2
    else:
        x = (x + x.T) / 2
    for (a, b), res in sorted(results.items()):
        if a == b:
            basis.extend(part.embed(e, a, a) for e in res.basis)
        elif a < b:
            for e in res.basis:
                if refinement is Refinement.HERMITIAN:
                    basis.append(part.embed(e, a, b) + part.embed(conj_transpose(e), b, a))
                    ie = e * I
                    basis.append(part.embed(ie, a, b) + part.embed(conj_transpose(ie), b, a))
                else:
                    basis.append(part.embed(e, a, b) + part.embed(e.T, b, a))
    return SolutionSet(True, x, basis, field)


def dim_solutions(spec: JordanSpec, refinement=Refinement.GENERAL) -> int:
    refinement = Refinement(refinement)
    ks = k_set(spec)
    sizes = spec.sizes
    if refinement is Refinement.SYMMETRIC:
        if not spec.is_real():
            raise PreconditionError("symmetric dimension formula needs a real Jordan matrix")
        return sum(
            (sizes[a - 1] + 1) // 2 if a == b else min(sizes[a - 1], sizes[b - 1])
            for a, b in ks
            if a <= b
        )
    return sum(min(sizes[a - 1], sizes[b - 1]) for a, b in ks)


def has_positive_definite_solution(spec: JordanSpec) -> bool:
    return all(size == 1 and lam.is_imaginary() for lam, size in spec.blocks)


def has_invertible_solution(spec: JordanSpec) -> bool:
    eig = spec.eigenvalues()
    for lam in eig:
        partner = -lam.conj()
        if partner not in eig or weyr(spec, lam).w != weyr(spec, partner).w:
            return False
    return True


def invertible_grouping(spec: JordanSpec) -> list[tuple[Scalar, ...]]:
    """Eigenvalue groups used by the invertible construction.

    Pairs ``(mu, -conj(mu))`` with nonzero real part come first, ordered by
    first occurrence of either member; purely imaginary eigenvalues follow as
    singleton groups.
    """
    groups, imaginary, used = [], [], set()
    for lam in spec.eigenvalues():
        if lam in used:
            continue
        if lam.is_imaginary():
            imaginary.append((lam,))
            used.add(lam)
        else:
            partner = -lam.conj()
            groups.append((lam, partner))
            used.update((lam, partner))
    return groups + imaginary


def construct_invertible_solution(spec: JordanSpec) -> Matrix:
    """An invertible solution of ``J^H X + X J = O``.

    Blocks are regrouped by eigenvalue (largest first inside a group) into a
    permuted Jordan matrix ``B``; ``B`` gets anti-diagonal ``Y`` blocks on
    purely imaginary groups and ``Y``-coupled off-diagonal blocks on each
    ``(mu, -conj(mu))`` pair; the permutation is then undone by congruence.
    """
    if not has_invertible_solution(spec):
        raise PreconditionError("no invertible solution: Weyr characteristics do not pair up")

    def members(lam):
        idx = [a for a, mu in enumerate(spec.lambdas) if mu == lam]
        return sorted(idx, key=lambda a: -spec.sizes[a])

    order, pieces = [], []
    for group in invertible_grouping(spec):
        if len(group) == 1:
            idx = members(group[0])
            order.extend(idx)
            pieces.append(direct_sum([y_matrix(1, spec.sizes[a], spec.sizes[a]) for a in idx]))
        else:
            first, second = members(group[0]), members(group[1])
            order.extend(first + second)
            coupling = direct_sum([y_matrix(1, spec.sizes[a], spec.sizes[a]) for a in first])
            m = coupling.rows
            z = Matrix.zeros(m, m)
            pieces.append(_block2(z, coupling, coupling, z))
    y = direct_sum(pieces)

    # P e_j = e_{sigma(j)}: column j of P picks the A-coordinate of B's j-th coordinate
    offsets = spec.offsets
    sigma = [offsets[a] + t for a in order for t in range(spec.sizes[a])]
    n = spec.total
    p = Matrix.from_function(n, n, lambda i, j: 1 if i == sigma[j] else 0)
    return congruence(inverse(p), y)


def _block2(a: Matrix, b: Matrix, c: Matrix, d: Matrix) -> Matrix:
    n = a.rows + c.rows
    m = a.cols + b.cols

    def entry(i, j):
        if i < a.rows:
            return a[i, j] if j < a.cols else b[i, j - a.cols]
        return c[i - a.rows, j] if j < a.cols else d[i - a.rows, j - a.cols]

    return Matrix.from_function(n, m, entry)
