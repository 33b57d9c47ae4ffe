"""Acceptance suite: one test per criterion, each with its runtime budget.

A one-line PASS/FAIL summary per criterion is printed at the end of the
pytest run.
"""

import itertools
import random
from fractions import Fraction

from criteria import criterion
from helpers import (
    A_DENSE,
    EIGEN_POOL,
    P_DENSE,
    SPEC_MIXED,
    cmat,
    mixed_homogeneous_families,
    mixed_particular,
    mixed_compatible_rhs,
    dense_homogeneous_family,
    dense_conditions,
    dense_particular,
    dense_compatible_rhs,
    random_spec,
    weyr_by_rank,
)
from lyapjordan.block import (
    BlockEquation,
    Field,
    Refinement,
    SolutionSet,
    classify_unique_solution,
    solve_block,
)
from lyapjordan.exact import (
    I,
    Definiteness,
    Matrix,
    Scalar,
    conj_transpose,
    definiteness,
    determinant,
    inverse,
    rank,
)
from lyapjordan.general import (
    Decomposition,
    affine_sets_equal,
    oracle_solve,
    solve_general,
    validate_decomposition,
    vectorized_operator,
)
from lyapjordan.jordan import (
    construct_invertible_solution,
    dim_solutions,
    has_invertible_solution,
    has_positive_definite_solution,
    k_set,
    lyapunov_residual,
    solve_jordan,
)
from lyapjordan.sampling import random_invertible, random_matrix, random_scalar
from lyapjordan.structured import JordanSpec, assemble, pascal_ext

SEED = 20240601


def _entries(c):
    return {(i + 1, j + 1): c[i, j] for i in range(c.rows) for j in range(c.cols)}


def _sample(sol, rng, count):
    real = sol.field is Field.REAL
    for _ in range(count):
        yield sol.element([random_scalar(rng, real=real) for _ in sol.basis])


# 1 ---------------------------------------------------------------------------


def _r3_general(rng, satisfy):
    v = _entries(random_matrix(rng, 3, 3))
    if satisfy:
        v[1, 1] = Scalar(0)
        v[2, 1] = v[1, 2]
        v[3, 1] = v[2, 2] - v[1, 3]
    return cmat(v, 3)


def _r3_hermitian(rng, satisfy):
    c = random_matrix(rng, 3, 3)
    v = _entries(c + conj_transpose(c))
    if satisfy:
        v[1, 1] = Scalar(0)
        v[1, 2] = v[2, 1] = Scalar(v[1, 2].re)
        v[2, 2] = Scalar(2 * v[1, 3].re)
    return cmat(v, 3)


def _r3_symmetric(rng, satisfy):
    c = random_matrix(rng, 3, 3, real=True)
    v = _entries(c + c.T)
    if satisfy:
        v[1, 1] = Scalar(0)
        v[2, 2] = 2 * v[1, 3]
    return cmat(v, 3)


@criterion(1, "golden r=s=3 block example (conditions, particular, Hermitian, symmetric)", 1.0)
def test_criterion_01_golden_block_example():
    rng = random.Random(SEED + 1)
    eq = lambda c: BlockEquation(0, 0, 3, 3, c)  # noqa: E731
    y1 = Matrix.from_rows([[0, 0, 1], [0, -1, 0], [1, 0, 0]])
    e33 = Matrix.unit(3, 3, 2, 2)
    counts = {"sat": 0, "viol": 0}
    for k in range(20):
        satisfy = k % 2 == 0

        # general
        c = _r3_general(rng, satisfy)
        cc = lambda i, j: c[i - 1, j - 1]  # noqa: E731
        expected = cc(1, 1) == 0 and cc(2, 1) - cc(1, 2) == 0 and cc(3, 1) - cc(2, 2) + cc(1, 3) == 0
        sol = solve_block(eq(c))
        assert sol.compatible == expected == satisfy
        if expected:
            display = Matrix.from_rows([
                [-cc(1, 2), -cc(1, 3), 0],
                [cc(1, 3) - cc(2, 2), -cc(2, 3), 0],
                [-cc(3, 2) + cc(2, 3), -cc(3, 3), 0],
            ])
            assert sol.particular == display
            p1, p2, p3 = (random_scalar(rng) for _ in range(3))
            family = display + Matrix.from_rows([[0, 0, p1], [0, -p1, p2], [p1, -p2, p3]])
            assert eq(c).residual(family).is_zero()
            assert all(eq(c).residual(x).is_zero() for x in _sample(sol, rng, 2))

        # Hermitian
        c = _r3_hermitian(rng, satisfy)
        cc = lambda i, j: c[i - 1, j - 1]  # noqa: E731
        expected = cc(1, 1) == 0 and cc(1, 2).im == 0 and 2 * cc(1, 3).re - cc(2, 2) == 0
        sol = solve_block(eq(c), Refinement.HERMITIAN)
        assert sol.compatible == expected == satisfy
        if expected:
            im23 = Scalar(0, cc(2, 3).im)
            display = Matrix.from_rows([
                [-cc(1, 2), -cc(1, 3), -im23],
                [-cc(1, 3).conj(), -Scalar(cc(2, 3).re), -cc(3, 3) / 2],
                [im23, -cc(3, 3) / 2, 0],
            ])
            family = SolutionSet(True, display, [y1, Matrix.from_rows([[0, 0, 0], [0, 0, I], [0, -I, 0]]), e33],
                                 Field.REAL)
            assert affine_sets_equal(sol, family)
            assert all(eq(c).residual(x).is_zero() for x in _sample(sol, rng, 2))

        # symmetric
        c = _r3_symmetric(rng, satisfy)
        cc = lambda i, j: c[i - 1, j - 1]  # noqa: E731
        expected = cc(1, 1) == 0 and 2 * cc(1, 3) - cc(2, 2) == 0
        sol = solve_block(eq(c), Refinement.SYMMETRIC)
        assert sol.compatible == expected == satisfy
        if expected:
            display = Matrix.from_rows([
                [-cc(1, 2), -cc(1, 3), 0],
                [-cc(1, 3), -cc(2, 3), -cc(3, 3) / 2],
                [0, -cc(3, 3) / 2, 0],
            ])
            family = SolutionSet(True, display, [y1, e33], Field.REAL)
            assert affine_sets_equal(sol, family)
            assert all(eq(c).residual(x).is_zero() for x in _sample(sol, rng, 2))
        counts["sat" if satisfy else "viol"] += 1
    return f"{counts['sat']} satisfying / {counts['viol']} violating C per refinement"


# 2 ---------------------------------------------------------------------------


@criterion(2, "homogeneous Jordan example J1(0)+J2(0)+J1(2): dims 5/5/3 and displayed families", 1.0)
def test_criterion_02_homogeneous_jordan_example():
    general, hermitian, symmetric = mixed_homogeneous_families()
    zero = Matrix.zeros(4)
    assert dim_solutions(SPEC_MIXED, Refinement.GENERAL) == 5
    assert dim_solutions(SPEC_MIXED, Refinement.HERMITIAN) == 5
    assert dim_solutions(SPEC_MIXED, Refinement.SYMMETRIC) == 3
    for refinement, display in [(Refinement.GENERAL, general), (Refinement.HERMITIAN, hermitian),
                                (Refinement.SYMMETRIC, symmetric)]:
        sol = solve_jordan(SPEC_MIXED, zero, refinement)
        assert sol.dimension == display.dimension
        assert affine_sets_equal(sol, display)


# 3 ---------------------------------------------------------------------------


@criterion(3, "non-homogeneous Jordan example: five conditions and particular solution", 1.0)
def test_criterion_03_nonhomogeneous_jordan_example():
    rng = random.Random(SEED + 3)
    for k in range(20):
        c = mixed_compatible_rhs(rng) if k % 2 == 0 else random_matrix(rng, 4, 4)
        cc = lambda i, j: c[i - 1, j - 1]  # noqa: E731
        conditions = [cc(1, 1), cc(1, 2), cc(2, 1), cc(2, 2), cc(2, 3) - cc(3, 2)]
        sol = solve_jordan(SPEC_MIXED, c)
        assert sol.compatible == all(x == 0 for x in conditions)
        if sol.compatible:
            assert sol.particular == mixed_particular(c)
    for refinement, real in [(Refinement.HERMITIAN, False), (Refinement.SYMMETRIC, True)]:
        c = mixed_compatible_rhs(rng, real=real, hermitian=True)
        assert solve_jordan(SPEC_MIXED, c, refinement).particular == mixed_particular(c, refined=True)


# 4 ---------------------------------------------------------------------------


@criterion(4, "general-case example: decomposition, homogeneous family, conditions and particular", 1.0)
def test_criterion_04_general_case_example():
    d = Decomposition(A_DENSE, P_DENSE, SPEC_MIXED)
    assert validate_decomposition(d)
    hom = solve_general(d, Matrix.zeros(4))
    assert affine_sets_equal(hom, dense_homogeneous_family())
    rng = random.Random(SEED + 4)
    for k in range(20):
        c = dense_compatible_rhs(rng) if k % 2 == 0 else random_matrix(rng, 4, 4)
        sol = solve_general(d, c)
        assert sol.compatible == all(x == 0 for x in dense_conditions(c))
        if sol.compatible:
            assert sol.particular == dense_particular(c)
            assert affine_sets_equal(sol, SolutionSet(True, dense_particular(c), hom.basis))


# 5 ---------------------------------------------------------------------------


@criterion(5, "oracle equivalence on 200 seeded instances", 60.0)
def test_criterion_05_oracle_equivalence():
    rng = random.Random(SEED + 5)
    compatible = incompatible = 0
    for k in range(200):
        spec = random_spec(rng, 5, EIGEN_POOL)
        n = spec.total
        p = Matrix.identity(n) if k % 4 == 0 else random_invertible(rng, n)
        a = p @ assemble(spec) @ inverse(p)
        if k % 3 == 0:
            c = random_matrix(rng, n, n)
        else:
            c = -lyapunov_residual(a, random_matrix(rng, n, n))
        structured = solve_general(Decomposition(a, p, spec), c)
        oracle = oracle_solve(a, c)
        assert affine_sets_equal(structured, oracle), spec
        if oracle.compatible:
            compatible += 1
        else:
            incompatible += 1
    assert compatible and incompatible
    return f"{compatible} compatible, {incompatible} incompatible"


# 6 ---------------------------------------------------------------------------


@criterion(6, "rank of the vectorized operator equals r^2 - sum over K of min sizes", 30.0)
def test_criterion_06_rank_corollary():
    rng = random.Random(SEED + 6)
    for k in range(60):
        spec = random_spec(rng, 5, EIGEN_POOL)
        n = spec.total
        p = random_invertible(rng, n)
        a = p @ assemble(spec) @ inverse(p)
        predicted = n * n - sum(min(spec.sizes[x - 1], spec.sizes[y - 1]) for x, y in k_set(spec))
        assert rank(vectorized_operator(a)) == predicted
    return "60 specs"


# 7 ---------------------------------------------------------------------------


@criterion(7, "Pascal recursion and det = y^(r(r-1)) for r <= 6", 5.0)
def test_criterion_07_pascal_identities():
    rng = random.Random(SEED + 7)
    for r in range(1, 7):
        for _ in range(10):
            y = Scalar(Fraction(rng.choice([-1, 1]) * rng.randint(1, 9), rng.randint(1, 9)))
            for s in (r, r + 1):
                psi = pascal_ext(r, s, y)
                at = lambda i, j: psi[i - 1, j - 1] if i >= 1 and j >= 1 else Scalar(0)  # noqa: E731
                assert at(1, 1) == 1
                for i in range(1, r + 1):
                    for j in range(1, s + 1):
                        if (i, j) != (1, 1):
                            assert at(i, j) == y * at(i - 1, j) + y * at(i, j - 1)
            assert determinant(pascal_ext(r, r, y)) == y ** (r * (r - 1))


# 8 ---------------------------------------------------------------------------


@criterion(8, "definiteness of the unique solution for real nu and PD / PSD right-hand sides", 30.0)
def test_criterion_08_definiteness():
    rng = random.Random(SEED + 8)
    checked = 0
    for nu in [Fraction(1), Fraction(-1), Fraction(2), Fraction(-2), Fraction(1, 2), Fraction(-1, 2)]:
        strict = Definiteness.NEGATIVE_DEFINITE if nu > 0 else Definiteness.POSITIVE_DEFINITE
        for r in range(1, 5):
            for _ in range(10):
                b = random_matrix(rng, r, r)
                c = conj_transpose(b) @ b + Matrix.identity(r) / 4
                assert definiteness(c) is Definiteness.POSITIVE_DEFINITE
                # lam = mu with real part nu / 2 gives lam + conj(mu) = nu
                lam = Scalar(nu / 2, rng.randint(-3, 3))
                x = solve_block(BlockEquation(lam, lam, r, r, c)).particular
                assert definiteness(x) is strict
                assert classify_unique_solution(nu, c) is strict
                # rank-one PSD with c11 != 0
                v = random_matrix(rng, r, 1)
                if v[0, 0] == 0:
                    v = v + Matrix.unit(r, 1, 0, 0)
                psd = v @ conj_transpose(v)
                assert psd[0, 0] != 0
                x = solve_block(BlockEquation(lam, lam, r, r, psd)).particular
                assert definiteness(x) is strict
                assert classify_unique_solution(nu, psd) is strict
                checked += 2
    return f"{checked} right-hand sides"


# 9 ---------------------------------------------------------------------------


def _weyr_condition(spec) -> bool:
    """Independent check: rank-based Weyr numbers of lam and -conj(lam) agree."""
    a = assemble(spec)
    for lam in spec.eigenvalues():
        if weyr_by_rank(a, lam) != weyr_by_rank(a, -lam.conj()):
            return False
    return True


@criterion(9, "invertible solutions: construction when the Weyr condition holds, none otherwise", 60.0,
           note="negative side is a sampling check, not a proof")
def test_criterion_09_invertible_solutions():
    rng = random.Random(SEED + 9)
    holding, violating = [], []
    while len(holding) < 30 or len(violating) < 30:
        spec = random_spec(rng, 6, EIGEN_POOL)
        if rng.random() < 0.5:
            mirrored = spec.blocks + tuple((-lam.conj(), s) for lam, s in spec.blocks if not lam.is_imaginary())
            if sum(s for _, s in mirrored) <= 6:
                spec = JordanSpec(mirrored)
        bucket = holding if _weyr_condition(spec) else violating
        if len(bucket) < 30:
            bucket.append(spec)

    for spec in holding:
        assert has_invertible_solution(spec)
        x = construct_invertible_solution(spec)
        assert determinant(x) != 0
        assert lyapunov_residual(assemble(spec), x).is_zero()

    samples = 0
    for spec in violating:
        assert not has_invertible_solution(spec)
        hom = oracle_solve(assemble(spec), Matrix.zeros(spec.total))
        candidates = list(hom.basis) + list(_sample(hom, rng, 100))
        for x in candidates:
            assert determinant(x) == 0
        samples += len(candidates)
    return f"{len(holding)} constructed, {len(violating)} rejected, {samples} sampled solutions singular"


# 10 --------------------------------------------------------------------------


def _all_specs(max_total, pool):
    for total in range(1, max_total + 1):
        for cut in itertools.product([False, True], repeat=total - 1):
            sizes, run = [], 1
            for c in cut:
                if c:
                    sizes.append(run)
                    run = 1
                else:
                    run += 1
            sizes.append(run)
            for lams in itertools.product(pool, repeat=len(sizes)):
                yield JordanSpec(tuple(zip(lams, sizes)))


@criterion(10, "positive definite solution exists iff all blocks 1x1 with imaginary eigenvalues", 30.0)
def test_criterion_10_positive_definite_existence():
    rng = random.Random(SEED + 10)
    pool = [Scalar(0), Scalar(1), Scalar(-1), I, -I]
    positives = negatives = 0
    for spec in _all_specs(3, pool):
        expected = all(size == 1 and lam.re == 0 for lam, size in spec.blocks)
        assert has_positive_definite_solution(spec) == expected
        n = spec.total
        a = assemble(spec)
        if expected:
            positives += 1
            assert lyapunov_residual(a, Matrix.identity(n)).is_zero()
            continue
        negatives += 1
        herm = solve_jordan(spec, Matrix.zeros(n), Refinement.HERMITIAN)
        for x in list(herm.basis) + list(_sample(herm, rng, 10)):
            assert lyapunov_residual(a, x).is_zero()
            if not x.is_zero():
                assert definiteness(x) is not Definiteness.POSITIVE_DEFINITE
        # some diagonal entry vanishes on the whole family: the first row of a
        # block of size >= 2, or any block with nonzero real part
        forced = [off for off, (lam, size) in zip(spec.offsets, spec.blocks) if size >= 2 or lam.re != 0]
        assert forced
        assert any(all(b[off, off] == 0 for b in herm.basis) for off in forced)
    return f"{positives} positive, {negatives} negative specs"
