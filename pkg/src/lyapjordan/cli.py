"""Command-line front end.

Exit codes: 0 success, 1 input or validation error, 2 incompatible
equation, 3 matrix could not be decomposed.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from pathlib import Path

from .block import BlockEquation, PreconditionError, Refinement, SolutionSet, solve_block
from .documents import (
    DocumentError,
    load_json,
    matrix_from_doc,
    matrix_to_doc,
    scalar_to_doc,
    solution_from_doc,
    solution_to_doc,
    spec_from_doc,
    spec_to_doc,
)
from .exact import Matrix, Scalar, ShapeError, conj_transpose, rank
from .general import (
    Decomposition,
    InvalidDecompositionError,
    UndecomposableError,
    affine_sets_equal,
    decompose,
    oracle_solve,
    solve_general,
    validate_decomposition,
    vectorized_operator,
)
from .jordan import (
    construct_invertible_solution,
    dim_solutions,
    has_invertible_solution,
    has_positive_definite_solution,
    k_set,
    lyapunov_residual,
    solve_jordan,
)
from .sampling import random_matrix, random_scalar
from .structured import JordanSpec, assemble, jordan_block, weyr

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_INCOMPATIBLE = 2
EXIT_UNDECOMPOSABLE = 3

MAX_VERIFY_SIZE = 8


class CliError(Exception):
    def __init__(self, message: str, code: int = EXIT_INPUT):
        super().__init__(message)
        self.code = code


def _emit(doc, output: str | None):
    text = json.dumps(doc, indent=2) + "\n"
    if output:
        Path(output).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _scalar_arg(text: str) -> Scalar:
    try:
        return Scalar.parse(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(str(exc))


def _positive(text: str) -> int:
    n = int(text)
    if n < 1:
        raise argparse.ArgumentTypeError("must be a positive integer")
    return n


def _load_matrix(path) -> Matrix:
    return matrix_from_doc(load_json(path))


def _check_emitted(doc: dict, residual) -> SolutionSet:
    """Re-parse an emitted document and insist on exactly zero residuals."""
    sol = solution_from_doc(json.loads(json.dumps(doc)))
    if sol.compatible:
        if not residual(sol.particular, True).is_zero():
            raise RuntimeError("particular solution failed the residual re-check")
        for b in sol.basis:
            if not residual(b, False).is_zero():
                raise RuntimeError("basis element failed the residual re-check")
    return sol


def _finish(sol: SolutionSet, residual, output) -> int:
    doc = solution_to_doc(sol)
    _check_emitted(doc, residual)
    _emit(doc, output)
    return EXIT_OK if sol.compatible else EXIT_INCOMPATIBLE


# subcommands ----------------------------------------------------------------


def cmd_solve_block(args) -> int:
    c = _load_matrix(args.rhs)
    if c.shape != (args.r, args.s):
        raise CliError(f"rhs is {c.rows}x{c.cols}, expected {args.r}x{args.s}")
    eq = BlockEquation(args.lam, args.mu, args.r, args.s, c)
    sol = solve_block(eq, args.refinement)
    if not sol.compatible:
        sol = SolutionSet.incompatible([v.at((1, 1)) for v in sol.violated_conditions], sol.field)

    ja = conj_transpose(jordan_block(eq.lam, eq.r))
    jb = jordan_block(eq.mu, eq.s)

    def residual(x, inhomogeneous):
        res = ja @ x + x @ jb
        return res + c if inhomogeneous else res

    return _finish(sol, residual, args.output)


def _decomposition(args, a: Matrix) -> Decomposition:
    if (args.jordan is None) != (args.transform is None):
        raise CliError("--jordan and --transform must be given together")
    if args.jordan is None:
        try:
            return decompose(a)
        except UndecomposableError as exc:
            raise CliError(
                f"no Jordan decomposition supplied (--jordan/--transform) and the exact decomposer failed: {exc}",
                EXIT_UNDECOMPOSABLE,
            ) from None
    d = Decomposition(a, _load_matrix(args.transform), spec_from_doc(load_json(args.jordan)))
    if not validate_decomposition(d):
        raise CliError("invalid decomposition: A P != P J or P is singular")
    return d


def cmd_solve(args) -> int:
    a = _load_matrix(args.matrix)
    c = _load_matrix(args.rhs)
    if not a.is_square() or c.shape != a.shape:
        raise CliError(f"matrix {a.shape} and rhs {c.shape} must be equal square shapes")
    d = _decomposition(args, a)
    sol = solve_general(d, c, args.refinement)

    def residual(x, inhomogeneous):
        return lyapunov_residual(a, x, c if inhomogeneous else None)

    return _finish(sol, residual, args.output)


def cmd_solve_jordan(args) -> int:
    spec = spec_from_doc(load_json(args.jordan))
    c = _load_matrix(args.rhs)
    sol = solve_jordan(spec, c, args.refinement)
    j = assemble(spec)

    def residual(x, inhomogeneous):
        return lyapunov_residual(j, x, c if inhomogeneous else None)

    return _finish(sol, residual, args.output)


def analyze_spec(spec: JordanSpec) -> dict:
    invertible = has_invertible_solution(spec)
    pd = has_positive_definite_solution(spec)
    return {
        "spec": spec_to_doc(spec),
        "k_set": [list(p) for p in k_set(spec)],
        "dimensions": {
            "general": dim_solutions(spec, Refinement.GENERAL),
            "hermitian": dim_solutions(spec, Refinement.HERMITIAN),
            "symmetric": dim_solutions(spec, Refinement.SYMMETRIC) if spec.is_real() else None,
        },
        "invertible": {
            "exists": invertible,
            "witness": matrix_to_doc(construct_invertible_solution(spec)) if invertible else None,
        },
        "positive_definite": {
            "exists": pd,
            "witness": matrix_to_doc(Matrix.identity(spec.total)) if pd else None,
        },
        "weyr": [
            {"eigenvalue": scalar_to_doc(lam), "w": list(weyr(spec, lam).w)} for lam in spec.eigenvalues()
        ],
    }


def cmd_analyze(args) -> int:
    spec = spec_from_doc(load_json(args.jordan))
    _emit(analyze_spec(spec), args.output)
    return EXIT_OK


def _elements(sol: SolutionSet, rng: random.Random, count: int):
    yield sol.particular
    for _ in range(count):
        real = sol.field.value == "real"
        yield sol.element([random_scalar(rng, 3, 2, real=real) for _ in sol.basis])


def verify_report(a: Matrix, c: Matrix, d: Decomposition | None, seed: int = 0, trials: int = 3) -> dict:
    n = a.rows
    rng = random.Random(seed)
    op_rank = rank(vectorized_operator(a))
    report = {
        "size": n,
        "operator_rank": op_rank,
        "nullity": n * n - op_rank,
        "predicted_rank": None,
        "decomposition": d is not None,
        "checks": [],
    }
    checks = report["checks"]
    if d is not None:
        predicted = n * n - dim_solutions(d.spec)
        report["predicted_rank"] = predicted
        checks.append({"name": "rank corollary", "passed": predicted == op_rank})

    cases = [("given rhs", c)]
    for t in range(trials):
        if t % 2 == 0:
            x = random_matrix(rng, n, n)
            cases.append((f"trial {t} (compatible)", -lyapunov_residual(a, x)))
        else:
            cases.append((f"trial {t} (arbitrary)", random_matrix(rng, n, n)))
    for name, rhs in cases:
        oracle = oracle_solve(a, rhs)
        ok = True
        if oracle.compatible:
            ok = all(lyapunov_residual(a, x, rhs).is_zero() for x in _elements(oracle, rng, 2))
        entry = {"name": name, "oracle_compatible": oracle.compatible, "oracle_residual_zero": ok}
        if d is not None:
            structured = solve_general(d, rhs)
            entry["sets_equal"] = affine_sets_equal(structured, oracle)
            ok = ok and entry["sets_equal"]
        entry["passed"] = ok
        checks.append(entry)
    report["passed"] = all(ch["passed"] for ch in checks)
    return report


def cmd_verify(args) -> int:
    a = _load_matrix(args.matrix)
    c = _load_matrix(args.rhs)
    if not a.is_square() or c.shape != a.shape:
        raise CliError(f"matrix {a.shape} and rhs {c.shape} must be equal square shapes")
    if a.rows > MAX_VERIFY_SIZE:
        raise CliError(f"verify is limited to r <= {MAX_VERIFY_SIZE}, got r = {a.rows}")
    try:
        d = _decomposition(args, a)
    except CliError as exc:
        if exc.code != EXIT_UNDECOMPOSABLE:
            raise
        d = None
    report = verify_report(a, c, d, args.seed, args.trials)
    _emit(report, args.output)
    return EXIT_OK if report["passed"] else EXIT_INPUT


# parser ----------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lyapjordan",
        description="Exact solver for A^H X + X A + C = O via Jordan structure.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, refinement=True):
        p.add_argument("--output", help="write the JSON document here instead of stdout")
        if refinement:
            p.add_argument(
                "--refinement",
                choices=[r.value for r in Refinement],
                default=Refinement.GENERAL.value,
            )

    p = sub.add_parser("solve-block", help="J_r(lambda)^H X + X J_s(mu) + C = O")
    p.add_argument("--lambda", dest="lam", type=_scalar_arg, required=True)
    p.add_argument("--mu", type=_scalar_arg, required=True)
    p.add_argument("--r", type=_positive, required=True)
    p.add_argument("--s", type=_positive, required=True)
    p.add_argument("--rhs", required=True)
    common(p)
    p.set_defaults(func=cmd_solve_block)

    p = sub.add_parser("solve", help="general A with a supplied or computed Jordan decomposition")
    p.add_argument("--matrix", required=True)
    p.add_argument("--rhs", required=True)
    p.add_argument("--jordan")
    p.add_argument("--transform")
    common(p)
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("solve-jordan", help="A given directly as a Jordan matrix")
    p.add_argument("--jordan", required=True)
    p.add_argument("--rhs", required=True)
    common(p)
    p.set_defaults(func=cmd_solve_jordan)

    p = sub.add_parser("analyze", help="dimensions, invertible and definite solutions of a Jordan matrix")
    p.add_argument("--jordan", required=True)
    common(p, refinement=False)
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("verify", help="cross-check against the Kronecker oracle")
    p.add_argument("--matrix", required=True)
    p.add_argument("--rhs", required=True)
    p.add_argument("--jordan")
    p.add_argument("--transform")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--trials", type=int, default=3)
    common(p, refinement=False)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code
    except (DocumentError, ShapeError, PreconditionError, InvalidDecompositionError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
