"""Exact arithmetic over the Gaussian rationals Q(i).

Scalars carry two :class:`fractions.Fraction` parts; matrices are immutable
row-major tuples of scalars. Rank, nullspace, determinant and linear solves
use fraction-free (Bareiss) elimination on Gaussian-integer rows, so no
rounding ever enters.
"""

from __future__ import annotations

import enum
import itertools
import math
import re
from fractions import Fraction
from typing import Iterable, Sequence

__all__ = [
    "Scalar",
    "Matrix",
    "ShapeError",
    "Definiteness",
    "add",
    "mul",
    "conj_transpose",
    "direct_sum",
    "kron",
    "rank",
    "rank_and_nullspace",
    "determinant",
    "inverse",
    "solve_linear",
    "is_hermitian",
    "is_real_symmetric",
    "definiteness",
    "congruence",
    "span_rank",
]


class ShapeError(ValueError):
    """Operands have incompatible shapes."""


_NUM = r"\d+(?:/\d+)?"
_IMAG_ONLY = re.compile(rf"([+-]?)({_NUM})?\*?i")
_COMPLEX = re.compile(rf"([+-]?{_NUM})(?:([+-])({_NUM})?\*?i)?")


def _frac(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, str)):
        return Fraction(x)
    if isinstance(x, float):
        raise TypeError("floats are not accepted; pass int, Fraction or str")
    return Fraction(x)


class Scalar:
    """Gaussian rational ``re + im*i`` with exact rational parts."""

    __slots__ = ("re", "im")

    re: Fraction
    im: Fraction

    def __init__(self, re=0, im=0):
        object.__setattr__(self, "re", _frac(re))
        object.__setattr__(self, "im", _frac(im))

    def __setattr__(self, name, value):
        raise AttributeError("Scalar is immutable")

    @classmethod
    def _raw(cls, re: Fraction, im: Fraction) -> "Scalar":
        s = object.__new__(cls)
        object.__setattr__(s, "re", re)
        object.__setattr__(s, "im", im)
        return s

    @classmethod
    def coerce(cls, x) -> "Scalar":
        if isinstance(x, Scalar):
            return x
        if isinstance(x, complex):
            raise TypeError("complex floats are not accepted")
        if isinstance(x, str):
            return cls.parse(x)
        return cls._raw(_frac(x), Fraction(0))

    @classmethod
    def parse(cls, text: str) -> "Scalar":
        """Parse ``"3"``, ``"-1/2"``, ``"2i"``, ``"1-3/4i"``, ``"-i"`` ..."""
        s = text.strip().replace(" ", "").lower()
        m = _IMAG_ONLY.fullmatch(s)
        if m:
            sign, mag = m.groups()
            im = Fraction(mag) if mag else Fraction(1)
            return cls._raw(Fraction(0), -im if sign == "-" else im)
        m = _COMPLEX.fullmatch(s)
        if m:
            re_part, sign, mag = m.groups()
            im = Fraction(0)
            if sign:
                im = Fraction(mag) if mag else Fraction(1)
                if sign == "-":
                    im = -im
            return cls._raw(Fraction(re_part), im)
        raise ValueError(f"cannot parse Gaussian rational from {text!r}")

    # arithmetic -----------------------------------------------------------

    def __add__(self, other):
        o = _coerce_or_none(other)
        if o is None:
            return NotImplemented
        return Scalar._raw(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, other):
        o = _coerce_or_none(other)
        if o is None:
            return NotImplemented
        return Scalar._raw(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        o = _coerce_or_none(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = _coerce_or_none(other)
        if o is None:
            return NotImplemented
        a, b, c, d = self.re, self.im, o.re, o.im
        if not b and not d:
            return Scalar._raw(a * c, b)
        return Scalar._raw(a * c - b * d, a * d + b * c)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = _coerce_or_none(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = _coerce_or_none(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __neg__(self):
        return Scalar._raw(-self.re, -self.im)

    def __pos__(self):
        return self

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inverse() ** (-n)
        result = ONE
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def inverse(self) -> "Scalar":
        n = self.norm()
        if not n:
            raise ZeroDivisionError("division by zero Scalar")
        return Scalar._raw(self.re / n, -self.im / n)

    def conj(self) -> "Scalar":
        return Scalar._raw(self.re, -self.im)

    def norm(self) -> Fraction:
        """Squared modulus ``re**2 + im**2``."""
        return self.re * self.re + self.im * self.im

    def is_zero(self) -> bool:
        return not self.re and not self.im

    def is_real(self) -> bool:
        return not self.im

    def is_imaginary(self) -> bool:
        """True when the real part vanishes (zero counts as purely imaginary)."""
        return not self.re

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __eq__(self, other):
        o = _coerce_or_none(other)
        if o is None:
            return NotImplemented
        return self.re == o.re and self.im == o.im

    def __hash__(self):
        if not self.im:
            return hash(self.re)
        return hash((self.re, self.im))

    def __repr__(self):
        return f"Scalar({str(self)!r})"

    def __str__(self):
        if not self.im:
            return str(self.re)
        im = self.im
        mag = "" if abs(im) == 1 else str(abs(im))
        if not self.re:
            return f"{'-' if im < 0 else ''}{mag}i"
        return f"{self.re}{'-' if im < 0 else '+'}{mag}i"


def _coerce_or_none(x):
    if isinstance(x, Scalar):
        return x
    if isinstance(x, (int, Fraction)):
        return Scalar._raw(Fraction(x), Fraction(0))
    return None


ZERO = Scalar(0)
ONE = Scalar(1)
I = Scalar(0, 1)


class Matrix:
    """Immutable dense ``rows x cols`` matrix of :class:`Scalar`."""

    __slots__ = ("rows", "cols", "entries")

    rows: int
    cols: int
    entries: tuple

    def __init__(self, rows: int, cols: int, entries: Iterable):
        entries = tuple(Scalar.coerce(e) for e in entries)
        if rows < 0 or cols < 0:
            raise ShapeError("negative dimension")
        if len(entries) != rows * cols:
            raise ShapeError(
                f"expected {rows * cols} entries for {rows}x{cols}, got {len(entries)}"
            )
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "cols", cols)
        object.__setattr__(self, "entries", entries)

    def __setattr__(self, name, value):
        raise AttributeError("Matrix is immutable")

    @classmethod
    def _raw(cls, rows: int, cols: int, entries: tuple) -> "Matrix":
        m = object.__new__(cls)
        object.__setattr__(m, "rows", rows)
        object.__setattr__(m, "cols", cols)
        object.__setattr__(m, "entries", entries)
        return m

    # constructors ---------------------------------------------------------

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence]) -> "Matrix":
        rows = [list(r) for r in rows]
        if not rows:
            raise ShapeError("empty matrix")
        ncols = len(rows[0])
        if any(len(r) != ncols for r in rows):
            raise ShapeError("ragged rows")
        return cls(len(rows), ncols, itertools.chain.from_iterable(rows))

    @classmethod
    def zeros(cls, rows: int, cols: int | None = None) -> "Matrix":
        cols = rows if cols is None else cols
        return cls._raw(rows, cols, (ZERO,) * (rows * cols))

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls._raw(n, n, tuple(ONE if i == j else ZERO for i in range(n) for j in range(n)))

    @classmethod
    def unit(cls, rows: int, cols: int, i: int, j: int) -> "Matrix":
        """Canonical basis matrix ``e_i f_j^T`` (0-based indices)."""
        e = [ZERO] * (rows * cols)
        e[i * cols + j] = ONE
        return cls._raw(rows, cols, tuple(e))

    @classmethod
    def diag(cls, values: Sequence) -> "Matrix":
        n = len(values)
        vals = [Scalar.coerce(v) for v in values]
        return cls._raw(n, n, tuple(vals[i] if i == j else ZERO for i in range(n) for j in range(n)))

    @classmethod
    def from_function(cls, rows: int, cols: int, fn) -> "Matrix":
        return cls(rows, cols, (fn(i, j) for i in range(rows) for j in range(cols)))

    @classmethod
    def unvec(cls, v: Sequence, rows: int, cols: int) -> "Matrix":
        """Inverse of :meth:`vec` (column stacking)."""
        return cls(rows, cols, (v[j * rows + i] for i in range(rows) for j in range(cols)))

    # access ---------------------------------------------------------------

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    def __getitem__(self, idx) -> Scalar:
        i, j = idx
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> tuple:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def tolist(self) -> list[list[Scalar]]:
        return [list(self.row(i)) for i in range(self.rows)]

    def vec(self) -> tuple:
        return tuple(self[i, j] for j in range(self.cols) for i in range(self.rows))

    def submatrix(self, r0: int, r1: int, c0: int, c1: int) -> "Matrix":
        return Matrix._raw(
            r1 - r0,
            c1 - c0,
            tuple(self.entries[i * self.cols + j] for i in range(r0, r1) for j in range(c0, c1)),
        )

    def principal(self, idx: Sequence[int]) -> "Matrix":
        return Matrix._raw(len(idx), len(idx), tuple(self[i, j] for i in idx for j in idx))

    def is_square(self) -> bool:
        return self.rows == self.cols

    def is_zero(self) -> bool:
        return not any(self.entries)

    def is_real(self) -> bool:
        return all(not e.im for e in self.entries)

    # algebra --------------------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return add(self, other)

    def __sub__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        if self.shape != other.shape:
            raise ShapeError(f"cannot subtract {other.shape} from {self.shape}")
        return Matrix._raw(self.rows, self.cols, tuple(a - b for a, b in zip(self.entries, other.entries)))

    def __neg__(self):
        return Matrix._raw(self.rows, self.cols, tuple(-a for a in self.entries))

    def __matmul__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return mul(self, other)

    def __mul__(self, c):
        c = _coerce_or_none(c)
        if c is None:
            return NotImplemented
        return Matrix._raw(self.rows, self.cols, tuple(c * a for a in self.entries))

    __rmul__ = __mul__

    def __truediv__(self, c):
        c = _coerce_or_none(c)
        if c is None:
            return NotImplemented
        return self * c.inverse()

    @property
    def T(self) -> "Matrix":
        return Matrix._raw(
            self.cols, self.rows, tuple(self[i, j] for j in range(self.cols) for i in range(self.rows))
        )

    @property
    def H(self) -> "Matrix":
        return conj_transpose(self)

    def conj(self) -> "Matrix":
        return Matrix._raw(self.rows, self.cols, tuple(a.conj() for a in self.entries))

    def real_part(self) -> "Matrix":
        return Matrix._raw(self.rows, self.cols, tuple(Scalar._raw(a.re, Fraction(0)) for a in self.entries))

    def __pow__(self, n: int):
        if not self.is_square():
            raise ShapeError("power of a non-square matrix")
        result = Matrix.identity(self.rows)
        for _ in range(n):
            result = result @ self
        return result

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.shape == other.shape and self.entries == other.entries

    def __hash__(self):
        return hash((self.rows, self.cols, self.entries))

    def __repr__(self):
        body = "; ".join(", ".join(str(e) for e in self.row(i)) for i in range(self.rows))
        return f"Matrix[{body}]"


def add(a: Matrix, b: Matrix) -> Matrix:
    if a.shape != b.shape:
        raise ShapeError(f"cannot add {a.shape} and {b.shape}")
    return Matrix._raw(a.rows, a.cols, tuple(x + y for x, y in zip(a.entries, b.entries)))


def mul(a: Matrix, b: Matrix) -> Matrix:
    if a.cols != b.rows:
        raise ShapeError(f"cannot multiply {a.shape} by {b.shape}")
    n, m, p = a.rows, a.cols, b.cols
    ae, be = a.entries, b.entries
    out = []
    for i in range(n):
        arow = ae[i * m:(i + 1) * m]
        for j in range(p):
            acc = ZERO
            for k in range(m):
                x = arow[k]
                if x:
                    y = be[k * p + j]
                    if y:
                        acc = acc + x * y
            out.append(acc)
    return Matrix._raw(n, p, tuple(out))


def conj_transpose(a: Matrix) -> Matrix:
    return Matrix._raw(
        a.cols, a.rows, tuple(a[i, j].conj() for j in range(a.cols) for i in range(a.rows))
    )


def direct_sum(blocks: Sequence[Matrix]) -> Matrix:
    """Block-diagonal assembly of square blocks."""
    if not blocks:
        raise ShapeError("direct sum of no blocks")
    for b in blocks:
        if not b.is_square():
            raise ShapeError(f"direct sum needs square blocks, got {b.shape}")
    n = sum(b.rows for b in blocks)
    e = [ZERO] * (n * n)
    off = 0
    for b in blocks:
        for i in range(b.rows):
            for j in range(b.cols):
                e[(off + i) * n + off + j] = b[i, j]
        off += b.rows
    return Matrix._raw(n, n, tuple(e))


def kron(a: Matrix, b: Matrix) -> Matrix:
    rows, cols = a.rows * b.rows, a.cols * b.cols
    e = [ZERO] * (rows * cols)
    for i in range(a.rows):
        for j in range(a.cols):
            x = a[i, j]
            if not x:
                continue
            for k in range(b.rows):
                for l in range(b.cols):
                    y = b[k, l]
                    if y:
                        e[(i * b.rows + k) * cols + j * b.cols + l] = x * y
    return Matrix._raw(rows, cols, tuple(e))


def congruence(p: Matrix, x: Matrix) -> Matrix:
    """``P^H X P``."""
    return conj_transpose(p) @ x @ p


# fraction-free elimination -------------------------------------------------
#
# Rows are scaled to Gaussian integers, stored as pairs of Python ints.


def _gi_mul(a, b):
    return (a[0] * b[0] - a[1] * b[1], a[0] * b[1] + a[1] * b[0])


def _gi_exact_div(a, b):
    n = b[0] * b[0] + b[1] * b[1]
    re = a[0] * b[0] + a[1] * b[1]
    im = a[1] * b[0] - a[0] * b[1]
    q_re, r_re = divmod(re, n)
    q_im, r_im = divmod(im, n)
    if r_re or r_im:
        raise ArithmeticError("non-exact Bareiss division")
    return (q_re, q_im)


def _integer_rows(rows: Sequence[Sequence[Scalar]]):
    """Scale each row by the lcm of its denominators; returns rows and scales."""
    out, scales = [], []
    for row in rows:
        d = 1
        for x in row:
            d = math.lcm(d, x.re.denominator, x.im.denominator)
        out.append([(int(x.re * d), int(x.im * d)) for x in row])
        scales.append(d)
    return out, scales


def _bareiss(m: list[list[tuple[int, int]]], ncols: int):
    """In-place fraction-free row echelon form.

    Pivot is the first nonzero entry found scanning rows downward in the
    leftmost unfinished column. Returns (pivot columns, number of swaps).
    """
    nrows = len(m)
    prev = (1, 0)
    pivots: list[int] = []
    swaps = 0
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        p = next((i for i in range(r, nrows) if m[i][c] != (0, 0)), None)
        if p is None:
            continue
        if p != r:
            m[p], m[r] = m[r], m[p]
            swaps += 1
        piv = m[r][c]
        prow = m[r]
        for i in range(r + 1, nrows):
            row = m[i]
            lead = row[c]
            if lead == (0, 0):
                if prev != (1, 0):
                    for j in range(c + 1, ncols):
                        if row[j] != (0, 0):
                            row[j] = _gi_exact_div(_gi_mul(piv, row[j]), prev)
                else:
                    for j in range(c + 1, ncols):
                        if row[j] != (0, 0):
                            row[j] = _gi_mul(piv, row[j])
                continue
            for j in range(c + 1, ncols):
                a = _gi_mul(piv, row[j])
                b = _gi_mul(lead, prow[j])
                v = (a[0] - b[0], a[1] - b[1])
                row[j] = _gi_exact_div(v, prev) if prev != (1, 0) else v
            row[c] = (0, 0)
        prev = piv
        pivots.append(c)
        r += 1
    return pivots, swaps


def _to_scalar(z) -> Scalar:
    return Scalar._raw(Fraction(z[0]), Fraction(z[1]))


def _back_substitute(ech, pivots, n, rhs=None, free_values=None) -> list[Scalar]:
    """Solve the echelon system for one solution vector of length ``n``.

    ``rhs`` is the column index holding the right-hand side (None for a
    homogeneous system); ``free_values`` maps free columns to values.
    """
    x = [ZERO] * n
    if free_values:
        for j, v in free_values.items():
            x[j] = v
    for k in range(len(pivots) - 1, -1, -1):
        c = pivots[k]
        row = ech[k]
        acc = _to_scalar(row[rhs]) if rhs is not None else ZERO
        for j in range(c + 1, n):
            if x[j] and row[j] != (0, 0):
                acc = acc - _to_scalar(row[j]) * x[j]
        x[c] = acc / _to_scalar(row[c])
    return x


def rank(a: Matrix) -> int:
    m, _ = _integer_rows([a.row(i) for i in range(a.rows)])
    pivots, _ = _bareiss(m, a.cols)
    return len(pivots)


def rank_and_nullspace(a: Matrix) -> tuple[int, list[tuple[Scalar, ...]]]:
    """Exact rank and a nullspace basis (one vector per free column)."""
    m, _ = _integer_rows([a.row(i) for i in range(a.rows)])
    pivots, _ = _bareiss(m, a.cols)
    ech = m[: len(pivots)]
    pivset = set(pivots)
    basis = []
    for f in range(a.cols):
        if f in pivset:
            continue
        basis.append(tuple(_back_substitute(ech, pivots, a.cols, free_values={f: ONE})))
    return len(pivots), basis


def determinant(a: Matrix) -> Scalar:
    if not a.is_square():
        raise ShapeError(f"determinant of non-square {a.shape}")
    n = a.rows
    if n == 0:
        return ONE
    m, scales = _integer_rows([a.row(i) for i in range(n)])
    pivots, swaps = _bareiss(m, n)
    if len(pivots) < n:
        return ZERO
    d = _to_scalar(m[n - 1][n - 1])
    if swaps % 2:
        d = -d
    return d / math.prod(scales)


def solve_linear(a: Matrix, b: Matrix):
    """Solve ``a @ x = b`` column by column.

    Returns ``(particular, nullspace)`` where ``particular`` is a matrix with
    free variables set to zero (or None when inconsistent) and ``nullspace``
    is a basis of ``ker a`` as tuples.
    """
    if a.rows != b.rows:
        raise ShapeError(f"rhs has {b.rows} rows, system has {a.rows}")
    n = a.cols
    aug = [a.row(i) + b.row(i) for i in range(a.rows)]
    m, _ = _integer_rows(aug)
    pivots, _ = _bareiss(m, n + b.cols)
    a_pivots = [p for p in pivots if p < n]
    ech = m[: len(pivots)]
    pivset = set(a_pivots)
    null = [
        tuple(_back_substitute(ech, a_pivots, n, free_values={f: ONE}))
        for f in range(n)
        if f not in pivset
    ]
    if len(a_pivots) < len(pivots):
        return None, null
    cols = [_back_substitute(ech, a_pivots, n, rhs=n + k) for k in range(b.cols)]
    return Matrix(n, b.cols, (cols[k][i] for i in range(n) for k in range(b.cols))), null


def inverse(a: Matrix) -> Matrix:
    if not a.is_square():
        raise ShapeError(f"inverse of non-square {a.shape}")
    x, null = solve_linear(a, Matrix.identity(a.rows))
    if x is None or null:
        raise ZeroDivisionError("matrix is singular")
    return x


def span_rank(vectors: Sequence[Sequence[Scalar]], real: bool = False) -> int:
    """Rank of a family of vectors over C, or over R when ``real`` is set.

    Over R each complex coordinate is split into its real and imaginary part.
    """
    vectors = list(vectors)
    if not vectors:
        return 0
    if real:
        rows = [[Scalar._raw(x.re, Fraction(0)) for x in v] + [Scalar._raw(x.im, Fraction(0)) for x in v] for v in vectors]
    else:
        rows = [list(v) for v in vectors]
    return rank(Matrix.from_rows(rows))


# structure tests -----------------------------------------------------------


def is_hermitian(a: Matrix) -> bool:
    return a.is_square() and a == conj_transpose(a)


def is_real_symmetric(a: Matrix) -> bool:
    return a.is_square() and a.is_real() and a == a.T


class Definiteness(str, enum.Enum):
    POSITIVE_DEFINITE = "positive_definite"
    NEGATIVE_DEFINITE = "negative_definite"
    POSITIVE_SEMIDEFINITE = "positive_semidefinite"
    NEGATIVE_SEMIDEFINITE = "negative_semidefinite"
    INDEFINITE = "indefinite"


def _minor(a: Matrix, idx) -> Fraction:
    return determinant(a.principal(idx)).re


def definiteness(a: Matrix) -> Definiteness:
    """Classify a Hermitian matrix by exact principal minors.

    Definite classes use leading principal minors (Sylvester's criterion);
    semidefinite classes need every principal minor. The zero matrix is
    reported as positive semidefinite.
    """
    if not is_hermitian(a):
        raise ValueError("definiteness requires a Hermitian matrix")
    n = a.rows
    leading = [_minor(a, range(k)) for k in range(1, n + 1)]
    if all(d > 0 for d in leading):
        return Definiteness.POSITIVE_DEFINITE
    if all((d < 0) if k % 2 == 0 else (d > 0) for k, d in enumerate(leading)):
        return Definiteness.NEGATIVE_DEFINITE
    nonneg = nonpos = True
    for k in range(1, n + 1):
        for idx in itertools.combinations(range(n), k):
            d = _minor(a, idx)
            if d:
                # sign of a k x k minor of -A is (-1)^k times that of A
                if d < 0:
                    nonneg = False
                if (d > 0) if k % 2 else (d < 0):
                    nonpos = False
            if not nonneg and not nonpos:
                return Definiteness.INDEFINITE
    if nonneg:
        return Definiteness.POSITIVE_SEMIDEFINITE
    return Definiteness.NEGATIVE_SEMIDEFINITE
