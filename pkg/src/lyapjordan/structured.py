"""Special matrix families: Jordan blocks, shifts, the homogeneous basis
matrices ``Y_t``, extended Pascal matrices and the shifted-Pascal family
``X_ij``, plus Weyr characteristics of Jordan matrices.

All row/column indices in the public constructors follow the 1-based
convention of the formulas they implement (``i``, ``j``, ``t``).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .exact import ONE, ZERO, Matrix, Scalar, direct_sum

__all__ = [
    "JordanSpec",
    "WeyrCharacteristic",
    "jordan_block",
    "shift_power",
    "y_matrix",
    "pascal_ext",
    "x_matrix",
    "weyr",
    "assemble",
]


@dataclass(frozen=True)
class JordanSpec:
    """Ordered Jordan blocks ``(eigenvalue, size)``."""

    blocks: tuple[tuple[Scalar, int], ...]

    def __post_init__(self):
        norm = []
        for lam, size in self.blocks:
            if not isinstance(size, int) or size < 1:
                raise ValueError(f"Jordan block size must be a positive integer, got {size!r}")
            norm.append((Scalar.coerce(lam), size))
        if not norm:
            raise ValueError("a Jordan spec needs at least one block")
        object.__setattr__(self, "blocks", tuple(norm))

    @classmethod
    def of(cls, *blocks) -> "JordanSpec":
        """``JordanSpec.of((0, 1), (0, 2), (2, 1))``."""
        return cls(tuple(blocks))

    @property
    def total(self) -> int:
        return sum(s for _, s in self.blocks)

    @property
    def k(self) -> int:
        return len(self.blocks)

    @property
    def sizes(self) -> tuple[int, ...]:
        return tuple(s for _, s in self.blocks)

    @property
    def lambdas(self) -> tuple[Scalar, ...]:
        return tuple(lam for lam, _ in self.blocks)

    @property
    def offsets(self) -> tuple[int, ...]:
        out, acc = [], 0
        for s in self.sizes:
            out.append(acc)
            acc += s
        return tuple(out)

    def eigenvalues(self) -> list[Scalar]:
        """Distinct eigenvalues in order of first occurrence."""
        seen: list[Scalar] = []
        for lam in self.lambdas:
            if lam not in seen:
                seen.append(lam)
        return seen

    def is_real(self) -> bool:
        return all(lam.is_real() for lam in self.lambdas)


@dataclass(frozen=True)
class WeyrCharacteristic:
    eigenvalue: Scalar
    w: tuple[int, ...]

    @property
    def index(self) -> int:
        return len(self.w)

    @property
    def geometric_multiplicity(self) -> int:
        return self.w[0] if self.w else 0

    @property
    def algebraic_multiplicity(self) -> int:
        return sum(self.w)


def jordan_block(lam, r: int) -> Matrix:
    if r < 1:
        raise ValueError("Jordan block order must be >= 1")
    lam = Scalar.coerce(lam)
    return Matrix.from_function(r, r, lambda i, j: lam if i == j else (ONE if j == i + 1 else ZERO))


def shift_power(r: int, j: int, lower: bool = False) -> Matrix:
    """``J_r(0)**j`` (upper shift) or its transpose when ``lower``."""
    if lower:
        return Matrix.from_function(r, r, lambda a, b: ONE if a == b + j else ZERO)
    return Matrix.from_function(r, r, lambda a, b: ONE if b == a + j else ZERO)


def _y_wide(t: int, r: int, s: int) -> Matrix:
    # r <= s: entry (-1)^(s-j) where i + j == t + s
    def entry(i, j):
        if (i + 1) + (j + 1) == t + s:
            return ONE if (s - (j + 1)) % 2 == 0 else -ONE
        return ZERO

    return Matrix.from_function(r, s, entry)


def y_matrix(t: int, r: int, s: int) -> Matrix:
    """Homogeneous basis matrix ``Y_t^{[r,s]}``, ``1 <= t <= min(r, s)``."""
    if not 1 <= t <= min(r, s):
        raise ValueError(f"t={t} outside 1..{min(r, s)}")
    if r <= s:
        return _y_wide(t, r, s)
    return _y_wide(t, s, r).T


def pascal_ext(r: int, s: int, y) -> Matrix:
    """Extended generalized Pascal matrix with entries ``y^(i+j-2) C(i+j-2, j-1)``."""
    y = Scalar.coerce(y)
    powers = [ONE]
    for _ in range(r + s):
        powers.append(powers[-1] * y)
    return Matrix.from_function(r, s, lambda i, j: powers[i + j] * math.comb(i + j, j))


def x_matrix(i: int, j: int, r: int, s: int, y) -> Matrix:
    """Shifted Pascal matrix ``X_ij^{[r,s]}[y]``: ``y * Psi[y]`` placed in the
    lower-right ``(r-i+1) x (s-j+1)`` corner, zeros elsewhere."""
    if not (1 <= i <= r and 1 <= j <= s):
        raise ValueError(f"index ({i}, {j}) outside 1..{r} x 1..{s}")
    y = Scalar.coerce(y)
    core = pascal_ext(r - i + 1, s - j + 1, y) * y

    def entry(a, b):
        if a >= i - 1 and b >= j - 1:
            return core[a - i + 1, b - j + 1]
        return ZERO

    return Matrix.from_function(r, s, entry)


def weyr(spec: JordanSpec, lam) -> WeyrCharacteristic:
    """``w_k`` = number of blocks at ``lam`` of size at least ``k``."""
    lam = Scalar.coerce(lam)
    sizes = [s for mu, s in spec.blocks if mu == lam]
    if not sizes:
        return WeyrCharacteristic(lam, ())
    return WeyrCharacteristic(lam, tuple(sum(1 for s in sizes if s >= k) for k in range(1, max(sizes) + 1)))


def assemble(spec: JordanSpec) -> Matrix:
    return direct_sum([jordan_block(lam, size) for lam, size in spec.blocks])
