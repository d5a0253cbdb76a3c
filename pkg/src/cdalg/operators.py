"""Exact matrix representations of multiplication operators.

For pure a and b the left/right multiplication matrices are
skew-symmetric, and the two composites studied here,

    square_sum(a, b)   : x -> a(ax) + (xb)b
    middle_assoc(a, b) : x -> (ax)b - a(xb)

control how left multiplication squares across one doubling step:
``doubling_left_square_identity`` checks that identity directly from
products.  Matrices are dense tuples of Fractions; 2^n <= 256 keeps
exact arithmetic cheap, and scalar-matrix questions are answered by
literal comparison rather than any numeric spectra.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .element import (
    CDElement,
    associator,
    from_halves,
    is_pure,
    multiply,
    sign_table,
    zero,
)


@dataclass(frozen=True, slots=True)
class MatrixRep:
    """Square rational matrix; column j is the image of e_j."""

    level: int
    entries: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self) -> None:
        dim = 1 << self.level
        if len(self.entries) != dim or any(len(row) != dim for row in self.entries):
            raise ValueError(f"matrix for level {self.level} must be {dim}x{dim}")

    @property
    def dim(self) -> int:
        return 1 << self.level

    def apply(self, x: CDElement) -> CDElement:
        if x.level != self.level:
            raise ValueError(f"level mismatch: {x.level} != {self.level}")
        cols = [(j, c) for j, c in enumerate(x.coeffs) if c]
        out = [Fraction(0)] * self.dim
        for i, row in enumerate(self.entries):
            out[i] = sum((row[j] * c for j, c in cols), Fraction(0))
        return CDElement(self.level, tuple(out))

    def __matmul__(self, other: "MatrixRep") -> "MatrixRep":
        if other.level != self.level:
            raise ValueError(f"level mismatch: {other.level} != {self.level}")
        dim = self.dim
        cols = [tuple(other.entries[k][j] for k in range(dim)) for j in range(dim)]
        rows = []
        for i in range(dim):
            row = self.entries[i]
            rows.append(
                tuple(
                    sum((row[k] * col[k] for k in range(dim) if col[k]), Fraction(0))
                    for col in cols
                )
            )
        return MatrixRep(self.level, tuple(rows))

    def __add__(self, other: "MatrixRep") -> "MatrixRep":
        if other.level != self.level:
            raise ValueError(f"level mismatch: {other.level} != {self.level}")
        return MatrixRep(
            self.level,
            tuple(
                tuple(a + b for a, b in zip(r1, r2))
                for r1, r2 in zip(self.entries, other.entries)
            ),
        )

    def __sub__(self, other: "MatrixRep") -> "MatrixRep":
        return self + (-other)

    def __neg__(self) -> "MatrixRep":
        return MatrixRep(
            self.level, tuple(tuple(-a for a in row) for row in self.entries)
        )

    def transpose(self) -> "MatrixRep":
        dim = self.dim
        return MatrixRep(
            self.level,
            tuple(tuple(self.entries[j][i] for j in range(dim)) for i in range(dim)),
        )


def identity_matrix(level: int) -> MatrixRep:
    dim = 1 << level
    return MatrixRep(
        level,
        tuple(
            tuple(Fraction(1 if i == j else 0) for j in range(dim)) for i in range(dim)
        ),
    )


def scalar_matrix(level: int, t) -> MatrixRep:
    t = Fraction(t)
    dim = 1 << level
    return MatrixRep(
        level,
        tuple(tuple(t if i == j else Fraction(0) for j in range(dim)) for i in range(dim)),
    )


def left_mult_matrix(a: CDElement) -> MatrixRep:
    """Matrix of x -> ax; column j holds a * e_j."""
    dim = 1 << a.level
    table = sign_table(a.level)
    rows = [[Fraction(0)] * dim for _ in range(dim)]
    for i, c in enumerate(a.coeffs):
        if not c:
            continue
        row = table[i]
        for j in range(dim):
            rows[i ^ j][j] += row[j] * c
    return MatrixRep(a.level, tuple(tuple(r) for r in rows))


def right_mult_matrix(b: CDElement) -> MatrixRep:
    """Matrix of x -> xb; column j holds e_j * b."""
    dim = 1 << b.level
    table = sign_table(b.level)
    rows = [[Fraction(0)] * dim for _ in range(dim)]
    for k, c in enumerate(b.coeffs):
        if not c:
            continue
        for j in range(dim):
            rows[j ^ k][j] += table[j][k] * c
    return MatrixRep(b.level, tuple(tuple(r) for r in rows))


def _require_pure(name: str, *elements: CDElement) -> None:
    for x in elements:
        if not is_pure(x):
            raise ValueError(f"{name} requires pure arguments")


def square_sum_matrix(a: CDElement, b: CDElement) -> MatrixRep:
    """L_a^2 + R_b^2 for pure a, b."""
    if a.level != b.level:
        raise ValueError(f"level mismatch: {a.level} != {b.level}")
    _require_pure("square_sum_matrix", a, b)
    la = left_mult_matrix(a)
    rb = right_mult_matrix(b)
    return la @ la + rb @ rb


def middle_assoc_matrix(a: CDElement, b: CDElement) -> MatrixRep:
    """The operator x -> (a, x, b), i.e. R_b L_a - L_a R_b, for pure a, b."""
    if a.level != b.level:
        raise ValueError(f"level mismatch: {a.level} != {b.level}")
    _require_pure("middle_assoc_matrix", a, b)
    la = left_mult_matrix(a)
    rb = right_mult_matrix(b)
    return rb @ la - la @ rb


def is_skew_symmetric(m: MatrixRep) -> bool:
    dim = m.dim
    return all(
        m.entries[i][j] == -m.entries[j][i] for i in range(dim) for j in range(i, dim)
    )


def is_scalar(m: MatrixRep) -> tuple[bool, Fraction | None]:
    """Whether m = t * I; returns (True, t) or (False, None)."""
    t = m.entries[0][0]
    for i, row in enumerate(m.entries):
        for j, v in enumerate(row):
            if v != (t if i == j else 0):
                return False, None
    return True, t


def doubling_left_square_identity(
    a: CDElement, b: CDElement, x: CDElement, y: CDElement
) -> bool:
    """Check L^2 of the doubled element (a, b) against its half-level form.

    For pure a, b the square of left multiplication by (a, b) acts as
    (x, y) -> (Ax - Sy, Ay + Sx) with A = square_sum(a, b) and
    S = middle_assoc(a, b).  Left side is computed by plain products on
    the doubled level, right side assembled from level-n pieces.
    """
    for u, v in ((a, b), (x, y)):
        if u.level != v.level:
            raise ValueError(f"level mismatch: {u.level} != {v.level}")
    if a.level != x.level:
        raise ValueError(f"level mismatch: {a.level} != {x.level}")
    _require_pure("doubling_left_square_identity", a, b)
    u = from_halves(a, b)
    z = from_halves(x, y)
    lhs = multiply(u, multiply(u, z))
    ax = multiply(a, multiply(a, x)) + multiply(multiply(x, b), b)
    ay = multiply(a, multiply(a, y)) + multiply(multiply(y, b), b)
    sx = associator(a, x, b)
    sy = associator(a, y, b)
    rhs = from_halves(ax - sy, ay + sx)
    return lhs == rhs


def matrix_to_csv(m: MatrixRep) -> str:
    """Row-major CSV with exact 'p/q' entries."""
    return "\n".join(",".join(str(v) for v in row) for row in m.entries)
