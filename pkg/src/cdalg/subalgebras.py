"""Subalgebra construction and the doubling symmetry maps.

Given a nonzero doubly pure a, the span of {e_0, tilde(a), a, te0}
(te0 = e_(2^(n-1))) is an orthogonal quaternion copy, here called the
quaternion hull of a.  For a pair a, b meeting the local-alternativity
hypotheses, {e_0, a, b, ab} spans another quaternion copy and the eight
elements {e_0, a, b, ab, tilde(a)b, -tilde(b), tilde(a), te0} span an
octonion copy; closure is decided by exact linear solves and the
structure constants are compared against the level-2/level-3 tables
under a fixed ordering.

Unit-norm hypotheses are enforced as norm_sq = 1 exactly.  Elements
whose norm is not a rational square are rejected rather than scaled
approximately; ``rescale=True`` divides out a perfect-square norm.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .classify import strongly_alternates_with
from .element import (
    CDElement,
    decompose,
    from_halves,
    halves,
    inner_product,
    is_doubly_pure,
    is_pure,
    make_basis,
    multiply,
    norm_sq,
    scale,
    sign_table,
    tilde,
    tilde_unit,
    zero,
)
from .literals import format_element


@dataclass(frozen=True)
class SubalgebraBasis:
    """Ordered basis with its structure-constant table.

    ``table[i][j]`` holds the coordinates of elements[i] * elements[j]
    over the basis, or None when that product falls outside the span.
    ``closed`` is True exactly when no entry is None.
    """

    level: int
    elements: tuple[CDElement, ...]
    table: tuple[tuple[tuple[Fraction, ...] | None, ...], ...]
    closed: bool

    def to_dict(self) -> dict:
        return {
            "level": self.level,
            "elements": [format_element(e) for e in self.elements],
            "table": [
                [None if cell is None else [str(c) for c in cell] for cell in row]
                for row in self.table
            ],
            "closed": self.closed,
        }


def solve_in_span(elements, target: CDElement) -> tuple[Fraction, ...] | None:
    """Exact coordinates of target over the given elements, or None.

    Plain Gauss-Jordan over Fractions on the (dim x k) column matrix.
    """
    elements = list(elements)
    k = len(elements)
    dim = 1 << target.level
    rows = [
        [e.coeffs[i] for e in elements] + [target.coeffs[i]] for i in range(dim)
    ]
    pivots: list[int] = []
    r = 0
    for c in range(k):
        pivot = next((i for i in range(r, dim) if rows[i][c]), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        inv = 1 / rows[r][c]
        rows[r] = [v * inv for v in rows[r]]
        for i in range(dim):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [v - f * w for v, w in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
    if any(rows[i][k] for i in range(r, dim)):
        return None
    coords = [Fraction(0)] * k
    for row_idx, c in enumerate(pivots):
        coords[c] = rows[row_idx][k]
    return tuple(coords)


def span_basis(elements) -> SubalgebraBasis:
    """Structure-constant table and closure flag for an ordered basis."""
    elements = tuple(elements)
    if not elements:
        raise ValueError("empty basis")
    level = elements[0].level
    if any(e.level != level for e in elements):
        raise ValueError("basis elements must share a level")
    table = []
    closed = True
    for x in elements:
        row = []
        for y in elements:
            coords = solve_in_span(elements, multiply(x, y))
            if coords is None:
                closed = False
            row.append(coords)
        table.append(tuple(row))
    return SubalgebraBasis(level=level, elements=elements, table=tuple(table), closed=closed)


def matches_reference_level(basis: SubalgebraBasis, ref_level: int) -> bool:
    """Structure constants equal the level-ref table under list order."""
    k = len(basis.elements)
    if k != 1 << ref_level or not basis.closed:
        return False
    table = sign_table(ref_level)
    for i in range(k):
        for j in range(k):
            cell = basis.table[i][j]
            expect = [Fraction(0)] * k
            expect[i ^ j] = Fraction(table[i][j])
            if cell is None or list(cell) != expect:
                return False
    return True


def find_relabeling(basis: SubalgebraBasis, ref_level: int) -> list[int] | None:
    """Search reorderings [0, p(1), ..] making the table match, or None.

    Only consulted when the fixed ordering fails; the identity
    permutation is reported as [0, 1, ..., k-1].
    """
    from itertools import permutations

    k = len(basis.elements)
    if k != 1 << ref_level or not basis.closed:
        return None
    for perm in permutations(range(1, k)):
        order = (0,) + perm
        reordered = span_basis([basis.elements[i] for i in order])
        if matches_reference_level(reordered, ref_level):
            return list(order)
    return None


def rational_sqrt(q: Fraction) -> Fraction | None:
    """Exact square root of a non-negative rational, if one exists."""
    if q < 0:
        return None
    num = math.isqrt(q.numerator)
    den = math.isqrt(q.denominator)
    if num * num == q.numerator and den * den == q.denominator:
        return Fraction(num, den)
    return None


def _unit_or_reject(name: str, a: CDElement, rescale: bool) -> CDElement:
    n2 = norm_sq(a)
    if n2 == 1:
        return a
    if not rescale:
        raise ValueError(f"{name}: element must have norm_sq exactly 1")
    root = rational_sqrt(n2)
    if root is None:
        raise ValueError(
            f"{name}: norm_sq {n2} is not a rational square, cannot rescale exactly"
        )
    return scale(1 / root, a)


def quaternion_hull(a: CDElement, rescale: bool = False) -> SubalgebraBasis:
    """The quaternion basis [e_0, tilde(a), a, te0] attached to a.

    Requires a doubly pure, nonzero, level >= 3, and unit norm_sq
    (or ``rescale`` with a perfect-square norm).
    """
    if a.level < 3:
        raise ValueError("quaternion_hull requires level >= 3")
    if not a:
        raise ValueError("quaternion_hull requires a nonzero element")
    if not is_doubly_pure(a):
        raise ValueError("quaternion_hull requires a doubly pure element")
    a = _unit_or_reject("quaternion_hull", a, rescale)
    return span_basis(
        [make_basis(a.level, 0), tilde(a), a, tilde_unit(a.level)]
    )


def _check_pair_hypotheses(name: str, a: CDElement, b: CDElement) -> None:
    if a.level != b.level:
        raise ValueError(f"{name}: level mismatch: {a.level} != {b.level}")
    if a.level < 4:
        raise ValueError(f"{name}: requires level >= 4")
    for label, x in (("a", a), ("b", b)):
        if not x:
            raise ValueError(f"{name}: {label} must be nonzero")
        if not is_doubly_pure(x):
            raise ValueError(f"{name}: {label} must be doubly pure")
        if norm_sq(x) != 1:
            raise ValueError(f"{name}: {label} must have norm_sq exactly 1")
    if inner_product(a, b) != 0 or inner_product(tilde(a), b) != 0:
        raise ValueError(f"{name}: b must be orthogonal to the quaternion hull of a")
    if not strongly_alternates_with(a, b):
        raise ValueError(f"{name}: a must alternate strongly with b")


def quaternion_span(a: CDElement, b: CDElement) -> SubalgebraBasis:
    """[e_0, a, b, ab] for a hull-orthogonal strongly alternating pair."""
    _check_pair_hypotheses("quaternion_span", a, b)
    return span_basis([make_basis(a.level, 0), a, b, multiply(a, b)])


def octonion_span(a: CDElement, b: CDElement) -> SubalgebraBasis:
    """The eight-element octonion basis generated by such a pair.

    Fixed ordering [e_0, a, b, ab, tilde(a)b, -tilde(b), tilde(a), te0];
    under it the structure constants must equal the level-3 table.
    """
    _check_pair_hypotheses("octonion_span", a, b)
    ta = tilde(a)
    return span_basis(
        [
            make_basis(a.level, 0),
            a,
            b,
            multiply(a, b),
            multiply(ta, b),
            -tilde(b),
            ta,
            tilde_unit(a.level),
        ]
    )


def projection_split(x: CDElement, basis: SubalgebraBasis) -> tuple[CDElement, CDElement]:
    """Orthogonal split of x into (span component, complement component)."""
    elements = basis.elements
    if any(not e for e in elements):
        raise ValueError("projection_split requires nonzero basis elements")
    for i in range(len(elements)):
        for j in range(i + 1, len(elements)):
            if inner_product(elements[i], elements[j]) != 0:
                raise ValueError("projection_split requires an orthogonal basis")
    inside = zero(x.level)
    for e in elements:
        inside = inside + scale(inner_product(x, e) / norm_sq(e), e)
    return inside, x - inside


def companion(a: CDElement) -> CDElement:
    """An orthogonal same-norm partner that a alternates strongly with.

    For unit pure a = r c + s te0 (c the unit doubly pure direction)
    the partner is b = s c - r te0.  Both a and b then live in the
    quaternion hull of c, which is associative, so the postconditions
    hold identically.  When the doubly pure part vanishes (a = +-te0)
    the direction c is undefined and b = -e_1 is returned by convention.
    Rejects elements whose doubly pure part has a non-square norm,
    since c cannot then be normalized exactly.
    """
    if a.level < 4:
        raise ValueError("companion requires level >= 4")
    if not is_pure(a):
        raise ValueError("companion requires a pure element")
    if norm_sq(a) != 1:
        raise ValueError("companion requires norm_sq exactly 1")
    _, s, c_raw = decompose(a)
    te0 = tilde_unit(a.level)
    if not c_raw:
        b = -make_basis(a.level, 1)
    else:
        r = rational_sqrt(norm_sq(c_raw))
        if r is None:
            raise ValueError(
                "companion: doubly pure part has no rational unit scaling"
            )
        b = scale(s / r, c_raw) - scale(r, te0)
    if (
        inner_product(a, b) != 0
        or norm_sq(b) != norm_sq(a)
        or not strongly_alternates_with(a, b)
    ):
        raise AssertionError("companion postconditions failed")
    return b


def doubling_involution(a: CDElement) -> CDElement:
    """The sign flip on the odd half, (x, y) -> (x, -y); an automorphism."""
    if a.level < 4:
        raise ValueError("doubling_involution requires level >= 4")
    x, y = halves(a)
    return from_halves(x, -y)


def twist_constant(level: int) -> CDElement:
    """-(e_0 + te0) / 2, the displayed constant of the threefold map."""
    h = Fraction(-1, 2)
    return scale(h, make_basis(level, 0)) + scale(h, tilde_unit(level))


def doubling_twist(a: CDElement) -> CDElement:
    """Linear extension of (x, 0) -> (x, 0) and (0, x) -> (x, 0) * alpha.

    alpha is ``twist_constant`` at the same level.  This is the
    displayed rule taken literally; see the package notes for how far
    it is from an order-three automorphism.
    """
    if a.level < 4:
        raise ValueError("doubling_twist requires level >= 4")
    x, y = halves(a)
    even = from_halves(x, zero(x.level))
    odd_lift = from_halves(y, zero(y.level))
    return even + multiply(odd_lift, twist_constant(a.level))
