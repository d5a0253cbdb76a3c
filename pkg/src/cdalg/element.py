"""Exact Cayley-Dickson algebra elements over the rationals.

The level-n algebra lives on Q^(2^n).  Writing a level-n element as a
pair of level-(n-1) halves, the product and conjugate are

    (x1, x2) (y1, y2) = (x1 y1 - conj(y2) x2,  y2 x1 + x2 conj(y1))
    conj (x1, x2)     = (conj(x1), -x2)

recursively, with level 0 being plain rational arithmetic.  The factor
ordering and conjugate placement here are load-bearing: other doubling
conventions flip signs of individual basis products, which silently
changes every associator downstream.  ``multiply_recursive`` implements
the definition verbatim and is kept as the reference path.

Basis products are always signed basis elements, e_i e_j = s * e_(i^j)
with s in {+1, -1}.  ``multiply`` exploits that through a per-level sign
table (built once, behind a lock) and an integer kernel over a common
denominator, which is what makes exhaustive level-5/6 sweeps cheap.
All values are immutable; coefficients are `fractions.Fraction`, so
every zero test is exact.
"""

from __future__ import annotations

import math
import threading
from dataclasses import dataclass
from fractions import Fraction

Rational = Fraction

_table_lock = threading.Lock()
_sign_tables: dict[int, list[list[int]]] = {}


def basis_sign(level: int, i: int, j: int) -> int:
    """Sign s in e_i e_j = s e_(i XOR j), by unrolling the doubling cases."""
    sign = 1
    for n in range(level, 0, -1):
        h = 1 << (n - 1)
        if i & h:
            if j & h:
                # upper*upper: (0,a)(0,b) = (-conj(b) a, 0)
                i, j = j ^ h, i ^ h
                if i == 0:
                    sign = -sign
            else:
                # upper*lower: (0,a)(b,0) = (0, a conj(b))
                i ^= h
                if j != 0:
                    sign = -sign
        elif j & h:
            # lower*upper: (a,0)(0,b) = (0, b a)
            i, j = j ^ h, i
    return sign


def sign_table(level: int) -> list[list[int]]:
    """Cached 2^n x 2^n table of basis-product signs for one level."""
    with _table_lock:
        tab = _sign_tables.get(level)
        if tab is None:
            dim = 1 << level
            tab = [[basis_sign(level, i, j) for j in range(dim)] for i in range(dim)]
            _sign_tables[level] = tab
    return tab


@dataclass(frozen=True, slots=True)
class CDElement:
    """A level-n algebra element: coefficient vector of length 2^n."""

    level: int
    coeffs: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        if self.level < 0:
            raise ValueError(f"level must be non-negative, got {self.level}")
        if len(self.coeffs) != 1 << self.level:
            raise ValueError(
                f"level {self.level} needs {1 << self.level} coefficients, "
                f"got {len(self.coeffs)}"
            )

    # -- arithmetic sugar; the module-level functions are the primary API --

    def __add__(self, other: "CDElement") -> "CDElement":
        return add(self, other)

    def __sub__(self, other: "CDElement") -> "CDElement":
        return add(self, -other)

    def __neg__(self) -> "CDElement":
        return CDElement(self.level, tuple(-c for c in self.coeffs))

    def __mul__(self, other):
        if isinstance(other, CDElement):
            return multiply(self, other)
        return scale(other, self)

    def __rmul__(self, other):
        return scale(other, self)

    def __bool__(self) -> bool:
        return any(self.coeffs)

    def __str__(self) -> str:
        from .literals import format_element

        return format_element(self)

    def __repr__(self) -> str:
        return f"CDElement({self.level}, {self!s})"

    def conjugate(self) -> "CDElement":
        return conjugate(self)

    def tilde(self) -> "CDElement":
        return tilde(self)

    def trace(self) -> Fraction:
        return trace(self)

    def norm_sq(self) -> Fraction:
        return norm_sq(self)

    def inner(self, other: "CDElement") -> Fraction:
        return inner_product(self, other)

    def is_pure(self) -> bool:
        return is_pure(self)

    def is_doubly_pure(self) -> bool:
        return is_doubly_pure(self)


def _as_fraction(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int) or isinstance(value, str):
        return Fraction(value)
    raise TypeError(f"cannot coerce {value!r} to an exact rational")


def _same_level(x: CDElement, y: CDElement) -> None:
    if x.level != y.level:
        raise ValueError(f"level mismatch: {x.level} != {y.level}")


def from_coeffs(level: int, coeffs) -> CDElement:
    """Build an element from any iterable of ints/strings/Fractions."""
    return CDElement(level, tuple(_as_fraction(c) for c in coeffs))


def from_terms(level: int, terms: dict[int, object]) -> CDElement:
    """Build an element from a sparse {basis index: coefficient} mapping."""
    dim = 1 << level
    coeffs = [Fraction(0)] * dim
    for i, c in terms.items():
        if not 0 <= i < dim:
            raise ValueError(f"basis index {i} out of range for level {level}")
        coeffs[i] = _as_fraction(c)
    return CDElement(level, tuple(coeffs))


def zero(level: int) -> CDElement:
    return CDElement(level, (Fraction(0),) * (1 << level))


def make_basis(level: int, index: int) -> CDElement:
    """The basis element e_index at the given level."""
    if level < 0:
        raise ValueError(f"level must be non-negative, got {level}")
    if not 0 <= index < 1 << level:
        raise ValueError(f"basis index {index} out of range for level {level}")
    return from_terms(level, {index: 1})


def one(level: int) -> CDElement:
    return make_basis(level, 0)


def tilde_unit(level: int) -> CDElement:
    """e_(2^(n-1)), the unit adjoined by the last doubling step."""
    if level < 1:
        raise ValueError("levels below 1 have no doubling unit")
    return make_basis(level, 1 << (level - 1))


def halves(x: CDElement) -> tuple[CDElement, CDElement]:
    if x.level == 0:
        raise ValueError("level-0 elements have no halves")
    h = 1 << (x.level - 1)
    return CDElement(x.level - 1, x.coeffs[:h]), CDElement(x.level - 1, x.coeffs[h:])


def from_halves(x1: CDElement, x2: CDElement) -> CDElement:
    _same_level(x1, x2)
    return CDElement(x1.level + 1, x1.coeffs + x2.coeffs)


def add(x: CDElement, y: CDElement) -> CDElement:
    _same_level(x, y)
    return CDElement(x.level, tuple(a + b for a, b in zip(x.coeffs, y.coeffs)))


def scale(r, x: CDElement) -> CDElement:
    r = _as_fraction(r)
    return CDElement(x.level, tuple(r * c for c in x.coeffs))


def conjugate(x: CDElement) -> CDElement:
    """Negate every coefficient except the real one."""
    return CDElement(x.level, (x.coeffs[0],) + tuple(-c for c in x.coeffs[1:]))


def multiply(x: CDElement, y: CDElement) -> CDElement:
    """Product via the cached sign table and an integer kernel.

    Exhaustively cross-checked against ``multiply_recursive`` (the
    definitional path) at levels <= 5 by the test suite before anything
    trusts it at higher levels.
    """
    _same_level(x, y)
    n = x.level
    if n == 0:
        return CDElement(0, (x.coeffs[0] * y.coeffs[0],))
    xs = [(i, c) for i, c in enumerate(x.coeffs) if c]
    if not xs:
        return zero(n)
    ys = [(j, c) for j, c in enumerate(y.coeffs) if c]
    if not ys:
        return zero(n)
    table = sign_table(n)
    dx = math.lcm(*(c.denominator for _, c in xs))
    dy = math.lcm(*(c.denominator for _, c in ys))
    xi = [(i, c.numerator * (dx // c.denominator)) for i, c in xs]
    yi = [(j, c.numerator * (dy // c.denominator)) for j, c in ys]
    acc = [0] * (1 << n)
    for i, a in xi:
        row = table[i]
        for j, b in yi:
            acc[i ^ j] += row[j] * a * b
    den = dx * dy
    return CDElement(n, tuple(Fraction(v, den) for v in acc))


def multiply_recursive(x: CDElement, y: CDElement) -> CDElement:
    """Reference product: the doubling definition applied verbatim."""
    _same_level(x, y)
    if x.level == 0:
        return CDElement(0, (x.coeffs[0] * y.coeffs[0],))
    if not any(x.coeffs) or not any(y.coeffs):
        return zero(x.level)
    x1, x2 = halves(x)
    y1, y2 = halves(y)
    first = multiply_recursive(x1, y1) - multiply_recursive(conjugate(y2), x2)
    second = multiply_recursive(y2, x1) + multiply_recursive(x2, conjugate(y1))
    return from_halves(first, second)


def trace(x: CDElement) -> Fraction:
    """The rational t with x + conj(x) = t e_0."""
    return 2 * x.coeffs[0]


def inner_product(x: CDElement, y: CDElement) -> Fraction:
    """Euclidean inner product; equals trace(x conj(y)) / 2."""
    _same_level(x, y)
    return sum((a * b for a, b in zip(x.coeffs, y.coeffs)), Fraction(0))


def norm_sq(x: CDElement) -> Fraction:
    """Squared Euclidean norm; equals the e_0 coefficient of x conj(x)."""
    return sum((c * c for c in x.coeffs), Fraction(0))


def tilde(x: CDElement) -> CDElement:
    """The half-swap map (x1, x2) -> (-x2, x1); equals x * e_(2^(n-1))."""
    if x.level < 1:
        raise ValueError("tilde needs level >= 1")
    h = 1 << (x.level - 1)
    return CDElement(x.level, tuple(-c for c in x.coeffs[h:]) + x.coeffs[:h])


def decompose(x: CDElement) -> tuple[Fraction, Fraction, CDElement]:
    """Split x = r e_0 + s e_(2^(n-1)) + c with c doubly pure.

    Returns (r, s, c).  c is *not* normalized: its norm is generally not
    a rational square, so unit scaling is left to callers that need it.
    At level 0 there is no doubling unit and s is reported as 0.
    """
    r = x.coeffs[0]
    if x.level == 0:
        return r, Fraction(0), zero(0)
    h = 1 << (x.level - 1)
    s = x.coeffs[h]
    rest = list(x.coeffs)
    rest[0] = Fraction(0)
    rest[h] = Fraction(0)
    return r, s, CDElement(x.level, tuple(rest))


def is_pure(x: CDElement) -> bool:
    return x.coeffs[0] == 0


def is_doubly_pure(x: CDElement) -> bool:
    if x.level < 1:
        raise ValueError("doubly pure needs level >= 1")
    return x.coeffs[0] == 0 and x.coeffs[1 << (x.level - 1)] == 0


def associator(a: CDElement, b: CDElement, c: CDElement) -> CDElement:
    """(ab)c - a(bc)."""
    _same_level(a, b)
    _same_level(b, c)
    return multiply(multiply(a, b), c) - multiply(a, multiply(b, c))


def commutator(a: CDElement, b: CDElement) -> CDElement:
    """ab - ba."""
    _same_level(a, b)
    return multiply(a, b) - multiply(b, a)
