"""Alternativity and normedness classification.

An element a is alternative when (a, a, x) = 0 for every x, and
strongly alternative when additionally (a, x, x) = 0 for every x.  Both
quantifiers reduce to finitely many exact checks:

* (a, a, x) is linear in x, so scanning the basis is complete;
* (a, x, x) expands bilinearly, so vanishing of the symmetrized basis
  associators (a, e_i, e_j) + (a, e_j, e_i) over i <= j is complete.

Witness policy: the first failing probe in scan order (ascending basis
index; for the symmetric scan, diagonal pairs first and then (i, j)
with i < j lexicographically), so results are reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass

from .element import (
    CDElement,
    associator,
    from_halves,
    is_pure,
    make_basis,
    multiply,
    norm_sq,
    scale,
)
from .literals import format_element


@dataclass(frozen=True)
class AltStatus:
    """Outcome of an alternativity query.

    ``strongly_alternative`` is None when the query only decided the
    plain alternative property.  A witness is present exactly when the
    corresponding flag is False and re-evaluating the associator on it
    reproduces a nonzero value.
    """

    alternative: bool
    strongly_alternative: bool | None
    witness: CDElement | None

    def to_dict(self, element: CDElement) -> dict:
        out = {
            "element": format_element(element),
            "level": element.level,
            "alternative": self.alternative,
            "strongly_alternative": self.strongly_alternative,
        }
        if self.witness is not None:
            out["witness"] = format_element(self.witness)
        return out


def is_alternative(a: CDElement) -> AltStatus:
    """Scan (a, a, e_i) over the basis; complete by linearity in x."""
    for i in range(1 << a.level):
        x = make_basis(a.level, i)
        if associator(a, a, x):
            return AltStatus(alternative=False, strongly_alternative=False, witness=x)
    return AltStatus(alternative=True, strongly_alternative=None, witness=None)


def is_strongly_alternative(a: CDElement) -> AltStatus:
    """Alternative scan plus the symmetrized (a, x, x) scan."""
    status = is_alternative(a)
    if not status.alternative:
        return status
    dim = 1 << a.level
    basis = [make_basis(a.level, i) for i in range(dim)]
    for i in range(dim):
        if associator(a, basis[i], basis[i]):
            return AltStatus(alternative=True, strongly_alternative=False, witness=basis[i])
    for i in range(dim):
        for j in range(i + 1, dim):
            if associator(a, basis[i], basis[j]) + associator(a, basis[j], basis[i]):
                # diagonal terms already vanished, so e_i + e_j is a witness
                return AltStatus(
                    alternative=True,
                    strongly_alternative=False,
                    witness=basis[i] + basis[j],
                )
    return AltStatus(alternative=True, strongly_alternative=True, witness=None)


def alternates_with(a: CDElement, b: CDElement) -> bool:
    """(a, a, b) = 0."""
    if a.level != b.level:
        raise ValueError(f"level mismatch: {a.level} != {b.level}")
    return not associator(a, a, b)


def strongly_alternates_with(a: CDElement, b: CDElement) -> bool:
    """(a, a, b) = 0 and (a, b, b) = 0."""
    if a.level != b.level:
        raise ValueError(f"level mismatch: {a.level} != {b.level}")
    return not associator(a, a, b) and not associator(a, b, b)


def normed_with(a: CDElement, b: CDElement) -> bool:
    """norm_sq(ab) = norm_sq(a) norm_sq(b), the exact squared form."""
    if a.level != b.level:
        raise ValueError(f"level mismatch: {a.level} != {b.level}")
    return norm_sq(multiply(a, b)) == norm_sq(a) * norm_sq(b)


def is_normed_set(elements) -> bool:
    """Pairwise normed over all ordered pairs, self-pairs included."""
    elements = list(elements)
    return all(normed_with(x, y) for x in elements for y in elements)


def lift_alternative(a: CDElement, r, s) -> CDElement:
    """The level-(n+1) element with halves (ra, sa), for pure alternative a.

    Such lifts exhaust the doubly pure alternative elements one level
    up, so the output is guaranteed alternative.
    """
    if not is_pure(a):
        raise ValueError("lift_alternative requires a pure element")
    if not is_alternative(a).alternative:
        raise ValueError("lift_alternative requires an alternative element")
    return from_halves(scale(r, a), scale(s, a))


def pure_part(a: CDElement) -> CDElement:
    return CDElement(a.level, (a.coeffs[0] * 0,) + a.coeffs[1:])


def pure_parts_dependent(a: CDElement, b: CDElement) -> bool:
    """Exact 2-row rank test on the pure parts (zero rows count as dependent)."""
    if a.level != b.level:
        raise ValueError(f"level mismatch: {a.level} != {b.level}")
    pa = pure_part(a).coeffs
    pb = pure_part(b).coeffs
    dim = len(pa)
    return all(
        pa[i] * pb[j] == pa[j] * pb[i] for i in range(dim) for j in range(i + 1, dim)
    )


def yui_witness(a: CDElement, b: CDElement) -> CDElement | None:
    """First basis x with (a, x, b) != 0, or None if the form vanishes.

    Vanishing on the basis gives vanishing for all x by linearity, and
    at levels >= 4 that happens exactly when the pure parts of a and b
    are linearly dependent.
    """
    if a.level != b.level:
        raise ValueError(f"level mismatch: {a.level} != {b.level}")
    if a.level < 4:
        raise ValueError("yui_witness requires level >= 4")
    for i in range(1 << a.level):
        x = make_basis(a.level, i)
        if associator(a, x, b):
            return x
    return None
