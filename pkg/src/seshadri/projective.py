"""Exact projective plane over the rationals.

Points and lines are homogeneous triples of Fractions kept in a canonical
normalization (first nonzero coordinate equal to 1), so equality and
hashing are structural and every predicate is decided exactly.  Joins and
meets are cross products; a point lies on a line iff the dot product of
their coordinate triples vanishes.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import BadParameterError, EqualLinesError, EqualPointsError

Triple = tuple[Fraction, Fraction, Fraction]


def _canonical(coords) -> Triple:
    vals = tuple(Fraction(c) for c in coords)
    if len(vals) != 3:
        raise BadParameterError("homogeneous coordinates need exactly 3 entries")
    for v in vals:
        if v != 0:
            return tuple(c / v for c in vals)  # type: ignore[return-value]
    raise BadParameterError("all-zero triple is not a projective element")


def _cross(a: Triple, b: Triple) -> Triple:
    return (
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    )


@dataclass(frozen=True)
class ProjPoint:
    """A point of P^2(Q) in leading-one canonical form."""

    coords: Triple

    def __init__(self, x, y, z):
        object.__setattr__(self, "coords", _canonical((x, y, z)))

    def __repr__(self):
        x, y, z = self.coords
        return f"[{x}:{y}:{z}]"


@dataclass(frozen=True)
class ProjLine:
    """A line of P^2(Q), coefficients in leading-one canonical form."""

    coeffs: Triple

    def __init__(self, a, b, c):
        object.__setattr__(self, "coeffs", _canonical((a, b, c)))

    def __repr__(self):
        a, b, c = self.coeffs
        return f"{{{a},{b},{c}}}"


def incident(p: ProjPoint, line: ProjLine) -> bool:
    """True iff p lies on the line (exact dot-product test)."""
    return sum(c * x for c, x in zip(line.coeffs, p.coords)) == 0


def line_through(p: ProjPoint, q: ProjPoint) -> ProjLine:
    """The unique line through two distinct points."""
    if p == q:
        raise EqualPointsError(f"no unique line through {p} twice")
    return ProjLine(*_cross(p.coords, q.coords))


def meet(l1: ProjLine, l2: ProjLine) -> ProjPoint:
    """The unique intersection point of two distinct lines."""
    if l1 == l2:
        raise EqualLinesError(f"no unique meet of {l1} with itself")
    return ProjPoint(*_cross(l1.coeffs, l2.coeffs))
