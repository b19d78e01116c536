"""Exact numeric helpers: rational parsing and square-root-comparable values.

Every quantity in this package is an exact rational except bounds of the
shape sqrt(q).  Those are kept as :class:`SqrtRational`, which stores the
radicand and compares against rationals by cross-multiplying squares, so
no floating point ever enters a comparison.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import BadParameterError

Rat = Fraction


def parse_rational(text: str) -> Fraction:
    """Parse "p/q" or "p" into an exact Fraction."""
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise BadParameterError(f"not a rational: {text!r}") from exc


def format_rational(q: Fraction) -> str:
    """Render a Fraction as "p/q" (or "p" for integers), losslessly."""
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def truncate_decimal(q: Fraction, digits: int = 4) -> str:
    """Decimal expansion of q >= 0 truncated (not rounded) to `digits` places."""
    if q < 0:
        raise BadParameterError("truncate_decimal expects a nonnegative value")
    scale = 10**digits
    t = q.numerator * scale // q.denominator
    whole, rem = divmod(t, scale)
    return f"{whole}.{rem:0{digits}d}"


@dataclass(frozen=True, order=False)
class SqrtRational:
    """The nonnegative real sqrt(square), compared exactly via its square.

    Comparisons against Fraction/int work in both directions; negative
    rationals are smaller than any value of this type.
    """

    square: Fraction

    def __post_init__(self):
        if self.square < 0:
            raise BadParameterError("radicand must be nonnegative")
        object.__setattr__(self, "square", Fraction(self.square))

    @staticmethod
    def of(value) -> "SqrtRational":
        """sqrt of a nonnegative rational."""
        return SqrtRational(Fraction(value))

    def exact(self) -> Fraction | None:
        """The exact rational value when the radicand is a perfect square."""
        n, d = self.square.numerator, self.square.denominator
        rn, rd = math.isqrt(n), math.isqrt(d)
        if rn * rn == n and rd * rd == d:
            return Fraction(rn, rd)
        return None

    def truncated(self, digits: int = 4) -> str:
        """Truncated decimal rendering, computed with integer square roots."""
        scale = 10**digits
        # floor(sqrt(square) * scale) = isqrt(floor(square * scale^2))
        t = math.isqrt(self.square.numerator * scale * scale // self.square.denominator)
        whole, rem = divmod(t, scale)
        return f"{whole}.{rem:0{digits}d}"

    def __float__(self) -> float:
        return math.sqrt(float(self.square))

    def _square_of(self, other) -> Fraction | None:
        if isinstance(other, SqrtRational):
            return other.square
        if isinstance(other, (int, Fraction)):
            return None  # handled separately to respect sign
        return NotImplemented  # type: ignore[return-value]

    def __eq__(self, other) -> bool:
        if isinstance(other, SqrtRational):
            return self.square == other.square
        if isinstance(other, (int, Fraction)):
            return other >= 0 and Fraction(other) ** 2 == self.square
        return NotImplemented

    def __lt__(self, other) -> bool:
        if isinstance(other, SqrtRational):
            return self.square < other.square
        if isinstance(other, (int, Fraction)):
            return other > 0 and self.square < Fraction(other) ** 2
        return NotImplemented

    def __le__(self, other) -> bool:
        if isinstance(other, SqrtRational):
            return self.square <= other.square
        if isinstance(other, (int, Fraction)):
            return other >= 0 and self.square <= Fraction(other) ** 2
        return NotImplemented

    def __gt__(self, other) -> bool:
        if isinstance(other, SqrtRational):
            return self.square > other.square
        if isinstance(other, (int, Fraction)):
            return other < 0 or self.square > Fraction(other) ** 2
        return NotImplemented

    def __ge__(self, other) -> bool:
        if isinstance(other, SqrtRational):
            return self.square >= other.square
        if isinstance(other, (int, Fraction)):
            return other <= 0 or self.square >= Fraction(other) ** 2
        return NotImplemented

    def __hash__(self):
        exact = self.exact()
        return hash(exact) if exact is not None else hash(("sqrt", self.square))

    def __repr__(self):
        exact = self.exact()
        if exact is not None:
            return f"SqrtRational({format_rational(exact)})"
        return f"sqrt({format_rational(self.square)})"
