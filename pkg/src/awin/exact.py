"""Exact rational points and the two predicates all counting is built on.

Scalars are :class:`fractions.Fraction` (always stored in lowest terms with a
positive denominator), so every sign computed here is exact.
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

Rat = Fraction
RatLike = Union[int, str, Fraction]

_DECIMAL = re.compile(r"^[+-]?(\d+(\.\d*)?|\.\d+)([eE][+-]?\d+)?$")
_RATIO = re.compile(r"^[+-]?\d+\s*/\s*[+-]?\d+$")


def as_rat(value: RatLike) -> Fraction:
    """Convert an integer, a ``"p/q"`` string or a decimal string to a :class:`Fraction`.

    Binary floats are refused: they rarely mean what they look like
    (``0.1`` is not one tenth), and exactness is the point of this module.
    """
    if isinstance(value, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        text = value.strip()
        if _RATIO.match(text) or _DECIMAL.match(text):
            return Fraction(text.replace(" ", ""))
        raise ValueError(f"not a rational literal: {value!r}")
    raise TypeError(f"cannot make an exact rational from {type(value).__name__}")


def format_rat(value: Fraction) -> int | str:
    """Inverse of :func:`as_rat` used by serialization: ints stay ints, others become ``"p/q"``."""
    if value.denominator == 1:
        return value.numerator
    return f"{value.numerator}/{value.denominator}"


@dataclass(frozen=True, slots=True)
class Pt:
    x: Fraction
    y: Fraction

    def __init__(self, x: RatLike, y: RatLike):
        object.__setattr__(self, "x", as_rat(x))
        object.__setattr__(self, "y", as_rat(y))

    def __add__(self, other: Pt) -> Pt:
        return Pt(self.x + other.x, self.y + other.y)

    def __sub__(self, other: Pt) -> Pt:
        return Pt(self.x - other.x, self.y - other.y)

    def __neg__(self) -> Pt:
        return Pt(-self.x, -self.y)

    def scale(self, k: RatLike) -> Pt:
        k = as_rat(k)
        return Pt(self.x * k, self.y * k)

    def lerp(self, other: Pt, t: Fraction) -> Pt:
        """Point ``(1 - t) * self + t * other``."""
        return Pt(self.x + (other.x - self.x) * t, self.y + (other.y - self.y) * t)

    def to_complex(self) -> complex:
        return complex(float(self.x), float(self.y))

    def __iter__(self):
        yield self.x
        yield self.y

    def __repr__(self) -> str:
        return f"Pt({self.x}, {self.y})"


ORIGIN = Pt(0, 0)


def cross(a: Pt, b: Pt, c: Pt) -> Fraction:
    """Twice the signed area of triangle ``abc``."""
    return (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x)


def orient(a: Pt, b: Pt, c: Pt) -> int:
    """Return +1 if ``a, b, c`` turn counterclockwise, -1 if clockwise, 0 if collinear."""
    d = cross(a, b, c)
    return (d > 0) - (d < 0)


class Location(enum.Enum):
    INTERIOR = "Interior"
    BOUNDARY = "Boundary"
    OUTSIDE = "Outside"


def on_segment(p: Pt, a: Pt, b: Pt) -> bool:
    """True iff ``p`` lies on the closed segment ``ab``."""
    if cross(a, b, p) != 0:
        return False
    return min(a.x, b.x) <= p.x <= max(a.x, b.x) and min(a.y, b.y) <= p.y <= max(a.y, b.y)


def classify_point_triangle(p: Pt, a: Pt, b: Pt, c: Pt) -> Location:
    """Locate ``p`` relative to the closed triangle ``abc``.

    Degenerate (zero-area) triangles have no interior, so the answer is then
    ``BOUNDARY`` when ``p`` lies on one of the three segments and ``OUTSIDE``
    otherwise.
    """
    area = cross(a, b, c)
    if area == 0:
        if on_segment(p, a, b) or on_segment(p, b, c) or on_segment(p, c, a):
            return Location.BOUNDARY
        return Location.OUTSIDE
    s = 1 if area > 0 else -1
    d1 = cross(a, b, p) * s
    d2 = cross(b, c, p) * s
    d3 = cross(c, a, p) * s
    if d1 < 0 or d2 < 0 or d3 < 0:
        return Location.OUTSIDE
    if d1 == 0 or d2 == 0 or d3 == 0:
        return Location.BOUNDARY
    return Location.INTERIOR
