"""Surface models: the plane, a plane with finitely many punctures, and the flat torus.

Points on the flat torus ``R^2 / Z^2`` are stored in lift coordinates; two lifts
name the same torus point when they differ by an integer vector.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import Issue, ValidationError
from .exact import Pt


class SurfaceKind(enum.Enum):
    PLANE = "plane"
    PUNCTURED_PLANE = "punctured_plane"
    FLAT_TORUS = "flat_torus"


@dataclass(frozen=True)
class SurfaceDesc:
    kind: SurfaceKind
    punctures: tuple[Pt, ...] = field(default=())

    def __post_init__(self):
        object.__setattr__(self, "punctures", tuple(self.punctures))
        if self.kind is SurfaceKind.PUNCTURED_PLANE:
            if not self.punctures:
                raise ValidationError("a punctured plane needs at least one puncture",
                                      [Issue("MissingPunctures")])
            if len(set(self.punctures)) != len(self.punctures):
                raise ValidationError("punctures must be pairwise distinct",
                                      [Issue("DuplicatePuncture")])
        elif self.punctures:
            raise ValidationError(f"{self.kind.value} takes no punctures",
                                  [Issue("UnexpectedPunctures")])

    @property
    def is_torus(self) -> bool:
        return self.kind is SurfaceKind.FLAT_TORUS

    @property
    def is_closed(self) -> bool:
        return self.is_torus


PLANE = SurfaceDesc(SurfaceKind.PLANE)
FLAT_TORUS = SurfaceDesc(SurfaceKind.FLAT_TORUS)


def punctured_plane(*punctures: Pt) -> SurfaceDesc:
    return SurfaceDesc(SurfaceKind.PUNCTURED_PLANE, tuple(punctures))


@dataclass(frozen=True)
class ComponentDesc:
    """A connected component of the space of loops on ``surface``.

    On the torus the component of a loop is determined by its homology class
    ``torus_class = (m, n)``; on planar surfaces the class is always ``(0, 0)``.
    """

    surface: SurfaceDesc
    torus_class: tuple[int, int] = (0, 0)

    def __post_init__(self):
        m, n = self.torus_class
        object.__setattr__(self, "torus_class", (int(m), int(n)))
        if not self.surface.is_torus and self.torus_class != (0, 0):
            raise ValidationError("only torus components carry a nonzero class",
                                  [Issue("OffsetOnNonTorus", {"class": list(self.torus_class)})])


def _integer_range(lo: Fraction, hi: Fraction) -> range:
    return range(math.ceil(lo), math.floor(hi) + 1)


def torus_translates(p: Pt, lo: Pt, hi: Pt) -> list[Pt]:
    """All points ``p + (i, j)`` with integer ``i, j`` inside the closed box ``[lo, hi]``.

    Ordered by ``i`` then ``j``.
    """
    return [Pt(p.x + i, p.y + j)
            for i in _integer_range(lo.x - p.x, hi.x - p.x)
            for j in _integer_range(lo.y - p.y, hi.y - p.y)]


def integer_shift(a: Pt, b: Pt) -> tuple[int, int] | None:
    """The integer vector ``b - a`` if it is one, else ``None``."""
    d = b - a
    if d.x.denominator == 1 and d.y.denominator == 1:
        return int(d.x), int(d.y)
    return None
