"""Ready-made fixtures shared by the tests, the demos and the documentation.

Polygons approximating circles are rotated by half a step so no vertex sits
on a coordinate axis; otherwise straight-line tracks between concentric or
horizontally displaced circles would carry vertices exactly through points
on the axis, which is not generic.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .cauchy import Pole, RationalFn
from .curves import (HomotopyTrack, PLCurve, PLPath, concat_tracks, polygon, regular_polygon,
                     straight_line_track)
from .exact import Pt
from .surface import FLAT_TORUS, PLANE, ComponentDesc, SurfaceDesc, punctured_plane
from .wavefront import FrontSnapshot


def circle(center: Pt, radius, k: int = 64, surface: SurfaceDesc = PLANE) -> PLCurve:
    return regular_polygon(center, radius, k, surface, phase=math.pi / k)


@dataclass(frozen=True)
class CauchyFixture:
    f: RationalFn
    c1: PLCurve
    c2: PLCurve
    track: HomotopyTrack  # from c2 to c1


def residue_fixture(steps: int = 32) -> CauchyFixture:
    """``1/z`` with C1 the unit circle and C2 a small circle around ``(3, 0)``."""
    f = RationalFn((1,), (0, 1), (Pole(Pt(0, 0)),))
    c1 = circle(Pt(0, 0), 1)
    c2 = circle(Pt(3, 0), Fraction(1, 10))
    return CauchyFixture(f, c1, c2, straight_line_track(c2, c1, steps))


def punctured_plane_fixture(steps: int = 32) -> CauchyFixture:
    """``1/(z - 2)`` on the plane punctured at 0; C1, C2 circles of radius 3 and 1 about 0.

    Neither circle bounds in the punctured plane.  The straight-line track
    stays in the annulus between them, away from the puncture.
    """
    surface = punctured_plane(Pt(0, 0))
    f = RationalFn((1,), (-2, 1), (Pole(Pt(2, 0)),))
    c1 = circle(Pt(0, 0), 3, surface=surface)
    c2 = circle(Pt(0, 0), 1, surface=surface)
    return CauchyFixture(f, c1, c2, straight_line_track(c2, c1, steps))


def limacon(center: Pt, scale, k: int = 64, surface: SurfaceDesc = PLANE) -> PLCurve:
    """Polygon of ``r = scale * (1/2 + cos(theta))``, a loop with one inner loop.

    Points inside the inner loop have winding number 2.
    """
    verts = []
    s = Fraction(scale)
    for j in range(k):
        theta = math.pi * (2 * j + 1) / k
        r = 0.5 + math.cos(theta)
        x = Fraction(r * math.cos(theta)).limit_denominator(10**6)
        y = Fraction(r * math.sin(theta)).limit_denominator(10**6)
        verts.append(Pt(center.x + s * x, center.y + s * y))
    return PLCurve(surface, tuple(verts))


@dataclass(frozen=True)
class FrontFixture:
    s1: FrontSnapshot
    s2: FrontSnapshot
    track: HomotopyTrack
    point: Pt
    observer: PLPath  # a moving observer that drifts inside the inner loop


def two_passage_fronts(k: int = 64, steps: int = 16) -> FrontFixture:
    """A small round front away from ``p`` later becomes a limacon whose inner loop holds ``p``.

    Any generic propagation between the two shapes passes ``p`` at least twice.
    """
    p = Pt(1, Fraction(1, 7))
    start = circle(Pt(-6, 5), Fraction(1, 2), k)
    end = limacon(Pt(0, 0), 4, k)
    track = straight_line_track(start, end, steps)
    observer = PLPath.linear(PLANE, p, Pt(Fraction(5, 4), Fraction(-1, 9)), steps)
    return FrontFixture(FrontSnapshot(start, 0), FrontSnapshot(end, 1), track, p, observer)


def meridian_sweep(steps: int = 8, turns: int = 1, k: int = 3) -> HomotopyTrack:
    """Vertical loop ``x = s / steps`` of class ``(0, 1)`` swept ``turns`` times around the torus."""
    frames = []
    for s in range(steps * turns + 1):
        x = Fraction(s, steps)
        frames.append(PLCurve(FLAT_TORUS, tuple(Pt(x, Fraction(j, k)) for j in range(k)), (0, 1)))
    return HomotopyTrack(tuple(frames))


def geodesic(m: int, n: int, k: int = 8, base: Pt = Pt(0, 0)) -> PLCurve:
    """Straight closed loop of class ``(m, n)`` on the torus with ``k`` vertices."""
    return PLCurve(FLAT_TORUS, tuple(Pt(base.x + Fraction(m * j, k), base.y + Fraction(n * j, k))
                                     for j in range(k)), (m, n))


def class_2_4_track() -> tuple[HomotopyTrack, Pt, ComponentDesc]:
    """A track in class ``(2, 4)`` with signed count 3 at the returned point.

    The geodesic is swept by ``(3/4, 0)`` (count 2 at the point) and one vertex
    is then pushed out over the point (count 1).
    """
    sweep = Pt(Fraction(3, 4), 0)
    geo = geodesic(2, 4, 8)
    moved = geo.translate(sweep)
    verts = list(moved.vertices)
    verts[4] = verts[4] + Pt(Fraction(2, 5), Fraction(-1, 5))
    finger = PLCurve(FLAT_TORUS, tuple(verts), (2, 4))
    track = concat_tracks(straight_line_track(geo, moved, 4),
                          straight_line_track(moved, finger, 2))
    return track, Pt(Fraction(331, 6220), Fraction(959, 6260)), ComponentDesc(FLAT_TORUS, (2, 4))


def growing_triangle(steps: int = 4) -> tuple[PLCurve, PLCurve, HomotopyTrack, Pt]:
    """Tiny triangle near ``(5, 5)`` growing into a large one around the origin."""
    tiny = polygon([(5, 5), (Fraction(51, 10), 5), (5, Fraction(51, 10))])
    big = polygon([(-100, -99), (101, -100), (1, 100)])
    return tiny, big, straight_line_track(tiny, big, steps), Pt(0, 0)
