"""Seeded random instance generators shared by the property and acceptance tests."""

import random
from fractions import Fraction

from awin import (FLAT_TORUS, PLANE, GenericityError, HomotopyTrack, PLCurve, PLPath, Pt,
                  concat_tracks, straight_line_track, validate_track)

DEN = 1009  # prime denominator keeps random points off lattice-aligned features


def rat(rng: random.Random, lo, hi) -> Fraction:
    lo, hi = Fraction(lo), Fraction(hi)
    return lo + (hi - lo) * Fraction(rng.randrange(1, DEN), DEN)


def point(rng, lo=-1, hi=1) -> Pt:
    return Pt(rat(rng, lo, hi), rat(rng, lo, hi))


def plane_curve(rng, k=None, center=Pt(0, 0), radius=4) -> PLCurve:
    """Random (possibly self-intersecting) polygon near ``center``."""
    k = k or rng.randint(3, 7)
    return PLCurve(PLANE, tuple(center + point(rng, -radius, radius) for _ in range(k)))


def torus_curve(rng, cls, k=6, wobble=Fraction(1, 4)) -> PLCurve:
    """Random loop of class ``cls``: a perturbed geodesic, or a small polygon for class (0, 0)."""
    m, n = cls
    base = point(rng, 0, 1)
    verts = []
    for j in range(k):
        on_line = Pt(base.x + Fraction(m * j, k), base.y + Fraction(n * j, k))
        verts.append(on_line + point(rng, -wobble, wobble))
    return PLCurve(FLAT_TORUS, tuple(verts), (m, n))


def lattice_shift(rng, reach=1) -> Pt:
    return Pt(rng.randint(-reach, reach), rng.randint(-reach, reach))


def torus_track_pair(rng, cls, k=6):
    """Two tracks with equal endpoint frames on the torus (the second ends on a lattice translate)."""
    c0, c1, mid = (torus_curve(rng, cls, k) for _ in range(3))
    t1 = straight_line_track(c0, c1, rng.randint(1, 3))
    via = mid.translate(lattice_shift(rng))
    t2 = concat_tracks(straight_line_track(c0, via, rng.randint(1, 3)),
                       straight_line_track(via, c1.translate(lattice_shift(rng)),
                                           rng.randint(1, 3)))
    return t1, t2


def periodic_torus_track(rng, cls, k=5) -> HomotopyTrack:
    """Track from a loop through a random loop to a lattice translate of the start."""
    c0 = torus_curve(rng, cls, k)
    mid = torus_curve(rng, cls, k).translate(lattice_shift(rng))
    end = c0.translate(lattice_shift(rng, 2))
    return concat_tracks(straight_line_track(c0, mid, rng.randint(1, 2)),
                         straight_line_track(mid, end, rng.randint(1, 2)))


def generic_point(rng, track, lo=0, hi=1, tries=200) -> Pt:
    for _ in range(tries):
        p = point(rng, lo, hi)
        if not validate_track(track, p):
            return p
    raise GenericityError("no generic point found")


def random_path(rng, surface, steps, start, spread=1) -> PLPath:
    pts = [start] + [start + point(rng, -spread, spread) for _ in range(steps)]
    return PLPath(surface, tuple(pts))
