"""Signed passage counts of PL homotopies, classical winding numbers, and affine winding numbers."""

from __future__ import annotations

import random
from fractions import Fraction

from .curves import (HomotopyTrack, PLCurve, curve_hits, is_periodic, match_shift,
                     require_good, require_surface, scan_track)
from .errors import Issue, NoGenericSampleFound, PointOnCurveError, ValidationError
from .exact import Pt, cross
from .indeterminacy import QuotientInt, quotient_project, subgroup_A
from .surface import ComponentDesc, SurfaceKind

DEGREE_SAMPLE_SEED = 20061107
DEGREE_SAMPLE_LIMIT = 1000
_SAMPLE_DENOMINATOR = 7919


def delta_awin(track: HomotopyTrack, p: Pt) -> int:
    """Sum of the signs of the preimages of ``p`` under the track.

    On the flat torus every lift of ``p`` falling in a triangle is counted.
    Raises :class:`~awin.errors.GenericityError` when the track is not good
    for ``p``.
    """
    return require_good(track, p)


def win(c: PLCurve, p: Pt) -> int:
    """Classical winding number of a plane curve around ``p`` by exact ray crossing.

    The ray leaves ``p`` in the ``+x`` direction.  An edge counts when exactly
    one endpoint lies strictly above the ray's line; upward crossings right of
    ``p`` add one, downward ones subtract one.  On a punctured plane this is
    the winding number in the ambient plane.
    """
    require_surface(c.surface, (SurfaceKind.PLANE, SurfaceKind.PUNCTURED_PLANE), "win")
    hits = curve_hits(c, p)
    if hits:
        raise PointOnCurveError(f"{p} lies on the curve",
                                [Issue("PointOnCurve", {"edge": i}) for i in hits])
    w = 0
    for a, b in c.edges():
        a_up = a.y > p.y
        b_up = b.y > p.y
        if a_up == b_up:
            continue
        side = cross(a, b, p)
        if not a_up and side > 0:
            w += 1
        elif a_up and side < 0:
            w -= 1
    return w


def sample_points(seed: int = DEGREE_SAMPLE_SEED):
    """Deterministic stream of rational points in the unit square."""
    rng = random.Random(seed)
    while True:
        yield Pt(Fraction(rng.randrange(1, _SAMPLE_DENOMINATOR), _SAMPLE_DENOMINATOR),
                 Fraction(rng.randrange(1, _SAMPLE_DENOMINATOR), _SAMPLE_DENOMINATOR))


def degree_periodic(track: HomotopyTrack, seed: int = DEGREE_SAMPLE_SEED) -> int:
    """Degree of the loop-of-loops map ``S^1 x S^1 -> M`` described by a periodic track.

    Planar surfaces are not closed, so the degree is 0.  On the torus the
    signed preimage count of the first generic point in a seeded sample
    stream is returned; at most ``DEGREE_SAMPLE_LIMIT`` candidates are tried.
    """
    if not is_periodic(track):
        raise ValidationError("first and last frames differ", [Issue("NotPeriodic")])
    if not track.surface.is_torus:
        return 0
    for n, q in enumerate(sample_points(seed)):
        if n >= DEGREE_SAMPLE_LIMIT:
            break
        total, issues = scan_track(track, q, collect_all=False)
        if not issues:
            return total
    raise NoGenericSampleFound(f"no generic point among {DEGREE_SAMPLE_LIMIT} samples",
                               [Issue("NoGenericSampleFound", {"tried": DEGREE_SAMPLE_LIMIT})])


def _check_component(track: HomotopyTrack, comp: ComponentDesc) -> None:
    if track.surface != comp.surface or track.offset != comp.torus_class:
        raise ValidationError("track does not lie in the given component",
                              [Issue("ComponentMismatch",
                                     {"track_offset": list(track.offset),
                                      "component_class": list(comp.torus_class)})])


def awin_diff(track: HomotopyTrack, p: Pt, comp: ComponentDesc) -> QuotientInt:
    """Change of the affine winding number around ``p`` along the track, in ``Z / A``."""
    _check_component(track, comp)
    return quotient_project(subgroup_A(comp), delta_awin(track, p))


def awin(eps: PLCurve, f: PLCurve, track: HomotopyTrack, p: Pt,
         comp: ComponentDesc) -> QuotientInt:
    """Affine winding number of ``f`` around ``p`` relative to the preferred curve ``eps``.

    ``track`` must run from ``eps`` to ``f``.
    """
    if match_shift(eps, track.first) is None or match_shift(f, track.last) is None:
        raise ValidationError("track does not run from eps to f", [Issue("EndpointMismatch")])
    return awin_diff(track, p, comp)
