"""Winding counts around a moving point.

A path ``g`` sampled at the frame times turns the moving-point count into a
stationary one: translating frame ``s`` by ``-g(s)`` is a fiberwise,
orientation-preserving self-map of ``M x I`` on the plane and the flat torus,
so the passages of the front through ``g(t)`` become passages of the
translated front through the origin.
"""

from __future__ import annotations

from .curves import (HomotopyTrack, PLCurve, PLPath, puncture_issues, require_surface,
                     scan_track)
from .errors import GenericityError, Issue, ValidationError
from .exact import ORIGIN, on_segment
from .indeterminacy import QuotientInt, quotient_project, subgroup_A, subgroup_B, sum_subgroups
from .surface import PLANE, ComponentDesc, SurfaceKind


def comoving_reduce(track: HomotopyTrack, g: PLPath) -> HomotopyTrack:
    """Frames translated by ``-g(s)``; surface and offsets are kept."""
    if len(g.points) != len(track.frames):
        raise ValidationError("path and track have different numbers of samples",
                              [Issue("LengthMismatch", {"path": len(g.points),
                                                        "track": len(track.frames)})])
    require_surface(track.surface, tuple(SurfaceKind), "comoving reduction")
    if g.surface != track.surface:
        raise ValidationError("path and track live on different surfaces",
                              [Issue("UnsupportedSurface")])
    return HomotopyTrack(tuple(f.translate(-q) for f, q in zip(track.frames, g.points)))


def _path_puncture_issues(g: PLPath) -> list[Issue]:
    return [Issue("PathHitsPuncture", {"segment": s, "puncture": j})
            for s, (a, b) in enumerate(zip(g.points, g.points[1:]))
            for j, z in enumerate(g.surface.punctures)
            if on_segment(z, a, b)]


def delta_AWIN(track: HomotopyTrack, g: PLPath) -> int:
    """Signed count of passages of the front through the moving point ``g(t)``.

    Punctures are fixed in the surface, so they are checked against the
    original track and path; the count itself runs on the reduced track with
    the punctures forgotten.
    """
    reduced = comoving_reduce(track, g)
    if reduced.surface.punctures:
        reduced = HomotopyTrack(tuple(PLCurve(PLANE, f.vertices, f.offset)
                                      for f in reduced.frames))
    total, issues = scan_track(reduced, ORIGIN, collect_all=False)
    issues += puncture_issues(track, first_only=True) + _path_puncture_issues(g)
    if issues:
        raise GenericityError("path is not transverse to the track",
                              [Issue("NonTransverse", {"cause": i.code, **i.detail})
                               for i in issues])
    return total


def AWIN_diff(track: HomotopyTrack, g: PLPath, comp: ComponentDesc) -> QuotientInt:
    """Change of the moving-point affine winding number along ``(track, g)``, in ``Z / (A + B)``."""
    if track.surface != comp.surface or track.offset != comp.torus_class:
        raise ValidationError("track does not lie in the given component",
                              [Issue("ComponentMismatch")])
    d = sum_subgroups(subgroup_A(comp), subgroup_B(comp))
    return quotient_project(d, delta_AWIN(track, g))
