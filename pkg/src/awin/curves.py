"""Closed PL curves, PL homotopy tracks, and the canonical triangulation of a track.

A :class:`PLCurve` with vertices ``v_0 .. v_{K-1}`` has edges ``v_i -> v_{i+1}``
and a closing edge ``v_{K-1} -> v_0 + offset``.  The offset is the curve's
homology class on the flat torus and must be ``(0, 0)`` elsewhere.

A :class:`HomotopyTrack` is a list of frames sharing surface, vertex count and
offset; frame ``s`` sits at time ``s / S`` and consecutive frames are joined
linearly.  Slab ``s``, edge ``i`` of a track is split along one diagonal into

    (v_i^s, v_{i+1}^s, v_{i+1}^{s+1})   and   (v_i^s, v_{i+1}^{s+1}, v_i^{s+1}).

Each listed triangle is the image of a counterclockwise triangle of the
(curve parameter, time) rectangle.  The sign of a preimage is taken with the
time axis first, which makes a counterclockwise loop swept outward across a
point count +1, so the counts agree with the classical winding number change.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Sequence

from .errors import GenericityError, Issue, ValidationError
from .exact import Pt, RatLike, as_rat, classify_point_triangle, cross, on_segment, Location
from .surface import PLANE, SurfaceDesc, SurfaceKind, integer_shift

# Preimage sign = TRIANGLE_SIGN * orient(image triangle); see module docstring.
TRIANGLE_SIGN = -1


@dataclass(frozen=True)
class PLCurve:
    surface: SurfaceDesc
    vertices: tuple[Pt, ...]
    offset: tuple[int, int] = (0, 0)

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(self.vertices))
        m, n = self.offset
        object.__setattr__(self, "offset", (int(m), int(n)))

    def __len__(self) -> int:
        return len(self.vertices)

    @property
    def offset_vector(self) -> Pt:
        return Pt(*self.offset)

    def vertex(self, i: int) -> Pt:
        """Vertex ``i`` for ``0 <= i <= K``; index ``K`` is the closing vertex ``v_0 + offset``."""
        if i == len(self.vertices):
            return self.vertices[0] + self.offset_vector
        return self.vertices[i]

    def edges(self) -> Iterator[tuple[Pt, Pt]]:
        for i in range(len(self.vertices)):
            yield self.vertex(i), self.vertex(i + 1)

    def translate(self, v: Pt) -> PLCurve:
        return PLCurve(self.surface, tuple(q + v for q in self.vertices), self.offset)

    def reversed(self) -> PLCurve:
        """Same image traversed backwards (offset negated)."""
        head = self.vertices[0] + self.offset_vector
        rest = tuple(reversed(self.vertices[1:]))
        verts = (head,) + rest
        return PLCurve(self.surface, verts, (-self.offset[0], -self.offset[1]))


def polygon(points: Sequence[Sequence[RatLike]], surface: SurfaceDesc = PLANE,
            offset: tuple[int, int] = (0, 0)) -> PLCurve:
    """Build a curve from coordinate pairs, e.g. ``polygon([(0, 0), (1, 0), (1, 1)])``."""
    return PLCurve(surface, tuple(Pt(x, y) for x, y in points), offset)


def regular_polygon(center: Pt, radius: RatLike, k: int, surface: SurfaceDesc = PLANE,
                    clockwise: bool = False, phase: float = 0.0,
                    max_denominator: int = 10**6) -> PLCurve:
    """A ``k``-gon inscribed (up to rational rounding) in a circle.

    Vertex coordinates are rational approximations of the circle points with
    denominators at most ``max_denominator``; the rounding changes nothing
    topological for reasonable ``k``.
    """
    r = as_rat(radius)
    verts = []
    for j in range(k):
        theta = phase + 2 * math.pi * j / k
        if clockwise:
            theta = -theta
        cx = Fraction(math.cos(theta)).limit_denominator(max_denominator)
        cy = Fraction(math.sin(theta)).limit_denominator(max_denominator)
        verts.append(Pt(center.x + r * cx, center.y + r * cy))
    return PLCurve(surface, tuple(verts))


def curve_hits(c: PLCurve, q: Pt) -> list[int]:
    """Indices of the edges of ``c`` that contain ``q`` (or, on the torus, a translate of it)."""
    hits = []
    torus = c.surface.is_torus
    for i, (a, b) in enumerate(c.edges()):
        for t in _candidates(q, (a, b), torus):
            if on_segment(t, a, b):
                hits.append(i)
                break
    return hits


def validate_curve(c: PLCurve) -> list[Issue]:
    """Return the violated curve invariants; an empty list means the curve is valid."""
    issues = []
    if len(c.vertices) < 3:
        issues.append(Issue("TooFewVertices", {"count": len(c.vertices)}))
    if c.offset != (0, 0) and not c.surface.is_torus:
        issues.append(Issue("OffsetOnNonTorus", {"offset": list(c.offset)}))
    for j, puncture in enumerate(c.surface.punctures):
        for i in curve_hits(c, puncture):
            issues.append(Issue("PunctureOnCurve", {"index": i, "puncture": j}))
    return issues


def require_valid_curve(c: PLCurve) -> PLCurve:
    issues = validate_curve(c)
    if issues:
        raise ValidationError("invalid curve", issues)
    return c


@dataclass(frozen=True)
class HomotopyTrack:
    frames: tuple[PLCurve, ...]

    def __post_init__(self):
        frames = tuple(self.frames)
        object.__setattr__(self, "frames", frames)
        if len(frames) < 2:
            raise ValidationError("a track needs at least two frames",
                                  [Issue("TooFewFrames", {"count": len(frames)})])
        first = frames[0]
        for s, f in enumerate(frames[1:], start=1):
            if f.surface != first.surface or len(f) != len(first) or f.offset != first.offset:
                raise ValidationError("frames must share surface, vertex count and offset",
                                      [Issue("MismatchedCurves", {"frame": s})])

    @property
    def steps(self) -> int:
        return len(self.frames) - 1

    @property
    def surface(self) -> SurfaceDesc:
        return self.frames[0].surface

    @property
    def offset(self) -> tuple[int, int]:
        return self.frames[0].offset

    @property
    def first(self) -> PLCurve:
        return self.frames[0]

    @property
    def last(self) -> PLCurve:
        return self.frames[-1]

    def translate(self, v: Pt) -> HomotopyTrack:
        return HomotopyTrack(tuple(f.translate(v) for f in self.frames))


@dataclass(frozen=True)
class PLPath:
    """A path sampled at the frame times ``s / S`` and linear in between."""

    surface: SurfaceDesc
    points: tuple[Pt, ...]

    def __post_init__(self):
        object.__setattr__(self, "points", tuple(self.points))
        if len(self.points) < 2:
            raise ValidationError("a path needs at least two points",
                                  [Issue("TooFewPoints", {"count": len(self.points)})])

    @classmethod
    def constant(cls, surface: SurfaceDesc, p: Pt, steps: int) -> PLPath:
        return cls(surface, (p,) * (steps + 1))

    @classmethod
    def linear(cls, surface: SurfaceDesc, a: Pt, b: Pt, steps: int) -> PLPath:
        return cls(surface, tuple(a.lerp(b, Fraction(s, steps)) for s in range(steps + 1)))

    def reversed(self) -> PLPath:
        return PLPath(self.surface, tuple(reversed(self.points)))


def canonical_triangles(track: HomotopyTrack) -> Iterator[tuple[int, int, int, Pt, Pt, Pt]]:
    """Yield ``(slab, edge, which, a, b, c)`` for every triangle of the canonical triangulation.

    ``which`` is 0 for ``(v_i^s, v_{i+1}^s, v_{i+1}^{s+1})`` and 1 for
    ``(v_i^s, v_{i+1}^{s+1}, v_i^{s+1})``; the triangle index used in reports is
    ``2 * edge + which``.
    """
    k = len(track.first)
    for s in range(track.steps):
        lo, hi = track.frames[s], track.frames[s + 1]
        for i in range(k):
            a, b = lo.vertex(i), lo.vertex(i + 1)
            c, d = hi.vertex(i + 1), hi.vertex(i)
            yield s, i, 0, a, b, c
            yield s, i, 1, a, c, d


def _bbox(pts: Sequence[Pt]) -> tuple[Fraction, Fraction, Fraction, Fraction]:
    xs = [q.x for q in pts]
    ys = [q.y for q in pts]
    return min(xs), min(ys), max(xs), max(ys)


def _candidates(p: Pt, pts: Sequence[Pt], torus: bool) -> list[Pt]:
    """Lifts of ``p`` inside the bounding box of ``pts`` (just ``p`` itself off the torus)."""
    x0, y0, x1, y1 = _bbox(pts)
    if not torus:
        return [p] if x0 <= p.x <= x1 and y0 <= p.y <= y1 else []
    return [Pt(p.x + i, p.y + j)
            for i in range(math.ceil(x0 - p.x), math.floor(x1 - p.x) + 1)
            for j in range(math.ceil(y0 - p.y), math.floor(y1 - p.y) + 1)]


def scan_track(track: HomotopyTrack, p: Pt, collect_all: bool = True) -> tuple[int, list[Issue]]:
    """Signed preimage count of ``p`` together with every validity issue found.

    The count is meaningful only when the issue list is empty.
    """
    issues: list[Issue] = []
    for s, frame in enumerate(track.frames):
        for issue in validate_curve(frame):
            issues.append(Issue(issue.code, {"frame": s, **issue.detail}))
    if issues and not collect_all:
        return 0, issues

    torus = track.surface.is_torus
    for which in (0, track.steps):
        if curve_hits(track.frames[which], p):
            issues.append(Issue("BadEndpoint", {"frame": which}))
    if issues and not collect_all:
        return 0, issues

    total = 0
    for s, i, w, a, b, c in canonical_triangles(track):
        area = cross(a, b, c)
        for q in _candidates(p, (a, b, c), torus):
            loc = classify_point_triangle(q, a, b, c)
            if loc is Location.INTERIOR:
                total += TRIANGLE_SIGN * (1 if area > 0 else -1)
            elif loc is Location.BOUNDARY:
                issues.append(Issue("NonGeneric", {"slab": s, "triangle": 2 * i + w}))
                if not collect_all:
                    return 0, issues
    issues.extend(puncture_issues(track, first_only=not collect_all))
    return total, issues


def puncture_issues(track: HomotopyTrack, first_only: bool = False) -> list[Issue]:
    """Triangles of the track that touch a puncture (interior or boundary)."""
    issues = []
    punctures = track.surface.punctures
    if not punctures:
        return issues
    for s, i, w, a, b, c in canonical_triangles(track):
        for j, z in enumerate(punctures):
            if classify_point_triangle(z, a, b, c) is not Location.OUTSIDE:
                issues.append(Issue("HitsPuncture", {"slab": s, "triangle": 2 * i + w,
                                                     "puncture": j}))
                if first_only:
                    return issues
    return issues


def validate_track(track: HomotopyTrack, p: Pt) -> list[Issue]:
    """Issues preventing ``track`` from being a good homotopy for the point ``p``.

    Checks that ``p`` avoids the first and last frame, lies on no edge or
    vertex of the canonical triangulation (which also excludes degenerate
    triangles through ``p``), and that no triangle touches a puncture.
    """
    return scan_track(track, p)[1]


def require_good(track: HomotopyTrack, p: Pt) -> int:
    """Signed preimage count of ``p``; raises :class:`GenericityError` if the track is not good."""
    total, issues = scan_track(track, p, collect_all=False)
    if issues:
        raise GenericityError(f"track is not good for point {p}", issues)
    return total


def straight_line_track(c0: PLCurve, c1: PLCurve, steps: int) -> HomotopyTrack:
    """Vertexwise linear interpolation from ``c0`` to ``c1`` in ``steps`` equal slabs."""
    if steps < 1:
        raise ValueError("steps must be >= 1")
    if c0.surface != c1.surface or len(c0) != len(c1) or c0.offset != c1.offset:
        raise ValidationError("curves differ in surface, vertex count or offset",
                              [Issue("MismatchedCurves")])
    frames = [c0]
    for s in range(1, steps):
        t = Fraction(s, steps)
        frames.append(PLCurve(c0.surface,
                              tuple(a.lerp(b, t) for a, b in zip(c0.vertices, c1.vertices)),
                              c0.offset))
    frames.append(c1)
    return HomotopyTrack(tuple(frames))


def resample(c: PLCurve, k: int) -> PLCurve:
    """Insert vertices on the edges of ``c`` until it has ``k`` of them.

    The extra ``k - K`` vertices are spread over the ``K`` edges as evenly as
    possible (earlier edges take the remainder) and placed at equal rational
    parameters along each edge, so the image is unchanged.
    """
    n = len(c.vertices)
    if k < n:
        raise ValidationError(f"cannot shrink a {n}-vertex curve to {k}",
                              [Issue("ShrinkNotSupported", {"from": n, "to": k})])
    base, extra = divmod(k - n, n)
    verts = []
    for i, (a, b) in enumerate(c.edges()):
        verts.append(a)
        pieces = base + (1 if i < extra else 0) + 1
        verts.extend(a.lerp(b, Fraction(j, pieces)) for j in range(1, pieces))
    return PLCurve(c.surface, tuple(verts), c.offset)


def resample_track(track: HomotopyTrack, k: int) -> HomotopyTrack:
    return HomotopyTrack(tuple(resample(f, k) for f in track.frames))


def refine_track(track: HomotopyTrack, factor: int) -> HomotopyTrack:
    """Split every slab into ``factor`` equal slabs (same PL map, finer in time)."""
    frames = [track.frames[0]]
    for lo, hi in zip(track.frames, track.frames[1:]):
        frames.extend(straight_line_track(lo, hi, factor).frames[1:])
    return HomotopyTrack(tuple(frames))


def match_shift(c0: PLCurve, c1: PLCurve) -> tuple[int, int] | None:
    """The common shift ``v`` with ``c1 = c0 + v``, or ``None``.

    Off the torus only the zero shift counts; on the torus any common integer
    vector does.
    """
    if c0.surface != c1.surface or len(c0) != len(c1) or c0.offset != c1.offset:
        return None
    shift = integer_shift(c0.vertices[0], c1.vertices[0])
    if shift is None or (shift != (0, 0) and not c0.surface.is_torus):
        return None
    v = Pt(*shift)
    if all(a + v == b for a, b in zip(c0.vertices, c1.vertices)):
        return shift
    return None


def reverse_track(track: HomotopyTrack) -> HomotopyTrack:
    return HomotopyTrack(tuple(reversed(track.frames)))


def concat_tracks(t1: HomotopyTrack, t2: HomotopyTrack) -> HomotopyTrack:
    """``t1`` followed by ``t2``; on the torus ``t2`` is shifted to start where ``t1`` ends."""
    shift = match_shift(t2.first, t1.last)
    if shift is None:
        raise ValidationError("last frame of the first track differs from the first frame "
                              "of the second", [Issue("EndpointMismatch")])
    if shift != (0, 0):
        t2 = t2.translate(Pt(*shift))
    return HomotopyTrack(t1.frames + t2.frames[1:])


def is_periodic(track: HomotopyTrack) -> bool:
    return match_shift(track.first, track.last) is not None


def require_surface(surface: SurfaceDesc, kinds: Sequence[SurfaceKind], what: str) -> None:
    if surface.kind not in kinds:
        raise ValidationError(f"{what} is not supported on {surface.kind.value}",
                              [Issue("UnsupportedSurface", {"surface": surface.kind.value})])
