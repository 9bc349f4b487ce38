"""Numerical check of the Cauchy integral formula for homotopic, not necessarily null-homologous, loops.

For a rational function ``f`` with poles ``a_j`` and a good homotopy ``T`` from
``C2`` to ``C1`` on a non-closed surface, the identity checked is

    integral(C1, f dz) = integral(C2, f dz)
                         + 2 pi i * sum_j Res(f, a_j) * delta_awin(T, a_j).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

from .curves import HomotopyTrack, PLCurve, match_shift, require_surface
from .errors import (GenericityError, Issue, PoleOnContourError, QuadratureNotConverged,
                     ValidationError)
from .exact import Pt, on_segment
from .surface import SurfaceKind
from .winding import delta_awin

POLE_TOLERANCE = 1e-9
RESIDUE_RTOL = 1e-10
RESIDUE_START_PANELS = 4
RESIDUE_MAX_PANELS = 4096
RESIDUE_ORDER = 16

_PLANAR = (SurfaceKind.PLANE, SurfaceKind.PUNCTURED_PLANE)


@lru_cache(maxsize=None)
def gauss_legendre(order: int) -> tuple[np.ndarray, np.ndarray]:
    """Nodes and weights on ``[0, 1]``."""
    x, w = np.polynomial.legendre.leggauss(order)
    return (x + 1) / 2, w / 2


@dataclass(frozen=True)
class Pole:
    at: Pt
    order: int = 1


@dataclass(frozen=True)
class RationalFn:
    """``num(z) / den(z)`` with coefficients in ascending powers of ``z``.

    Poles are declared, not computed; each must be an exact rational point
    where the denominator vanishes to within ``POLE_TOLERANCE``.
    """

    numerator: tuple[complex, ...]
    denominator: tuple[complex, ...]
    poles: tuple[Pole, ...] = field(default=())

    def __post_init__(self):
        object.__setattr__(self, "numerator", tuple(complex(c) for c in self.numerator))
        object.__setattr__(self, "denominator", tuple(complex(c) for c in self.denominator))
        object.__setattr__(self, "poles", tuple(self.poles))
        if not any(self.denominator):
            raise ValueError("denominator is identically zero")
        scale = 1 + max(abs(c) for c in self.numerator + self.denominator)
        for j, pole in enumerate(self.poles):
            if pole.order < 1:
                raise ValueError(f"pole {j} has order {pole.order}")
            if abs(self.den(pole.at.to_complex())) > POLE_TOLERANCE * scale:
                raise ValueError(f"declared pole {j} at {pole.at} is not a zero of the denominator")
        if len({pole.at for pole in self.poles}) != len(self.poles):
            raise ValueError("declared poles must be distinct")

    def num(self, z):
        return np.polynomial.polynomial.polyval(z, self.numerator)

    def den(self, z):
        return np.polynomial.polynomial.polyval(z, self.denominator)

    def __call__(self, z):
        return self.num(z) / self.den(z)


@dataclass(frozen=True)
class CauchyReport:
    lhs: complex
    rhs: complex
    awin_differences: tuple[int, ...]
    residues: tuple[complex, ...]
    abs_error: float
    tol: float

    @property
    def passed(self) -> bool:
        return self.abs_error <= self.tol

    def to_dict(self) -> dict:
        return {
            "lhs": [self.lhs.real, self.lhs.imag],
            "rhs": [self.rhs.real, self.rhs.imag],
            "awin_differences": list(self.awin_differences),
            "residues": [[r.real, r.imag] for r in self.residues],
            "abs_error": self.abs_error,
            "tol": self.tol,
            "pass": self.passed,
        }


def _circle_integral(f: RationalFn, center: complex, radius: float, panels: int) -> complex:
    nodes, weights = gauss_legendre(RESIDUE_ORDER)
    starts = np.arange(panels)[:, None]
    theta = 2 * np.pi * (starts + nodes[None, :]) / panels
    z = center + radius * np.exp(1j * theta)
    dz = 1j * radius * np.exp(1j * theta) * (2 * np.pi / panels)
    return complex(np.sum(f(z) * dz * weights[None, :]))


def residue(f: RationalFn, j: int) -> complex:
    """Residue of ``f`` at its declared pole ``j``.

    Simple poles use ``num(a) / den'(a)``.  Higher orders integrate ``f`` over
    a circle of radius half the distance to the nearest other pole (``1/2``
    when there is none), doubling the Gauss-Legendre panel count until two
    estimates agree to ``RESIDUE_RTOL`` relative to ``max(1, |estimate|)``.
    """
    pole = f.poles[j]
    a = pole.at.to_complex()
    if pole.order == 1:
        dden = np.polynomial.polynomial.polyder(np.array(f.denominator))
        return complex(f.num(a) / np.polynomial.polynomial.polyval(a, dden))
    others = [abs(a - q.at.to_complex()) for k, q in enumerate(f.poles) if k != j]
    radius = min(others) / 2 if others else 0.5
    panels = RESIDUE_START_PANELS
    prev = _circle_integral(f, a, radius, panels) / (2j * np.pi)
    while panels < RESIDUE_MAX_PANELS:
        panels *= 2
        cur = _circle_integral(f, a, radius, panels) / (2j * np.pi)
        if abs(cur - prev) < RESIDUE_RTOL * max(1.0, abs(cur)):
            return cur
        prev = cur
    raise QuadratureNotConverged(f"residue quadrature at pole {j} did not settle",
                                 [Issue("QuadratureNotConverged",
                                        {"pole": j, "panels": panels})])


def _poles_on_contour(f: RationalFn, c: PLCurve) -> list[Issue]:
    return [Issue("PoleOnContour", {"pole": j, "edge": i})
            for i, (a, b) in enumerate(c.edges())
            for j, pole in enumerate(f.poles)
            if on_segment(pole.at, a, b)]


def contour_integral(f: RationalFn, c: PLCurve, panels_per_edge: int = 4,
                     order: int = 16) -> complex:
    """Composite Gauss-Legendre approximation of the integral of ``f dz`` around ``c``."""
    require_surface(c.surface, _PLANAR, "contour integration")
    issues = _poles_on_contour(f, c)
    if issues:
        raise PoleOnContourError("a declared pole lies on the contour", issues)
    verts = np.array([v.to_complex() for v in c.vertices])
    a = verts
    b = np.roll(verts, -1)
    nodes, weights = gauss_legendre(order)
    # parameter of every node on every edge: panel start + node, scaled to [0, 1]
    t = (np.arange(panels_per_edge)[:, None] + nodes[None, :]).ravel() / panels_per_edge
    w = np.tile(weights, panels_per_edge) / panels_per_edge
    z = a[:, None] + (b - a)[:, None] * t[None, :]
    vals = f(z) * (b - a)[:, None]
    return complex(np.sum(vals * w[None, :]))


def cauchy_check(f: RationalFn, c1: PLCurve, c2: PLCurve, track: HomotopyTrack,
                 tol: float = 1e-6, panels_per_edge: int = 4, order: int = 16) -> CauchyReport:
    """Compare both sides of the generalized Cauchy formula for ``track`` running from ``c2`` to ``c1``."""
    for c in (c1, c2):
        require_surface(c.surface, _PLANAR, "the Cauchy check")
    if match_shift(c2, track.first) is None or match_shift(c1, track.last) is None:
        raise ValidationError("track must run from C2 to C1", [Issue("EndpointMismatch")])
    counts = []
    for j, pole in enumerate(f.poles):
        try:
            counts.append(delta_awin(track, pole.at))
        except GenericityError as exc:
            raise GenericityError(f"pole {j} is not generic for the track",
                                  [Issue(i.code, {"pole": j, **i.detail})
                                   for i in exc.issues]) from exc
    residues = [residue(f, j) for j in range(len(f.poles))]
    lhs = contour_integral(f, c1, panels_per_edge, order)
    rhs = contour_integral(f, c2, panels_per_edge, order)
    rhs += 2j * math.pi * sum(r * n for r, n in zip(residues, counts))
    return CauchyReport(lhs, rhs, tuple(counts), tuple(residues), abs(lhs - rhs), tol)
