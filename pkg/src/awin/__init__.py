"""Affine winding numbers of piecewise-linear closed curves on surfaces.

The central quantity is the signed number of times a PL homotopy of loops
passes through a point.  Taken modulo an indeterminacy subgroup that depends
on the surface and the loops' homotopy class, it gives a winding number that
makes sense on closed surfaces and for loops that bound nothing.
"""

from .cauchy import CauchyReport, Pole, RationalFn, cauchy_check, contour_integral, residue
from .curves import (HomotopyTrack, PLCurve, PLPath, canonical_triangles, concat_tracks,
                     polygon, refine_track, regular_polygon, resample, resample_track,
                     reverse_track, straight_line_track, validate_curve, validate_track)
from .errors import (AwinError, DocumentError, GenericityError, Issue, NoGenericSampleFound,
                     PointOnCurveError, PoleOnContourError, QuadratureNotConverged,
                     ValidationError)
from .exact import Location, Pt, classify_point_triangle, orient
from .indeterminacy import (ConditionsReport, ManifoldMeta, QuotientInt, Subgroup,
                            check_conditions, quotient_project, subgroup_A, subgroup_B,
                            sum_subgroups)
from .moving import AWIN_diff, comoving_reduce, delta_AWIN
from .surface import (FLAT_TORUS, PLANE, ComponentDesc, SurfaceDesc, SurfaceKind,
                      punctured_plane, torus_translates)
from .wavefront import FrontSnapshot, moving_observer_bound, passage_lower_bound
from .winding import awin, awin_diff, degree_periodic, delta_awin, win

__version__ = "0.1.0"
