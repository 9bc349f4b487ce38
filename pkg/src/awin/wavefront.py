"""Lower bounds on how often a propagating front passed through a point.

Only two snapshots of the front are needed; the connecting track can be any
good homotopy between them.  When the relevant subgroup ``dZ`` is nonzero, the
true propagation's signed count is only known modulo ``d``, so the bound is
the smallest absolute value in that residue class.  This is still a valid
bound: the true count ``n`` satisfies ``n = delta (mod d)``, hence the number
of passages is at least ``|n| >= min_k |delta + k d|``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .curves import HomotopyTrack, PLCurve, PLPath, match_shift
from .errors import Issue, ValidationError
from .exact import Pt, RatLike, as_rat
from .indeterminacy import quotient_project, subgroup_A, subgroup_B, sum_subgroups
from .moving import delta_AWIN
from .surface import ComponentDesc
from .winding import awin_diff


@dataclass(frozen=True)
class FrontSnapshot:
    curve: PLCurve
    time: Fraction

    def __init__(self, curve: PLCurve, time: RatLike):
        object.__setattr__(self, "curve", curve)
        object.__setattr__(self, "time", as_rat(time))


def _check_snapshots(s1: FrontSnapshot, s2: FrontSnapshot, track: HomotopyTrack) -> None:
    if not s1.time < s2.time:
        raise ValidationError("snapshots must be in increasing time order",
                              [Issue("TimeOrder", {"t1": str(s1.time), "t2": str(s2.time)})])
    if match_shift(s1.curve, track.first) is None or match_shift(s2.curve, track.last) is None:
        raise ValidationError("track endpoints do not match the snapshots",
                              [Issue("EndpointMismatch")])


def passage_lower_bound(s1: FrontSnapshot, s2: FrontSnapshot, track: HomotopyTrack, p: Pt,
                        comp: ComponentDesc) -> int:
    """Minimum number of passages of the front through the fixed point ``p`` between the snapshots."""
    _check_snapshots(s1, s2, track)
    return awin_diff(track, p, comp).smallest_abs()


def moving_observer_bound(s1: FrontSnapshot, s2: FrontSnapshot, track: HomotopyTrack,
                          g: PLPath, comp: ComponentDesc) -> int:
    """Minimum number of passages through an observer moving along ``g``."""
    _check_snapshots(s1, s2, track)
    if track.surface != comp.surface or track.offset != comp.torus_class:
        raise ValidationError("track does not lie in the given component",
                              [Issue("ComponentMismatch")])
    d = sum_subgroups(subgroup_A(comp), subgroup_B(comp))
    return quotient_project(d, delta_AWIN(track, g)).smallest_abs()
