"""
Winding numbers as passage counts
=================================

A loop that grows from a tiny triangle far away into a big triangle around
the origin has to pass the origin.  The signed count of those passages is the
change in the classical winding number.
"""

# %%
from fractions import Fraction

from awin import (ComponentDesc, PLANE, Pt, awin, concat_tracks, delta_awin, polygon,
                  straight_line_track, win)
from awin.scenarios import growing_triangle

tiny, big, track, origin = growing_triangle()
print("winding before:", win(tiny, origin), " after:", win(big, origin))
print("signed passages:", delta_awin(track, origin))

# %%
# The count does not care how the loop moves, only where it starts and ends.
# Detour through a triangle far to the left and compare.
detour = polygon([(-40, 3), (-39, 3), (-40, 4)])
other = concat_tracks(straight_line_track(tiny, detour, 3), straight_line_track(detour, big, 3))
print("via the detour:", delta_awin(other, origin))

# %%
# Relative to a fixed reference loop, the affine winding number differs from
# the classical one by a constant: minus the reference loop's own winding.
eps = polygon([(-1, -1), (1, -1), (1, 1)])
p = Pt(Fraction(1, 5), Fraction(-1, 3))
for f in (big, tiny, polygon([(3, 3), (4, 3), (3, 4)])):
    t = straight_line_track(eps, f, 4)
    q = awin(eps, f, t, p, ComponentDesc(PLANE))
    print(f"awin = {q.value:+d}   win = {win(f, p):+d}   difference = {q.value - win(f, p):+d}")
print("minus the reference winding:", -win(eps, p))
