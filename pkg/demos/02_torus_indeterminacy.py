"""
Loops on the flat torus
=======================

On a closed surface a loop can sweep all the way around and come back, so the
passage count is only defined up to the degrees of such sweeps.  For loops of
class (m, n) on the torus that ambiguity is gcd(m, n).
"""

# %%
from fractions import Fraction

from awin import (ComponentDesc, FLAT_TORUS, Pt, awin_diff, degree_periodic, delta_awin,
                  subgroup_A, subgroup_B)
from awin.scenarios import class_2_4_track, meridian_sweep

# A vertical loop pushed once around the torus returns to itself.
sweep = meridian_sweep(steps=8, turns=1)
p = Pt(Fraction(7, 16), Fraction(5, 9))
print("count at p:", delta_awin(sweep, p), "  degree of the sweep:", degree_periodic(sweep))
print("twice around:", degree_periodic(meridian_sweep(turns=2)))

# %%
# Because a full sweep of the meridian has degree 1, nothing survives:
# the count for class (0, 1) lives in Z/1Z = 0.
meridian = ComponentDesc(FLAT_TORUS, (0, 1))
print("class (0,1): A =", subgroup_A(meridian).d, " value:", awin_diff(sweep, p, meridian))

# %%
# Class (2, 4) keeps a parity.
track, q, comp = class_2_4_track()
print("class (2,4): A =", subgroup_A(comp).d, " B =", subgroup_B(comp).d)
print("count:", delta_awin(track, q), " class:", awin_diff(track, q, comp))

# %%
for m, n in [(0, 0), (1, 0), (2, 4), (3, 6), (4, -6)]:
    c = ComponentDesc(FLAT_TORUS, (m, n))
    print(f"({m:+d},{n:+d})  awin group {subgroup_A(c).quotient_name}")
