"""
Cauchy's formula for loops that do not bound
============================================

On the plane punctured at 0, circles of radius 1 and 3 about the origin are
homotopic but bound nothing.  The integrals of f = 1/(z - 2) over them still
differ by 2 pi i times the residue times the signed passage count at the pole.
"""

# %%
import cmath

from awin import cauchy_check, contour_integral, residue
from awin.scenarios import punctured_plane_fixture, residue_fixture

fx = punctured_plane_fixture()
outer = contour_integral(fx.f, fx.c1)
inner = contour_integral(fx.f, fx.c2)
print(f"outer circle: {outer:.12f}")
print(f"inner circle: {inner:.12f}")
print(f"2 pi i      : {2j * cmath.pi:.12f}")
print("residue at 2:", residue(fx.f, 0))

# %%
report = cauchy_check(fx.f, fx.c1, fx.c2, fx.track, tol=1e-6)
print("passage count at the pole:", report.awin_differences)
print("abs error:", report.abs_error, " pass:", report.passed)

# %%
# The classical residue theorem is the special case where C2 is far away.
fx = residue_fixture()
report = cauchy_check(fx.f, fx.c1, fx.c2, fx.track)
print("1/z:", report.awin_differences, f"error {report.abs_error:.1e}")

# %%
# Fewer panels, larger error; the passage counts are exact either way.
for panels in (1, 2, 4, 8):
    r = cauchy_check(fx.f, fx.c1, fx.c2, fx.track, panels_per_edge=panels, order=4)
    print(f"panels/edge {panels}: error {r.abs_error:.2e}")
