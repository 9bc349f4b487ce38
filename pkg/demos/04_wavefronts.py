"""
How often did the front pass?
=============================

Two snapshots of a propagating front are enough to bound from below how many
times it swept over a point, whatever happened in between.
"""

# %%
from awin import ComponentDesc, PLANE, moving_observer_bound, passage_lower_bound, win
from awin.scenarios import two_passage_fronts

fx = two_passage_fronts()
print("front at t1 winds", win(fx.s1.curve, fx.point), "times around p")
print("front at t2 winds", win(fx.s2.curve, fx.point), "times around p")
plane = ComponentDesc(PLANE)
print("at least", passage_lower_bound(fx.s1, fx.s2, fx.track, fx.point, plane), "passages")

# %%
# An observer drifting inside the inner loop sees the same bound.
print("moving observer:", moving_observer_bound(fx.s1, fx.s2, fx.track, fx.observer, plane))

# %%
# Drop the frames to an SVG to look at the propagation.
from pathlib import Path
import tempfile

from awin.render import render_track_svg

out = Path(tempfile.gettempdir()) / "two_passage_front.svg"
out.write_text(render_track_svg(fx.track, fx.point, title="two-passage front"))
print("wrote", out)
