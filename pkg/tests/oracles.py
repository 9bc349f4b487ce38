"""Independent reference computations used to freeze and cross-check expected values.

None of these go through the triangulation-based counter.
"""

import math
from fractions import Fraction
from functools import reduce

from awin.exact import Pt


def angle_winding(vertices, p) -> int:
    """Winding number by summing float turning angles, rounded to the nearest integer."""
    total = 0.0
    px, py = float(p.x), float(p.y)
    pts = [(float(v.x) - px, float(v.y) - py) for v in vertices]
    for (ax, ay), (bx, by) in zip(pts, pts[1:] + pts[:1]):
        total += math.atan2(ax * by - ay * bx, ax * bx + ay * by)
    return round(total / (2 * math.pi))


def linear_sweep_count(base: Pt, direction: tuple[int, int], sweep: Pt, p: Pt,
                       reach: int = 12) -> int:
    """Signed preimage count of ``p`` under ``(s, t) -> base + s*direction + t*sweep`` on the torus.

    ``s`` runs over ``[0, 1)`` (the closed geodesic of class ``direction``) and
    ``t`` over ``(0, 1)``.  Each lift ``p + (i, j)`` is solved for exactly; the
    sign is that of ``det[sweep, direction]`` (time axis first).
    """
    m, n = direction
    det = sweep.x * n - sweep.y * m
    if det == 0:
        return 0
    sign = 1 if det > 0 else -1
    count = 0
    for i in range(-reach, reach + 1):
        for j in range(-reach, reach + 1):
            qx = p.x + i - base.x
            qy = p.y + j - base.y
            # solve s*(m, n) + t*sweep = q
            t = (m * qy - n * qx) / Fraction(m * sweep.y - n * sweep.x)
            s = (qx * sweep.y - qy * sweep.x) / Fraction(m * sweep.y - n * sweep.x)
            if 0 <= s < 1 and 0 < t < 1:
                count += sign
    return count


def pairing_gcd(m: int, n: int, bound: int = 6) -> int:
    """gcd of ``{m*b - n*a : |a|, |b| <= bound}``: degrees of linear loop families of class (m, n)."""
    values = [m * b - n * a for a in range(-bound, bound + 1) for b in range(-bound, bound + 1)]
    return reduce(math.gcd, (abs(v) for v in values), 0)


def smallest_representative(delta: int, d: int) -> int:
    if d == 0:
        return abs(delta)
    reach = abs(delta) // d + 2
    return min(abs(delta + k * d) for k in range(-reach, reach + 1))
