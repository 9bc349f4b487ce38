"""Static SVG drawings of homotopy tracks."""

from __future__ import annotations

from xml.sax.saxutils import escape

from .curves import HomotopyTrack
from .exact import Pt

WIDTH = 480
MARGIN = 20


def _time_color(t: float) -> str:
    # blue at t = 0 to red at t = 1
    r = round(255 * t)
    b = round(255 * (1 - t))
    return f"#{r:02x}30{b:02x}"


def render_track_svg(track: HomotopyTrack, point: Pt | None = None, title: str = "") -> str:
    """Frames as closed polylines colored by time, the marked point as a crosshair.

    Torus tracks are drawn in lift coordinates together with the unit square.
    Output depends only on the inputs (no timestamps), so it is reproducible.
    """
    pts = [v for f in track.frames for v in (*f.vertices, f.vertex(len(f)))]
    if point is not None:
        pts.append(point)
    torus = track.surface.is_torus
    if torus:
        pts += [Pt(0, 0), Pt(1, 1)]
    pts += list(track.surface.punctures)
    xs = [float(q.x) for q in pts]
    ys = [float(q.y) for q in pts]
    x0, x1, y0, y1 = min(xs), max(xs), min(ys), max(ys)
    span = max(x1 - x0, y1 - y0) or 1.0
    scale = (WIDTH - 2 * MARGIN) / span
    height = round((y1 - y0) * scale + 2 * MARGIN)

    def xy(q: Pt) -> str:
        # SVG y grows downward
        return f"{(float(q.x) - x0) * scale + MARGIN:.3f},{(y1 - float(q.y)) * scale + MARGIN:.3f}"

    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{WIDTH}" '
        f'height="{height}" viewBox="0 0 {WIDTH} {height}">',
    ]
    if title:
        lines.append(f"<title>{escape(title)}</title>")
    lines.append('<rect width="100%" height="100%" fill="white"/>')
    if torus:
        corners = [Pt(0, 0), Pt(1, 0), Pt(1, 1), Pt(0, 1)]
        lines.append(f'<polygon points="{" ".join(xy(c) for c in corners)}" fill="none" '
                     'stroke="#999999" stroke-dasharray="4 3"/>')
    steps = track.steps
    for s, frame in enumerate(track.frames):
        poly = " ".join(xy(frame.vertex(i)) for i in range(len(frame) + 1))
        width = "2" if s in (0, steps) else "1"
        lines.append(f'<polyline points="{poly}" fill="none" stroke="{_time_color(s / steps)}" '
                     f'stroke-width="{width}"/>')
    for z in track.surface.punctures:
        cx, cy = xy(z).split(",")
        lines.append(f'<circle cx="{cx}" cy="{cy}" r="3" fill="white" stroke="black"/>')
    if point is not None:
        cx, cy = (float(v) for v in xy(point).split(","))
        lines.append(f'<g stroke="black" stroke-width="1.5">'
                     f'<line x1="{cx - 6:.3f}" y1="{cy:.3f}" x2="{cx + 6:.3f}" y2="{cy:.3f}"/>'
                     f'<line x1="{cx:.3f}" y1="{cy - 6:.3f}" x2="{cx:.3f}" y2="{cy + 6:.3f}"/>'
                     '</g>')
    lines.append("</svg>")
    return "\n".join(lines) + "\n"
