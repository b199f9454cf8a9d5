"""SVG figures: polygon outline, dashed slab cuts, shaded guard regions."""

from __future__ import annotations

from .geometry import OrthoPolygon

GUARD_RADIUS = 0.15
REGION_OPACITY = 0.4


def _fmt(v) -> str:
    s = f"{float(v):.6f}".rstrip("0").rstrip(".")
    return "0" if s == "-0" else s


def render_svg(P: OrthoPolygon, regions=(), points=(), slab_lines: bool = True,
               scale: float = 40.0) -> str:
    """An SVG document for P with optional guard regions and points.

    ``regions`` are AxisRect; ``points`` are (x, y) pairs.  The y axis is
    flipped so that larger y is drawn higher up.
    """
    box = P.bbox
    pad = max(1, max(box.width, box.height) // 20)
    x0, x1 = box.lo.x - pad, box.hi.x + pad
    y0, y1 = box.lo.y - pad, box.hi.y + pad

    def X(x):
        return _fmt(x)

    def Y(y):
        return _fmt(y1 + y0 - y)

    w, h = x1 - x0, y1 - y0
    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{_fmt(w * scale)}" '
        f'height="{_fmt(h * scale)}" viewBox="{_fmt(x0)} {_fmt(y0)} {_fmt(w)} {_fmt(h)}">',
    ]
    d = " ".join(f"{'M' if i == 0 else 'L'}{X(v.x)},{Y(v.y)}" for i, v in enumerate(P.vertices))
    out.append(f'<path d="{d} Z" fill="#f4f4f4" stroke="black" stroke-width="2" '
               'vector-effect="non-scaling-stroke"/>')

    if slab_lines and P.x_monotone:
        p = P.profile
        for i in range(1, len(p.lo)):
            lo, hi = max(p.lo[i - 1], p.lo[i]), min(p.hi[i - 1], p.hi[i])
            out.append(f'<line x1="{X(p.xs[i])}" y1="{Y(lo)}" x2="{X(p.xs[i])}" y2="{Y(hi)}" '
                       'stroke="gray" stroke-width="1" stroke-dasharray="4 3" '
                       'vector-effect="non-scaling-stroke"/>')

    for r in regions:
        # Degenerate regions (segments) still get a visible stroke.
        out.append(f'<rect x="{X(r.lo.x)}" y="{Y(r.hi.y)}" width="{_fmt(r.width)}" '
                   f'height="{_fmt(r.height)}" fill="steelblue" stroke="steelblue" '
                   f'fill-opacity="{REGION_OPACITY}" stroke-opacity="{REGION_OPACITY}" '
                   'stroke-width="3" vector-effect="non-scaling-stroke"/>')
    for q in points:
        out.append(f'<circle cx="{X(q[0])}" cy="{Y(q[1])}" r="{GUARD_RADIUS}" fill="crimson"/>')
    out.append("</svg>")
    return "\n".join(out) + "\n"
