"""Minimal self-contained SVG line plots of membership curves."""

from __future__ import annotations

from xml.sax.saxutils import escape

WIDTH, HEIGHT = 640, 400
MARGIN = 50
COLORS = ("#1f4e9c", "#c0392b", "#2e7d32")


def _scale(lo, hi, a, b):
    span = (hi - lo) or 1.0
    return lambda v: a + (v - lo) * (b - a) / span


def render(
    curves,
    title: str = "",
    xlabel: str = "theta",
    alpha_line: float | None = None,
    band: tuple[float, float] | None = None,
) -> str:
    """Draw ``curves``, a list of ``(label, xs, ys)`` with ``ys`` in [0, 1].

    ``alpha_line`` adds a dashed horizontal line at that grade; ``band``
    shades the x-interval ``[lo, hi]``.
    """
    xs_all = [x for _, xs, _ in curves for x in xs]
    x0, x1 = min(xs_all), max(xs_all)
    sx = _scale(x0, x1, MARGIN, WIDTH - MARGIN)
    sy = _scale(0.0, 1.0, HEIGHT - MARGIN, MARGIN)

    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{HEIGHT}" '
        f'viewBox="0 0 {WIDTH} {HEIGHT}" font-family="sans-serif" font-size="12">',
        f'<rect x="0" y="0" width="{WIDTH}" height="{HEIGHT}" fill="white"/>',
    ]
    if band is not None:
        bl, bh = sx(max(band[0], x0)), sx(min(band[1], x1))
        out.append(
            f'<rect x="{bl:.2f}" y="{MARGIN}" width="{max(bh - bl, 1.0):.2f}" '
            f'height="{HEIGHT - 2 * MARGIN}" fill="#f4d03f" fill-opacity="0.3"/>'
        )
    # axes and ticks
    out.append(
        f'<path d="M{MARGIN},{MARGIN} V{HEIGHT - MARGIN} H{WIDTH - MARGIN}" '
        'stroke="black" fill="none" stroke-width="1"/>'
    )
    for k in range(6):
        g = k / 5
        y = sy(g)
        out.append(f'<line x1="{MARGIN - 4}" y1="{y:.2f}" x2="{MARGIN}" y2="{y:.2f}" stroke="black"/>')
        out.append(f'<text x="{MARGIN - 8}" y="{y + 4:.2f}" text-anchor="end">{g:.1f}</text>')
        xv = x0 + (x1 - x0) * k / 5
        x = sx(xv)
        out.append(f'<line x1="{x:.2f}" y1="{HEIGHT - MARGIN}" x2="{x:.2f}" y2="{HEIGHT - MARGIN + 4}" stroke="black"/>')
        out.append(f'<text x="{x:.2f}" y="{HEIGHT - MARGIN + 18}" text-anchor="middle">{xv:.2f}</text>')
    out.append(f'<text x="{WIDTH / 2}" y="{HEIGHT - 10}" text-anchor="middle">{escape(xlabel)}</text>')
    if title:
        out.append(f'<text x="{WIDTH / 2}" y="{MARGIN / 2}" text-anchor="middle" font-size="14">{escape(title)}</text>')
    if alpha_line is not None:
        y = sy(alpha_line)
        out.append(
            f'<line x1="{MARGIN}" y1="{y:.2f}" x2="{WIDTH - MARGIN}" y2="{y:.2f}" '
            'stroke="#555" stroke-dasharray="6,4"/>'
        )
    for i, (label, xs, ys) in enumerate(curves):
        color = COLORS[i % len(COLORS)]
        pts = " ".join(f"{sx(x):.2f},{sy(y):.2f}" for x, y in zip(xs, ys))
        out.append(f'<polyline points="{pts}" fill="none" stroke="{color}" stroke-width="1.5"/>')
        ly = MARGIN + 16 * i
        out.append(f'<line x1="{WIDTH - MARGIN - 110}" y1="{ly}" x2="{WIDTH - MARGIN - 90}" y2="{ly}" stroke="{color}" stroke-width="2"/>')
        out.append(f'<text x="{WIDTH - MARGIN - 85}" y="{ly + 4}">{escape(label)}</text>')
    out.append("</svg>")
    return "\n".join(out) + "\n"
