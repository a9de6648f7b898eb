"""Plain SVG 1.1 drawing of a partition, beta increasing upward."""

from fractions import Fraction
from xml.sax.saxutils import escape

from .farey import farey_sequence
from .geometry import TRAPEZOID, TRIANGLE_LEFT, TRIANGLE_RIGHT, Partition

__all__ = ["render_svg", "SHAPE_FILL"]

SHAPE_FILL = {
    TRIANGLE_LEFT: "#9ecae1",
    TRIANGLE_RIGHT: "#fdd0a2",
    TRAPEZOID: "#c7e9c0",
}


def _num(x: Fraction) -> str:
    # rounding happens here and nowhere else
    return f"{float(x):.6f}".rstrip("0").rstrip(".")


def render_svg(part: Partition, width_px: int = 600, label_threshold: int = 40) -> str:
    scale = Fraction(width_px)

    def px(alpha, beta):
        return _num(alpha * scale), _num((1 - beta) * scale)

    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{width_px}" '
        f'height="{width_px}" viewBox="0 0 {width_px} {width_px}">',
        f"<title>Sos permutation domains, n = {part.n}</title>",
        '<g id="domains" stroke="#333333" stroke-width="0.5">',
    ]
    for dom in part:
        pts = " ".join(f"{x},{y}" for x, y in (px(a, b) for a, b in dom.vertices))
        d = f"M {pts.replace(' ', ' L ')} Z"
        lines.append(
            f'<path d="{d}" fill="{SHAPE_FILL[dom.shape]}" '
            f'data-perm="{escape(str(dom.perm))}" data-shape="{dom.shape}"/>'
        )
    lines.append("</g>")

    lines.append('<g id="lines" stroke="#000000" stroke-width="0.75" fill="none">')
    for x in farey_sequence(part.n):
        x0, y0 = px(x, 0)
        x1, y1 = px(x, 1)
        lines.append(f'<line x1="{x0}" y1="{y0}" x2="{x1}" y2="{y1}"/>')
    for i in range(1, part.n + 1):
        for j in range(1, i + 1):
            # i*alpha + beta = j crosses the square from (j-1)/i to j/i
            x0, y0 = px(Fraction(j - 1, i), 1)
            x1, y1 = px(Fraction(j, i), 0)
            lines.append(f'<line x1="{x0}" y1="{y0}" x2="{x1}" y2="{y1}"/>')
    lines.append("</g>")

    if len(part) <= label_threshold:
        size = max(6, width_px // (4 * (part.n + 2)))
        lines.append(f'<g id="labels" font-family="sans-serif" font-size="{size}" '
                     'text-anchor="middle" dominant-baseline="middle">')
        for dom in part:
            k = len(dom.vertices)
            cx = sum(v[0] for v in dom.vertices) / k
            cy = sum(v[1] for v in dom.vertices) / k
            x, y = px(cx, cy)
            lines.append(f'<text x="{x}" y="{y}">{escape(str(dom.perm))}</text>')
        lines.append("</g>")
    lines.append("</svg>")
    return "\n".join(lines) + "\n"
