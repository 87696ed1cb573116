"""SVG drawing of the order in which the order-n fractions are visited."""

from __future__ import annotations

from dataclasses import dataclass

from .curve import lattice_tiling
from .exact import DomainError

__all__ = ["RenderSpec", "render_traversal_svg", "polyline_points"]


@dataclass(frozen=True)
class RenderSpec:
    order: int = 4
    canvas_size: int = 512
    show_subdivision: bool = True
    arrow_at_end: bool = True

    def __post_init__(self):
        if self.order < 1:
            raise DomainError("order must be at least 1")
        if self.canvas_size < 64:
            raise DomainError("canvas_size must be at least 64 pixels")


def _fmt(v: float) -> str:
    s = f"{v:.3f}".rstrip("0").rstrip(".")
    return "0" if s == "-0" else s


def polyline_points(order: int) -> list[tuple[float, float]]:
    """Centroids of the order-``order`` fractions, in curve coordinates, in time order."""
    e, r, x, h = lattice_tiling(order)
    c = (e + r + x) / (3.0 * (1 << h))
    return [(float(px), float(py)) for px, py in c]


def render_traversal_svg(spec: RenderSpec) -> str:
    """A polyline through the fraction centroids, over the triangle outline.

    The triangle ``(0,0), (1,1), (2,0)`` is scaled to the canvas width with a
    small margin; output is byte-identical for equal specs.
    """
    w = spec.canvas_size
    margin = w / 32
    scale = (w - 2 * margin) / 2
    height = scale + 2 * margin

    def tx(px: float, py: float) -> str:
        return f"{_fmt(margin + px * scale)},{_fmt(height - margin - py * scale)}"

    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{w}" height="{_fmt(height)}" '
        f'viewBox="0 0 {w} {_fmt(height)}">',
    ]
    if spec.arrow_at_end:
        lines += [
            "<defs>",
            '<marker id="arrow" viewBox="0 0 10 10" refX="9" refY="5" markerWidth="6" markerHeight="6" orient="auto">',
            '<path d="M 0 0 L 10 5 L 0 10 z" fill="black"/>',
            "</marker>",
            "</defs>",
        ]
    lines.append(f'<polygon points="{tx(0, 0)} {tx(1, 1)} {tx(2, 0)}" fill="none" stroke="black" stroke-width="1"/>')
    if spec.show_subdivision:
        e, r, x, h = lattice_tiling(spec.order)
        k = float(1 << h)
        segs = set()
        for tri in zip(e, r, x):
            pts = [(int(p[0]), int(p[1])) for p in tri]
            for i in range(3):
                a, b = sorted((pts[i], pts[(i + 1) % 3]))
                segs.add((a, b))
        lines.append('<g stroke="gray" stroke-width="0.5">')
        for a, b in sorted(segs):
            p, q = tx(a[0] / k, a[1] / k).split(","), tx(b[0] / k, b[1] / k).split(",")
            lines.append(f'<line x1="{p[0]}" y1="{p[1]}" x2="{q[0]}" y2="{q[1]}"/>')
        lines.append("</g>")
    pts = " ".join(tx(px, py) for px, py in polyline_points(spec.order))
    marker = ' marker-end="url(#arrow)"' if spec.arrow_at_end else ""
    lines.append(
        f'<polyline id="traversal" points="{pts}" fill="none" stroke="black" stroke-width="1.5"{marker}/>'
    )
    lines.append("</svg>")
    return "\n".join(lines) + "\n"
