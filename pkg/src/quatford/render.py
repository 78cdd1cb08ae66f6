"""Static SVG rendering of a Ford domain: the unit circle, the geodesic
boundary arcs, vertex dots, and optionally the full isometric circles."""

from __future__ import annotations

from pathlib import Path

from .domain import FordDomain

_SIZE = 640
_MARGIN = 0.08


def _to_px(z: complex) -> tuple[float, float]:
    scale = _SIZE / (2.0 * (1.0 + _MARGIN))
    x = _SIZE / 2.0 + z.real * scale
    y = _SIZE / 2.0 - z.imag * scale  # flip: SVG y grows downward
    return x, y


def _arc_path(v_start: complex, v_end: complex, center: complex, radius: float) -> str:
    scale = _SIZE / (2.0 * (1.0 + _MARGIN))
    x0, y0 = _to_px(v_start)
    x1, y1 = _to_px(v_end)
    r_px = radius * scale
    # Orientation around the circle center; the y-flip inverts the sweep.
    cross = (
        (v_start - center).real * (v_end - center).imag
        - (v_start - center).imag * (v_end - center).real
    )
    sweep = 0 if cross > 0 else 1
    return (
        f"M {x0:.3f} {y0:.3f} A {r_px:.3f} {r_px:.3f} 0 0 {sweep} {x1:.3f} {y1:.3f}"
    )


def domain_to_svg(domain: FordDomain, path: str | Path, show_circles: bool = False) -> Path:
    """Write the domain picture; returns the output path."""
    out = Path(path)
    cx, cy = _SIZE / 2.0, _SIZE / 2.0
    scale = _SIZE / (2.0 * (1.0 + _MARGIN))
    lines = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{_SIZE}" height="{_SIZE}" '
        f'viewBox="0 0 {_SIZE} {_SIZE}">',
        f'<rect width="{_SIZE}" height="{_SIZE}" fill="white"/>',
        f'<circle cx="{cx}" cy="{cy}" r="{scale:.3f}" fill="none" '
        'stroke="#888" stroke-width="1"/>',
    ]
    if show_circles:
        for side in domain.sides:
            px, py = _to_px(side.circle.center)
            lines.append(
                f'<circle cx="{px:.3f}" cy="{py:.3f}" '
                f'r="{side.circle.radius * scale:.3f}" fill="none" '
                'stroke="#cbd5ff" stroke-width="0.6"/>'
            )
    for side in domain.sides:
        d = _arc_path(side.v_start, side.v_end, side.circle.center, side.circle.radius)
        lines.append(
            f'<path d="{d}" fill="none" stroke="#1a3fa0" stroke-width="1.5"/>'
        )
    for v in domain.vertices:
        px, py = _to_px(v)
        lines.append(f'<circle cx="{px:.3f}" cy="{py:.3f}" r="2.2" fill="#c0392b"/>')
    lines.append(
        f'<text x="10" y="{_SIZE - 12}" font-family="monospace" font-size="13" '
        f'fill="#333">p={domain.p} a={domain.a} sides={len(domain.sides)} '
        f'certified={str(domain.certified).lower()}</text>'
    )
    lines.append("</svg>")
    out.write_text("\n".join(lines) + "\n", encoding="utf-8")
    return out
