"""
Deterministic SVG output for coverings and lifted staircases.

Documents are assembled from formatted strings with fixed element order and
fixed number formatting, so identical inputs give byte-identical files.
"""

from typing import List, Sequence, Tuple

from quasigrow.models.golden import TAU_FLOAT
from quasigrow.models.tiles import Covering
from quasigrow.models.word import Letter

SCALE = 100.0        # pixels per length unit
MARGIN = 20.0
LABEL_GAP = 18.0

TILE_COLORS = {
    Letter.A: '#9b59b6',   # purple
    Letter.B: '#5dade2',   # skyblue
}
STRING_COLOR = '#1b1b1b'
STRIP_COLOR = '#f5b041'


def fmt(x: float) -> str:
    """Short fixed-precision number so output stays compact and stable."""
    text = f"{x:.3f}".rstrip('0').rstrip('.')
    return '0' if text in ('-0', '') else text


def _header(width: float, height: float, title: str) -> List[str]:
    return [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{fmt(width)}" height="{fmt(height)}" viewBox="0 0 {fmt(width)} {fmt(height)}">',
        f'<title>{title}</title>',
    ]


def covering_svg(c: Covering) -> str:
    """
    One rectangle per tile at x = index * pitch with its string as a
    three-point-segment polyline; overlapping strings share coordinates.
    """
    w = float(c.geometry.w)
    pitch = float(c.geometry.pitch)
    tile_width = float(c.geometry.tile_width)
    n = len(c.tiles)

    span = (n - 1) * pitch + tile_width if n else 0.0
    width = 2 * MARGIN + span * SCALE
    height = 2 * MARGIN + TAU_FLOAT * SCALE + LABEL_GAP

    def px(x: float) -> float:
        return MARGIN + x * SCALE

    def py(y: float) -> float:
        return MARGIN + (TAU_FLOAT - y) * SCALE

    lines = _header(width, height, f"Fibonacci covering {c.letters}" if n else "Empty covering")
    for index, tile in enumerate(c.tiles):
        x0 = index * pitch
        y_l, y_r = float(tile.y_L), float(tile.y_R)
        color = TILE_COLORS[tile.letter]
        points = [(x0, y_l), (x0 + w, y_l), (x0 + 1 + w, y_r), (x0 + 1 + 2 * w, y_r)]
        lines.append(f'<g id="tile-{index}" class="tile deco-{tile.letter.value}">')
        lines.append(
            f'<rect x="{fmt(px(x0))}" y="{fmt(py(TAU_FLOAT))}" width="{fmt(tile_width * SCALE)}" '
            f'height="{fmt(TAU_FLOAT * SCALE)}" fill="{color}" fill-opacity="0.18" stroke="{color}"/>'
        )
        lines.append(
            '<polyline points="' + ' '.join(f"{fmt(px(x))},{fmt(py(y))}" for x, y in points) + '" '
            f'fill="none" stroke="{STRING_COLOR}" stroke-width="2"/>'
        )
        lines.append(
            f'<text x="{fmt(px(x0 + tile_width / 2))}" y="{fmt(py(0) + LABEL_GAP)}" '
            f'text-anchor="middle" font-family="sans-serif" font-size="14">{tile.letter.value}</text>'
        )
        lines.append('</g>')
    lines.append('</svg>')
    return '\n'.join(lines) + '\n'


def staircase_svg(points: Sequence[Tuple[int, int]], offset: float, strip_width: float = TAU_FLOAT,
                  unit: float = 40.0) -> str:
    """
    Lattice path of a lifted word with the acceptance strip drawn as a band.

    In scaled perpendicular units a lattice point (x, y) has coordinate
    offset + y - x/tau; the band is where that lies in [0, strip_width).
    """
    x_end = max((x for x, _ in points), default=0)
    lower = [(0.0, -offset), (float(x_end), x_end / TAU_FLOAT - offset)]
    upper = [(float(x_end), x_end / TAU_FLOAT - offset + strip_width), (0.0, strip_width - offset)]

    ys = [float(y) for _, y in points] + [y for _, y in lower + upper]
    y_min, y_max = min(ys), max(ys)
    width = 2 * MARGIN + max(x_end, 1) * unit
    height = 2 * MARGIN + (y_max - y_min) * unit

    def px(x: float) -> float:
        return MARGIN + x * unit

    def py(y: float) -> float:
        return MARGIN + (y_max - y) * unit

    lines = _header(width, height, "Lifted staircase and strip")
    band = lower + upper
    lines.append(
        '<polygon points="' + ' '.join(f"{fmt(px(x))},{fmt(py(y))}" for x, y in band) + '" '
        f'fill="{STRIP_COLOR}" fill-opacity="0.25" stroke="none"/>'
    )
    lines.append(
        '<polyline points="' + ' '.join(f"{fmt(px(x))},{fmt(py(y))}" for x, y in points) + '" '
        f'fill="none" stroke="{STRING_COLOR}" stroke-width="3"/>'
    )
    for x, y in points:
        lines.append(f'<circle cx="{fmt(px(x))}" cy="{fmt(py(y))}" r="3" fill="{STRING_COLOR}"/>')
    lines.append('</svg>')
    return '\n'.join(lines) + '\n'
