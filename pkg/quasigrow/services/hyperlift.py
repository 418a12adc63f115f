"""
Lift of words to the square lattice and the strip criterion.

A maps to an x-edge and B to a y-edge. Along the lifted staircase the
perpendicular coordinate drops by sin(theta) per A and rises by cos(theta)
per B, tan(theta) = 1/tau. A word is a Fibonacci factor exactly when its
staircase fits in a strip of width cos(theta) + sin(theta).

Two unit systems are offered:

- scaled: steps -1/tau and +1, strip width tau. These are the string
  heights of the covering, so a grown covering's heights are its trace.
- geometric: the true lengths. Every geometric step is a golden multiple of
  1/sqrt(tau + 2) (sin = 1/sqrt(tau+2), cos = tau/sqrt(tau+2)), so the
  coordinates are stored as golden multiples of that normalizer and compared
  exactly; scaled = geometric / cos(theta) = normalized / tau.
"""

import logging
import math
from dataclasses import dataclass
from enum import Enum
from typing import List, Optional, Tuple

from quasigrow.models.golden import (
    FULL_RANGE, GoldenInterval, GoldenNumber, INV_TAU, ONE, TAU, TAU_FLOAT, ZERO, format_golden,
)
from quasigrow.models.tiles import Covering
from quasigrow.models.word import Letter, Word
from quasigrow.utils.svg import staircase_svg

# Set up logging
logger = logging.getLogger("quasigrow.hyperlift")

NORMALIZER = 1 / math.sqrt(TAU_FLOAT + 2)
THETA = math.atan(1 / TAU_FLOAT)


class PerpMode(Enum):
    """Units of the perpendicular coordinate."""
    GEOMETRIC = 'geometric'
    SCALED = 'scaled'


PERP_STEPS = {
    PerpMode.SCALED: {Letter.A: -INV_TAU, Letter.B: ONE},
    PerpMode.GEOMETRIC: {Letter.A: -ONE, Letter.B: TAU},
}

# cos + sin; tau^2 = tau + 1 in normalizer units
STRIP_THRESHOLD = {
    PerpMode.SCALED: TAU,
    PerpMode.GEOMETRIC: TAU * TAU,
}

EDGES = {
    Letter.A: (1, 0),
    Letter.B: (0, 1),
}


@dataclass(frozen=True)
class Staircase:
    """Lattice path of a word starting at the origin."""
    points: Tuple[Tuple[int, int], ...]
    word: Word

    @property
    def end(self) -> Tuple[int, int]:
        return self.points[-1]

    def to_dict(self):
        """Convert to dictionary."""
        return {'word': self.word, 'points': [list(point) for point in self.points]}


@dataclass(frozen=True)
class PerpTrace:
    """Cumulative perpendicular coordinates, one per staircase vertex."""
    mode: PerpMode
    coords: Tuple[GoldenNumber, ...]
    offset: GoldenNumber

    @property
    def unit(self) -> float:
        """Length of one stored unit: the normalizer in geometric mode."""
        return NORMALIZER if self.mode is PerpMode.GEOMETRIC else 1.0

    def values(self) -> List[float]:
        return [float(c) * self.unit for c in self.coords]

    def to_scaled(self) -> 'PerpTrace':
        if self.mode is PerpMode.SCALED:
            return self
        return PerpTrace(PerpMode.SCALED, tuple(c * INV_TAU for c in self.coords), self.offset * INV_TAU)

    def width(self) -> GoldenNumber:
        return max(self.coords) - min(self.coords)

    def to_dict(self):
        """Convert to dictionary."""
        return {
            'mode': self.mode.value,
            'offset': format_golden(self.offset),
            'coords': [format_golden(c) for c in self.coords],
            'approx': self.values(),
        }


def lift(w: Word) -> Staircase:
    """Staircase of w: A is an x-edge, B a y-edge; ends at (#A, #B)."""
    x, y = 0, 0
    points = [(0, 0)]
    for ch in w:
        dx, dy = EDGES[Letter(ch)]
        x, y = x + dx, y + dy
        points.append((x, y))
    return Staircase(tuple(points), w)


def parallel_coords(w: Word) -> List[GoldenNumber]:
    """
    Positions along the physical line, in normalizer units: A-tiles have
    length cos(theta) = tau units, B-tiles sin(theta) = 1 unit.
    """
    position = ZERO
    coords = [position]
    for ch in w:
        position = position + (TAU if ch == 'A' else ONE)
        coords.append(position)
    return coords


def perp_trace(w: Word, y0: GoldenNumber = ZERO, mode: PerpMode = PerpMode.SCALED) -> PerpTrace:
    """
    Perpendicular coordinates of the staircase vertices.

    y0 is always given in scaled units (a string height); in geometric mode it
    is converted to tau * y0 normalizer units so that the two traces are
    pointwise multiples of each other.
    """
    mode = PerpMode(mode)
    y0 = GoldenNumber.coerce(y0)
    start = y0 if mode is PerpMode.SCALED else y0 * TAU
    steps = PERP_STEPS[mode]
    coords = [start]
    current = start
    for ch in w:
        current = current + steps[Letter(ch)]
        coords.append(current)
    return PerpTrace(mode, tuple(coords), start)


def strip_width(w: Word, mode: PerpMode = PerpMode.SCALED) -> GoldenNumber:
    """Spread max - min of the trace; the word fits a strip iff this is below the threshold."""
    return perp_trace(w, ZERO, mode).width()


def fits_strip(w: Word, mode: PerpMode = PerpMode.SCALED) -> bool:
    mode = PerpMode(mode)
    return strip_width(w, mode) < STRIP_THRESHOLD[mode]


def strip_offsets(w: Word) -> GoldenInterval:
    """
    Offsets y0 that put the whole scaled trace inside [0, tau).

    Computed from the trace alone; it coincides with the feasible interval of
    the covering module.
    """
    coords = perp_trace(w, ZERO).coords
    offsets = GoldenInterval.half_open(-min(coords), TAU - max(coords))
    return GoldenInterval.empty() if offsets.is_empty else offsets


def float_trace(w: Word, y0: float, step_a: float, step_b: float) -> List[float]:
    """Plain float iteration with arbitrary steps; an oracle independent of the exact code."""
    coords = [float(y0)]
    for ch in w:
        coords.append(coords[-1] + (step_a if ch == 'A' else step_b))
    return coords


@dataclass(frozen=True)
class StripReport:
    """Outcome of checking a covering against its lifted trace."""
    passed: bool
    checked: int
    failed_index: Optional[int] = None
    reason: Optional[str] = None

    def to_dict(self):
        """Convert to dictionary."""
        return {
            'passed': self.passed,
            'checked': self.checked,
            'failed_index': self.failed_index,
            'reason': self.reason,
        }


def strip_consistency(c: Covering) -> StripReport:
    """
    Check that the scaled trace started at the leftmost tile's height
    reproduces every y_L (and the final y_R), and that it stays in [0, tau).

    The trace runs from the leftmost tile, so when the covering grew to the
    left too, the seed height appears at the origin index.
    """
    if not c.tiles:
        return StripReport(True, 0)
    trace = perp_trace(c.letters, c.tiles[0].y_L).coords
    expected = [tile.y_L for tile in c.tiles] + [c.tiles[-1].y_R]
    for index, (coord, height) in enumerate(zip(trace, expected)):
        if coord != height:
            logger.error("Trace and string heights differ at tile %d", index)
            return StripReport(False, len(trace), index, f"trace {coord} != height {height}")
        if not FULL_RANGE.contains(coord):
            return StripReport(False, len(trace), index, f"coordinate {coord} leaves [0, tau)")
    return StripReport(True, len(trace))


def render_staircase_svg(staircase: Staircase, offset: GoldenNumber = ZERO) -> str:
    return staircase_svg(staircase.points, float(offset))
