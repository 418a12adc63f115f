"""
Covering growth service.

Tiles are attached one at a time. The boundary string height of the patch
pins the alpha (or gamma) height of the new tile, and that height alone
decides which decoration fits, so growth is deterministic in the seed height.
The same domains drive the exact feasible-interval test used as the primary
factor oracle.
"""

import logging
import math
from fractions import Fraction
from dataclasses import dataclass, field
from enum import Enum
from itertools import islice
from typing import Iterator, Mapping, Optional, Set, Tuple

from quasigrow.exceptions import OutOfRange
from quasigrow.models.golden import (
    FULL_RANGE, GoldenInterval, GoldenNumber, ZERO, sign_of_integer_pair,
)
from quasigrow.models.tiles import (
    ALPHA_DOMAINS, GAMMA_DOMAINS, STEPS, Covering, Decoration, TileGeometry,
)
from quasigrow.models.word import Letter, Word
from quasigrow.utils.svg import covering_svg

# Set up logging
logger = logging.getLogger("quasigrow.covering")


class Direction(Enum):
    """Side of the patch a tile is attached to."""
    RIGHT = 'right'
    LEFT = 'left'


def _check_height(y: GoldenNumber) -> GoldenNumber:
    y = GoldenNumber.coerce(y)
    if not FULL_RANGE.contains(y):
        raise OutOfRange(f"height {y} (~{float(y):.6f}) is outside [0, tau)", y=y)
    return y


def classify(y: GoldenNumber) -> Letter:
    """Decoration whose alpha domain contains y: A on [1/tau, tau), B on [0, 1/tau)."""
    y = _check_height(y)
    return Letter.A if ALPHA_DOMAINS[Letter.A].contains(y) else Letter.B


def step_right(y: GoldenNumber) -> Tuple[Letter, GoldenNumber]:
    """
    Attach a tile whose alpha segment coincides with the boundary height y.

    Returns:
        The forced letter and the new boundary height y_R.
    """
    letter = classify(y)
    return letter, GoldenNumber.coerce(y) + STEPS[letter]


def step_left(y: GoldenNumber) -> Tuple[Letter, GoldenNumber]:
    """
    Attach a tile on the left whose gamma segment coincides with y.

    Gamma heights of A-tiles fill [0, 1) and those of B-tiles fill [1, tau),
    so exactly one letter fits; step_right undoes this step.
    """
    y = _check_height(y)
    letter = Letter.A if GAMMA_DOMAINS[Letter.A].contains(y) else Letter.B
    return letter, y - STEPS[letter]


def _integer_pair(y: GoldenNumber) -> Tuple[int, int, int]:
    scale = math.lcm(y.p.denominator, y.q.denominator)
    return int(y.p * scale), int(y.q * scale), scale


def _iter_integer_steps(seed_y: GoldenNumber, direction: Direction) -> Iterator[Tuple[Letter, int, int, int]]:
    """
    Walk heights as integer triples (P, Q, D) meaning (P + Q*tau) / D.

    Right: A iff y - 1/tau >= 0; A subtracts 1/tau = tau - 1, B adds 1.
    Left: A iff y - 1 < 0; A adds 1/tau, B subtracts 1.
    Denominators never grow, so the walk stays on machine-size integers.
    """
    p, q, d = _integer_pair(_check_height(seed_y))
    if direction is Direction.RIGHT:
        while True:
            if sign_of_integer_pair(p + d, q - d) >= 0:
                yield Letter.A, p, q, d
                p, q = p + d, q - d
            else:
                yield Letter.B, p, q, d
                p = p + d
    else:
        while True:
            if sign_of_integer_pair(p - d, q) < 0:
                p, q = p - d, q + d
                yield Letter.A, p, q, d
            else:
                p = p - d
                yield Letter.B, p, q, d


def iter_growth(seed_y: GoldenNumber, direction: Direction = Direction.RIGHT) -> Iterator[Tuple[Letter, GoldenNumber]]:
    """
    Stream (letter, y_L) pairs without building a Covering.

    Rightward the first pair is the seed tile itself; leftward the pairs are
    the tiles left of the seed, nearest first. The stream is infinite.
    """
    for letter, p, q, d in _iter_integer_steps(seed_y, direction):
        yield letter, GoldenNumber(Fraction(p, d), Fraction(q, d))


def grow_letters(seed_y: GoldenNumber, n_right: int, n_left: int = 0) -> Word:
    """Letters of grow(seed_y, n_right, n_left) without materializing heights."""
    right = ''.join(
        letter.value for letter, *_ in islice(_iter_integer_steps(seed_y, Direction.RIGHT), n_right + 1)
    )
    left = ''.join(
        letter.value for letter, *_ in islice(_iter_integer_steps(seed_y, Direction.LEFT), n_left)
    )
    return left[::-1] + right


def grow(seed_y: GoldenNumber, n_right: int, n_left: int = 0,
         geometry: Optional[TileGeometry] = None) -> Covering:
    """
    Grow a covering from a single seed tile whose alpha height is seed_y.

    Args:
        seed_y: alpha height of the seed tile, in [0, tau)
        n_right: number of tiles attached on the right
        n_left: number of tiles attached on the left
        geometry: tile shape; only affects rendering

    Returns:
        Covering with 1 + n_right + n_left tiles, origin at the seed tile

    Raises:
        OutOfRange: if seed_y is outside [0, tau)
    """
    seed_y = _check_height(seed_y)
    logger.debug("Growing from seed %s: %d right, %d left", seed_y, n_right, n_left)

    left = [Decoration.place(letter, y) for letter, y in islice(iter_growth(seed_y, Direction.LEFT), n_left)]
    right = [Decoration.place(letter, y) for letter, y in islice(iter_growth(seed_y, Direction.RIGHT), n_right + 1)]
    left.reverse()
    return Covering(tuple(left + right), origin_index=n_left, geometry=geometry or TileGeometry())


def can_attach(boundary_y: GoldenNumber, candidate: Letter, side: Direction) -> bool:
    """
    Whether the candidate's string can be moved onto the boundary height.

    On the right the candidate's alpha domain must contain boundary_y, on the
    left its gamma domain. Exactly one letter is attachable on either side.
    """
    boundary_y = _check_height(boundary_y)
    domains = ALPHA_DOMAINS if Direction(side) is Direction.RIGHT else GAMMA_DOMAINS
    return domains[Letter(candidate)].contains(boundary_y)


@dataclass(frozen=True)
class FeasibleTracker:
    """
    Incremental feasible-seed propagation.

    seeds is the set of seed heights y0 that reproduce the letters seen so
    far; offset is the total step, so the current boundary is y0 + offset.
    """
    seeds: GoldenInterval = FULL_RANGE
    offset: GoldenNumber = ZERO
    length: int = 0
    domains: Mapping[Letter, GoldenInterval] = field(default_factory=lambda: ALPHA_DOMAINS)

    @property
    def is_empty(self) -> bool:
        return self.seeds.is_empty

    def extend(self, letter: Letter) -> 'FeasibleTracker':
        letter = Letter(letter)
        allowed = self.domains[letter].shift(-self.offset)
        return FeasibleTracker(
            seeds=self.seeds.intersect(allowed),
            offset=self.offset + STEPS[letter],
            length=self.length + 1,
            domains=self.domains,
        )

    def boundary(self) -> GoldenInterval:
        return self.seeds.shift(self.offset)


def track(w: Word, domains: Optional[Mapping[Letter, GoldenInterval]] = None) -> FeasibleTracker:
    tracker = FeasibleTracker(domains=domains or ALPHA_DOMAINS)
    for ch in w:
        tracker = tracker.extend(Letter(ch))
        if tracker.is_empty:
            break
    return tracker


def feasible_interval(w: Word, domains: Optional[Mapping[Letter, GoldenInterval]] = None) -> GoldenInterval:
    """
    Exact set of seed heights y0 in [0, tau) from which growth spells w.

    The empty word gives the full range [0, tau).
    """
    return track(w, domains).seeds


def is_growable(w: Word) -> bool:
    """
    Fast integer form of "feasible_interval(w) is not empty".

    Domain endpoints and steps are all in Z[tau], so the propagation runs on
    integer pairs (p, q) for p + q*tau.
    """
    lo, hi = (0, 0), (0, 1)
    off_p, off_q = 0, 0
    for ch in w:
        if ch == 'A':
            d_lo, d_hi = (-1 - off_p, 1 - off_q), (-off_p, 1 - off_q)
        else:
            d_lo, d_hi = (-off_p, -off_q), (-1 - off_p, 1 - off_q)
        if sign_of_integer_pair(d_lo[0] - lo[0], d_lo[1] - lo[1]) > 0:
            lo = d_lo
        if sign_of_integer_pair(d_hi[0] - hi[0], d_hi[1] - hi[1]) < 0:
            hi = d_hi
        if sign_of_integer_pair(hi[0] - lo[0], hi[1] - lo[1]) <= 0:
            return False
        if ch == 'A':
            off_p, off_q = off_p + 1, off_q - 1
        else:
            off_p += 1
    return True


def boundary_interval(w: Word) -> GoldenInterval:
    """Possible boundary heights y_R after growing w from any feasible seed."""
    tracker = track(w)
    return GoldenInterval.empty() if tracker.is_empty else tracker.boundary()


def forced_letter(w: Word) -> Optional[Letter]:
    """
    Letter the overlap rule forces next to the right of w, if the boundary
    interval lies inside a single alpha domain; None if both can still occur
    or w is not growable at all.
    """
    boundary = boundary_interval(w)
    if boundary.is_empty:
        return None
    fits = [letter for letter in Letter if not boundary.intersect(ALPHA_DOMAINS[letter]).is_empty]
    return fits[0] if len(fits) == 1 else None


def allowed_pairs() -> Set[Word]:
    """Two-tile configurations the overlap rule permits in isolation."""
    pairs = (a.value + b.value for a in Letter for b in Letter)
    return {pair for pair in pairs if not feasible_interval(pair).is_empty}


def render_svg(c: Covering) -> str:
    """SVG document for the covering."""
    return covering_svg(c)
