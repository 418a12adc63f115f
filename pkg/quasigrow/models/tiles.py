"""
Decorated rectangular tiles and the coverings built from them.

Each tile is a (1 + 2w) x tau rectangle carrying a three-segment string:
alpha (height y_L, length w), beta across the unit interior, gamma (height
y_R, length w). Neighbouring tiles overlap in a width-w region where the left
gamma and the right alpha must coincide.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Tuple

from quasigrow.exceptions import InvariantViolation
from quasigrow.models.golden import (
    GoldenInterval, GoldenNumber, format_golden, INV_TAU, ONE, TAU, ZERO,
)
from quasigrow.models.word import Letter, Word

# Allowed alpha heights y_L per decoration; complementary, union [0, tau)
ALPHA_DOMAINS: Dict[Letter, GoldenInterval] = {
    Letter.A: GoldenInterval.half_open(INV_TAU, TAU),
    Letter.B: GoldenInterval.half_open(ZERO, INV_TAU),
}

# Resulting gamma heights y_R per decoration
GAMMA_DOMAINS: Dict[Letter, GoldenInterval] = {
    Letter.A: GoldenInterval.half_open(ZERO, ONE),
    Letter.B: GoldenInterval.half_open(ONE, TAU),
}

# y_R - y_L, also the beta slope over the unit run
STEPS: Dict[Letter, GoldenNumber] = {
    Letter.A: -INV_TAU,
    Letter.B: ONE,
}

# w = 1/(2 tau) makes every tile a square
DEFAULT_OVERLAP = INV_TAU * Fraction(1, 2)


@dataclass(frozen=True)
class TileGeometry:
    """Shape shared by all tiles of a covering. Only rendering depends on w."""
    w: GoldenNumber = DEFAULT_OVERLAP

    def __post_init__(self):
        object.__setattr__(self, 'w', GoldenNumber.coerce(self.w))
        if self.w.sign() <= 0:
            raise InvariantViolation(f"overlap w must be positive, got {self.w}", w=self.w)

    @property
    def height(self) -> GoldenNumber:
        return TAU

    @property
    def tile_width(self) -> GoldenNumber:
        return ONE + self.w * 2

    @property
    def pitch(self) -> GoldenNumber:
        """Horizontal distance between consecutive tile origins."""
        return ONE + self.w

    def to_dict(self):
        """Convert to dictionary."""
        return {'w': format_golden(self.w)}


@dataclass(frozen=True)
class Decoration:
    """A placed string: tile type plus the heights of its alpha and gamma segments."""
    letter: Letter
    y_L: GoldenNumber
    y_R: GoldenNumber

    def __post_init__(self):
        if not ALPHA_DOMAINS[self.letter].contains(self.y_L):
            raise InvariantViolation(
                f"y_L = {self.y_L} outside the alpha domain {ALPHA_DOMAINS[self.letter]} of deco-{self.letter}",
                letter=self.letter, y_L=self.y_L,
            )
        if self.y_R != self.y_L + STEPS[self.letter]:
            raise InvariantViolation(
                f"y_R = {self.y_R} does not follow y_L = {self.y_L} for deco-{self.letter}",
                letter=self.letter, y_R=self.y_R,
            )

    @classmethod
    def place(cls, letter: Letter, y_L: GoldenNumber) -> 'Decoration':
        """Decoration of the given type whose alpha segment sits at y_L."""
        return cls(letter, y_L, y_L + STEPS[letter])

    @classmethod
    def unchecked(cls, letter: Letter, y_L: GoldenNumber) -> 'Decoration':
        """Build without invariant checks (for illegal configurations in checks and tests)."""
        deco = cls.__new__(cls)
        object.__setattr__(deco, 'letter', letter)
        object.__setattr__(deco, 'y_L', y_L)
        object.__setattr__(deco, 'y_R', y_L + STEPS[letter])
        return deco

    @property
    def slope(self) -> GoldenNumber:
        return STEPS[self.letter]


@dataclass(frozen=True)
class Covering:
    """An ordered run of decorated tiles whose strings coincide on every overlap."""
    tiles: Tuple[Decoration, ...]
    origin_index: int = 0
    geometry: TileGeometry = field(default_factory=TileGeometry)

    def __post_init__(self):
        object.__setattr__(self, 'tiles', tuple(self.tiles))
        for index, (left, right) in enumerate(zip(self.tiles, self.tiles[1:])):
            if left.letter == Letter.B and right.letter == Letter.B:
                raise InvariantViolation(f"BB pair at tiles {index}, {index + 1}", index=index)
            if left.y_R != right.y_L:
                raise InvariantViolation(
                    f"strings do not coincide between tiles {index} and {index + 1}: "
                    f"{left.y_R} != {right.y_L}",
                    index=index,
                )
        if self.tiles and not 0 <= self.origin_index < len(self.tiles):
            raise InvariantViolation(f"origin index {self.origin_index} outside the covering")

    @classmethod
    def unchecked(cls, tiles, origin_index: int = 0, geometry: TileGeometry = None) -> 'Covering':
        """Build without invariant checks."""
        covering = cls.__new__(cls)
        object.__setattr__(covering, 'tiles', tuple(tiles))
        object.__setattr__(covering, 'origin_index', origin_index)
        object.__setattr__(covering, 'geometry', geometry or TileGeometry())
        return covering

    def __len__(self):
        return len(self.tiles)

    @property
    def letters(self) -> Word:
        return ''.join(tile.letter.value for tile in self.tiles)

    @property
    def heights(self) -> List[GoldenNumber]:
        """Alpha heights y_L of all tiles, left to right."""
        return [tile.y_L for tile in self.tiles]

    @property
    def seed(self) -> GoldenNumber:
        return self.tiles[self.origin_index].y_L

    @property
    def n_left(self) -> int:
        return self.origin_index

    @property
    def n_right(self) -> int:
        return len(self.tiles) - self.origin_index - 1

    def to_dict(self):
        """Convert to the JSON run-record payload."""
        return {
            'seed': format_golden(self.seed) if self.tiles else None,
            'n_right': self.n_right if self.tiles else 0,
            'n_left': self.n_left if self.tiles else 0,
            'letters': self.letters,
            'heights': [format_golden(y) for y in self.heights],
            'geometry': self.geometry.to_dict(),
        }
