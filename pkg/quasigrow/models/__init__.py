from .golden import (
    GoldenNumber, GoldenInterval, parse_golden, format_golden,
    ZERO, ONE, TAU, INV_TAU, INV_TAU2, TWO_INV_TAU, TWO_INV_TAU2, FULL_RANGE,
)
from .word import Letter, Word, ParseResult, validate_word
from .tiles import TileGeometry, Decoration, Covering
from .records import RunRecord
