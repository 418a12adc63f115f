"""
Symbolic layer: Fibonacci words, composition, factor oracles and rotation codings.

The generating substitution is A -> AB, B -> A. Its inverse, the composition
AB -> A, A -> B, is what the inflation argument iterates; a word that shows a
BB segment after some number of compositions cannot be a factor.
"""

import logging
from fractions import Fraction
from functools import lru_cache
from typing import FrozenSet, List, Optional, Tuple, Union

from quasigrow import settings
from quasigrow.exceptions import ContainsBB, DegenerateParameters, OracleDisagreement
from quasigrow.models.golden import GoldenNumber, TAU
from quasigrow.models.word import Letter, ParseResult, Word
from quasigrow.services.covering import feasible_interval

# Set up logging
logger = logging.getLogger("quasigrow.words")

SUBSTITUTION = {'A': 'AB', 'B': 'A'}

Number = Union[GoldenNumber, int, Fraction, float]


def substitute(w: Word) -> Word:
    """Apply A -> AB, B -> A letter by letter."""
    return ''.join(SUBSTITUTION[ch] for ch in w)


@lru_cache(maxsize=32)
def _fixed_point_prefix(min_length: int) -> Word:
    word = 'A'
    while len(word) < min_length:
        word = substitute(word)
    return word


def fibonacci_word(n: int) -> Word:
    """First n letters of the fixed point ABAABABAABAAB..."""
    if n < 1:
        raise ValueError(f"fibonacci_word needs n >= 1, got {n}")
    return _fixed_point_prefix(n)[:n]


def compose(w: Word) -> ParseResult:
    """
    One composition step AB -> A, A -> B by a greedy left-to-right parse.

    A leading B can only be the tail of an AB block, so it composes to A and
    is flagged. A trailing lone A could be a whole A block or the start of an
    AB block; it is flagged and left out.

    Raises:
        ContainsBB: if w already contains BB
    """
    if 'BB' in w:
        raise ContainsBB(f"word {w!r} contains BB", word=w)

    out: List[str] = []
    leading = trailing = False
    i = 0
    if w.startswith('B'):
        out.append('A')
        leading = True
        i = 1
    n = len(w)
    while i < n:
        # w[i] is A here: every B is consumed as the tail of an AB block
        if i + 1 == n:
            trailing = True
            i += 1
        elif w[i + 1] == 'B':
            out.append('A')
            i += 2
        else:
            out.append('B')
            i += 1
    return ParseResult(''.join(out), leading_flag=leading, trailing_flag=trailing)


def composition_tower(w: Word, max_depth: Optional[int] = None) -> List[Word]:
    """
    The word followed by its successive compositions.

    Stops after max_depth compositions, at the first word containing BB, or
    when the word has become empty.
    """
    max_depth = settings.MAX_COMPOSITION_DEPTH if max_depth is None else max_depth
    tower = [w]
    while len(tower) <= max_depth and 'BB' not in tower[-1] and tower[-1]:
        tower.append(compose(tower[-1]).composed)
    return tower


def deflation_illegality_depth(w: Word, max_depth: Optional[int] = None) -> Optional[int]:
    """
    Smallest number of compositions (0 = w itself) revealing a BB segment.

    This is only a necessary condition for illegality: the flagged edges make
    the word shrink, so non-factors can survive every depth.
    """
    tower = composition_tower(w, max_depth)
    return len(tower) - 1 if 'BB' in tower[-1] else None


def occurs_in_fibonacci(w: Word) -> bool:
    """Substring oracle: search w in a prefix of length 20|w| + 100."""
    return w in fibonacci_word(20 * len(w) + 100)


def is_factor(w: Word) -> bool:
    """
    Whether w occurs in the infinite Fibonacci word.

    The exact feasible interval decides; the substring search must agree.

    Raises:
        OracleDisagreement: if the two oracles disagree
    """
    by_interval = not feasible_interval(w).is_empty
    by_search = occurs_in_fibonacci(w)
    if by_interval != by_search:
        logger.error("Factor oracles disagree on %r: interval=%s search=%s", w, by_interval, by_search)
        raise OracleDisagreement(f"factor oracles disagree on {w!r}", word=w)
    return by_interval


@lru_cache(maxsize=64)
def factor_set(n: int) -> FrozenSet[Word]:
    """All length-n factors; there are exactly n + 1 of them."""
    if n < 1:
        raise ValueError(f"factor_set needs n >= 1, got {n}")
    prefix = fibonacci_word(20 * n + 100)
    return frozenset(prefix[i:i + n] for i in range(len(prefix) - n + 1))


def letter_counts(w: Word) -> Tuple[int, int]:
    return w.count('A'), w.count('B')


def frequency_error(w: Word) -> GoldenNumber:
    """|#A/#B - tau|, exactly."""
    count_a, count_b = letter_counts(w)
    if count_b == 0:
        raise ValueError("frequency ratio needs at least one B")
    return abs(GoldenNumber(Fraction(count_a, count_b)) - TAU)


def is_periodic_rotation(alpha: Number, width: Number) -> bool:
    """Whether alpha / width is rational, i.e. the coding is periodic."""
    if isinstance(alpha, float) or isinstance(width, float):
        ratio = float(alpha) / float(width)
        return abs(float(Fraction(ratio).limit_denominator(10 ** 6)) - ratio) < 1e-12
    return (GoldenNumber.coerce(alpha) / GoldenNumber.coerce(width)).is_rational()


def rotation_coding(alpha: Number, width: Number, y0: Number, n: int) -> Word:
    """
    Coding of the rotation y -> y - alpha on a circle of circumference width.

    A marks y in [alpha, width) (step -alpha), B marks y in [0, alpha) (step
    width - alpha). With alpha = 1/tau, width = tau this is exactly covering
    growth. Golden/rational inputs run exactly; any float input switches to
    float mode, which is logged as approximate.

    Raises:
        DegenerateParameters: unless 0 < alpha < width and 0 <= y0 < width
    """
    approximate = any(isinstance(v, float) for v in (alpha, width, y0))
    if approximate:
        alpha, width, y0 = float(alpha), float(width), float(y0)
        zero = 0.0
        logger.info("Rotation coding runs in float mode: the result is approximate")
    else:
        alpha, width, y0 = (GoldenNumber.coerce(v) for v in (alpha, width, y0))
        zero = GoldenNumber()

    if not zero < alpha < width:
        raise DegenerateParameters(f"need 0 < alpha < width, got alpha={alpha}, width={width}")
    if not zero <= y0 < width:
        raise DegenerateParameters(f"start {y0} outside [0, {width})")
    if is_periodic_rotation(alpha, width):
        logger.warning("Rotation alpha/width is rational: the coding is periodic")

    up = width - alpha
    letters = []
    y = y0
    for _ in range(n):
        if y >= alpha:
            letters.append(Letter.A.value)
            y = y - alpha
        else:
            letters.append(Letter.B.value)
            y = y + up
    return ''.join(letters)
