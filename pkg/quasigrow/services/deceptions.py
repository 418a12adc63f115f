"""
Deceptions of conventional window rules.

A window rule with range r accepts a word when every window of length r is a
Fibonacci factor. A deception is a word the rule accepts that is not itself a
factor; since tiles are never removed, a grower that reaches one is stuck
with an incorrect patch. Deceptions exist for every r, which is why no
fixed-decoration local rule grows the Fibonacci lattice.
"""

import logging
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Any, Dict, FrozenSet, List, Optional

from quasigrow import settings
from quasigrow.exceptions import BudgetExceeded, OracleDisagreement
from quasigrow.models.golden import GoldenNumber
from quasigrow.models.word import Word
from quasigrow.services.covering import grow_letters, is_growable
from quasigrow.services.words import deflation_illegality_depth, factor_set, is_factor

# Set up logging
logger = logging.getLogger("quasigrow.deceptions")

MAX_WINDOW = 16
SHARD_PREFIX_LENGTH = 4
EXAMPLE_LIMIT = 5


class GrowerKind(Enum):
    """Growers the failure harness can drive."""
    WINDOW = 'window'
    COVERING = 'covering'


@dataclass(frozen=True)
class WindowRule:
    """Conventional growth rule: accept words whose length-r windows are all factors."""
    r: int
    allowed: FrozenSet[Word]

    def is_legal(self, w: Word) -> bool:
        k = min(self.r, len(w))
        return all(w[i:i + k] in self.allowed for i in range(len(w) - k + 1))

    def accepts_extension(self, w: Word) -> bool:
        """Legality of w given that w[:-1] is already legal: only the last window is new."""
        k = min(self.r, len(w))
        return w[len(w) - k:] in self.allowed


def rule_factor_set(r: int) -> WindowRule:
    """Window rule of range r; it allows every factor of length <= r."""
    if r < 1:
        raise ValueError(f"window length must be >= 1, got {r}")
    allowed = frozenset().union(*(factor_set(k) for k in range(1, r + 1)))
    return WindowRule(r, allowed)


@dataclass(frozen=True)
class DeceptionReport:
    """A word accepted by the window rule that is not a factor."""
    word: Word
    window: int
    composition_depth_to_BB: Optional[int]
    witness_windows: int

    @property
    def endpoints_b(self) -> bool:
        return self.word.startswith('B') and self.word.endswith('B')

    def to_dict(self) -> Dict[str, Any]:
        """Convert to dictionary."""
        return {
            'word': self.word,
            'window': self.window,
            'composition_depth_to_BB': self.composition_depth_to_BB,
            'witness_windows': self.witness_windows,
            'endpoints_b': self.endpoints_b,
        }


def is_deception(w: Word, r: int) -> bool:
    """True iff w is not a factor but every window of length min(r, |w|) is."""
    if r < 1:
        raise ValueError(f"window length must be >= 1, got {r}")
    return rule_factor_set(r).is_legal(w) and not is_factor(w)


def check_budget(length: int) -> None:
    """Raise BudgetExceeded if words of this length are too many to enumerate."""
    if length > settings.ENUMERATION_BUDGET:
        raise BudgetExceeded(
            f"length {length} exceeds the enumeration budget {settings.ENUMERATION_BUDGET}",
            length=length,
        )


def _scan_shard(prefix: Word, length: int, rule: WindowRule) -> List[Word]:
    """
    Depth-first scan of all legal words of the given length starting with
    prefix, pruned at the first illegal window. A before B keeps the output
    in lexicographic order.
    """
    found: List[Word] = []
    stack = [prefix]
    while stack:
        word = stack.pop()
        if len(word) == length:
            if not is_growable(word):
                found.append(word)
            continue
        # push B first so A is explored first
        for letter in 'BA':
            candidate = word + letter
            if rule.accepts_extension(candidate):
                stack.append(candidate)
    return found


def _shard_prefixes(length: int, rule: WindowRule) -> List[Word]:
    prefixes = ['']
    for _ in range(min(SHARD_PREFIX_LENGTH, length)):
        prefixes = [p + c for p in prefixes for c in 'AB' if rule.accepts_extension(p + c)]
    return prefixes


def enumerate_deceptions(length: int, r: int, workers: Optional[int] = None) -> List[DeceptionReport]:
    """
    All deceptions of the given length for window r, in lexicographic order.

    Args:
        length: word length L, at most the enumeration budget
        r: window length
        workers: process shards; defaults to settings.ENUMERATION_WORKERS

    Raises:
        BudgetExceeded: if length is above the budget
    """
    check_budget(length)
    rule = rule_factor_set(r)
    if length <= r:
        return []

    workers = workers or settings.ENUMERATION_WORKERS
    prefixes = _shard_prefixes(length, rule)
    logger.debug("Scanning length %d, window %d over %d shards", length, r, len(prefixes))

    if workers > 1 and len(prefixes) > 1:
        with ProcessPoolExecutor(max_workers=workers) as executor:
            shards = list(executor.map(_scan_shard, prefixes, [length] * len(prefixes), [rule] * len(prefixes)))
    else:
        shards = [_scan_shard(prefix, length, rule) for prefix in prefixes]

    words = sorted(word for shard in shards for word in shard)
    reports = []
    for word in words:
        # second opinion from both factor oracles
        if is_factor(word) or not rule.is_legal(word):
            raise OracleDisagreement(f"enumerator produced a non-deception {word!r}", word=word)
        reports.append(DeceptionReport(
            word=word,
            window=r,
            composition_depth_to_BB=deflation_illegality_depth(word),
            witness_windows=len(word) - r + 1,
        ))
    logger.info("Found %d deceptions of length %d for window %d", len(reports), length, r)
    return reports


def min_deception_length(r: int) -> int:
    """
    Smallest length with a deception for window r.

    Raises:
        BudgetExceeded: if r is above 16 or no deception fits in the budget
    """
    if r < 1:
        raise ValueError(f"window length must be >= 1, got {r}")
    if r > MAX_WINDOW:
        raise BudgetExceeded(f"window {r} is above the supported maximum {MAX_WINDOW}", window=r)
    for length in range(r + 1, settings.ENUMERATION_BUDGET + 1):
        if enumerate_deceptions(length, r):
            return length
    raise BudgetExceeded(f"no deception for window {r} within length {settings.ENUMERATION_BUDGET}", window=r)


@dataclass
class GrowthStatistics:
    """Outcome of repeated randomized growth runs."""
    grower: GrowerKind
    window: int
    trials: int
    max_len: int
    rng_seed: int
    failures: int = 0
    stuck: int = 0
    examples: List[Word] = field(default_factory=list)

    @property
    def failure_fraction(self) -> Optional[float]:
        return self.failures / self.trials if self.trials else None

    def to_dict(self) -> Dict[str, Any]:
        """Convert to dictionary."""
        return {
            'grower': self.grower.value,
            'window': self.window,
            'trials': self.trials,
            'max_len': self.max_len,
            'rng_seed': self.rng_seed,
            'failures': self.failures,
            'stuck': self.stuck,
            'failure_fraction': self.failure_fraction,
            'examples': list(self.examples),
        }


def _grow_with_window_rule(rule: WindowRule, max_len: int, rng: random.Random):
    word = ''
    while len(word) < max_len:
        candidates = [c for c in 'AB' if rule.accepts_extension(word + c)]
        if not candidates:
            return word, True
        word += candidates[0] if len(candidates) == 1 else rng.choice(candidates)
    return word, False


def greedy_growth_failure_demo(r: int, trials: int, max_len: int, rng_seed: int,
                               grower: GrowerKind = GrowerKind.WINDOW) -> GrowthStatistics:
    """
    Grow trials words of length max_len and count how many are not factors.

    The window grower appends a random letter among those keeping every
    length-r window legal. The covering grower starts from a random seed on
    the grid k*tau/1000 and grows deterministically. Both are checked with
    the same window rule and the same factor test.

    Raises:
        ValueError: if trials or max_len is negative
    """
    if trials < 0 or max_len < 0:
        raise ValueError(f"trials and max_len must be >= 0, got {trials} and {max_len}")
    grower = GrowerKind(grower)
    stats = GrowthStatistics(grower, r, trials, max_len, rng_seed)
    if trials <= 0:
        return stats

    rng = random.Random(rng_seed)
    rule = rule_factor_set(r)
    for _ in range(trials):
        if grower is GrowerKind.WINDOW:
            word, stuck = _grow_with_window_rule(rule, max_len, rng)
        else:
            seed = GoldenNumber(0, Fraction(rng.randrange(1000), 1000))
            word = grow_letters(seed, max_len - 1) if max_len > 0 else ''
            stuck = False
        if stuck:
            stats.stuck += 1
        if not is_growable(word):
            stats.failures += 1
            if len(stats.examples) < EXAMPLE_LIMIT:
                stats.examples.append(word)

    logger.info("%s grower, window %d: %d/%d trials ended in a deception",
                grower.value, r, stats.failures, trials)
    return stats
