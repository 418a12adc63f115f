"""
Self-test: exhaustive tri-oracle agreement plus the forcing-bound checks.

Every word up to a given length is judged three ways: feasible-interval
propagation, substring search in a long prefix, and the strip criterion of
the lifted staircase. Any disagreement is reported with the first
counterexample.
"""

import logging
from dataclasses import dataclass, field
from typing import Any, Dict, List, Mapping, Optional

from quasigrow.models.golden import GoldenInterval, INV_TAU, INV_TAU2, ONE, TWO_INV_TAU2, ZERO
from quasigrow.models.tiles import ALPHA_DOMAINS
from quasigrow.models.word import Letter
from quasigrow.services.covering import FeasibleTracker, boundary_interval, forced_letter
from quasigrow.services.hyperlift import strip_offsets
from quasigrow.services.words import occurs_in_fibonacci

# Set up logging
logger = logging.getLogger("quasigrow.selftest")

FULL_MAX_LENGTH = 12
QUICK_MAX_LENGTH = 8


@dataclass
class SelftestReport:
    """Summary of a self-test run."""
    max_length: int
    words_checked: int = 0
    failures: List[str] = field(default_factory=list)
    counterexample: Optional[Dict[str, Any]] = None

    @property
    def passed(self) -> bool:
        return not self.failures

    def fail(self, message: str, **details) -> None:
        self.failures.append(message)
        if self.counterexample is None:
            self.counterexample = {'message': message, **details}

    def to_dict(self) -> Dict[str, Any]:
        """Convert to dictionary."""
        return {
            'passed': self.passed,
            'max_length': self.max_length,
            'words_checked': self.words_checked,
            'failures': list(self.failures),
            'counterexample': self.counterexample,
        }


def faulty_domains() -> Mapping[Letter, GoldenInterval]:
    """Alpha domains with the B upper endpoint moved up by one unit."""
    return {
        Letter.A: ALPHA_DOMAINS[Letter.A],
        Letter.B: GoldenInterval.half_open(ZERO, INV_TAU + ONE),
    }


def check_oracles(report: SelftestReport, domains: Mapping[Letter, GoldenInterval]) -> None:
    stack = [('', FeasibleTracker(domains=domains))]
    while stack:
        word, tracker = stack.pop()
        if word:
            by_interval = not tracker.is_empty
            by_search = occurs_in_fibonacci(word)
            by_strip = not strip_offsets(word).is_empty
            report.words_checked += 1
            if not by_interval == by_search == by_strip:
                report.fail(
                    f"oracles disagree on {word}",
                    word=word, interval=by_interval, substring=by_search, strip=by_strip,
                )
                return
        if len(word) < report.max_length:
            for letter in (Letter.B, Letter.A):
                stack.append((word + letter.value, tracker.extend(letter)))


def check_forcing_bounds(report: SelftestReport) -> None:
    after_aa = boundary_interval('AA')
    if not (after_aa.lo == ZERO and after_aa.hi == INV_TAU2 and not after_aa.closed_hi):
        report.fail(f"boundary after AA is {after_aa}, expected [0, 1/tau^2)")
    if forced_letter('AA') is not Letter.B:
        report.fail("AA does not force B")

    after_ababa = boundary_interval('ABABA')
    if not (after_ababa.lo == TWO_INV_TAU2 and after_ababa.closed_lo):
        report.fail(f"boundary after ABABA is {after_ababa}, expected to start at 2/tau^2")
    if forced_letter('ABABA') is not Letter.A:
        report.fail("ABABA does not force A")


def run_selftest(quick: bool = False, inject_fault: bool = False) -> SelftestReport:
    """
    Run the agreement suite over all words up to length 12 (8 when quick).

    Args:
        quick: use the short length bound
        inject_fault: widen the B alpha domain to check that the suite notices
    """
    report = SelftestReport(QUICK_MAX_LENGTH if quick else FULL_MAX_LENGTH)
    domains = faulty_domains() if inject_fault else ALPHA_DOMAINS
    if inject_fault:
        logger.warning("Running self-test with a deliberately widened B domain")

    check_oracles(report, domains)
    check_forcing_bounds(report)

    if report.passed:
        logger.info("Self-test passed: %d words up to length %d", report.words_checked, report.max_length)
    else:
        logger.error("Self-test failed: %s", report.failures[0])
    return report
