"""
Command-line interface for quasigrow.

Subcommands: grow, verify, deceptions, lift, render, selftest.
Payloads go to stdout (JSON with sorted keys, letters, SVG or a text table);
diagnostics go to stderr through logging.

Exit codes:
  0 success, 2 parse/usage error, 3 seed out of range,
  4 internal oracle inconsistency, 5 enumeration budget exceeded.
"""

import argparse
import logging
import sys
from typing import Callable, Dict, List, Optional, TextIO

from quasigrow import __version__, settings
from quasigrow.exceptions import OracleDisagreement, QuasigrowError, UsageError
from quasigrow.logging_config import configure_logging
from quasigrow.models.golden import GoldenNumber, format_golden, parse_golden
from quasigrow.models.records import RunRecord
from quasigrow.models.tiles import TileGeometry
from quasigrow.models.word import validate_word
from quasigrow.services import covering, deceptions, hyperlift, selftest, words

logger = logging.getLogger("quasigrow.cli")


def non_negative_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if value < 0:
        raise argparse.ArgumentTypeError(f"must be >= 0, got {value}")
    return value


def positive_int(text: str) -> int:
    value = non_negative_int(text)
    if value == 0:
        raise argparse.ArgumentTypeError("must be >= 1, got 0")
    return value


def golden_payload(x: GoldenNumber) -> Dict[str, object]:
    return {'exact': format_golden(x), 'approx': float(x)}


def _geometry(args) -> TileGeometry:
    return TileGeometry(parse_golden(args.w)) if getattr(args, 'w', None) else TileGeometry()


def cmd_grow(args, out: TextIO) -> int:
    """Grow a covering from a seed height and print letters, a JSON record or SVG."""
    seed = parse_golden(args.seed)
    c = covering.grow(seed, args.length, args.left, geometry=_geometry(args))

    if args.format == 'letters':
        out.write(c.letters + '\n')
    elif args.format == 'svg':
        out.write(covering.render_svg(c))
    else:
        record = RunRecord(
            command='grow',
            parameters={'seed': format_golden(seed), 'length': args.length, 'left': args.left},
            outputs=c.to_dict(),
        )
        out.write(record.to_json() + '\n')
    return 0


def cmd_render(args, out: TextIO) -> int:
    """Grow a covering and write its SVG figure."""
    seed = parse_golden(args.seed)
    svg = covering.render_svg(covering.grow(seed, args.length, args.left, geometry=_geometry(args)))
    if args.out:
        with open(args.out, 'w', encoding='utf-8', newline='\n') as handle:
            handle.write(svg)
        logger.info("Wrote %s", args.out)
    else:
        out.write(svg)
    return 0


def cmd_verify(args, out: TextIO) -> int:
    """Judge a word with all three oracles and show its composition tower."""
    word = validate_word(args.word)

    interval = covering.feasible_interval(word)
    by_interval = not interval.is_empty
    by_search = words.occurs_in_fibonacci(word)
    by_strip = hyperlift.fits_strip(word)
    if not by_interval == by_search == by_strip:
        raise OracleDisagreement(
            f"oracles disagree on {word!r}: interval={by_interval} substring={by_search} strip={by_strip}",
            word=word,
        )

    record = RunRecord(
        command='verify',
        parameters={'word': word},
        outputs={
            'factor': by_interval,
            'feasible_interval': interval.to_dict(),
            'strip_width': golden_payload(hyperlift.strip_width(word)),
            'deflation_depth_to_BB': words.deflation_illegality_depth(word),
            'composition_tower': words.composition_tower(word),
        },
    )
    out.write(record.to_json() + '\n')
    return 0


def _deception_table(rows: List[deceptions.DeceptionReport]) -> str:
    lines = [f"{'length':>6}  {'depth':>5}  {'B..B':>4}  word"]
    for row in rows:
        depth = '-' if row.composition_depth_to_BB is None else str(row.composition_depth_to_BB)
        lines.append(f"{len(row.word):>6}  {depth:>5}  {'yes' if row.endpoints_b else 'no':>4}  {row.word}")
    lines.append(f"{len(rows)} deception(s)")
    return '\n'.join(lines) + '\n'


def cmd_deceptions(args, out: TextIO) -> int:
    """Enumerate deceptions of a window rule, optionally with the growth demo."""
    if args.demo_trials is not None and args.rng_seed is None:
        raise UsageError("--rng-seed is required with --demo-trials")
    deceptions.check_budget(args.max_len)

    rows = []
    for length in range(1, args.max_len + 1):
        rows.extend(deceptions.enumerate_deceptions(length, args.window))

    stats = None
    if args.demo_trials is not None:
        stats = deceptions.greedy_growth_failure_demo(
            args.window, args.demo_trials, args.demo_len, args.rng_seed, grower=args.grower,
        )

    if args.format == 'json':
        outputs = {'deceptions': [row.to_dict() for row in rows]}
        if stats is not None:
            outputs['demo'] = stats.to_dict()
        record = RunRecord(
            command='deceptions',
            parameters={
                'window': args.window, 'max_len': args.max_len, 'demo_trials': args.demo_trials,
                'demo_len': args.demo_len, 'rng_seed': args.rng_seed, 'grower': args.grower,
            },
            outputs=outputs,
        )
        out.write(record.to_json() + '\n')
    else:
        out.write(_deception_table(rows))
        if stats is not None:
            fraction = stats.failure_fraction
            out.write(
                f"demo: grower={stats.grower.value} trials={stats.trials} max_len={stats.max_len} "
                f"failures={stats.failures} stuck={stats.stuck} "
                f"fraction={'n/a' if fraction is None else f'{fraction:.6f}'}\n"
            )
    return 0


def cmd_lift(args, out: TextIO) -> int:
    """Lift a word to the square lattice and report its strip containment."""
    word = validate_word(args.word)
    offset = parse_golden(args.offset)
    mode = hyperlift.PerpMode(args.mode)

    staircase = hyperlift.lift(word)
    trace = hyperlift.perp_trace(word, offset, mode)
    width = trace.width()
    record = RunRecord(
        command='lift',
        parameters={'word': word, 'mode': mode.value, 'offset': format_golden(offset)},
        outputs={
            'staircase': staircase.to_dict(),
            'perp_trace': trace.to_dict(),
            'strip_width': golden_payload(width),
            'strip_threshold': golden_payload(hyperlift.STRIP_THRESHOLD[mode]),
            'contained': width < hyperlift.STRIP_THRESHOLD[mode],
            'parallel_coords': [format_golden(x) for x in hyperlift.parallel_coords(word)],
        },
    )
    out.write(record.to_json() + '\n')

    if args.svg:
        with open(args.svg, 'w', encoding='utf-8', newline='\n') as handle:
            handle.write(hyperlift.render_staircase_svg(staircase, offset))
        logger.info("Wrote %s", args.svg)
    return 0


def cmd_selftest(args, out: TextIO) -> int:
    """Exhaustive oracle agreement and forcing-bound checks."""
    report = selftest.run_selftest(quick=args.quick, inject_fault=args.inject_fault)
    record = RunRecord(
        command='selftest',
        parameters={'quick': args.quick, 'inject_fault': args.inject_fault},
        outputs=report.to_dict(),
    )
    out.write(record.to_json() + '\n')
    if not report.passed:
        logger.error("First counterexample: %s", report.counterexample)
        return 1
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog='quasigrow',
        description="Grow and verify 1D quasiperiodic coverings with adjustable string decorations",
    )
    parser.add_argument('--version', action='version', version=f"%(prog)s {__version__}")
    parser.add_argument('-v', '--verbose', action='store_true', help='Log at DEBUG level on stderr')
    subparsers = parser.add_subparsers(dest='command', required=True)

    grow = subparsers.add_parser('grow', help='Grow a covering from a seed string height')
    grow.add_argument('--seed', required=True, help='Seed height as a golden-string, e.g. "1" or "-1+1t"')
    grow.add_argument('--length', type=non_negative_int, default=10, help='Number of tiles attached on the right')
    grow.add_argument('--left', type=non_negative_int, default=0, help='Number of tiles attached on the left')
    grow.add_argument('--format', choices=('letters', 'json', 'svg'), default='letters')
    grow.add_argument('--w', help='Overlap width w as a golden-string (default 1/(2 tau))')
    grow.set_defaults(handler=cmd_grow)

    render = subparsers.add_parser('render', help='Write the SVG figure of a grown covering')
    render.add_argument('--seed', required=True)
    render.add_argument('--length', type=non_negative_int, default=10)
    render.add_argument('--left', type=non_negative_int, default=0)
    render.add_argument('--w')
    render.add_argument('--out', help='Output file (stdout when omitted)')
    render.set_defaults(handler=cmd_render)

    verify = subparsers.add_parser('verify', help='Check a word against all three factor oracles')
    verify.add_argument('word')
    verify.set_defaults(handler=cmd_verify)

    decept = subparsers.add_parser('deceptions', help='Enumerate deceptions of a window rule')
    decept.add_argument('--window', type=positive_int, required=True, help='Window length r of the rule')
    decept.add_argument('--max-len', type=non_negative_int, required=True, help='Longest word length to scan')
    decept.add_argument('--demo-trials', type=non_negative_int, help='Also run the randomized growth demo')
    decept.add_argument('--demo-len', type=non_negative_int, default=50, help='Word length grown in the demo')
    decept.add_argument('--rng-seed', type=int, help='Seed of the demo RNG (required with --demo-trials)')
    decept.add_argument('--grower', choices=[kind.value for kind in deceptions.GrowerKind], default='window')
    decept.add_argument('--format', choices=('table', 'json'), default='table')
    decept.set_defaults(handler=cmd_deceptions)

    lift = subparsers.add_parser('lift', help='Lift a word to the 2D lattice')
    lift.add_argument('word')
    lift.add_argument('--mode', choices=[mode.value for mode in hyperlift.PerpMode], default='scaled')
    lift.add_argument('--offset', default='0', help='Trace start as a golden-string (scaled units)')
    lift.add_argument('--svg', help='Also write the staircase figure to this file')
    lift.set_defaults(handler=cmd_lift)

    test = subparsers.add_parser('selftest', help='Run the oracle agreement suite')
    test.add_argument('--quick', action='store_true', help='Words up to length 8 only')
    test.add_argument('--inject-fault', action='store_true', help=argparse.SUPPRESS)
    test.set_defaults(handler=cmd_selftest)

    return parser


def main(argv: Optional[List[str]] = None, out: Optional[TextIO] = None) -> int:
    """Parse arguments, run one subcommand and return its exit code."""
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)

    configure_logging('DEBUG' if args.verbose else None)
    logger.debug("Budget %d, workers %d", settings.ENUMERATION_BUDGET, settings.ENUMERATION_WORKERS)

    handler: Callable = args.handler
    try:
        settings.check_configuration()
        return handler(args, out)
    except QuasigrowError as exc:
        logger.error("%s: %s", exc.code, exc.message)
        return exc.exit_code
