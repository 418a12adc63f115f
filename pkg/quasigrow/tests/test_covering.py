"""
Tests for the covering growth service and the tile models.
"""

import itertools
import unittest
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from quasigrow.exceptions import InvariantViolation, OutOfRange
from quasigrow.models.golden import (
    FULL_RANGE, GoldenInterval, GoldenNumber, INV_TAU, INV_TAU2, ONE, TAU, TWO_INV_TAU,
    TWO_INV_TAU2, ZERO,
)
from quasigrow.models.tiles import Covering, Decoration, TileGeometry
from quasigrow.models.word import Letter
from quasigrow.services.covering import (
    Direction, allowed_pairs, boundary_interval, can_attach, classify, feasible_interval,
    forced_letter, grow, grow_letters, is_growable, iter_growth, render_svg, step_left, step_right,
)
from quasigrow.services.words import factor_set, fibonacci_word, frequency_error, letter_counts

grid_seeds = st.integers(min_value=0, max_value=999).map(lambda k: GoldenNumber(0, Fraction(k, 1000)))


class TestSteps(unittest.TestCase):
    def test_classify(self):
        """Test classification of heights on both sides of 1/tau"""
        self.assertEqual(classify(ONE), Letter.A)
        self.assertEqual(classify(INV_TAU), Letter.A)
        self.assertEqual(classify(INV_TAU2), Letter.B)
        self.assertEqual(classify(ZERO), Letter.B)

    def test_classify_out_of_range(self):
        """Test that heights outside [0, tau) are rejected"""
        for y in (TAU, GoldenNumber(2), GoldenNumber(-1, 0), GoldenNumber(0, -1)):
            with self.subTest(y=str(y)):
                with self.assertRaises(OutOfRange):
                    classify(y)

    def test_step_right(self):
        """Test rightward steps for both letters"""
        self.assertEqual(step_right(ONE), (Letter.A, INV_TAU2))
        self.assertEqual(step_right(INV_TAU2), (Letter.B, GoldenNumber(3, -1)))
        self.assertEqual(step_right(INV_TAU), (Letter.A, ZERO))

    def test_step_left(self):
        """Test leftward steps for both letters"""
        self.assertEqual(step_left(ZERO), (Letter.A, INV_TAU))
        self.assertEqual(step_left(ONE), (Letter.B, ZERO))
        self.assertEqual(step_left(GoldenNumber(3, -1)), (Letter.B, INV_TAU2))


class TestGrow(unittest.TestCase):
    def test_grow_right(self):
        """Test the worked example from seed height 1."""
        c = grow(ONE, 4)
        self.assertEqual(c.letters, "ABAAB")
        self.assertEqual(c.heights, [ONE, INV_TAU2, GoldenNumber(3, -1), GoldenNumber(4, -2), GoldenNumber(5, -3)])
        self.assertEqual(c.origin_index, 0)
        self.assertEqual(c.seed, ONE)

    def test_grow_left(self):
        """Test growing on the left of the seed"""
        c = grow(ONE, 0, 1)
        self.assertEqual(c.letters, "BA")
        self.assertEqual(c.heights, [ZERO, ONE])
        self.assertEqual(c.origin_index, 1)
        self.assertEqual(c.seed, ONE)
        self.assertEqual((c.n_left, c.n_right), (1, 0))

    def test_single_tile(self):
        """Test a covering with only the seed tile"""
        for y in (ZERO, INV_TAU2, ONE, GoldenNumber(Fraction(1, 2))):
            c = grow(y, 0)
            self.assertEqual(len(c), 1)
            self.assertEqual(c.letters, classify(y).value)

    def test_grow_rejects_out_of_range(self):
        """Test that grow rejects a seed outside [0, tau)"""
        with self.assertRaises(OutOfRange):
            grow(GoldenNumber(2), 3)

    def test_grow_letters_matches_grow(self):
        """Test that the integer fast path spells the same letters as grow"""
        for k in range(0, 1000, 37):
            seed = GoldenNumber(0, Fraction(k, 1000))
            self.assertEqual(grow_letters(seed, 40, 15), grow(seed, 40, 15).letters)

    def test_iter_growth_directions(self):
        """Test the first heights streamed in each direction"""
        right = list(itertools.islice(iter_growth(ONE), 3))
        self.assertEqual(right[0], (Letter.A, ONE))
        left = list(itertools.islice(iter_growth(ONE, Direction.LEFT), 2))
        self.assertEqual(left, [(Letter.B, ZERO), (Letter.A, INV_TAU)])

    def test_frequency_of_long_growth(self):
        """Test that long growth approaches the golden letter ratio"""
        w = grow_letters(INV_TAU2, 9999)
        _, count_b = letter_counts(w)
        self.assertLess(frequency_error(w), Fraction(2, count_b))


class TestAttachment(unittest.TestCase):
    def test_after_b_only_a_attaches(self):
        """Test that only an A-tile attaches after a B-tile"""
        self.assertFalse(can_attach(ONE, Letter.B, Direction.RIGHT))
        self.assertTrue(can_attach(ONE, Letter.A, Direction.RIGHT))

    def test_after_aa_only_b_attaches(self):
        """Test that only a B-tile attaches after AA"""
        y = GoldenNumber(Fraction(1, 10))
        self.assertFalse(can_attach(y, Letter.A, Direction.RIGHT))
        self.assertTrue(can_attach(y, Letter.B, Direction.RIGHT))

    def test_after_ababa_only_a_attaches(self):
        """Test that only an A-tile attaches after ABABA"""
        self.assertFalse(can_attach(TWO_INV_TAU2, Letter.B, Direction.RIGHT))
        self.assertTrue(can_attach(TWO_INV_TAU2, Letter.A, Direction.RIGHT))

    def test_allowed_pairs(self):
        """Test the two-tile configurations the overlap rule permits"""
        self.assertEqual(allowed_pairs(), {"AA", "AB", "BA"})


@given(grid_seeds)
def test_left_step_undoes_right_step(y):
    """Test that step_left inverts step_right and the other way round."""
    letter, after = step_right(y)
    assert step_left(after) == (letter, y)
    letter, before = step_left(y)
    assert step_right(before) == (letter, y)


@given(grid_seeds)
def test_exactly_one_letter_attaches(y):
    """Test that exactly one letter attaches on each side"""
    for side in Direction:
        fits = [letter for letter in Letter if can_attach(y, letter, side)]
        assert len(fits) == 1


class TestFeasibleInterval(unittest.TestCase):
    def test_examples(self):
        """Test feasible intervals of short words"""
        self.assertEqual(feasible_interval(""), FULL_RANGE)
        self.assertEqual(feasible_interval("A"), GoldenInterval.half_open(INV_TAU, TAU))
        self.assertEqual(feasible_interval("AA"), GoldenInterval.half_open(TWO_INV_TAU, TAU))
        self.assertEqual(feasible_interval("AAB"), GoldenInterval.half_open(TWO_INV_TAU, TAU))
        self.assertTrue(feasible_interval("AAA").is_empty)
        self.assertTrue(feasible_interval("BB").is_empty)

    def test_forcing_bounds(self):
        """Test the boundary heights after AA and ABABA, exactly."""
        self.assertEqual(boundary_interval("AA"), GoldenInterval.half_open(ZERO, INV_TAU2))
        self.assertEqual(forced_letter("AA"), Letter.B)
        after = boundary_interval("ABABA")
        self.assertEqual(after.lo, TWO_INV_TAU2)
        self.assertTrue(after.closed_lo)
        self.assertEqual(forced_letter("ABABA"), Letter.A)

    def test_forced_letter_open_cases(self):
        """Test forced letters of short contexts"""
        self.assertIsNone(forced_letter("A"))
        self.assertEqual(forced_letter("B"), Letter.A)
        self.assertIsNone(forced_letter("AAA"))

    def test_forcing_bounds_over_all_legal_contexts(self):
        """Test that a forced letter is never contradicted by a factor"""
        for n in range(2, 16):
            for w in factor_set(n):
                boundary = boundary_interval(w)
                if w.endswith("AA"):
                    self.assertTrue(GoldenInterval.half_open(ZERO, INV_TAU2).intersect(boundary) == boundary)
                if w.endswith("ABABA"):
                    self.assertFalse(boundary.lo < TWO_INV_TAU2)

    def test_is_growable_matches_interval(self):
        """Test that is_growable agrees with the exact interval for all short words"""
        for n in range(0, 11):
            for letters in itertools.product("AB", repeat=n):
                w = ''.join(letters)
                self.assertEqual(is_growable(w), not feasible_interval(w).is_empty, w)

    def test_prefix_widths_shrink(self):
        """Test that feasible intervals shrink as a word is extended"""
        widths = [feasible_interval(fibonacci_word(n)).width() for n in range(1, 21)]
        for earlier, later in zip(widths, widths[1:]):
            self.assertTrue(later > ZERO)
            self.assertTrue(later <= earlier)
        self.assertTrue(widths[-1] < widths[0])


class TestTileModels(unittest.TestCase):
    def test_geometry(self):
        """Test tile geometry derived from the overlap width"""
        geometry = TileGeometry()
        self.assertEqual(geometry.tile_width, TAU)
        self.assertEqual(geometry.pitch, ONE + INV_TAU * Fraction(1, 2))
        with self.assertRaises(InvariantViolation):
            TileGeometry(ZERO)

    def test_decoration_invariants(self):
        """Test that decorations reject heights outside their domains"""
        with self.assertRaises(InvariantViolation):
            Decoration.place(Letter.A, ZERO)
        with self.assertRaises(InvariantViolation):
            Decoration(Letter.B, ZERO, ZERO)

    def test_covering_invariants(self):
        """Test that a covering rejects mismatched neighbouring strings"""
        b = Decoration.place(Letter.B, ZERO)
        with self.assertRaises(InvariantViolation):
            Covering((b, Decoration.place(Letter.B, ZERO)))
        with self.assertRaises(InvariantViolation):
            Covering((Decoration.place(Letter.A, ONE), Decoration.place(Letter.A, ONE)))

    def test_to_dict(self):
        """Test the dictionary form of a covering"""
        data = grow(ONE, 1).to_dict()
        self.assertEqual(data['letters'], "AB")
        self.assertEqual(data['heights'], ["1 + 0t", "2 - 1t"])
        self.assertEqual(data['seed'], "1 + 0t")


class TestRenderSvg(unittest.TestCase):
    def test_single_tile(self):
        """Test the figure of a single tile"""
        svg = render_svg(grow(ONE, 0))
        self.assertIn('id="tile-0"', svg)
        self.assertIn('deco-A', svg)
        self.assertEqual(svg.count('<polyline'), 1)

    def test_empty_covering(self):
        """Test the figure of an empty covering"""
        svg = render_svg(Covering(()))
        self.assertIn('<title>Empty covering</title>', svg)
        self.assertTrue(svg.rstrip().endswith('</svg>'))

    def test_overlapping_strings_share_coordinates(self):
        """Test that neighbouring strings are drawn at the same height"""
        svg = render_svg(grow(ONE, 1))
        polylines = [line for line in svg.splitlines() if line.startswith('<polyline')]
        first_end = polylines[0].split('"')[1].split()[-2:]
        second_start = polylines[1].split('"')[1].split()[:2]
        self.assertEqual(first_end, second_start)

    def test_deterministic(self):
        """Test that rendering is byte-identical across runs"""
        self.assertEqual(render_svg(grow(INV_TAU2, 20, 5)), render_svg(grow(INV_TAU2, 20, 5)))


@pytest.mark.slow
def test_grown_words_have_only_factor_windows():
    """1000 grid seeds, 10^4 tiles each, every window of length 20 is a factor."""
    allowed = factor_set(20)
    for k in range(1000):
        w = grow_letters(GoldenNumber(0, Fraction(k, 1000)), 9999)
        assert all(w[i:i + 20] in allowed for i in range(len(w) - 19)), k


@pytest.mark.slow
def test_heights_stay_in_range_both_ways():
    """Test that 10^4 steps each way keep every height in [0, tau), for 100 grid seeds."""
    for k in range(0, 1000, 10):
        seed = GoldenNumber(0, Fraction(k, 1000))
        for direction in Direction:
            for _, y in itertools.islice(iter_growth(seed, direction), 10 ** 4):
                assert FULL_RANGE.contains(y), (k, direction, str(y))
