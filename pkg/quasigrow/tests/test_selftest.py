"""
Tests for the tri-oracle self-test.
"""

import unittest

import pytest

from quasigrow.models.tiles import ALPHA_DOMAINS
from quasigrow.models.word import Letter
from quasigrow.services.selftest import (
    QUICK_MAX_LENGTH, SelftestReport, check_forcing_bounds, check_oracles, faulty_domains,
    run_selftest,
)


class TestSelftest(unittest.TestCase):
    def test_quick_run_passes(self):
        """Test that the quick self-test passes"""
        report = run_selftest(quick=True)
        self.assertTrue(report.passed)
        self.assertEqual(report.max_length, QUICK_MAX_LENGTH)
        self.assertEqual(report.words_checked, 2 ** (QUICK_MAX_LENGTH + 1) - 2)
        self.assertIsNone(report.counterexample)

    def test_injected_fault_is_caught(self):
        """Test that the widened B domain is caught"""
        report = run_selftest(quick=True, inject_fault=True)
        self.assertFalse(report.passed)
        self.assertIn('word', report.counterexample)
        self.assertFalse(report.counterexample['substring'])

    def test_forcing_bounds(self):
        """Test the forcing-bound checks on their own"""
        report = SelftestReport(max_length=0)
        check_forcing_bounds(report)
        self.assertEqual(report.failures, [])

    def test_faulty_domains_overlap(self):
        """Test that the faulty domains overlap"""
        domains = faulty_domains()
        self.assertEqual(domains[Letter.A], ALPHA_DOMAINS[Letter.A])
        self.assertFalse(domains[Letter.A].intersect(domains[Letter.B]).is_empty)

    def test_to_dict(self):
        """Test the dictionary form of a report"""
        data = run_selftest(quick=True).to_dict()
        self.assertTrue(data['passed'])
        self.assertEqual(data['failures'], [])


@pytest.mark.slow
def test_default_run_passes():
    """Test that the full self-test passes"""
    assert run_selftest().passed


@pytest.mark.slow
def test_three_oracles_agree_up_to_length_fifteen():
    """Test that all three oracles agree on every word up to length 15"""
    report = SelftestReport(max_length=15)
    check_oracles(report, ALPHA_DOMAINS)
    assert report.passed, report.counterexample
    assert report.words_checked == 2 ** 16 - 2
