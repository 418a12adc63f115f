"""
Tests for settings, logging configuration, run records and error codes.
"""

import importlib
import logging
from unittest.mock import patch

import pytest

from quasigrow import settings
from quasigrow.exceptions import (
    BudgetExceeded, ConfigurationError, GoldenParseError, OracleDisagreement, OutOfRange,
    QuasigrowError,
)
from quasigrow.logging_config import NOISY_LOGGERS, configure_logging
from quasigrow.models.records import RunRecord


class TestEnvironment:
    def test_env_int_default(self):
        """Test that an unset variable gives the default"""
        with patch.dict('os.environ', {}, clear=True):
            assert settings.env_int('QUASIGROW_BUDGET', 24) == 24

    def test_env_int_value(self):
        """Test reading an integer setting"""
        with patch.dict('os.environ', {'QUASIGROW_BUDGET': '18'}):
            assert settings.env_int('QUASIGROW_BUDGET', 24) == 18

    def test_env_int_rejects_text(self):
        """Test that a non-integer value raises ConfigurationError"""
        with patch.dict('os.environ', {'QUASIGROW_WORKERS': 'four'}):
            with pytest.raises(ConfigurationError):
                settings.env_int('QUASIGROW_WORKERS', 1)

    def test_malformed_setting_falls_back(self):
        """Test that a malformed integer keeps its default and is reported later."""
        try:
            with patch.dict('os.environ', {'QUASIGROW_BUDGET': 'abc'}):
                importlib.reload(settings)
                budget = settings.ENUMERATION_BUDGET
                errors = list(settings.CONFIGURATION_ERRORS)
        finally:
            importlib.reload(settings)
        assert budget == 24
        assert [error.code for error in errors] == ['configuration']
        assert 'QUASIGROW_BUDGET' in errors[0].message

    def test_check_configuration(self):
        """Test that check_configuration raises the first recorded error."""
        settings.check_configuration()
        with patch.object(settings, 'CONFIGURATION_ERRORS', [ConfigurationError("bad")]):
            with pytest.raises(ConfigurationError, match="bad"):
                settings.check_configuration()

    @pytest.mark.parametrize("raw,expected", [('True', True), ('1', True), ('yes', True), ('no', False)])
    def test_env_flag(self, raw, expected):
        """Test reading boolean flags"""
        with patch.dict('os.environ', {'DEBUG_MODE': raw}):
            assert settings.env_flag('DEBUG_MODE') is expected

    def test_defaults(self):
        """Test the default settings"""
        assert settings.ENUMERATION_WORKERS >= 1
        assert settings.LOGGING['handlers']['console']['stream'] == 'ext://sys.stderr'


class TestLogging:
    def test_configure_logging_override(self):
        """Test overriding the log level"""
        configure_logging('debug')
        assert logging.getLogger('quasigrow').level == logging.DEBUG
        configure_logging('warning')
        assert logging.getLogger('quasigrow').level == logging.WARNING

    def test_noisy_loggers_are_clamped(self):
        """Test that noisy third-party loggers stay at WARNING"""
        configure_logging()
        for name in NOISY_LOGGERS:
            assert logging.getLogger(name).level == logging.WARNING


class TestRunRecord:
    def test_json_is_sorted_and_stable(self):
        """Test that records serialize with sorted keys and round-trip"""
        record = RunRecord(command='grow', parameters={'seed': '1 + 0t', 'length': 4}, outputs={'letters': 'ABAAB'})
        text = record.to_json()
        assert text == record.to_json()
        assert text.index('"command"') < text.index('"exact_mode"') < text.index('"outputs"')
        assert RunRecord.from_json(text) == record


class TestErrors:
    @pytest.mark.parametrize("error,code", [
        (GoldenParseError, 2), (OutOfRange, 3), (OracleDisagreement, 4), (BudgetExceeded, 5),
        (ConfigurationError, 2),
    ])
    def test_exit_codes(self, error, code):
        """Test the exit code of each error"""
        assert error().exit_code == code
        assert isinstance(error(), QuasigrowError)

    def test_to_dict(self):
        """Test the dictionary form of an error"""
        data = OutOfRange("too high", y=2).to_dict()
        assert data == {'error': 'out_of_range', 'message': 'too high', 'y': '2'}

    def test_default_message(self):
        """Test that errors default to their docstring"""
        assert BudgetExceeded().message == BudgetExceeded.__doc__
