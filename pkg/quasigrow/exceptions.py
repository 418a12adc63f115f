"""
Exceptions raised by quasigrow.

Every error carries a machine-readable code and the exit status the command
line uses when the error reaches it.
"""


class QuasigrowError(Exception):
    """Base class for all quasigrow errors."""
    code = 'error'
    exit_code = 1

    def __init__(self, message: str = '', **params):
        super().__init__(message or self.__class__.__doc__)
        self.message = message or self.__class__.__doc__
        self.params = params

    def to_dict(self):
        """Convert to dictionary."""
        return {
            'error': self.code,
            'message': self.message,
            **{key: str(value) for key, value in self.params.items()},
        }


class GoldenParseError(QuasigrowError):
    """Text is not a valid golden-string."""
    code = 'golden_parse'
    exit_code = 2


class InvalidWord(QuasigrowError):
    """Word contains letters outside {A, B}."""
    code = 'invalid_word'
    exit_code = 2


class ContainsBB(QuasigrowError):
    """Word already contains the forbidden segment BB."""
    code = 'contains_bb'
    exit_code = 2


class OutOfRange(QuasigrowError):
    """String height lies outside [0, tau)."""
    code = 'out_of_range'
    exit_code = 3


class OracleDisagreement(QuasigrowError):
    """Independent factor oracles returned different verdicts."""
    code = 'oracle_disagreement'
    exit_code = 4


class InvariantViolation(QuasigrowError):
    """A decoration or covering breaks its structural invariants."""
    code = 'invariant_violation'
    exit_code = 4


class BudgetExceeded(QuasigrowError):
    """Requested enumeration is larger than the configured budget."""
    code = 'budget_exceeded'
    exit_code = 5


class DegenerateParameters(QuasigrowError):
    """Rotation parameters do not define a two-interval partition."""
    code = 'degenerate_params'
    exit_code = 2


class ConfigurationError(QuasigrowError):
    """An environment setting has an invalid value."""
    code = 'configuration'
    exit_code = 2


class UsageError(QuasigrowError):
    """Command-line options are inconsistent."""
    code = 'usage'
    exit_code = 2
