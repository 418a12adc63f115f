"""
Letters and words over the two-tile alphabet {A, B}.

A plays the long tile L and B the short tile S. Words are plain strings so
they serialize as-is in JSON and on the command line.
"""

from dataclasses import dataclass
from enum import Enum

from quasigrow.exceptions import InvalidWord

Word = str


class Letter(str, Enum):
    """The two tile types."""
    A = 'A'
    B = 'B'

    def __str__(self):
        return self.value


def validate_word(text: str) -> Word:
    """
    Check that text is a word over {A, B}.

    Raises:
        InvalidWord: if any character is not A or B
    """
    if text is None:
        raise InvalidWord("word is missing")
    bad = sorted({ch for ch in text if ch not in 'AB'})
    if bad:
        raise InvalidWord(f"word {text!r} contains letters outside {{A, B}}: {''.join(bad)}", word=text)
    return text


@dataclass(frozen=True)
class ParseResult:
    """Result of one composition step AB -> A, A -> B."""
    composed: Word
    leading_flag: bool = False
    trailing_flag: bool = False

    @property
    def has_flags(self) -> bool:
        return self.leading_flag or self.trailing_flag

    def to_dict(self):
        """Convert to dictionary."""
        return {
            'composed': self.composed,
            'leading_flag': self.leading_flag,
            'trailing_flag': self.trailing_flag,
        }
