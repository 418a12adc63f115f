"""
Run records: the JSON envelope every command-line run prints.
"""

import json
from dataclasses import asdict, dataclass, field
from typing import Any, Dict

from quasigrow import __version__


@dataclass
class RunRecord:
    """Container for one command invocation and its payload. No timestamps."""
    command: str
    parameters: Dict[str, Any] = field(default_factory=dict)
    outputs: Dict[str, Any] = field(default_factory=dict)
    tool_version: str = __version__
    exact_mode: bool = True

    def to_dict(self) -> Dict[str, Any]:
        """Convert to dictionary."""
        return asdict(self)

    def to_json(self) -> str:
        """Serialize deterministically (sorted keys, fixed separators)."""
        return json.dumps(self.to_dict(), sort_keys=True, indent=2, ensure_ascii=True)

    @classmethod
    def from_json(cls, text: str) -> 'RunRecord':
        return cls(**json.loads(text))
