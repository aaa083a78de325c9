"""
This module defines the JSON report every CLI command emits.
"""

import json
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional

from vsa.defaults import tool_version
from vsa.violations import Violation, sorted_violations

EXIT_CLEAN = 0
EXIT_VIOLATIONS = 1
EXIT_ERROR = 2


@dataclass
class Report:
    """
    Class representing the outcome of one command.

    Parameters
    ----------
    command : str
        The subcommand path, e.g. "hopf cocomm".
    inputs : dict
        Canonical echo of the arguments.
    results : dict
        Command-specific payload.
    violations : list of Violation
        Failed checks; a nonempty list makes the exit code 1.
    error : str, optional
        Set when the command could not run; the exit code is then 2.
    indent : int, optional
        JSON indentation used by render.

    Examples
    --------
    >>> report = Report("dims", {"algebra": "heisenberg-k1"}, version="1.0.0")
    >>> report.exit_code, report.render()
    (0, '{"command": "dims", "inputs": {"algebra": "heisenberg-k1"}, "results": {}, "version": "1.0.0", "violations": []}')

    """

    command: str
    inputs: Dict[str, Any] = field(default_factory=dict)
    results: Dict[str, Any] = field(default_factory=dict)
    violations: List[Violation] = field(default_factory=list)
    error: Optional[str] = None
    version: str = field(default_factory=tool_version)
    indent: Optional[int] = field(default=None, repr=False)

    @property
    def exit_code(self) -> int:
        if self.error is not None:
            return EXIT_ERROR
        return EXIT_VIOLATIONS if self.violations else EXIT_CLEAN

    def to_json(self) -> dict:
        payload = {
            "command": self.command,
            "inputs": self.inputs,
            "results": self.results,
            "violations": [v.to_json() for v in sorted_violations(self.violations)],
            "version": self.version,
        }
        if self.error is not None:
            payload["error"] = self.error
        return payload

    def render(self) -> str:
        """Byte-reproducible JSON with sorted keys."""
        return json.dumps(self.to_json(), sort_keys=True, indent=self.indent, ensure_ascii=False)
