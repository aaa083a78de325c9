"""
This module defines the violation record returned by every checker in the package.
"""

from dataclasses import dataclass
from typing import Any, Iterable, List, Optional, Tuple


@dataclass(frozen=True)
class Violation:
    """
    A failed axiom instance.

    Parameters
    ----------
    check : str
        Name of the violated axiom or condition.
    indices : tuple
        The witness: basis labels, mode indices or Hopf labels, as serializable values.
    difference : object, optional
        The nonzero difference between the two sides, already in JSON form.
    message : str
        Human readable detail.
    """

    check: str
    indices: Tuple[Any, ...]
    difference: Optional[Any] = None
    message: str = ""

    def sort_key(self) -> Tuple[str, Tuple[str, ...]]:
        return self.check, tuple(str(i) for i in self.indices)

    def to_json(self) -> dict:
        payload = {"check": self.check, "indices": [i if isinstance(i, (int, str)) else str(i) for i in self.indices]}
        if self.difference is not None:
            payload["difference"] = self.difference
        if self.message:
            payload["message"] = self.message
        return payload


def sorted_violations(violations: Iterable[Violation]) -> List[Violation]:
    return sorted(violations, key=Violation.sort_key)
