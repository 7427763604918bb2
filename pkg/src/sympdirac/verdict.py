from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any


@dataclass
class Verdict:
    """Outcome of an exact identity check.

    ``lhs``/``rhs`` are filled in on failure so the mismatch can be shown.
    """

    name: str
    ok: bool
    detail: str = ""
    lhs: Any = None
    rhs: Any = None
    data: dict = field(default_factory=dict)

    def __bool__(self):
        return self.ok

    def line(self) -> str:
        tag = "PASS" if self.ok else "FAIL"
        return f"[{tag}] {self.name}" + (f": {self.detail}" if self.detail else "")
