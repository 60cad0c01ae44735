from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class Diagnostic:
    """One warning event, rendered as ``WARN <path>:<line>: <message>``."""

    path: str
    line: int
    message: str

    def __str__(self) -> str:
        return f"WARN {self.path}:{self.line}: {self.message}"
