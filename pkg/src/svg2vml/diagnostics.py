"""Warning and error reporting for the conversion pipeline.

Diagnostics are collected rather than raised so that lenient conversions can
skip broken subtrees and keep going.  In strict mode every report (warnings
included) is recorded with error severity and immediately aborts the
conversion by raising ConversionError.
"""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class Diagnostic:
    severity: str  # "warning" | "error"
    code: str
    message: str
    location: str = ""

    def __str__(self) -> str:
        suffix = f" @{self.location}" if self.location else ""
        return f"{self.severity} {self.code}: {self.message}{suffix}"


class ConversionError(Exception):
    """Aborts a strict-mode conversion; carries the triggering diagnostic."""

    def __init__(self, diagnostic: Diagnostic):
        super().__init__(str(diagnostic))
        self.diagnostic = diagnostic


class Diagnostics:
    """Ordered diagnostic collector shared across pipeline stages."""

    def __init__(self, strict: bool = False):
        self.strict = strict
        self.items: list[Diagnostic] = []

    def __iter__(self):
        return iter(self.items)

    def __len__(self) -> int:
        return len(self.items)

    def warning(self, code: str, message: str, location: str = "") -> None:
        if self.strict:
            self.error(code, message, location)
            return
        self.items.append(Diagnostic("warning", code, message, location))

    def error(self, code: str, message: str, location: str = "") -> None:
        diagnostic = Diagnostic("error", code, message, location)
        self.items.append(diagnostic)
        if self.strict:
            raise ConversionError(diagnostic)

    @property
    def has_errors(self) -> bool:
        return any(d.severity == "error" for d in self.items)

    def errors_since(self, mark: int) -> bool:
        """True if any error was recorded after position `mark`."""
        return any(d.severity == "error" for d in self.items[mark:])

    def codes(self) -> list[str]:
        return [d.code for d in self.items]
