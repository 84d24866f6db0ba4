"""Shared numeric grammar and deterministic number formatting.

The accepted number grammar is deliberately small: optional sign, digits,
optional decimal point.  Exponent notation is rejected everywhere so that
parsing and emission stay symmetric and output never contains "e" forms.
"""

from __future__ import annotations

import re

NUMBER_PATTERN = r"[+-]?(?:\d+\.?\d*|\.\d+)"

_NUMBER_RE = re.compile(NUMBER_PATTERN + r"\Z")


def parse_number(token: str) -> float:
    """Parse one numeric token; raises ValueError on anything else."""
    token = token.strip()
    if not _NUMBER_RE.match(token):
        raise ValueError(f"invalid number: {token!r}")
    return float(token)


def format_number(value: float, precision: int = 6) -> str:
    """Format a number with fixed precision, trimming trailing zeros.

    Never produces exponent notation; "-0" collapses to "0".
    """
    text = f"{value:.{precision}f}"
    if "." in text:
        text = text.rstrip("0").rstrip(".")
    if text in ("-0", ""):
        text = "0"
    return text
