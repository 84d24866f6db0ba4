"""Path "d" attribute parsing, normalization and VML path emission.

Supported commands and their VML counterparts:

    M,m -> m      L,l -> l      H,h -> l      V,v -> l
    C,c -> c      Z,z -> x (plus the final e terminator)

S/s, Q/q and T/t have no VML counterpart and are rejected; A/a is rejected
because elliptic arcs do not translate to the VML "at" command directly.
All VML commands are emitted in lower case over absolute coordinates.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Optional

from .diagnostics import Diagnostics
from .numeric import NUMBER_PATTERN, format_number

# Coordinate count per canonical (upper-case) command letter.
ARITY = {"M": 2, "L": 2, "H": 1, "V": 1, "C": 6, "Z": 0}

_UNSUPPORTED = {"S", "Q", "T"}
_ARC = "A"


@dataclass(frozen=True)
class PathCommand:
    kind: str  # one of M, L, H, V, C, Z
    relative: bool
    coords: tuple[float, ...]

    def __post_init__(self):
        if self.kind not in ARITY:
            raise ValueError(f"unknown path command kind {self.kind!r}")
        if len(self.coords) != ARITY[self.kind]:
            raise ValueError(
                f"{self.kind} needs {ARITY[self.kind]} coordinates, got {len(self.coords)}"
            )
        if self.kind == "Z" and self.relative:
            raise ValueError("close-path is never relative")


def moveto(x, y, relative=False):
    return PathCommand("M", relative, (float(x), float(y)))


def lineto(x, y, relative=False):
    return PathCommand("L", relative, (float(x), float(y)))


def curveto(x1, y1, x2, y2, x, y, relative=False):
    return PathCommand("C", relative, (float(x1), float(y1), float(x2), float(y2), float(x), float(y)))


def closepath():
    return PathCommand("Z", False, ())


_TOKEN_RE = re.compile(rf"([A-Za-z])|({NUMBER_PATTERN})")


def _tokenize(d: str) -> Optional[list]:
    tokens = []
    position = 0
    for match in _TOKEN_RE.finditer(d):
        gap = d[position : match.start()]
        if gap.strip(" \t\r\n,"):
            return None
        tokens.append(match.group(1) or float(match.group(2)))
        position = match.end()
    if d[position:].strip(" \t\r\n,"):
        return None
    return tokens


def parse_path_data(
    d: str,
    diagnostics: Optional[Diagnostics] = None,
    location: str = "",
) -> list[PathCommand]:
    """Parse a path definition into commands.

    Implicit repetition is honored: extra coordinate groups after a command
    repeat it, except after a moveto where they become linetos.  Unsupported
    commands record an error diagnostic and stop the parse.
    """
    diagnostics = diagnostics if diagnostics is not None else Diagnostics()
    tokens = _tokenize(d)
    if tokens is None:
        diagnostics.error("BAD_PATH", f"unparseable path data {d!r}", location)
        return []

    commands: list[PathCommand] = []
    index = 0
    pending: Optional[tuple[str, bool]] = None  # command continued by bare numbers
    while index < len(tokens):
        token = tokens[index]
        if isinstance(token, str):
            upper = token.upper()
            if upper in _UNSUPPORTED:
                diagnostics.error(
                    "UNSUPPORTED_COMMAND", f"path command {token!r} has no VML counterpart", location
                )
                return commands
            if upper == _ARC:
                diagnostics.error(
                    "FUTURE_WORK_ARC", f"arc command {token!r} is not implemented", location
                )
                return commands
            if upper not in ARITY:
                diagnostics.error("BAD_PATH", f"unknown path command {token!r}", location)
                return commands
            relative = token.islower()
            index += 1
            if upper == "Z":
                commands.append(closepath())
                pending = None
                continue
            pending = (upper, relative)
        elif pending is None:
            diagnostics.error("BAD_PATH", "coordinates before any command", location)
            return commands

        kind, relative = pending
        arity = ARITY[kind]
        group = tokens[index : index + arity]
        if len(group) < arity or any(isinstance(t, str) for t in group):
            diagnostics.error(
                "BAD_PATH", f"command {kind} expects {arity} coordinates", location
            )
            return commands
        commands.append(PathCommand(kind, relative, tuple(group)))
        index += arity
        if kind == "M":
            # Extra pairs after a moveto continue as linetos.
            pending = ("L", relative)
    return commands


def to_absolute(commands: list[PathCommand]) -> list[PathCommand]:
    """Rewrite commands to absolute form with H/V expanded to linetos.

    A leading relative moveto behaves as absolute because the cursor starts
    at the origin.  Close-path returns the cursor to the subpath start.
    """
    result: list[PathCommand] = []
    cx = cy = 0.0
    sx = sy = 0.0
    for command in commands:
        kind, relative, coords = command.kind, command.relative, command.coords
        if kind == "Z":
            result.append(closepath())
            cx, cy = sx, sy
            continue
        if kind == "H":
            x = cx + coords[0] if relative else coords[0]
            result.append(lineto(x, cy))
            cx = x
            continue
        if kind == "V":
            y = cy + coords[0] if relative else coords[0]
            result.append(lineto(cx, y))
            cy = y
            continue
        if relative:
            coords = tuple(
                value + (cx if i % 2 == 0 else cy) for i, value in enumerate(coords)
            )
        if kind == "M":
            result.append(moveto(*coords))
            cx, cy = coords
            sx, sy = coords
        elif kind == "L":
            result.append(lineto(*coords))
            cx, cy = coords
        elif kind == "C":
            result.append(curveto(*coords))
            cx, cy = coords[4], coords[5]
    return result


def shift_commands(commands: list[PathCommand], dx: float, dy: float) -> list[PathCommand]:
    """Translate every coordinate pair of absolute commands by (dx, dy)."""
    shifted = []
    for command in commands:
        if command.relative:
            raise ValueError("shift_commands requires absolute commands")
        coords = tuple(
            value + (dx if i % 2 == 0 else dy) for i, value in enumerate(command.coords)
        )
        shifted.append(PathCommand(command.kind, False, coords))
    return shifted


_VML_LETTER = {"M": "m", "L": "l", "C": "c"}


def emit_vml_path(commands: list[PathCommand], precision: int = 6) -> str:
    """Serialize absolute commands as a VML path string.

    Every close-path becomes "x"; exactly one trailing "e" terminates the
    string.
    """
    parts = []
    for command in commands:
        if command.relative:
            raise ValueError("emit_vml_path requires absolute commands")
        if command.kind == "Z":
            parts.append("x")
            continue
        if command.kind not in _VML_LETTER:
            raise ValueError(f"command {command.kind} must be normalized before emission")
        coords = ",".join(format_number(value, precision) for value in command.coords)
        parts.append(f"{_VML_LETTER[command.kind]} {coords}")
    parts.append("e")
    return " ".join(parts)
