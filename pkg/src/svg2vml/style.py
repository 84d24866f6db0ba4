"""Presentation attribute mapping: stroke, fill, gradients and opacity.

Stroke features collect into a single v:stroke child, fill features into a
single v:fill child.  Colors pass through untranslated; named colors and hex
values are valid on both sides.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .diagnostics import Diagnostics
from .numeric import format_number
from .svg_dom import SvgDocument, SvgNode, parse_length, parse_number

# SVG stroke attribute -> v:stroke attribute.
STROKE_TABLE = {
    "stroke": "color",
    "stroke-width": "weight",
    "stroke-linecap": "endcap",
    "stroke-linejoin": "joinstyle",
    "stroke-miterlimit": "miterlimit",
    "stroke-opacity": "opacity",
}

HORIZONTAL = "horizontal"
VERTICAL = "vertical"


@dataclass(frozen=True)
class GradientSpec:
    direction: str  # horizontal | vertical
    color_start: str
    color_end: str


def map_stroke_attribute(name: str, value: str, precision: int = 6) -> tuple[str, str]:
    """Translate one stroke attribute to its v:stroke counterpart."""
    target = STROKE_TABLE[name]
    if name == "stroke-width":
        length = parse_length(value)
        if length is not None:
            return target, format_number(length, precision)
    return target, value


def map_opacity(
    value: float,
    diagnostics: Optional[Diagnostics] = None,
    location: str = "",
) -> float:
    """Scale an opacity from [0, 1] to the [0, 100] filter range."""
    diagnostics = diagnostics if diagnostics is not None else Diagnostics()
    if value < 0.0 or value > 1.0:
        diagnostics.warning(
            "BAD_ATTRIBUTE", f"opacity {format_number(value)} outside [0, 1], clamped", location
        )
        value = min(1.0, max(0.0, value))
    return 100.0 * value


def _stop_offset(value: Optional[str]) -> Optional[float]:
    if value is None:
        return None
    token = value.strip()
    scale = 1.0
    if token.endswith("%"):
        token = token[:-1].strip()
        scale = 0.01
    try:
        return parse_number(token) * scale
    except ValueError:
        return None


def _gradient_coordinate(node: SvgNode, name: str, default: float) -> Optional[float]:
    raw = node.attr(name)
    if raw is None:
        return default
    return _stop_offset(raw)


def resolve_gradient(
    node: SvgNode,
    diagnostics: Optional[Diagnostics] = None,
    location: str = "",
) -> Optional[GradientSpec]:
    """Extract a two-stop horizontal or vertical gradient.

    Only gradients of exactly two stops at 0% and 100% along a horizontal or
    vertical axis are expressible; everything else records
    UNSUPPORTED_GRADIENT and returns None.
    """
    diagnostics = diagnostics if diagnostics is not None else Diagnostics()

    def unsupported(reason: str) -> None:
        diagnostics.error("UNSUPPORTED_GRADIENT", reason, location)

    stops = [child for child in node.children if child.tag == "stop"]
    if len(stops) != 2:
        unsupported(f"gradient needs exactly 2 stops, got {len(stops)}")
        return None

    offsets = [_stop_offset(stop.attr("offset")) for stop in stops]
    if offsets[0] != 0.0 or offsets[1] != 1.0:
        unsupported("gradient stops must sit at 0% and 100%")
        return None

    x1 = _gradient_coordinate(node, "x1", 0.0)
    y1 = _gradient_coordinate(node, "y1", 0.0)
    x2 = _gradient_coordinate(node, "x2", 1.0)
    y2 = _gradient_coordinate(node, "y2", 0.0)
    if None in (x1, y1, x2, y2):
        unsupported("unparseable gradient axis coordinates")
        return None
    if y1 == y2 and x1 != x2:
        direction = HORIZONTAL
    elif x1 == x2 and y1 != y2:
        direction = VERTICAL
    else:
        unsupported("only horizontal or vertical gradient axes are supported")
        return None

    colors = []
    for stop in stops:
        color = stop.attr("stop-color")
        if color is None:
            unsupported("gradient stop without stop-color")
            return None
        colors.append(color)
    return GradientSpec(direction, colors[0], colors[1])


def resolve_fill_reference(
    value: str,
    document: SvgDocument,
    diagnostics: Optional[Diagnostics] = None,
    location: str = "",
) -> Optional[GradientSpec]:
    """Resolve a fill of the form url(#id) to a gradient spec."""
    diagnostics = diagnostics if diagnostics is not None else Diagnostics()
    inner = value.strip()[4:-1].strip().strip("'\"")
    if not inner.startswith("#"):
        diagnostics.error("DANGLING_REF", f"unresolvable fill reference {value!r}", location)
        return None
    target = document.id_index.get(inner[1:])
    if target is None:
        diagnostics.error("DANGLING_REF", f"fill references unknown id {inner!r}", location)
        return None
    if target.tag != "linearGradient":
        diagnostics.error(
            "UNSUPPORTED_GRADIENT", f"fill reference {inner!r} is not a linear gradient", location
        )
        return None
    return resolve_gradient(target, diagnostics, location)
