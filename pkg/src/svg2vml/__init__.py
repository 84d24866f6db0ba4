"""svg2vml: batch transpiler from an SVG subset to VML/HTML for legacy IE."""

from .cli import convert_text, run
from .diagnostics import ConversionError, Diagnostic, Diagnostics
from .emitter import emit_vml_html, emit_xhtml_passthrough
from .mappers import MapperContext, VmlNode, map_document
from .options import ConvertOptions
from .svg_dom import (
    SvgDocument,
    SvgNode,
    parse_length,
    parse_points,
    parse_svg,
    parse_view_box,
    structurally_equal,
)

__version__ = "0.1.0"

__all__ = [
    "ConversionError",
    "ConvertOptions",
    "Diagnostic",
    "Diagnostics",
    "MapperContext",
    "SvgDocument",
    "SvgNode",
    "VmlNode",
    "convert_text",
    "emit_vml_html",
    "emit_xhtml_passthrough",
    "map_document",
    "parse_length",
    "parse_points",
    "parse_svg",
    "parse_view_box",
    "run",
    "structurally_equal",
]
