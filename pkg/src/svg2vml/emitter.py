"""Serialization of the output tree and of the inline-SVG passthrough.

Two modes exist: a VML/HTML document for legacy Internet Explorer, and an
XHTML document that embeds the original SVG fragment for browsers with
native support.  Both are deterministic for fixed options and re-parse as
well-formed XML.
"""

from __future__ import annotations

from typing import Optional

from .mappers import VmlNode
from .options import ConvertOptions
from .svg_dom import IMPLEMENTED_TAGS, SVG_NS, XLINK_NS, SvgDocument, SvgNode

VML_NS = "urn:schemas-microsoft-com:vml"

_INDENT = "  "


def _escape_text(text: str) -> str:
    return text.replace("&", "&amp;").replace("<", "&lt;").replace(">", "&gt;")


def _escape_attr(value: str) -> str:
    return _escape_text(value).replace('"', "&quot;")


def _style_text(style: dict[str, str]) -> str:
    return "".join(f"{name}:{value};" for name, value in style.items())


def _output_tag(tag: str) -> str:
    # Plain HTML elements drop their marker prefix; VML elements keep the
    # v: prefix that the behavior rule binds.
    if tag.startswith("html:"):
        return tag[5:]
    return tag


def _has_mixed_content(node: VmlNode) -> bool:
    if node.text and node.text.strip():
        return True
    return any(child.tail and child.tail.strip() for child in node.children)


def _serialize_vml(node: VmlNode, lines: list[str], depth: int, pretty: bool) -> None:
    pad = _INDENT * depth if pretty else ""
    attrs = "".join(f' {n}="{_escape_attr(v)}"' for n, v in node.attributes.items())
    if node.style:
        attrs += f' style="{_escape_attr(_style_text(node.style))}"'
    tag = _output_tag(node.tag)

    if not node.children and not (node.text and node.text.strip()):
        lines.append(f"{pad}<{tag}{attrs}/>")
        return
    if _has_mixed_content(node) or not node.children:
        # Inline serialization keeps character payloads intact.
        lines.append(f"{pad}{_inline_vml(node)}")
        return
    lines.append(f"{pad}<{tag}{attrs}>")
    for child in node.children:
        _serialize_vml(child, lines, depth + 1, pretty)
    lines.append(f"{pad}</{tag}>")


def _inline_vml(node: VmlNode) -> str:
    attrs = "".join(f' {n}="{_escape_attr(v)}"' for n, v in node.attributes.items())
    if node.style:
        attrs += f' style="{_escape_attr(_style_text(node.style))}"'
    tag = _output_tag(node.tag)
    if not node.children and not (node.text and node.text.strip()):
        return f"<{tag}{attrs}/>"
    inner = _escape_text(node.text) if node.text else ""
    for child in node.children:
        inner += _inline_vml(child)
        if child.tail:
            inner += _escape_text(child.tail)
    return f"<{tag}{attrs}>{inner}</{tag}>"


def emit_vml_html(tree: VmlNode, options: Optional[ConvertOptions] = None) -> str:
    """Serialize a mapped tree as a complete VML/HTML document."""
    options = options or ConvertOptions()
    title = options.title or "Converted SVG"
    body_lines: list[str] = []
    _serialize_vml(tree, body_lines, 2 if options.pretty else 0, options.pretty)
    body = "\n".join(body_lines) if options.pretty else "".join(body_lines)

    head_pad = _INDENT if options.pretty else ""
    newline = "\n" if options.pretty else ""
    return (
        f'<html xmlns:v="{VML_NS}">{newline}'
        f"{head_pad}<head>{newline}"
        f'{head_pad}{head_pad}<meta http-equiv="Content-Type" content="text/html; charset=utf-8"/>{newline}'
        f"{head_pad}{head_pad}<title>{_escape_text(title)}</title>{newline}"
        f"{head_pad}{head_pad}<style>v\\:* {{ behavior: url(#default#VML); }}</style>{newline}"
        f"{head_pad}</head>{newline}"
        f"{head_pad}<body>{newline}"
        f"{body}{newline}"
        f"{head_pad}</body>{newline}"
        f"</html>\n"
    )


def _svg_output_name(node: SvgNode) -> str:
    if node.tag in IMPLEMENTED_TAGS:
        return f"svg:{node.name}"
    return node.name


def _serialize_svg(node: SvgNode, lines: list[str], depth: int, pretty: bool, is_root: bool) -> None:
    pad = _INDENT * depth if pretty else ""
    name = _svg_output_name(node)
    attrs = ""
    if is_root:
        attrs += f' xmlns:svg="{SVG_NS}" xmlns:xlink="{XLINK_NS}"'
    attrs += "".join(f' {n}="{_escape_attr(v)}"' for n, v in node.attributes.items())

    has_text = bool(node.text and node.text.strip())
    if not node.children and not has_text:
        lines.append(f"{pad}<{name}{attrs}/>")
        return
    if has_text or any(child.tail and child.tail.strip() for child in node.children):
        lines.append(f"{pad}{_inline_svg(node, is_root)}")
        return
    lines.append(f"{pad}<{name}{attrs}>")
    for child in node.children:
        _serialize_svg(child, lines, depth + 1, pretty, False)
    lines.append(f"{pad}</{name}>")


def _inline_svg(node: SvgNode, is_root: bool = False) -> str:
    name = _svg_output_name(node)
    attrs = ""
    if is_root:
        attrs += f' xmlns:svg="{SVG_NS}" xmlns:xlink="{XLINK_NS}"'
    attrs += "".join(f' {n}="{_escape_attr(v)}"' for n, v in node.attributes.items())
    if not node.children and not (node.text and node.text.strip()):
        return f"<{name}{attrs}/>"
    inner = _escape_text(node.text) if node.text else ""
    for child in node.children:
        inner += _inline_svg(child)
        if child.tail:
            inner += _escape_text(child.tail)
    return f"<{name}{attrs}>{inner}</{name}>"


def emit_xhtml_passthrough(doc: SvgDocument, options: Optional[ConvertOptions] = None) -> str:
    """Serialize the parsed SVG unchanged inside an XHTML host document."""
    options = options or ConvertOptions()
    title = options.title or "SVG Document"
    svg_lines: list[str] = []
    _serialize_svg(doc.root, svg_lines, 2 if options.pretty else 0, options.pretty, True)
    svg_text = "\n".join(svg_lines) if options.pretty else "".join(svg_lines)

    head_pad = _INDENT if options.pretty else ""
    newline = "\n" if options.pretty else ""
    return (
        '<?xml version="1.0" encoding="UTF-8"?>\n'
        f'<html xmlns="http://www.w3.org/1999/xhtml">{newline}'
        f"{head_pad}<head>{newline}"
        f'{head_pad}{head_pad}<meta http-equiv="Content-Type" content="text/html; charset=utf-8"/>{newline}'
        f"{head_pad}{head_pad}<title>{_escape_text(title)}</title>{newline}"
        f"{head_pad}</head>{newline}"
        f"{head_pad}<body>{newline}"
        f"{svg_text}{newline}"
        f"{head_pad}</body>{newline}"
        f"</html>\n"
    )
