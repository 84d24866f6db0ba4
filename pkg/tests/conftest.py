import pytest

from svg2vml.diagnostics import Diagnostics
from svg2vml.mappers import MapperContext, map_document
from svg2vml.options import ConvertOptions
from svg2vml.svg_dom import parse_svg
from svg2vml.transform import RootSize


@pytest.fixture
def diags():
    return Diagnostics()


def wrap_svg(body: str, view_box: str = "0 0 800 800", size: tuple = (800, 800)) -> str:
    return (
        f'<svg xmlns="http://www.w3.org/2000/svg" '
        f'xmlns:xlink="http://www.w3.org/1999/xlink" '
        f'viewBox="{view_box}" width="{size[0]}" height="{size[1]}">{body}</svg>'
    )


def map_snippet(body: str, options: ConvertOptions = None, **wrap_kwargs):
    """Parse and map a fragment; returns (root v:group, diagnostics)."""
    doc = parse_svg(wrap_svg(body, **wrap_kwargs))
    assert doc is not None
    tree, diagnostics = map_document(doc, options or ConvertOptions())
    return tree, diagnostics


def make_context(**overrides) -> MapperContext:
    doc = parse_svg(wrap_svg(""))
    defaults = dict(
        document=doc,
        root_size=RootSize(800.0, 800.0),
        options=ConvertOptions(),
        diagnostics=doc.diagnostics,
    )
    defaults.update(overrides)
    return MapperContext(**defaults)
