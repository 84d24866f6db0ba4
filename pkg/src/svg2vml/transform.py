"""Affine transform parsing, matrix algebra and VML simulation strategies.

VML has no general transform attribute, so each element family gets its own
simulation strategy:

* skew-shape      rect/circle/ellipse: a skew child with the sign-negated
                  matrix plus a manual position correction
* skew-path       path: a skew child with the plain matrix; corrections are
                  computed from the root element size
* recalc-points   line/polyline/polygon: every point is recomputed through
                  the transform, no extra markup
* matrix-filter   text/textPath/foreignObject: a style filter carrying the
                  2x2 linear entries plus a position correction
* distribute      g: the group's transform list is prepended to each child's

Matrices are the usual six-value affine form (a, b, c, d, e, f), read as
[[a, c, e], [b, d, f], [0, 0, 1]].  Angles are written in degrees in source
and converted to radians here.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from typing import NamedTuple, Optional

from .diagnostics import Diagnostic, Diagnostics
from .numeric import NUMBER_PATTERN, format_number
from .svg_dom import Point


class TransformMatrix(NamedTuple):
    a: float
    b: float
    c: float
    d: float
    e: float
    f: float


IDENTITY = TransformMatrix(1.0, 0.0, 0.0, 1.0, 0.0, 0.0)


@dataclass(frozen=True)
class TransformOp:
    """One parsed transform definition with defaults already applied."""

    name: str  # matrix | translate | scale | rotate | skewX | skewY
    args: tuple[float, ...]


def translate(tx: float, ty: float = 0.0) -> TransformOp:
    return TransformOp("translate", (float(tx), float(ty)))


def scale(sx: float, sy: Optional[float] = None) -> TransformOp:
    return TransformOp("scale", (float(sx), float(sx if sy is None else sy)))


def rotate(angle: float, cx: Optional[float] = None, cy: Optional[float] = None) -> TransformOp:
    if cx is None and cy is None:
        return TransformOp("rotate", (float(angle),))
    return TransformOp("rotate", (float(angle), float(cx or 0.0), float(cy or 0.0)))


def skew_x(angle: float) -> TransformOp:
    return TransformOp("skewX", (float(angle),))


def skew_y(angle: float) -> TransformOp:
    return TransformOp("skewY", (float(angle),))


def matrix(a: float, b: float, c: float, d: float, e: float, f: float) -> TransformOp:
    return TransformOp("matrix", (float(a), float(b), float(c), float(d), float(e), float(f)))


# Accepted argument counts, before defaults are applied.
_ARG_COUNTS = {
    "matrix": (6,),
    "translate": (1, 2),
    "scale": (1, 2),
    "rotate": (1, 3),
    "skewX": (1,),
    "skewY": (1,),
}

_FUNCTION_RE = re.compile(r"([A-Za-z]+)\s*\(([^)]*)\)")
_ARG_SPLIT_RE = re.compile(r"[\s,]+")
_NUMBER_RE = re.compile(NUMBER_PATTERN + r"\Z")


def parse_transform_list(
    value: str,
    diagnostics: Optional[Diagnostics] = None,
    location: str = "",
) -> list[TransformOp]:
    """Parse a transform attribute into ops, filling in default arguments."""
    diagnostics = diagnostics if diagnostics is not None else Diagnostics()
    ops: list[TransformOp] = []
    position = 0
    for found in _FUNCTION_RE.finditer(value):
        gap = value[position : found.start()]
        if gap.strip(" \t\r\n,"):
            diagnostics.error("BAD_TRANSFORM", f"unparseable transform text {gap.strip()!r}", location)
            return []
        position = found.end()
        name, raw_args = found.group(1), found.group(2)
        if name not in _ARG_COUNTS:
            diagnostics.error("BAD_TRANSFORM", f"unknown transform function {name!r}", location)
            return []
        tokens = [t for t in _ARG_SPLIT_RE.split(raw_args.strip()) if t]
        if len(tokens) not in _ARG_COUNTS[name]:
            diagnostics.error(
                "BAD_TRANSFORM", f"{name}() takes {_ARG_COUNTS[name]} arguments, got {len(tokens)}", location
            )
            return []
        if not all(_NUMBER_RE.match(token) for token in tokens):
            diagnostics.error("BAD_TRANSFORM", f"non-numeric argument in {name}({raw_args})", location)
            return []
        args = [float(token) for token in tokens]
        if name == "translate":
            ops.append(translate(*args))
        elif name == "scale":
            ops.append(scale(*args))
        elif name == "rotate":
            ops.append(rotate(*args))
        elif name == "skewX":
            ops.append(skew_x(args[0]))
        elif name == "skewY":
            ops.append(skew_y(args[0]))
        else:
            ops.append(matrix(*args))
    if value[position:].strip(" \t\r\n,"):
        diagnostics.error(
            "BAD_TRANSFORM", f"trailing transform text {value[position:].strip()!r}", location
        )
        return []
    return ops


def multiply(m: TransformMatrix, n: TransformMatrix) -> TransformMatrix:
    """Product m . n of two affine matrices (n applies first to points)."""
    return TransformMatrix(
        a=m.a * n.a + m.c * n.b,
        b=m.b * n.a + m.d * n.b,
        c=m.a * n.c + m.c * n.d,
        d=m.b * n.c + m.d * n.d,
        e=m.a * n.e + m.c * n.f + m.e,
        f=m.b * n.e + m.d * n.f + m.f,
    )


def _is_tangent_pole(angle_deg: float) -> bool:
    return math.isclose(math.fmod(abs(angle_deg), 180.0), 90.0, abs_tol=1e-12)


def op_to_matrix(
    op: TransformOp,
    diagnostics: Optional[Diagnostics] = None,
    location: str = "",
) -> TransformMatrix:
    """Equivalent matrix of a single transform definition.

    Skews at 90 + k*180 degrees hit the tangent pole; they record a
    SINGULAR_SKEW error and fall back to the identity.
    """
    diagnostics = diagnostics if diagnostics is not None else Diagnostics()
    name, args = op.name, op.args
    if name == "matrix":
        return TransformMatrix(*args)
    if name == "translate":
        return TransformMatrix(1.0, 0.0, 0.0, 1.0, args[0], args[1])
    if name == "scale":
        return TransformMatrix(args[0], 0.0, 0.0, args[1], 0.0, 0.0)
    if name == "rotate":
        radians = math.radians(args[0])
        rotation = TransformMatrix(
            math.cos(radians), math.sin(radians), -math.sin(radians), math.cos(radians), 0.0, 0.0
        )
        if len(args) == 1:
            return rotation
        cx, cy = args[1], args[2]
        shifted = multiply(TransformMatrix(1, 0, 0, 1, cx, cy), rotation)
        return multiply(shifted, TransformMatrix(1, 0, 0, 1, -cx, -cy))
    if name in ("skewX", "skewY"):
        if _is_tangent_pole(args[0]):
            diagnostics.error(
                "SINGULAR_SKEW", f"{name}({format_number(args[0])}) is undefined (tangent pole)", location
            )
            return IDENTITY
        t = math.tan(math.radians(args[0]))
        if name == "skewX":
            return TransformMatrix(1.0, 0.0, t, 1.0, 0.0, 0.0)
        return TransformMatrix(1.0, t, 0.0, 1.0, 0.0, 0.0)
    raise ValueError(f"unknown transform op {name!r}")


def compose_ctm(
    ops: list[TransformOp],
    diagnostics: Optional[Diagnostics] = None,
    location: str = "",
) -> TransformMatrix:
    """Left-to-right product of a transform list; empty list is identity."""
    result = IDENTITY
    for op in ops:
        result = multiply(result, op_to_matrix(op, diagnostics, location))
    return result


def apply_to_point(m: TransformMatrix, point: Point) -> Point:
    return Point(m.a * point.x + m.c * point.y + m.e, m.b * point.x + m.d * point.y + m.f)


def recalc_points(m: TransformMatrix, points: list[Point]) -> list[Point]:
    """Apply the matrix to every point, preserving order."""
    return [apply_to_point(m, point) for point in points]


# --- strategy selection -----------------------------------------------------

SKEW_SHAPE = "skew-shape"
SKEW_PATH = "skew-path"
RECALC_POINTS = "recalc-points"
MATRIX_FILTER = "matrix-filter"
DISTRIBUTE = "distribute"

STRATEGY_BY_TAG = {
    "rect": SKEW_SHAPE,
    "circle": SKEW_SHAPE,
    "ellipse": SKEW_SHAPE,
    "path": SKEW_PATH,
    "line": RECALC_POINTS,
    "polyline": RECALC_POINTS,
    "polygon": RECALC_POINTS,
    "text": MATRIX_FILTER,
    "textPath": MATRIX_FILTER,
    "foreignObject": MATRIX_FILTER,
    "g": DISTRIBUTE,
}

# Transform kinds usable in multi-op lists, per strategy.  Point
# recalculation handles anything; the manual offset corrections of the other
# strategies are only worked out for these combinations.
_MULTI_OP_SUPPORT = {
    SKEW_SHAPE: {"scale", "translate", "skewX", "skewY"},
    SKEW_PATH: {"scale", "translate"},
    MATRIX_FILTER: {"scale", "skewX", "skewY"},
}


def check_support(strategy: str, ops: list[TransformOp]) -> Optional[Diagnostic]:
    """Return an UNSUPPORTED_TRANSFORM diagnostic, or None when supported.

    Single transforms are supported by every strategy; multi-transform lists
    are restricted per strategy (distribute defers to the children).
    """
    if len(ops) <= 1:
        return None
    if strategy in (RECALC_POINTS, DISTRIBUTE):
        return None
    allowed = _MULTI_OP_SUPPORT.get(strategy)
    if allowed is None:
        return None
    offending = sorted({op.name for op in ops} - allowed)
    if not offending:
        return None
    return Diagnostic(
        "error",
        "UNSUPPORTED_TRANSFORM",
        f"multi-transform with {', '.join(offending)} is not supported for {strategy}",
    )


# --- offset corrections -----------------------------------------------------


class Offset(NamedTuple):
    dx: float
    dy: float


class ShapeBox(NamedTuple):
    """Untransformed element geometry consumed by the offset rules."""

    x: float
    y: float
    width: float
    height: float


class RootSize(NamedTuple):
    width: float
    height: float


def offset_for_linear_shape(m: TransformMatrix, box: ShapeBox) -> Offset:
    """Position correction for a skewed/filtered box, from the linear part.

    Specializes to (sx*w, sy*h) for scale, (tan*y + w, h) for skewX,
    (w, tan*x + h) for skewY and (w, h) for the identity.  Rotation does not
    follow this rule and is handled separately.
    """
    return Offset(m.a * box.width + m.c * box.y, m.b * box.x + m.d * box.height)


def offset_for_linear_path(m: TransformMatrix, root: RootSize) -> Offset:
    """Position correction for a skewed path, from the root element size."""
    return Offset(
        m.a * root.width + m.c * root.height - root.width,
        m.b * root.width + m.d * root.height - root.height,
    )


def _rotate_offset(angle_deg: float, box: ShapeBox, cx: float = 0.0, cy: float = 0.0) -> Offset:
    radians = math.radians(angle_deg)
    cos_a, sin_a = math.cos(radians), math.sin(radians)
    return Offset(
        cos_a * (box.x - cx) - sin_a * (box.y - cy) - box.width + cx,
        sin_a * (box.x - cx) + cos_a * (box.y - cy) - box.height + cy,
    )


def compute_offset(
    op: TransformOp,
    box: ShapeBox,
    root: RootSize,
    strategy: str,
    diagnostics: Optional[Diagnostics] = None,
    location: str = "",
) -> Offset:
    """Manual position correction for a single transform.

    VML's skew element and the matrix filter transform a shape in place; the
    coordinate shift a transform implies has to be applied by hand.  These
    rules were established experimentally against IE rendering, they are not
    derivable from the matrices alone.  Translation needs no correction: its
    shift goes straight into the output coordinates.
    """
    diagnostics = diagnostics if diagnostics is not None else Diagnostics()
    if strategy == SKEW_PATH:
        if op.name == "matrix":
            diagnostics.error(
                "UNSUPPORTED_TRANSFORM", "matrix() has no offset rule for skew-path", location
            )
            return Offset(0.0, 0.0)
        if op.name == "translate":
            return Offset(0.0, 0.0)
        return offset_for_linear_path(op_to_matrix(op, diagnostics, location), root)

    if strategy in (SKEW_SHAPE, MATRIX_FILTER):
        if op.name == "translate":
            return Offset(0.0, 0.0)
        if op.name == "rotate":
            angle = op.args[0]
            if len(op.args) == 3:
                return _rotate_offset(angle, box, op.args[1], op.args[2])
            return _rotate_offset(angle, box)
        if op.name in ("scale", "skewX", "skewY"):
            return offset_for_linear_shape(op_to_matrix(op, diagnostics, location), box)
        diagnostics.error(
            "UNSUPPORTED_TRANSFORM", f"{op.name}() has no offset rule for {strategy}", location
        )
        return Offset(0.0, 0.0)

    diagnostics.error(
        "UNSUPPORTED_TRANSFORM", f"strategy {strategy} does not use offsets", location
    )
    return Offset(0.0, 0.0)


# --- VML carrier strings ----------------------------------------------------


def skew_matrix_for_shape(m: TransformMatrix, precision: int = 6) -> str:
    """Skew matrix string for shapes: sign-negated linear part.

    The last two slots are perspective terms, not pixel offsets; they stay
    zero and translation is carried by the output coordinates instead.
    """
    values = (-m.a, -m.b, -m.c, -m.d, 0.0, 0.0)
    return ", ".join(format_number(value, precision) for value in values)


def skew_matrix_for_path(m: TransformMatrix, precision: int = 6) -> str:
    """Skew matrix string for paths: plain linear part, row-major order."""
    values = (m.a, m.c, m.b, m.d, 0.0, 0.0)
    return ", ".join(format_number(value, precision) for value in values)


class MatrixFilterParams(NamedTuple):
    m11: float
    m12: float
    m21: float
    m22: float


def matrix_filter_params(m: TransformMatrix) -> MatrixFilterParams:
    """Linear entries in matrix-filter order (row-major)."""
    return MatrixFilterParams(m.a, m.c, m.b, m.d)
