# Standard library
import xml.etree.ElementTree as ET
from fractions import Fraction

# Local
from convexcond.formula.helpers import extension
from convexcond.planar.hull import convex_hull
from convexcond.planar.primitives import PlaneModel
from convexcond.settings import settings


SVG_NAMESPACE = "http://www.w3.org/2000/svg"


def _number(value) -> str:
    text = f"{float(value):.4f}".rstrip("0").rstrip(".")
    return "0" if text in ("", "-0") else text


def _bounding_box(model: PlaneModel):
    if not model.points:
        return Fraction(0), Fraction(0), Fraction(1), Fraction(1)

    xs = [point.x for point in model.points]
    ys = [point.y for point in model.points]

    return min(xs), min(ys), max(xs), max(ys)


def render_svg(
    model: PlaneModel,
    highlight=None,
    size: int = None,
    margin: Fraction = None,
) -> str:
    """
    A standalone SVG picture of the points with their ids, the convex
    hull of the points satisfying `highlight` shaded. The y axis points
    up.
    """

    size = size or settings["svg_size"]
    margin = margin if margin is not None else settings["svg_margin"]

    min_x, min_y, max_x, max_y = _bounding_box(model)
    span = max(max_x - min_x, max_y - min_y) or Fraction(1)
    pad = span * margin

    root = ET.Element(
        "svg",
        xmlns=SVG_NAMESPACE,
        version="1.1",
        width=f"{size}px",
        height=f"{size}px",
        viewBox=" ".join(
            _number(value)
            for value in (
                min_x - pad,
                -max_y - pad,
                max_x - min_x + 2 * pad,
                max_y - min_y + 2 * pad,
            )
        ),
    )

    if highlight is not None:
        formula = getattr(highlight, "formula", highlight)
        mask = extension(formula, model.worlds, model.valuation)
        vertices = convex_hull(model.points_of(mask))

        if len(vertices) > 1:
            ET.SubElement(
                root,
                "polygon",
                points=" ".join(
                    f"{_number(vertex.x)},{_number(-vertex.y)}"
                    for vertex in vertices
                ),
                fill="#cccccc",
                stroke="#888888",
                **{"stroke-width": _number(span / 200)},
            )

    labels = ET.SubElement(
        root,
        "g",
        **{"font-family": "sans-serif", "font-size": _number(span / 20)},
    )

    for point_id, point in zip(model.worlds, model.points):
        ET.SubElement(
            root,
            "circle",
            cx=_number(point.x),
            cy=_number(-point.y),
            r=_number(span / 80),
            fill="#000000",
        )
        label = ET.SubElement(
            labels,
            "text",
            x=_number(point.x + span / 50),
            y=_number(-point.y - span / 50),
        )
        label.text = point_id

    return '<?xml version="1.0" encoding="UTF-8"?>\n' + ET.tostring(
        root, encoding="unicode"
    )


def write_svg(path: str, model: PlaneModel, highlight=None):
    with open(path, "w", encoding="utf-8") as svg_file:
        svg_file.write(render_svg(model, highlight))
