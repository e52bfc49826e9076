from fractions import Fraction
from typing import Iterable, List

from convexcond.planar.primitives import Point


def orientation(origin: Point, first: Point, second: Point) -> Fraction:
    """
    Positive for a left turn origin -> first -> second, zero when the
    three points are collinear
    """

    return (first - origin).cross(second - origin)


def convex_hull(points: Iterable[Point]) -> List[Point]:
    """
    Vertices of the convex hull in counter-clockwise order, collinear
    points dropped. Degenerate hulls come back as one point or the two
    ends of a segment.
    """

    points = sorted(set(points))

    if len(points) <= 2:
        return points

    lower: List[Point] = []
    for point in points:
        while (
            len(lower) > 1
            and orientation(lower[-2], lower[-1], point) <= 0
        ):
            lower.pop()
        lower.append(point)

    upper: List[Point] = []
    for point in reversed(points):
        while (
            len(upper) > 1
            and orientation(upper[-2], upper[-1], point) <= 0
        ):
            upper.pop()
        upper.append(point)

    return lower[:-1] + upper[:-1]


def on_segment(point: Point, start: Point, end: Point) -> bool:
    return (
        orientation(start, end, point) == 0
        and min(start.x, end.x) <= point.x <= max(start.x, end.x)
        and min(start.y, end.y) <= point.y <= max(start.y, end.y)
    )


def point_in_polygon(point: Point, vertices: List[Point]) -> bool:
    """
    `vertices` as returned by `convex_hull`; the boundary counts as
    inside
    """

    if not vertices:
        return False
    if len(vertices) == 1:
        return point == vertices[0]
    if len(vertices) == 2:
        return on_segment(point, vertices[0], vertices[1])

    return all(
        orientation(vertices[i - 1], vertices[i], point) >= 0
        for i in range(len(vertices))
    )


def point_in_hull(point: Point, points: Iterable[Point]) -> bool:
    return point_in_polygon(point, convex_hull(points))
