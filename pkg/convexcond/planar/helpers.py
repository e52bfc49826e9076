# Standard library
import logging

# Local
from convexcond.exceptions import SizeGuard
from convexcond.formula.helpers import evaluate, extension
from convexcond.formula.primitives import Cond
from convexcond.geometry.helpers import validate
from convexcond.geometry.primitives import ConvexGeometry, bits, submasks
from convexcond.planar.hull import convex_hull, point_in_polygon
from convexcond.planar.primitives import LineModel, PlaneModel
from convexcond.semantics import AbstractModel, Clause, eval_one_step
from convexcond.settings import settings


logger = logging.getLogger(__name__)


def hull_trace(model: PlaneModel, mask: int) -> int:
    """
    The points of the model lying in the convex hull of `mask`
    """

    vertices = convex_hull(model.points_of(mask))
    trace = 0
    for position, point in enumerate(model.points):
        if point_in_polygon(point, vertices):
            trace |= 1 << position

    return trace


def plane_extreme_points(model: PlaneModel, mask: int) -> int:
    extreme = 0
    for position in bits(mask):
        point = model.points[position]
        rest = model.points_of(mask & ~(1 << position))
        if not point_in_polygon(point, convex_hull(rest)):
            extreme |= 1 << position

    return extreme


def plane_geometry(model: PlaneModel, guard: int = None) -> ConvexGeometry:
    """
    All sets of points that are their own hull trace. Exponential in
    the number of points, hence the guard.
    """

    guard = guard if guard is not None else settings["plane_geometry_guard"]

    if model.size > guard:
        raise SizeGuard(model.size, guard)

    logger.debug(f"Materializing the plane geometry of {model.size} points")

    return validate(
        model.worlds,
        [
            mask
            for mask in submasks(model.full)
            if hull_trace(model, mask) == mask
        ],
    )


def eval_plane(model: PlaneModel, formula) -> bool:
    formula = getattr(formula, "formula", formula)

    def conditional(node: Cond) -> bool:
        antecedent = extension(node.antecedent, model.worlds, model.valuation)
        consequent = extension(node.consequent, model.worlds, model.valuation)

        return plane_extreme_points(model, antecedent) & ~consequent == 0

    return evaluate(formula, conditional)


def eval_plane_clause(
    model: PlaneModel, formula, clause: Clause = Clause.EXTREME
) -> bool:
    """
    The extreme-point clause runs on the points directly; the others
    need the materialized geometry
    """

    if Clause(clause) == Clause.EXTREME:
        return eval_plane(model, formula)

    abstract = AbstractModel(plane_geometry(model), model.valuation)

    return eval_one_step(abstract, formula, clause)


def line_extreme_points(mask: int) -> int:
    """
    On a line the extreme points of a set are its leftmost and
    rightmost members
    """

    if not mask:
        return 0

    leftmost = mask & -mask
    rightmost = 1 << (mask.bit_length() - 1)

    return leftmost | rightmost


def eval_line(model: LineModel, formula) -> bool:
    formula = getattr(formula, "formula", formula)
    valuation = model.valuation

    def conditional(node: Cond) -> bool:
        antecedent = extension(node.antecedent, model.ids, valuation)
        consequent = extension(node.consequent, model.ids, valuation)

        return line_extreme_points(antecedent) & ~consequent == 0

    return evaluate(formula, conditional)
