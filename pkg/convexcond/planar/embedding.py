# Standard library
import logging
import math
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

# Local
from convexcond.decomposition import LinearOrder, check_chain, decompose
from convexcond.exceptions import (
    EmptySetRequired,
    InputError,
    InternalError,
    VerdictFailed,
)
from convexcond.geometry.primitives import ConvexGeometry, submasks
from convexcond.morphism import PointMap, preimage, universal_image
from convexcond.planar.helpers import hull_trace
from convexcond.planar.hull import point_in_hull
from convexcond.planar.primitives import ORIGIN, Embedding, PlaneModel, Point
from convexcond.settings import settings


logger = logging.getLogger(__name__)


def safety_margin(size: int, cosine: Fraction) -> Fraction:
    """
    Distance from the origin to the innermost point of every ray, for
    `size` worlds and largest pairwise direction dot product `cosine`
    """

    cosine = Fraction(cosine)

    return size * max(Fraction(0), cosine) / (1 - cosine)


def max_cosine(directions: Sequence[Point]) -> Fraction:
    return max(
        first.dot(second)
        for i, first in enumerate(directions)
        for j, second in enumerate(directions)
        if i != j
    )


def _unit_vector(tangent: Fraction) -> Point:
    # Rational point of the unit circle at twice the angle of `tangent`
    denominator = 1 + tangent * tangent

    return Point(
        (1 - tangent * tangent) / denominator, 2 * tangent / denominator
    )


def _directions(count: int, precision: int) -> List[Point]:
    directions = []
    for index in range(1, count + 1):
        if index == count:
            directions.append(Point(1, 0))
        elif 2 * index == count:
            directions.append(Point(-1, 0))
        else:
            half_angle = math.pi * index / count
            tangent = Fraction(math.tan(half_angle)).limit_denominator(
                precision
            )
            directions.append(_unit_vector(tangent))

    return directions


def _directions_ok(directions: List[Point]) -> bool:
    return len(set(directions)) == len(directions) and point_in_hull(
        ORIGIN, directions
    )


def choose_directions(
    count: int, precision: int = None, retries: int = None
) -> List[Point]:
    """
    `count` exact rational unit vectors close to the angles 2πj/count,
    j = 1..count
    """

    if count < 2:
        raise InternalError(f"Need at least two directions, got {count}")

    precision = precision or settings["direction_precision"]
    retries = retries if retries is not None else settings["direction_retries"]

    for _ in range(retries + 1):
        directions = _directions(count, precision)

        if _directions_ok(directions):
            return directions

        logger.info(
            f"Directions for {count} rays at precision {precision} "
            "are degenerate, doubling the precision"
        )
        precision *= 2

    raise InternalError(f"No usable directions for {count} rays")


def check_embedding_invariants(embedding: Embedding, size: int):
    directions = embedding.directions

    for direction in directions:
        if direction.dot(direction) != 1:
            raise InternalError(f"Direction {direction} is not a unit vector")

    if not _directions_ok(directions):
        raise InternalError("Directions do not surround the origin")

    if embedding.safety < 0 or embedding.safety < safety_margin(
        size, max_cosine(directions)
    ):
        raise InternalError(f"Safety margin {embedding.safety} is too small")

    for i, first in enumerate(directions):
        for j, second in enumerate(directions):
            cosine = first.dot(second)
            if i != j and cosine > 0:
                if (embedding.safety + size) * cosine > embedding.safety:
                    raise InternalError(
                        f"Rays {i + 1} and {j + 1} are too close together"
                    )


def find_embedding_failure(
    geometry: ConvexGeometry, plane: PlaneModel, owner: PointMap
) -> Optional[VerdictFailed]:
    """
    `owner` is a strong morphism from the points onto `geometry`
    exactly when, for every world set Y, the universal image of the
    hull trace of its preimage is convex, and equals Y when Y is convex
    """

    for mask in submasks(geometry.full):
        trace = hull_trace(plane, preimage(owner, mask))
        image = universal_image(owner, trace)

        if image not in geometry:
            return VerdictFailed(
                mask,
                f"Image {geometry.format(image)} of the hull of the points "
                f"of {geometry.format(mask)} is not convex",
            )

        if mask in geometry and image != mask:
            return VerdictFailed(
                mask,
                f"Convex set {geometry.format(mask)} is not realized "
                f"by the points, got {geometry.format(image)}",
            )

    return None


def verify_embedding(
    geometry: ConvexGeometry, plane: PlaneModel, owner: PointMap
) -> bool:
    failure = find_embedding_failure(geometry, plane, owner)

    if failure:
        raise failure

    return True


def place_points(
    geometry: ConvexGeometry,
    chains: Sequence[LinearOrder],
    precision: int,
) -> Tuple[PlaneModel, Embedding, PointMap]:
    size = geometry.size
    directions = choose_directions(len(chains), precision)

    # The top of each chain has rank 1
    ranks = [
        {world: size - index for index, world in enumerate(chain)}
        for chain in chains
    ]
    embedding = Embedding(
        chains,
        directions,
        safety_margin(size, max_cosine(directions)),
        ranks,
    )
    check_embedding_invariants(embedding, size)

    points = []
    mapping = {}
    for ray in range(1, len(chains) + 1):
        for world in geometry.worlds:
            point_id = f"{world}@{ray}"
            points.append((point_id, embedding.point_for(world, ray)))
            mapping[point_id] = world

    plane = PlaneModel(points)
    owner = PointMap(plane.worlds, geometry.worlds, mapping)

    return plane, embedding, owner


def embed(
    geometry: ConvexGeometry,
    chains: Sequence[Sequence[str]] = None,
    precision: int = None,
    retries: int = None,
) -> Tuple[PlaneModel, Embedding, PointMap]:
    """
    Realize a finite convex geometry by points of the plane: one ray per
    linear order, the owner map sending each point to its world
    """

    if not geometry.has_empty_set:
        raise EmptySetRequired()

    if chains is None:
        chains = decompose(geometry)
    chains = [check_chain(geometry, chain) for chain in chains]

    if geometry.size and not chains:
        raise InputError("At least one linear order is needed")

    if not geometry.size:
        plane = PlaneModel([])
        owner = PointMap([], geometry.worlds, {})
        return plane, Embedding([], [], Fraction(0), []), owner

    if len(chains) == 1:
        chains = chains * 2

    precision = precision or settings["direction_precision"]
    retries = retries if retries is not None else settings["embedding_retries"]

    for attempt in range(retries + 1):
        plane, embedding, owner = place_points(geometry, chains, precision)
        failure = find_embedding_failure(geometry, plane, owner)

        if not failure:
            logger.debug(
                f"Embedded {geometry.size} worlds on {len(chains)} rays "
                f"with safety margin {embedding.safety}"
            )
            return plane, embedding, owner

        logger.warning(
            f"Embedding attempt {attempt + 1} failed ({failure.reason}), "
            "retrying at a higher direction precision"
        )
        precision *= 2

    raise failure
