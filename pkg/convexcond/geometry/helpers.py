from typing import Iterable, List, Optional, Sequence

from convexcond.exceptions import (
    GeometryViolation,
    GroundSetMismatch,
    InputError,
)
from convexcond.geometry.primitives import (
    ConvexGeometry,
    Poset,
    Worlds,
    bits,
    submasks,
)


def find_violation(
    worlds: Sequence[str], family: Iterable[int]
) -> Optional[GeometryViolation]:
    """
    The first convex geometry clause the family breaks, checked in the
    order full set, intersections, anti-exchange, or None
    """

    ground = Worlds(worlds)
    members = set(family)

    for mask in members:
        if mask & ~ground.full:
            raise InputError(f"Set mask {mask} lies outside the ground set")

    if ground.full not in members:
        return GeometryViolation(
            "full-set",
            (ground.full,),
            f"The full set {ground.format(ground.full)} is not a member",
        )

    ordered = sorted(members)

    for i, first in enumerate(ordered):
        for second in ordered[i + 1 :]:
            if first & second not in members:
                return GeometryViolation(
                    "intersection",
                    (first, second),
                    f"{ground.format(first)} ∩ {ground.format(second)} "
                    "is not a member",
                )

    for convex in ordered:
        outside = list(bits(ground.full & ~convex))
        supersets = [mask for mask in ordered if mask & convex == convex]

        for i, x in enumerate(outside):
            for y in outside[i + 1 :]:
                pair = (1 << x) | (1 << y)
                if not any(
                    bin(mask & pair).count("1") == 1 for mask in supersets
                ):
                    return GeometryViolation(
                        "anti-exchange",
                        (convex, ground.worlds[x], ground.worlds[y]),
                        f"No member above {ground.format(convex)} separates "
                        f"{ground.worlds[x]} and {ground.worlds[y]}",
                    )

    return None


def validate(worlds: Sequence[str], family: Iterable[int]) -> ConvexGeometry:
    family = list(family)
    violation = find_violation(worlds, family)

    if violation:
        raise violation

    return ConvexGeometry(worlds, family)


def discrete_geometry(worlds: Sequence[str]) -> ConvexGeometry:
    full = (1 << len(worlds)) - 1

    return ConvexGeometry(worlds, submasks(full))


def is_convex(geometry: ConvexGeometry, mask: int) -> bool:
    return mask in geometry


def hull(geometry: ConvexGeometry, mask: int) -> int:
    result = geometry.full
    for convex in geometry.convex_sets:
        if convex & mask == mask:
            result &= convex

    return result


def impossible_worlds(geometry: ConvexGeometry) -> int:
    return hull(geometry, 0)


def extreme_points(geometry: ConvexGeometry, mask: int) -> int:
    extreme = 0
    for position in bits(mask):
        point = 1 << position
        if not hull(geometry, mask & ~point) & point:
            extreme |= point

    return extreme


def extreme_points_by_generators(geometry: ConvexGeometry, mask: int) -> int:
    """
    Intersection of every Y ⊆ X whose hull covers X
    """

    result = mask
    for generator in submasks(mask):
        if hull(geometry, generator) & mask == mask:
            result &= generator

    return result


def feasible_sets(geometry: ConvexGeometry) -> List[int]:
    return sorted(geometry.full & ~convex for convex in geometry.convex_sets)


def restrict_mask(mask: int, subset: int) -> int:
    """
    Re-index the part of `mask` inside `subset` onto the positions of
    `subset`
    """

    restricted = 0
    for index, position in enumerate(bits(subset)):
        if mask >> position & 1:
            restricted |= 1 << index

    return restricted


def relative_convexity(geometry: ConvexGeometry, mask: int) -> ConvexGeometry:
    return validate(
        geometry.ids_of(mask),
        {restrict_mask(convex, mask) for convex in geometry.convex_sets},
    )


def upward_closure(poset: Poset, mask: int) -> int:
    closure = 0
    for position in bits(mask):
        closure |= poset.above[position]

    return closure


def minimal_elements(poset: Poset, mask: int) -> int:
    minimal = 0
    for position in bits(mask):
        if poset.below[position] & mask == 1 << position:
            minimal |= 1 << position

    return minimal


def upsets(poset: Poset) -> List[int]:
    # Every up-set is a union of principal up-sets
    family = {0}
    for principal in poset.above:
        family |= {upset | principal for upset in family}

    return sorted(family)


def upset_convexity(poset: Poset) -> ConvexGeometry:
    return validate(poset.worlds, upsets(poset))


def join(first: ConvexGeometry, second: ConvexGeometry) -> ConvexGeometry:
    if first.worlds != second.worlds:
        raise GroundSetMismatch(first.worlds, second.worlds)

    return validate(
        first.worlds,
        {
            convex & other
            for convex in first.convex_sets
            for other in second.convex_sets
        },
    )
