# Standard library
import logging
from typing import FrozenSet, Iterator, List, Sequence

# Local
from convexcond.exceptions import BoundExceeded
from convexcond.geometry.primitives import ConvexGeometry
from convexcond.settings import settings


logger = logging.getLogger(__name__)

WORLD_NAMES = "abcdefghijklmnopqrstuvwxyz"


def _has_extension(mask: int, full: int, members: FrozenSet[int]) -> bool:
    outside = full & ~mask
    while outside:
        point = outside & -outside
        if mask | point in members:
            return True
        outside &= outside - 1

    return False


def _families(
    mask: int,
    full: int,
    members: FrozenSet[int],
    required: FrozenSet[int],
    require_empty: bool,
) -> Iterator[FrozenSet[int]]:
    """
    Decide the sets in decreasing mask order, so every superset of
    `mask` is already decided. A set may only join when some one-point
    extension of it is a member; intersections of members are forced in.
    """

    if mask < 0:
        yield members
        return

    forced = mask in required or (mask == 0 and require_empty)
    extendable = _has_extension(mask, full, members)

    if not forced:
        yield from _families(mask - 1, full, members, required, require_empty)

    if extendable:
        yield from _families(
            mask - 1,
            full,
            members | {mask},
            required | {mask & member for member in members},
            require_empty,
        )


def enumerate_geometries(
    size: int,
    require_empty: bool = False,
    worlds: Sequence[str] = None,
    bound: int = None,
) -> Iterator[ConvexGeometry]:
    """
    Every convex geometry on a ground set of `size` worlds, each once.
    Worlds default to "a", "b", ...
    """

    bound = bound if bound is not None else settings["enumeration_bound"]

    if size > bound:
        raise BoundExceeded(size, bound)

    worlds = list(worlds or WORLD_NAMES[:size])
    full = (1 << size) - 1
    count = 0

    for members in _families(
        full - 1, full, frozenset({full}), frozenset(), require_empty
    ):
        count += 1
        yield ConvexGeometry(worlds, members)

    logger.debug(
        f"Enumerated {count} convex geometries on {size} worlds"
        f"{' containing the empty set' if require_empty else ''}"
    )


def count_geometries(size: int, require_empty: bool = False) -> int:
    return sum(1 for _ in enumerate_geometries(size, require_empty))


def geometries_up_to(
    size: int, require_empty: bool = False
) -> List[ConvexGeometry]:
    return [
        geometry
        for n in range(1, size + 1)
        for geometry in enumerate_geometries(n, require_empty)
    ]
