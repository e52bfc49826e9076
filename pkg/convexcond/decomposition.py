# Standard library
import logging
from typing import Iterator, List, Sequence, Set, Tuple

# Local
from convexcond.exceptions import (
    EmptySetRequired,
    InputError,
    InternalError,
)
from convexcond.geometry.helpers import extreme_points, validate
from convexcond.geometry.primitives import ConvexGeometry, Worlds, bits


logger = logging.getLogger(__name__)

# All worlds of a ground set, listed bottom to top
LinearOrder = Tuple[str, ...]


def check_chain(worlds: Worlds, chain: Sequence[str]) -> LinearOrder:
    if sorted(chain) != sorted(worlds.worlds) or len(set(chain)) != len(
        chain
    ):
        raise InputError(
            f"{list(chain)} is not an ordering of {list(worlds.worlds)}"
        )

    return tuple(chain)


def chain_upsets(worlds: Worlds, chain: Sequence[str]) -> List[int]:
    """
    The up-sets of a linear order: the empty set, the top element, the
    top two and so on
    """

    upsets = [0]
    for world in reversed(check_chain(worlds, chain)):
        upsets.append(upsets[-1] | 1 << worlds.position(world))

    return upsets


def chain_geometry(worlds: Worlds, chain: Sequence[str]) -> ConvexGeometry:
    return validate(worlds.worlds, chain_upsets(worlds, chain))


def upward_closure_in(worlds: Worlds, chain: Sequence[str], mask: int) -> int:
    closure = 0
    for world in check_chain(worlds, chain):
        point = 1 << worlds.position(world)
        if closure or mask & point:
            closure |= point

    return closure


def convex_by_chains(
    worlds: Worlds, chains: Sequence[Sequence[str]], mask: int
) -> bool:
    """
    A set is convex in the join of the chains exactly when it is the
    intersection of its up-closures along every chain
    """

    closure = worlds.full
    for chain in chains:
        closure &= upward_closure_in(worlds, chain, mask)

    return closure == mask


def _join_family(family: Set[int], upsets: Sequence[int]) -> Set[int]:
    return {convex & upset for convex in family for upset in upsets}


def join_of_chains(
    worlds: Sequence[str],
    chains: Sequence[Sequence[str]],
    check: bool = True,
) -> ConvexGeometry:
    """
    The join of up-set convexities is always a convex geometry;
    check=False skips validating it
    """

    ground = Worlds(worlds)
    family = {ground.full}

    for chain in chains:
        family = _join_family(family, chain_upsets(ground, chain))

    if not check:
        return ConvexGeometry(ground.worlds, family)

    return validate(ground.worlds, family)


def shelling_orders(geometry: ConvexGeometry) -> Iterator[LinearOrder]:
    """
    Every ordering that repeatedly removes an extreme point of what is
    left, removed first listed first. Candidates are tried in
    ground-set order.
    """

    if not geometry.has_empty_set:
        raise EmptySetRequired()

    removed: List[str] = []

    def _shell(remaining: int) -> Iterator[LinearOrder]:
        if not remaining:
            yield tuple(removed)
            return

        for position in bits(extreme_points(geometry, remaining)):
            removed.append(geometry.worlds[position])
            yield from _shell(remaining & ~(1 << position))
            removed.pop()

    yield from _shell(geometry.full)


def decompose(geometry: ConvexGeometry) -> List[LinearOrder]:
    """
    Linear orders whose up-set convexities join to `geometry`. Shelling
    orders are taken greedily, keeping each one that adds convex sets
    to the join so far.
    """

    if not geometry.has_empty_set:
        raise EmptySetRequired()

    target = set(geometry.convex_sets)
    family = {geometry.full}
    chains: List[LinearOrder] = []

    for order in shelling_orders(geometry):
        joined = _join_family(family, chain_upsets(geometry, order))

        if joined == family:
            continue

        family = joined
        chains.append(order)

        if family == target:
            logger.debug(
                f"Decomposed {len(geometry.worlds)} worlds into "
                f"{len(chains)} chains"
            )
            return chains

        if not family <= target:
            raise InternalError(
                f"Shelling order {order} leaves the geometry"
            )

    if family == target:
        return chains

    raise InternalError("Shelling orders exhausted before the join")
