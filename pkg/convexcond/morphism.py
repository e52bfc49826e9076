# Standard library
import logging
from typing import Dict, List, Mapping, Optional, Sequence, Tuple

# Local
from convexcond.exceptions import (
    GroundSetMismatch,
    InputError,
    PreconditionFailed,
)
from convexcond.formula.helpers import render
from convexcond.geometry.helpers import (
    feasible_sets,
    impossible_worlds,
    relative_convexity,
    restrict_mask,
)
from convexcond.geometry.primitives import (
    ConvexGeometry,
    Poset,
    Worlds,
    bits,
)
from convexcond.semantics import AbstractModel


logger = logging.getLogger(__name__)


class PointMap:
    """
    A total function between two ground sets
    """

    def __init__(
        self,
        source: Sequence[str],
        target: Sequence[str],
        mapping: Mapping[str, str],
    ):
        self.source = Worlds(source)
        self.target = Worlds(target)

        missing = [
            world for world in self.source.worlds if world not in mapping
        ]
        if missing:
            raise InputError(f"Map is undefined on {missing}")

        self.mapping: Dict[str, str] = {
            world: mapping[world] for world in self.source.worlds
        }
        self.images: Tuple[int, ...] = tuple(
            self.target.position(self.mapping[world])
            for world in self.source.worlds
        )

        # Bit u holds the preimage of target position u
        fibres = [0] * self.target.size
        for position, image in enumerate(self.images):
            fibres[image] |= 1 << position
        self.fibres: Tuple[int, ...] = tuple(fibres)

    def __call__(self, world: str) -> str:
        return self.mapping[world]

    def __eq__(self, other):
        return (
            isinstance(other, PointMap)
            and self.source.worlds == other.source.worlds
            and self.target.worlds == other.target.worlds
            and self.mapping == other.mapping
        )

    def __repr__(self):
        return f"PointMap({self.mapping})"


class MorphismVerdict:
    def __init__(
        self,
        is_morphism: bool,
        is_strong: Optional[bool] = None,
        witness: Optional[int] = None,
        reason: str = "",
    ):
        self.is_morphism = is_morphism
        self.is_strong = is_strong
        self.witness = witness
        self.reason = reason

    @property
    def holds(self) -> bool:
        return self.is_morphism and self.is_strong is not False

    def __repr__(self):
        return (
            f"MorphismVerdict(is_morphism={self.is_morphism}, "
            f"is_strong={self.is_strong}, witness={self.witness})"
        )


def identity(worlds: Sequence[str]) -> PointMap:
    return PointMap(worlds, worlds, {world: world for world in worlds})


def compose(first: PointMap, second: PointMap) -> PointMap:
    """
    `second` after `first`
    """

    if first.target.worlds != second.source.worlds:
        raise GroundSetMismatch(second.source.worlds, first.target.worlds)

    return PointMap(
        first.source.worlds,
        second.target.worlds,
        {world: second(first(world)) for world in first.source.worlds},
    )


def preimage(pointmap: PointMap, mask: int) -> int:
    result = 0
    for position in bits(mask):
        result |= pointmap.fibres[position]

    return result


def universal_image(pointmap: PointMap, mask: int) -> int:
    result = 0
    for position, fibre in enumerate(pointmap.fibres):
        if fibre & ~mask == 0:
            result |= 1 << position

    return result


def existential_image(pointmap: PointMap, mask: int) -> int:
    result = 0
    for position, fibre in enumerate(pointmap.fibres):
        if fibre & mask:
            result |= 1 << position

    return result


def _check_ground_sets(pointmap: PointMap, source, target):
    if source.worlds != pointmap.source.worlds:
        raise GroundSetMismatch(pointmap.source.worlds, source.worlds)
    if target.worlds != pointmap.target.worlds:
        raise GroundSetMismatch(pointmap.target.worlds, target.worlds)


def check_morphism(
    pointmap: PointMap,
    source: ConvexGeometry,
    target: ConvexGeometry,
    strong: bool = False,
) -> MorphismVerdict:
    """
    Universal images of convex sets must be convex; a strong morphism
    reaches every convex set of the target that way
    """

    _check_ground_sets(pointmap, source, target)

    images = set()
    for convex in source.convex_sets:
        image = universal_image(pointmap, convex)
        if image not in target:
            return MorphismVerdict(
                False,
                False if strong else None,
                convex,
                f"Image of {source.format(convex)} is not convex",
            )
        images.add(image)

    if not strong:
        return MorphismVerdict(True)

    for convex in target.convex_sets:
        if convex not in images:
            return MorphismVerdict(
                True,
                False,
                convex,
                f"{target.format(convex)} is no image of a convex set",
            )

    return MorphismVerdict(True, True)


def check_feasible_morphism(
    pointmap: PointMap,
    source: ConvexGeometry,
    target: ConvexGeometry,
    strong: bool = False,
) -> MorphismVerdict:
    """
    The same test phrased on feasible sets and existential images
    """

    _check_ground_sets(pointmap, source, target)

    target_feasible = set(feasible_sets(target))
    images = set()

    for feasible in feasible_sets(source):
        image = existential_image(pointmap, feasible)
        if image not in target_feasible:
            return MorphismVerdict(
                False,
                False if strong else None,
                source.full & ~feasible,
                f"Image of {source.format(feasible)} is not feasible",
            )
        images.add(image)

    if not strong:
        return MorphismVerdict(True)

    for feasible in sorted(target_feasible):
        if feasible not in images:
            return MorphismVerdict(
                True,
                False,
                target.full & ~feasible,
                f"{target.format(feasible)} is no image of a feasible set",
            )

    return MorphismVerdict(True, True)


def poset_back_condition(
    pointmap: PointMap, source: Poset, target: Poset, strong: bool = False
) -> MorphismVerdict:
    """
    Order form of the morphism test between up-set convexities: below
    f(w) everything is hit from below w. The strong form adds that each
    u is hit by some w whose down-set lands below u.
    """

    _check_ground_sets(pointmap, source, target)

    for position, image in enumerate(pointmap.images):
        reached = 0
        for lower in bits(source.below[position]):
            reached |= 1 << pointmap.images[lower]

        if target.below[image] & ~reached:
            return MorphismVerdict(
                False,
                False if strong else None,
                1 << position,
                f"Back condition fails at {source.worlds[position]}",
            )

    if not strong:
        return MorphismVerdict(True)

    for image, fibre in enumerate(pointmap.fibres):
        if not any(
            all(
                target.below[image] >> pointmap.images[lower] & 1
                for lower in bits(source.below[position])
            )
            for position in bits(fibre)
        ):
            return MorphismVerdict(
                True,
                False,
                1 << image,
                f"No preimage of {target.worlds[image]} has its down-set "
                "below it",
            )

    return MorphismVerdict(True, True)


def pull_back_valuation(
    pointmap: PointMap, valuation: Mapping[str, int]
) -> Dict[str, int]:
    return {
        letter: preimage(pointmap, mask) for letter, mask in valuation.items()
    }


def eliminate_impossible(
    model: AbstractModel,
) -> Tuple[AbstractModel, PointMap]:
    """
    Drop the worlds inside every convex set. The inclusion of what is
    left is a strong morphism into the original geometry.
    """

    geometry = model.geometry
    impossible = impossible_worlds(geometry)
    possible = geometry.full & ~impossible

    if not impossible:
        return model, identity(geometry.worlds)

    if not possible:
        logger.warning("Every world is impossible, the result is empty")
    else:
        logger.info(
            f"Eliminating impossible worlds {geometry.format(impossible)}"
        )

    restricted = AbstractModel(
        relative_convexity(geometry, possible),
        {
            letter: restrict_mask(mask, possible)
            for letter, mask in model.valuation.items()
        },
    )
    inclusion = PointMap(
        restricted.worlds,
        geometry.worlds,
        {world: world for world in restricted.worlds},
    )

    return restricted, inclusion


class TruthReport:
    def __init__(self, rows: List[Tuple[str, bool, bool]]):
        self.rows = rows

    @property
    def discrepancies(self) -> List[Tuple[str, bool, bool]]:
        return [row for row in self.rows if row[1] != row[2]]

    @property
    def agrees(self) -> bool:
        return not self.discrepancies


def check_valuation_law(
    pointmap: PointMap,
    source_valuation: Mapping[str, int],
    target_valuation: Mapping[str, int],
):
    for letter in sorted(set(source_valuation) | set(target_valuation)):
        pulled = preimage(pointmap, target_valuation.get(letter, 0))

        if source_valuation.get(letter, 0) != pulled:
            raise PreconditionFailed(
                "valuation law",
                f"V({letter}) is not the preimage of V'({letter})",
            )


def compare_truth(
    pointmap: PointMap,
    source,
    target,
    formulas,
    check_strong: bool = True,
) -> TruthReport:
    """
    Evaluate each one-step formula on both sides of a strong morphism.
    `source` and `target` are any models with `valuation` and
    `evaluate`; pass check_strong=False when strength is already
    certified elsewhere.
    """

    check_valuation_law(pointmap, source.valuation, target.valuation)

    if check_strong:
        verdict = check_morphism(
            pointmap, source.geometry, target.geometry, strong=True
        )
        if not verdict.holds:
            raise PreconditionFailed("strong morphism", verdict.reason)

    rows = []
    for formula in formulas:
        formula = getattr(formula, "formula", formula)
        rows.append(
            (
                render(formula),
                source.evaluate(formula),
                target.evaluate(formula),
            )
        )

    report = TruthReport(rows)

    for text, before, after in report.discrepancies:
        logger.error(
            f"Truth of {text} differs across a strong morphism: "
            f"{before} vs {after}"
        )

    return report
