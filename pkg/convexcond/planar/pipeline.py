# Standard library
import logging
from typing import Dict, List, Sequence, Tuple

# Local
from convexcond.decomposition import LinearOrder
from convexcond.exceptions import InternalError
from convexcond.geometry.helpers import impossible_worlds
from convexcond.morphism import (
    compose,
    compare_truth,
    eliminate_impossible,
    pull_back_valuation,
)
from convexcond.planar.embedding import embed
from convexcond.planar.primitives import Embedding, PlaneModel
from convexcond.semantics import AbstractModel


logger = logging.getLogger(__name__)


class Certificate:
    """
    Record of one run from an abstract model to a plane model, with the
    truth of each requested formula on both sides
    """

    def __init__(
        self,
        model: AbstractModel,
        impossible: List[str],
        embedding: Embedding,
        plane: PlaneModel,
        owner: Dict[str, str],
        truth: List[Tuple[str, bool, bool]],
        verdict: str = "pass",
    ):
        self.model = model
        self.impossible = impossible
        self.embedding = embedding
        self.plane = plane
        self.owner = owner
        self.truth = truth
        self.verdict = verdict

    @property
    def chains(self) -> List[LinearOrder]:
        return self.embedding.chains


def run_pipeline(
    model: AbstractModel,
    formulas: Sequence = (),
    chains: Sequence[Sequence[str]] = None,
    precision: int = None,
) -> Tuple[PlaneModel, Certificate]:
    """
    Drop impossible worlds, split the geometry into linear orders, lay
    the orders out as rays and carry the valuation back to the points.
    Raises InternalError if any formula changes its truth value.
    """

    geometry = model.geometry
    impossible = impossible_worlds(geometry)

    reduced, inclusion = eliminate_impossible(model)

    if chains is not None:
        # Linear orders restrict to linear orders on the possible worlds
        chains = [
            [world for world in chain if world in reduced.worlds]
            for chain in chains
        ]
    logger.info(f"Embedding {reduced.geometry.size} possible worlds")

    skeleton, embedding, owner = embed(
        reduced.geometry, chains, precision=precision
    )

    pointmap = compose(owner, inclusion)
    plane = skeleton.with_valuation(
        pull_back_valuation(pointmap, model.valuation)
    )

    # Strength is certified by the embedding check and the inclusion
    report = compare_truth(
        pointmap, plane, model, formulas, check_strong=False
    )

    if not report.agrees:
        texts = ", ".join(text for text, _, _ in report.discrepancies)
        raise InternalError(f"Truth not preserved for {texts}")

    certificate = Certificate(
        model=model,
        impossible=geometry.ids_of(impossible),
        embedding=embedding,
        plane=plane,
        owner=dict(pointmap.mapping),
        truth=report.rows,
    )

    logger.info(
        f"Placed {plane.size} points, {len(formulas)} formulas agree"
    )

    return plane, certificate
