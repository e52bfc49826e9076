# Standard library
import enum
import logging
from typing import Callable, Dict, Mapping

# Local
from convexcond.exceptions import InputError, PreconditionFailed
from convexcond.formula.helpers import evaluate, extension
from convexcond.formula.primitives import Cond, Formula
from convexcond.geometry.helpers import (
    extreme_points,
    feasible_sets,
    hull,
    minimal_elements,
)
from convexcond.geometry.primitives import ConvexGeometry, Poset


logger = logging.getLogger(__name__)


class Clause(enum.Enum):
    GENERAL = "general"
    FEASIBLE = "feasible"
    EXTREME = "extreme"
    CLOSURE = "closure"


class AbstractModel:
    def __init__(self, geometry: ConvexGeometry, valuation: Mapping[str, int]):
        self.geometry = geometry
        self.valuation: Dict[str, int] = dict(valuation)

        for letter, mask in self.valuation.items():
            if mask & ~geometry.full:
                raise InputError(
                    f"Valuation of '{letter}' lies outside the ground set"
                )

    @property
    def worlds(self):
        return self.geometry.worlds

    def extension(self, formula: Formula) -> int:
        return extension(formula, self.geometry.worlds, self.valuation)

    def evaluate(self, formula, clause: Clause = Clause.EXTREME) -> bool:
        return eval_one_step(self, formula, clause)

    def __eq__(self, other):
        return (
            isinstance(other, AbstractModel)
            and self.geometry == other.geometry
            and self.valuation == other.valuation
        )

    def __repr__(self):
        valuation = {
            letter: self.geometry.ids_of(mask)
            for letter, mask in sorted(self.valuation.items())
        }
        return f"AbstractModel({self.geometry!r}, {valuation})"


def _general(geometry: ConvexGeometry, antecedent: int, consequent: int):
    for convex in geometry.convex_sets:
        if antecedent & ~convex == 0:
            continue

        if not any(
            convex & ~larger == 0
            and antecedent & ~larger
            and antecedent & ~(larger | consequent) == 0
            for larger in geometry.convex_sets
        ):
            return False

    return True


def _feasible(geometry: ConvexGeometry, antecedent: int, consequent: int):
    family = feasible_sets(geometry)

    for feasible in family:
        if not feasible & antecedent:
            continue

        if not any(
            smaller & ~feasible == 0
            and smaller & antecedent
            and smaller & antecedent & ~consequent == 0
            for smaller in family
        ):
            return False

    return True


def _extreme(geometry: ConvexGeometry, antecedent: int, consequent: int):
    return extreme_points(geometry, antecedent) & ~consequent == 0


def _closure(geometry: ConvexGeometry, antecedent: int, consequent: int):
    return antecedent & ~hull(geometry, antecedent & consequent) == 0


CLAUSES: Dict[Clause, Callable[[ConvexGeometry, int, int], bool]] = {
    Clause.GENERAL: _general,
    Clause.FEASIBLE: _feasible,
    Clause.EXTREME: _extreme,
    Clause.CLOSURE: _closure,
}


def eval_conditional(
    model: AbstractModel,
    antecedent: Formula,
    consequent: Formula,
    clause: Clause = Clause.EXTREME,
) -> bool:
    return CLAUSES[Clause(clause)](
        model.geometry,
        model.extension(antecedent),
        model.extension(consequent),
    )


def eval_one_step(
    model: AbstractModel, formula, clause: Clause = Clause.EXTREME
) -> bool:
    formula = getattr(formula, "formula", formula)

    def conditional(node: Cond) -> bool:
        return eval_conditional(
            model, node.antecedent, node.consequent, clause
        )

    return evaluate(formula, conditional)


def eval_in_poset(
    poset: Poset, valuation: Mapping[str, int], formula
) -> bool:
    """
    Order semantics: a conditional holds when every minimal world of
    the antecedent satisfies the consequent
    """

    formula = getattr(formula, "formula", formula)

    def conditional(node: Cond) -> bool:
        antecedent = extension(node.antecedent, poset.worlds, valuation)
        consequent = extension(node.consequent, poset.worlds, valuation)

        return minimal_elements(poset, antecedent) & ~consequent == 0

    return evaluate(formula, conditional)


def lle_holds(
    model: AbstractModel,
    antecedent: Formula,
    equivalent: Formula,
    consequent: Formula,
) -> bool:
    """
    Equivalent antecedents give the same conditional
    """

    if model.extension(antecedent) != model.extension(equivalent):
        raise PreconditionFailed(
            "LLE", "antecedents have different extensions"
        )

    return eval_conditional(model, antecedent, consequent) == (
        eval_conditional(model, equivalent, consequent)
    )


def rw_holds(
    model: AbstractModel,
    antecedent: Formula,
    consequent: Formula,
    weaker: Formula,
) -> bool:
    """
    A conditional survives weakening its consequent
    """

    if model.extension(consequent) & ~model.extension(weaker):
        raise PreconditionFailed(
            "RW", "consequent is not contained in the weaker formula"
        )

    return not eval_conditional(
        model, antecedent, consequent
    ) or eval_conditional(model, antecedent, weaker)
