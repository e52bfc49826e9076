from dataclasses import dataclass
from typing import Tuple


class Formula:
    """
    Base of both formula layers. Propositional formulas are trees
    without `Cond` nodes; one-step formulas put every letter beneath
    exactly one `Cond`.
    """

    __slots__ = ()

    def __str__(self):
        # Local import, helpers depends on this module
        from convexcond.formula.helpers import render

        return render(self)


@dataclass(frozen=True)
class Letter(Formula):
    name: str


@dataclass(frozen=True)
class Top(Formula):
    pass


@dataclass(frozen=True)
class Bottom(Formula):
    pass


@dataclass(frozen=True)
class Not(Formula):
    operand: Formula


@dataclass(frozen=True)
class And(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True)
class Or(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True)
class Implies(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True)
class Iff(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True)
class Cond(Formula):
    antecedent: Formula
    consequent: Formula


@dataclass(frozen=True)
class ParsedFormula:
    """
    `level` is 0 for a propositional formula and 1 for a one-step
    formula; `letters` lists the letter names in sorted order
    """

    level: int
    formula: Formula
    letters: Tuple[str, ...]

    @property
    def is_one_step(self) -> bool:
        return self.level == 1

    def __str__(self):
        return str(self.formula)
