import enum
from typing import Optional, Union

from convexcond.exceptions import BoundExceeded, InputError
from convexcond.formula.helpers import render
from convexcond.planar.primitives import LineModel, PlaneModel
from convexcond.semantics import AbstractModel
from convexcond.settings import settings


class ModelClassKind(enum.Enum):
    ALL = "all"
    LINE = "line"
    CHAIN = "chain"
    POSET = "poset"


BOUND_SETTINGS = {
    ModelClassKind.ALL: "enumeration_bound",
    ModelClassKind.LINE: "line_bound",
    ModelClassKind.CHAIN: "chain_bound",
    ModelClassKind.POSET: "poset_bound",
}

DEFAULT_BOUNDS = {
    ModelClassKind.ALL: 4,
    ModelClassKind.LINE: 6,
    ModelClassKind.CHAIN: 4,
    ModelClassKind.POSET: 4,
}


class ModelClass:
    """
    A family of finite models searched up to `bound` worlds (points
    for line models)
    """

    def __init__(self, kind, bound: Optional[int] = None):
        self.kind = ModelClassKind(kind)
        self.bound = bound if bound is not None else DEFAULT_BOUNDS[self.kind]

        limit = settings[BOUND_SETTINGS[self.kind]]

        if self.bound < 1:
            raise InputError(f"Bound must be positive, got {self.bound}")
        if self.bound > limit:
            raise BoundExceeded(self.bound, limit)

    def __repr__(self):
        return f"ModelClass({self.kind.value}, {self.bound})"


class VerdictStatus(enum.Enum):
    VALID = "valid"
    COUNTERMODEL = "countermodel"
    UNKNOWN = "unknown"


Countermodel = Union[AbstractModel, PlaneModel, LineModel]

EXIT_CODES = {
    VerdictStatus.VALID: 0,
    VerdictStatus.COUNTERMODEL: 1,
    VerdictStatus.UNKNOWN: 2,
}


class Verdict:
    """
    Outcome of a validity search. `exhaustive` is set only when a valid
    verdict is a guarantee for all finite models, not just for the
    searched class up to `bound`.
    """

    def __init__(
        self,
        status: VerdictStatus,
        formula,
        model_class: str,
        bound: int,
        exhaustive: bool = False,
        countermodel: Optional[Countermodel] = None,
    ):
        self.status = VerdictStatus(status)
        self.formula = getattr(formula, "formula", formula)
        self.model_class = model_class
        self.bound = bound
        self.exhaustive = exhaustive
        self.countermodel = countermodel

    @property
    def is_valid(self) -> bool:
        return self.status == VerdictStatus.VALID

    @property
    def exit_code(self) -> int:
        return EXIT_CODES[self.status]

    def __repr__(self):
        return (
            f"Verdict({self.status.value}, {render(self.formula)}, "
            f"class={self.model_class}, bound={self.bound}, "
            f"exhaustive={self.exhaustive})"
        )
