from convexcond.formula.primitives import (  # noqa: F401
    And,
    Bottom,
    Cond,
    Formula,
    Iff,
    Implies,
    Letter,
    Not,
    Or,
    ParsedFormula,
    Top,
)
from convexcond.formula.parsers import parse, parse_one_step  # noqa: F401
from convexcond.formula.helpers import (  # noqa: F401
    conditionals_of,
    extension,
    letters_of,
    render,
    satisfies,
)
