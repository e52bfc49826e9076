from typing import Callable, Dict, Iterable, List, Sequence, Tuple

from convexcond.exceptions import InputError, UnknownLetter
from convexcond.formula.primitives import (
    And,
    Bottom,
    Cond,
    Formula,
    Iff,
    Implies,
    Letter,
    Not,
    Or,
    Top,
)


# Binding strength, loosest first
BOTTOM_TIER = 0
DISJUNCTION = 1
CONJUNCTION = 2
NEGATION = 3
ATOM = 4

SYMBOLS = {
    And: "&",
    Or: "|",
    Implies: "->",
    Iff: "<->",
}


def _strength(formula: Formula) -> int:
    if isinstance(formula, (Cond, Implies, Iff)):
        return BOTTOM_TIER
    if isinstance(formula, Or):
        return DISJUNCTION
    if isinstance(formula, And):
        return CONJUNCTION
    if isinstance(formula, Not):
        return NEGATION

    return ATOM


def _render(formula: Formula, minimum: int) -> str:
    if isinstance(formula, Letter):
        text = formula.name
    elif isinstance(formula, Top):
        text = "T"
    elif isinstance(formula, Bottom):
        text = "F"
    elif isinstance(formula, Not):
        text = "~" + _render(formula.operand, NEGATION)
    elif isinstance(formula, Cond):
        # Compound operands of the bottom tier are always bracketed
        antecedent = _render(formula.antecedent, NEGATION)
        consequent = _render(formula.consequent, NEGATION)
        text = f"{antecedent} ~> {consequent}"
    elif isinstance(formula, (Implies, Iff)):
        left = _render(formula.left, NEGATION)
        right = _render(formula.right, NEGATION)
        text = f"{left} {SYMBOLS[type(formula)]} {right}"
    elif isinstance(formula, (And, Or)):
        # Left associative: only the right operand needs a tighter bind
        strength = _strength(formula)
        left = _render(formula.left, strength)
        right = _render(formula.right, strength + 1)
        text = f"{left} {SYMBOLS[type(formula)]} {right}"
    else:
        raise TypeError(f"Not a formula: {formula!r}")

    if _strength(formula) < minimum:
        return f"({text})"

    return text


def render(formula) -> str:
    """
    ASCII text that parses back to the same tree. Accepts a `Formula`
    or a `ParsedFormula`.
    """

    formula = getattr(formula, "formula", formula)

    return _render(formula, BOTTOM_TIER)


def _walk(formula: Formula) -> Iterable[Formula]:
    yield formula

    if isinstance(formula, Not):
        yield from _walk(formula.operand)
    elif isinstance(formula, Cond):
        yield from _walk(formula.antecedent)
        yield from _walk(formula.consequent)
    elif isinstance(formula, (And, Or, Implies, Iff)):
        yield from _walk(formula.left)
        yield from _walk(formula.right)


def letters_of(formula: Formula) -> Tuple[str, ...]:
    return tuple(
        sorted(
            {node.name for node in _walk(formula) if isinstance(node, Letter)}
        )
    )


def conditionals_of(formula: Formula) -> List[Cond]:
    """
    The outermost `Cond` nodes, left to right
    """

    if isinstance(formula, Cond):
        return [formula]
    if isinstance(formula, Not):
        return conditionals_of(formula.operand)
    if isinstance(formula, (And, Or, Implies, Iff)):
        return conditionals_of(formula.left) + conditionals_of(formula.right)

    return []


def extension(
    formula: Formula, worlds: Sequence, valuation: Dict[str, int]
) -> int:
    """
    The set of worlds where a propositional formula holds, as a bit
    mask over positions in `worlds`
    """

    full = (1 << len(worlds)) - 1

    def _extension(node: Formula) -> int:
        if isinstance(node, Letter):
            if node.name not in valuation:
                raise UnknownLetter(node.name)
            return valuation[node.name] & full
        if isinstance(node, Top):
            return full
        if isinstance(node, Bottom):
            return 0
        if isinstance(node, Not):
            return full & ~_extension(node.operand)
        if isinstance(node, And):
            return _extension(node.left) & _extension(node.right)
        if isinstance(node, Or):
            return _extension(node.left) | _extension(node.right)
        if isinstance(node, Implies):
            return (full & ~_extension(node.left)) | _extension(node.right)
        if isinstance(node, Iff):
            return full & ~(_extension(node.left) ^ _extension(node.right))

        raise InputError(f"{render(node)} is not propositional")

    return _extension(formula)


def satisfies(formula: Formula, true_letters: Iterable[str]) -> bool:
    """
    Truth of a propositional formula under one assignment
    """

    true_letters = set(true_letters)
    valuation = {
        letter: 1 if letter in true_letters else 0
        for letter in letters_of(formula)
    }

    return extension(formula, ["*"], valuation) == 1


def evaluate(formula: Formula, conditional: Callable[[Cond], bool]) -> bool:
    """
    Evaluate the Boolean skeleton of a one-step formula, asking
    `conditional` for the truth of each `Cond` node
    """

    if isinstance(formula, Cond):
        return conditional(formula)
    if isinstance(formula, Top):
        return True
    if isinstance(formula, Bottom):
        return False
    if isinstance(formula, Not):
        return not evaluate(formula.operand, conditional)
    if isinstance(formula, And):
        return evaluate(formula.left, conditional) and evaluate(
            formula.right, conditional
        )
    if isinstance(formula, Or):
        return evaluate(formula.left, conditional) or evaluate(
            formula.right, conditional
        )
    if isinstance(formula, Implies):
        return not evaluate(formula.left, conditional) or evaluate(
            formula.right, conditional
        )
    if isinstance(formula, Iff):
        return evaluate(formula.left, conditional) == evaluate(
            formula.right, conditional
        )

    raise InputError(f"Letter '{formula.name}' occurs outside a conditional")
