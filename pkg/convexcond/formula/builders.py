from typing import Dict, List, Mapping

from convexcond.formula.parsers import parse, parse_formula
from convexcond.formula.primitives import (
    And,
    Cond,
    Formula,
    Iff,
    Implies,
    Letter,
    Not,
    Or,
    ParsedFormula,
)


AXIOMS = {
    "Id": "p ~> p",
    "And": "((p ~> q) & (p ~> r)) -> (p ~> (q & r))",
    "CM": "((p ~> q) & (p ~> r)) -> ((p & r) ~> q)",
    "Or": "((p ~> q) & (r ~> q)) -> ((p | r) ~> q)",
}

DERIVED = {
    "WCM": "(p ~> (q & r)) -> ((p & q) ~> r)",
    "S": "((p & q) ~> r) -> (p ~> (~q | r))",
    "CCut": "((p ~> q) & ((p & q) ~> r)) -> (p ~> r)",
    "CCut'": "((p ~> q) & (q ~> r)) -> ((p | q) ~> r)",
    # The rule R with premise (p & q) -> q
    "R": "(r ~> (p & q)) -> ((r & q | p & q) ~> (p & q))",
}

SEPARATING = {
    "choice2": "((p | q) ~> p) | ((p | q) ~> q)",
    "choice3": (
        "((p | q | r) ~> (p | q)) | ((p | q | r) ~> (p | r))"
        " | ((p | q | r) ~> (q | r))"
    ),
    "split2": "((p | q) ~> s) -> ((p ~> s) | (q ~> s))",
    "split3": (
        "((p | q | r) ~> s)"
        " -> (((p | q) ~> s) | ((p | r) ~> s) | ((q | r) ~> s))"
    ),
}

SQUARE_THEORY = {
    "square": (
        "(T ~> p) & (q ~> p) & (~(p <-> q) ~> p) & ~(~q ~> p)"
        " & ~((p <-> q) ~> p) & ~(~p ~> ~q)"
    ),
}

CATALOGUE = {**AXIOMS, **DERIVED, **SEPARATING, **SQUARE_THEORY}

# Replacements for the third letter that keep a schema within p, q
SMALL_SUBSTITUTES = ["q", "p", "~p", "~q", "p & q", "p | q", "p <-> q"]


def get_formula(name: str) -> ParsedFormula:
    return parse(CATALOGUE[name])


def substitute(formula: Formula, mapping: Mapping[str, Formula]) -> Formula:
    if isinstance(formula, Letter):
        return mapping.get(formula.name, formula)
    if isinstance(formula, Not):
        return Not(substitute(formula.operand, mapping))
    if isinstance(formula, Cond):
        return Cond(
            substitute(formula.antecedent, mapping),
            substitute(formula.consequent, mapping),
        )
    if isinstance(formula, (And, Or, Implies, Iff)):
        return type(formula)(
            substitute(formula.left, mapping),
            substitute(formula.right, mapping),
        )

    return formula


def small_instances(name: str) -> List[ParsedFormula]:
    """
    Instances of a catalogue schema over the letters p and q only,
    one for each entry of SMALL_SUBSTITUTES standing in for r
    """

    schema = get_formula(name).formula
    instances: Dict[str, ParsedFormula] = {}

    for text in SMALL_SUBSTITUTES:
        instance = parse_formula(
            substitute(schema, {"r": parse(text).formula})
        )
        instances.setdefault(str(instance), instance)

    return list(instances.values())
