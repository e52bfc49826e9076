# Packages
from lark import Lark, Transformer
from lark.exceptions import UnexpectedEOF, UnexpectedInput

# Local
from convexcond.exceptions import (
    FormulaSyntaxError,
    InputError,
    MixedLevelError,
    NestingError,
)
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
    ParsedFormula,
    Top,
)
from convexcond.formula.helpers import conditionals_of, letters_of


# The bottom tier (~>, ->, <->) takes plain disjunctions on both sides,
# so chains of it only parse with parentheses.
GRAMMAR = r"""
    ?start:       formula

    ?formula:     disjunction
                | disjunction _COND disjunction      -> cond
                | disjunction _IMPLIES disjunction   -> implies
                | disjunction _IFF disjunction       -> iff

    ?disjunction: conjunction
                | disjunction _OR conjunction        -> or_
    ?conjunction: negation
                | conjunction _AND negation          -> and_
    ?negation:    _NOT negation                      -> not_
                | atom
    ?atom:        LETTER                             -> letter
                | _TOP                               -> top
                | _BOTTOM                            -> bottom
                | _LPAR formula _RPAR

    _COND:        "~>" | "⇝"
    _IMPLIES:     "->" | "→"
    _IFF:         "<->" | "↔"
    _OR:          "|" | "∨"
    _AND:         "&" | "∧"
    _NOT:         "~" | "¬"
    _TOP:         "T" | "⊤"
    _BOTTOM:      "F" | "⊥"
    _LPAR:        "("
    _RPAR:        ")"
    LETTER:       /[a-z][a-zA-Z0-9_]*/

    %import common.WS
    %ignore WS
"""

TOKEN_NAMES = {
    "_COND": "~>",
    "_IMPLIES": "->",
    "_IFF": "<->",
    "_OR": "|",
    "_AND": "&",
    "_NOT": "~",
    "_TOP": "T",
    "_BOTTOM": "F",
    "_LPAR": "(",
    "_RPAR": ")",
    "LETTER": "letter",
    "$END": "end of input",
}

parser = Lark(GRAMMAR, parser="lalr")


class FormulaBuilder(Transformer):
    def letter(self, children):
        return Letter(str(children[0]))

    def top(self, children):
        return Top()

    def bottom(self, children):
        return Bottom()

    def not_(self, children):
        return Not(children[0])

    def and_(self, children):
        return And(children[0], children[1])

    def or_(self, children):
        return Or(children[0], children[1])

    def implies(self, children):
        return Implies(children[0], children[1])

    def iff(self, children):
        return Iff(children[0], children[1])

    def cond(self, children):
        return Cond(children[0], children[1])


def _syntax_error(text: str, error: UnexpectedInput) -> FormulaSyntaxError:
    token = getattr(error, "token", None)

    if isinstance(error, UnexpectedEOF) or (
        token is not None and token.type == "$END"
    ):
        position = len(text)
    else:
        position = getattr(error, "pos_in_stream", None)
        if position is None or position < 0:
            position = len(text)

    expected = (
        getattr(error, "expected", None)
        or getattr(error, "allowed", None)
        or []
    )

    return FormulaSyntaxError(
        text=text,
        position=position,
        expected=[TOKEN_NAMES.get(name, name) for name in expected],
    )


def _find_free_letter(formula: Formula):
    """
    First letter of a one-step formula that is not beneath a `Cond`
    """

    if isinstance(formula, Letter):
        return formula.name
    if isinstance(formula, Cond) or isinstance(formula, (Top, Bottom)):
        return None
    if isinstance(formula, Not):
        return _find_free_letter(formula.operand)

    return _find_free_letter(formula.left) or _find_free_letter(
        formula.right
    )


def check_level(formula: Formula) -> int:
    """
    Return 0 for a propositional formula and 1 for a well-formed
    one-step formula, raise for anything in between
    """

    conditionals = conditionals_of(formula)

    if not conditionals:
        return 0

    for conditional in conditionals:
        if conditionals_of(conditional.antecedent) or conditionals_of(
            conditional.consequent
        ):
            raise NestingError(conditional)

    free_letter = _find_free_letter(formula)
    if free_letter:
        raise MixedLevelError(free_letter)

    return 1


def parse_formula(formula: Formula) -> ParsedFormula:
    return ParsedFormula(
        level=check_level(formula),
        formula=formula,
        letters=letters_of(formula),
    )


def parse(text: str) -> ParsedFormula:
    try:
        tree = parser.parse(text)
    except UnexpectedInput as error:
        raise _syntax_error(text, error)

    return parse_formula(FormulaBuilder().transform(tree))


def parse_one_step(text: str) -> ParsedFormula:
    parsed = parse(text)

    if not parsed.is_one_step:
        raise InputError(f"'{text}' contains no conditional")

    return parsed
