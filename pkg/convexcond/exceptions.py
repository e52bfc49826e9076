from typing import Iterable, Optional


class ConvexCondError(Exception):
    pass


class InputError(ConvexCondError):
    """
    Raised for anything the caller can fix: bad formula text,
    bad model files, bounds out of range
    """


class FormulaSyntaxError(InputError):
    def __init__(self, text: str, position: int, expected: Iterable[str]):
        self.text = text
        self.position = position
        self.expected = sorted(set(expected or []))

        message = f"Unexpected input at position {position}"
        if self.expected:
            message += f", expected one of: {', '.join(self.expected)}"

        super().__init__(message)


class NestingError(InputError):
    def __init__(self, formula):
        self.formula = formula
        super().__init__(f"Nested conditional in {formula}")


class MixedLevelError(InputError):
    def __init__(self, letter: str):
        self.letter = letter
        super().__init__(
            f"Letter '{letter}' occurs outside every conditional"
        )


class UnknownLetter(InputError):
    def __init__(self, letter: str):
        self.letter = letter
        super().__init__(f"No valuation for letter '{letter}'")


class GeometryViolation(InputError):
    """
    A family of sets that is not a convex geometry.

    `clause` is one of "full-set", "intersection", "anti-exchange"
    and `witness` holds the offending sets or (set, x, y) triple.
    """

    def __init__(self, clause: str, witness: tuple, message: str = None):
        self.clause = clause
        self.witness = witness
        super().__init__(message or f"{clause} violated by {witness}")


class GroundSetMismatch(InputError):
    def __init__(self, expected, found):
        self.expected = expected
        self.found = found
        super().__init__(f"Ground set {found} does not match {expected}")


class BoundExceeded(InputError):
    def __init__(self, bound: int, limit: int):
        self.bound = bound
        self.limit = limit
        super().__init__(f"Bound {bound} exceeds the limit of {limit}")


class SizeGuard(BoundExceeded):
    pass


class TooManyLetters(BoundExceeded):
    pass


class EmptySetRequired(InputError):
    def __init__(self):
        super().__init__("The empty set must be convex")


class PreconditionFailed(InputError):
    def __init__(self, law: str, detail: Optional[str] = None):
        self.law = law
        self.detail = detail
        super().__init__(f"{law}: {detail}" if detail else law)


class VerdictFailed(ConvexCondError):
    def __init__(self, witness: int, reason: str):
        self.witness = witness
        self.reason = reason
        super().__init__(reason)


class InternalError(ConvexCondError):
    pass
