from fractions import Fraction
from typing import (
    Dict,
    FrozenSet,
    Iterable,
    List,
    Mapping,
    Sequence,
    Tuple,
    Union,
)

from convexcond.exceptions import InputError
from convexcond.geometry.primitives import Worlds, bits


Number = Union[int, Fraction]


class Point:
    """
    A point of the plane with exact rational coordinates
    """

    __slots__ = ("x", "y")

    def __init__(self, x: Number = 0, y: Number = 0):
        self.x = Fraction(x)
        self.y = Fraction(y)

    def __add__(self, other: "Point") -> "Point":
        return Point(self.x + other.x, self.y + other.y)

    def __sub__(self, other: "Point") -> "Point":
        return Point(self.x - other.x, self.y - other.y)

    def __mul__(self, scalar: Number) -> "Point":
        return Point(self.x * scalar, self.y * scalar)

    __rmul__ = __mul__

    def dot(self, other: "Point") -> Fraction:
        return self.x * other.x + self.y * other.y

    def cross(self, other: "Point") -> Fraction:
        return self.x * other.y - self.y * other.x

    def __eq__(self, other):
        return (
            isinstance(other, Point)
            and self.x == other.x
            and self.y == other.y
        )

    def __lt__(self, other: "Point") -> bool:
        return (self.x, self.y) < (other.x, other.y)

    def __hash__(self):
        return hash((self.x, self.y))

    def __iter__(self):
        yield self.x
        yield self.y

    def __str__(self):
        return f"({self.x}, {self.y})"

    def __repr__(self):
        return f"Point({self.x!r}, {self.y!r})"


ORIGIN = Point(0, 0)


class PlaneModel(Worlds):
    """
    Named points of the plane with a valuation over their ids.
    Convexity is the trace of ordinary convexity on the points.
    """

    def __init__(
        self,
        points: Sequence[Tuple[str, Point]],
        valuation: Mapping[str, int] = None,
    ):
        super().__init__([point_id for point_id, _ in points])
        self.points: Tuple[Point, ...] = tuple(point for _, point in points)

        if len(set(self.points)) != len(self.points):
            raise InputError("Two points share the same coordinates")

        self.valuation: Dict[str, int] = dict(valuation or {})

        for letter, mask in self.valuation.items():
            if mask & ~self.full:
                raise InputError(
                    f"Valuation of '{letter}' names an unknown point"
                )

    def point(self, point_id: str) -> Point:
        return self.points[self.position(point_id)]

    def points_of(self, mask: int) -> List[Point]:
        return [self.points[position] for position in bits(mask)]

    def with_valuation(self, valuation: Mapping[str, int]) -> "PlaneModel":
        return PlaneModel(list(zip(self.worlds, self.points)), valuation)

    def evaluate(self, formula) -> bool:
        # Local import, helpers depends on this module
        from convexcond.planar.helpers import eval_plane

        return eval_plane(self, formula)

    def __eq__(self, other):
        return (
            isinstance(other, PlaneModel)
            and self.worlds == other.worlds
            and self.points == other.points
            and self.valuation == other.valuation
        )

    def __repr__(self):
        points = ", ".join(
            f"{point_id}={point}"
            for point_id, point in zip(self.worlds, self.points)
        )
        return f"PlaneModel([{points}], {self.valuation})"


class LineModel:
    """
    Points 1, 2, ... of the real line, each labelled with the set of
    letters true there
    """

    def __init__(
        self,
        profiles: Sequence[Iterable[str]],
        letters: Iterable[str] = (),
    ):
        self.profiles: Tuple[FrozenSet[str], ...] = tuple(
            frozenset(profile) for profile in profiles
        )
        self.letters: Tuple[str, ...] = tuple(
            sorted(set(letters).union(*self.profiles))
        )

    @property
    def ids(self) -> List[str]:
        return [f"x{index}" for index in range(1, len(self.profiles) + 1)]

    @property
    def valuation(self) -> Dict[str, int]:
        return {
            letter: sum(
                1 << position
                for position, profile in enumerate(self.profiles)
                if letter in profile
            )
            for letter in self.letters
        }

    def to_plane_model(self) -> PlaneModel:
        return PlaneModel(
            [
                (point_id, Point(index, 0))
                for index, point_id in enumerate(self.ids, start=1)
            ],
            self.valuation,
        )

    def evaluate(self, formula) -> bool:
        # Local import, helpers depends on this module
        from convexcond.planar.helpers import eval_line

        return eval_line(self, formula)

    def __eq__(self, other):
        return (
            isinstance(other, LineModel)
            and self.profiles == other.profiles
            and self.letters == other.letters
        )

    def __repr__(self):
        profiles = [sorted(profile) for profile in self.profiles]
        return f"LineModel({profiles})"


class Embedding:
    """
    The construction data of a plane realization: one ray per chain,
    each world placed on ray j at distance safety + rank from the
    origin, ranks counted from the top of the chain starting at 1
    """

    def __init__(
        self,
        chains: Sequence[Sequence[str]],
        directions: Sequence[Point],
        safety: Fraction,
        ranks: Sequence[Mapping[str, int]],
    ):
        self.chains = [tuple(chain) for chain in chains]
        self.directions = list(directions)
        self.safety = Fraction(safety)
        self.ranks = [dict(rank) for rank in ranks]

    @property
    def ray_count(self) -> int:
        return len(self.directions)

    def point_for(self, world: str, ray: int) -> Point:
        """
        `ray` counts from 1
        """

        radius = self.safety + self.ranks[ray - 1][world]
        return self.directions[ray - 1] * radius
