from typing import Iterable, Iterator, List, Sequence, Tuple

from convexcond.exceptions import InputError


def bits(mask: int) -> Iterator[int]:
    """
    Positions of the set bits of `mask`, lowest first
    """

    position = 0
    while mask:
        if mask & 1:
            yield position
        mask >>= 1
        position += 1


def submasks(mask: int) -> Iterator[int]:
    submask = mask
    while True:
        yield submask
        if submask == 0:
            return
        submask = (submask - 1) & mask


class Worlds:
    """
    An ordered ground set. World sets over it are int bit masks,
    bit i standing for worlds[i].
    """

    def __init__(self, worlds: Sequence[str]):
        self.worlds = tuple(worlds)
        self.full = (1 << len(self.worlds)) - 1
        self._positions = {world: i for i, world in enumerate(self.worlds)}

        if len(self._positions) != len(self.worlds):
            raise InputError(f"Duplicate world ids in {list(self.worlds)}")

    @property
    def size(self) -> int:
        return len(self.worlds)

    def position(self, world: str) -> int:
        if world not in self._positions:
            raise InputError(f"Unknown world '{world}'")

        return self._positions[world]

    def mask_of(self, worlds: Iterable[str]) -> int:
        mask = 0
        for world in worlds:
            mask |= 1 << self.position(world)

        return mask

    def ids_of(self, mask: int) -> List[str]:
        return [self.worlds[position] for position in bits(mask)]

    def format(self, mask: int) -> str:
        return "{" + ", ".join(self.ids_of(mask)) + "}"


class ConvexGeometry(Worlds):
    """
    A ground set with a family of world sets. Construct through
    `convexcond.geometry.validate` to have the family checked.
    """

    def __init__(self, worlds: Sequence[str], convex_sets: Iterable[int]):
        super().__init__(worlds)
        self.convex_sets: Tuple[int, ...] = tuple(sorted(set(convex_sets)))
        self._members = frozenset(self.convex_sets)

    def __contains__(self, mask: int) -> bool:
        return mask in self._members

    def __eq__(self, other):
        return (
            isinstance(other, ConvexGeometry)
            and self.worlds == other.worlds
            and self._members == other._members
        )

    def __hash__(self):
        return hash((self.worlds, self._members))

    def __repr__(self):
        family = ", ".join(self.format(mask) for mask in self.convex_sets)
        return f"ConvexGeometry({list(self.worlds)}, [{family}])"

    @property
    def has_empty_set(self) -> bool:
        return 0 in self._members


class Poset(Worlds):
    """
    A finite partial order, stored as the up-set and down-set mask of
    every element
    """

    def __init__(self, elements: Sequence[str], relation: Sequence[Sequence]):
        super().__init__(elements)

        size = len(self.worlds)
        if len(relation) != size or any(len(row) != size for row in relation):
            raise InputError("Order relation must be a square matrix")

        for i in range(size):
            if not relation[i][i]:
                raise InputError(f"Order is not reflexive at {elements[i]}")
            for j in range(size):
                if i != j and relation[i][j] and relation[j][i]:
                    raise InputError(
                        "Order is not antisymmetric at "
                        f"{elements[i]}, {elements[j]}"
                    )
                for k in range(size):
                    if (
                        relation[i][j]
                        and relation[j][k]
                        and not relation[i][k]
                    ):
                        raise InputError(
                            "Order is not transitive at "
                            f"{elements[i]}, {elements[j]}, {elements[k]}"
                        )

        self.above = tuple(
            sum(1 << j for j in range(size) if relation[i][j])
            for i in range(size)
        )
        self.below = tuple(
            sum(1 << i for i in range(size) if relation[i][j])
            for j in range(size)
        )

    def leq(self, lower: str, upper: str) -> bool:
        return bool(
            self.above[self.position(lower)] >> self.position(upper) & 1
        )

    def __eq__(self, other):
        return (
            isinstance(other, Poset)
            and self.worlds == other.worlds
            and self.above == other.above
        )

    def __hash__(self):
        return hash((self.worlds, self.above))

    def __repr__(self):
        return f"Poset({list(self.worlds)}, above={list(self.above)})"

    @classmethod
    def from_covers(
        cls, elements: Sequence[str], covers: Iterable[Tuple[str, str]]
    ) -> "Poset":
        """
        The reflexive transitive closure of the (lower, upper) pairs
        """

        positions = {element: i for i, element in enumerate(elements)}
        size = len(positions)
        relation = [[i == j for j in range(size)] for i in range(size)]

        for lower, upper in covers:
            if lower not in positions or upper not in positions:
                raise InputError(f"Unknown element in cover {lower} < {upper}")
            relation[positions[lower]][positions[upper]] = True

        for k in range(size):
            for i in range(size):
                if relation[i][k]:
                    for j in range(size):
                        if relation[k][j]:
                            relation[i][j] = True

        return cls(elements, relation)

    @classmethod
    def from_chain(cls, chain: Sequence[str]) -> "Poset":
        """
        A linear order listed bottom to top
        """

        return cls.from_covers(chain, zip(chain, chain[1:]))

    @classmethod
    def from_masks(cls, elements: Sequence[str], above: Sequence[int]):
        size = len(elements)
        relation = [
            [bool(above[i] >> j & 1) for j in range(size)]
            for i in range(size)
        ]

        return cls(elements, relation)
