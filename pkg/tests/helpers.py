import json
import pathlib
from typing import Dict, List, Sequence

from hypothesis import strategies as st

from convexcond.formula.primitives import (
    And,
    Bottom,
    Cond,
    Iff,
    Implies,
    Letter,
    Not,
    Or,
    Top,
)
from convexcond.geometry.helpers import upset_convexity, validate
from convexcond.geometry.primitives import ConvexGeometry, Poset, Worlds
from convexcond.planar.primitives import PlaneModel, Point
from convexcond.schemas import (
    AbstractModelSchema,
    ChainsSchema,
    PlaneModelSchema,
)
from convexcond.semantics import AbstractModel


def get_fixture(file: str):
    current_path = pathlib.Path(__file__).parent.absolute()
    with open(f"{current_path}/./fixtures/{file}.json") as json_data:
        return json.loads(json_data.read())


def get_fixture_path(file: str) -> str:
    current_path = pathlib.Path(__file__).parent.absolute()
    return f"{current_path}/fixtures/{file}.json"


def make_triangle_model() -> PlaneModel:
    return PlaneModelSchema().load(get_fixture("triangle-model"))


def make_square_model() -> AbstractModel:
    return AbstractModelSchema().load(get_fixture("square-model"))


def make_crossing_chains() -> List[List[str]]:
    return ChainsSchema().load(get_fixture("crossing-chains"))["chains"]


def make_geometry(
    worlds: Sequence[str], convex: Sequence[Sequence[str]]
) -> ConvexGeometry:
    ground = Worlds(worlds)
    return validate(worlds, [ground.mask_of(ids) for ids in convex])


def make_model(
    worlds: Sequence[str],
    convex: Sequence[Sequence[str]],
    valuation: Dict[str, Sequence[str]] = None,
) -> AbstractModel:
    geometry = make_geometry(worlds, convex)
    return AbstractModel(
        geometry,
        {
            letter: geometry.mask_of(ids)
            for letter, ids in (valuation or {}).items()
        },
    )


def make_plane_model(
    points: Dict[str, Sequence], valuation: Dict[str, Sequence[str]] = None
) -> PlaneModel:
    skeleton = PlaneModel(
        [(point_id, Point(*xy)) for point_id, xy in points.items()]
    )
    return skeleton.with_valuation(
        {
            letter: skeleton.mask_of(ids)
            for letter, ids in (valuation or {}).items()
        }
    )


def make_three_way_split_poset() -> Poset:
    return Poset.from_covers(
        ["a1", "b1", "c1", "a2", "b2", "c2"],
        [("c1", "a2"), ("a1", "b2"), ("b1", "c2")],
    )


def make_three_way_split_model() -> AbstractModel:
    """
    Minimal worlds of p | q | r all satisfy s, but each pairwise
    disjunction has a minimal world without s
    """

    poset = make_three_way_split_poset()
    return AbstractModel(
        upset_convexity(poset),
        {
            "p": poset.mask_of(["a1", "a2"]),
            "q": poset.mask_of(["b1", "b2"]),
            "r": poset.mask_of(["c1", "c2"]),
            "s": poset.mask_of(["a1", "b1", "c1"]),
        },
    )


def make_propositional_formula(rng, letters=("p", "q", "r"), depth=2):
    if depth == 0 or rng.random() < 0.3:
        if rng.random() < 0.9:
            return Letter(rng.choice(letters))
        return rng.choice([Top(), Bottom()])

    kind = rng.choice([Not, And, Or, Implies, Iff])
    if kind is Not:
        return Not(make_propositional_formula(rng, letters, depth - 1))

    return kind(
        make_propositional_formula(rng, letters, depth - 1),
        make_propositional_formula(rng, letters, depth - 1),
    )


def make_one_step_formula(rng, letters=("p", "q", "r"), depth=2):
    if depth == 0 or rng.random() < 0.4:
        return Cond(
            make_propositional_formula(rng, letters),
            make_propositional_formula(rng, letters),
        )

    kind = rng.choice([Not, And, Or, Implies, Iff])
    if kind is Not:
        return Not(make_one_step_formula(rng, letters, depth - 1))

    return kind(
        make_one_step_formula(rng, letters, depth - 1),
        make_one_step_formula(rng, letters, depth - 1),
    )


# Strategies
# ===


def propositional_formulas(letters=("p", "q", "r"), max_leaves=8):
    atoms = st.one_of(
        st.sampled_from(letters).map(Letter),
        st.just(Top()),
        st.just(Bottom()),
    )

    def _compound(children):
        return st.one_of(
            children.map(Not),
            st.tuples(children, children).map(lambda pair: And(*pair)),
            st.tuples(children, children).map(lambda pair: Or(*pair)),
            st.tuples(children, children).map(lambda pair: Implies(*pair)),
            st.tuples(children, children).map(lambda pair: Iff(*pair)),
        )

    return st.recursive(atoms, _compound, max_leaves=max_leaves)


def one_step_formulas(letters=("p", "q", "r"), max_leaves=5):
    operands = propositional_formulas(letters, max_leaves=4)
    conditionals = st.tuples(operands, operands).map(
        lambda pair: Cond(*pair)
    )

    def _compound(children):
        return st.one_of(
            children.map(Not),
            st.tuples(children, children).map(lambda pair: And(*pair)),
            st.tuples(children, children).map(lambda pair: Or(*pair)),
            st.tuples(children, children).map(lambda pair: Implies(*pair)),
            st.tuples(children, children).map(lambda pair: Iff(*pair)),
        )

    return st.recursive(conditionals, _compound, max_leaves=max_leaves)
