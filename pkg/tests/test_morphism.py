import itertools
import unittest

from hypothesis import given, strategies as st

from convexcond.exceptions import (
    GroundSetMismatch,
    InputError,
    PreconditionFailed,
)
from convexcond.formula.builders import get_formula
from convexcond.formula.parsers import parse
from convexcond.geometry import (
    Poset,
    enumerate_geometries,
    geometries_up_to,
    upset_convexity,
)
from convexcond.morphism import (
    PointMap,
    check_feasible_morphism,
    check_morphism,
    compare_truth,
    compose,
    eliminate_impossible,
    existential_image,
    identity,
    poset_back_condition,
    preimage,
    pull_back_valuation,
    universal_image,
)
from convexcond.semantics import AbstractModel
from convexcond.solver.search import natural_posets
from tests.helpers import make_geometry, make_model, make_square_model


def all_maps(source, target):
    for images in itertools.product(target.worlds, repeat=source.size):
        yield PointMap(
            source.worlds, target.worlds, dict(zip(source.worlds, images))
        )


@st.composite
def point_maps(draw, max_size=6):
    source_size = draw(st.integers(0, max_size))
    target_size = draw(st.integers(1, max_size))
    source = [f"s{index}" for index in range(source_size)]
    target = [f"t{index}" for index in range(target_size)]
    images = draw(
        st.lists(
            st.sampled_from(target),
            min_size=source_size,
            max_size=source_size,
        )
    )

    return PointMap(source, target, dict(zip(source, images)))


class TestPointMap(unittest.TestCase):
    def test_images(self):
        pointmap = PointMap(
            ["a", "b", "c"], ["x", "y", "z"], {"a": "x", "b": "x", "c": "y"}
        )

        self.assertEqual(pointmap("b"), "x")
        self.assertEqual(pointmap.fibres, (0b011, 0b100, 0b000))
        self.assertEqual(preimage(pointmap, 0b001), 0b011)
        self.assertEqual(universal_image(pointmap, 0b001), 0b100)
        self.assertEqual(universal_image(pointmap, 0b011), 0b101)
        self.assertEqual(existential_image(pointmap, 0b001), 0b001)

    def test_undefined_world(self):
        with self.assertRaises(InputError):
            PointMap(["a", "b"], ["x"], {"a": "x"})

    def test_unknown_target(self):
        with self.assertRaises(InputError):
            PointMap(["a"], ["x"], {"a": "y"})

    def test_compose(self):
        first = PointMap(["a", "b"], ["x", "y"], {"a": "y", "b": "x"})
        second = PointMap(["x", "y"], ["z"], {"x": "z", "y": "z"})

        composed = compose(first, second)

        self.assertEqual(composed.mapping, {"a": "z", "b": "z"})
        self.assertEqual(compose(identity(["a", "b"]), first), first)

        with self.assertRaises(GroundSetMismatch):
            compose(second, first)

    @given(point_maps(), st.data())
    def test_adjunction(self, pointmap, data):
        source_set = data.draw(st.integers(0, pointmap.source.full))
        target_set = data.draw(st.integers(0, pointmap.target.full))

        pulled_inside = preimage(pointmap, target_set) & ~source_set == 0
        image_covers = target_set & ~universal_image(pointmap, source_set) == 0

        self.assertEqual(pulled_inside, image_covers)

    @given(point_maps(), st.data())
    def test_complement_law(self, pointmap, data):
        source_set = data.draw(st.integers(0, pointmap.source.full))

        self.assertEqual(
            pointmap.target.full & ~existential_image(pointmap, source_set),
            universal_image(pointmap, pointmap.source.full & ~source_set),
        )


class TestCheckMorphism(unittest.TestCase):
    def test_constant_map_is_strong(self):
        source = make_geometry(["a", "b"], [[], ["a"], ["b"], ["a", "b"]])
        target = make_geometry(["c"], [[], ["c"]])
        pointmap = PointMap(["a", "b"], ["c"], {"a": "c", "b": "c"})

        verdict = check_morphism(pointmap, source, target, strong=True)

        self.assertTrue(verdict.is_morphism)
        self.assertTrue(verdict.is_strong)
        self.assertTrue(verdict.holds)

    def test_constant_map_from_trivial_geometry(self):
        source = make_geometry(["a", "b"], [["a", "b"]])
        target = make_geometry(["c"], [[], ["c"]])
        pointmap = PointMap(["a", "b"], ["c"], {"a": "c", "b": "c"})

        verdict = check_morphism(pointmap, source, target, strong=True)

        self.assertTrue(verdict.is_morphism)
        self.assertFalse(verdict.is_strong)
        self.assertEqual(verdict.witness, 0)
        self.assertFalse(verdict.holds)

    def test_not_a_morphism(self):
        source = make_geometry(["a", "b"], [[], ["a"], ["a", "b"]])
        target = make_geometry(["x", "y"], [[], ["y"], ["x", "y"]])
        pointmap = PointMap(["a", "b"], ["x", "y"], {"a": "x", "b": "y"})

        verdict = check_morphism(pointmap, source, target)

        self.assertFalse(verdict.is_morphism)
        self.assertEqual(verdict.witness, 0b01)
        self.assertIsNone(verdict.is_strong)

    def test_identity_is_strong(self):
        for geometry in geometries_up_to(3):
            verdict = check_morphism(
                identity(geometry.worlds), geometry, geometry, strong=True
            )
            self.assertTrue(verdict.holds)

    def test_ground_set_mismatch(self):
        geometry = make_geometry(["a"], [["a"]])

        with self.assertRaises(GroundSetMismatch):
            check_morphism(identity(["b"]), geometry, geometry)

    def test_feasible_form_agrees(self):
        geometries = geometries_up_to(2) + list(enumerate_geometries(3))[::4]

        for source in geometries:
            for target in geometries:
                if source.size > 2 and target.size > 2:
                    continue
                for pointmap in all_maps(source, target):
                    expected = check_morphism(
                        pointmap, source, target, strong=True
                    )
                    verdict = check_feasible_morphism(
                        pointmap, source, target, strong=True
                    )

                    self.assertEqual(
                        (verdict.is_morphism, verdict.is_strong),
                        (expected.is_morphism, expected.is_strong),
                    )

    def test_strong_morphisms_compose(self):
        geometries = geometries_up_to(2)

        def strong_maps(source, target):
            return [
                pointmap
                for pointmap in all_maps(source, target)
                if check_morphism(pointmap, source, target, True).holds
            ]

        for first, second, third in itertools.product(geometries, repeat=3):
            for inner in strong_maps(first, second):
                for outer in strong_maps(second, third):
                    verdict = check_morphism(
                        compose(inner, outer), first, third, strong=True
                    )
                    self.assertTrue(verdict.holds)


class TestPosetBackCondition(unittest.TestCase):
    def test_identity_on_chain(self):
        chain = Poset.from_chain(["a", "b", "c"])

        verdict = poset_back_condition(
            identity(chain.worlds), chain, chain, strong=True
        )

        self.assertTrue(verdict.is_morphism)
        self.assertTrue(verdict.is_strong)

    def test_antichain_onto_point(self):
        antichain = Poset.from_covers(["a", "b"], [])
        point = Poset.from_chain(["c"])
        pointmap = PointMap(["a", "b"], ["c"], {"a": "c", "b": "c"})

        verdict = poset_back_condition(pointmap, antichain, point)

        self.assertTrue(verdict.is_morphism)

    def test_collapsing_chain(self):
        chain = Poset.from_chain(["a", "b"])
        antichain = Poset.from_covers(["x", "y"], [])
        pointmap = PointMap(["a", "b"], ["x", "y"], {"a": "x", "b": "y"})

        verdict = poset_back_condition(pointmap, chain, antichain, True)

        self.assertTrue(verdict.is_morphism)
        self.assertFalse(verdict.is_strong)
        self.assertEqual(verdict.witness, 0b10)

    def test_matches_upset_convexities(self):
        posets = [
            poset for size in range(1, 4) for poset in natural_posets(size)
        ]

        for source, target in itertools.product(posets, repeat=2):
            source_geometry = upset_convexity(source)
            target_geometry = upset_convexity(target)

            for pointmap in all_maps(source, target):
                expected = check_morphism(
                    pointmap, source_geometry, target_geometry, strong=True
                )
                verdict = poset_back_condition(
                    pointmap, source, target, strong=True
                )

                self.assertEqual(
                    (verdict.is_morphism, verdict.is_strong),
                    (expected.is_morphism, expected.is_strong),
                    f"{pointmap!r}: {source!r} -> {target!r}",
                )


class TestEliminateImpossible(unittest.TestCase):
    def test_unchanged_with_empty_set(self):
        model = make_square_model()

        restricted, inclusion = eliminate_impossible(model)

        self.assertIs(restricted, model)
        self.assertEqual(inclusion, identity(model.worlds))

    def test_removes_impossible_world(self):
        model = make_model(
            ["a", "b"], [["a", "b"], ["b"]], {"p": ["a", "b"], "q": ["b"]}
        )

        restricted, inclusion = eliminate_impossible(model)

        self.assertEqual(restricted.worlds, ("a",))
        self.assertEqual(restricted.geometry.convex_sets, (0, 1))
        self.assertEqual(restricted.valuation, {"p": 1, "q": 0})
        self.assertTrue(
            check_morphism(
                inclusion, restricted.geometry, model.geometry, strong=True
            ).holds
        )

    def test_truth_preserved(self):
        model = make_model(
            ["a", "b", "c"],
            [["a", "b", "c"], ["b", "c"], ["c"]],
            {"p": ["a", "c"], "q": ["b"]},
        )
        formulas = [
            parse(text)
            for text in ["T ~> p", "p ~> q", "q ~> F", "~(p ~> F)", "p ~> p"]
        ]

        restricted, inclusion = eliminate_impossible(model)

        self.assertEqual(restricted.worlds, ("a", "b"))
        for parsed in formulas:
            self.assertEqual(
                model.evaluate(parsed), restricted.evaluate(parsed)
            )

    def test_every_world_impossible(self):
        model = make_model(["a"], [["a"]], {"p": ["a"]})

        with self.assertLogs("convexcond.morphism", level="WARNING"):
            restricted, inclusion = eliminate_impossible(model)

        self.assertEqual(restricted.worlds, ())
        self.assertEqual(inclusion.mapping, {})


class TestCompareTruth(unittest.TestCase):
    def test_identity_agrees(self):
        model = make_square_model()
        formulas = [get_formula("square"), parse("q ~> ~p"), parse("p ~> q")]

        report = compare_truth(
            identity(model.worlds), model, model, formulas
        )

        self.assertTrue(report.agrees)
        self.assertEqual(report.rows[0][1:], (True, True))

    def test_collapse_onto_point(self):
        source = AbstractModel(
            make_geometry(["a", "b"], [[], ["a"], ["b"], ["a", "b"]]),
            {"p": 0b11},
        )
        target = make_model(["c"], [[], ["c"]], {"p": ["c"]})
        pointmap = PointMap(["a", "b"], ["c"], {"a": "c", "b": "c"})

        report = compare_truth(
            pointmap, source, target, [parse("T ~> p"), parse("p ~> F")]
        )

        self.assertTrue(report.agrees)
        self.assertEqual(
            pull_back_valuation(pointmap, target.valuation), {"p": 0b11}
        )

    def test_valuation_law(self):
        source = make_model(["a"], [[], ["a"]], {"p": ["a"]})
        target = make_model(["c"], [[], ["c"]], {"p": []})
        pointmap = PointMap(["a"], ["c"], {"a": "c"})

        with self.assertRaises(PreconditionFailed) as context:
            compare_truth(pointmap, source, target, [parse("p ~> p")])

        self.assertEqual(context.exception.law, "valuation law")

    def test_strength_required(self):
        source = make_model(["a", "b"], [["a", "b"]], {})
        target = make_model(["c"], [[], ["c"]], {})
        pointmap = PointMap(["a", "b"], ["c"], {"a": "c", "b": "c"})

        with self.assertRaises(PreconditionFailed) as context:
            compare_truth(pointmap, source, target, [parse("T ~> T")])

        self.assertEqual(context.exception.law, "strong morphism")
