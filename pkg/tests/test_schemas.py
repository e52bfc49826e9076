import os
import tempfile
import unittest
from fractions import Fraction

from marshmallow import ValidationError

from convexcond.exceptions import InputError
from convexcond.formula.parsers import parse
from convexcond.planar import LineModel, PlaneModel
from convexcond.schemas import (
    AbstractModelSchema,
    PointSchema,
    VerdictSchema,
    dump_model,
    load_model,
    read_json,
    write_json,
)
from convexcond.semantics import AbstractModel
from convexcond.solver import Verdict, VerdictStatus
from tests.helpers import get_fixture, make_triangle_model, make_square_model


class TestRational(unittest.TestCase):
    def test_decimal(self):
        point = PointSchema().load({"id": "z", "x": "2.4", "y": 3})

        self.assertEqual(point["x"], Fraction(12, 5))
        self.assertEqual(point["y"], Fraction(3))

    def test_fraction(self):
        point = PointSchema().load({"id": "u", "x": "19/10", "y": " -1/3 "})

        self.assertEqual(point["x"], Fraction(19, 10))
        self.assertEqual(point["y"], Fraction(-1, 3))

    def test_dumped_as_string(self):
        data = PointSchema().dump(
            {"id": "z", "x": Fraction(12, 5), "y": Fraction(3)}
        )

        self.assertEqual(data, {"id": "z", "x": "12/5", "y": "3"})

    def test_invalid(self):
        for value in ["abc", "1/0", True, None]:
            with self.subTest(value=value):
                with self.assertRaises(ValidationError):
                    PointSchema().load({"id": "a", "x": value, "y": 0})


class TestModels(unittest.TestCase):
    def test_abstract_model(self):
        data = get_fixture("square-model")
        model = load_model(data)

        self.assertIsInstance(model, AbstractModel)
        self.assertEqual(model, load_model(dump_model(model)))
        self.assertEqual(dump_model(model)["worlds"], data["worlds"])

    def test_plane_model(self):
        model = make_triangle_model()
        data = dump_model(model)

        self.assertIsInstance(model, PlaneModel)
        self.assertEqual(data["points"][2], {"id": "z", "x": "12/5", "y": "3"})
        self.assertEqual(data["valuation"]["p"], ["x", "z", "u"])
        self.assertEqual(load_model(data), model)

    def test_line_model(self):
        data = dump_model(LineModel([{"p"}, set()]))

        self.assertEqual(
            data["points"],
            [
                {"id": "x1", "x": "1", "y": "0"},
                {"id": "x2", "x": "2", "y": "0"},
            ],
        )
        self.assertEqual(data["valuation"], {"p": ["x1"]})

    def test_bad_letter_name(self):
        data = get_fixture("square-model")
        data["valuation"]["P!"] = []

        with self.assertRaises(ValidationError):
            AbstractModelSchema().load(data)

    def test_unknown_world(self):
        data = get_fixture("square-model")
        data["valuation"]["p"] = ["nowhere"]

        with self.assertRaises(ValidationError):
            load_model(data)

    def test_missing_valuation(self):
        data = get_fixture("square-model")
        del data["valuation"]

        self.assertEqual(load_model(data).valuation, {})


class TestVerdict(unittest.TestCase):
    def test_countermodel(self):
        model = make_square_model()
        verdict = Verdict(
            VerdictStatus.COUNTERMODEL,
            parse("~q ~> p"),
            "all",
            4,
            countermodel=model,
        )

        data = VerdictSchema().dump(verdict)

        self.assertEqual(data["status"], "countermodel")
        self.assertEqual(data["formula"], "~q ~> p")
        self.assertEqual(data["class"], "all")
        self.assertEqual(data["countermodel"], dump_model(model))

    def test_no_countermodel(self):
        verdict = Verdict(VerdictStatus.UNKNOWN, parse("p ~> p"), "random", 9)

        data = VerdictSchema().dump(verdict)

        self.assertIsNone(data["countermodel"])
        self.assertFalse(data["exhaustive"])


class TestFiles(unittest.TestCase):
    def test_round_trip(self):
        with tempfile.TemporaryDirectory() as directory:
            path = os.path.join(directory, "model.json")
            write_json(path, dump_model(make_square_model()))

            self.assertEqual(
                load_model(read_json(path)), make_square_model()
            )

    def test_unreadable(self):
        with tempfile.TemporaryDirectory() as directory:
            path = os.path.join(directory, "broken.json")
            with open(path, "w", encoding="utf-8") as json_file:
                json_file.write("{not json")

            with self.assertRaises(InputError):
                read_json(path)
