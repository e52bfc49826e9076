# Standard library
import json
from fractions import Fraction

# Packages
from marshmallow import Schema, ValidationError, post_load, pre_dump
from marshmallow.fields import (
    Boolean,
    Dict,
    Field,
    Integer,
    List,
    Nested,
    Raw,
    String,
)
from marshmallow.validate import Regexp

# Local
from convexcond.exceptions import InputError
from convexcond.formula.helpers import render
from convexcond.geometry.helpers import validate
from convexcond.geometry.primitives import Worlds
from convexcond.planar.primitives import LineModel, PlaneModel, Point
from convexcond.semantics import AbstractModel


LETTER_NAME = Regexp(
    r"^[a-z][a-zA-Z0-9_]*$", error="{input} is not a letter name."
)


# Types
# ===


class Rational(Field):
    """
    Exact rational number, written as "num/den", an integer or a
    decimal literal. Always dumped as a string.
    """

    default_error_messages = {
        "parse_error": "Cannot read {input} as an exact rational number."
    }

    def _serialize(self, value, attr, obj, **kwargs):
        if value is None:
            return None

        return str(Fraction(value))

    def _deserialize(self, value, attr, data, **kwargs):
        if isinstance(value, bool):
            raise self.make_error("parse_error", input=value)

        try:
            return Fraction(str(value).strip())
        except (ValueError, ZeroDivisionError):
            raise self.make_error("parse_error", input=value)


def _valuation_ids(worlds: Worlds, valuation: dict) -> dict:
    return {
        letter: worlds.ids_of(mask)
        for letter, mask in sorted(valuation.items())
    }


def _valuation_masks(worlds: Worlds, valuation: dict) -> dict:
    return {
        letter: worlds.mask_of(ids) for letter, ids in valuation.items()
    }


# Schemas
# ===


# Models
# --
class AbstractModelSchema(Schema):
    worlds = List(String(), required=True)
    convex = List(List(String()), required=True)
    valuation = Dict(
        keys=String(validate=LETTER_NAME),
        values=List(String()),
        missing=dict,
    )

    @pre_dump
    def flatten(self, model: AbstractModel, **kwargs):
        geometry = model.geometry

        return {
            "worlds": list(geometry.worlds),
            "convex": [geometry.ids_of(mask) for mask in geometry.convex_sets],
            "valuation": _valuation_ids(geometry, model.valuation),
        }

    @post_load
    def make_model(self, data, **kwargs) -> AbstractModel:
        try:
            worlds = Worlds(data["worlds"])
            geometry = validate(
                worlds.worlds,
                [worlds.mask_of(ids) for ids in data["convex"]],
            )
            return AbstractModel(
                geometry, _valuation_masks(worlds, data["valuation"])
            )
        except InputError as error:
            raise ValidationError(str(error))


class PointSchema(Schema):
    id = String(required=True)
    x = Rational(required=True)
    y = Rational(required=True)


class PlaneModelSchema(Schema):
    points = List(Nested(PointSchema), required=True)
    valuation = Dict(
        keys=String(validate=LETTER_NAME),
        values=List(String()),
        missing=dict,
    )

    @pre_dump
    def flatten(self, model, **kwargs):
        if isinstance(model, LineModel):
            model = model.to_plane_model()

        return {
            "points": [
                {"id": point_id, "x": point.x, "y": point.y}
                for point_id, point in zip(model.worlds, model.points)
            ],
            "valuation": _valuation_ids(model, model.valuation),
        }

    @post_load
    def make_model(self, data, **kwargs) -> PlaneModel:
        try:
            skeleton = PlaneModel(
                [
                    (point["id"], Point(point["x"], point["y"]))
                    for point in data["points"]
                ]
            )
            return skeleton.with_valuation(
                _valuation_masks(skeleton, data["valuation"])
            )
        except InputError as error:
            raise ValidationError(str(error))


# Chains and maps
# --
class ChainsSchema(Schema):
    chains = List(List(String()), required=True)


class PointMapSchema(Schema):
    mapping = Dict(keys=String(), values=String(), required=True)


# Results
# --
class DirectionSchema(Schema):
    x = Rational(required=True)
    y = Rational(required=True)


class TruthRowSchema(Schema):
    formula = String(required=True)
    plane = Boolean(required=True)
    model = Boolean(required=True)


class CertificateSchema(Schema):
    model = Nested(AbstractModelSchema, required=True)
    impossible = List(String(), required=True)
    chains = List(List(String()), required=True)
    directions = List(Nested(DirectionSchema), required=True)
    safety = Rational(required=True)
    points = List(Nested(PointSchema), required=True)
    owner = Dict(keys=String(), values=String(), required=True)
    verdict = String(required=True)
    truth = List(Nested(TruthRowSchema), required=True)

    @pre_dump
    def flatten(self, certificate, **kwargs):
        embedding = certificate.embedding
        plane = certificate.plane

        return {
            "model": certificate.model,
            "impossible": certificate.impossible,
            "chains": [list(chain) for chain in embedding.chains],
            "directions": [
                {"x": direction.x, "y": direction.y}
                for direction in embedding.directions
            ],
            "safety": embedding.safety,
            "points": [
                {"id": point_id, "x": point.x, "y": point.y}
                for point_id, point in zip(plane.worlds, plane.points)
            ],
            "owner": certificate.owner,
            "verdict": certificate.verdict,
            "truth": [
                {"formula": text, "plane": on_plane, "model": on_model}
                for text, on_plane, on_model in certificate.truth
            ],
        }


class VerdictSchema(Schema):
    status = String(required=True)
    formula = String(required=True)
    model_class = String(data_key="class", required=True)
    bound = Integer(required=True)
    exhaustive = Boolean(required=True)
    countermodel = Raw(allow_none=True)

    @pre_dump
    def flatten(self, verdict, **kwargs):
        return {
            "status": verdict.status.value,
            "formula": render(verdict.formula),
            "model_class": verdict.model_class,
            "bound": verdict.bound,
            "exhaustive": verdict.exhaustive,
            "countermodel": (
                dump_model(verdict.countermodel)
                if verdict.countermodel is not None
                else None
            ),
        }


# Files
# ===


def dump_model(model) -> dict:
    if isinstance(model, AbstractModel):
        return AbstractModelSchema().dump(model)

    return PlaneModelSchema().dump(model)


def load_model(data: dict):
    """
    Plane model files list points, abstract ones list worlds
    """

    if "points" in data:
        return PlaneModelSchema().load(data)

    return AbstractModelSchema().load(data)


def read_json(path: str):
    try:
        with open(path, encoding="utf-8") as json_file:
            return json.load(json_file)
    except (OSError, json.JSONDecodeError) as error:
        raise InputError(f"Cannot read {path}: {error}")


def write_json(path: str, data):
    with open(path, "w", encoding="utf-8") as json_file:
        json.dump(data, json_file, indent=2)
        json_file.write("\n")
