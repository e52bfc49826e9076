# Standard library
import argparse
import json
import logging
import sys
from typing import List, Optional

# Packages
from marshmallow import ValidationError

# Local
from convexcond.decomposition import decompose
from convexcond.exceptions import (
    ConvexCondError,
    InputError,
)
from convexcond.formula.parsers import parse, parse_one_step
from convexcond.geometry.enumeration import enumerate_geometries
from convexcond.morphism import PointMap, check_morphism
from convexcond.planar.helpers import eval_plane_clause, plane_geometry
from convexcond.planar.pipeline import run_pipeline
from convexcond.planar.primitives import PlaneModel
from convexcond.planar.svg import write_svg
from convexcond.schemas import (
    AbstractModelSchema,
    CertificateSchema,
    ChainsSchema,
    PlaneModelSchema,
    PointMapSchema,
    VerdictSchema,
    load_model,
    read_json,
    write_json,
)
from convexcond.semantics import AbstractModel, Clause, eval_one_step
from convexcond.solver.primitives import ModelClass
from convexcond.solver.search import (
    SMALL_LETTER_LIMIT,
    decide_class_validity,
    decide_validity_small,
    find_countermodel,
)


logger = logging.getLogger(__name__)

EXIT_HOLDS = 0
EXIT_FAILS = 1
EXIT_UNKNOWN = 2
EXIT_INPUT_ERROR = 3
EXIT_INTERNAL_ERROR = 4


def _emit(stream, data):
    print(json.dumps(data, indent=2), file=stream)


def _read_model(path: str):
    return load_model(read_json(path))


def _read_abstract_model(path: str) -> AbstractModel:
    model = _read_model(path)

    if not isinstance(model, AbstractModel):
        raise InputError(f"{path} is not an abstract model file")

    return model


def _geometry_of(model):
    if isinstance(model, PlaneModel):
        return plane_geometry(model)

    return model.geometry


def check(args, stdout) -> int:
    model = _read_model(args.model)
    formula = parse_one_step(args.formula)

    if isinstance(model, PlaneModel):
        holds = eval_plane_clause(model, formula, args.clause)
    else:
        holds = eval_one_step(model, formula, args.clause)

    _emit(stdout, {"formula": str(formula), "holds": holds})

    return EXIT_HOLDS if holds else EXIT_FAILS


def validate(args, stdout) -> int:
    formula = parse_one_step(args.formula)

    if args.model_class:
        verdict = decide_class_validity(
            formula, ModelClass(args.model_class, args.bound), args.workers
        )
    elif len(formula.letters) <= SMALL_LETTER_LIMIT:
        verdict = decide_validity_small(formula, args.workers)
    else:
        verdict = find_countermodel(formula, args.budget, args.seed)

    _emit(stdout, VerdictSchema().dump(verdict))

    return verdict.exit_code


def decompose_model(args, stdout) -> int:
    model = _read_abstract_model(args.model)
    chains = decompose(model.geometry)

    _emit(stdout, ChainsSchema().dump({"chains": chains}))

    return EXIT_HOLDS


def embed(args, stdout) -> int:
    model = _read_abstract_model(args.model)
    formulas = [parse_one_step(text) for text in args.formula or []]

    chains = None
    if args.chains:
        chains = ChainsSchema().load(read_json(args.chains))["chains"]

    plane, certificate = run_pipeline(
        model, formulas, chains=chains, precision=args.precision
    )

    write_json(args.out, PlaneModelSchema().dump(plane))
    if args.svg:
        write_svg(args.svg, plane)

    _emit(stdout, CertificateSchema().dump(certificate))

    return EXIT_HOLDS


def enumerate_models(args, stdout) -> int:
    schema = AbstractModelSchema(exclude=["valuation"])

    for geometry in enumerate_geometries(args.n, args.require_empty):
        print(
            json.dumps(schema.dump(AbstractModel(geometry, {}))), file=stdout
        )

    return EXIT_HOLDS


def verify_morphism(args, stdout) -> int:
    source = _geometry_of(_read_model(args.source))
    target = _geometry_of(_read_model(args.target))
    mapping = PointMapSchema().load(read_json(args.map))["mapping"]

    pointmap = PointMap(source.worlds, target.worlds, mapping)
    verdict = check_morphism(pointmap, source, target, strong=args.strong)

    witness = None
    if verdict.witness is not None:
        # Strength failures name a target set, the rest a source set
        worlds = target if verdict.is_morphism else source
        witness = worlds.ids_of(verdict.witness)

    _emit(
        stdout,
        {
            "morphism": verdict.is_morphism,
            "strong": verdict.is_strong,
            "witness": witness,
            "reason": verdict.reason,
        },
    )

    return EXIT_HOLDS if verdict.holds else EXIT_FAILS


def render(args, stdout) -> int:
    model = _read_model(args.model)

    if not isinstance(model, PlaneModel):
        raise InputError(f"{args.model} is not a plane model file")

    highlight = None
    if args.highlight:
        highlight = parse(args.highlight)
        if highlight.is_one_step:
            raise InputError("The highlight must be a propositional formula")

    write_svg(args.svg, model, highlight)

    return EXIT_HOLDS


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="convexcond",
        description="Conditional logic over finite convex geometries",
    )
    verbosity = parser.add_mutually_exclusive_group()
    verbosity.add_argument("--verbose", action="store_true", default=False)
    verbosity.add_argument("--quiet", action="store_true", default=False)

    commands = parser.add_subparsers(dest="command", required=True)

    check_parser = commands.add_parser("check", help="Evaluate a formula")
    check_parser.add_argument("--model", required=True)
    check_parser.add_argument("--formula", required=True)
    check_parser.add_argument(
        "--clause",
        choices=[clause.value for clause in Clause],
        default=Clause.EXTREME.value,
    )
    check_parser.set_defaults(handler=check)

    validate_parser = commands.add_parser(
        "validate", help="Decide validity or search for a countermodel"
    )
    validate_parser.add_argument("--formula", required=True)
    validate_parser.add_argument(
        "--class",
        dest="model_class",
        choices=["all", "line", "chain", "poset"],
    )
    validate_parser.add_argument("--bound", type=int)
    validate_parser.add_argument("--budget", type=int)
    validate_parser.add_argument("--seed", type=int)
    validate_parser.add_argument("--workers", type=int, default=1)
    validate_parser.set_defaults(handler=validate)

    decompose_parser = commands.add_parser(
        "decompose", help="Split a geometry into linear orders"
    )
    decompose_parser.add_argument("--model", required=True)
    decompose_parser.set_defaults(handler=decompose_model)

    embed_parser = commands.add_parser(
        "embed", help="Realize an abstract model by points of the plane"
    )
    embed_parser.add_argument("--model", required=True)
    embed_parser.add_argument("--out", required=True)
    embed_parser.add_argument("--svg")
    embed_parser.add_argument("--precision", type=int)
    embed_parser.add_argument("--chains")
    embed_parser.add_argument("--formula", action="append")
    embed_parser.set_defaults(handler=embed)

    enumerate_parser = commands.add_parser(
        "enumerate", help="List every convex geometry on n worlds"
    )
    enumerate_parser.add_argument("--n", type=int, required=True)
    enumerate_parser.add_argument(
        "--require-empty", action="store_true", default=False
    )
    enumerate_parser.set_defaults(handler=enumerate_models)

    morphism_parser = commands.add_parser(
        "verify-morphism", help="Check a map between two models"
    )
    morphism_parser.add_argument("--from", dest="source", required=True)
    morphism_parser.add_argument("--to", dest="target", required=True)
    morphism_parser.add_argument("--map", required=True)
    morphism_parser.add_argument("--strong", action="store_true")
    morphism_parser.set_defaults(handler=verify_morphism)

    render_parser = commands.add_parser(
        "render", help="Draw a plane model as SVG"
    )
    render_parser.add_argument("--model", required=True)
    render_parser.add_argument("--svg", required=True)
    render_parser.add_argument("--highlight")
    render_parser.set_defaults(handler=render)

    return parser


def run_cli(
    argv: Optional[List[str]] = None, stdout=None, stderr=None
) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr

    try:
        args = build_parser().parse_args(argv)
    except SystemExit as error:
        return EXIT_INPUT_ERROR if error.code else EXIT_HOLDS

    if args.verbose:
        level = logging.DEBUG
    elif args.quiet:
        level = logging.ERROR
    else:
        level = logging.WARNING

    logging.basicConfig(
        level=level,
        format="%(levelname)s %(name)s: %(message)s",
        stream=stderr,
    )

    try:
        return args.handler(args, stdout)
    except (InputError, ValidationError) as error:
        print(f"Input error: {error}", file=stderr)
        return EXIT_INPUT_ERROR
    except ConvexCondError as error:
        logger.error(f"Internal failure: {error}")
        print(f"Internal error: {error}", file=stderr)
        return EXIT_INTERNAL_ERROR


def main() -> int:
    return run_cli()
