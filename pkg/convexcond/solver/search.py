# Standard library
import itertools
import logging
import random
import threading
from concurrent.futures import FIRST_COMPLETED, ThreadPoolExecutor, wait
from typing import Callable, Iterable, Iterator, List, Optional, Tuple

# Local
from convexcond.decomposition import join_of_chains
from convexcond.exceptions import InternalError, TooManyLetters
from convexcond.formula.helpers import letters_of
from convexcond.geometry.enumeration import enumerate_geometries
from convexcond.geometry.helpers import upset_convexity, upsets
from convexcond.geometry.primitives import ConvexGeometry, Poset, submasks
from convexcond.planar.primitives import LineModel
from convexcond.semantics import AbstractModel
from convexcond.settings import settings
from convexcond.solver.primitives import (
    ModelClass,
    ModelClassKind,
    Verdict,
    VerdictStatus,
)


logger = logging.getLogger(__name__)

SMALL_LETTER_LIMIT = 2
CHUNK_SIZE = 512


def _formula(formula):
    return getattr(formula, "formula", formula)


def assignment_worlds(letters: Tuple[str, ...]) -> List[str]:
    """
    One world per assignment of truth values, named like "p=1,q=0"
    """

    if not letters:
        return ["*"]

    return [
        ",".join(
            f"{letter}={index >> position & 1}"
            for position, letter in enumerate(letters)
        )
        for index in range(1 << len(letters))
    ]


def assignment_valuation(letters: Tuple[str, ...]) -> dict:
    return {
        letter: sum(
            1 << index
            for index in range(1 << len(letters))
            if index >> position & 1
        )
        for position, letter in enumerate(letters)
    }


def profile_valuation(
    letters: Tuple[str, ...], profiles: Iterable[int]
) -> dict:
    """
    Valuation giving world i the letters of the bit mask profiles[i]
    """

    valuation = {letter: 0 for letter in letters}
    for world, profile in enumerate(profiles):
        for position, letter in enumerate(letters):
            if profile >> position & 1:
                valuation[letter] |= 1 << world

    return valuation


def _confirm(formula, countermodel) -> object:
    if countermodel.evaluate(formula):
        raise InternalError(
            f"Countermodel {countermodel!r} does not refute the formula"
        )

    return countermodel


def _chunks(items: Iterable, size: int) -> Iterator[list]:
    iterator = iter(items)
    while True:
        chunk = list(itertools.islice(iterator, size))
        if not chunk:
            return
        yield chunk


def search(
    formula,
    candidates: Iterable,
    workers: int = 1,
) -> Optional[object]:
    """
    The first candidate model that falsifies `formula`. With several
    workers the stream is cut into chunks shared out over a thread
    pool, at most two chunks per worker in flight; the first
    refutation found stops the rest.
    """

    formula = _formula(formula)

    if workers <= 1:
        for candidate in candidates:
            if not candidate.evaluate(formula):
                return candidate
        return None

    found = threading.Event()
    lock = threading.Lock()
    refutations = []

    def work(chunk):
        for candidate in chunk:
            if found.is_set():
                return
            if not candidate.evaluate(formula):
                with lock:
                    refutations.append(candidate)
                found.set()
                return

    with ThreadPoolExecutor(max_workers=workers) as pool:
        chunks = _chunks(candidates, CHUNK_SIZE)
        window = workers * 2
        pending = set()

        while not found.is_set():
            if len(pending) >= window:
                done, pending = wait(pending, return_when=FIRST_COMPLETED)
                for future in done:
                    future.result()
                continue

            chunk = next(chunks, None)
            if chunk is None:
                break
            pending.add(pool.submit(work, chunk))

        for future in pending:
            future.result()

    return refutations[0] if refutations else None


def _verdict(
    formula,
    countermodel,
    model_class: str,
    bound: int,
    exhaustive: bool,
) -> Verdict:
    if countermodel is None:
        logger.info(
            f"No countermodel in class {model_class} up to {bound}"
        )
        return Verdict(
            VerdictStatus.VALID,
            formula,
            model_class,
            bound,
            exhaustive=exhaustive,
        )

    return Verdict(
        VerdictStatus.COUNTERMODEL,
        formula,
        model_class,
        bound,
        countermodel=_confirm(_formula(formula), countermodel),
    )


def _canonical_models(letters: Tuple[str, ...]) -> Iterator[AbstractModel]:
    worlds = assignment_worlds(letters)
    valuation = assignment_valuation(letters)

    for geometry in enumerate_geometries(len(worlds), worlds=worlds):
        yield AbstractModel(geometry, valuation)


def decide_validity_small(formula, workers: int = 1) -> Verdict:
    """
    Decide validity over all finite convex geometries. A formula with
    k letters that fails somewhere fails on some geometry over the 2^k
    assignments with its natural valuation, so the search over those is
    complete.
    """

    letters = letters_of(_formula(formula))

    if len(letters) > SMALL_LETTER_LIMIT:
        raise TooManyLetters(len(letters), SMALL_LETTER_LIMIT)

    countermodel = search(formula, _canonical_models(letters), workers)

    return _verdict(
        formula, countermodel, "canonical", 1 << len(letters), True
    )


def _valuations(letters: Tuple[str, ...], size: int) -> Iterator[dict]:
    for profiles in itertools.product(range(1 << len(letters)), repeat=size):
        yield profile_valuation(letters, profiles)


def _line_models(letters: Tuple[str, ...], bound: int) -> Iterator[LineModel]:
    profiles = [
        frozenset(
            letter
            for position, letter in enumerate(letters)
            if index >> position & 1
        )
        for index in range(1 << len(letters))
    ]

    for size in range(1, bound + 1):
        for sequence in itertools.product(range(len(profiles)), repeat=size):
            # Mirror images are the same model
            if sequence > sequence[::-1]:
                continue
            yield LineModel([profiles[index] for index in sequence], letters)


def _chain_models(
    letters: Tuple[str, ...], bound: int
) -> Iterator[AbstractModel]:
    for size in range(1, bound + 1):
        worlds = [f"w{index}" for index in range(1, size + 1)]
        geometry = upset_convexity(Poset.from_chain(worlds))

        for valuation in _valuations(letters, size):
            yield AbstractModel(geometry, valuation)


def natural_posets(size: int) -> Iterator[Poset]:
    """
    Posets on w1..w{size} where every element sits above a down-set of
    the elements before it; every finite poset has such a labelling
    """

    worlds = [f"w{index}" for index in range(1, size + 1)]

    def _extend(below: List[int]) -> Iterator[List[int]]:
        position = len(below)
        if position == size:
            yield below
            return

        for downset in submasks((1 << position) - 1):
            if all(
                below[lower] & ~downset == 0
                for lower in range(position)
                if downset >> lower & 1
            ):
                yield from _extend(below + [downset | 1 << position])

    for below in _extend([]):
        above = [
            sum(
                1 << upper
                for upper in range(size)
                if below[upper] >> lower & 1
            )
            for lower in range(size)
        ]
        yield Poset.from_masks(worlds, above)


def _poset_models(
    letters: Tuple[str, ...], bound: int
) -> Iterator[AbstractModel]:
    for size in range(1, bound + 1):
        for poset in natural_posets(size):
            geometry = ConvexGeometry(poset.worlds, upsets(poset))
            for valuation in _valuations(letters, size):
                yield AbstractModel(geometry, valuation)


def _geometry_models(
    letters: Tuple[str, ...], bound: int
) -> Iterator[AbstractModel]:
    for size in range(1, bound + 1):
        for geometry in enumerate_geometries(size):
            for valuation in _valuations(letters, size):
                yield AbstractModel(geometry, valuation)


def decide_class_validity(
    formula, model_class: ModelClass, workers: int = 1
) -> Verdict:
    """
    Search a bounded class of models for one falsifying `formula`.
    Valid verdicts hold up to the bound only, except for all geometries
    with a bound of at least 2^k worlds, where the search over the
    assignment worlds settles validity outright.
    """

    letters = letters_of(_formula(formula))
    kind, bound = model_class.kind, model_class.bound

    logger.info(f"Searching {kind.value} models up to {bound}")

    if kind == ModelClassKind.ALL and len(letters) <= SMALL_LETTER_LIMIT:
        if 1 << len(letters) <= bound:
            verdict = decide_validity_small(formula, workers)
            verdict.model_class, verdict.bound = kind.value, bound
            return verdict

    candidates: Callable[[Tuple[str, ...], int], Iterable] = {
        ModelClassKind.ALL: _geometry_models,
        ModelClassKind.LINE: _line_models,
        ModelClassKind.CHAIN: _chain_models,
        ModelClassKind.POSET: _poset_models,
    }[kind]

    countermodel = search(formula, candidates(letters, bound), workers)

    return _verdict(formula, countermodel, kind.value, bound, False)


def random_model(
    rng: random.Random,
    letters: Tuple[str, ...],
    max_worlds: int,
    max_chains: int,
) -> AbstractModel:
    size = rng.randint(1, max_worlds)
    worlds = [f"w{index}" for index in range(1, size + 1)]
    chains = [
        rng.sample(worlds, size) for _ in range(rng.randint(1, max_chains))
    ]
    geometry = join_of_chains(worlds, chains, check=False)
    valuation = {letter: rng.getrandbits(size) for letter in letters}

    return AbstractModel(geometry, valuation)


def find_countermodel(
    formula,
    budget: int = None,
    seed: int = None,
    max_worlds: int = None,
    max_chains: int = None,
) -> Verdict:
    """
    Try random joins of random linear orders with random valuations.
    Finds nothing for valid formulas, so it can only refute.
    """

    budget = budget if budget is not None else settings["search_budget"]
    seed = seed if seed is not None else settings["search_seed"]
    max_worlds = max_worlds or settings["search_max_worlds"]
    max_chains = max_chains or settings["search_max_chains"]

    formula = _formula(formula)
    letters = letters_of(formula)
    rng = random.Random(seed)

    for iteration in range(budget):
        model = random_model(rng, letters, max_worlds, max_chains)

        if not model.evaluate(formula):
            logger.info(f"Random countermodel after {iteration + 1} tries")
            return _verdict(formula, model, "random", budget, False)

    logger.info(f"No countermodel in {budget} random tries")

    return Verdict(VerdictStatus.UNKNOWN, formula, "random", budget)
