import unittest

from convexcond.decomposition import (
    chain_geometry,
    chain_upsets,
    check_chain,
    convex_by_chains,
    decompose,
    join_of_chains,
    shelling_orders,
    upward_closure_in,
)
from convexcond.exceptions import EmptySetRequired, InputError
from convexcond.geometry import (
    Worlds,
    discrete_geometry,
    enumerate_geometries,
    submasks,
)
from tests.helpers import (
    make_crossing_chains,
    make_geometry,
    make_square_model,
)


class TestChains(unittest.TestCase):
    def setUp(self):
        self.worlds = Worlds(["a", "b", "c"])

    def test_chain_upsets(self):
        self.assertEqual(
            chain_upsets(self.worlds, ["a", "b", "c"]),
            [0b000, 0b100, 0b110, 0b111],
        )

    def test_chain_geometry(self):
        geometry = chain_geometry(self.worlds, ["c", "a", "b"])

        self.assertEqual(geometry.convex_sets, (0b000, 0b010, 0b011, 0b111))

    def test_not_an_ordering(self):
        for chain in (["a", "b"], ["a", "b", "b"], ["a", "b", "d"]):
            with self.subTest(chain=chain):
                with self.assertRaises(InputError):
                    check_chain(self.worlds, chain)

    def test_upward_closure(self):
        chain = ["a", "b", "c"]

        self.assertEqual(upward_closure_in(self.worlds, chain, 0b010), 0b110)
        self.assertEqual(upward_closure_in(self.worlds, chain, 0b101), 0b111)
        self.assertEqual(upward_closure_in(self.worlds, chain, 0), 0)


class TestJoin(unittest.TestCase):
    def test_crossing_chains(self):
        geometry = make_square_model().geometry

        joined = join_of_chains(geometry.worlds, make_crossing_chains())

        self.assertEqual(joined, geometry)

    def test_convex_by_chains(self):
        geometry = make_square_model().geometry
        chains = make_crossing_chains()

        for mask in submasks(geometry.full):
            self.assertEqual(
                convex_by_chains(geometry, chains, mask), mask in geometry
            )

    def test_single_chain(self):
        worlds = ["a", "b", "c"]

        self.assertEqual(
            join_of_chains(worlds, [["a", "b", "c"]]),
            chain_geometry(Worlds(worlds), ["a", "b", "c"]),
        )

    def test_unchecked(self):
        worlds = ["a", "b", "c"]
        chains = [["a", "b", "c"], ["c", "b", "a"]]

        self.assertEqual(
            join_of_chains(worlds, chains, check=False),
            join_of_chains(worlds, chains),
        )


class TestShelling(unittest.TestCase):
    def test_square_model(self):
        geometry = make_square_model().geometry

        orders = list(shelling_orders(geometry))

        self.assertEqual(orders[0], ("pq", "p~q", "~pq", "~p~q"))
        for chain in make_crossing_chains():
            self.assertIn(tuple(chain), orders)

    def test_discrete_geometry(self):
        orders = list(shelling_orders(discrete_geometry(["a", "b", "c"])))

        self.assertEqual(len(orders), 6)
        self.assertEqual(len(set(orders)), 6)

    def test_chain_has_one_order(self):
        geometry = chain_geometry(Worlds(["a", "b", "c"]), ["b", "a", "c"])

        self.assertEqual(list(shelling_orders(geometry)), [("b", "a", "c")])

    def test_empty_set_required(self):
        geometry = make_geometry(["a", "b"], [["a", "b"], ["b"]])

        with self.assertRaises(EmptySetRequired):
            list(shelling_orders(geometry))


class TestDecompose(unittest.TestCase):
    def test_square_model(self):
        geometry = make_square_model().geometry

        chains = decompose(geometry)
        orders = set(shelling_orders(geometry))

        self.assertEqual(join_of_chains(geometry.worlds, chains), geometry)
        self.assertTrue(all(chain in orders for chain in chains))
        self.assertLessEqual(len(chains), len(orders))

    def test_every_small_geometry(self):
        for size in range(1, 5):
            for geometry in enumerate_geometries(size, require_empty=True):
                chains = decompose(geometry)

                self.assertEqual(
                    join_of_chains(geometry.worlds, chains), geometry
                )

    def test_discrete_geometry(self):
        geometry = discrete_geometry(["a", "b"])

        chains = decompose(geometry)

        self.assertEqual(chains, [("a", "b"), ("b", "a")])

    def test_empty_set_required(self):
        geometry = make_geometry(["a"], [["a"]])

        with self.assertRaises(EmptySetRequired):
            decompose(geometry)
