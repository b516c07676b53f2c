import os
import random
import unittest
from fractions import Fraction

from PositroidToolkit.affine.core import from_window, t_I
from PositroidToolkit.config import DEFAULT_SEED, FIXTURE_DIR
from PositroidToolkit.errors import InvalidInput, InvalidNetwork, PatternMismatch
from PositroidToolkit.exact.RationalFunctions import RationalFunctionField
from PositroidToolkit.grassmann.Chevalley import chevalley_x
from PositroidToolkit.grassmann.core import check_plucker, is_tnn, plucker_of, projective_equal
from PositroidToolkit.grassmann.DirectSum import ZERO
from PositroidToolkit.network.core import (BLACK, BOUNDARY, WHITE, Edge, PlanarNetwork, face_weights,
                                           format_network, gauge, insert_bridge, insert_lollipop,
                                           load_network, lollipop_network, parse_network, specialize,
                                           symbolic_copy)
from PositroidToolkit.network.Matchings import boundary_measurements, matchings, matchings_of_structure
from PositroidToolkit.network.Moves import (contract_degree_two, merge_parallel, remove_dipole, remove_leaf,
                                            square_move)
from PositroidToolkit.network.Orientations import (flow_measurements, invert_black_to_white,
                                                   matching_of_orientation, orientation_of_matching,
                                                   perfect_orientations, sources)
from PositroidToolkit.network.Spherical import SphericalNetwork, equatorial_measurements, with_white_boundary
from PositroidToolkit.network.Trips import cyclic_trips, is_reduced, perm_of_graph, trip_permutation
from PositroidToolkit.reduction.Charts import random_network, random_steps
from PositroidToolkit.reduction.core import assemble_matrix, assemble_network

SQUARE_VALUES = {"a": Fraction(2), "b": Fraction(3), "c": Fraction(5), "d": Fraction(7)}


def square():
    return load_network(os.path.join(FIXTURE_DIR, "square.net"))


def numeric_square(values=None):
    return specialize(square(), values or SQUARE_VALUES)


def star(color, n=3):
    """One interior vertex joined to every boundary vertex, rotation in boundary order."""
    colors = {f"b{i}": BOUNDARY for i in range(1, n + 1)}
    colors["S"] = color
    edges = {f"e{i}": Edge(f"b{i}", "S", Fraction(i)) for i in range(1, n + 1)}
    return PlanarNetwork(n, colors, {i: f"b{i}" for i in range(1, n + 1)}, edges,
                         {"S": tuple(f"e{i}" for i in range(1, n + 1))})


class TestParse(unittest.TestCase):
    def test_square_structure(self):
        network = square()
        self.assertEqual(network.n, 4)
        self.assertEqual(network.k, 2)
        self.assertEqual(len(network.faces()), 5)
        self.assertEqual(network.field.names, ("a", "b", "c", "d"))

    def test_format_round_trip(self):
        text = format_network(square())
        self.assertEqual(format_network(parse_network(text)), text)

    def test_same_color_edge(self):
        text = "2\nv b1 boundary:1\nv b2 boundary:2\nv X black\nv Y black\ne e1 b1 X 1\ne e2 b2 Y 1\ne f X Y 1\n"
        with self.assertRaises(InvalidNetwork):
            parse_network(text)
        self.assertTrue(parse_network("2 plabic" + text[1:]).plabic)

    def test_isolated_vertex(self):
        text = "1\nv b1 boundary:1\nv X black\nv Y white\ne e1 b1 X 1\n"
        with self.assertRaises(InvalidNetwork):
            parse_network(text)

    def test_wrong_k_header(self):
        with self.assertRaises(InvalidNetwork):
            parse_network(format_network(square()).replace("4 2", "4 3", 1))

    def test_boundary_degree(self):
        text = "2\nv b1 boundary:1\nv b2 boundary:2\nv X white\ne e1 b1 X 1\ne e2 b1 X 1\n"
        with self.assertRaises(InvalidNetwork):
            parse_network(text)


class TestMeasurements(unittest.TestCase):
    def test_square_table(self):
        network = square()
        K = network.field
        a, b, c, d = (K.gen(x) for x in "abcd")
        v = boundary_measurements(network)
        expected = {(1, 2): a, (1, 3): a * c + b * d, (1, 4): b, (2, 3): d, (2, 4): K.one(), (3, 4): c}
        self.assertEqual(set(v.coords), set(expected))
        for I, value in expected.items():
            self.assertTrue(K.equal(v[I], value))

    def test_square_matchings(self):
        self.assertEqual(len(matchings(square())), 7)

    def test_matchings_shared_across_weights(self):
        matchings_of_structure.cache_clear()
        symbolic = matchings(square())
        numeric = matchings(numeric_square())
        self.assertEqual(symbolic, numeric)
        self.assertEqual(matchings_of_structure.cache_info().hits, 1)
        self.assertEqual(len(matchings(star(BLACK))), 3)
        self.assertEqual(matchings_of_structure.cache_info().misses, 2)

    def test_lollipops(self):
        v = boundary_measurements(load_network(os.path.join(FIXTURE_DIR, "lollipop.net")))
        self.assertEqual(v.coords, {(3, 4): 1})

    def test_stars(self):
        self.assertEqual(boundary_measurements(star(WHITE)).coords, {(1,): 1, (2,): 2, (3,): 3})
        self.assertEqual(boundary_measurements(star(BLACK)).coords, {(2, 3): 1, (1, 3): 2, (1, 2): 3})

    def test_gauge(self):
        network = numeric_square()
        v = boundary_measurements(network)
        w = boundary_measurements(gauge(network, "WR", Fraction(3)))
        self.assertEqual(w.coords, v.scale(3).coords)

    def test_face_weights(self):
        network = square()
        K = network.field
        a, b, c, d = (K.gen(x) for x in "abcd")
        weights = face_weights(network)
        inner = [y for face, y in weights if not any(network.is_boundary(dart.tail) for dart in face)]
        self.assertEqual(len(inner), 1)
        self.assertTrue(K.equal(inner[0], b * d / (a * c)))
        total = K.one()
        for _, y in weights:
            total = total * y
        self.assertTrue(K.equal(total, 1))

    def test_symbolic_copy(self):
        network = symbolic_copy(numeric_square())
        self.assertEqual(sorted(network.field.names), ["a", "b", "c", "d"])
        self.assertTrue(network.field.equal(network.weight("e1"), 1))


class TestOrientations(unittest.TestCase):
    def test_count_matches_matchings(self):
        network = numeric_square()
        self.assertEqual(len(perfect_orientations(network)), len(matchings(network)))

    def test_bijection(self):
        network = numeric_square()
        for m in matchings(network):
            self.assertEqual(matching_of_orientation(network, orientation_of_matching(network, m)), m)

    def test_all_legs_sources(self):
        network = numeric_square()
        legs = frozenset(["e1", "e2", "e3", "e4"])
        self.assertEqual(sources(network, orientation_of_matching(network, legs)), (2, 4))

    def test_flows_agree_with_matchings(self):
        network = numeric_square()
        expected = boundary_measurements(network)
        for orientation in perfect_orientations(network):
            v = flow_measurements(invert_black_to_white(network, orientation), orientation)
            self.assertTrue(projective_equal(v, expected))


class TestTrips(unittest.TestCase):
    def test_square(self):
        network = square()
        self.assertEqual(trip_permutation(network), {1: 3, 2: 4, 3: 1, 4: 2})
        self.assertEqual(perm_of_graph(network), from_window([3, 4, 5, 6]))
        self.assertEqual(cyclic_trips(network), [])
        self.assertTrue(is_reduced(network))

    def test_lollipops(self):
        network = load_network(os.path.join(FIXTURE_DIR, "lollipop.net"))
        self.assertEqual(perm_of_graph(network), t_I({3, 4}, 4))
        self.assertTrue(is_reduced(network))

    def test_stars(self):
        self.assertEqual(perm_of_graph(star(WHITE)), from_window([2, 3, 4]))
        self.assertEqual(perm_of_graph(star(BLACK)), from_window([3, 4, 5]))

    def test_leaf_not_reduced(self):
        colors = {"b1": BOUNDARY, "b2": BOUNDARY, "U": WHITE, "V": BLACK}
        edges = {"x": Edge("U", "V", 1), "e1": Edge("b1", "U", 1), "e2": Edge("b2", "U", 1)}
        network = PlanarNetwork(2, colors, {1: "b1", 2: "b2"}, edges, {"U": ("x", "e1", "e2")})
        self.assertFalse(is_reduced(network))


class TestMoves(unittest.TestCase):
    def test_square_move_unit_weights(self):
        network = numeric_square({x: Fraction(1) for x in "abcd"})
        moved = square_move(network, ["BT", "WR", "BB", "WL"])
        self.assertIn(Fraction(1, 2), [edge.weight for edge in moved.edges.values()])
        self.assertTrue(projective_equal(boundary_measurements(moved), boundary_measurements(network)))
        self.assertEqual(perm_of_graph(moved), perm_of_graph(network))
        self.assertEqual(len(moved.faces()), 5)

    def test_square_move_scales_by_d(self):
        network = numeric_square()
        moved = square_move(network, ["BT", "WR", "BB", "WL"])
        D = SQUARE_VALUES["a"] * SQUARE_VALUES["c"] + SQUARE_VALUES["b"] * SQUARE_VALUES["d"]
        self.assertEqual(boundary_measurements(moved).coords,
                         boundary_measurements(network).scale(Fraction(1) / D).coords)

    def test_square_move_needs_square(self):
        with self.assertRaises(PatternMismatch):
            square_move(numeric_square(), ["BT", "WR", "BB"])

    def test_contract_to_boundary(self):
        colors = {"b1": BOUNDARY, "b2": BOUNDARY, "b3": BOUNDARY, "X": BLACK, "W": WHITE}
        edges = {"e1": Edge("b1", "X", Fraction(2)), "f": Edge("X", "W", Fraction(3)),
                 "e2": Edge("b2", "W", Fraction(5)), "e3": Edge("b3", "W", Fraction(7))}
        network = PlanarNetwork(3, colors, {1: "b1", 2: "b2", 3: "b3"}, edges, {"W": ("f", "e2", "e3")})
        before = boundary_measurements(network)
        after = contract_degree_two(network, "X")
        self.assertEqual(after.degree("W"), 3)
        self.assertEqual(after.weight("e1"), Fraction(3, 2))
        self.assertTrue(projective_equal(boundary_measurements(after), before))

    def test_contract_merges_neighbors(self):
        colors = {f"b{i}": BOUNDARY for i in range(1, 5)}
        colors.update({"B1": BLACK, "V": WHITE, "B2": BLACK})
        edges = {"e1": Edge("b1", "B1", 1), "e2": Edge("b2", "B1", 2), "e3": Edge("b3", "B2", 3),
                 "e4": Edge("b4", "B2", 5), "f": Edge("B1", "V", 7), "g": Edge("V", "B2", 11)}
        rotation = {"B1": ("e1", "e2", "f"), "B2": ("e3", "e4", "g"), "V": ("f", "g")}
        network = PlanarNetwork(4, colors, {i: f"b{i}" for i in range(1, 5)}, edges, rotation)
        merged = contract_degree_two(network, "V")
        self.assertEqual(merged.rotation["B1"], ("e3", "e4", "e1", "e2"))
        self.assertEqual(merged.k, 3)
        self.assertTrue(projective_equal(boundary_measurements(merged), boundary_measurements(network)))

    def test_contract_rejects(self):
        with self.assertRaises(PatternMismatch):
            contract_degree_two(numeric_square(), "BT")

    def test_merge_parallel(self):
        colors = {"b1": BOUNDARY, "b2": BOUNDARY, "W": WHITE, "B": BLACK}
        edges = {"e1": Edge("b1", "W", 1), "e2": Edge("b2", "B", 1),
                 "p": Edge("W", "B", Fraction(2)), "q": Edge("W", "B", Fraction(3))}
        rotation = {"W": ("e1", "p", "q"), "B": ("e2", "q", "p")}
        network = PlanarNetwork(2, colors, {1: "b1", 2: "b2"}, edges, rotation)
        self.assertEqual(boundary_measurements(network).coords, {(1,): 1, (2,): 5})
        merged = merge_parallel(network, "p", "q")
        self.assertEqual(merged.weight("p"), 5)
        self.assertEqual(boundary_measurements(merged).coords, {(1,): 1, (2,): 5})

    def test_remove_leaf(self):
        colors = {"b1": BOUNDARY, "b2": BOUNDARY, "U": WHITE, "V": BLACK}
        edges = {"x": Edge("U", "V", 4), "e1": Edge("b1", "U", 1), "e2": Edge("b2", "U", 1)}
        network = PlanarNetwork(2, colors, {1: "b1", 2: "b2"}, edges, {"U": ("x", "e1", "e2")})
        self.assertEqual(network.k, 0)
        pruned = remove_leaf(network, "V")
        self.assertEqual(pruned.k, 0)
        self.assertEqual(boundary_measurements(pruned).coords, {(): 1})
        self.assertTrue(is_reduced(pruned))

    def test_remove_dipole(self):
        base = load_network(os.path.join(FIXTURE_DIR, "lollipop.net"))
        colors = dict(base.colors, X=BLACK, Y=WHITE)
        edges = dict(base.edges, f=Edge("X", "Y", 1))
        network = PlanarNetwork(4, colors, base.boundary, edges, base.rotation)
        self.assertFalse(is_reduced(network))
        cleaned = remove_dipole(network, "f")
        self.assertEqual(boundary_measurements(cleaned).coords, {(3, 4): 1})


class TestInsertions(unittest.TestCase):
    def setUp(self):
        self.K = RationalFunctionField(["p", "q"])
        self.p, self.q = self.K.gen("p"), self.K.gen("q")

    def assertSamePoint(self, v, w):
        self.assertEqual(set(v.coords), set(w.coords))
        for I in v.coords:
            self.assertTrue(self.K.equal(v[I], w[I]))

    def test_bridge_between_leaves(self):
        network = lollipop_network([WHITE, BLACK, WHITE, BLACK], self.K)
        bridged = insert_bridge(network, 1, self.p)
        expected = chevalley_x(boundary_measurements(network), 1, self.p)
        self.assertSamePoint(boundary_measurements(bridged), expected)

    def test_bridge_across_n(self):
        network = lollipop_network([BLACK, BLACK, WHITE, WHITE], self.K)
        bridged = insert_bridge(network, 4, self.p)
        self.assertSamePoint(boundary_measurements(bridged),
                             chevalley_x(boundary_measurements(network), 4, self.p))

    def test_bridges_with_new_vertices(self):
        network = lollipop_network([WHITE, BLACK, WHITE, BLACK], self.K)
        once = insert_bridge(network, 2, self.p)
        twice = insert_bridge(once, 1, self.q)
        expected = chevalley_x(chevalley_x(boundary_measurements(network), 2, self.p), 1, self.q)
        self.assertSamePoint(boundary_measurements(twice), expected)

    def test_insert_lollipop(self):
        network = insert_lollipop(numeric_square(), 3, WHITE)
        self.assertEqual(network.n, 5)
        self.assertEqual(network.k, 3)
        v = boundary_measurements(network)
        self.assertTrue(all(3 in I for I in v.coords))


def random_shapes(rng, count, max_n=6):
    """(k, n, bridges) triples for random_steps, with 0 < k < n."""
    for _ in range(count):
        n = rng.randint(2, max_n)
        yield rng.randint(1, n - 1), n, rng.randint(0, n + 2)


def random_move(network, rng):
    """A randomly chosen applicable local move, or a positive gauge when none applies."""
    candidates = []
    for face in network.faces():
        tails = [dart.tail for dart in face]
        if len(face) != len(set(tails)) or len(face) != 4 or any(network.is_boundary(v) for v in tails):
            continue
        sides = {dart.edge for dart in face}
        leg_ends = {network.other(e, v) for v in tails if network.colors[v] == BLACK
                    for e in network.incident(v) if e not in sides}
        if not leg_ends & set(tails):
            candidates.append(lambda tails=tails: square_move(network, tails))
    for v in network.interior():
        if network.degree(v) == 2:
            candidates.append(lambda v=v: contract_degree_two(network, v))
        rotation = network.rotation[v]
        for t, e in enumerate(rotation):
            f = rotation[(t + 1) % len(rotation)]
            if e != f and {network.edges[e].u, network.edges[e].v} == {network.edges[f].u, network.edges[f].v}:
                candidates.append(lambda e=e, f=f: merge_parallel(network, e, f))
    rng.shuffle(candidates)
    for move in candidates:
        try:
            return move()
        except PatternMismatch:
            continue
    return gauge(network, rng.choice(network.interior()), rng.randint(2, 5))


class TestRandomNetworks(unittest.TestCase):
    def test_plucker_relations(self):
        rng = random.Random(DEFAULT_SEED)
        for k, n, bridges in random_shapes(rng, 50):
            steps = random_steps(rng, k, n, bridges)
            v = boundary_measurements(assemble_network(steps))
            self.assertEqual(v.k, k)
            self.assertTrue(check_plucker(v), [str(step) for step in steps])
            self.assertTrue(is_tnn(v), [str(step) for step in steps])
            self.assertTrue(projective_equal(v, plucker_of(assemble_matrix(steps))), [str(step) for step in steps])

    def test_moves_keep_measurement(self):
        rng = random.Random(DEFAULT_SEED)
        applied = 0
        for k, n, bridges in random_shapes(rng, 10, max_n=5):
            network = random_network(rng, k, n, bridges)
            before = boundary_measurements(network)
            for _ in range(20):
                network = random_move(network, rng)
                applied += 1
                self.assertTrue(projective_equal(boundary_measurements(network), before))
        self.assertEqual(applied, 200)

    def test_arguments(self):
        rng = random.Random(DEFAULT_SEED)
        self.assertEqual(random_network(rng, 0, 1, 0).k, 0)
        with self.assertRaises(InvalidInput):
            random_steps(rng, 3, 2, 1)
        with self.assertRaises(InvalidInput):
            random_steps(rng, 1, 1, 1)


class TestSpherical(unittest.TestCase):
    def test_empty_lower_hemisphere(self):
        upper = with_white_boundary(numeric_square())
        sphere = SphericalNetwork(upper, with_white_boundary(lollipop_network([BLACK] * 4)))
        self.assertTrue(projective_equal(equatorial_measurements(sphere), boundary_measurements(numeric_square())))

    def test_same_line_twice(self):
        line = with_white_boundary(lollipop_network([WHITE, BLACK, BLACK, BLACK]))
        self.assertIs(equatorial_measurements(SphericalNetwork(line, line)), ZERO)

    def test_coordinate_lines(self):
        sphere = SphericalNetwork(with_white_boundary(lollipop_network([WHITE, BLACK, BLACK, BLACK])),
                                  with_white_boundary(lollipop_network([BLACK, WHITE, BLACK, BLACK])))
        self.assertEqual(equatorial_measurements(sphere).coords, {(1, 2): 1})
        self.assertEqual(sphere.k, 2)

    def test_black_neighbor_of_equator(self):
        with self.assertRaises(InvalidNetwork):
            SphericalNetwork(numeric_square(), lollipop_network([WHITE] * 4))
        with self.assertRaises(InvalidNetwork):
            SphericalNetwork(lollipop_network([WHITE] * 4), lollipop_network([WHITE, WHITE, BLACK, WHITE]))

    def test_white_boundary_keeps_measurements(self):
        for network in (numeric_square(), star(BLACK, 4), lollipop_network([BLACK, WHITE, BLACK])):
            whitened = with_white_boundary(network)
            self.assertEqual(whitened.k, network.k)
            self.assertTrue(all(whitened.colors[whitened.boundary_neighbor(i)] == WHITE
                                for i in range(1, network.n + 1)))
            self.assertTrue(projective_equal(boundary_measurements(whitened), boundary_measurements(network)))


if __name__ == "__main__":
    unittest.main()
