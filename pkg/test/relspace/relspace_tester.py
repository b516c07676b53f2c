import os
import random
import unittest
from fractions import Fraction
from unittest import mock

from PositroidToolkit.affine.core import enumerate_bound, from_window
from PositroidToolkit.affine.Positroids import positroid_of
from PositroidToolkit.config import FIXTURE_DIR, SIGN_SEARCH_MAX_FREE_EDGES
from PositroidToolkit.errors import (DegenerateMove, InvalidNetwork, NonUnitBoundaryWeights, NotRepresentable,
                                     PatternMismatch)
from PositroidToolkit.exact.core import ExactMatrix
from PositroidToolkit.grassmann.core import PluckerVector, cyclic_shift, plucker_of, projective_equal
from PositroidToolkit.grassmann.DirectSum import ZERO
from PositroidToolkit.network.core import BLACK, BOUNDARY, WHITE, Edge, PlanarNetwork, load_network, specialize
from PositroidToolkit.reduction.Charts import chart_network, graph_for, random_network, random_parameters
from PositroidToolkit.relspace.core import (block_sum, disjoint_union, format_bicolored, from_planar,
                                            parse_bicolored, relation_space)
from PositroidToolkit.relspace.Gluing import glue, glue_pluckers, rotate_network
from PositroidToolkit.relspace.Moves import (gauge, glue_same_color, reduce_parallel, remove_degree_two,
                                             remove_dipole, remove_leaf, remove_loop, square_move)
from PositroidToolkit.relspace.Signs import (assemble_signs, cut_to_stars, format_signs, free_edges, matches,
                                            search_signs, sign_vector, signed_network, verify_signs)

BLACK_STAR = """3 2
v b1 boundary:1
v b2 boundary:2
v b3 boundary:3
v S black
e a b1 S a
e b b2 S b
e c b3 S c
rot S a b c
"""

# black V on 1, 2 and white U on 3, 4, joined by an edge with w(U, V) = g
BLACK_WHITE = """4 2 nonplanar
v p1 boundary:1
v p2 boundary:2
v p3 boundary:3
v p4 boundary:4
v V black
v U white
e e1 V p1 {b1}
e e2 V p2 {b2}
e h U V g
e e3 U p3 {b3}
e e4 U p4 b4
{extra}"""


def black_white(b1="b1", b2="b2", b3="b3", extra="", header=None):
    """The black-white network; with extra vertices or edges k is left for the parser to derive."""
    if header is None:
        header = "4 nonplanar" if extra else "4 2 nonplanar"
    text = BLACK_WHITE.format(b1=b1, b2=b2, b3=b3, extra=extra)
    return parse_bicolored(text.replace("4 2 nonplanar", header, 1))


def square():
    return load_network(os.path.join(FIXTURE_DIR, "square.net"))


def numeric_square(values=None):
    values = values or {"a": Fraction(2), "b": Fraction(3), "c": Fraction(5), "d": Fraction(7)}
    return specialize(square(), values)


def star(color, n=3):
    colors = {f"b{i}": BOUNDARY for i in range(1, n + 1)}
    colors["S"] = color
    edges = {f"e{i}": Edge(f"b{i}", "S", Fraction(i)) for i in range(1, n + 1)}
    return PlanarNetwork(n, colors, {i: f"b{i}" for i in range(1, n + 1)}, edges,
                         {"S": tuple(f"e{i}" for i in range(1, n + 1))})


def same(first, second) -> bool:
    return relation_space(first).same_point(relation_space(second))


def reweighted(planar, rng):
    values = random_parameters(rng, len(planar.edges))
    return planar.replace(edges={e: Edge(edge.u, edge.v, value)
                                 for (e, edge), value in zip(planar.edges.items(), values)})


def random_shapes(rng, count, max_n=5, max_bridges=None):
    for _ in range(count):
        n = rng.randint(3, max_n)
        yield rng.randint(1, n - 1), n, rng.randint(1, max_bridges or n)


class TestRelationSpace(unittest.TestCase):
    def test_black_star(self):
        network = parse_bicolored(BLACK_STAR)
        K = network.field
        a, b, c = K.gen("a"), K.gen("b"), K.gen("c")
        expected = PluckerVector(3, 2, {(1, 2): K.one() / (a * b), (1, 3): -K.one() / (a * c),
                                        (2, 3): K.one() / (b * c)})
        self.assertEqual(network.k, 2)
        self.assertTrue(projective_equal(relation_space(network).pluckers(), expected))

    def test_black_star_needs_a_sign(self):
        planar = star(BLACK)
        self.assertFalse(matches(planar, {}))
        self.assertTrue(matches(planar, {"e2": -1}))
        self.assertTrue(verify_signs(planar, {"e2": -1}))

    def test_white_star_needs_no_signs(self):
        for n in (2, 3, 4):
            self.assertTrue(verify_signs(star(WHITE, n), {}))

    def test_black_white_example(self):
        network = black_white()
        K = network.field
        b1, b2, b3, b4, g = (K.gen(x) for x in ("b1", "b2", "b3", "b4", "g"))
        zero = K.zero()
        expected = plucker_of(ExactMatrix([[b1, -b2, zero, zero], [b1 * g, zero, b3, b4]]))
        rel = relation_space(network)
        self.assertEqual(rel.k, 2)
        self.assertTrue(projective_equal(rel.pluckers(), expected))
        self.assertEqual(set(rel.pluckers().support()), set(positroid_of(from_window([3, 5, 4, 6])).bases))

    def test_expected_k_matches_planar_k(self):
        for planar in (square(), star(BLACK, 4), star(WHITE, 3),
                       load_network(os.path.join(FIXTURE_DIR, "lollipop.net"))):
            self.assertEqual(from_planar(planar).k, planar.k)
        for f in enumerate_bound(2, 5)[:12]:
            chart = graph_for(f)
            planar = chart_network(chart, [1] * chart.dimension)
            self.assertEqual(from_planar(planar).k, planar.k)

    def test_square_without_signs(self):
        rel = relation_space(from_planar(numeric_square()))
        expected = plucker_of(ExactMatrix([[3, 1, 5, 0], [2, 0, 7, 1]]))
        self.assertTrue(projective_equal(rel.pluckers(), expected))

    def test_undefined_relation_space(self):
        network = glue(black_white(b1="1", b2="1"), 1, 2)
        rel = relation_space(network)
        self.assertFalse(rel.defined)
        self.assertEqual(rel.to_text(), "undefined")

    def test_disjoint_union_is_block_sum(self):
        first, second = from_planar(numeric_square()), from_planar(star(BLACK))
        union = disjoint_union(first, second)
        self.assertEqual(union.n, 7)
        self.assertEqual(union.k, first.k + second.k)
        expected = block_sum(relation_space(first), relation_space(second))
        self.assertTrue(relation_space(union).same_point(expected))

    def test_format_round_trip(self):
        text = format_bicolored(black_white())
        self.assertEqual(format_bicolored(parse_bicolored(text)), text)

    def test_parse_errors(self):
        with self.assertRaises(InvalidNetwork):
            black_white(header="4 3 nonplanar")
        with self.assertRaises(InvalidNetwork):
            parse_bicolored("1 nonplanar\nv p1 boundary:1\nv X grey\ne e p1 X 1\n")
        with self.assertRaises(InvalidNetwork):
            parse_bicolored("1 nonplanar\nv p1 boundary:1\nv X black\nv Y white\ne e p1 X 1\n")

    def test_header_without_k(self):
        self.assertEqual(black_white(extra="v L black\ne l U L r\n").k, 1)
        self.assertEqual(black_white(extra="v L white\ne l L V r\n").k, 3)
        self.assertEqual(black_white(extra="e loop V V r\n").k, 3)
        self.assertEqual(black_white().k, 2)


class TestMoves(unittest.TestCase):
    def test_gauge(self):
        network = black_white()
        moved = gauge(gauge(network, "V", network.field.gen("g")), "U", Fraction(-3))
        self.assertTrue(same(network, moved))

    def test_remove_white_degree_two(self):
        network = parse_bicolored(BLACK_WHITE.format(b1="b1", b2="b2", b3="b3", extra="")
                                  .replace("e h U V g", "e h X V g\ne h2 U X p")
                                  .replace("v U white", "v U white\nv X white"))
        moved = remove_degree_two(network, "X")
        self.assertNotIn("X", moved.colors)
        self.assertTrue(same(network, moved))

    def test_remove_black_degree_two(self):
        network = parse_bicolored(BLACK_WHITE.format(b1="b1", b2="b2", b3="b3", extra="")
                                  .replace("e e1 V p1 b1", "e e1 V Y b1\ne s Y p1 q")
                                  .replace("v V black", "v V black\nv Y black"))
        self.assertTrue(same(network, remove_degree_two(network, "Y")))

    def test_degree_two_pattern(self):
        with self.assertRaises(PatternMismatch):
            remove_degree_two(black_white(), "V")

    def test_glue_black(self):
        text = """4 3 nonplanar
v p1 boundary:1
v p2 boundary:2
v p3 boundary:3
v p4 boundary:4
v V black
v Y black
v U white
e e1 V p1 c1
e e2 p2 V c2
e m V Y q
e e3 Y p3 c3
e h U Y r
e e4 U p4 c4
"""
        network = parse_bicolored(text)
        moved = glue_same_color(network, "m")
        self.assertEqual(moved.k, network.k)
        self.assertTrue(same(network, moved))

    def test_glue_white(self):
        text = """4 1 nonplanar
v p1 boundary:1
v p2 boundary:2
v p3 boundary:3
v p4 boundary:4
v W1 white
v W2 white
v B black
e e1 W1 p1 c1
e e2 W1 p2 c2
e m W2 W1 q
e e3 W2 p3 c3
e h W2 B r
e e4 p4 B c4
"""
        network = parse_bicolored(text)
        self.assertTrue(same(network, glue_same_color(network, "m")))

    def test_square_move(self):
        network = from_planar(square())
        moved = square_move(network, "BT", "WR", "BB", "WL")
        self.assertEqual(moved.colors["BT"], WHITE)
        self.assertEqual(moved.colors["WR"], BLACK)
        self.assertTrue(same(network, moved))
        back = square_move(moved, "WR", "BB", "WL", "BT")
        self.assertTrue(same(network, back))

    def test_degenerate_square_move(self):
        ones = {x: Fraction(1) for x in "abcd"}
        with self.assertRaises(DegenerateMove):
            square_move(from_planar(numeric_square(ones)), "BT", "WR", "BB", "WL")

    def test_reduce_parallel(self):
        network = parse_bicolored(BLACK_WHITE.format(b1="b1", b2="b2", b3="b3", extra="e h2 V U p\n"))
        moved = reduce_parallel(network, "h", "h2")
        self.assertNotIn("h2", moved.edges)
        self.assertTrue(same(network, moved))

    def test_remove_black_leaf(self):
        network = black_white(extra="v L black\ne l U L r\n")
        self.assertEqual(network.k, 1)
        moved = remove_leaf(network, "L")
        self.assertNotIn("U", moved.colors)
        self.assertTrue(same(network, moved))

    def test_remove_white_leaf(self):
        network = black_white(extra="v L white\ne l L V r\n")
        self.assertEqual(network.k, 3)
        self.assertTrue(same(network, remove_leaf(network, "L")))

    def test_remove_dipole(self):
        network = black_white(extra="v X black\nv Y white\ne dip X Y r\n")
        moved = remove_dipole(network, "dip")
        self.assertEqual(len(moved.colors), len(network.colors) - 2)
        self.assertTrue(same(network, moved))

    def test_remove_loops(self):
        black = black_white(extra="e loop V V r\n")
        self.assertEqual(black.k, 3)
        self.assertTrue(same(black, remove_loop(black, "loop")))
        white = black_white(extra="e loop U U r\n")
        self.assertEqual(white.k, 1)
        self.assertTrue(same(white, remove_loop(white, "loop")))

    def test_forbidden_loop_weights(self):
        with self.assertRaises(DegenerateMove):
            remove_loop(black_white(extra="e loop V V 1\n"), "loop")
        with self.assertRaises(DegenerateMove):
            remove_loop(black_white(extra="e loop U U -1\n"), "loop")


class TestGluing(unittest.TestCase):
    def test_glue_numeric_square(self):
        network = from_planar(numeric_square())
        glued = glue(network, 1, 2)
        self.assertEqual((glued.n, glued.k), (2, 1))
        rel = relation_space(glued)
        self.assertTrue(projective_equal(rel.pluckers(), PluckerVector(2, 1, {(1,): 9, (2,): 2})))
        predicted = glue_pluckers(relation_space(network).pluckers(), 1, 2)
        self.assertTrue(projective_equal(rel.pluckers(), predicted))

    def test_glue_symbolic_square(self):
        network = from_planar(square())
        before = relation_space(network).pluckers()
        for a, b in ((2, 3), (1, 4), (1, 3)):
            rel = relation_space(glue(network, a, b))
            self.assertTrue(projective_equal(rel.pluckers(), glue_pluckers(before, a, b)))

    def test_glue_into_white_loop(self):
        network = black_white(b3="1", extra="")
        network = parse_bicolored(format_bicolored(network).replace("p4 b4", "p4 1"))
        glued = glue(network, 3, 4)
        K = glued.field
        expected = PluckerVector(2, 1, {(1,): K.gen("b1"), (2,): -K.gen("b2")})
        self.assertTrue(projective_equal(relation_space(glued).pluckers(), expected))
        self.assertTrue(projective_equal(glue_pluckers(relation_space(network).pluckers(), 3, 4), expected))

    def test_glue_to_zero(self):
        network = black_white(b1="1", b2="1")
        self.assertIs(glue_pluckers(relation_space(network).pluckers(), 1, 2), ZERO)

    def test_non_unit_boundary_weight(self):
        with self.assertRaises(NonUnitBoundaryWeights):
            glue(black_white(), 1, 2)

    def test_rotation(self):
        for network in (from_planar(square()), black_white(), from_planar(star(BLACK, 4))):
            rotated = relation_space(rotate_network(network)).pluckers()
            self.assertTrue(projective_equal(rotated, cyclic_shift(relation_space(network).pluckers())))

    def test_glue_on_random_networks(self):
        rng = random.Random(2017)
        checked = 0
        while checked < 100:
            k, n, bridges = next(random_shapes(rng, 1))
            planar = random_network(rng, k, n, bridges)
            if planar.boundary_neighbor(1) == planar.boundary_neighbor(2):
                continue
            signs = assemble_signs(planar)
            for _ in range(5):
                network = from_planar(signed_network(reweighted(planar, rng), signs))
                for label in (1, 2):
                    x = network.boundary_neighbor(label)
                    network = gauge(network, x, 1 / network.weight_from(network.boundary_edge(label), x))
                predicted = glue_pluckers(relation_space(network).pluckers(), 1, 2)
                rel = relation_space(glue(network, 1, 2))
                if predicted is ZERO:
                    self.assertFalse(rel.defined)
                else:
                    self.assertTrue(projective_equal(rel.pluckers(), predicted))
                checked += 1


class TestSigns(unittest.TestCase):
    def test_black_stars_alternate(self):
        self.assertEqual(sign_vector(star(BLACK, 3)), {"e1": 1, "e2": -1, "e3": 1})
        self.assertEqual(sign_vector(star(BLACK, 4)), {"e1": 1, "e2": -1, "e3": 1, "e4": -1})

    def test_square(self):
        planar = square()
        signs = sign_vector(planar)
        self.assertTrue(set(signs.values()) <= {1, -1})
        self.assertTrue(verify_signs(planar, signs))
        self.assertFalse(matches(specialize(planar, {x: Fraction(1) for x in "abcd"}), {}))
        self.assertTrue(matches(numeric_square(), {"a": -1}))
        flipped = signed_network(numeric_square(), {"a": -1})
        self.assertEqual(flipped.weight("a"), -2)
        self.assertEqual(flipped.weight("b"), 3)

    def test_lollipops(self):
        planar = load_network(os.path.join(FIXTURE_DIR, "lollipop.net"))
        self.assertEqual(set(sign_vector(planar).values()), {1})

    def test_chart_graphs(self):
        rng = random.Random(2017)
        for f in enumerate_bound(2, 4):
            chart = graph_for(f)
            planar = chart_network(chart, random_parameters(rng, chart.dimension))
            signs = sign_vector(planar)
            self.assertTrue(verify_signs(planar, signs), str(f))

    def test_assembled_without_search(self):
        with mock.patch("PositroidToolkit.relspace.Signs.search_signs") as search:
            self.assertTrue(verify_signs(square(), sign_vector(square())))
            sign_vector(load_network(os.path.join(FIXTURE_DIR, "lollipop.net")))
            search.assert_not_called()

    def test_cut_to_stars(self):
        stars, cuts = cut_to_stars(square())
        self.assertEqual(len(cuts), 4)
        self.assertEqual(stars.n, 12)
        for v in stars.interior():
            self.assertTrue(all(stars.is_boundary(stars.other(e, v)) for e in stars.incident(v)))

    def test_random_graphs(self):
        rng = random.Random(2017)
        for k, n, bridges in random_shapes(rng, 20, max_bridges=2):
            planar = random_network(rng, k, n, bridges)
            self.assertLessEqual(len(planar.edges), 12)
            signs = assemble_signs(planar)
            self.assertEqual(set(signs), set(planar.edges))
            self.assertTrue(verify_signs(planar, signs), (k, n, bridges))

    def test_beyond_search_limit(self):
        rng = random.Random(2017)
        planar = random_network(rng, 3, 6, 12)
        self.assertGreater(len(free_edges(planar)), SIGN_SEARCH_MAX_FREE_EDGES)
        with self.assertRaises(NotRepresentable):
            search_signs(planar, rng)
        signs = assemble_signs(planar)
        for _ in range(3):
            self.assertTrue(matches(reweighted(planar, rng), signs))

    def test_floating_component_falls_back_to_search(self):
        colors = {"b1": BOUNDARY, "b2": BOUNDARY, "L1": WHITE, "L2": BLACK, "X": BLACK, "Y": WHITE}
        edges = {"l1": Edge("b1", "L1", Fraction(2)), "l2": Edge("b2", "L2", Fraction(3)),
                 "d": Edge("X", "Y", Fraction(5))}
        planar = PlanarNetwork(2, colors, {1: "b1", 2: "b2"}, edges, {})
        with self.assertRaises(NotRepresentable):
            assemble_signs(planar)
        self.assertTrue(verify_signs(planar, sign_vector(planar)))

    def test_format(self):
        self.assertEqual(format_signs({"e1": 1, "e2": -1}), "e1 +1\ne2 -1\n")


if __name__ == "__main__":
    unittest.main()
