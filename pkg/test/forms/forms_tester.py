import os
import random
import unittest
from fractions import Fraction

from PositroidToolkit.affine.core import dimension, enumerate_bound, from_window, identity, t_I
from PositroidToolkit.affine.Positroids import covers
from PositroidToolkit.config import FIXTURE_DIR
from PositroidToolkit.errors import ChartDegenerate, InvalidInput, InvalidNetwork, WrongCell
from PositroidToolkit.forms.core import (agree_up_to_sign, chart_coordinates, form_density, network_density,
                                         sample_cell_points, top_cell_density, top_cell_identity)
from PositroidToolkit.forms.Groves import coordinate_edges, gauge_fix, is_disconnected_grove
from PositroidToolkit.forms.Residues import boundary_parameter, residue_check, residue_density
from PositroidToolkit.grassmann.core import plucker_of, projective_equal, representative
from PositroidToolkit.network.core import BLACK, BOUNDARY, WHITE, Edge, PlanarNetwork, load_network, specialize
from PositroidToolkit.network.Matchings import boundary_measurements
from PositroidToolkit.reduction.Charts import degenerate, graph_for

SQUARE_VALUES = {"a": Fraction(2), "b": Fraction(3), "c": Fraction(5), "d": Fraction(7)}


def square():
    return load_network(os.path.join(FIXTURE_DIR, "square.net"))


class TestGroves(unittest.TestCase):
    def test_lollipops_have_no_coordinates(self):
        network = load_network(os.path.join(FIXTURE_DIR, "lollipop.net"))
        self.assertEqual(coordinate_edges(network), [])
        self.assertTrue(is_disconnected_grove(network, []))

    def test_square(self):
        network = square()
        edges = coordinate_edges(network)
        self.assertEqual(len(edges), 4)
        self.assertTrue(is_disconnected_grove(network, edges))
        self.assertFalse(is_disconnected_grove(network, []))

    def test_chart_graphs(self):
        for f in enumerate_bound(2, 4):
            chart = graph_for(f)
            self.assertEqual(len(coordinate_edges(chart.graph)), chart.dimension, f)

    def test_unreachable_component(self):
        colors = {"b1": BOUNDARY, "L": BLACK, "X": BLACK, "Y": WHITE}
        edges = {"l": Edge("b1", "L", 1), "xy": Edge("X", "Y", 1)}
        rotation = {"L": ("l",), "X": ("xy",), "Y": ("xy",)}
        network = PlanarNetwork(1, colors, {1: "b1"}, edges, rotation, validate=False)
        with self.assertRaises(InvalidNetwork):
            coordinate_edges(network)

    def test_gauge_fix_keeps_the_point(self):
        network = specialize(square(), SQUARE_VALUES)
        edges = coordinate_edges(network)
        values = gauge_fix(network, edges)
        self.assertEqual(sorted(values), sorted(edges))
        fixed = network.replace(edges={e: Edge(edge.u, edge.v, values.get(e, 1))
                                       for e, edge in network.edges.items()})
        self.assertTrue(projective_equal(boundary_measurements(fixed), boundary_measurements(network)))

    def test_gauge_fix_rejects_cycles(self):
        with self.assertRaises(InvalidInput):
            gauge_fix(specialize(square(), SQUARE_VALUES), [])


class TestDensities(unittest.TestCase):
    def test_zero_dimensional_cell(self):
        form = form_density(t_I([1], 2))
        self.assertEqual(form.dimension, 0)
        self.assertTrue(form.field.equal(form.density, 1))

    def test_line(self):
        form = top_cell_density(1, 3)
        K = form.field
        self.assertEqual(form.coords, [(1, 2), (1, 3)])
        self.assertTrue(K.equal(form.density, K.one() / (K.gen("x1_2") * K.gen("x1_3"))))
        self.assertEqual(form.evaluate({"x1_2": Fraction(2), "x1_3": Fraction(5)}), Fraction(1, 10))

    def test_cell_form_matches_top_density(self):
        rng = random.Random(2017)
        for k, n in ((1, 3), (2, 4)):
            top = top_cell_density(k, n)
            cell = form_density(identity(k, n), top.chart, top.coords)
            points = sample_cell_points(identity(k, n), 3, rng)
            self.assertTrue(agree_up_to_sign([cell.at(p) for p in points], [top.at(p) for p in points]))

    def test_top_cell_identity(self):
        for k, n in ((1, 3), (1, 4), (2, 4), (2, 5)):
            self.assertTrue(top_cell_identity(k, n), (k, n))

    def test_square_network_density(self):
        network = specialize(square(), SQUARE_VALUES)
        edges = coordinate_edges(square())
        density = network_density(square(), edges)
        self.assertEqual(density.dimension, 4)
        values = gauge_fix(network, edges)
        at_network = density.evaluate(dict(zip(density.field.names, (values[e] for e in edges))))
        point = representative(boundary_measurements(network))
        at_cell = form_density(identity(2, 4), density.chart, density.coords).at(point)
        self.assertTrue(agree_up_to_sign([at_network], [at_cell]))

    def test_chart_must_not_vanish(self):
        with self.assertRaises(ChartDegenerate):
            form_density(from_window([3, 5, 4, 6]), chart=(3, 4))

    def test_chart_coordinates(self):
        v = plucker_of(sample_cell_points(identity(2, 4), 1, random.Random(1))[0])
        coordinates = dict(chart_coordinates(v, (1, 2)))
        self.assertEqual(sorted(coordinates), [(1, 3), (1, 4), (2, 3), (2, 4)])
        self.assertEqual(coordinates[(1, 3)], v[(3, 2)] / v[(1, 2)])

    def test_density_without_inverse(self):
        density = network_density(square(), coordinate_edges(square()))
        with self.assertRaises(InvalidInput):
            density.at(representative(boundary_measurements(specialize(square(), SQUARE_VALUES))))

    def test_sign_agreement(self):
        self.assertTrue(agree_up_to_sign([1, -2], [-1, 2]))
        self.assertFalse(agree_up_to_sign([1, 2], [1, -2]))
        self.assertFalse(agree_up_to_sign([1], [2]))
        self.assertFalse(agree_up_to_sign([1], [0]))


class TestResidues(unittest.TestCase):
    def test_codimension_one_boundaries(self):
        f = identity(2, 4)
        chart = graph_for(f)
        checked = 0
        for j in range(chart.dimension):
            f_prime = degenerate(chart, j)
            if dimension(f_prime) != chart.dimension - 1:
                continue
            self.assertIn(f_prime, covers(f))
            self.assertEqual(degenerate(chart, boundary_parameter(f, f_prime)), f_prime)
            self.assertTrue(residue_check(f, f_prime, samples=3, rng=random.Random(j)))
            checked += 1
        self.assertGreater(checked, 0)

    def test_residue_has_one_dimension_less(self):
        f = identity(2, 4)
        f_prime = degenerate(graph_for(f), 0)
        j, residue = residue_density(f, f_prime)
        self.assertEqual(j, 0)
        self.assertEqual(residue.dimension, dimension(f_prime))

    def test_not_a_boundary(self):
        with self.assertRaises(WrongCell):
            residue_density(identity(2, 4), identity(2, 4))
        with self.assertRaises(WrongCell):
            boundary_parameter(identity(2, 4), t_I([1, 2], 4))


if __name__ == '__main__':
    unittest.main()
