import random
import unittest
from fractions import Fraction

from PositroidToolkit.affine.core import enumerate_bound, from_window, identity, length, t_I
from PositroidToolkit.affine.Positroids import bruhat_leq
from PositroidToolkit.errors import DimensionMismatch, InvalidInput, NotTNN, WrongCell
from PositroidToolkit.exact.core import ExactMatrix
from PositroidToolkit.grassmann.core import is_tnn, perm_of_point, plucker_of, projective_equal
from PositroidToolkit.network.Matchings import boundary_measurements
from PositroidToolkit.network.Trips import perm_of_graph
from PositroidToolkit.reduction.Charts import (chart_network, chart_steps, check_dimension, coordinates, degenerate,
                                               graph_for, parametrize, sample_tnn_point)
from PositroidToolkit.reduction.core import (BRIDGE, LOLLIPOP_BLACK, LOLLIPOP_WHITE, ReductionStep,
                                             assemble_matrix, choose_step, factorize, reduce_point, reduce_step)

EXAMPLE = ExactMatrix([[1, 1, 0, 0], [0, 1, 1, 1]])


def vandermonde(nodes, k):
    return ExactMatrix([[Fraction(t) ** r for t in nodes] for r in range(k)])


class TestChooseStep(unittest.TestCase):
    def test_fixed_points_come_first(self):
        self.assertEqual(choose_step(from_window([1, 4, 6, 7])), (LOLLIPOP_BLACK, 1))
        self.assertEqual(choose_step(from_window([3, 5, 4, 6])), (BRIDGE, 1))
        self.assertEqual(choose_step(from_window([5, 3, 4, 6])), (LOLLIPOP_WHITE, 1))

    def test_loop_before_coloop(self):
        self.assertEqual(choose_step(t_I([2], 3)), (LOLLIPOP_BLACK, 1))

    def test_step_str(self):
        self.assertEqual(str(ReductionStep(BRIDGE, 2, Fraction(1, 2))), "bridge(2, 1/2)")
        self.assertEqual(str(ReductionStep(LOLLIPOP_WHITE, 3)), "lollipop-white(3)")


class TestReducePoint(unittest.TestCase):
    def test_first_step_of_example(self):
        step, smaller = reduce_step(EXAMPLE)
        self.assertEqual(step, ReductionStep(BRIDGE, 1, 1))
        self.assertTrue(projective_equal(plucker_of(smaller), plucker_of(ExactMatrix([[1, 0, 0, 0], [0, 1, 1, 1]]))))
        self.assertEqual(perm_of_point(smaller), from_window([5, 3, 4, 6]))

    def test_full_sequence_of_example(self):
        steps, terminal = reduce_point(EXAMPLE)
        expected = [ReductionStep(BRIDGE, 1, 1), ReductionStep(LOLLIPOP_WHITE, 1), ReductionStep(BRIDGE, 1, 1),
                    ReductionStep(LOLLIPOP_BLACK, 2), ReductionStep(BRIDGE, 1, 1),
                    ReductionStep(LOLLIPOP_WHITE, 1), ReductionStep(LOLLIPOP_BLACK, 1)]
        self.assertEqual(steps, expected)
        self.assertEqual(terminal.ncols, 0)

    def test_torus_fixed_point_is_all_lollipops(self):
        m = ExactMatrix([[0, 1, 0, 0], [0, 0, 0, 1]])
        steps, _ = reduce_point(m)
        self.assertTrue(all(s.kind != BRIDGE for s in steps))
        self.assertEqual(len(steps), 4)

    def test_not_tnn(self):
        with self.assertRaises(NotTNN):
            reduce_step(ExactMatrix([[1, 0, 1], [0, 1, 1]]))

    def test_assemble_matrix_recovers_point(self):
        for m in (EXAMPLE, vandermonde([1, 2, 3, 4, 5], 2), vandermonde([1, 2, 3, 5, 7], 3)):
            steps, _ = reduce_point(m)
            self.assertTrue(projective_equal(plucker_of(assemble_matrix(steps)), plucker_of(m)))


class TestFactorize(unittest.TestCase):
    def test_example(self):
        network = factorize(EXAMPLE)
        self.assertTrue(projective_equal(boundary_measurements(network), plucker_of(EXAMPLE)))
        self.assertEqual(perm_of_graph(network), from_window([3, 5, 4, 6]))

    def test_totally_positive_points(self):
        for nodes, k in (([1, 2, 3, 4], 2), ([1, 2, 4, 5, 6], 2), ([1, 2, 3, 4, 6], 3)):
            m = vandermonde(nodes, k)
            network = factorize(m)
            self.assertEqual(network.k, k)
            self.assertTrue(projective_equal(boundary_measurements(network), plucker_of(m)))
            self.assertEqual(perm_of_graph(network), identity(k, len(nodes)))

    def test_random_cells(self):
        rng = random.Random(11)
        for _ in range(8):
            f, _, m = sample_tnn_point(2, 5, rng)
            network = factorize(m)
            self.assertTrue(projective_equal(boundary_measurements(network), plucker_of(m)))
            self.assertEqual(perm_of_graph(network), f)


class TestCharts(unittest.TestCase):
    def test_chart_of_top_cell_gr12(self):
        chart = graph_for(identity(1, 2))
        self.assertEqual(chart.params, ["t1"])
        m = parametrize(chart, [Fraction(3)])
        self.assertTrue(projective_equal(plucker_of(m), plucker_of(ExactMatrix([[1, 3]]))))

    def test_every_cell_of_gr24(self):
        rng = random.Random(3)
        for f in enumerate_bound(2, 4):
            chart = graph_for(f)
            self.assertTrue(check_dimension(chart))
            self.assertEqual(perm_of_graph(chart.graph), f)
            values = [Fraction(rng.randint(1, 9), rng.randint(1, 4)) for _ in chart.params]
            m = parametrize(chart, values)
            self.assertTrue(is_tnn(plucker_of(m)))
            self.assertEqual(perm_of_point(m), f)
            self.assertEqual(coordinates(chart, m), values)
            self.assertTrue(projective_equal(boundary_measurements(chart_network(chart, values)), plucker_of(m)))

    def test_chart_steps_follow_permutation(self):
        f = from_window([3, 5, 4, 6])
        kinds = [s.kind for s in chart_steps(f)]
        self.assertEqual(kinds, [BRIDGE, LOLLIPOP_WHITE, BRIDGE, LOLLIPOP_BLACK, BRIDGE, LOLLIPOP_WHITE,
                                 LOLLIPOP_BLACK])
        self.assertEqual([s.a for s in chart_steps(f) if s.kind == BRIDGE], ["t1", "t2", "t3"])

    def test_wrong_cell(self):
        chart = graph_for(identity(2, 4))
        with self.assertRaises(WrongCell):
            coordinates(chart, EXAMPLE)

    def test_parameter_checks(self):
        chart = graph_for(identity(2, 4))
        with self.assertRaises(DimensionMismatch):
            parametrize(chart, [1, 2])
        with self.assertRaises(InvalidInput):
            parametrize(chart, [1, 2, 0, 4])
        with self.assertRaises(InvalidInput):
            degenerate(chart, 4)

    def test_degenerate_first_parameter(self):
        for f in (identity(2, 4), from_window([3, 5, 4, 6]), identity(2, 5)):
            chart = graph_for(f)
            g = degenerate(chart, 0)
            self.assertEqual(length(g), length(f) + 1)
            self.assertTrue(bruhat_leq(g, f))

    def test_sample_is_in_its_cell(self):
        rng = random.Random(2017)
        for _ in range(5):
            f, values, m = sample_tnn_point(3, 6, rng)
            self.assertEqual(perm_of_point(m), f)
            self.assertTrue(all(v > 0 for v in values))
            self.assertTrue(is_tnn(plucker_of(m)))


if __name__ == '__main__':
    unittest.main()
