import random
import unittest
from fractions import Fraction

from PositroidToolkit.affine.core import from_window, t_I
from PositroidToolkit.affine.Necklaces import necklace_of
from PositroidToolkit.errors import InvalidPoint, RankDeficient
from PositroidToolkit.exact.core import ExactMatrix
from PositroidToolkit.exact.RationalFunctions import RationalFunctionField
from PositroidToolkit.grassmann.Chevalley import apply_x, apply_y, chevalley_x, chevalley_y
from PositroidToolkit.grassmann.core import (PluckerVector, check_plucker, cyclic_shift, cyclic_shift_matrix,
                                             is_tnn, is_twisted_nonnegative, kernel_point, matroid_of,
                                             necklace_of_point, parse_plucker, perm_of_point, plucker_of,
                                             projective_equal, representative)
from PositroidToolkit.grassmann.DirectSum import ZERO, direct_sum
from PositroidToolkit.grassmann.SortOps import sort_ops, supermodular

EXAMPLE_POINT = ExactMatrix([[1, 1, 0, 0, 0, 0],
                             [0, 1, 4, 6, 0, 0],
                             [0, 0, 1, 2, 2, 1]])


def random_point(rng, k, n):
    while True:
        m = ExactMatrix([[Fraction(rng.randint(-4, 4)) for _ in range(n)] for _ in range(k)])
        try:
            return plucker_of(m), m
        except RankDeficient:
            continue


def vandermonde(nodes, k):
    """Totally positive point: rows t^r for increasing positive nodes t."""
    return ExactMatrix([[Fraction(t) ** r for t in nodes] for r in range(k)])


class TestPluckerOf(unittest.TestCase):
    def test_symbolic_example(self):
        K = RationalFunctionField(["a", "b", "c", "d"])
        a, b, c, d = (K.gen(x) for x in "abcd")
        v = plucker_of(ExactMatrix([[1, 0, a, b], [0, 1, c, d]]))
        expected = {(1, 2): 1, (1, 3): c, (1, 4): d, (2, 3): -a, (2, 4): -b, (3, 4): a * d - b * c}
        for I, value in expected.items():
            self.assertTrue(K.equal(v[I], value))

    def test_torus_fixed_point(self):
        v = plucker_of(ExactMatrix([[0, 0, 1, 0], [0, 0, 0, 1]]))
        self.assertEqual(v.coords, {(3, 4): 1})

    def test_three_term_relation(self):
        rng = random.Random(5)
        for _ in range(20):
            v, _ = random_point(rng, 2, 4)
            self.assertEqual(v[1, 3] * v[2, 4], v[1, 2] * v[3, 4] + v[1, 4] * v[2, 3])

    def test_rank_deficient(self):
        with self.assertRaises(RankDeficient):
            plucker_of(ExactMatrix([[1, 2, 3], [2, 4, 6]]))

    def test_antisymmetric_accessor(self):
        v = plucker_of(vandermonde([1, 2, 3, 4], 2))
        self.assertEqual(v[3, 1], -v[1, 3])
        self.assertEqual(v[2, 2], 0)

    def test_text_round_trip(self):
        v = plucker_of(vandermonde([1, 2, 3, 5], 2))
        self.assertEqual(parse_plucker(v.to_text()).coords, v.coords)


class TestCheckPlucker(unittest.TestCase):
    def test_valid(self):
        rng = random.Random(8)
        for k, n in [(2, 4), (2, 5), (3, 6)]:
            v, _ = random_point(rng, k, n)
            self.assertTrue(check_plucker(v))

    def test_perturbed(self):
        v = plucker_of(vandermonde([1, 2, 3, 4], 2))
        coords = dict(v.coords)
        coords[(1, 3)] = -coords[(1, 3)]
        self.assertFalse(check_plucker(PluckerVector(4, 2, coords)))

    def test_zero_rejected(self):
        with self.assertRaises(InvalidPoint):
            check_plucker(PluckerVector(4, 2, {}))


class TestPointInvariants(unittest.TestCase):
    def test_example_permutation(self):
        f = perm_of_point(EXAMPLE_POINT)
        self.assertEqual(f, from_window([4, 7, 5, 8, 6, 9]))
        necklace = necklace_of_point(plucker_of(EXAMPLE_POINT))
        self.assertEqual([set(s) for s in necklace.subsets],
                         [{1, 2, 3}, {2, 3, 4}, {3, 4, 1}, {4, 5, 1}, {5, 1, 2}, {6, 1, 2}])
        self.assertEqual(necklace, necklace_of(f))

    def test_example_is_tnn(self):
        self.assertTrue(is_tnn(plucker_of(EXAMPLE_POINT)))

    def test_coordinate_point(self):
        m = ExactMatrix([[1, 0, 0, 0], [0, 0, 1, 0]])
        self.assertEqual(perm_of_point(m), t_I({1, 3}, 4))
        self.assertEqual(matroid_of(plucker_of(m)), [(1, 3)])

    def test_tnn(self):
        self.assertTrue(is_tnn(plucker_of(vandermonde([1, 2, 3, 4, 5], 3))))
        self.assertTrue(is_tnn(plucker_of(vandermonde([1, 2, 3, 4], 2)).scale(-2)))
        self.assertFalse(is_tnn(plucker_of(ExactMatrix([[1, 0, 1], [0, 1, 1]]))))

    def test_representative(self):
        rng = random.Random(2)
        for _ in range(10):
            v, _ = random_point(rng, 2, 5)
            self.assertTrue(projective_equal(plucker_of(representative(v)), v))


class TestCyclicShift(unittest.TestCase):
    def test_order_n(self):
        rng = random.Random(4)
        v, _ = random_point(rng, 2, 4)
        w = v
        for _ in range(4):
            w = cyclic_shift(w)
        self.assertTrue(projective_equal(v, w))

    def test_coordinate_point(self):
        v = PluckerVector(4, 2, {(3, 4): 1})
        self.assertEqual(cyclic_shift(v).coords, {(1, 4): 1})

    def test_matches_matrix(self):
        rng = random.Random(6)
        for k in (1, 2, 3):
            v, m = random_point(rng, k, 5)
            self.assertEqual(plucker_of(cyclic_shift_matrix(m)).coords, cyclic_shift(v).coords)

    def test_preserves_tnn(self):
        v = plucker_of(vandermonde([1, 2, 4, 5, 7], 2))
        for _ in range(5):
            v = cyclic_shift(v)
            self.assertTrue(is_tnn(v))


class TestChevalley(unittest.TestCase):
    def setUp(self):
        self.K = RationalFunctionField(["a"])
        self.a = self.K.gen("a")

    def test_one_by_two(self):
        v = chevalley_x(PluckerVector(2, 1, {(1,): self.K.one()}), 1, self.a)
        self.assertTrue(self.K.equal(v[(1,)], 1))
        self.assertTrue(self.K.equal(v[(2,)], self.a))
        w = chevalley_y(PluckerVector(2, 1, {(2,): self.K.one()}), 1, self.a)
        self.assertTrue(self.K.equal(w[(1,)], self.a))
        self.assertTrue(self.K.equal(w[(2,)], 1))

    def test_matches_matrix(self):
        rng = random.Random(9)
        for _ in range(10):
            v, m = random_point(rng, 2, 5)
            a = Fraction(rng.randint(1, 9), rng.randint(1, 4))
            for i in range(1, 6):
                self.assertEqual(plucker_of(apply_x(m, i, a)).coords, chevalley_x(v, i, a).coords)
                self.assertEqual(plucker_of(apply_y(m, i, a)).coords, chevalley_y(v, i, a).coords)

    def test_inverse(self):
        v = plucker_of(vandermonde([1, 2, 3, 4, 5], 3))
        for i in range(1, 6):
            self.assertEqual(chevalley_x(chevalley_x(v, i, Fraction(3)), i, Fraction(-3)).coords, v.coords)

    def test_preserves_tnn(self):
        v = plucker_of(vandermonde([1, 2, 3, 4, 5], 2))
        for i in range(1, 6):
            self.assertTrue(is_tnn(chevalley_x(v, i, Fraction(2))))
            self.assertTrue(is_tnn(chevalley_y(v, i, Fraction(1, 2))))


class TestDirectSumAndKernel(unittest.TestCase):
    def test_coordinate_lines(self):
        v = direct_sum(PluckerVector(2, 1, {(1,): 1}), PluckerVector(2, 1, {(2,): 1}))
        self.assertEqual(v.coords, {(1, 2): 1})

    def test_overlap(self):
        x = PluckerVector(3, 1, {(1,): 1, (2,): 2})
        self.assertIs(direct_sum(x, x), ZERO)

    def test_matches_stacking(self):
        rng = random.Random(12)
        for _ in range(20):
            x, mx = random_point(rng, 1, 5)
            y, my = random_point(rng, 2, 5)
            result = direct_sum(x, y)
            try:
                stacked = plucker_of(mx.stack(my))
            except RankDeficient:
                self.assertIs(result, ZERO)
                continue
            self.assertTrue(projective_equal(result, stacked))

    def test_kernel_line(self):
        self.assertTrue(projective_equal(kernel_point(PluckerVector(2, 1, {(1,): 1})), PluckerVector(2, 1, {(2,): 1})))

    def test_kernel_orthogonal(self):
        rng = random.Random(13)
        for _ in range(10):
            v, m = random_point(rng, 2, 4)
            K = representative(kernel_point(v))
            self.assertEqual(m * K.transpose(), ExactMatrix.zeros(2, 2))

    def test_kernel_twisted(self):
        v = plucker_of(vandermonde([1, 2, 3, 5, 8], 2))
        self.assertTrue(is_twisted_nonnegative(kernel_point(v)))


class TestSortOps(unittest.TestCase):
    def test_example(self):
        self.assertEqual(sort_ops({1, 3, 5, 6, 7}, {2, 3, 4, 8, 9}),
                         ((1, 3, 4, 6, 8), (2, 3, 5, 7, 9), (1, 3, 4, 6, 7), (2, 3, 5, 8, 9)))

    def test_equal(self):
        self.assertEqual(sort_ops((1, 4), (1, 4)), ((1, 4),) * 4)

    def test_supermodular(self):
        self.assertTrue(supermodular(plucker_of(vandermonde([1, 2, 3, 4, 5], 2))))
        self.assertTrue(supermodular(plucker_of(EXAMPLE_POINT)))


if __name__ == "__main__":
    unittest.main()
