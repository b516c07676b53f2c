import itertools
import unittest

from PositroidToolkit.affine.core import (BLACK, WHITE, dimension, enumerate_bound, from_window, identity,
                                          insert_fixed_point, k2_type, length, parse_window, remove_fixed_point,
                                          right_multiply, rotate, t_I)
from PositroidToolkit.affine.Necklaces import necklace_of, parse_necklace, perm_of
from PositroidToolkit.affine.Positroids import (bruhat_leq, covers, is_matroid, is_sort_closed,
                                                perm_of_rank_matrix, positroid_of, rank_matrix_of)
from PositroidToolkit.errors import InvalidNecklace, NotBijective, NotBounded, WrongK


class TestWindow(unittest.TestCase):
    def test_valid(self):
        f = from_window([2, 4, 6, 5, 7, 9])
        self.assertEqual((f.k, f.n), (2, 6))

    def test_identity(self):
        self.assertEqual(from_window([3, 4, 5, 6]), identity(2, 4))

    def test_not_bijective(self):
        with self.assertRaises(NotBijective):
            from_window([1, 1, 2, 3])

    def test_not_bounded(self):
        with self.assertRaises(NotBounded):
            from_window([0, 2, 3, 5])

    def test_wrong_k(self):
        with self.assertRaises(WrongK):
            from_window([3, 4, 5, 6], expect_k=1)

    def test_parse_forms(self):
        self.assertEqual(parse_window("[2547]"), parse_window("[2,5,4,7]"))
        self.assertEqual(str(parse_window("[2547]")), "[2,5,4,7]")

    def test_t_I(self):
        f = t_I({1, 3}, 4)
        self.assertEqual(f.window, (5, 2, 7, 4))
        self.assertEqual(f.k, 2)


class TestNecklace(unittest.TestCase):
    def test_example(self):
        necklace = necklace_of(from_window([2, 4, 6, 5, 7, 9]))
        self.assertEqual([set(s) for s in necklace.subsets],
                         [{1, 3}, {2, 3}, {3, 4}, {4, 6}, {5, 6}, {1, 6}])
        self.assertEqual(str(necklace), "(13,23,34,46,56,16)")

    def test_identity(self):
        necklace = necklace_of(identity(2, 4))
        self.assertEqual([set(s) for s in necklace.subsets], [{1, 2}, {2, 3}, {3, 4}, {1, 4}])

    def test_parse(self):
        self.assertEqual(perm_of(parse_necklace("(13,23,34,46,56,16)")), from_window([2, 4, 6, 5, 7, 9]))

    def test_invalid(self):
        with self.assertRaises(InvalidNecklace):
            parse_necklace("(12,34,12,34)")

    def test_round_trip_exhaustive(self):
        for k, n in [(1, 4), (2, 5), (2, 6), (3, 6)]:
            for f in enumerate_bound(k, n):
                self.assertEqual(perm_of(necklace_of(f)), f)


class TestLengthAndOrder(unittest.TestCase):
    def test_length(self):
        self.assertEqual(length(identity(2, 4)), 0)
        self.assertEqual(length(from_window([3, 5, 4, 6])), 1)
        self.assertEqual(length(from_window([2, 5, 4, 7])), 2)
        self.assertEqual(dimension(from_window([2, 5, 4, 7])), 2)

    def test_covers_of_identity(self):
        found = {f.window for f in covers(identity(2, 4))}
        self.assertEqual(found, {(4, 3, 5, 6), (3, 5, 4, 6), (3, 4, 6, 5), (2, 4, 5, 7)})

    def test_covers_length(self):
        for f in enumerate_bound(2, 5):
            for g in covers(f):
                self.assertEqual(length(g), length(f) + 1)
                self.assertTrue(bruhat_leq(g, f))
                self.assertFalse(bruhat_leq(f, g))

    def test_order_matches_containment(self):
        cells = enumerate_bound(2, 4)
        matroids = {f: positroid_of(f).bases for f in cells}
        for f, g in itertools.product(cells, repeat=2):
            self.assertEqual(bruhat_leq(f, g), matroids[f] <= matroids[g])

    def test_bound_sizes(self):
        self.assertEqual(len(enumerate_bound(2, 4)), 33)
        for n in range(1, 7):
            self.assertEqual(len(enumerate_bound(1, n)), 2 ** n - 1)
        self.assertEqual(sum(len(enumerate_bound(k, 4)) for k in range(5)), 65)


class TestRankMatrix(unittest.TestCase):
    def test_example(self):
        r = rank_matrix_of(from_window([4, 7, 5, 8, 6, 9]))
        self.assertEqual(r(1, 2), 2)
        self.assertEqual(r(5, 6), 1)

    def test_identity(self):
        r = rank_matrix_of(identity(2, 4))
        self.assertTrue(all(r(i, i) == 1 for i in range(1, 5)))

    def test_zero_column(self):
        self.assertEqual(rank_matrix_of(t_I({1}, 2))(2, 2), 0)

    def test_inverse(self):
        for f in enumerate_bound(2, 5):
            self.assertEqual(perm_of_rank_matrix(rank_matrix_of(f)), f)


class TestPositroid(unittest.TestCase):
    def test_example(self):
        self.assertEqual(positroid_of(from_window([2, 5, 4, 7])).bases, {(1, 3), (1, 4), (2, 3), (2, 4)})

    def test_t_I(self):
        self.assertEqual(positroid_of(t_I({1, 3}, 4)).bases, {(1, 3)})

    def test_uniform(self):
        self.assertEqual(positroid_of(identity(1, 3)).bases, {(1,), (2,), (3,)})

    def test_axioms(self):
        for f in enumerate_bound(2, 5):
            bases = positroid_of(f).bases
            self.assertTrue(is_matroid(bases))
            self.assertTrue(is_sort_closed(bases))

    def test_not_sort_closed(self):
        self.assertFalse(is_sort_closed({(1, 2), (3, 4)}))


class TestOperations(unittest.TestCase):
    def test_rotate(self):
        f = from_window([2, 4, 6, 5, 7, 9])
        self.assertEqual(rotate(f).window, (4, 3, 5, 7, 6, 8))
        self.assertEqual(rotate(f, 6), f)

    def test_right_multiply(self):
        self.assertEqual(right_multiply(identity(2, 4), 2).window, (3, 5, 4, 6))
        self.assertEqual(right_multiply(identity(2, 4), 4).window, (2, 4, 5, 7))

    def test_right_multiply_unbounded(self):
        with self.assertRaises(NotBounded):
            right_multiply(from_window([1, 2, 3]), 1)

    def test_insert_fixed_point(self):
        self.assertEqual(insert_fixed_point(identity(2, 4), 3, BLACK).window, (4, 5, 3, 6, 7))
        g = insert_fixed_point(identity(2, 4), 1, WHITE)
        self.assertEqual(g.k, 3)
        self.assertEqual(from_window(g.window).k, 3)

    def test_remove_fixed_point(self):
        for f in enumerate_bound(2, 4):
            for i in range(1, 6):
                for color in (BLACK, WHITE):
                    self.assertEqual(remove_fixed_point(insert_fixed_point(f, i, color), i), f)

    def test_k2_type(self):
        self.assertEqual(k2_type(from_window([2, 3, 4, 8, 6, 7, 12])), (0, (4, 3)))
        self.assertEqual(k2_type(from_window([4, 3, 6, 5, 7])), (0, (1, 2, 2)))
        self.assertEqual(k2_type(from_window([1, 5, 6])), (1, (1, 1)))


if __name__ == "__main__":
    unittest.main()
