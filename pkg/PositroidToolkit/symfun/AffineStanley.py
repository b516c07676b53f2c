import logging
from functools import lru_cache
from itertools import combinations
from typing import Dict, List, Tuple

from sympy.utilities.iterables import multiset_permutations

from PositroidToolkit.affine.core import BoundedAffinePermutation, affine_length, extend, right_multiply_window
from PositroidToolkit.errors import NotSymmetric
from PositroidToolkit.symfun.core import Partition, SchurPolynomial, monomial_to_schur, partitions


def is_descent(window: Tuple[int, ...], i: int) -> bool:
    """Right descent at i (0 <= i < n): w(i) > w(i+1), so that w s_i is shorter."""
    return extend(window, i) > extend(window, i + 1)


def reduced_word(f: BoundedAffinePermutation) -> List[int]:
    """Indices i_1, ..., i_l in [0, n) with f = id s_{i_1} ... s_{i_l}, s_0 swapping positions n and n + 1."""
    window = f.window
    word = []
    while affine_length(window):
        i = next(i for i in range(f.n) if is_descent(window, i))
        word.append(i)
        window = right_multiply_window(window, i)
    word.reverse()
    return word


def cyclic_intervals(indices, n: int) -> List[List[int]]:
    """Maximal runs a, a+1, ..., b (mod n) of a proper subset of Z/n."""
    indices = set(indices)
    runs = []
    for a in sorted(indices):
        if (a - 1) % n in indices:
            continue
        run = [a]
        while (run[-1] + 1) % n in indices:
            run.append((run[-1] + 1) % n)
        runs.append(run)
    return runs


def cyclically_decreasing_word(indices, n: int) -> List[int]:
    """Canonical reduced word of the cyclically decreasing element on a proper subset of Z/n: s_b ... s_a per run."""
    word = []
    for run in cyclic_intervals(indices, n):
        word.extend(reversed(run))
    return word


def _strip_factor(window: Tuple[int, ...], indices) -> Tuple[int, ...]:
    """w v^{-1} for the cyclically decreasing v on the indices, or None unless the lengths add up."""
    n = len(window)
    for run in cyclic_intervals(indices, n):
        for i in run:
            if not is_descent(window, i):
                return None
            window = right_multiply_window(window, i)
    return window


@lru_cache(maxsize=None)
def factorization_count(window: Tuple[int, ...], parts: Tuple[int, ...]) -> int:
    """Number of length-additive factorizations w = v_1 ... v_r into cyclically decreasing v_j with l(v_j) = parts[j]."""
    if not parts:
        return 1 if affine_length(window) == 0 else 0
    n = len(window)
    *rest, last = parts
    if last == 0:
        return factorization_count(window, tuple(rest))
    if last >= n:
        return 0
    total = 0
    for indices in combinations(range(n), last):
        smaller = _strip_factor(window, indices)
        if smaller is not None:
            total += factorization_count(smaller, tuple(rest))
    return total


def symmetric_count(window: Tuple[int, ...], mu: Partition) -> int:
    """Factorization count of mu, checked against every distinct rearrangement of mu.

    Raises
    ------
    NotSymmetric
        When some rearrangement has a different count.
    """
    count = factorization_count(window, mu)
    for parts in multiset_permutations(list(mu)):
        other = factorization_count(window, tuple(parts))
        if other != count:
            raise NotSymmetric(f"Factorizations of {list(window)} with lengths {tuple(parts)} number {other}, "
                               f"not {count} as for {mu}")
    return count


def monomial_coefficients(f: BoundedAffinePermutation) -> Dict[Partition, int]:
    """Coefficients of the monomial symmetric functions m_mu in the affine Stanley function of f."""
    out = {}
    for mu in partitions(affine_length(f.window)):
        count = symmetric_count(f.window, mu)
        if count:
            out[mu] = count
    return out


def affine_stanley(f: BoundedAffinePermutation) -> SchurPolynomial:
    """Schur expansion of the affine Stanley symmetric function of f."""
    poly = monomial_to_schur(monomial_coefficients(f))
    logging.debug(f"Affine Stanley function of {f}: {poly}")
    return poly
