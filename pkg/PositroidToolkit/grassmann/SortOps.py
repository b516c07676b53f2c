import itertools
from typing import Iterable, Tuple

from PositroidToolkit.affine.Positroids import sort_pair
from PositroidToolkit.errors import IndexSize
from PositroidToolkit.grassmann.core import PluckerVector

Subset = Tuple[int, ...]


def sort_ops(I: Iterable[int], J: Iterable[int]) -> Tuple[Subset, Subset, Subset, Subset]:
    """(sort_1, sort_2, min, max) of two k-subsets.

    sort_1 and sort_2 take the odd and even positions of the sorted multiset union; min and max are
    componentwise on the sorted tuples.
    """
    I, J = tuple(sorted(I)), tuple(sorted(J))
    if len(I) != len(J):
        raise IndexSize(f"{I} and {J} have different sizes")
    sort1, sort2 = sort_pair(I, J)
    low = tuple(min(a, b) for a, b in zip(I, J))
    high = tuple(max(a, b) for a, b in zip(I, J))
    return sort1, sort2, low, high


def supermodular(v: PluckerVector) -> bool:
    """Δ_I Δ_J <= Δ_min Δ_max <= Δ_sort1 Δ_sort2 for every pair of k-subsets of a TNN point."""
    for I, J in itertools.combinations(itertools.combinations(range(1, v.n + 1), v.k), 2):
        sort1, sort2, low, high = sort_ops(I, J)
        product = v[I] * v[J]
        middle = v[low] * v[high]
        top = v[sort1] * v[sort2]
        if not product <= middle <= top:
            return False
    return True
