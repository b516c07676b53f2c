import itertools
import logging
from typing import Dict, FrozenSet, Iterable, List, Set, Tuple

from PositroidToolkit.affine.core import BoundedAffinePermutation, affine_length, from_window, length
from PositroidToolkit.affine.Necklaces import format_subset, necklace_of
from PositroidToolkit.errors import DimensionMismatch, InvalidInput, InvalidRankMatrix

Subset = Tuple[int, ...]


class CyclicRankMatrix:
    """Cyclic rank matrix r(i, j) for i <= j <= i + n - 1, extended periodically.

    Attributes
    ----------
    n : int
    k : int
    values : dict
        (i, j) -> rank for 1 <= i <= n and i <= j <= i + n - 1.
    """

    def __init__(self, n: int, k: int, values: Dict[Tuple[int, int], int]):
        self.n = n
        self.k = k
        self.values = dict(values)

    def __call__(self, i: int, j: int) -> int:
        if j < i:
            return 0
        if j - i >= self.n:
            return self.k
        shift = (i - 1) // self.n * self.n
        return self.values[(i - shift, j - shift)]

    def __eq__(self, other) -> bool:
        return isinstance(other, CyclicRankMatrix) and (self.n, self.k, self.values) == (other.n, other.k, other.values)

    def __le__(self, other: "CyclicRankMatrix") -> bool:
        return all(v <= other.values[key] for key, v in self.values.items())

    def __hash__(self):
        return hash(tuple(sorted(self.values.items())))

    def to_text(self) -> str:
        """Row i lists r(i, i), ..., r(i, i + n - 1)."""
        return "\n".join(" ".join(str(self(i, j)) for j in range(i, i + self.n)) for i in range(1, self.n + 1))

    def validate(self) -> "CyclicRankMatrix":
        n, k = self.n, self.k
        for i in range(1, n + 1):
            for j in range(i, i + n):
                r = self(i, j)
                if not 0 <= r <= min(j - i + 1, k):
                    raise InvalidRankMatrix(f"r({i},{j}) = {r} is out of range")
                if j + 1 <= i + n - 1 and not r <= self(i, j + 1) <= r + 1:
                    raise InvalidRankMatrix(f"r({i},{j}) to r({i},{j + 1}) is not a unit step")
                if not r - 1 <= self(i + 1, j) <= r:
                    raise InvalidRankMatrix(f"r({i},{j}) to r({i + 1},{j}) is not a unit step")
            if self(i, i + n - 1) != k:
                raise InvalidRankMatrix(f"r({i},{i + n - 1}) = {self(i, i + n - 1)} != k = {k}")
        return self


def rank_matrix_of(f: BoundedAffinePermutation) -> CyclicRankMatrix:
    """r(i, j) = #{a in [i, j] : f(a) > j}."""
    values = {}
    for i in range(1, f.n + 1):
        for j in range(i, i + f.n):
            values[(i, j)] = sum(1 for a in range(i, j + 1) if f(a) > j)
    return CyclicRankMatrix(f.n, f.k, values)


def perm_of_rank_matrix(r: CyclicRankMatrix) -> BoundedAffinePermutation:
    """f(i) is the first j >= i with r(i, j) = r(i + 1, j), or i + n if there is none."""
    r.validate()
    n = r.n
    window = []
    for i in range(1, n + 1):
        value = next((j for j in range(i, i + n) if r(i, j) == r(i + 1, j)), i + n)
        window.append(value)
    try:
        return from_window(window, expect_k=r.k)
    except InvalidInput as exc:
        raise InvalidRankMatrix(f"Rank matrix does not come from a bounded affine permutation: {exc}") from exc


def _check_same_shape(f: BoundedAffinePermutation, g: BoundedAffinePermutation):
    if (f.k, f.n) != (g.k, g.n):
        raise DimensionMismatch(f"{f} is in Bound({f.k},{f.n}) but {g} is in Bound({g.k},{g.n})")


def bruhat_leq(f: BoundedAffinePermutation, g: BoundedAffinePermutation) -> bool:
    """Closure order on Bound(k,n): f <= g when the cell of f lies in the closure of the cell of g.

    This is the dual of affine Bruhat order (id is the top element) and holds exactly when
    r_f <= r_g entrywise.
    """
    _check_same_shape(f, g)
    return rank_matrix_of(f) <= rank_matrix_of(g)


def covers(f: BoundedAffinePermutation) -> List[BoundedAffinePermutation]:
    """All g covered by f in Bound(k,n), i.e. boundary cells of codimension one."""
    n = f.n
    target = length(f) + 1
    rank_f = rank_matrix_of(f)
    found = set()
    for a in range(1, n + 1):
        for b in range(a + 1, a + n):
            window = [f(i) for i in range(1, n + 1)]
            fa, fb = f(a), f(b)
            window[a - 1] = fb - n * ((a - 1) // n)
            pos_b = (b - 1) % n
            window[pos_b] = fa - n * ((b - 1) // n)
            if any(not i <= v <= i + n for i, v in enumerate(window, start=1)):
                continue
            if affine_length(window) != target:
                continue
            g = BoundedAffinePermutation(window, f.k)
            if rank_matrix_of(g) <= rank_f:
                found.add(g)
    logging.debug(f"{f} covers {len(found)} cells")
    return sorted(found)


def gale_leq(subset: Iterable[int], other: Iterable[int], a: int, n: int) -> bool:
    """Componentwise comparison of sorted subsets in the order a < a+1 < ... < a-1."""
    def key(x):
        return (x - a) % n
    return all(key(x) <= key(y) for x, y in zip(sorted(subset, key=key), sorted(other, key=key)))


def schubert_matroid(subset: Iterable[int], a: int, n: int) -> Set[Subset]:
    """Bases J with J >= I in the a-rotated Gale order."""
    subset = tuple(sorted(subset))
    return {J for J in itertools.combinations(range(1, n + 1), len(subset)) if gale_leq(subset, J, a, n)}


class Positroid:
    """A positroid on [n] given by its explicit set of bases."""

    def __init__(self, n: int, k: int, bases: Iterable[Iterable[int]]):
        self.n = n
        self.k = k
        self.bases: FrozenSet[Subset] = frozenset(tuple(sorted(b)) for b in bases)
        if not self.bases:
            raise InvalidInput("A positroid has at least one basis")

    def __contains__(self, subset) -> bool:
        return tuple(sorted(subset)) in self.bases

    def __eq__(self, other) -> bool:
        return isinstance(other, Positroid) and self.bases == other.bases

    def __hash__(self):
        return hash(self.bases)

    def __len__(self) -> int:
        return len(self.bases)

    def __str__(self) -> str:
        return "{" + ",".join(format_subset(b, self.n) for b in sorted(self.bases)) + "}"


def positroid_of(f: BoundedAffinePermutation) -> Positroid:
    """Intersection of the rotated Schubert matroids S_{I_a, a} of the Grassmann necklace."""
    necklace = necklace_of(f)
    bases = None
    for a in range(1, f.n + 1):
        matroid = schubert_matroid(necklace[a], a, f.n)
        bases = matroid if bases is None else bases & matroid
    return Positroid(f.n, f.k, bases)


def is_matroid(bases: Iterable[Iterable[int]]) -> bool:
    """Basis exchange: for A, B and a in A - B there is b in B - A with A - a + b a basis."""
    bases = {frozenset(b) for b in bases}
    if not bases:
        return False
    for A in bases:
        for B in bases:
            for a in A - B:
                if not any((A - {a}) | {b} in bases for b in B - A):
                    return False
    return True


def sort_pair(subset: Iterable[int], other: Iterable[int]) -> Tuple[Subset, Subset]:
    """Odd and even positions of the sorted multiset union of two equal-size subsets."""
    merged = sorted(list(subset) + list(other))
    return tuple(merged[0::2]), tuple(merged[1::2])


def is_sort_closed(bases: Iterable[Iterable[int]]) -> bool:
    bases = {tuple(sorted(b)) for b in bases}
    for I, J in itertools.combinations(bases, 2):
        low, high = sort_pair(I, J)
        if low not in bases or high not in bases:
            return False
    return True
