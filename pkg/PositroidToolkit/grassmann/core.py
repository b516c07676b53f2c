import itertools
import logging
from typing import Dict, Iterable, List, Sequence, Tuple

from PositroidToolkit.affine.core import BoundedAffinePermutation, from_window
from PositroidToolkit.affine.Necklaces import GrassmannNecklace, format_subset, parse_subset
from PositroidToolkit.affine.Positroids import CyclicRankMatrix
from PositroidToolkit.errors import IndexSize, InvalidPoint, RankDeficient
from PositroidToolkit.exact.core import ExactMatrix, exact_quotient, format_scalar, is_zero, minor, parse_rat, rref_rank

Subset = Tuple[int, ...]


def subsets(n: int, k: int) -> List[Subset]:
    """k-subsets of [n] in lexicographic order."""
    return list(itertools.combinations(range(1, n + 1), k))


def inversions(first: Iterable[int], second: Iterable[int]) -> int:
    """inv(J, K) = #{(j, l) in J x K : j > l}."""
    second = list(second)
    return sum(1 for j in first for l in second if j > l)


def sorting_sign(indices: Sequence[int]) -> int:
    """Sign of the permutation sorting a tuple of distinct indices; 0 on a repeat."""
    if len(set(indices)) != len(indices):
        return 0
    inv = sum(1 for a, b in itertools.combinations(indices, 2) if a > b)
    return -1 if inv % 2 else 1


def complement(subset: Iterable[int], n: int) -> Subset:
    subset = set(subset)
    return tuple(i for i in range(1, n + 1) if i not in subset)


class PluckerVector:
    """A point of the cone over Gr(k, n) stored by all of its Plücker coordinates.

    Attributes
    ----------
    n : int
    k : int
    coords : dict
        Sorted k-subset -> scalar (Rat or sympy field element). Missing subsets are zero.
    """

    def __init__(self, n: int, k: int, coords: Dict[Sequence[int], object]):
        self.n = n
        self.k = k
        self.coords = {}
        for I, value in coords.items():
            key = tuple(sorted(I))
            if len(key) != k or len(set(key)) != k or not all(1 <= i <= n for i in key):
                raise IndexSize(f"{I} is not a {k}-subset of [{n}]")
            if not is_zero(value):
                self.coords[key] = value

    def __getitem__(self, indices: Sequence[int]):
        """Antisymmetric accessor: Δ_{..., a, b, ...} = -Δ_{..., b, a, ...}."""
        indices = tuple(indices)
        if len(indices) != self.k:
            raise IndexSize(f"Expected {self.k} indices, got {indices}")
        sign = sorting_sign(indices)
        if sign == 0:
            return 0
        value = self.coords.get(tuple(sorted(indices)), 0)
        return value if sign > 0 else -value

    def __repr__(self) -> str:
        return f"PluckerVector(n={self.n}, k={self.k}, {self.to_text()!r})"

    def is_zero(self) -> bool:
        return not self.coords

    def support(self) -> List[Subset]:
        return sorted(self.coords)

    def items(self):
        for I in subsets(self.n, self.k):
            yield I, self.coords.get(I, 0)

    def scale(self, c) -> "PluckerVector":
        return PluckerVector(self.n, self.k, {I: c * v for I, v in self.coords.items()})

    def map(self, fn) -> "PluckerVector":
        return PluckerVector(self.n, self.k, {I: fn(v) for I, v in self.coords.items()})

    def to_text(self) -> str:
        """Lines "I : value" in lexicographic subset order."""
        return "\n".join(f"{format_subset(I, self.n)} : {format_scalar(v)}" for I, v in self.items())


def parse_plucker(text: str, n: int = None) -> PluckerVector:
    coords = {}
    for line in text.splitlines():
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        if ":" not in line:
            raise InvalidPoint(f"Expected 'I : value', got {line!r}")
        key, value = line.split(":", 1)
        coords[parse_subset(key)] = parse_rat(value)
    if not coords:
        raise InvalidPoint("No coordinates given")
    k = len(next(iter(coords)))
    n = n if n is not None else max(max(I) for I in coords if I) if k else 0
    return PluckerVector(n, k, coords)


def projective_equal(v: PluckerVector, w: PluckerVector) -> bool:
    """Δ_I(v)Δ_J(w) = Δ_J(v)Δ_I(w) for all I, J, with both vectors nonzero."""
    if (v.n, v.k) != (w.n, w.k) or v.is_zero() or w.is_zero():
        return False
    if set(v.coords) != set(w.coords):
        return False
    J = v.support()[0]
    return all(is_zero(v.coords[I] * w.coords[J] - v.coords[J] * w.coords[I]) for I in v.coords)


def matrix_point(m: ExactMatrix) -> ExactMatrix:
    """Validates a full-rank k x n representative."""
    rank, _, _ = rref_rank(m)
    if rank != m.nrows:
        raise RankDeficient(f"A {m.nrows}x{m.ncols} representative has rank {rank}")
    return m


def plucker_of(m: ExactMatrix) -> PluckerVector:
    """Maximal minors Δ_I = det of the columns I."""
    matrix_point(m)
    rows = list(range(m.nrows))
    coords = {I: minor(m, rows, [i - 1 for i in I]) for I in subsets(m.ncols, m.nrows)}
    return PluckerVector(m.ncols, m.nrows, coords)


def require_nonzero(v: PluckerVector):
    if v.is_zero():
        raise InvalidPoint("The zero vector is not a point of the Grassmannian")


def check_plucker(v: PluckerVector) -> bool:
    """All relations Σ_r (-1)^r Δ_{i, j_r} Δ_{j - j_r} = 0 for (k-1)-tuples i and (k+1)-tuples j."""
    require_nonzero(v)
    n, k = v.n, v.k
    if k in (0, n):
        return True
    for i in itertools.combinations(range(1, n + 1), k - 1):
        for j in itertools.combinations(range(1, n + 1), k + 1):
            total = 0
            for r, jr in enumerate(j):
                term = v[i + (jr,)] * v[j[:r] + j[r + 1:]]
                total = total - term if r % 2 == 0 else total + term
            if not is_zero(total):
                logging.debug(f"Plücker relation fails for i={i}, j={j}")
                return False
    return True


def normalized_sign(v: PluckerVector) -> int:
    require_nonzero(v)
    first = v.coords[v.support()[0]]
    return 1 if first > 0 else -1


def is_tnn(v: PluckerVector) -> bool:
    """All Plücker coordinates nonnegative after making the first nonzero one positive."""
    sign = normalized_sign(v)
    return all(sign * value >= 0 for value in v.coords.values())


def is_twisted_nonnegative(v: PluckerVector) -> bool:
    """(-1)^{inv(I, [n] - I)} Δ_I all of one sign."""
    twisted = PluckerVector(v.n, v.k, {I: (-1) ** inversions(I, complement(I, v.n)) * value
                                       for I, value in v.coords.items()})
    return is_tnn(twisted)


def matroid_of(v: PluckerVector) -> List[Subset]:
    return v.support()


def necklace_of_point(v: PluckerVector) -> GrassmannNecklace:
    """I_a is the ≤_a-lexicographic minimum of the nonzero coordinates."""
    require_nonzero(v)
    n = v.n
    necklace = []
    for a in range(1, n + 1):
        def key(I, a=a):
            return tuple(sorted((i - a) % n for i in I))
        necklace.append(min(v.support(), key=key))
    return GrassmannNecklace(necklace, n)


def _span_rank(m: ExactMatrix, positions: Sequence[int]) -> int:
    """Rank of the columns v_p for integer positions p, with v_{p+n} = ±v_p."""
    if not positions:
        return 0
    n = m.ncols
    return rref_rank(m.submatrix(range(m.nrows), [(p - 1) % n for p in positions]))[0]


def rank_matrix_of_point(m: ExactMatrix) -> CyclicRankMatrix:
    matrix_point(m)
    n = m.ncols
    values = {(i, j): _span_rank(m, range(i, j + 1)) for i in range(1, n + 1) for j in range(i, i + n)}
    return CyclicRankMatrix(n, m.nrows, values)


def perm_of_point(m: ExactMatrix) -> BoundedAffinePermutation:
    """f_X(i) = min{j >= i : v_i in span(v_{i+1}, ..., v_j)}."""
    matrix_point(m)
    n = m.ncols
    window = []
    for i in range(1, n + 1):
        value = i + n
        for j in range(i, i + n):
            if _span_rank(m, range(i, j + 1)) == _span_rank(m, range(i + 1, j + 1)):
                value = j
                break
        window.append(value)
    return from_window(window, expect_k=m.nrows)


def cyclic_shift_matrix(m: ExactMatrix) -> ExactMatrix:
    """[v_1, ..., v_n] -> [(-1)^{k-1} v_n, v_1, ..., v_{n-1}]."""
    sign = (-1) ** (m.nrows - 1)
    return ExactMatrix([(sign * r[-1],) + r[:-1] for r in m.rows], ncols=m.ncols)


def cyclic_shift(v: PluckerVector) -> PluckerVector:
    """Δ_{I+1}(χX) = Δ_I(X), indices taken mod n."""
    n = v.n
    return PluckerVector(n, v.k, {tuple(sorted(i % n + 1 for i in I)): value for I, value in v.coords.items()})


def kernel_point(v: PluckerVector) -> PluckerVector:
    """Δ_J(ker X) = (-1)^{inv(J, [n] - J)} Δ_{[n] - J}(X)."""
    require_nonzero(v)
    n = v.n
    coords = {}
    for J in subsets(n, n - v.k):
        Jc = complement(J, n)
        coords[J] = (-1) ** inversions(J, Jc) * v.coords.get(Jc, 0)
    return PluckerVector(n, n - v.k, coords)


def representative(v: PluckerVector) -> ExactMatrix:
    """k x n matrix with the identity in the columns of the lex-first basis I, entries Δ_{I, i_r -> j} / Δ_I."""
    require_nonzero(v)
    I = v.support()[0]
    base = v.coords[I]
    rows = []
    for r in range(v.k):
        row = []
        for j in range(1, v.n + 1):
            replaced = I[:r] + (j,) + I[r + 1:]
            row.append(exact_quotient(v[replaced], base))
        rows.append(row)
    return ExactMatrix(rows, ncols=v.n)
