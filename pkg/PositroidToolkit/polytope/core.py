"""The map Z: Gr(k, n) -> Gr(k, r), positivity witnesses and the ψ substitution.

Z is an n x r matrix with rows z_1, ..., z_n. A point X (k x n) maps to the row span of X·Z,
undefined when X·Z drops rank. For a k x r matrix Y and an m-subset I of [n] with r = k + m,
Δ(Y, Z_I) is the determinant of Y stacked over the rows of Z labeled by I.
"""
import itertools
import logging
import random
import re
from fractions import Fraction
from typing import List, NamedTuple, Optional, Sequence, Tuple, Union

from PositroidToolkit.affine.core import BoundedAffinePermutation
from PositroidToolkit.affine.Positroids import positroid_of
from PositroidToolkit.errors import DimensionMismatch, IndexSize, InvalidInput, RankDeficient
from PositroidToolkit.exact.core import ExactMatrix, determinant, is_zero, minor, rref_rank
from PositroidToolkit.grassmann.Chevalley import apply_x
from PositroidToolkit.grassmann.core import (PluckerVector, complement, normalized_sign, plucker_of, representative,
                                             subsets)
from PositroidToolkit.reduction.Charts import random_parameters, sample_tnn_point

Subset = Tuple[int, ...]


class ExceptionalPoint:
    """Returned by zmap when X·Z has rank below k, i.e. X lies in the exceptional locus E_Z."""

    def __repr__(self) -> str:
        return "Exceptional"

    def __bool__(self) -> bool:
        return False


EXCEPTIONAL = ExceptionalPoint()


class ZMap:
    """A full-rank n x r matrix Z, optionally with a witness M (r x k) of positivity.

    Attributes
    ----------
    Z : ExactMatrix
        The n x r matrix.
    witness : ExactMatrix or None
        M with all k x k minors of Z·M positive.
    """

    def __init__(self, Z: ExactMatrix, witness: Optional[ExactMatrix] = None):
        rank, _, _ = rref_rank(Z)
        if rank != Z.ncols or Z.ncols > Z.nrows:
            raise RankDeficient(f"Z must be n x r of rank r <= n, got rank {rank} for {Z.nrows}x{Z.ncols}")
        if witness is not None and not verify_witness(Z, witness):
            raise InvalidInput("The witness does not make every k x k minor of Z·M positive")
        self.Z = Z
        self.witness = witness

    @property
    def n(self) -> int:
        return self.Z.nrows

    @property
    def r(self) -> int:
        return self.Z.ncols

    def __repr__(self) -> str:
        return f"ZMap(n={self.n}, r={self.r}, witness={self.witness is not None})"


def verify_witness(Z: ExactMatrix, M: ExactMatrix) -> bool:
    """Whether every k x k minor of the n x k matrix Z·M is positive."""
    if Z.ncols != M.nrows:
        raise DimensionMismatch(f"Z has {Z.ncols} columns but M has {M.nrows} rows")
    k = M.ncols
    if k > Z.ncols:
        raise DimensionMismatch(f"Witness width k = {k} exceeds r = {Z.ncols}")
    product = Z * M
    cols = list(range(k))
    for rows in itertools.combinations(range(Z.nrows), k):
        if not minor(product, rows, cols) > 0:
            logging.debug(f"Witness fails on rows {[i + 1 for i in rows]}")
            return False
    return True


def _longest_word(n: int) -> List[int]:
    return [i for top in range(n - 1, 0, -1) for i in range(1, top + 1)]


def sample_positive_Z(n: int, r: int, rng: random.Random, k: Optional[int] = None) -> ZMap:
    """Random Z with positive maximal minors.

    Z^T is the top r rows of a totally positive upper unitriangular matrix, the product of
    x_i(b) over a reduced word of the longest permutation. The top k rows of the same matrix are
    again totally positive, so M = [I_k; 0] is a witness for every k <= r.
    """
    if not 0 < r <= n:
        raise DimensionMismatch(f"Need 0 < r <= n, got r = {r}, n = {n}")
    word = _longest_word(n)
    m = ExactMatrix([[1 if i == j else 0 for j in range(n)] for i in range(r)])
    for i, b in zip(word, random_parameters(rng, len(word))):
        m = apply_x(m, i, b)
    Z = m.transpose()
    witness = None
    if k is not None:
        if not 0 < k <= r:
            raise DimensionMismatch(f"Need 0 < k <= r, got k = {k}, r = {r}")
        witness = ExactMatrix([[1 if i == j else 0 for j in range(k)] for i in range(r)])
    return ZMap(Z, witness)


def zmap(X: ExactMatrix, Z: Union[ZMap, ExactMatrix]) -> Union[PluckerVector, ExceptionalPoint]:
    """Plücker coordinates of the row span of X·Z, or EXCEPTIONAL when it has rank below k."""
    Z = Z.Z if isinstance(Z, ZMap) else Z
    if X.ncols != Z.nrows:
        raise DimensionMismatch(f"X has {X.ncols} columns but Z has {Z.nrows} rows")
    Y = X * Z
    rank, _, _ = rref_rank(Y)
    if rank < X.nrows:
        return EXCEPTIONAL
    return plucker_of(Y)


def _as_matrix(Y: Union[PluckerVector, ExactMatrix]) -> ExactMatrix:
    return representative(Y) if isinstance(Y, PluckerVector) else Y


def delta_YZ(Y: Union[PluckerVector, ExactMatrix], Z: Union[ZMap, ExactMatrix], I: Sequence[int]):
    """Δ(Y, Z_I): determinant of the r x r matrix with Y on top and the rows z_i, i ∈ I, below.

    A PluckerVector Y is replaced by its standard representative, which fixes the overall scale.
    """
    Z = Z.Z if isinstance(Z, ZMap) else Z
    Y = _as_matrix(Y)
    I = list(I)
    if Y.ncols != Z.ncols:
        raise DimensionMismatch(f"Y has {Y.ncols} columns but Z has {Z.ncols}")
    if Y.nrows + len(I) != Z.ncols:
        raise IndexSize(f"|I| = {len(I)} must equal r - k = {Z.ncols - Y.nrows}")
    if any(not 1 <= i <= Z.nrows for i in I):
        raise IndexSize(f"{I} is not a subset of [{Z.nrows}]")
    return determinant(Y.stack(Z.submatrix([i - 1 for i in I], range(Z.ncols))))


class PluckerTerm(NamedTuple):
    coeff: Fraction
    factors: Tuple[Subset, ...]


class PluckerPolynomial:
    """A polynomial in Plücker coordinates Δ_J, every J of the same size.

    Attributes
    ----------
    terms : list of PluckerTerm
    size : int
        Common size |J| of the indices.
    """

    def __init__(self, terms: Sequence[PluckerTerm]):
        self.terms = [PluckerTerm(Fraction(c), tuple(tuple(sorted(J)) for J in factors)) for c, factors in terms]
        sizes = {len(J) for term in self.terms for J in term.factors}
        if len(sizes) > 1:
            raise IndexSize(f"Plücker coordinates of different sizes {sorted(sizes)}")
        self.size = sizes.pop() if sizes else 0

    def evaluate(self, value) -> Fraction:
        """Substitutes value(J) for every Δ_J."""
        total = Fraction(0)
        for coeff, factors in self.terms:
            term = coeff
            for J in factors:
                term *= value(J)
            total += term
        return total

    def to_text(self) -> str:
        parts = []
        for coeff, factors in self.terms:
            sign = "-" if coeff < 0 else "+"
            magnitude = abs(coeff)
            body = "".join("[" + ",".join(map(str, J)) + "]" for J in factors)
            parts.append(f"{sign} {body}" if magnitude == 1 else f"{sign} {magnitude}*{body}")
        text = " ".join(parts)
        return text[2:] if text.startswith("+ ") else text

    def __repr__(self) -> str:
        return f"PluckerPolynomial({self.to_text()})"


_TERM = re.compile(r"\s*([+-]?)\s*(\d+(?:/\d+)?)?\s*\*?\s*((?:\[[\d,\s]+\]\s*)+)")
_FACTOR = re.compile(r"\[([\d,\s]+)\]")


def parse_plucker_polynomial(text: str) -> PluckerPolynomial:
    """Parses sums like "[1,2,4][3,5,6] - [1,2,3][4,5,6]" or "2*[1,3][2,4]"."""
    terms = []
    position = 0
    text = text.strip()
    while position < len(text):
        match = _TERM.match(text, position)
        if not match or match.end() == position:
            raise InvalidInput(f"Cannot parse Plücker polynomial at {text[position:]!r}")
        sign, coeff, body = match.groups()
        value = Fraction(coeff) if coeff else Fraction(1)
        if sign == "-":
            value = -value
        factors = [tuple(int(x) for x in f.replace(",", " ").split()) for f in _FACTOR.findall(body)]
        terms.append(PluckerTerm(value, tuple(factors)))
        position = match.end()
    if not terms:
        raise InvalidInput("Empty Plücker polynomial")
    return PluckerPolynomial(terms)


def psi_substitute(p: PluckerPolynomial, Y: Union[PluckerVector, ExactMatrix],
                   Z: Union[ZMap, ExactMatrix]) -> Fraction:
    """ψ(p)(Y, Z): every Δ_J, |J| = k + ℓ with ℓ = n - r, becomes Δ(Y, Z_{[n] - J})."""
    Z = Z.Z if isinstance(Z, ZMap) else Z
    Y = _as_matrix(Y)
    n, r, k = Z.nrows, Z.ncols, Y.nrows
    if p.size != k + n - r:
        raise IndexSize(f"Plücker indices have size {p.size}, expected k + n - r = {k + n - r}")
    cache = {}

    def value(J):
        if J not in cache:
            cache[J] = delta_YZ(Y, Z, complement(J, n))
        return cache[J]

    return p.evaluate(value)


def psi_vanishes(J: Sequence[int], f: BoundedAffinePermutation) -> bool:
    """Whether ψ(Δ_J) vanishes on Z(Π_f) for generic Z: no basis of the positroid of f lies in J."""
    J = set(J)
    return not any(set(B) <= J for B in positroid_of(f).bases)


def evenness(I: Sequence[int], n: int) -> bool:
    """For all i < i' outside I, an even number of elements of I lie strictly between them."""
    I = set(I)
    outside = [i for i in range(1, n + 1) if i not in I]
    return all(sum(1 for x in I if i < x < j) % 2 == 0 for i, j in itertools.combinations(outside, 2))


class SignProbeReport(NamedTuple):
    subset: Subset
    even: bool
    samples: int
    positive: int
    negative: int
    zero: int
    exceptional: int

    @property
    def fixed_sign(self) -> bool:
        return not (self.positive and self.negative)


def _nonnegative_representative(X: ExactMatrix) -> ExactMatrix:
    if normalized_sign(plucker_of(X)) > 0:
        return X
    return ExactMatrix([[-x for x in X.rows[0]]] + [list(r) for r in X.rows[1:]], ncols=X.ncols)


def evenness_sign_probe(Z: Union[ZMap, ExactMatrix], I: Sequence[int], k: int, samples: int,
                        rng: random.Random) -> SignProbeReport:
    """Signs of Δ(Y, Z_I) at Y = X·Z for random totally nonnegative X ∈ Gr(k, n).

    Each X is a point of a uniformly chosen cell, scaled so that its Plücker coordinates are
    nonnegative.
    """
    Z = Z.Z if isinstance(Z, ZMap) else Z
    I = tuple(sorted(I))
    n = Z.nrows
    if k + len(I) != Z.ncols:
        raise IndexSize(f"|I| = {len(I)} must equal r - k = {Z.ncols - k}")
    positive = negative = zero = exceptional = 0
    for _ in range(samples):
        _, _, X = sample_tnn_point(k, n, rng)
        X = _nonnegative_representative(X)
        Y = X * Z
        if rref_rank(Y)[0] < k:
            exceptional += 1
            continue
        value = delta_YZ(Y, Z, I)
        if is_zero(value):
            zero += 1
        elif value > 0:
            positive += 1
        else:
            negative += 1
    report = SignProbeReport(I, evenness(I, n), samples, positive, negative, zero, exceptional)
    logging.info(f"Sign probe for I = {I}: +{positive} -{negative} 0:{zero}, fixed sign {report.fixed_sign}")
    return report


def even_subsets(n: int, m: int) -> List[Subset]:
    return [I for I in subsets(n, m) if evenness(I, n)]
