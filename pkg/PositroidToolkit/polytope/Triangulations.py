"""Triangulations of the k = 1 amplituhedron, the cyclic polytope conv(z_1, ..., z_n) in P^{r-1}.

A simplex is an r-subset S of [n]. Its canonical form against the measure <Y d^{r-1}Y> is

    sign(<S>) <S>^{r-1} / ∏_{s ∈ S} <S with z_s replaced by Y>,

which is positive inside the simplex and does not depend on the order of S. A triangulation is
checked by sampling: every interior point must lie in some closed simplex, and in the interior of
at most one.
"""
import logging
import random
from fractions import Fraction
from typing import List, NamedTuple, Optional, Sequence, Tuple, Union

from PositroidToolkit.config import DEFAULT_SEED, TRIANGULATION_SAMPLES
from PositroidToolkit.errors import IndexSize, SingularSimplex
from PositroidToolkit.exact.core import ExactMatrix, determinant, exact_quotient, is_zero
from PositroidToolkit.exact.RationalFunctions import RationalFunctionField
from PositroidToolkit.grassmann.core import subsets
from PositroidToolkit.polytope.core import ZMap, evenness
from PositroidToolkit.reduction.Charts import random_parameters

Simplex = Tuple[int, ...]


def _rows(Z: Union[ZMap, ExactMatrix]) -> ExactMatrix:
    return Z.Z if isinstance(Z, ZMap) else Z


def _simplex_matrix(Z: ExactMatrix, S: Sequence[int]) -> ExactMatrix:
    if len(S) != Z.ncols:
        raise IndexSize(f"A simplex in P^{Z.ncols - 1} needs {Z.ncols} vertices, got {tuple(S)}")
    if any(not 1 <= s <= Z.nrows for s in S):
        raise IndexSize(f"{tuple(S)} is not a subset of [{Z.nrows}]")
    return Z.submatrix([s - 1 for s in S], range(Z.ncols))


def _replace_row(m: ExactMatrix, i: int, row: Sequence) -> ExactMatrix:
    rows = [list(r) for r in m.rows]
    rows[i] = list(row)
    return ExactMatrix(rows, ncols=m.ncols)


def projective_field(r: int) -> RationalFunctionField:
    return RationalFunctionField([f"y{i}" for i in range(1, r + 1)])


def simplex_form(Z: Union[ZMap, ExactMatrix], S: Sequence[int], field: Optional[RationalFunctionField] = None):
    """Canonical form of the simplex with vertices z_s, s ∈ S, in the variables y1, ..., yr."""
    Z = _rows(Z)
    r = Z.ncols
    field = field if field is not None else projective_field(r)
    m = _simplex_matrix(Z, S)
    volume = determinant(m)
    if is_zero(volume):
        raise SingularSimplex(f"The vertices {tuple(S)} are linearly dependent")
    Y = [field.gen(name) for name in field.names[:r]]
    denominator = field.one()
    for i in range(r):
        denominator = denominator * determinant(_replace_row(m.map(field.lift), i, Y))
    sign = 1 if volume > 0 else -1
    return exact_quotient(field.lift(sign * Fraction(volume) ** (r - 1)), denominator)


def triangulation_form_sum(Z: Union[ZMap, ExactMatrix], simplices: Sequence[Sequence[int]],
                           field: Optional[RationalFunctionField] = None):
    Z = _rows(Z)
    field = field if field is not None else projective_field(Z.ncols)
    total = field.zero()
    for S in simplices:
        total = total + simplex_form(Z, S, field)
    return total


def cyclic_facets(n: int, r: int) -> List[Simplex]:
    """Facets of the cyclic polytope: the (r-1)-subsets of [n] satisfying Gale's evenness condition."""
    return [F for F in subsets(n, r - 1) if evenness(F, n)]


def fan_triangulation(n: int, r: int, apex: int = 1) -> List[Simplex]:
    """Cone from one vertex over every facet that does not contain it."""
    if not 1 <= apex <= n:
        raise IndexSize(f"Apex {apex} is not in [{n}]")
    return sorted(tuple(sorted((apex,) + F)) for F in cyclic_facets(n, r) if apex not in F)


class TriangulationReport(NamedTuple):
    simplices: int
    points: int
    uncovered: int
    overlaps: int

    @property
    def ok(self) -> bool:
        return self.uncovered == 0 and self.overlaps == 0


def barycentric(Z: ExactMatrix, S: Sequence[int], point: Sequence[Fraction]) -> List[Fraction]:
    """μ with point = Σ μ_s z_s, by Cramer's rule."""
    m = _simplex_matrix(Z, S)
    volume = determinant(m)
    if is_zero(volume):
        raise SingularSimplex(f"The vertices {tuple(S)} are linearly dependent")
    return [Fraction(determinant(_replace_row(m, i, point))) / Fraction(volume) for i in range(len(S))]


def _combination(Z: ExactMatrix, weights: Sequence[Fraction], indices: Sequence[int]) -> List[Fraction]:
    return [sum((Fraction(w) * Z[i - 1, c] for w, i in zip(weights, indices)), Fraction(0))
            for c in range(Z.ncols)]


def barycenter(Z: Union[ZMap, ExactMatrix], S: Sequence[int]) -> List[Fraction]:
    Z = _rows(Z)
    return _combination(Z, [1] * len(S), S)


def k1_triangulation_check(Z: Union[ZMap, ExactMatrix], simplices: Sequence[Sequence[int]],
                           samples: int = TRIANGULATION_SAMPLES, rng: Optional[random.Random] = None,
                           points: Sequence[Sequence[Fraction]] = ()) -> TriangulationReport:
    """Samples points of conv(z_1, ..., z_n) and counts coverage and overlap violations.

    The points are random positive combinations of all z_i, the barycenter of every simplex and
    any extra probe points given.
    """
    Z = _rows(Z)
    rng = rng if rng is not None else random.Random(DEFAULT_SEED)
    every = list(range(1, Z.nrows + 1))
    probes = [_combination(Z, random_parameters(rng, Z.nrows), every) for _ in range(samples)]
    probes += [barycenter(Z, S) for S in simplices]
    probes += [list(p) for p in points]
    uncovered = overlaps = 0
    for point in probes:
        closed = interior = 0
        for S in simplices:
            mu = barycentric(Z, S, point)
            if all(x >= 0 for x in mu):
                closed += 1
                if all(x > 0 for x in mu):
                    interior += 1
        if not closed:
            uncovered += 1
        if interior > 1:
            overlaps += 1
    report = TriangulationReport(len(simplices), len(probes), uncovered, overlaps)
    logging.info(f"Triangulation check: {report.points} points, {uncovered} uncovered, {overlaps} overlaps")
    return report
