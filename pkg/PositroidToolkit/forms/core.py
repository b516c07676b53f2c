"""Canonical forms of positroid cells as densities in affine charts.

The chart Ω_I of Gr(k, n) is the set where Δ_I ≠ 0, with coordinates
x_{a,b} = Δ_{I with i_a replaced by b} / Δ_I for a = 1..k and b outside I. On a cell of
dimension d we pick d of these coordinates S with a nonsingular Jacobian and write

    ω = density · ∏_{(a,b) ∈ S} dx_{a,b}.

For a parametrization by positive weights t_1, ..., t_d, ω = ∏ dlog t_i gives
density = 1 / (∏ t_i · det ∂x_S / ∂t). All equalities between forms hold up to sign.
"""
import logging
import random
import re
from fractions import Fraction
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from PositroidToolkit.affine.core import BoundedAffinePermutation, identity
from PositroidToolkit.affine.Positroids import positroid_of
from PositroidToolkit.errors import ChartDegenerate, InvalidInput
from PositroidToolkit.exact.core import ExactMatrix, determinant, exact_quotient, is_zero, minor, rref_rank
from PositroidToolkit.exact.RationalFunctions import RationalFunctionField
from PositroidToolkit.grassmann.core import PluckerVector, plucker_of
from PositroidToolkit.network.core import PlanarNetwork, with_weights
from PositroidToolkit.network.Matchings import boundary_measurements
from PositroidToolkit.reduction.Charts import coordinates, graph_for, parametrize, random_parameters
from PositroidToolkit.reduction.core import assemble_matrix

Coordinate = Tuple[int, int]

_IDENTIFIER = re.compile(r"^[A-Za-z_][A-Za-z0-9_]*$")


class FormDensity:
    """A top-degree form on a cell, as a density against ∏ dx_{a,b} over chart coordinates.

    Attributes
    ----------
    chart : tuple of int
        The subset I of the chart Ω_I.
    coords : list of (a, b)
        Chart coordinates x_{a,b} the density is taken against, in this order.
    field : RationalFunctionField
        Field of the variables the density is written in.
    density : field element
    locate : callable or None
        Maps a point of the cell (ExactMatrix) to values of the variables.
    """

    def __init__(self, chart: Sequence[int], coords: List[Coordinate], field: RationalFunctionField, density,
                 locate: Optional[Callable[[ExactMatrix], Dict[str, Fraction]]] = None):
        self.chart = tuple(chart)
        self.coords = list(coords)
        self.field = field
        self.density = density
        self.locate = locate

    @property
    def dimension(self) -> int:
        return len(self.coords)

    def evaluate(self, values: Dict[str, Fraction]) -> Fraction:
        return self.field.evaluate(self.density, values)

    def at(self, point: ExactMatrix) -> Fraction:
        if self.locate is None:
            raise InvalidInput("This density has no inverse map; evaluate it at parameter values")
        return self.evaluate(self.locate(point))

    def to_text(self) -> str:
        return self.field.format(self.density)

    def __repr__(self) -> str:
        return f"FormDensity(chart={self.chart}, dim={self.dimension}, {self.to_text()})"


def chart_coordinates(v: PluckerVector, chart: Sequence[int]) -> List[Tuple[Coordinate, object]]:
    """(a, b) -> x_{a,b} for the chart Δ_I ≠ 0, in lexicographic order of (a, b)."""
    I = tuple(chart)
    base = v[I]
    if is_zero(base):
        raise ChartDegenerate(f"Δ_{I} vanishes at the point")
    out = []
    for a in range(1, v.k + 1):
        for b in range(1, v.n + 1):
            if b in I:
                continue
            replaced = I[:a - 1] + (b,) + I[a:]
            out.append(((a, b), exact_quotient(v[replaced], base)))
    return out


def coordinate_name(c: Coordinate) -> str:
    return f"x{c[0]}_{c[1]}"


def dlog_density(field: RationalFunctionField, params: Sequence[str], v: PluckerVector, chart: Sequence[int],
                 coords: Optional[List[Coordinate]] = None) -> Tuple[List[Coordinate], object]:
    """Density of ∏ dlog t against ∏ dx_S for a point v(t) depending on the parameters.

    Without coords, S is the first set of coordinates (lexicographically) on which the Jacobian
    has full rank.
    """
    try:
        values = dict(chart_coordinates(v, chart))
    except ChartDegenerate as exc:
        raise ChartDegenerate(f"Δ_{tuple(chart)} vanishes identically on the cell") from exc
    order = list(values)
    rows = [[field.partial(field.lift(values[c]), t) for t in params] for c in order]
    jacobian = ExactMatrix(rows, ncols=len(params))
    d = len(params)
    if coords is None:
        rank, _, pivots = rref_rank(jacobian.transpose())
        if rank < d:
            raise ChartDegenerate(f"The parametrization has rank {rank} < {d} in the chart {tuple(chart)}")
        coords = [order[p] for p in pivots]
    elif len(coords) != d:
        raise InvalidInput(f"{len(coords)} coordinates for a {d}-dimensional cell")
    square = ExactMatrix([rows[order.index(c)] for c in coords], ncols=d)
    det = determinant(square) if d else field.one()
    if is_zero(det):
        raise ChartDegenerate(f"Coordinates {coords} are not local coordinates on the cell")
    product = field.one()
    for t in params:
        product = product * field.gen(t)
    return coords, exact_quotient(field.one(), product * det)


def default_chart(f: BoundedAffinePermutation) -> Tuple[int, ...]:
    """Lexicographically first basis of the positroid of f."""
    return min(positroid_of(f).bases)


def form_density(f: BoundedAffinePermutation, chart: Optional[Sequence[int]] = None,
                 coords: Optional[List[Coordinate]] = None) -> FormDensity:
    """ω_f in bridge coordinates; points of the positive cell are located by reducing them."""
    cell = graph_for(f)
    chart = tuple(chart) if chart is not None else default_chart(f)
    v = plucker_of(assemble_matrix(cell.steps))
    coords, density = dlog_density(cell.field, cell.params, v, chart, coords)

    def locate(point: ExactMatrix) -> Dict[str, Fraction]:
        return dict(zip(cell.params, coordinates(cell, point)))

    logging.debug(f"Form density of {f} in the chart {chart}: {len(coords)} coordinates")
    return FormDensity(chart, coords, cell.field, density, locate)


def coordinate_network(network: PlanarNetwork, edges: Sequence[str]) -> Tuple[PlanarNetwork, List[str]]:
    """Copy with a variable on each edge of E' and weight one everywhere else."""
    names = [e if _IDENTIFIER.match(e) else "w_" + "".join(ch if ch.isalnum() else "_" for ch in e)
             for e in edges]
    field = RationalFunctionField(names)
    weights = {e: field.one() for e in network.edges}
    weights.update({e: field.gen(name) for e, name in zip(edges, names)})
    return with_weights(network, weights, field), names


def network_density(network: PlanarNetwork, edges: Sequence[str], chart: Optional[Sequence[int]] = None,
                    coords: Optional[List[Coordinate]] = None) -> FormDensity:
    """ω_G = ∏_{e ∈ E'} dlog t_e for the network with weights t_e on E' and one elsewhere.

    The density is written in the edge variables; pair it with gauge_fix to evaluate it at a
    numeric network.
    """
    sym, names = coordinate_network(network, edges)
    v = boundary_measurements(sym)
    chart = tuple(chart) if chart is not None else v.support()[0]
    coords, density = dlog_density(sym.field, names, v, chart, coords)
    return FormDensity(chart, coords, sym.field, density)


def top_cell_density(k: int, n: int) -> FormDensity:
    """ω = 1 / (Δ_{12..k} Δ_{23..k+1} ... Δ_{n1..k-1}) in the chart Δ_{12..k} = 1."""
    chart = tuple(range(1, k + 1))
    coords = [(a, b) for a in range(1, k + 1) for b in range(k + 1, n + 1)]
    field = RationalFunctionField([coordinate_name(c) for c in coords])
    rows = []
    for a in range(1, k + 1):
        row = [field.one() if b == a else field.zero() for b in range(1, k + 1)]
        row += [field.gen(coordinate_name((a, b))) for b in range(k + 1, n + 1)]
        rows.append(row)
    m = ExactMatrix(rows, ncols=n)
    product = field.one()
    if 0 < k < n:
        for i in range(n):
            cols = sorted((i + t) % n for t in range(k))
            product = product * minor(m, range(k), cols)
    density = exact_quotient(field.one(), product)

    def locate(point: ExactMatrix) -> Dict[str, Fraction]:
        return {coordinate_name(c): x for c, x in chart_coordinates(plucker_of(point), chart)}

    return FormDensity(chart, coords, field, density, locate)


def top_cell_identity(k: int, n: int) -> bool:
    """Exact check that ω_id equals ±1 / ∏ Δ_{cyclic intervals}, both written in bridge coordinates."""
    cell = graph_for(identity(k, n))
    K = cell.field
    v = plucker_of(assemble_matrix(cell.steps))
    chart = tuple(range(1, k + 1))
    _, density = dlog_density(K, cell.params, v, chart)
    top = K.one()
    for i in range(n):
        J = tuple(sorted((i + t) % n + 1 for t in range(k)))
        top = top * exact_quotient(K.lift(v[chart]), K.lift(v[J]))
    holds = K.equal(density, top) or K.equal(density, -top)
    logging.info(f"Top cell form identity for Gr({k},{n}): {holds}")
    return holds


def agree_up_to_sign(first: Sequence[Fraction], second: Sequence[Fraction]) -> bool:
    """Whether first[i] = s * second[i] for one sign s and every i."""
    signs = set()
    for a, b in zip(first, second):
        if is_zero(b):
            if not is_zero(a):
                return False
            continue
        ratio = Fraction(a) / Fraction(b)
        if ratio not in (1, -1):
            return False
        signs.add(ratio)
    return len(signs) <= 1


def sample_cell_points(f: BoundedAffinePermutation, count: int, rng: random.Random) -> List[ExactMatrix]:
    cell = graph_for(f)
    return [parametrize(cell, random_parameters(rng, cell.dimension)) for _ in range(count)]
