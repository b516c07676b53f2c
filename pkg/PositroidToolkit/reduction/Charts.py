import logging
import random
from fractions import Fraction
from functools import lru_cache
from typing import List, Optional, Sequence, Tuple

from PositroidToolkit.affine.core import BoundedAffinePermutation, dimension, enumerate_bound, remove_fixed_point, \
    right_multiply
from PositroidToolkit.config import BOUND_CACHE_SIZE, DENOMINATOR_RANGE, PARAMETER_RANGE
from PositroidToolkit.errors import DimensionMismatch, InvalidInput, WrongCell
from PositroidToolkit.exact.core import ExactMatrix
from PositroidToolkit.exact.RationalFunctions import RationalFunctionField
from PositroidToolkit.grassmann.core import perm_of_point
from PositroidToolkit.network.core import PlanarNetwork
from PositroidToolkit.reduction.core import (BRIDGE, LOLLIPOP_BLACK, LOLLIPOP_WHITE, ReductionStep, assemble_matrix,
                                             assemble_network, choose_step, reduce_point)


class CellChart:
    """Positive parametrization of one positroid cell by bridge weights.

    Attributes
    ----------
    f : BoundedAffinePermutation
        The cell.
    steps : list of ReductionStep
        Reduction sequence of every point of the cell; bridge steps carry the parameter names.
    params : list of str
        Bridge parameters t1, ..., td in reduction order.
    field : RationalFunctionField
        Field of the parameters.
    graph : PlanarNetwork
        Reduced network of the cell with symbolic bridge weights.
    """

    def __init__(self, f: BoundedAffinePermutation, steps: List[ReductionStep]):
        self.f = f
        self.named_steps = list(steps)
        self.params = [step.a for step in steps if step.kind == BRIDGE]
        self.field = RationalFunctionField(self.params)
        self.steps = [step._replace(a=self.field.gen(step.a)) if step.kind == BRIDGE else step for step in steps]
        self.graph = assemble_network(self.steps, self.field)

    @property
    def dimension(self) -> int:
        return len(self.params)

    def numeric_steps(self, values: Sequence) -> List[ReductionStep]:
        if len(values) != len(self.params):
            raise DimensionMismatch(f"Chart of {self.f} takes {len(self.params)} parameters, got {len(values)}")
        lookup = dict(zip(self.params, values))
        out = []
        for step in self.named_steps:
            if step.kind == BRIDGE:
                out.append(step._replace(a=lookup[step.a]))
            else:
                out.append(step)
        return out


def chart_steps(f: BoundedAffinePermutation) -> List[ReductionStep]:
    """Replays the reduction on the permutation alone; bridge parameters are named t1, t2, ..."""
    steps = []
    count = 0
    while f.n:
        kind, i = choose_step(f)
        if kind == BRIDGE:
            count += 1
            steps.append(ReductionStep(kind, i, f"t{count}"))
            f = right_multiply(f, i)
        else:
            steps.append(ReductionStep(kind, i))
            f = remove_fixed_point(f, i)
    return steps


@lru_cache(maxsize=BOUND_CACHE_SIZE)
def graph_for(f: BoundedAffinePermutation) -> CellChart:
    chart = CellChart(f, chart_steps(f))
    logging.debug(f"Chart for {f}: {chart.dimension} parameters")
    return chart


def _check_values(values: Sequence):
    for x in values:
        if not x > 0:
            raise InvalidInput(f"Chart parameters must be positive, got {x}")


def parametrize(chart: CellChart, values: Sequence) -> ExactMatrix:
    """Point of the positive cell with the given bridge weights."""
    values = [Fraction(x) for x in values]
    _check_values(values)
    return assemble_matrix(chart.numeric_steps(values))


def chart_network(chart: CellChart, values: Sequence) -> PlanarNetwork:
    """The chart graph with numeric bridge weights."""
    values = [Fraction(x) for x in values]
    _check_values(values)
    return assemble_network(chart.numeric_steps(values))


def coordinates(chart: CellChart, m: ExactMatrix) -> List:
    """Bridge weights of a point of the positive cell, inverse to parametrize."""
    f = perm_of_point(m)
    if f != chart.f:
        raise WrongCell(f"Point lies in the cell {f}, not {chart.f}")
    steps, _ = reduce_point(m)
    return [step.a for step in steps if step.kind == BRIDGE]


def degenerate(chart: CellChart, index: int, values: Optional[Sequence] = None) -> BoundedAffinePermutation:
    """Permutation of the boundary point reached by sending one bridge weight to zero."""
    values = [Fraction(x) for x in (values or [1] * chart.dimension)]
    if not 0 <= index < chart.dimension:
        raise InvalidInput(f"Parameter index {index} out of range for {chart.dimension} parameters")
    values[index] = Fraction(0)
    return perm_of_point(assemble_matrix(chart.numeric_steps(values)))


def random_parameters(rng: random.Random, count: int) -> List[Fraction]:
    return [Fraction(rng.randint(*PARAMETER_RANGE), rng.randint(*DENOMINATOR_RANGE)) for _ in range(count)]


def sample_tnn_point(k: int, n: int, rng: random.Random,
                     f: Optional[BoundedAffinePermutation] = None) -> Tuple[BoundedAffinePermutation, List[Fraction], ExactMatrix]:
    """Random point of a positive cell, of f or of a uniformly chosen cell of Gr(k, n)."""
    if f is None:
        f = rng.choice(enumerate_bound(k, n))
    chart = graph_for(f)
    values = random_parameters(rng, chart.dimension)
    return f, values, parametrize(chart, values)


def check_dimension(chart: CellChart) -> bool:
    return chart.dimension == dimension(chart.f)


def random_steps(rng: random.Random, k: int, n: int, bridges: int) -> List[ReductionStep]:
    """Random bridge word on a lollipop network with k white leaves among n boundary vertices.

    Bridge sites are drawn uniformly from 1..n (n -> 1 included) and weights from random_parameters.
    """
    if not 0 <= k <= n or bridges < 0:
        raise InvalidInput(f"Cannot draw {bridges} bridges on a lollipop network of Gr({k}, {n})")
    if bridges and n < 2:
        raise InvalidInput(f"Bridges need at least two boundary vertices, got n = {n}")
    whites = set(rng.sample(range(1, n + 1), k))
    steps = [ReductionStep(BRIDGE, rng.randint(1, n), a) for a in random_parameters(rng, bridges)]
    # assemble_network replays in reverse, so the leaves go in at 1, 2, ..., n
    steps += [ReductionStep(LOLLIPOP_WHITE if i in whites else LOLLIPOP_BLACK, i) for i in range(n, 0, -1)]
    return steps


def random_network(rng: random.Random, k: int, n: int, bridges: int) -> PlanarNetwork:
    """Random planar bipartite network with positive weights whose boundary measurement lies in Gr(k, n)."""
    network = assemble_network(random_steps(rng, k, n, bridges))
    logging.debug(f"Random network in Gr({k}, {n}): {len(network.edges)} edges from {bridges} bridges")
    return network
