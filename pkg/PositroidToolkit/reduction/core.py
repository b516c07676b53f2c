import logging
from typing import List, NamedTuple, Optional, Tuple

from PositroidToolkit.affine.core import BoundedAffinePermutation
from PositroidToolkit.affine.Necklaces import necklace_of
from PositroidToolkit.errors import InvalidInput, NotTNN
from PositroidToolkit.exact.core import ExactMatrix, exact_quotient, rref_rank
from PositroidToolkit.exact.RationalFunctions import RationalFunctionField
from PositroidToolkit.grassmann.Chevalley import apply_x
from PositroidToolkit.grassmann.core import is_tnn, perm_of_point, plucker_of
from PositroidToolkit.network.core import BLACK, WHITE, PlanarNetwork, insert_bridge, insert_lollipop

LOLLIPOP_BLACK = "lollipop-black"
LOLLIPOP_WHITE = "lollipop-white"
BRIDGE = "bridge"


class ReductionStep(NamedTuple):
    kind: str
    i: int
    a: object = None

    def __str__(self) -> str:
        if self.kind == BRIDGE:
            return f"bridge({self.i}, {self.a})"
        return f"{self.kind}({self.i})"


def choose_step(f: BoundedAffinePermutation) -> Tuple[str, int]:
    """Next reduction site for a permutation: fixed points first, then the smallest i with f(i) < f(i+1)."""
    for i in range(1, f.n + 1):
        if f.is_loop(i):
            return LOLLIPOP_BLACK, i
        if f.is_coloop(i):
            return LOLLIPOP_WHITE, i
    for i in range(1, f.n + 1):
        if f(i) < f(i + 1):
            return BRIDGE, i
    raise InvalidInput(f"{f} has no reduction site")


def remove_coloop_column(m: ExactMatrix, i: int) -> ExactMatrix:
    """Point of Gr(k-1, n-1) with Δ_J equal to Δ_{J ∪ {i}} of m up to one global sign.

    Column i must be a coloop, so e_i lies in the row space of m.
    """
    _, reduced, pivots = rref_rank(m)
    p = pivots.index(i - 1)
    rows = [r for t, r in enumerate(reduced.rows) if t != p and t < len(pivots)]
    out = []
    for r in rows:
        out.append([-x if j < i - 1 else x for j, x in enumerate(r) if j != i - 1])
    return ExactMatrix(out, ncols=m.ncols - 1)


def add_coloop_column(m: ExactMatrix, i: int) -> ExactMatrix:
    """Inverse of remove_coloop_column: Δ_{J ∪ {i}} of the result equals Δ_J of m."""
    n = m.ncols + 1
    top = [1 if j == i - 1 else 0 for j in range(n)]
    rows = [top]
    for r in m.rows:
        r = [-x if j < i - 1 else x for j, x in enumerate(r)]
        rows.append(r[:i - 1] + [0] + r[i - 1:])
    return ExactMatrix(rows, ncols=n)


def bridge_parameter(m: ExactMatrix, f: BoundedAffinePermutation, i: int):
    """a = Δ_{I_{i+1}} / Δ_{I_{i+1} - {i+1} ∪ {i}}, read off the Grassmann necklace of f."""
    n = f.n
    v = plucker_of(m)
    top = necklace_of(f)[i % n + 1]
    lowered = (top - {i % n + 1}) | {i}
    return exact_quotient(v[tuple(sorted(top))], v[tuple(sorted(lowered))])


def reduce_step(m: ExactMatrix) -> Tuple[ReductionStep, ExactMatrix]:
    """One step of the reduction of a totally nonnegative point.

    Parameters
    ----------
    m : ExactMatrix
        Full rank k x n representative with n >= 1.

    Returns
    -------
    tuple
        (step, smaller point). Lollipop steps drop column i; a bridge step returns m * x_i(-a).
    """
    if not is_tnn(plucker_of(m)):
        raise NotTNN("The point has Plücker coordinates of both signs")
    f = perm_of_point(m)
    kind, i = choose_step(f)
    if kind == LOLLIPOP_BLACK:
        return ReductionStep(kind, i), m.delete_column(i - 1)
    if kind == LOLLIPOP_WHITE:
        return ReductionStep(kind, i), remove_coloop_column(m, i)
    a = bridge_parameter(m, f, i)
    if not a > 0:
        raise NotTNN(f"Bridge parameter {a} at {i} is not positive")
    return ReductionStep(kind, i, a), apply_x(m, i, -a)


def reduce_point(m: ExactMatrix) -> Tuple[List[ReductionStep], ExactMatrix]:
    """Runs reduce_step down to the empty point and returns all steps in order."""
    steps = []
    while m.ncols:
        step, m = reduce_step(m)
        steps.append(step)
        logging.debug(f"Reduction step {step}, {m.nrows}x{m.ncols} left")
    return steps, m


def assemble_network(steps: List[ReductionStep], field: Optional[RationalFunctionField] = None) -> PlanarNetwork:
    """Network whose boundary measurement undoes the steps: lollipops and bridges in reverse order."""
    network = PlanarNetwork(0, {}, {}, {}, {}, field=field)
    for step in reversed(steps):
        if step.kind == LOLLIPOP_BLACK:
            network = insert_lollipop(network, step.i, BLACK)
        elif step.kind == LOLLIPOP_WHITE:
            network = insert_lollipop(network, step.i, WHITE)
        else:
            network = insert_bridge(network, step.i, step.a)
    return network


def assemble_matrix(steps: List[ReductionStep]) -> ExactMatrix:
    """Representative of the point the steps were read from (same row space, not the same matrix)."""
    m = ExactMatrix([], ncols=0)
    for step in reversed(steps):
        if step.kind == LOLLIPOP_BLACK:
            m = m.insert_column(step.i - 1, [0] * m.nrows)
        elif step.kind == LOLLIPOP_WHITE:
            m = add_coloop_column(m, step.i)
        else:
            m = apply_x(m, step.i, step.a)
    return m


def factorize(m: ExactMatrix) -> PlanarNetwork:
    """Planar bipartite network with positive weights representing a totally nonnegative point."""
    steps, _ = reduce_point(m)
    bridges = sum(1 for s in steps if s.kind == BRIDGE)
    logging.info(f"Factorized a {m.nrows}x{m.ncols} point into {bridges} bridges and "
                 f"{len(steps) - bridges} lollipops")
    return assemble_network(steps)
