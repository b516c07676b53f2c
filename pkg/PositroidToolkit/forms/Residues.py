"""Residues of canonical forms along codimension-one boundaries.

Sending one bridge weight t_j to zero lands on a boundary cell f'. The residue of ∏ dlog t along
t_j = 0 is ∏_{i ≠ j} dlog t_i, which should be ± ω_{f'}.
"""
import logging
import random
from typing import Optional, Tuple

from PositroidToolkit.affine.core import BoundedAffinePermutation, dimension
from PositroidToolkit.config import DEFAULT_SEED, RESIDUE_SAMPLES
from PositroidToolkit.errors import WrongCell
from PositroidToolkit.exact.RationalFunctions import RationalFunctionField
from PositroidToolkit.forms.core import FormDensity, agree_up_to_sign, default_chart, dlog_density, form_density
from PositroidToolkit.grassmann.core import plucker_of
from PositroidToolkit.reduction.Charts import degenerate, graph_for, random_parameters
from PositroidToolkit.reduction.core import BRIDGE, assemble_matrix


def boundary_parameter(f: BoundedAffinePermutation, f_prime: BoundedAffinePermutation) -> int:
    """Index of the first bridge weight of the chart of f whose vanishing lands in f'."""
    chart = graph_for(f)
    if dimension(f_prime) != chart.dimension - 1:
        raise WrongCell(f"{f_prime} is not a codimension-one boundary of {f}")
    for j in range(chart.dimension):
        if degenerate(chart, j) == f_prime:
            return j
    raise WrongCell(f"No bridge weight of the chart of {f} degenerates to {f_prime}")


def residue_density(f: BoundedAffinePermutation, f_prime: BoundedAffinePermutation) -> Tuple[int, FormDensity]:
    """Res_{t_j = 0} ω_f as a density on f', written in the remaining bridge weights."""
    chart = graph_for(f)
    j = boundary_parameter(f, f_prime)
    removed = chart.params[j]
    params = [t for t in chart.params if t != removed]
    field = RationalFunctionField(params)
    steps = []
    for step in chart.named_steps:
        if step.kind == BRIDGE:
            step = step._replace(a=field.zero() if step.a == removed else field.gen(step.a))
        steps.append(step)
    v = plucker_of(assemble_matrix(steps))
    target = default_chart(f_prime)
    coords, density = dlog_density(field, params, v, target)
    logging.debug(f"Residue of ω_{f} at {removed} = 0 lands on {f_prime}")
    return j, FormDensity(target, coords, field, density)


def residue_check(f: BoundedAffinePermutation, f_prime: BoundedAffinePermutation, samples: int = RESIDUE_SAMPLES,
                  rng: Optional[random.Random] = None) -> bool:
    """Compares Res ω_f with ω_{f'} at random points of the positive part of f'.

    Both densities are taken against the same chart coordinates, so they must agree up to one
    global sign.
    """
    rng = rng if rng is not None else random.Random(DEFAULT_SEED)
    chart = graph_for(f)
    j, residue = residue_density(f, f_prime)
    target = form_density(f_prime, residue.chart, residue.coords)
    first, second = [], []
    for _ in range(samples):
        values = random_parameters(rng, chart.dimension - 1)
        point = assemble_matrix(chart.numeric_steps(values[:j] + [0] + values[j:]))
        try:
            expected = target.at(point)
        except WrongCell as exc:
            logging.warning(f"Skipping a sample off the positive part of {f_prime}: {exc}")
            continue
        first.append(residue.evaluate(dict(zip(residue.field.names, values))))
        second.append(expected)
    holds = bool(first) and agree_up_to_sign(first, second)
    logging.info(f"Residue of ω_{f} on {f_prime} over {len(first)} samples: {holds}")
    return holds
