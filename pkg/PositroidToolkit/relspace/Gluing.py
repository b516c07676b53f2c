import itertools
import logging

from PositroidToolkit.errors import InvalidInput, InvalidNetwork, NonUnitBoundaryWeights
from PositroidToolkit.exact.core import is_zero
from PositroidToolkit.grassmann.core import PluckerVector
from PositroidToolkit.grassmann.DirectSum import ZERO
from PositroidToolkit.network.core import Edge
from PositroidToolkit.relspace.core import BicoloredNetwork


def _check_pair(n: int, a: int, b: int):
    if a == b or not (1 <= a <= n and 1 <= b <= n):
        raise InvalidInput(f"Cannot glue boundary vertices {a} and {b} of [{n}]")


def _relabel(labels, removed):
    kept = [label for label in labels if label not in removed]
    return {label: position for position, label in enumerate(kept, start=1)}


def glue(network: BicoloredNetwork, a: int, b: int) -> BicoloredNetwork:
    """Joins the boundary vertices a and b into one interior edge of weight one.

    Both boundary edges must have weight one. The remaining boundary keeps its order, relabeled
    1..n-2, and k drops by one.
    """
    _check_pair(network.n, a, b)
    ea, eb = network.boundary_edge(a), network.boundary_edge(b)
    for label, e in ((a, ea), (b, eb)):
        if not is_zero(network.edges[e].weight - 1):
            raise NonUnitBoundaryWeights(f"Boundary edge {e} at {label} does not have weight one")
    if ea == eb:
        raise InvalidNetwork(f"Boundary vertices {a} and {b} are joined to each other")
    x, y = network.boundary_neighbor(a), network.boundary_neighbor(b)
    colors, edges = dict(network.colors), dict(network.edges)
    for label in (a, b):
        del colors[network.boundary[label]]
    del edges[ea]
    del edges[eb]
    g = network.fresh_id("g")
    edges[g] = Edge(x, y, network.one())
    relabel = _relabel(range(1, network.n + 1), (a, b))
    boundary = {relabel[label]: v for label, v in network.boundary.items() if label in relabel}
    logging.debug(f"Glued boundary vertices {a} and {b} along edge {g}")
    return network.replace(colors=colors, boundary=boundary, edges=edges, n=network.n - 2)


def glue_pluckers(v: PluckerVector, a: int, b: int):
    """Plücker coordinates after gluing: Δ_J = Δ_{aJ} + Δ_{bJ} for (k-1)-subsets J avoiding a, b.

    Δ_{aJ} puts the column of a first. Returns ZERO when every coordinate vanishes.
    """
    _check_pair(v.n, a, b)
    if v.k == 0:
        raise InvalidInput("Cannot glue a point of Gr(0, n)")
    relabel = _relabel(range(1, v.n + 1), (a, b))
    coords = {}
    for J in itertools.combinations(sorted(relabel), v.k - 1):
        value = v[(a,) + J] + v[(b,) + J]
        if not is_zero(value):
            coords[tuple(relabel[j] for j in J)] = value
    if not coords:
        return ZERO
    return PluckerVector(v.n - 2, v.k - 1, coords)


def rotate_network(network: BicoloredNetwork) -> BicoloredNetwork:
    """Scales the boundary edge at n by (-1)^(k-1), then relabels i -> i + 1 and n -> 1.

    The relation space of the result is the cyclic shift of the original one.
    """
    n = network.n
    if n == 0:
        return network
    sign = (-1) ** (network.k - 1)
    edges = dict(network.edges)
    e = network.boundary_edge(n)
    edge = edges[e]
    edges[e] = Edge(edge.u, edge.v, edge.weight * sign)
    boundary = {label % n + 1: v for label, v in network.boundary.items()}
    return network.replace(boundary=boundary, edges=edges)
