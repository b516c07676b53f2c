import logging
from functools import lru_cache
from typing import Dict, FrozenSet, List, Tuple

from PositroidToolkit.config import BOUND_CACHE_SIZE
from PositroidToolkit.errors import NoMatchings, WrongK
from PositroidToolkit.grassmann.core import PluckerVector
from PositroidToolkit.network.core import WHITE, PlanarNetwork

Matching = FrozenSet[str]
Adjacency = Tuple[Tuple[str, Tuple[Tuple[str, str], ...]], ...]


def matchings(network: PlanarNetwork) -> List[Matching]:
    """Almost perfect matchings: every interior vertex covered once, boundary vertices optional.

    Only the graph matters, so networks that differ in their weights share one cached enumeration.
    """
    adjacency = tuple((v, tuple((e, network.other(e, v)) for e in network.incident(v)))
                      for v in network.interior())
    return list(matchings_of_structure(adjacency))


@lru_cache(maxsize=BOUND_CACHE_SIZE)
def matchings_of_structure(adjacency: Adjacency) -> Tuple[Matching, ...]:
    """Branches on the first uncovered interior vertex in insertion order."""
    interior = [v for v, _ in adjacency]
    neighbors = dict(adjacency)
    found: List[Matching] = []
    covered = set()
    chosen: List[str] = []

    def extend(position: int):
        while position < len(interior) and interior[position] in covered:
            position += 1
        if position == len(interior):
            found.append(frozenset(chosen))
            return
        v = interior[position]
        for e, u in neighbors[v]:
            if u in covered:
                continue
            covered.update((u, v))
            chosen.append(e)
            extend(position + 1)
            chosen.pop()
            covered.difference_update((u, v))

    extend(0)
    logging.debug(f"Enumerated {len(found)} matchings on {len(interior)} interior vertices")
    return tuple(found)


def boundary_subset(network: PlanarNetwork, matching: Matching) -> Tuple[int, ...]:
    """I(Π): boundary vertices at white vertices that are used, at black vertices that are not."""
    out = []
    for label in range(1, network.n + 1):
        used = network.boundary_edge(label) in matching
        at_white = network.colors[network.boundary_neighbor(label)] == WHITE
        if used == at_white:
            out.append(label)
    return tuple(out)


def matching_weight(network: PlanarNetwork, matching: Matching):
    w = network.field.one() if network.field is not None else 1
    for e in sorted(matching):
        w = w * network.weight(e)
    return w


def matchings_by_subset(network: PlanarNetwork) -> Dict[Tuple[int, ...], List[Matching]]:
    grouped: Dict[Tuple[int, ...], List[Matching]] = {}
    for m in matchings(network):
        grouped.setdefault(boundary_subset(network, m), []).append(m)
    return grouped


def boundary_measurements(network: PlanarNetwork) -> PluckerVector:
    """Δ_I(N) = Σ over matchings Π with I(Π) = I of the product of the matched edge weights."""
    grouped = matchings_by_subset(network)
    if not grouped:
        raise NoMatchings("The network has no almost perfect matching")
    k = network.k
    coords = {}
    for I, ms in grouped.items():
        if len(I) != k:
            raise WrongK(f"Matching boundary set {I} does not have k = {k} elements")
        total = 0
        for m in ms:
            total = total + matching_weight(network, m)
        coords[I] = total
    logging.debug(f"Boundary measurements from {sum(len(ms) for ms in grouped.values())} matchings")
    return PluckerVector(network.n, k, coords)
