import logging
from collections import Counter
from typing import Dict, FrozenSet, Iterable, List, Tuple

import networkx as nx

from PositroidToolkit.errors import DimensionMismatch, InvalidPairing
from PositroidToolkit.exact.core import is_zero
from PositroidToolkit.network.core import WHITE, PlanarNetwork
from PositroidToolkit.network.Matchings import boundary_measurements, matchings
from PositroidToolkit.tl.core import NonCrossingPairing, compatible_pairings, pairings


class TLSubgraph:
    """Union of two almost perfect matchings, with edge multiplicities.

    Attributes
    ----------
    edges : frozenset of (edge id, multiplicity)
        Multiplicity 2 marks a doubled edge.
    pairing : NonCrossingPairing
        Arcs are the boundary paths, T the boundary points at doubled or unused edges that
        belong to both matched subsets.
    cycles : int
        Number of interior cycles.
    preimages : int
        Number of ordered pairs of matchings with this union.
    """

    def __init__(self, edges: FrozenSet[Tuple[str, int]], pairing: NonCrossingPairing, cycles: int, preimages: int):
        self.edges = edges
        self.pairing = pairing
        self.cycles = cycles
        self.preimages = preimages

    @property
    def paths(self) -> int:
        return len(self.pairing.arcs)

    def weight(self, network: PlanarNetwork):
        """2^cycles times the product of the edge weights, doubled edges squared."""
        w = network.field.one() if network.field is not None else 1
        for e, multiplicity in sorted(self.edges):
            w = w * network.weight(e) ** multiplicity
        return w * 2 ** self.cycles

    def __repr__(self) -> str:
        return f"TLSubgraph({self.pairing}, cycles={self.cycles}, preimages={self.preimages})"


def _decompose(network: PlanarNetwork, counts: Dict[str, int]) -> Tuple[NonCrossingPairing, int]:
    g = nx.MultiGraph()
    for e, multiplicity in counts.items():
        if multiplicity == 1:
            edge = network.edges[e]
            g.add_edge(edge.u, edge.v, key=e)
    arcs, cycles = [], 0
    for component in nx.connected_components(g):
        ends = sorted(network.labels[v] for v in component if network.is_boundary(v))
        if not ends:
            cycles += 1
        elif len(ends) == 2:
            arcs.append(tuple(ends))
        else:
            raise InvalidPairing(f"Component with boundary vertices {ends} is not a path")
    on_paths = {i for arc in arcs for i in arc}
    T = []
    for label in range(1, network.n + 1):
        if label in on_paths:
            continue
        doubled = counts.get(network.boundary_edge(label), 0) == 2
        if doubled == (network.colors[network.boundary_neighbor(label)] == WHITE):
            T.append(label)
    return NonCrossingPairing(network.n, arcs, T), cycles


def tl_subgraphs(network: PlanarNetwork) -> List[TLSubgraph]:
    """All Temperley-Lieb subgraphs, found as unions of ordered pairs of matchings.

    Each union is kept once; its preimage count is 2^(cycles + paths).
    """
    ms = matchings(network)
    grouped: Counter = Counter()
    for first in ms:
        for second in ms:
            counts = Counter(first)
            counts.update(second)
            grouped[frozenset(counts.items())] += 1
    out = []
    for edges, preimages in sorted(grouped.items(), key=lambda item: sorted(item[0])):
        pairing, cycles = _decompose(network, dict(edges))
        out.append(TLSubgraph(edges, pairing, cycles, preimages))
    logging.debug(f"{len(out)} Temperley-Lieb subgraphs from {len(ms)} matchings")
    return out


def immanants(network: PlanarNetwork, subgraphs: Iterable[TLSubgraph] = None) -> Dict[NonCrossingPairing, object]:
    """F_{tau,T}(N) for every pairing carried by some TL subgraph; the others vanish."""
    if subgraphs is None:
        subgraphs = tl_subgraphs(network)
    out: Dict[NonCrossingPairing, object] = {}
    for sigma in subgraphs:
        out[sigma.pairing] = out.get(sigma.pairing, 0) + sigma.weight(network)
    return out


def immanant(network: PlanarNetwork, pairing: NonCrossingPairing):
    """Temperley-Lieb immanant F_{tau,T}(N): sum of wt over the TL subgraphs with that boundary pairing."""
    if pairing.n != network.n:
        raise DimensionMismatch(f"Pairing on [{pairing.n}] for a network with n = {network.n}")
    return immanants(network).get(pairing, 0)


def all_immanants(network: PlanarNetwork, k: int) -> Dict[NonCrossingPairing, object]:
    """F_{tau,T}(N) over all of A_{k,n}, zeros included."""
    found = immanants(network)
    return {p: found.get(p, 0) for p in pairings(k, network.n)}


def product_identity_check(network: PlanarNetwork, I: Iterable[int], J: Iterable[int],
                           subgraphs: Iterable[TLSubgraph] = None) -> bool:
    """Whether Delta_I(N) Delta_J(N) equals the sum of F_{tau, I ∩ J}(N) over the pairings compatible with I, J."""
    I, J = tuple(sorted(I)), tuple(sorted(J))
    v = boundary_measurements(network)
    if len(I) != v.k or len(J) != v.k:
        raise DimensionMismatch(f"{I} and {J} are not both {v.k}-subsets")
    found = immanants(network, subgraphs)
    rhs = 0
    for p in compatible_pairings(I, J, network.n):
        rhs = rhs + found.get(p, 0)
    holds = is_zero(v[I] * v[J] - rhs)
    if not holds:
        logging.warning(f"Product identity fails for {I}, {J}")
    return holds
