"""Coordinate edge sets of reduced networks.

A set E' of edges is a coordinate set when its complement is a disconnected grove: a spanning
forest in which every tree contains exactly one boundary vertex. The weights on E', with every
other edge gauged to one, then parametrize the cell.
"""
import logging
from collections import deque
from typing import Dict, Iterable, List

import networkx as nx

from PositroidToolkit.errors import InvalidInput, InvalidNetwork
from PositroidToolkit.exact.core import exact_quotient
from PositroidToolkit.network.core import PlanarNetwork, gauge

_ROOT = ("boundary",)


def coordinate_edges(network: PlanarNetwork) -> List[str]:
    """E' as the complement of a spanning tree of the network with all boundary vertices merged.

    Edges keep file order. |E'| equals the number of faces minus one.
    """
    g = nx.MultiGraph()
    g.add_node(_ROOT)
    g.add_nodes_from(network.interior())
    for e, edge in network.edges.items():
        u = _ROOT if network.is_boundary(edge.u) else edge.u
        v = _ROOT if network.is_boundary(edge.v) else edge.v
        g.add_edge(u, v, key=e)
    if not nx.is_connected(g):
        raise InvalidNetwork("A component of the network does not reach the boundary")
    tree = {key for _, _, key in nx.minimum_spanning_edges(g, keys=True, data=False)}
    out = [e for e in network.edges if e not in tree]
    logging.debug(f"{len(out)} coordinate edges out of {len(network.edges)}")
    return out


def is_disconnected_grove(network: PlanarNetwork, coordinates: Iterable[str]) -> bool:
    coordinates = set(coordinates)
    if not network.colors:
        return not coordinates
    g = nx.MultiGraph()
    g.add_nodes_from(network.colors)
    for e, edge in network.edges.items():
        if e not in coordinates:
            g.add_edge(edge.u, edge.v, key=e)
    if not nx.is_forest(g):
        return False
    return all(sum(1 for v in component if network.is_boundary(v)) == 1
               for component in nx.connected_components(g))


def gauge_fix(network: PlanarNetwork, coordinates: Iterable[str]) -> Dict[str, object]:
    """Gauges every grove edge to weight one and reads off the weights on the coordinate edges.

    The trees are walked outward from their boundary vertex; each interior vertex is gauged once,
    fixing the edge to its parent.
    """
    coordinates = list(coordinates)
    if not is_disconnected_grove(network, coordinates):
        raise InvalidInput("The complement of the coordinate edges is not a disconnected grove")
    grove = set(network.edges) - set(coordinates)
    seen = set(network.boundary.values())
    queue = deque(network.boundary.values())
    while queue:
        parent = queue.popleft()
        for e in network.incident(parent):
            if e not in grove:
                continue
            child = network.other(e, parent)
            if child in seen:
                continue
            network = gauge(network, child, exact_quotient(1, network.weight(e)))
            seen.add(child)
            queue.append(child)
    return {e: network.weight(e) for e in coordinates}
