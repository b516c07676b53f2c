from typing import Dict, List

from PositroidToolkit.affine.core import BoundedAffinePermutation, from_window
from PositroidToolkit.network.core import BLACK, Dart, PlanarNetwork


def next_trip_dart(network: PlanarNetwork, dart: Dart) -> Dart:
    """Turn maximally right at black vertices and maximally left at white ones."""
    v = dart.head
    if network.colors[v] == BLACK:
        e = network.pred(v, dart.edge)
    else:
        e = network.succ(v, dart.edge)
    return Dart(e, v, network.other(e, v))


def trip_from(network: PlanarNetwork, label: int) -> List[Dart]:
    b = network.boundary[label]
    e = network.boundary_edge(label)
    dart = Dart(e, b, network.other(e, b))
    trip = [dart]
    while not network.is_boundary(dart.head):
        dart = next_trip_dart(network, dart)
        trip.append(dart)
    return trip


def trips(network: PlanarNetwork) -> Dict[int, List[Dart]]:
    """Boundary trips by starting label."""
    return {label: trip_from(network, label) for label in range(1, network.n + 1)}


def cyclic_trips(network: PlanarNetwork) -> List[List[Dart]]:
    """Closed trips that never reach the boundary."""
    seen = {dart for trip in trips(network).values() for dart in trip}
    out = []
    for start in network.darts():
        if start in seen or network.is_boundary(start.tail):
            continue
        cycle = []
        dart = start
        while dart not in seen:
            seen.add(dart)
            cycle.append(dart)
            dart = next_trip_dart(network, dart)
        out.append(cycle)
    return out


def trip_permutation(network: PlanarNetwork) -> Dict[int, int]:
    return {label: network.labels[trip[-1].head] for label, trip in trips(network).items()}


def perm_of_graph(network: PlanarNetwork) -> BoundedAffinePermutation:
    """f_G: the trip permutation lifted into (i, i + n].

    A trip returning to its start i gives a loop f(i) = i at a black neighbor and i + n at a white one.
    """
    n = network.n
    window = []
    for i, j in sorted(trip_permutation(network).items()):
        if j == i:
            window.append(i if network.colors[network.boundary_neighbor(i)] == BLACK else i + n)
        else:
            window.append(j if j > i else j + n)
    return from_window(window)


def _is_lollipop_edge(network: PlanarNetwork, e: str) -> bool:
    edge = network.edges[e]
    for end in (edge.u, edge.v):
        if network.is_boundary(end):
            return network.degree(network.other(e, end)) == 1
    return False


def is_reduced(network: PlanarNetwork) -> bool:
    """Reducedness of a leafless network by the trip criteria.

    Rejects interior leaves, closed trips, trips that run along one edge twice (apart from a
    lollipop) and pairs of trips meeting in two edges in the same order.
    """
    for v in network.interior():
        if network.degree(v) == 1 and not network.is_boundary(network.other(network.incident(v)[0], v)):
            return False
    if cyclic_trips(network):
        return False
    edge_lists = {}
    for label, trip in trips(network).items():
        edges = [dart.edge for dart in trip]
        if len(set(edges)) != len(edges):
            repeated = {e for e in edges if edges.count(e) > 1}
            if not all(_is_lollipop_edge(network, e) for e in repeated):
                return False
        edge_lists[label] = edges
    labels = sorted(edge_lists)
    for x in labels:
        for y in labels:
            if y <= x:
                continue
            first, second = edge_lists[x], edge_lists[y]
            shared = [e for e in dict.fromkeys(first) if e in second]
            for p in range(len(shared)):
                for q in range(p + 1, len(shared)):
                    e, f = shared[p], shared[q]
                    if second.index(e) < second.index(f):
                        return False
    return True
