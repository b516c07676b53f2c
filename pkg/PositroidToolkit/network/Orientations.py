import logging
from typing import Dict, List, Tuple

from PositroidToolkit.errors import InvalidNetwork, NotPerfectlyOriented
from PositroidToolkit.exact.core import exact_quotient
from PositroidToolkit.grassmann.core import PluckerVector
from PositroidToolkit.network.core import BLACK, WHITE, Edge, PlanarNetwork
from PositroidToolkit.network.Matchings import Matching

Orientation = Dict[str, Tuple[str, str]]


def check_perfect(network: PlanarNetwork, orientation: Orientation):
    """Black interior vertices need out-degree one and white interior vertices in-degree one."""
    if set(orientation) != set(network.edges):
        raise NotPerfectlyOriented("Orientation does not cover every edge")
    for e, (tail, head) in orientation.items():
        edge = network.edges[e]
        if {tail, head} != {edge.u, edge.v}:
            raise NotPerfectlyOriented(f"Edge {e} is oriented between the wrong vertices")
    for v in network.interior():
        if network.colors[v] == BLACK:
            out = sum(1 for e in network.incident(v) if orientation[e][0] == v)
            if out != 1:
                raise NotPerfectlyOriented(f"Black vertex {v} has out-degree {out}")
        else:
            into = sum(1 for e in network.incident(v) if orientation[e][1] == v)
            if into != 1:
                raise NotPerfectlyOriented(f"White vertex {v} has in-degree {into}")


def _tail_seen_from(network: PlanarNetwork, v: str, e: str, choice: str) -> bool:
    # v marks one special edge: its unique out-edge if black, its unique in-edge if white.
    if network.colors[v] == BLACK:
        return e == choice
    return e != choice


def perfect_orientations(network: PlanarNetwork) -> List[Orientation]:
    """All perfect orientations, found by choosing the special edge at each interior vertex."""
    interior = network.interior()
    choice: Dict[str, str] = {}
    found: List[Orientation] = []

    def consistent(v: str) -> bool:
        for e in network.incident(v):
            u = network.other(e, v)
            if network.is_boundary(u) or u not in choice:
                continue
            if _tail_seen_from(network, v, e, choice[v]) == _tail_seen_from(network, u, e, choice[u]):
                return False
        return True

    def orient() -> Orientation:
        out = {}
        for e, edge in network.edges.items():
            end = edge.u if not network.is_boundary(edge.u) else edge.v
            if _tail_seen_from(network, end, e, choice[end]):
                out[e] = (end, network.other(e, end))
            else:
                out[e] = (network.other(e, end), end)
        return out

    def extend(position: int):
        if position == len(interior):
            found.append(orient())
            return
        v = interior[position]
        for e in network.incident(v):
            choice[v] = e
            if consistent(v):
                extend(position + 1)
            del choice[v]

    extend(0)
    logging.debug(f"Found {len(found)} perfect orientations over {len(interior)} interior vertices")
    return found


def _require_bipartite(network: PlanarNetwork):
    if network.plabic:
        for e, edge in network.edges.items():
            if network.color(edge.u) == network.color(edge.v):
                raise InvalidNetwork(f"Edge {e} joins two vertices of the same color")


def orientation_of_matching(network: PlanarNetwork, matching: Matching) -> Orientation:
    """Matched edges run black -> white, the others white -> black."""
    _require_bipartite(network)
    out = {}
    for e, edge in network.edges.items():
        black, white = (edge.u, edge.v) if network.color(edge.u) == BLACK else (edge.v, edge.u)
        out[e] = (black, white) if e in matching else (white, black)
    return out


def matching_of_orientation(network: PlanarNetwork, orientation: Orientation) -> Matching:
    _require_bipartite(network)
    check_perfect(network, orientation)
    return frozenset(e for e, (tail, _) in orientation.items() if network.color(tail) == BLACK)


def sources(network: PlanarNetwork, orientation: Orientation) -> Tuple[int, ...]:
    return tuple(label for label in range(1, network.n + 1)
                 if orientation[network.boundary_edge(label)][0] == network.boundary[label])


def flows(network: PlanarNetwork, orientation: Orientation) -> List[frozenset]:
    """Edge sets with as many incoming as outgoing edges at every interior vertex."""
    interior = network.interior()
    state: Dict[str, bool] = {}
    found = []

    def extend(position: int):
        if position == len(interior):
            found.append(frozenset(e for e, used in state.items() if used))
            return
        v = interior[position]
        free = [e for e in network.incident(v) if e not in state]
        for mask in range(1 << len(free)):
            for bit, e in enumerate(free):
                state[e] = bool(mask >> bit & 1)
            into = sum(1 for e in network.incident(v) if state[e] and orientation[e][1] == v)
            out = sum(1 for e in network.incident(v) if state[e] and orientation[e][0] == v)
            if into == out:
                extend(position + 1)
        for e in free:
            state.pop(e, None)

    extend(0)
    return found


def flow_subset(network: PlanarNetwork, orientation: Orientation, flow: frozenset) -> Tuple[int, ...]:
    """I(F): unused sources together with used sinks."""
    source_set = set(sources(network, orientation))
    out = []
    for label in range(1, network.n + 1):
        used = network.boundary_edge(label) in flow
        if (label in source_set) != used:
            out.append(label)
    return tuple(out)


def flow_measurements(network: PlanarNetwork, orientation: Orientation) -> PluckerVector:
    """Δ_I(N, O) = Σ over flows F with I(F) = I of the product of the weights of F."""
    check_perfect(network, orientation)
    k = len(sources(network, orientation))
    coords = {}
    for flow in flows(network, orientation):
        I = flow_subset(network, orientation, flow)
        w = network.field.one() if network.field is not None else 1
        for e in sorted(flow):
            w = w * network.weight(e)
        coords[I] = coords.get(I, 0) + w
    return PluckerVector(network.n, k, coords)


def invert_black_to_white(network: PlanarNetwork, orientation: Orientation) -> PlanarNetwork:
    """Ñ: weights of edges oriented black -> white replaced by their inverses."""
    one = network.field.one() if network.field is not None else 1
    edges = {}
    for e, edge in network.edges.items():
        tail = orientation[e][0]
        if network.color(tail) == BLACK and network.color(orientation[e][1]) == WHITE:
            edges[e] = Edge(edge.u, edge.v, exact_quotient(one, edge.weight))
        else:
            edges[e] = edge
    return network.replace(edges=edges)
