"""Local moves on bicolored networks that leave the relation space unchanged."""
import logging
from typing import Dict

from PositroidToolkit.errors import DegenerateMove, InvalidInput, PatternMismatch
from PositroidToolkit.exact.core import exact_quotient, is_zero
from PositroidToolkit.network.core import BLACK, WHITE, Edge, opposite
from PositroidToolkit.relspace.core import BicoloredNetwork

__all__ = ["gauge", "remove_degree_two", "glue_same_color", "square_move", "reduce_parallel",
           "remove_leaf", "remove_dipole", "remove_loop"]


def _interior(network: BicoloredNetwork, v: str):
    if v not in network.colors or network.is_boundary(v):
        raise PatternMismatch(f"{v} is not an interior vertex")


def gauge(network: BicoloredNetwork, u: str, c) -> BicoloredNetwork:
    """Multiplies w(u, v) by c for every edge at u; a loop at u is unchanged."""
    _interior(network, u)
    if is_zero(c):
        raise InvalidInput("Gauge factor must be nonzero")
    c = network.lift(c)
    edges = dict(network.edges)
    for e in network.incident(u):
        edge = edges[e]
        if edge.u == edge.v:
            continue
        weight = edge.weight * c if edge.u == u else exact_quotient(edge.weight, c)
        edges[e] = Edge(edge.u, edge.v, weight)
    return network.replace(edges=edges)


def remove_degree_two(network: BicoloredNetwork, u: str) -> BicoloredNetwork:
    """Replaces v1 - u - v2 by one edge with w(v1, v2) = ±w(v1, u) w(u, v2), + when u is black."""
    _interior(network, u)
    halves = network.half_edges(u)
    if len(halves) != 2 or halves[0][0] == halves[1][0]:
        raise PatternMismatch(f"{u} is not a degree-two vertex without loops")
    (e1, _), (e2, _) = halves
    v1, v2 = network.other(e1, u), network.other(e2, u)
    weight = network.weight_from(e1, v1) * network.weight_from(e2, u)
    if network.colors[u] == WHITE:
        weight = -weight
    colors, edges = dict(network.colors), dict(network.edges)
    del colors[u]
    del edges[e1]
    del edges[e2]
    edges[e1] = Edge(v1, v2, weight)
    return network.replace(colors=colors, edges=edges)


def glue_same_color(network: BicoloredNetwork, e: str) -> BicoloredNetwork:
    """Contracts an edge between two distinct interior vertices of the same color.

    The edge is gauged to weight one at its first end u, removed, and v merged into u. When both
    are white the remaining half-edges that were at u change sign.
    """
    edge = network.edges[e]
    u, v = edge.u, edge.v
    _interior(network, u)
    _interior(network, v)
    if u == v or network.colors[u] != network.colors[v]:
        raise PatternMismatch(f"Edge {e} does not join two distinct vertices of one color")
    network = gauge(network, u, exact_quotient(network.one(), network.edges[e].weight))
    white = network.colors[u] == WHITE
    colors, edges = dict(network.colors), {}
    del colors[v]
    for f, other in network.edges.items():
        if f == e:
            continue
        at_u = (other.u == u) + (other.v == u)
        a = u if other.u == v else other.u
        b = u if other.v == v else other.v
        weight = other.weight
        if white and at_u == 1:
            weight = -weight
        edges[f] = Edge(a, b, weight)
    return network.replace(colors=colors, edges=edges)


def _edge_between(network: BicoloredNetwork, x: str, y: str) -> str:
    found = [e for e in network.incident(x) if network.other(e, x) == y and x != y]
    if len(found) != 1:
        raise PatternMismatch(f"Expected one edge between {x} and {y}, found {len(found)}")
    return found[0]


def square_move(network: BicoloredNetwork, b1: str, w2: str, b2: str, w1: str) -> BicoloredNetwork:
    """Square move on the cycle b1 - w2 - b2 - w1 of trivalent vertices.

    With w_ij = w(w_j, b_i) and W = w11 w22 - w12 w21, the colors swap and the square edges get
    w'_11 = w22 / W, w'_12 = -w12 / W, w'_21 = -w21 / W, w'_22 = w11 / W where the new white vertex
    sits where b_j was and the new black one where w_i was. The outer edges keep their weights.
    """
    square = (b1, w2, b2, w1)
    if len(set(square)) != 4:
        raise PatternMismatch("Square vertices must be distinct")
    for x, color in zip(square, (BLACK, WHITE, BLACK, WHITE)):
        _interior(network, x)
        if network.colors[x] != color:
            raise PatternMismatch(f"{x} is not {color}")
        if network.degree(x) != 3:
            raise PatternMismatch(f"{x} is not trivalent")
    top, right = _edge_between(network, b1, w2), _edge_between(network, w2, b2)
    bottom, left = _edge_between(network, b2, w1), _edge_between(network, w1, b1)
    w11 = network.weight_from(left, w1)
    w12 = network.weight_from(top, w2)
    w21 = network.weight_from(bottom, w1)
    w22 = network.weight_from(right, w2)
    W = w11 * w22 - w12 * w21
    if is_zero(W):
        raise DegenerateMove("Square move with w11 w22 = w12 w21")
    colors = dict(network.colors)
    for x in square:
        colors[x] = opposite(colors[x])
    edges: Dict[str, Edge] = dict(network.edges)
    # new white at the old black positions b1, b2; new black at w1, w2
    edges[top] = Edge(b1, w2, exact_quotient(-w21, W))
    edges[left] = Edge(b1, w1, exact_quotient(w22, W))
    edges[right] = Edge(b2, w2, exact_quotient(w11, W))
    edges[bottom] = Edge(b2, w1, exact_quotient(-w12, W))
    logging.debug(f"Square move at {square}")
    return network.replace(colors=colors, edges=edges)


def reduce_parallel(network: BicoloredNetwork, e: str, f: str) -> BicoloredNetwork:
    """Two edges between a white and a black vertex become one; weights from white to black add."""
    first, second = network.edges[e], network.edges[f]
    if e == f or {first.u, first.v} != {second.u, second.v} or first.u == first.v:
        raise PatternMismatch(f"Edges {e} and {f} are not parallel")
    ends = {network.colors[first.u], network.colors[first.v]}
    if ends != {BLACK, WHITE}:
        raise PatternMismatch(f"Edges {e} and {f} do not join a white and a black vertex")
    white = first.u if network.colors[first.u] == WHITE else first.v
    black = network.other(e, white)
    total = network.weight_from(e, white) + network.weight_from(f, white)
    if is_zero(total):
        raise DegenerateMove(f"Parallel edges {e} and {f} cancel")
    edges = dict(network.edges)
    del edges[f]
    edges[e] = Edge(white, black, total)
    return network.replace(edges=edges)


def _detach(network: BicoloredNetwork, v: str, color: str, colors, edges, skip=()):
    """Cuts every half-edge at v (outside skip) onto a new leaf of the given color."""
    taken = set()
    for e, side in network.half_edges(v):
        if e in skip:
            continue
        leaf = network.fresh_id("L", taken)
        taken.add(leaf)
        colors[leaf] = color
        edge = edges[e]
        if side == 0:
            edges[e] = Edge(leaf, edge.v, edge.weight)
        else:
            edges[e] = Edge(edge.u, leaf, edge.weight)


def remove_leaf(network: BicoloredNetwork, u: str) -> BicoloredNetwork:
    """An interior leaf u on an interior vertex v of the other color: both go, and every other
    half-edge of v ends on a new leaf of u's color."""
    _interior(network, u)
    if network.degree(u) != 1:
        raise PatternMismatch(f"{u} is not a leaf")
    stem = network.incident(u)[0]
    v = network.other(stem, u)
    _interior(network, v)
    if network.colors[v] == network.colors[u]:
        raise PatternMismatch(f"Leaf {u} and its neighbor {v} have the same color")
    colors, edges = dict(network.colors), dict(network.edges)
    del edges[stem]
    _detach(network, v, network.colors[u], colors, edges, skip=(stem,))
    del colors[u]
    del colors[v]
    return network.replace(colors=colors, edges=edges)


def remove_dipole(network: BicoloredNetwork, e: str) -> BicoloredNetwork:
    """Deletes an edge joining two interior leaves of opposite colors."""
    edge = network.edges[e]
    for x in (edge.u, edge.v):
        _interior(network, x)
        if network.degree(x) != 1:
            raise PatternMismatch(f"Edge {e} is not a dipole")
    if network.colors[edge.u] == network.colors[edge.v]:
        raise PatternMismatch(f"Dipole {e} has two {network.colors[edge.u]} ends")
    colors, edges = dict(network.colors), dict(network.edges)
    del colors[edge.u]
    del colors[edge.v]
    del edges[e]
    return network.replace(colors=colors, edges=edges)


def remove_loop(network: BicoloredNetwork, e: str) -> BicoloredNetwork:
    """Removes a loop at u together with u; u's other half-edges end on leaves of the opposite color.

    The loop weight must differ from 1 at a black vertex and from -1 at a white one.
    """
    edge = network.edges[e]
    u = edge.u
    if edge.v != u:
        raise PatternMismatch(f"Edge {e} is not a loop")
    _interior(network, u)
    forbidden = 1 if network.colors[u] == BLACK else -1
    if is_zero(edge.weight - forbidden):
        raise DegenerateMove(f"Loop {e} at a {network.colors[u]} vertex has weight {forbidden}")
    colors, edges = dict(network.colors), dict(network.edges)
    del edges[e]
    _detach(network, u, opposite(network.colors[u]), colors, edges, skip=(e,))
    del colors[u]
    return network.replace(colors=colors, edges=edges)
