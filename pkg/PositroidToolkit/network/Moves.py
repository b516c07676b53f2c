"""Local moves on planar networks.

Each move returns a new network whose boundary measurement agrees with the old one up to a
global scalar.
"""
import logging
from typing import Iterable, Sequence, Tuple

from PositroidToolkit.errors import PatternMismatch
from PositroidToolkit.exact.core import exact_quotient
from PositroidToolkit.network.core import (BLACK, WHITE, Edge, PlanarNetwork, fresh_name, gauge)

__all__ = ["square_move", "contract_degree_two", "merge_parallel", "remove_leaf", "remove_dipole", "gauge"]


def _replace_run(rotation: Sequence[str], run: Sequence[str], new: Sequence[str]) -> Tuple[str, ...]:
    """Replaces a cyclically consecutive run of edges by new ones."""
    rotation = tuple(rotation)
    size = len(rotation)
    for start in range(size):
        if all(rotation[(start + t) % size] == run[t] for t in range(len(run))):
            rest = [rotation[(start + len(run) + t) % size] for t in range(size - len(run))]
            return tuple(new) + tuple(rest)
    raise PatternMismatch(f"Edges {list(run)} are not consecutive in rotation {list(rotation)}")


def _one(network: PlanarNetwork):
    return network.field.one() if network.field is not None else 1


def _find_square(network: PlanarNetwork, vertices: Iterable[str]):
    wanted = set(vertices)
    for face in network.faces():
        if len(face) == 4 and {d.tail for d in face} == wanted:
            return face
    raise PatternMismatch(f"No square face on the vertices {sorted(wanted)}")


def _insert_white_on_leg(network: PlanarNetwork, colors, edges, rotation, leg: str, black: str):
    """Splits a leg from a black vertex to the boundary with a degree-two white vertex."""
    b = network.other(leg, black)
    u = fresh_name(colors, edges, "U")
    colors[u] = WHITE
    outer = fresh_name(colors, edges, "s")
    edges[outer] = Edge(u, b, _one(network))
    edges[leg] = Edge(black, u, edges[leg].weight)
    rotation[u] = (leg, outer)
    return u, outer


def square_move(network: PlanarNetwork, vertices: Iterable[str]) -> PlanarNetwork:
    """Square move on a face B1, W2, B2, W1 whose black vertices are trivalent.

    The legs of B1 and B2 are gauged to weight one first; a leg ending on the boundary gets a white
    degree-two vertex inserted. With D = ac + bd the move replaces B1 and B2 by two black vertices
    joined to W1 and W2 by unit edges and to the leg ends by a/D, b/D, c/D, d/D. The measurement
    divides by D.
    """
    face = _find_square(network, vertices)
    start = next(t for t, dart in enumerate(face) if network.colors[dart.tail] == BLACK)
    darts = face[start:] + face[:start]
    (a, b1, w2), (d, _, b2), (c, _, w1), (b, _, _) = ((x.edge, x.tail, x.head) for x in darts)
    if network.colors[w2] != WHITE or network.colors[w1] != WHITE or network.colors[b2] != BLACK:
        raise PatternMismatch("Square face does not alternate in color")
    for v in (b1, b2):
        if network.degree(v) != 3:
            raise PatternMismatch(f"Black vertex {v} of the square is not trivalent")

    colors, edges, rotation = dict(network.colors), dict(network.edges), dict(network.rotation)
    legs = []
    for black, used in ((b1, {a, b}), (b2, {c, d})):
        leg = next(e for e in network.incident(black) if e not in used)
        end = network.other(leg, black)
        if network.is_boundary(end):
            end, _ = _insert_white_on_leg(network, colors, edges, rotation, leg, black)
        elif network.colors[end] != WHITE:
            raise PatternMismatch(f"Leg {leg} of {black} does not end at a white vertex")
        legs.append((leg, end))
    (leg1, u1), (leg2, u2) = legs

    # gauge both legs to one
    for black, leg in ((b1, leg1), (b2, leg2)):
        factor = exact_quotient(_one(network), edges[leg].weight)
        for e in rotation[black]:
            edges[e] = Edge(edges[e].u, edges[e].v, edges[e].weight * factor)
    wa, wb, wc, wd = (edges[e].weight for e in (a, b, c, d))
    D = wa * wc + wb * wd

    for e in (a, b, c, d, leg1, leg2):
        del edges[e]
    for v in (b1, b2):
        del colors[v]
        del rotation[v]
    c1 = fresh_name(colors, edges, "C")
    colors[c1] = BLACK
    c2 = fresh_name(colors, edges, "C")
    colors[c2] = BLACK
    names = {}
    for key, u, v, w in (("g1", c1, w1, _one(network)), ("a", c1, u2, exact_quotient(wa, D)),
                         ("d", c1, u1, exact_quotient(wd, D)), ("g2", c2, w2, _one(network)),
                         ("b", c2, u2, exact_quotient(wb, D)), ("c", c2, u1, exact_quotient(wc, D))):
        names[key] = fresh_name(colors, edges, "m")
        edges[names[key]] = Edge(u, v, w)
    rotation[c1] = (names["d"], names["g1"], names["a"])
    rotation[c2] = (names["g2"], names["c"], names["b"])
    rotation[w1] = _replace_run(rotation[w1], (c, b), (names["g1"],))
    rotation[w2] = _replace_run(rotation[w2], (a, d), (names["g2"],))
    rotation[u1] = _replace_run(rotation[u1], (leg1,), (names["d"], names["c"]))
    rotation[u2] = _replace_run(rotation[u2], (leg2,), (names["b"], names["a"]))
    logging.debug(f"Square move at {b1}, {w2}, {b2}, {w1}")
    return network.replace(colors=colors, edges=edges, rotation=rotation)


def contract_degree_two(network: PlanarNetwork, v: str) -> PlanarNetwork:
    """Removes a degree-two interior vertex, merging its neighbors or reattaching a boundary vertex."""
    if network.is_boundary(v) or network.degree(v) != 2:
        raise PatternMismatch(f"{v} is not an interior vertex of degree two")
    e1, e2 = network.rotation[v]
    u, u2 = network.other(e1, v), network.other(e2, v)
    if u == u2:
        raise PatternMismatch(f"Both edges at {v} go to {u}")
    if network.is_boundary(u) and network.is_boundary(u2):
        raise PatternMismatch(f"{v} joins two boundary vertices")
    colors, edges, rotation = dict(network.colors), dict(network.edges), dict(network.rotation)
    w1, w2 = edges[e1].weight, edges[e2].weight
    del colors[v]
    del rotation[v]
    del edges[e1]
    del edges[e2]

    if network.is_boundary(u) or network.is_boundary(u2):
        (b, eb, wb), (x, ex, wx) = ((u, e1, w1), (u2, e2, w2)) if network.is_boundary(u) else ((u2, e2, w2), (u, e1, w1))
        edges[eb] = Edge(b, x, exact_quotient(wx, wb))
        rotation[x] = _replace_run(rotation[x], (ex,), (eb,))
        return network.replace(colors=colors, edges=edges, rotation=rotation)

    if any({edges[e].u, edges[e].v} == {u, u2} for e in edges):
        raise PatternMismatch(f"Merging {u} and {u2} would create a loop")
    for e in network.incident(u):
        if e != e1:
            edges[e] = Edge(edges[e].u, edges[e].v, edges[e].weight * w2)
    spliced = []
    rot2 = network.rotation[u2]
    at = rot2.index(e2)
    for t in range(1, len(rot2)):
        e = rot2[(at + t) % len(rot2)]
        edge = edges[e]
        edges[e] = Edge(u if edge.u == u2 else edge.u, u if edge.v == u2 else edge.v, edge.weight * w1)
        spliced.append(e)
    rotation[u] = _replace_run(rotation[u], (e1,), spliced)
    del colors[u2]
    del rotation[u2]
    return network.replace(colors=colors, edges=edges, rotation=rotation)


def merge_parallel(network: PlanarNetwork, e: str, f: str) -> PlanarNetwork:
    """Replaces two parallel edges bounding a digon by one edge carrying the sum of weights."""
    edge, other = network.edges[e], network.edges[f]
    if e == f or {edge.u, edge.v} != {other.u, other.v}:
        raise PatternMismatch(f"Edges {e} and {f} are not parallel")
    for end in (edge.u, edge.v):
        if f not in (network.succ(end, e), network.pred(end, e)):
            raise PatternMismatch(f"Edges {e} and {f} are not adjacent at {end}")
    edges = dict(network.edges)
    edges[e] = Edge(edge.u, edge.v, edge.weight + other.weight)
    del edges[f]
    rotation = {v: tuple(x for x in rot if x != f) for v, rot in network.rotation.items()}
    return network.replace(edges=edges, rotation=rotation)


def remove_leaf(network: PlanarNetwork, v: str) -> PlanarNetwork:
    """Deletes an interior leaf and its neighbor; boundary vertices left behind get lollipops."""
    if network.is_boundary(v) or network.degree(v) != 1:
        raise PatternMismatch(f"{v} is not an interior leaf")
    stem = network.incident(v)[0]
    u = network.other(stem, v)
    if network.is_boundary(u):
        raise PatternMismatch(f"{v} is a lollipop")
    colors, edges, rotation = dict(network.colors), dict(network.edges), dict(network.rotation)
    for x in (u, v):
        del colors[x]
        del rotation[x]
    del edges[stem]
    for e in network.incident(u):
        if e == stem:
            continue
        x = network.other(e, u)
        if network.is_boundary(x):
            leaf = fresh_name(colors, edges, "L")
            colors[leaf] = network.colors[v]
            edges[e] = Edge(x, leaf, _one(network))
            rotation[leaf] = (e,)
        else:
            del edges[e]
            rotation[x] = tuple(y for y in rotation[x] if y != e)
    return network.replace(colors=colors, edges=edges, rotation=rotation)


def remove_dipole(network: PlanarNetwork, e: str) -> PlanarNetwork:
    """Deletes an edge whose two interior ends have no other edges."""
    edge = network.edges[e]
    if any(network.is_boundary(x) or network.degree(x) != 1 for x in (edge.u, edge.v)):
        raise PatternMismatch(f"Edge {e} is not a dipole")
    colors, edges, rotation = dict(network.colors), dict(network.edges), dict(network.rotation)
    for x in (edge.u, edge.v):
        del colors[x]
        del rotation[x]
    del edges[e]
    return network.replace(colors=colors, edges=edges, rotation=rotation)
