"""Sign vectors relating relation spaces to boundary measurements.

For a planar bipartite network N(t) there is a choice of signs ε on the edges with
Rel(N(t, ε)) = X(N(t, 1)) for every positive t. assemble_signs builds ε the way the graph itself
can be built: interior edges are cut along boundary faces until only stars remain, every star gets
its alternating signs, the stars are joined by disjoint unions and rotations, and the cut edges are
glued back in reverse order. Each of these steps runs on a bicolored copy of the network whose
weights are the signs themselves, through rotate_network, gauge and glue.

search_signs is the exhaustive fallback for small graphs the construction does not reach.
"""
import itertools
import logging
import random
from typing import Dict, List, Optional, Tuple

import networkx as nx

from PositroidToolkit.config import DEFAULT_SEED, SIGN_SEARCH_MAX_FREE_EDGES, SIGN_SEARCH_POINTS
from PositroidToolkit.errors import NotRepresentable
from PositroidToolkit.grassmann.core import projective_equal
from PositroidToolkit.network.core import BLACK, BOUNDARY, Edge, PlanarNetwork, fresh_name, symbolic_copy
from PositroidToolkit.network.Matchings import boundary_measurements
from PositroidToolkit.reduction.Charts import random_parameters
from PositroidToolkit.relspace.core import BicoloredNetwork, disjoint_union, from_planar, relation_space
from PositroidToolkit.relspace.Gluing import glue, rotate_network
from PositroidToolkit.relspace.Moves import gauge

SignVector = Dict[str, int]
Cut = Tuple[str, int]


def signed_network(network: PlanarNetwork, signs: SignVector) -> PlanarNetwork:
    """N(t, ε): every edge weight multiplied by its sign (missing edges count as +1)."""
    edges = {e: Edge(edge.u, edge.v, edge.weight * signs.get(e, 1)) for e, edge in network.edges.items()}
    return network.replace(edges=edges)


def matches(network: PlanarNetwork, signs: SignVector) -> bool:
    """Whether Rel(N(t, ε)) and X(N(t, 1)) are the same point."""
    rel = relation_space(from_planar(signed_network(network, signs)))
    if not rel.defined:
        return False
    return projective_equal(rel.pluckers(), boundary_measurements(network))


def verify_signs(network: PlanarNetwork, signs: SignVector) -> bool:
    """Checks the identity with every edge weight an independent variable."""
    return matches(symbolic_copy(network, include_boundary=True), signs)


# gluing construction

def boundary_cut(network: PlanarNetwork) -> Optional[Tuple[str, str, int]]:
    """An edge between interior vertices on a face that runs along the boundary.

    Returns (e, x, i): the face reaches the boundary arc from i - 1 to i (cyclically) and meets x
    before the other end of e on its way back from i - 1. None when there is no such edge.
    """
    for face in network.faces():
        size = len(face)
        for t, dart in enumerate(face):
            if not network.is_boundary(dart.head):
                continue
            for step in range(1, size):
                following = face[(t + step) % size]
                if network.is_boundary(following.head):
                    break
                if not network.is_boundary(following.tail):
                    return following.edge, following.tail, network.labels[dart.head]
    return None


def cut_edge(network: PlanarNetwork, e: str, x: str, i: int) -> PlanarNetwork:
    """Replaces e by two boundary legs, the one at x labeled i and the other i + 1; labels from i on shift by two."""
    y = network.other(e, x)
    colors, edges, rotation = dict(network.colors), dict(network.edges), dict(network.rotation)
    boundary = {(label if label < i else label + 2): v for label, v in network.boundary.items()}
    weight = edges.pop(e).weight
    for label, end in ((i, x), (i + 1, y)):
        b = fresh_name(colors, edges, "c")
        colors[b] = BOUNDARY
        leg = fresh_name(colors, edges, "h")
        edges[leg] = Edge(b, end, weight)
        rotation[end] = tuple(leg if f == e else f for f in rotation[end])
        boundary[label] = b
    return network.replace(colors=colors, boundary=boundary, edges=edges, rotation=rotation, n=network.n + 2)


def cut_to_stars(network: PlanarNetwork) -> Tuple[PlanarNetwork, List[Cut]]:
    """Cuts interior edges until every interior vertex only meets the boundary.

    Returns the union of stars and the cuts (edge, label of its first leg) in the order made.

    Raises
    ------
    NotRepresentable
        When some interior edge never comes to lie on a boundary face.
    """
    cuts = []
    found = boundary_cut(network)
    while found is not None:
        e, x, i = found
        network = cut_edge(network, e, x, i)
        cuts.append((e, i))
        found = boundary_cut(network)
    for v in network.interior():
        if any(not network.is_boundary(network.other(e, v)) for e in network.incident(v)):
            raise NotRepresentable(f"Vertex {v} keeps interior edges away from the boundary")
    return network, cuts


def signed_star(stars: PlanarNetwork, v: str, order: List[int]) -> BicoloredNetwork:
    """The star at v with its legs at the given labels, renumbered 1, 2, ...; black legs alternate +1, -1."""
    colors = {v: stars.colors[v]}
    boundary, edges = {}, {}
    for position, label in enumerate(order, start=1):
        b = stars.boundary[label]
        colors[b] = BOUNDARY
        boundary[position] = b
        sign = (-1) ** (position - 1) if stars.colors[v] == BLACK else 1
        edges[stars.boundary_edge(label)] = Edge(v, b, sign)
    return BicoloredNetwork(len(order), colors, boundary, edges)


def _consecutive_start(positions: List[int], size: int) -> Optional[int]:
    """Start of the cyclic run formed by the positions, or None if they are not consecutive."""
    taken = set(positions)
    starts = [p for p in positions if (p - 1) % size not in taken]
    return starts[0] if len(starts) == 1 else None


def join_stars(stars: PlanarNetwork, order: List[int]) -> BicoloredNetwork:
    """Signed union of the stars on a cyclic run of labels, boundary label j standing for order[j - 1].

    One star whose labels are consecutive is split off, preferably the one ending the run, the rest
    is joined recursively, and the disjoint union is rotated back into place.
    """
    owner = {label: stars.boundary_neighbor(label) for label in order}
    if len(set(owner.values())) == 1:
        return signed_star(stars, owner[order[0]], order)
    size = len(order)
    for v in dict.fromkeys([owner[order[-1]]] + [owner[label] for label in order]):
        positions = [t for t, label in enumerate(order) if owner[label] == v]
        start = _consecutive_start(positions, size)
        if start is None:
            continue
        shifted = order[start:] + order[:start]
        run, rest = shifted[:len(positions)], shifted[len(positions):]
        network = disjoint_union(join_stars(stars, rest), signed_star(stars, v, run))
        current = rest + run
        while current[0] != order[0]:
            network = rotate_network(network)
            current = current[-1:] + current[:-1]
        return network
    raise NotRepresentable(f"Stars on the labels {order} cross each other")


def glue_back(signed: BicoloredNetwork, e: str, i: int) -> BicoloredNetwork:
    """Joins the legs at i and i + 1 into the edge e.

    The legs are rotated to 1 and 2, their vertices gauged by -1 where a leg is negative, glued,
    and the boundary rotated back.
    """
    n = signed.n
    for _ in range((n - i + 1) % n):
        signed = rotate_network(signed)
    for label in (1, 2):
        if signed.edges[signed.boundary_edge(label)].weight < 0:
            signed = gauge(signed, signed.boundary_neighbor(label), -1)
    glued = glue(signed, 1, 2)
    new = next(f for f in glued.edges if f not in signed.edges)
    glued = glued.replace(edges={(e if f == new else f): edge for f, edge in glued.edges.items()})
    for _ in range(i - 1):
        glued = rotate_network(glued)
    return glued


def assemble_signs(network: PlanarNetwork) -> SignVector:
    """Signs ε built along the gluing decomposition of the graph, without verification.

    Raises
    ------
    NotRepresentable
        When the graph has interior edges that cannot be cut from the boundary.
    """
    stars, cuts = cut_to_stars(network)
    if not stars.n:
        return {}
    signed = join_stars(stars, list(range(1, stars.n + 1)))
    for e, i in reversed(cuts):
        signed = glue_back(signed, e, i)
    logging.debug(f"Signs assembled from {len(stars.interior())} stars and {len(cuts)} gluings")
    return {e: 1 if signed.edges[e].weight > 0 else -1 for e in network.edges}


# exhaustive fallback

def free_edges(network: PlanarNetwork) -> List[str]:
    """Edges outside a spanning forest of the interior vertices, boundary edges included."""
    g = nx.MultiGraph()
    g.add_nodes_from(network.interior())
    for e, edge in network.edges.items():
        if not (network.is_boundary(edge.u) or network.is_boundary(edge.v)):
            g.add_edge(edge.u, edge.v, key=e)
    forest = {key for _, _, key in nx.minimum_spanning_edges(g, keys=True, data=False)}
    return [e for e in network.edges if e not in forest]


def _random_weights(network: PlanarNetwork, rng: random.Random) -> PlanarNetwork:
    values = random_parameters(rng, len(network.edges))
    edges = {e: Edge(edge.u, edge.v, value) for (e, edge), value in zip(network.edges.items(), values)}
    return PlanarNetwork(network.n, network.colors, network.boundary, edges, network.rotation,
                         plabic=network.plabic)


def search_signs(network: PlanarNetwork, rng: Optional[random.Random] = None) -> SignVector:
    """Tries every sign on the free edges (the spanning forest stays +1) and verifies the first match.

    Raises
    ------
    NotRepresentable
        When no candidate verifies, or when there are too many free edges to search.
    """
    rng = rng if rng is not None else random.Random(DEFAULT_SEED)
    free = free_edges(network)
    if len(free) > SIGN_SEARCH_MAX_FREE_EDGES:
        raise NotRepresentable(f"{len(free)} free edges exceed the search limit {SIGN_SEARCH_MAX_FREE_EDGES}")
    points = [_random_weights(network, rng) for _ in range(SIGN_SEARCH_POINTS)]
    tried = 0
    for choice in itertools.product((1, -1), repeat=len(free)):
        signs = {e: 1 for e in network.edges}
        signs.update(zip(free, choice))
        tried += 1
        if all(matches(point, signs) for point in points) and verify_signs(network, signs):
            logging.info(f"Sign vector found after {tried} candidates over {len(free)} free edges")
            return signs
    raise NotRepresentable(f"No sign vector among {tried} candidates")


def sign_vector(network: PlanarNetwork, rng: Optional[random.Random] = None) -> SignVector:
    """Finds ε with Rel(N(t, ε)) = X(N(t, 1)) and verifies it symbolically.

    The gluing construction comes first; the search takes over when it does not apply or does not
    verify.

    Raises
    ------
    NotRepresentable
        When no sign choice verifies.
    """
    try:
        signs = assemble_signs(network)
    except NotRepresentable as exc:
        logging.info(f"{exc}; searching for signs instead")
        return search_signs(network, rng)
    if verify_signs(network, signs):
        logging.info(f"Sign vector assembled over {len(network.edges)} edges")
        return signs
    logging.warning("Assembled signs do not verify; searching for signs instead")
    return search_signs(network, rng)


def format_signs(signs: SignVector) -> str:
    return "\n".join(f"{e} {'+1' if s > 0 else '-1'}" for e, s in signs.items()) + "\n"
