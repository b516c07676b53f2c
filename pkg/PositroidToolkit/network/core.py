import logging
import re
from fractions import Fraction
from typing import Dict, Iterable, List, NamedTuple, Optional, Sequence, Tuple

import networkx as nx

from PositroidToolkit.errors import InvalidInput, InvalidNetwork
from PositroidToolkit.exact.core import exact_quotient, format_scalar, is_zero
from PositroidToolkit.exact.RationalFunctions import RationalFunctionField

BLACK = "black"
WHITE = "white"
BOUNDARY = "boundary"

_IDENTIFIER = re.compile(r"^[A-Za-z_][A-Za-z0-9_]*$")


def opposite(color: str) -> str:
    return WHITE if color == BLACK else BLACK


class Edge(NamedTuple):
    u: str
    v: str
    weight: object


class Dart(NamedTuple):
    edge: str
    tail: str
    head: str


class PlanarNetwork:
    """Bipartite graph embedded in a disk with edge weights.

    Boundary vertices 1..n sit clockwise on the boundary circle and have degree one. The embedding
    is a rotation system: for each interior vertex, its incident edges in clockwise order.

    Attributes
    ----------
    n : int
        Number of boundary vertices.
    colors : dict
        Vertex id -> "black", "white" or "boundary".
    boundary : dict
        Boundary label (1..n) -> vertex id.
    edges : dict
        Edge id -> Edge(u, v, weight), in file order.
    rotation : dict
        Interior vertex id -> tuple of edge ids, clockwise.
    field : RationalFunctionField or None
        Set when weights are symbolic.
    plabic : bool
        Allows edges between vertices of the same color.
    """

    def __init__(self, n: int, colors: Dict[str, str], boundary: Dict[int, str], edges: Dict[str, Edge],
                 rotation: Dict[str, Sequence[str]], field: Optional[RationalFunctionField] = None,
                 plabic: bool = False, validate: bool = True):
        self.n = n
        self.colors = dict(colors)
        self.boundary = dict(boundary)
        self.edges = dict(edges)
        self.field = field
        self.plabic = plabic
        self.labels = {v: label for label, v in self.boundary.items()}
        self._incident: Dict[str, List[str]] = {v: [] for v in self.colors}
        for e, edge in self.edges.items():
            for end in (edge.u, edge.v):
                if end not in self._incident:
                    raise InvalidNetwork(f"Edge {e} uses unknown vertex {end}")
                self._incident[end].append(e)
        self.rotation = {}
        for v in self.colors:
            if self.colors[v] == BOUNDARY:
                continue
            if v in rotation:
                self.rotation[v] = tuple(rotation[v])
            elif len(self._incident[v]) <= 2:
                self.rotation[v] = tuple(self._incident[v])
            else:
                raise InvalidNetwork(f"Vertex {v} of degree {len(self._incident[v])} has no rotation")
        if validate:
            self.validate()

    # structure

    def interior(self) -> List[str]:
        return [v for v, c in self.colors.items() if c != BOUNDARY]

    def is_boundary(self, v: str) -> bool:
        return self.colors[v] == BOUNDARY

    def incident(self, v: str) -> List[str]:
        return list(self._incident[v])

    def degree(self, v: str) -> int:
        return len(self._incident[v])

    def other(self, e: str, v: str) -> str:
        edge = self.edges[e]
        return edge.v if edge.u == v else edge.u

    def weight(self, e: str):
        return self.edges[e].weight

    def boundary_edge(self, label: int) -> str:
        return self._incident[self.boundary[label]][0]

    def boundary_neighbor(self, label: int) -> str:
        return self.other(self.boundary_edge(label), self.boundary[label])

    def color(self, v: str) -> str:
        """Color of a vertex; a boundary vertex takes the opposite of its interior neighbor."""
        c = self.colors[v]
        if c != BOUNDARY:
            return c
        neighbor = self.other(self._incident[v][0], v)
        if self.is_boundary(neighbor):
            raise InvalidNetwork(f"Boundary vertex {v} is joined to another boundary vertex")
        return opposite(self.colors[neighbor])

    def succ(self, v: str, e: str) -> str:
        """Edge following e clockwise around v."""
        rot = self.rotation[v] if not self.is_boundary(v) else (e,)
        return rot[(rot.index(e) + 1) % len(rot)]

    def pred(self, v: str, e: str) -> str:
        rot = self.rotation[v] if not self.is_boundary(v) else (e,)
        return rot[(rot.index(e) - 1) % len(rot)]

    @property
    def k(self) -> int:
        """d' + d: boundary vertices at black interior vertices plus #white - #black interior vertices."""
        whites = sum(1 for v in self.interior() if self.colors[v] == WHITE)
        blacks = sum(1 for v in self.interior() if self.colors[v] == BLACK)
        d_prime = sum(1 for label in self.boundary if self.colors[self.boundary_neighbor(label)] == BLACK)
        return d_prime + whites - blacks

    def graph(self) -> nx.MultiGraph:
        g = nx.MultiGraph()
        g.add_nodes_from(self.colors)
        for e, edge in self.edges.items():
            g.add_edge(edge.u, edge.v, key=e)
        return g

    # embedding

    def next_dart(self, dart: Dart) -> Dart:
        """Counterclockwise face traversal: turn to the clockwise successor at the head.

        Arriving at boundary vertex i, the face follows the boundary arc to i - 1.
        """
        if self.is_boundary(dart.head):
            label = self.labels[dart.head]
            previous = self.boundary[(label - 2) % self.n + 1]
            e = self._incident[previous][0]
            return Dart(e, previous, self.other(e, previous))
        e = self.succ(dart.head, dart.edge)
        return Dart(e, dart.head, self.other(e, dart.head))

    def darts(self) -> List[Dart]:
        out = []
        for e, edge in self.edges.items():
            out.append(Dart(e, edge.u, edge.v))
            out.append(Dart(e, edge.v, edge.u))
        return out

    def faces(self) -> List[List[Dart]]:
        """Faces of the disk embedding as cycles of darts."""
        seen = set()
        faces = []
        for start in self.darts():
            if start in seen:
                continue
            face = []
            dart = start
            while dart not in seen:
                seen.add(dart)
                face.append(dart)
                dart = self.next_dart(dart)
            faces.append(face)
        return faces

    def validate(self):
        labels = sorted(self.boundary)
        if labels != list(range(1, self.n + 1)):
            raise InvalidNetwork(f"Boundary labels {labels} are not 1..{self.n}")
        for v, c in self.colors.items():
            if c not in (BLACK, WHITE, BOUNDARY):
                raise InvalidNetwork(f"Vertex {v} has unknown color {c!r}")
            if c == BOUNDARY and v not in self.labels:
                raise InvalidNetwork(f"Boundary vertex {v} has no label")
        for label, v in self.boundary.items():
            if self.degree(v) != 1:
                raise InvalidNetwork(f"Boundary vertex {label} has degree {self.degree(v)}")
        for e, edge in self.edges.items():
            if edge.u == edge.v:
                raise InvalidNetwork(f"Edge {e} is a loop")
            cu, cv = self.colors[edge.u], self.colors[edge.v]
            if cu == BOUNDARY and cv == BOUNDARY:
                raise InvalidNetwork(f"Edge {e} joins two boundary vertices")
            if not self.plabic and cu == cv:
                raise InvalidNetwork(f"Edge {e} joins two {cu} vertices")
        for v in self.interior():
            if self.degree(v) == 0:
                raise InvalidNetwork(f"Interior vertex {v} is isolated")
            if sorted(self.rotation[v]) != sorted(self._incident[v]):
                raise InvalidNetwork(f"Rotation at {v} does not list its incident edges")
        if self.n:
            # a floating component adds its own sphere: one extra traced face for its outer walk
            floating = sum(1 for comp in nx.connected_components(self.graph())
                           if not any(self.is_boundary(v) for v in comp))
            euler = len(self.colors) - (len(self.edges) + self.n) + len(self.faces())
            if euler != 1 + 2 * floating:
                raise InvalidNetwork(f"Rotation system is not a disk embedding (Euler characteristic {euler})")
        return self

    # derived networks

    def replace(self, colors=None, boundary=None, edges=None, rotation=None, field=None, n=None,
                validate: bool = True) -> "PlanarNetwork":
        return PlanarNetwork(self.n if n is None else n,
                             self.colors if colors is None else colors,
                             self.boundary if boundary is None else boundary,
                             self.edges if edges is None else edges,
                             self.rotation if rotation is None else rotation,
                             field=self.field if field is None else field,
                             plabic=self.plabic, validate=validate)

    def fresh_id(self, prefix: str) -> str:
        used = set(self.colors) | set(self.edges)
        i = 1
        while f"{prefix}{i}" in used:
            i += 1
        return f"{prefix}{i}"


def with_weights(network: PlanarNetwork, weights: Dict[str, object],
                 field: Optional[RationalFunctionField] = None) -> PlanarNetwork:
    edges = {e: Edge(edge.u, edge.v, weights.get(e, edge.weight)) for e, edge in network.edges.items()}
    if field is not None:
        edges = {e: Edge(edge.u, edge.v, field.lift(edge.weight)) for e, edge in edges.items()}
    return network.replace(edges=edges, field=field)


def specialize(network: PlanarNetwork, values: Dict[str, Fraction]) -> PlanarNetwork:
    """Numeric network obtained by evaluating every symbolic weight."""
    if network.field is None:
        return network
    edges = {e: Edge(edge.u, edge.v, network.field.evaluate(edge.weight, values))
             for e, edge in network.edges.items()}
    return PlanarNetwork(network.n, network.colors, network.boundary, edges, network.rotation,
                         plabic=network.plabic)


def symbolic_copy(network: PlanarNetwork, include_boundary: bool = False) -> PlanarNetwork:
    """Replaces edge weights by variables named after the edges (boundary edges kept unless asked)."""
    names = []
    for e, edge in network.edges.items():
        if include_boundary or not (network.is_boundary(edge.u) or network.is_boundary(edge.v)):
            names.append(e if _IDENTIFIER.match(e) else "w_" + re.sub(r"\W", "_", e))
    field = RationalFunctionField(names)
    weights = {}
    it = iter(names)
    for e, edge in network.edges.items():
        if include_boundary or not (network.is_boundary(edge.u) or network.is_boundary(edge.v)):
            weights[e] = field.gen(next(it))
    return with_weights(network, weights, field)


def gauge(network: PlanarNetwork, vertex: str, c) -> PlanarNetwork:
    """Multiplies every edge at an interior vertex by c."""
    if network.is_boundary(vertex):
        raise InvalidInput(f"Cannot gauge the boundary vertex {vertex}")
    edges = dict(network.edges)
    for e in network.incident(vertex):
        edge = edges[e]
        edges[e] = Edge(edge.u, edge.v, edge.weight * c)
    return network.replace(edges=edges)


def face_weights(network: PlanarNetwork) -> List[Tuple[List[Dart], object]]:
    """y_F: product of w(e)^{+1} over darts white -> black and w(e)^{-1} over darts black -> white."""
    out = []
    for face in network.faces():
        y = network.field.one() if network.field is not None else 1
        for dart in face:
            w = network.weight(dart.edge)
            if is_zero(w):
                raise InvalidInput(f"Edge {dart.edge} has weight zero")
            if network.color(dart.tail) == WHITE:
                y = y * w
            else:
                y = exact_quotient(y, w)
        out.append((face, y))
    return out


def insert_lollipop(network: PlanarNetwork, i: int, color: str, weight=1) -> PlanarNetwork:
    """New boundary vertex at position i (old labels >= i shift up) attached to a leaf of the given color."""
    n = network.n
    if not 1 <= i <= n + 1:
        raise InvalidInput(f"Cannot insert boundary position {i} into n = {n}")
    colors = dict(network.colors)
    boundary = {(label if label < i else label + 1): v for label, v in network.boundary.items()}
    b = network.fresh_id("b")
    colors[b] = BOUNDARY
    leaf = network.fresh_id("L")
    colors[leaf] = color
    boundary[i] = b
    edges = dict(network.edges)
    e = network.fresh_id("l")
    edges[e] = Edge(b, leaf, weight if network.field is None else network.field.lift(weight))
    rotation = dict(network.rotation)
    rotation[leaf] = (e,)
    return PlanarNetwork(n + 1, colors, boundary, edges, rotation, field=network.field, plabic=network.plabic)


def split_boundary_edge(network: PlanarNetwork, label: int, color: str, colors, edges, rotation):
    """Inserts a vertex of the given color on the boundary edge at `label`, returning (vertex, boundary edge)."""
    b = network.boundary[label]
    e = network.boundary_edge(label)
    u = network.other(e, b)
    new = fresh_name(colors, edges, "V")
    colors[new] = color
    old = edges[e]
    edges[e] = Edge(new, u, old.weight)
    be = fresh_name(colors, edges, "s")
    one = 1 if network.field is None else network.field.one()
    edges[be] = Edge(b, new, one)
    return new, be, e


def fresh_name(colors, edges, prefix):
    i = 1
    while f"{prefix}{i}" in colors or f"{prefix}{i}" in edges:
        i += 1
    return f"{prefix}{i}"


def insert_bridge(network: PlanarNetwork, i: int, a) -> PlanarNetwork:
    """Adds a bridge of weight a from i (white end) to i+1 (black end), cyclically.

    Existing interior vertices of the right color at the boundary are reused, the bridge weight then
    absorbing the weight of their boundary edge.
    """
    n = network.n
    if not 1 <= i <= n or n < 2:
        raise InvalidInput(f"Cannot add a bridge at {i} with n = {n}")
    j = i % n + 1
    colors, edges, rotation = dict(network.colors), dict(network.edges), dict(network.rotation)
    weight = a if network.field is None else network.field.lift(a)
    ends = {}
    for label, color in ((i, WHITE), (j, BLACK)):
        u = network.boundary_neighbor(label)
        e = network.boundary_edge(label)
        if network.colors[u] == color:
            ends[label] = (u, e, None)
            weight = weight * edges[e].weight
        else:
            new, be, inner = split_boundary_edge(network, label, color, colors, edges, rotation)
            ends[label] = (new, be, inner)
    t = fresh_name(colors, edges, "t")
    w_vertex, w_boundary, w_inner = ends[i]
    b_vertex, b_boundary, b_inner = ends[j]
    edges[t] = Edge(w_vertex, b_vertex, weight)
    if w_inner is None:
        rot = list(rotation[w_vertex])
        rot.insert(rot.index(w_boundary) + 1, t)
        rotation[w_vertex] = tuple(rot)
    else:
        rotation[w_vertex] = (w_boundary, t, w_inner)
    if b_inner is None:
        rot = list(rotation[b_vertex])
        rot.insert(rot.index(b_boundary), t)
        rotation[b_vertex] = tuple(rot)
    else:
        rotation[b_vertex] = (t, b_boundary, b_inner)
    return PlanarNetwork(n, colors, network.boundary, edges, rotation, field=network.field, plabic=network.plabic)


def lollipop_network(colors_by_label: Sequence[str], field: Optional[RationalFunctionField] = None) -> PlanarNetwork:
    """Network made only of lollipops; colors_by_label[i-1] is the color of the leaf at i."""
    n = len(colors_by_label)
    colors, boundary, edges, rotation = {}, {}, {}, {}
    one = 1 if field is None else field.one()
    for label, color in enumerate(colors_by_label, start=1):
        b, leaf, e = f"b{label}", f"L{label}", f"l{label}"
        colors[b], colors[leaf] = BOUNDARY, color
        boundary[label] = b
        edges[e] = Edge(b, leaf, one)
        rotation[leaf] = (e,)
    return PlanarNetwork(n, colors, boundary, edges, rotation, field=field)


# text format

def _parse_weight(token: str, symbols: List[str]):
    try:
        return Fraction(token)
    except (ValueError, ZeroDivisionError):
        pass
    if not _IDENTIFIER.match(token):
        raise InvalidNetwork(f"Weight {token!r} is neither a rational nor a variable name")
    if token not in symbols:
        symbols.append(token)
    return token


def parse_network(text: str) -> PlanarNetwork:
    """Reads the line format: header "n [k] [plabic]", then v / e / rot lines.

    Example
    -------
    4 2
    v b1 boundary:1
    v B1 black
    e e1 b1 B1 1
    rot B1 e1 a b
    """
    header = None
    colors, boundary, edges, rotation = {}, {}, {}, {}
    symbols: List[str] = []
    expected_k = None
    plabic = False
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        if header is None:
            try:
                header = int(tokens[0])
                rest = tokens[1:]
                if rest and rest[0].isdigit():
                    expected_k = int(rest.pop(0))
                plabic = "plabic" in rest
            except ValueError as exc:
                raise InvalidNetwork(f"line {number}: bad header {line!r}") from exc
            continue
        kind = tokens[0]
        if kind == "v" and len(tokens) == 3:
            vid, role = tokens[1], tokens[2]
            if vid in colors:
                raise InvalidNetwork(f"line {number}: duplicate vertex {vid}")
            if role.startswith(BOUNDARY + ":"):
                colors[vid] = BOUNDARY
                boundary[int(role.split(":", 1)[1])] = vid
            elif role in (BLACK, WHITE):
                colors[vid] = role
            else:
                raise InvalidNetwork(f"line {number}: unknown vertex kind {role!r}")
        elif kind == "e" and len(tokens) == 5:
            if tokens[1] in edges:
                raise InvalidNetwork(f"line {number}: duplicate edge {tokens[1]}")
            edges[tokens[1]] = Edge(tokens[2], tokens[3], _parse_weight(tokens[4], symbols))
        elif kind == "rot" and len(tokens) >= 2:
            rotation[tokens[1]] = tuple(tokens[2:])
        else:
            raise InvalidNetwork(f"line {number}: cannot parse {line!r}")
    if header is None:
        raise InvalidNetwork("Missing header line")
    field = None
    if symbols:
        field = RationalFunctionField(symbols)
        edges = {e: Edge(edge.u, edge.v, field.gen(edge.weight) if isinstance(edge.weight, str)
                         else field.lift(edge.weight)) for e, edge in edges.items()}
    network = PlanarNetwork(header, colors, boundary, edges, rotation, field=field, plabic=plabic)
    if expected_k is not None and network.k != expected_k:
        raise InvalidNetwork(f"Header declares k = {expected_k} but the network has k = {network.k}")
    logging.debug(f"Parsed network with {len(colors)} vertices and {len(edges)} edges")
    return network


def format_weight(network: PlanarNetwork, w) -> str:
    if network.field is not None:
        return network.field.format(w).replace(" ", "")
    return format_scalar(w)


def format_network(network: PlanarNetwork) -> str:
    lines = [f"{network.n} {network.k}" + (" plabic" if network.plabic else "")]
    for v, c in network.colors.items():
        lines.append(f"v {v} {BOUNDARY}:{network.labels[v]}" if c == BOUNDARY else f"v {v} {c}")
    for e, edge in network.edges.items():
        lines.append(f"e {e} {edge.u} {edge.v} {format_weight(network, edge.weight)}")
    for v in network.interior():
        lines.append(f"rot {v} " + " ".join(network.rotation[v]))
    return "\n".join(lines) + "\n"


def load_network(path: str) -> PlanarNetwork:
    with open(path, "r") as f:
        return parse_network(f.read())


def save_network(network: PlanarNetwork, path: str):
    with open(path, "w") as f:
        f.write(format_network(network))
    logging.info(f"Network saved to {path}")
