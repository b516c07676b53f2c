"""Relation spaces of bicolored networks.

A bicolored network is any graph (loops and parallel edges allowed, no embedding required) whose
interior vertices are black or white and whose boundary vertices 1..n have degree one. Each
oriented edge carries a weight with w(v, u) = 1 / w(u, v). There is one formal variable
z_(u, e) for every half-edge; the equations are

- w(u, v) z_(v, e) = z_(u, e) for every edge e = (u, v),
- all z at a black vertex are equal,
- the z at a white vertex sum to zero.

The relation space is the set of linear relations these equations force among the boundary
variables z_1, ..., z_n.
"""
import logging
import re
from fractions import Fraction
from typing import Dict, Iterable, List, NamedTuple, Optional, Tuple

from sympy.polys.fields import FracElement

from PositroidToolkit.errors import InvalidNetwork, UndefinedRelationSpace
from PositroidToolkit.exact.core import ExactMatrix, exact_quotient, format_scalar, is_zero, rref_rank
from PositroidToolkit.exact.RationalFunctions import RationalFunctionField
from PositroidToolkit.grassmann.core import PluckerVector, plucker_of, projective_equal
from PositroidToolkit.network.core import BLACK, BOUNDARY, WHITE, Edge, PlanarNetwork, parse_network

HalfEdge = Tuple[str, int]

_IDENTIFIER = re.compile(r"^[A-Za-z_][A-Za-z0-9_]*$")


class BicoloredNetwork:
    """Weighted bicolored graph with n boundary vertices.

    Attributes
    ----------
    n : int
    colors : dict
        Vertex id -> "black", "white" or "boundary".
    boundary : dict
        Boundary label -> vertex id.
    edges : dict
        Edge id -> Edge(u, v, weight) where weight = w(u, v).
    field : RationalFunctionField or None
    """

    def __init__(self, n: int, colors: Dict[str, str], boundary: Dict[int, str], edges: Dict[str, Edge],
                 field: Optional[RationalFunctionField] = None, validate: bool = True):
        self.n = n
        self.colors = dict(colors)
        self.boundary = dict(boundary)
        self.edges = dict(edges)
        self.field = field
        self.labels = {v: label for label, v in self.boundary.items()}
        self._halves: Dict[str, List[HalfEdge]] = {v: [] for v in self.colors}
        for e, edge in self.edges.items():
            for side, end in enumerate((edge.u, edge.v)):
                if end not in self._halves:
                    raise InvalidNetwork(f"Edge {e} uses unknown vertex {end}")
                self._halves[end].append((e, side))
        if validate:
            self.validate()

    def interior(self) -> List[str]:
        return [v for v, c in self.colors.items() if c != BOUNDARY]

    def is_boundary(self, v: str) -> bool:
        return self.colors[v] == BOUNDARY

    def half_edges(self, v: str) -> List[HalfEdge]:
        """Half-edges at v; a loop contributes both of its halves."""
        return list(self._halves[v])

    def degree(self, v: str) -> int:
        return len(self._halves[v])

    def incident(self, v: str) -> List[str]:
        seen = []
        for e, _ in self._halves[v]:
            if e not in seen:
                seen.append(e)
        return seen

    def end(self, half: HalfEdge) -> str:
        edge = self.edges[half[0]]
        return edge.u if half[1] == 0 else edge.v

    def other(self, e: str, v: str) -> str:
        edge = self.edges[e]
        return edge.v if edge.u == v else edge.u

    def weight_from(self, e: str, v: str):
        """w(v, x) for the edge e = {v, x}."""
        edge = self.edges[e]
        if edge.u == v:
            return edge.weight
        return exact_quotient(self.one(), edge.weight)

    def boundary_half(self, label: int) -> HalfEdge:
        return self._halves[self.boundary[label]][0]

    def boundary_edge(self, label: int) -> str:
        return self.boundary_half(label)[0]

    def boundary_neighbor(self, label: int) -> str:
        return self.other(self.boundary_edge(label), self.boundary[label])

    def one(self):
        return self.field.one() if self.field is not None else 1

    def zero(self):
        return self.field.zero() if self.field is not None else 0

    def lift(self, x):
        return self.field.lift(x) if self.field is not None else x

    @property
    def k(self) -> int:
        """k_N = (n + Σ_black (deg - 2) + Σ_white (2 - deg)) / 2."""
        total = self.n
        for v in self.interior():
            d = self.degree(v)
            total += d - 2 if self.colors[v] == BLACK else 2 - d
        return total // 2

    def validate(self):
        labels = sorted(self.boundary)
        if labels != list(range(1, self.n + 1)):
            raise InvalidNetwork(f"Boundary labels {labels} are not 1..{self.n}")
        for v, c in self.colors.items():
            if c not in (BLACK, WHITE, BOUNDARY):
                raise InvalidNetwork(f"Vertex {v} has unknown color {c!r}")
            if c == BOUNDARY and v not in self.labels:
                raise InvalidNetwork(f"Boundary vertex {v} has no label")
            if c != BOUNDARY and not self._halves[v]:
                raise InvalidNetwork(f"Interior vertex {v} is isolated")
        for label, v in self.boundary.items():
            if self.degree(v) != 1:
                raise InvalidNetwork(f"Boundary vertex {label} has degree {self.degree(v)}")
        for e, edge in self.edges.items():
            if is_zero(edge.weight):
                raise InvalidNetwork(f"Edge {e} has weight zero")
        return self

    def replace(self, colors=None, boundary=None, edges=None, field=None, n=None,
                validate: bool = True) -> "BicoloredNetwork":
        return BicoloredNetwork(self.n if n is None else n,
                                self.colors if colors is None else colors,
                                self.boundary if boundary is None else boundary,
                                self.edges if edges is None else edges,
                                field=self.field if field is None else field, validate=validate)

    def fresh_id(self, prefix: str, taken: Iterable[str] = ()) -> str:
        used = set(self.colors) | set(self.edges) | set(taken)
        i = 1
        while f"{prefix}{i}" in used:
            i += 1
        return f"{prefix}{i}"

    def __repr__(self) -> str:
        return f"BicoloredNetwork(n={self.n}, vertices={len(self.colors)}, edges={len(self.edges)})"


class RelationSpace:
    """Rel(N) as a k x n matrix of relations, or undefined when its dimension is not k_N.

    Attributes
    ----------
    k : int
        Expected dimension k_N.
    n : int
    matrix : ExactMatrix or None
        Rows span the relations; None when undefined.
    """

    def __init__(self, k: int, n: int, matrix: Optional[ExactMatrix]):
        self.k = k
        self.n = n
        self.matrix = matrix

    @property
    def defined(self) -> bool:
        return self.matrix is not None

    def pluckers(self) -> PluckerVector:
        if not self.defined:
            raise UndefinedRelationSpace(f"Relation space has the wrong dimension for k = {self.k}")
        if self.k == 0:
            return PluckerVector(self.n, 0, {(): 1})
        return plucker_of(self.matrix)

    def same_point(self, other: "RelationSpace") -> bool:
        if not (self.defined and other.defined):
            return False
        return projective_equal(self.pluckers(), other.pluckers())

    def to_text(self) -> str:
        if not self.defined:
            return "undefined"
        return self.matrix.to_text()

    def __repr__(self) -> str:
        state = f"{self.k}x{self.n}" if self.defined else "undefined"
        return f"RelationSpace({state})"


def relation_space(network: BicoloredNetwork) -> RelationSpace:
    """Eliminates the interior half-edge variables from the network equations.

    Columns for interior half-edges come first so that the rows of the reduced echelon form
    vanishing on them span the relations among z_1, ..., z_n.
    """
    interior = [h for v in network.interior() for h in network.half_edges(v)]
    outer = [network.boundary_half(label) for label in range(1, network.n + 1)]
    index = {h: j for j, h in enumerate(interior + outer)}
    m, total = len(interior), len(interior) + network.n
    zero, one = network.zero(), network.one()

    rows = []
    for e, edge in network.edges.items():
        row = [zero] * total
        row[index[(e, 1)]] = network.lift(edge.weight)
        row[index[(e, 0)]] = -one
        rows.append(row)
    for v in network.interior():
        halves = network.half_edges(v)
        if network.colors[v] == BLACK:
            for h in halves[1:]:
                row = [zero] * total
                row[index[halves[0]]] = one
                row[index[h]] = -one
                rows.append(row)
        else:
            row = [zero] * total
            for h in halves:
                row[index[h]] = one
            rows.append(row)

    rank, reduced, _ = rref_rank(ExactMatrix(rows, ncols=total))
    relations = [r[m:] for r in reduced.rows[:rank] if all(is_zero(x) for x in r[:m])]
    k = network.k
    if len(relations) != k:
        logging.debug(f"Relation space has dimension {len(relations)}, expected {k}")
        return RelationSpace(k, network.n, None)
    return RelationSpace(k, network.n, ExactMatrix(relations, ncols=network.n))


def from_planar(network: PlanarNetwork) -> BicoloredNetwork:
    """Reads a planar network as a bicolored one, with w(u, v) the edge weight when u is white.

    Boundary vertices take the opposite color of their interior neighbor.
    """
    edges = {}
    for e, edge in network.edges.items():
        if network.color(edge.u) == WHITE or network.color(edge.v) == BLACK:
            edges[e] = Edge(edge.u, edge.v, edge.weight)
        else:
            edges[e] = Edge(edge.v, edge.u, edge.weight)
    return BicoloredNetwork(network.n, network.colors, network.boundary, edges, field=network.field)


def _transfer(field: Optional[RationalFunctionField], x):
    if field is None:
        return x
    if isinstance(x, FracElement):
        return field.field.from_expr(x.as_expr())
    return field.lift(x)


def _merged_field(first: BicoloredNetwork, second: BicoloredNetwork) -> Optional[RationalFunctionField]:
    if first.field is None and second.field is None:
        return None
    if first.field is second.field:
        return first.field
    names = list(first.field.names if first.field else [])
    for name in (second.field.names if second.field else []):
        if name not in names:
            names.append(name)
    return RationalFunctionField(names)


def disjoint_union(first: BicoloredNetwork, second: BicoloredNetwork) -> BicoloredNetwork:
    """N ∪ N' with the boundary of N' relabeled n+1, ..., n+n'.

    Ids of the second network that clash with the first get a trailing prime.
    """
    field = _merged_field(first, second)
    used = set(first.colors) | set(first.edges)

    def rename(x: str) -> str:
        while x in used:
            x += "'"
        return x

    vmap = {v: rename(v) for v in second.colors}
    used |= set(vmap.values())
    emap = {e: rename(e) for e in second.edges}

    colors = dict(first.colors)
    colors.update({vmap[v]: c for v, c in second.colors.items()})
    boundary = dict(first.boundary)
    boundary.update({label + first.n: vmap[v] for label, v in second.boundary.items()})
    edges = {e: Edge(edge.u, edge.v, _transfer(field, edge.weight)) for e, edge in first.edges.items()}
    for e, edge in second.edges.items():
        edges[emap[e]] = Edge(vmap[edge.u], vmap[edge.v], _transfer(field, edge.weight))
    return BicoloredNetwork(first.n + second.n, colors, boundary, edges, field=field)


def block_sum(first: RelationSpace, second: RelationSpace) -> RelationSpace:
    """X ⊞ X' = [[X, 0], [0, X']] in Gr(k + k', n + n')."""
    k, n = first.k + second.k, first.n + second.n
    if not (first.defined and second.defined):
        return RelationSpace(k, n, None)
    rows = [tuple(r) + (0,) * second.n for r in first.matrix.rows]
    rows += [(0,) * first.n + tuple(r) for r in second.matrix.rows]
    return RelationSpace(k, n, ExactMatrix(rows, ncols=n))


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


def parse_bicolored(text: str) -> BicoloredNetwork:
    """Reads the network line format; the header flag "nonplanar" drops the rot lines.

    Without the flag the text is read as a planar network and converted with from_planar.
    """
    lines = [raw.split("#", 1)[0].strip() for raw in text.splitlines()]
    lines = [line for line in lines if line]
    if not lines:
        raise InvalidNetwork("Missing header line")
    header = lines[0].split()
    if "nonplanar" not in header[1:]:
        return from_planar(parse_network(text))
    try:
        n = int(header[0])
        expected_k = int(header[1]) if header[1].isdigit() else None
    except ValueError as exc:
        raise InvalidNetwork(f"bad header {lines[0]!r}") from exc
    colors, boundary, edges = {}, {}, {}
    symbols: List[str] = []
    for line in lines[1:]:
        tokens = line.split()
        if tokens[0] == "v" and len(tokens) == 3:
            vid, role = tokens[1], tokens[2]
            if vid in colors:
                raise InvalidNetwork(f"Duplicate vertex {vid}")
            if role.startswith(BOUNDARY + ":"):
                colors[vid] = BOUNDARY
                boundary[int(role.split(":", 1)[1])] = vid
            elif role in (BLACK, WHITE):
                colors[vid] = role
            else:
                raise InvalidNetwork(f"Unknown vertex kind {role!r}")
        elif tokens[0] == "e" and len(tokens) == 5:
            if tokens[1] in edges:
                raise InvalidNetwork(f"Duplicate edge {tokens[1]}")
            edges[tokens[1]] = Edge(tokens[2], tokens[3], _parse_weight(tokens[4], symbols))
        else:
            raise InvalidNetwork(f"Cannot parse {line!r}")
    field = None
    if symbols:
        field = RationalFunctionField(symbols)
        edges = {e: Edge(edge.u, edge.v, field.gen(edge.weight) if isinstance(edge.weight, str)
                         else field.lift(edge.weight)) for e, edge in edges.items()}
    network = BicoloredNetwork(n, colors, boundary, edges, field=field)
    if expected_k is not None and network.k != expected_k:
        raise InvalidNetwork(f"Header declares k = {expected_k} but the network has k = {network.k}")
    return network


def load_bicolored(path: str) -> BicoloredNetwork:
    with open(path, "r") as f:
        return parse_bicolored(f.read())


def format_bicolored(network: BicoloredNetwork) -> str:
    lines = [f"{network.n} {network.k} nonplanar"]
    for v, c in network.colors.items():
        lines.append(f"v {v} {BOUNDARY}:{network.labels[v]}" if c == BOUNDARY else f"v {v} {c}")
    for e, edge in network.edges.items():
        w = network.field.format(edge.weight).replace(" ", "") if network.field is not None \
            else format_scalar(edge.weight)
        lines.append(f"e {e} {edge.u} {edge.v} {w}")
    return "\n".join(lines) + "\n"
