"""Momentum-twistor BCFW cells C(k, n) ⊂ Bound(k, n), all of dimension 4k.

C(0, n) is the single cell of Bound(0, n) and C(k, k+4) is the top cell. Otherwise a cell comes
either from a cell of C(k, n-1) with a black lollipop added at n, or from gluing reduced graphs of
f1 ∈ C(k1, j) and f2 ∈ C(k2, n-j+2), k1 + k2 = k - 1, into a fixed gadget of six black and three
white vertices. Gadget graphs that are not reduced give cells of smaller dimension and are dropped.
"""
import logging
from functools import lru_cache
from typing import Dict, FrozenSet, List, Tuple

from PositroidToolkit.affine.core import BLACK, BoundedAffinePermutation, dimension, identity, insert_fixed_point
from PositroidToolkit.affine.Positroids import positroid_of
from PositroidToolkit.config import BOUND_CACHE_SIZE
from PositroidToolkit.errors import InvalidInput
from PositroidToolkit.network.core import BOUNDARY, WHITE, Edge, PlanarNetwork
from PositroidToolkit.network.Trips import perm_of_graph
from PositroidToolkit.reduction.Charts import graph_for
from PositroidToolkit.symfun.Cohomology import is_independent

# gadget vertex -> color; the rotations are set in bcfw_graph
_GADGET = {"b1": BLACK, "b2": BLACK, "b3": BLACK, "b4": BLACK, "b5": BLACK, "b6": BLACK,
           "w1": WHITE, "w2": WHITE, "w3": WHITE}
_GADGET_EDGES = {"h1": ("b1", "w1"), "h2": ("b2", "w1"), "h3": ("b2", "w2"), "h4": ("b3", "w2"),
                 "h5": ("b4", "w1"), "h6": ("b4", "w3"), "h7": ("b5", "w3"), "h8": ("b6", "w3")}


def _block(f: BoundedAffinePermutation, prefix: str, attach: Dict[int, str]):
    """Interior of the chart graph of f, with the boundary edge at position p rerouted to attach[p]."""
    g = graph_for(f).graph
    colors, edges, rotation = {}, {}, {}
    for v in g.interior():
        colors[prefix + v] = g.colors[v]
        rotation[prefix + v] = tuple(prefix + e for e in g.rotation[v])
    for e, edge in g.edges.items():
        u, v = (attach[g.labels[x]] if g.is_boundary(x) else prefix + x for x in (edge.u, edge.v))
        edges[prefix + e] = Edge(u, v, 1)
    ports = {p: prefix + g.boundary_edge(p) for p in range(1, g.n + 1)}
    return colors, edges, rotation, ports


def bcfw_graph(f1: BoundedAffinePermutation, f2: BoundedAffinePermutation, n: int) -> PlanarNetwork:
    """The glued graph for f1 on j boundary vertices and f2 on n - j + 2.

    The first block sits on 1, ..., j-1 and the central vertex; the second on j, ..., n-1, a black
    vertex next to n and the central vertex. Boundary vertex n hangs off a white vertex.
    """
    j = f1.n
    if not 3 <= j <= n - 2 or f2.n != n - j + 2:
        raise InvalidInput(f"Blocks of sizes {f1.n} and {f2.n} do not glue to n = {n}")
    outer = {i: f"B{i}" for i in range(1, n + 1)}
    first = {1: "b1", j - 1: "b5", j: "b4"}
    first.update({p: outer[p] for p in range(2, j - 1)})
    second = {1: "b6", n - j: "b3", n - j + 1: "b2", n - j + 2: "b4"}
    second.update({p: outer[j + p - 1] for p in range(2, n - j)})
    colors1, edges1, rotation1, p1 = _block(f1, "P.", first)
    colors2, edges2, rotation2, p2 = _block(f2, "Q.", second)

    colors = {v: BOUNDARY for v in outer.values()}
    colors.update(_GADGET)
    colors.update(colors1)
    colors.update(colors2)
    edges = {e: Edge(u, v, 1) for e, (u, v) in _GADGET_EDGES.items()}
    for label, v in ((1, "b1"), (j - 1, "b5"), (j, "b6"), (n - 1, "b3"), (n, "w2")):
        edges[f"o{label}"] = Edge(outer[label], v, 1)
    edges.update(edges1)
    edges.update(edges2)
    rotation = {
        "b1": ("o1", p1[1], "h1"),
        "b2": ("h2", p2[n - j + 1], "h3"),
        "b3": ("h4", p2[n - j], f"o{n - 1}"),
        "b4": (p1[j], "h6", p2[n - j + 2], "h5"),
        "b5": (f"o{j - 1}", "h7", p1[j - 1]),
        "b6": (f"o{j}", p2[1], "h8"),
        "w1": ("h1", "h5", "h2"),
        "w2": ("h3", "h4", f"o{n}"),
        "w3": ("h7", "h8", "h6"),
    }
    rotation.update(rotation1)
    rotation.update(rotation2)
    return PlanarNetwork(n, colors, outer, edges, rotation, plabic=True)


@lru_cache(maxsize=BOUND_CACHE_SIZE)
def bcfw_cells(k: int, n: int) -> FrozenSet[BoundedAffinePermutation]:
    if k < 0 or n < k:
        raise InvalidInput(f"No BCFW cells for k = {k}, n = {n}")
    if k == 0:
        return frozenset([identity(0, n)])
    if n < k + 4:
        return frozenset()
    if n == k + 4:
        return frozenset([identity(k, n)])
    cells = {insert_fixed_point(f, n, BLACK) for f in bcfw_cells(k, n - 1)}
    dropped = 0
    for j in range(3, n - 1):
        for k1 in range(k):
            k2 = k - 1 - k1
            for f1 in bcfw_cells(k1, j):
                for f2 in bcfw_cells(k2, n - j + 2):
                    f = perm_of_graph(bcfw_graph(f1, f2, n))
                    if f.k == k and dimension(f) == 4 * k:
                        cells.add(f)
                    else:
                        dropped += 1
    logging.info(f"C({k},{n}) has {len(cells)} cells; {dropped} non-reduced gadget graphs dropped")
    return frozenset(cells)


def simplices_of(cells) -> List[Tuple[int, ...]]:
    """For k = 1, the support of each cell: the vertex set of its simplex."""
    out = []
    for f in cells:
        if f.k != 1:
            raise InvalidInput(f"{f} is not a cell of Gr(1, n)")
        out.append(tuple(sorted(B[0] for B in positroid_of(f).bases)))
    return sorted(out)


def bcfw_simplices(n: int) -> List[Tuple[int, ...]]:
    """{1, i-1, i, j-1, j} for 2 < i < j-1 < n."""
    return sorted((1, i - 1, i, j - 1, j) for j in range(5, n + 1) for i in range(3, j - 1))


def independence(k: int, n: int) -> Dict[BoundedAffinePermutation, bool]:
    """is_independent(f, k + 4) for every BCFW cell; failures are reported, not raised."""
    report = {f: is_independent(f, k + 4) for f in sorted(bcfw_cells(k, n))}
    failures = [f for f, ok in report.items() if not ok]
    if failures:
        logging.warning(f"{len(failures)} BCFW cells of C({k},{n}) are not independent for r = {k + 4}")
    return report
