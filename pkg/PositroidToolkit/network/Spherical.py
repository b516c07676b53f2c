from PositroidToolkit.errors import DimensionMismatch, InvalidNetwork, NoMatchings
from PositroidToolkit.grassmann.core import PluckerVector, inversions
from PositroidToolkit.grassmann.DirectSum import ZERO
from PositroidToolkit.network.core import BLACK, WHITE, PlanarNetwork, split_boundary_edge
from PositroidToolkit.network.Matchings import matching_weight, matchings_by_subset


class SphericalNetwork:
    """Two disk networks glued along their boundary circle, whose n vertices become black equator vertices.

    Every boundary vertex of both hemispheres must sit at a white interior vertex, so that the
    sphere stays bipartite; with_white_boundary brings a hemisphere into that form.

    Attributes
    ----------
    upper : PlanarNetwork
    lower : PlanarNetwork
    """

    def __init__(self, upper: PlanarNetwork, lower: PlanarNetwork):
        if upper.n != lower.n:
            raise DimensionMismatch(f"Hemispheres have {upper.n} and {lower.n} boundary vertices")
        for name, hemisphere in (("upper", upper), ("lower", lower)):
            for label in range(1, hemisphere.n + 1):
                if hemisphere.colors[hemisphere.boundary_neighbor(label)] != WHITE:
                    raise InvalidNetwork(f"Equator vertex {label} meets a black vertex of the {name} hemisphere")
        self.upper = upper
        self.lower = lower
        self.n = upper.n

    @property
    def k(self) -> int:
        return self.upper.k + self.lower.k


def with_white_boundary(network: PlanarNetwork) -> PlanarNetwork:
    """Puts a degree-two white vertex on every boundary edge at a black vertex.

    The boundary measurement and k are unchanged.
    """
    colors, edges, rotation = dict(network.colors), dict(network.edges), dict(network.rotation)
    for label in range(1, network.n + 1):
        if network.colors[network.boundary_neighbor(label)] != BLACK:
            continue
        new, be, inner = split_boundary_edge(network, label, WHITE, colors, edges, rotation)
        rotation[new] = (be, inner)
    return network.replace(colors=colors, edges=edges, rotation=rotation)


def equatorial_measurements(sphere: SphericalNetwork):
    """Σ over pairs of hemisphere matchings with disjoint boundary sets I+, I- of
    (-1)^{inv(I+, I-)} wt(Π+) wt(Π-), collected at I+ ∪ I-.

    Returns ZERO when every coordinate cancels.
    """
    upper = matchings_by_subset(sphere.upper)
    lower = matchings_by_subset(sphere.lower)
    if not upper or not lower:
        raise NoMatchings("A hemisphere has no almost perfect matching")
    coords = {}
    for plus, plus_matchings in upper.items():
        for minus, minus_matchings in lower.items():
            if set(plus) & set(minus):
                continue
            total = 0
            for p in plus_matchings:
                for m in minus_matchings:
                    total = total + matching_weight(sphere.upper, p) * matching_weight(sphere.lower, m)
            key = tuple(sorted(plus + minus))
            if inversions(plus, minus) % 2:
                total = -total
            coords[key] = coords.get(key, 0) + total
    vector = PluckerVector(sphere.n, sphere.k, coords)
    if vector.is_zero():
        return ZERO
    return vector
