import re
from itertools import combinations
from typing import Iterable, Iterator, List, Sequence, Tuple

from PositroidToolkit.errors import InvalidPairing

Arc = Tuple[int, int]


def crossing(first: Arc, second: Arc) -> bool:
    a, b = first
    c, d = second
    return a < c < b < d or c < a < d < b


class NonCrossingPairing:
    """A (k,n)-partial non-crossing pairing (tau, T).

    Attributes
    ----------
    n : int
    arcs : tuple of (a, b)
        The matching tau on S, each arc with a < b, sorted.
    T : tuple of int
        Unmatched marked points, disjoint from S, with |S| + 2|T| = 2k.
    """

    def __init__(self, n: int, arcs: Iterable[Sequence[int]], T: Iterable[int] = ()):
        self.n = n
        self.arcs = tuple(sorted(tuple(sorted(arc)) for arc in arcs))
        self.T = tuple(sorted(T))
        used = [i for arc in self.arcs for i in arc] + list(self.T)
        if len(set(used)) != len(used):
            raise InvalidPairing(f"Point used twice in {self}")
        if not all(1 <= i <= n for i in used):
            raise InvalidPairing(f"Point outside [{n}] in {self}")
        for x, y in combinations(self.arcs, 2):
            if crossing(x, y):
                raise InvalidPairing(f"Arcs {x} and {y} cross")

    @property
    def k(self) -> int:
        return len(self.arcs) + len(self.T)

    @property
    def S(self) -> Tuple[int, ...]:
        return tuple(sorted(i for arc in self.arcs for i in arc))

    def __eq__(self, other) -> bool:
        return isinstance(other, NonCrossingPairing) and (self.n, self.arcs, self.T) == (other.n, other.arcs, other.T)

    def __hash__(self):
        return hash((self.n, self.arcs, self.T))

    def __lt__(self, other) -> bool:
        return (self.arcs, self.T) < (other.arcs, other.T)

    def __repr__(self) -> str:
        return f"NonCrossingPairing({self.n}, {list(self.arcs)}, {list(self.T)})"

    def __str__(self) -> str:
        return format_pairing(self)


def noncrossing_matchings(points: Sequence[int], allowed=None) -> Iterator[List[Arc]]:
    """Perfect non-crossing matchings of points in circular order; allowed(a, b) filters arcs."""
    points = list(points)
    if not points:
        yield []
        return
    first = points[0]
    for j in range(1, len(points), 2):
        if allowed is not None and not allowed(first, points[j]):
            continue
        for inside in noncrossing_matchings(points[1:j], allowed):
            for outside in noncrossing_matchings(points[j + 1:], allowed):
                yield [(first, points[j])] + inside + outside


def pairings(k: int, n: int) -> List[NonCrossingPairing]:
    """All of A_{k,n}."""
    if not 0 <= k <= n:
        raise InvalidPairing(f"k = {k} is not in [0, {n}]")
    out = []
    for t in range(k + 1):
        for T in combinations(range(1, n + 1), t):
            rest = [i for i in range(1, n + 1) if i not in T]
            for S in combinations(rest, 2 * (k - t)):
                for arcs in noncrossing_matchings(S):
                    out.append(NonCrossingPairing(n, arcs, T))
    return sorted(out)


def rotate_pairing(pairing: NonCrossingPairing, times: int = 1) -> NonCrossingPairing:
    """The cyclic action i -> i + 1 mod n."""
    n = pairing.n

    def shift(i):
        return (i - 1 + times) % n + 1

    return NonCrossingPairing(n, [(shift(a), shift(b)) for a, b in pairing.arcs], [shift(i) for i in pairing.T])


def compatible_pairings(I: Iterable[int], J: Iterable[int], n: int) -> List[NonCrossingPairing]:
    """Pairings (tau, I ∩ J) whose arcs each join a point of I - J to a point of J - I."""
    I, J = set(I), set(J)
    if len(I) != len(J):
        raise InvalidPairing(f"{sorted(I)} and {sorted(J)} have different sizes")
    left, right = I - J, J - I

    def allowed(a, b):
        return (a in left and b in right) or (a in right and b in left)

    return [NonCrossingPairing(n, arcs, I & J) for arcs in noncrossing_matchings(sorted(left | right), allowed)]


def format_pairing(pairing: NonCrossingPairing) -> str:
    arcs = "".join(f"({a},{b})" for a, b in pairing.arcs)
    return f"arcs: {arcs}; T: {{{','.join(str(i) for i in pairing.T)}}}"


_PAIRING = re.compile(r"^\s*arcs:\s*((?:\(\s*\d+\s*,\s*\d+\s*\)\s*)*);\s*T:\s*\{([\d,\s]*)\}\s*$")


def parse_pairing(text: str, n: int) -> NonCrossingPairing:
    """Reads "arcs: (1,6)(2,3)(4,5); T: {}"."""
    match = _PAIRING.match(text)
    if not match:
        raise InvalidPairing(f"Cannot parse pairing {text!r}")
    arcs = [(int(a), int(b)) for a, b in re.findall(r"\(\s*(\d+)\s*,\s*(\d+)\s*\)", match.group(1))]
    T = [int(t) for t in match.group(2).replace(",", " ").split()]
    return NonCrossingPairing(n, arcs, T)
