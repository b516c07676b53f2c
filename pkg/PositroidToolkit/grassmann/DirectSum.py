import itertools

from PositroidToolkit.errors import DimensionMismatch
from PositroidToolkit.exact.core import is_zero
from PositroidToolkit.grassmann.core import PluckerVector, inversions, subsets


class ZeroPoint:
    """Returned by direct_sum when the two subspaces meet, so every coordinate vanishes."""

    def __repr__(self) -> str:
        return "Zero"

    def __bool__(self) -> bool:
        return False


ZERO = ZeroPoint()


def direct_sum(x: PluckerVector, y: PluckerVector):
    """Plücker coordinates of the span of two subspaces of the same ambient space.

    Δ_I(x ⊕ y) = Σ_{J ⊂ I, |J| = k} (-1)^{inv(J, I - J)} Δ_J(x) Δ_{I - J}(y).

    Parameters
    ----------
    x : PluckerVector
        Point of Gr(k, n).
    y : PluckerVector
        Point of Gr(l, n).

    Returns
    -------
    PluckerVector or ZeroPoint
        The point of Gr(k + l, n), or ZERO when the spans intersect.
    """
    if x.n != y.n:
        raise DimensionMismatch(f"Direct sum of points in C^{x.n} and C^{y.n}")
    n, k, l = x.n, x.k, y.k
    if k + l > n:
        return ZERO
    coords = {}
    for I in subsets(n, k + l):
        total = 0
        for J in itertools.combinations(I, k):
            rest = tuple(i for i in I if i not in J)
            a, b = x.coords.get(J), y.coords.get(rest)
            if a is None or b is None:
                continue
            term = a * b
            total = total - term if inversions(J, rest) % 2 else total + term
        if not is_zero(total):
            coords[I] = total
    if not coords:
        return ZERO
    return PluckerVector(n, k + l, coords)
