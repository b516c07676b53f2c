from PositroidToolkit.errors import InvalidInput
from PositroidToolkit.exact.core import ExactMatrix
from PositroidToolkit.grassmann.core import PluckerVector, subsets


def _check_index(n: int, i: int):
    if not 1 <= i <= n:
        raise InvalidInput(f"Chevalley index {i} is not in [1, {n}]")


def _replace(I, old, new):
    return tuple(new if x == old else x for x in I)


def chevalley_x(v: PluckerVector, i: int, a) -> PluckerVector:
    """Plücker coordinates of X * x_i(a), where x_i(a) adds a * v_i to v_{i+1}.

    For i = n the column v_{n+1} = (-1)^{k-1} v_1 is meant, so v_1 gains a (-1)^{k-1} v_n.

    Parameters
    ----------
    v : PluckerVector
        Point of Gr(k, n).
    i : int
        Generator index in [1, n].
    a : scalar
        Parameter, Rat or a field element.

    Returns
    -------
    PluckerVector
    """
    n, k = v.n, v.k
    _check_index(n, i)
    source, target = i, i % n + 1
    coords = {}
    for I in subsets(n, k):
        value = v.coords.get(I, 0)
        if target in I and source not in I:
            value = value + a * v[_replace(I, target, source)] * (1 if i < n else (-1) ** (k - 1))
        coords[I] = value
    return PluckerVector(n, k, coords)


def chevalley_y(v: PluckerVector, i: int, a) -> PluckerVector:
    """Plücker coordinates of X * y_i(a), where y_i(a) adds a * v_{i+1} to v_i."""
    n, k = v.n, v.k
    _check_index(n, i)
    source, target = i % n + 1, i
    coords = {}
    for I in subsets(n, k):
        value = v.coords.get(I, 0)
        if target in I and source not in I:
            value = value + a * v[_replace(I, target, source)] * (1 if i < n else (-1) ** (k - 1))
        coords[I] = value
    return PluckerVector(n, k, coords)


def apply_x(m: ExactMatrix, i: int, a) -> ExactMatrix:
    """Column operation v_{i+1} += a v_i on a representative."""
    n, k = m.ncols, m.nrows
    _check_index(n, i)
    if i < n:
        return m.column_operation(i, i - 1, a)
    return m.column_operation(0, n - 1, a * (-1) ** (k - 1))


def apply_y(m: ExactMatrix, i: int, a) -> ExactMatrix:
    """Column operation v_i += a v_{i+1} on a representative."""
    n, k = m.ncols, m.nrows
    _check_index(n, i)
    if i < n:
        return m.column_operation(i - 1, i, a)
    return m.column_operation(n - 1, 0, a * (-1) ** (k - 1))
