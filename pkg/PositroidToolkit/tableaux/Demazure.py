import logging
from typing import Iterable

from sympy import ZZ
from sympy.polys.rings import ring

from PositroidToolkit.affine.core import BoundedAffinePermutation
from PositroidToolkit.affine.Necklaces import necklace_of
from PositroidToolkit.errors import MismatchedShape
from PositroidToolkit.tableaux.core import RectTableau, all_tableaux, inverse_promote, weight


class CrystalSubset:
    """Explicit subset of B(d omega_k) with entries in [n].

    Attributes
    ----------
    k, d, n : int
    tableaux : frozenset of RectTableau
    """

    def __init__(self, k: int, d: int, n: int, tableaux: Iterable[RectTableau]):
        self.k = k
        self.d = d
        self.n = n
        self.tableaux = frozenset(tableaux)

    def __len__(self) -> int:
        return len(self.tableaux)

    def __contains__(self, tableau: RectTableau) -> bool:
        return tableau in self.tableaux

    def __iter__(self):
        return iter(sorted(self.tableaux))

    def __eq__(self, other) -> bool:
        return isinstance(other, CrystalSubset) and self.tableaux == other.tableaux


def dominates(tableau: RectTableau, subset: Iterable[int]) -> bool:
    """T >= T_I cell by cell; rows increase, so the first column decides."""
    return all(tableau[a, 0] >= i for a, i in enumerate(sorted(subset)))


def demazure_crystal(subset: Iterable[int], d: int, n: int) -> CrystalSubset:
    """B_I(d omega_k): tableaux entrywise at least T_I."""
    subset = sorted(subset)
    return CrystalSubset(len(subset), d, n, [t for t in all_tableaux(len(subset), d, n) if dominates(t, subset)])


def in_cyclic_demazure(f: BoundedAffinePermutation, tableau: RectTableau) -> bool:
    """T lies in chi^{a-1}(B_{chi^{1-a}(I_a)}) for every a, the I_a running over the Grassmann necklace of f."""
    n = f.n
    necklace = necklace_of(f)
    current = tableau
    for a in range(1, n + 1):
        if a > 1:
            current = inverse_promote(current)
        shifted = [(i - a) % n + 1 for i in necklace[a]]
        if not dominates(current, shifted):
            return False
    return True


def cyclic_demazure(f: BoundedAffinePermutation, d: int) -> CrystalSubset:
    """B_f(d omega_k), filtered out of B(d omega_k)."""
    found = [t for t in all_tableaux(f.k, d, f.n) if in_cyclic_demazure(f, t)]
    logging.debug(f"Cyclic Demazure crystal of {f} in degree {d}: {len(found)} tableaux")
    return CrystalSubset(f.k, d, f.n, found)


def nonvanishing_predicate(f: BoundedAffinePermutation, tableau: RectTableau) -> bool:
    """Whether the degree-two dual canonical basis element of T survives on Pi_f, i.e. T is in B_f(2 omega_k)."""
    if tableau.d != 2 or tableau.k != f.k or tableau.n != f.n:
        raise MismatchedShape(f"Expected a {f.k} x 2 tableau on [{f.n}]")
    return in_cyclic_demazure(f, tableau)


def character(crystal: CrystalSubset):
    """Sum of x^wt(T) as a polynomial over ZZ in x1, ..., xn."""
    R, *gens = ring(",".join(f"x{i}" for i in range(1, crystal.n + 1)), ZZ)
    total = R.zero
    for tableau in crystal.tableaux:
        term = R.one
        for x, power in zip(gens, weight(tableau)):
            term *= x ** power
        total += term
    return total

