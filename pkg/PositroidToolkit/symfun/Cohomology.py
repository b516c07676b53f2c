import logging
from typing import Iterable, Tuple

from PositroidToolkit.affine.core import BoundedAffinePermutation, k2_type
from PositroidToolkit.errors import DimensionMismatch, InvalidInput, WrongK
from PositroidToolkit.symfun.AffineStanley import affine_stanley
from PositroidToolkit.symfun.core import Partition, SchurPolynomial, as_partition, format_schur, multiply


def fits(shape: Partition, k: int, n: int) -> bool:
    """shape lies in the k x (n - k) rectangle."""
    return len(shape) <= k and (not shape or shape[0] <= n - k)


def eta(poly: SchurPolynomial, k: int, n: int) -> "CohomClass":
    """Quotient map to H*(Gr(k, n)): s_lambda survives exactly when lambda fits the k x (n - k) box."""
    return CohomClass(k, n, SchurPolynomial({shape: c for shape, c in poly.coeffs.items() if fits(shape, k, n)}))


class CohomClass:
    """Class in H*(Gr(k, n)) written in the Schubert basis.

    Attributes
    ----------
    k, n : int
    poly : SchurPolynomial
        Supported on partitions inside the k x (n - k) box.
    """

    def __init__(self, k: int, n: int, poly: SchurPolynomial):
        if not 0 <= k <= n:
            raise WrongK(f"k = {k} is not in [0, {n}]")
        for shape in poly.coeffs:
            if not fits(shape, k, n):
                raise InvalidInput(f"s{list(shape)} does not fit the {k} x {n - k} box")
        self.k = k
        self.n = n
        self.poly = poly

    def _check(self, other: "CohomClass"):
        if (self.k, self.n) != (other.k, other.n):
            raise DimensionMismatch(f"H*(Gr({self.k},{self.n})) and H*(Gr({other.k},{other.n}))")

    def __add__(self, other: "CohomClass") -> "CohomClass":
        self._check(other)
        return CohomClass(self.k, self.n, self.poly + other.poly)

    def __mul__(self, other: "CohomClass") -> "CohomClass":
        self._check(other)
        return eta(multiply(self.poly, other.poly), self.k, self.n)

    def __eq__(self, other) -> bool:
        return isinstance(other, CohomClass) and (self.k, self.n) == (other.k, other.n) and self.poly == other.poly

    def __getitem__(self, shape):
        return self.poly[shape]

    def __repr__(self) -> str:
        return f"CohomClass({self.k}, {self.n}, {format_schur(self.poly)!r})"

    def __str__(self) -> str:
        return format_schur(self.poly)

    def is_zero(self) -> bool:
        return self.poly.is_zero()


def rectangle(k: int, n: int) -> Partition:
    return (n - k,) * k if n > k else ()


def complement(shape: Iterable[int], k: int, n: int) -> Partition:
    """lambda^c = (n-k-lambda_k, ..., n-k-lambda_1), the dual Schubert index."""
    shape = as_partition(shape)
    if not fits(shape, k, n):
        raise InvalidInput(f"s{list(shape)} does not fit the {k} x {n - k} box")
    padded = list(shape) + [0] * (k - len(shape))
    return as_partition(n - k - p for p in reversed(padded))


def pairing(a: CohomClass, b: CohomClass) -> int:
    """Coefficient of the point class in a * b."""
    return (a * b)[rectangle(a.k, a.n)]


def subset_of_partition(shape: Iterable[int], k: int) -> Tuple[int, ...]:
    """I(lambda) = {lambda_k + 1, lambda_{k-1} + 2, ..., lambda_1 + k}."""
    shape = as_partition(shape)
    if len(shape) > k:
        raise InvalidInput(f"s{list(shape)} has more than {k} rows")
    padded = list(shape) + [0] * (k - len(shape))
    return tuple(padded[k - j] + j for j in range(1, k + 1))


def partition_of_subset(subset: Iterable[int], n: int) -> Partition:
    """Inverse of subset_of_partition for a k-subset of [n]."""
    subset = sorted(subset)
    if len(set(subset)) != len(subset) or not all(1 <= i <= n for i in subset):
        raise InvalidInput(f"{subset} is not a subset of [{n}]")
    k = len(subset)
    return as_partition(subset[k - 1 - t] - (k - t) for t in range(k))


def positroid_class(f: BoundedAffinePermutation) -> CohomClass:
    """[Pi_f] as the image of the affine Stanley function in H*(Gr(k, n))."""
    return eta(affine_stanley(f), f.k, f.n)


def k2_class(f: BoundedAffinePermutation) -> CohomClass:
    """[Pi_f] for k = 2 from the type (alpha; beta_1, ..., beta_r): (h_{beta_1 - 1} ... h_{beta_r - 1}) shifted by alpha columns."""
    if f.k != 2:
        raise WrongK(f"{f} has k = {f.k}, expected 2")
    alpha, betas = k2_type(f)
    product = SchurPolynomial.h(0)
    for beta in betas:
        product = multiply(product, SchurPolynomial.h(beta - 1))
    shifted = {}
    for shape, c in product.coeffs.items():
        if len(shape) <= 2:
            padded = list(shape) + [0] * (2 - len(shape))
            shifted[tuple(p + alpha for p in padded)] = c
    return eta(SchurPolynomial(shifted), 2, f.n)


def truncate(c: CohomClass, r: int) -> CohomClass:
    """tau_r: keeps the s_lambda whose k rows all have at least n - r boxes and strips those n - r columns."""
    k, n = c.k, c.n
    if not k < r <= n:
        raise InvalidInput(f"Truncation needs {k} < r <= {n}, got r = {r}")
    shift = n - r
    out = {}
    for shape, coeff in c.poly.coeffs.items():
        padded = list(shape) + [0] * (k - len(shape))
        if padded and min(padded) < shift:
            continue
        mu = tuple(p - shift for p in padded)
        if not mu or mu[0] <= r - k:
            out[mu] = coeff
    return CohomClass(k, r, SchurPolynomial(out))


def is_independent(f: BoundedAffinePermutation, r: int) -> bool:
    """Nonvanishing of the truncated class; the amplituhedron class is this truncation divided by an unknown degree."""
    truncated = truncate(positroid_class(f), r)
    logging.debug(f"tau_{r} of {f}: {truncated}")
    return not truncated.is_zero()


def intersects_exceptional(f: BoundedAffinePermutation, r: int) -> bool:
    """Whether Pi_f meets the exceptional locus of a generic projection to Gr(k, r): [Pi_f] * s_{r-k+1} != 0."""
    k, n = f.k, f.n
    if not k < r <= n:
        raise InvalidInput(f"Needs {k} < r <= {n}, got r = {r}")
    product = multiply(affine_stanley(f), SchurPolynomial.h(r - k + 1))
    return not eta(product, k, n).is_zero()
