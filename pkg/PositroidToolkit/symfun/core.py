import re
from functools import lru_cache
from itertools import permutations
from typing import Dict, Iterable, Iterator, List, Sequence, Tuple

from PositroidToolkit.errors import InvalidInput

Partition = Tuple[int, ...]


def as_partition(parts: Iterable[int]) -> Partition:
    """Drops trailing zeros and checks that the parts weakly decrease."""
    parts = tuple(int(p) for p in parts)
    while parts and parts[-1] == 0:
        parts = parts[:-1]
    if any(p < 0 for p in parts) or any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
        raise InvalidInput(f"{list(parts)} is not a partition")
    return parts


def partitions(total: int, max_part: int = None, max_len: int = None) -> Iterator[Partition]:
    """Partitions of total in lexicographically decreasing order."""
    if max_part is None:
        max_part = total
    if total == 0:
        yield ()
        return
    if max_len == 0:
        return
    for first in range(min(total, max_part), 0, -1):
        for rest in partitions(total - first, first, None if max_len is None else max_len - 1):
            yield (first,) + rest


def conjugate(partition: Partition) -> Partition:
    if not partition:
        return ()
    return tuple(sum(1 for p in partition if p > j) for j in range(partition[0]))


def _outer_strips(partition: Partition, size: int) -> Iterator[Partition]:
    """Partitions nu with nu / partition a horizontal strip of the given size."""
    rows = list(partition) + [0]

    def extend(i, left, grown):
        if i == len(rows):
            if left == 0:
                yield tuple(p for p in grown if p)
            return
        cap = left if i == 0 else min(left, rows[i - 1] - rows[i])
        for add in range(cap, -1, -1):
            yield from extend(i + 1, left - add, grown + [rows[i] + add])

    yield from extend(0, size, [])


def _inner_strips(partition: Partition, size: int) -> Iterator[Partition]:
    """Partitions nu with partition / nu a horizontal strip of the given size."""
    rows = list(partition)

    def shrink(i, left, kept):
        if i == len(rows):
            if left == 0:
                yield tuple(p for p in kept if p)
            return
        floor = rows[i + 1] if i + 1 < len(rows) else 0
        for remove in range(min(left, rows[i] - floor), -1, -1):
            yield from shrink(i + 1, left - remove, kept + [rows[i] - remove])

    yield from shrink(0, size, [])


@lru_cache(maxsize=None)
def pieri(partition: Partition, size: int) -> Tuple[Partition, ...]:
    """Support of s_partition * h_size, each term with coefficient one."""
    return tuple(_outer_strips(partition, size))


@lru_cache(maxsize=None)
def kostka(shape: Partition, content: Tuple[int, ...]) -> int:
    """Number of semistandard tableaux of the given shape and content (content may be any composition)."""
    if sum(shape) != sum(content):
        return 0
    if not content:
        return 1
    return sum(kostka(nu, content[:-1]) for nu in _inner_strips(shape, content[-1]))


class SchurPolynomial:
    """Finite integer combination of Schur functions s_lambda.

    Attributes
    ----------
    coeffs : dict
        Partition -> nonzero int coefficient.
    """

    def __init__(self, coeffs: Dict[Sequence[int], int] = None):
        self.coeffs: Dict[Partition, int] = {}
        for shape, c in (coeffs or {}).items():
            shape = as_partition(shape)
            total = self.coeffs.get(shape, 0) + int(c)
            if total:
                self.coeffs[shape] = total
            else:
                self.coeffs.pop(shape, None)

    @classmethod
    def schur(cls, shape: Sequence[int]) -> "SchurPolynomial":
        return cls({tuple(shape): 1})

    @classmethod
    def h(cls, r: int) -> "SchurPolynomial":
        return cls({(r,): 1}) if r > 0 else cls({(): 1}) if r == 0 else cls()

    @classmethod
    def e(cls, r: int) -> "SchurPolynomial":
        return cls({(1,) * r: 1}) if r >= 0 else cls()

    def __getitem__(self, shape: Sequence[int]) -> int:
        return self.coeffs.get(as_partition(shape), 0)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = SchurPolynomial({(): other})
        return isinstance(other, SchurPolynomial) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(frozenset(self.coeffs.items()))

    def __add__(self, other: "SchurPolynomial") -> "SchurPolynomial":
        coeffs = dict(self.coeffs)
        for shape, c in other.coeffs.items():
            coeffs[shape] = coeffs.get(shape, 0) + c
        return SchurPolynomial(coeffs)

    def __neg__(self) -> "SchurPolynomial":
        return SchurPolynomial({shape: -c for shape, c in self.coeffs.items()})

    def __sub__(self, other: "SchurPolynomial") -> "SchurPolynomial":
        return self + (-other)

    def __mul__(self, other) -> "SchurPolynomial":
        if isinstance(other, int):
            return SchurPolynomial({shape: c * other for shape, c in self.coeffs.items()})
        return multiply(self, other)

    __rmul__ = __mul__

    def __repr__(self) -> str:
        return f"SchurPolynomial({format_schur(self)!r})"

    def __str__(self) -> str:
        return format_schur(self)

    def is_zero(self) -> bool:
        return not self.coeffs

    def items(self) -> List[Tuple[Partition, int]]:
        return sorted(self.coeffs.items(), key=_print_key)

    def homogeneous(self, degree: int) -> "SchurPolynomial":
        return SchurPolynomial({shape: c for shape, c in self.coeffs.items() if sum(shape) == degree})

    def degrees(self) -> List[int]:
        return sorted({sum(shape) for shape in self.coeffs})


def _print_key(item):
    shape = item[0]
    return sum(shape), tuple(-p for p in shape)


def _times_h(poly: Dict[Partition, int], sizes: Sequence[int]) -> Dict[Partition, int]:
    for size in sizes:
        out: Dict[Partition, int] = {}
        for shape, c in poly.items():
            for grown in pieri(shape, size):
                out[grown] = out.get(grown, 0) + c
        poly = out
    return poly


def _sign(perm: Sequence[int]) -> int:
    sign = 1
    for i in range(len(perm)):
        for j in range(i + 1, len(perm)):
            if perm[i] > perm[j]:
                sign = -sign
    return sign


@lru_cache(maxsize=None)
def _jacobi_trudi(shape: Partition) -> Tuple[Tuple[Tuple[int, ...], int], ...]:
    """s_shape = sum of sign * h_{a_1} ... h_{a_l} over the permutations of the Jacobi-Trudi determinant."""
    length = len(shape)
    terms = []
    for perm in permutations(range(length)):
        sizes = tuple(shape[i] - i + perm[i] for i in range(length))
        if all(a >= 0 for a in sizes):
            terms.append((sizes, _sign(perm)))
    return tuple(terms)


def multiply(a: SchurPolynomial, b: SchurPolynomial) -> SchurPolynomial:
    """Product in the ring of symmetric functions, by Jacobi-Trudi on the right factor and Pieri."""
    out: Dict[Partition, int] = {}
    for mu, cb in b.coeffs.items():
        for sizes, sign in _jacobi_trudi(mu):
            for shape, c in _times_h(dict(a.coeffs), sizes).items():
                out[shape] = out.get(shape, 0) + sign * cb * c
    return SchurPolynomial(out)


def monomial_to_schur(monomials: Dict[Sequence[int], int]) -> SchurPolynomial:
    """Schur expansion of sum c_mu m_mu, by a triangular solve against Kostka numbers.

    Parameters
    ----------
    monomials : dict
        Partition -> coefficient of the monomial symmetric function m_mu.
    """
    monomials = {as_partition(mu): c for mu, c in monomials.items() if c}
    out: Dict[Partition, int] = {}
    for degree in sorted({sum(mu) for mu in monomials}):
        solved: List[Tuple[Partition, int]] = []
        for shape in partitions(degree):
            c = monomials.get(shape, 0) - sum(a * kostka(nu, shape) for nu, a in solved)
            if c:
                solved.append((shape, c))
                out[shape] = c
    return SchurPolynomial(out)


def format_partition(shape: Partition) -> str:
    return "s[" + ",".join(str(p) for p in shape) + "]"


def format_schur(poly: SchurPolynomial) -> str:
    """Terms by degree, then lexicographically decreasing: "s[2,2] + s[2,1,1] - s[1,1,1,1]"."""
    if poly.is_zero():
        return "0"
    text = ""
    for shape, c in poly.items():
        body = format_partition(shape) if abs(c) == 1 else f"{abs(c)}*{format_partition(shape)}"
        if not text:
            text = body if c > 0 else f"-{body}"
        else:
            text += f" + {body}" if c > 0 else f" - {body}"
    return text


_TERM = re.compile(r"([+-]?)\s*(?:(\d+)\s*[*·]?\s*)?(?:s\[([\d,\s]*)\]|s(\d+))|([+-]?)\s*(\d+)")


def parse_schur(text: str) -> SchurPolynomial:
    """Reads format_schur output; also accepts compact shapes like "s22 + 2*s21" and integer constants."""
    body = text.strip()
    if body in ("", "0"):
        return SchurPolynomial()
    coeffs: Dict[Partition, int] = {}
    position = 0
    for match in _TERM.finditer(body):
        if body[position:match.start()].strip():
            raise InvalidInput(f"Cannot parse Schur polynomial {text!r}")
        position = match.end()
        sign, count, bracket, compact, const_sign, const = match.groups()
        if const is not None:
            shape, c, sign = (), int(const), const_sign
        elif bracket is not None:
            shape = as_partition(int(t) for t in bracket.replace(",", " ").split())
            c = int(count) if count else 1
        else:
            shape = as_partition(int(ch) for ch in compact)
            c = int(count) if count else 1
        c = -c if sign == "-" else c
        coeffs[shape] = coeffs.get(shape, 0) + c
    if body[position:].strip():
        raise InvalidInput(f"Cannot parse Schur polynomial {text!r}")
    return SchurPolynomial(coeffs)
