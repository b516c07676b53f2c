from typing import FrozenSet, Iterable, Sequence, Tuple

from PositroidToolkit.affine.core import BoundedAffinePermutation, from_window
from PositroidToolkit.errors import InvalidInput, InvalidNecklace


def format_subset(subset: Iterable[int], n: int) -> str:
    """Digits run together for n < 10, otherwise a braced comma list."""
    items = sorted(subset)
    if n < 10:
        return "".join(str(i) for i in items) if items else "{}"
    return "{" + ",".join(str(i) for i in items) + "}"


def parse_subset(text: str) -> Tuple[int, ...]:
    text = text.strip()
    if text.startswith("{"):
        body = text.strip("{}").strip()
        return tuple(sorted(int(t) for t in body.split(",") if t.strip())) if body else ()
    if not text.isdigit():
        raise InvalidInput(f"Cannot parse subset {text!r}")
    return tuple(sorted(int(c) for c in text))


class GrassmannNecklace:
    """A (k,n)-Grassmann necklace I_1, ..., I_n.

    Attributes
    ----------
    subsets : tuple of frozenset
        I_a at index a - 1.
    n : int
    k : int
    """

    def __init__(self, subsets: Sequence[Iterable[int]], n: int = None):
        self.subsets: Tuple[FrozenSet[int], ...] = tuple(frozenset(s) for s in subsets)
        self.n = len(self.subsets) if n is None else n
        self.k = len(self.subsets[0]) if self.subsets else 0

    def __getitem__(self, a: int) -> FrozenSet[int]:
        """I_a with cyclic indexing."""
        return self.subsets[(a - 1) % self.n]

    def __eq__(self, other) -> bool:
        return isinstance(other, GrassmannNecklace) and self.subsets == other.subsets

    def __hash__(self):
        return hash(self.subsets)

    def __repr__(self) -> str:
        return f"GrassmannNecklace({str(self)})"

    def __str__(self) -> str:
        return "(" + ",".join(format_subset(s, self.n) for s in self.subsets) + ")"


def validate_necklace(subsets: Sequence[Iterable[int]]) -> GrassmannNecklace:
    necklace = GrassmannNecklace(subsets)
    n, k = necklace.n, necklace.k
    if n == 0:
        raise InvalidNecklace("Empty necklace")
    for a in range(1, n + 1):
        current, following = necklace[a], necklace[a + 1]
        if len(current) != k or not current <= set(range(1, n + 1)):
            raise InvalidNecklace(f"I_{a} = {sorted(current)} is not a {k}-subset of [{n}]")
        if a not in current:
            if following != current:
                raise InvalidNecklace(f"{a} is not in I_{a} but I_{a + 1} != I_{a}")
        elif not current - {a} <= following:
            raise InvalidNecklace(f"I_{a + 1} = {sorted(following)} does not contain I_{a} - {{{a}}}")
    return necklace


def parse_necklace(text: str) -> GrassmannNecklace:
    """Parses "(13,23,34,46,56,16)" or, for n >= 10, "({1,3},{2,3},...)"."""
    body = text.strip().strip("()").strip()
    if "{" in body:
        parts = [p + "}" for p in body.replace(" ", "").split("}") if p.strip(",")]
        subsets = [parse_subset(p.strip(",")) for p in parts]
    else:
        subsets = [parse_subset(p) for p in body.split(",")]
    return validate_necklace(subsets)


def necklace_of(f: BoundedAffinePermutation) -> GrassmannNecklace:
    """I_a = {f(b) mod n : b < a, f(b) >= a}."""
    n = f.n
    subsets = []
    for a in range(1, n + 1):
        subsets.append({(f(b) - 1) % n + 1 for b in range(a - n, a) if f(b) >= a})
    return GrassmannNecklace(subsets)


def perm_of(necklace: GrassmannNecklace) -> BoundedAffinePermutation:
    """Inverse of necklace_of: f(a) is the element replacing a when passing from I_a to I_{a+1}."""
    necklace = validate_necklace(necklace.subsets)
    n = necklace.n
    window = []
    for a in range(1, n + 1):
        current, following = necklace[a], necklace[a + 1]
        if a not in current:
            window.append(a)
            continue
        new = following - (current - {a})
        (b,) = new
        window.append(a + n if b == a else (b if b > a else b + n))
    try:
        return from_window(window, expect_k=necklace.k)
    except InvalidInput as exc:
        raise InvalidNecklace(f"{necklace} does not come from a bounded affine permutation: {exc}") from exc
