import logging
from functools import lru_cache
from typing import Iterable, List, Sequence, Tuple

from PositroidToolkit.config import BOUND_CACHE_SIZE
from PositroidToolkit.errors import InvalidInput, NotBijective, NotBounded, WrongK

BLACK = "black"
WHITE = "white"


def extend(window: Sequence[int], i: int) -> int:
    """Value at any integer of the affine permutation given by its window, f(i+n) = f(i)+n."""
    n = len(window)
    return window[(i - 1) % n] + n * ((i - 1) // n)


def affine_length(window: Sequence[int]) -> int:
    """Number of inversions of an affine permutation, counted through its window.

    Uses sum over 1 <= i < j <= n of |floor((w(j) - w(i)) / n)|.
    """
    n = len(window)
    return sum(abs((window[j] - window[i]) // n) for i in range(n) for j in range(i + 1, n))


def left_multiply(window: Sequence[int], i: int) -> Tuple[int, ...]:
    """Window of s_i * w, acting on values: x = i mod n goes to x+1 and x = i+1 mod n to x-1."""
    n = len(window)
    out = []
    for x in window:
        if (x - i) % n == 0:
            out.append(x + 1)
        elif (x - i - 1) % n == 0:
            out.append(x - 1)
        else:
            out.append(x)
    return tuple(out)


def right_multiply_window(window: Sequence[int], i: int) -> Tuple[int, ...]:
    """Window of w * s_i, acting on positions i and i+1 (i = n swaps n and n+1)."""
    n = len(window)
    out = list(window)
    if i % n == 0:
        out[n - 1], out[0] = window[0] + n, window[n - 1] - n
    else:
        out[i - 1], out[i] = window[i], window[i - 1]
    return tuple(out)


class BoundedAffinePermutation:
    """A (k,n)-bounded affine permutation.

    Attributes
    ----------
    window : tuple of int
        Values [f(1), ..., f(n)].
    n : int
        Period.
    k : int
        Sum of f(i) - i divided by n.
    """

    def __init__(self, window: Sequence[int], k: int):
        self.window = tuple(window)
        self.n = len(self.window)
        self.k = k

    def __call__(self, i: int) -> int:
        return extend(self.window, i)

    def __eq__(self, other) -> bool:
        return isinstance(other, BoundedAffinePermutation) and self.window == other.window

    def __hash__(self):
        return hash(self.window)

    def __lt__(self, other) -> bool:
        return self.window < other.window

    def __repr__(self) -> str:
        return f"BoundedAffinePermutation({list(self.window)}, k={self.k})"

    def __str__(self) -> str:
        return "[" + ",".join(str(v) for v in self.window) + "]"

    def is_loop(self, i: int) -> bool:
        return self(i) == i

    def is_coloop(self, i: int) -> bool:
        return self(i) == i + self.n


def from_window(window: Iterable[int], expect_k: int = None) -> BoundedAffinePermutation:
    """Validates a window and builds the bounded affine permutation.

    Parameters
    ----------
    window : iterable of int
        The values [f(1), ..., f(n)].
    expect_k : int, optional
        If given, the computed k must agree.

    Returns
    -------
    BoundedAffinePermutation
    """
    window = [int(v) for v in window]
    n = len(window)
    if n == 0:
        raise InvalidInput("Empty window")
    residues = {v % n for v in window}
    if len(residues) != n:
        raise NotBijective(f"Window {window} repeats a value modulo {n}")
    for i, v in enumerate(window, start=1):
        if not i <= v <= i + n:
            raise NotBounded(f"f({i}) = {v} is outside [{i}, {i + n}]")
    k = sum(v - i for i, v in enumerate(window, start=1)) // n
    if expect_k is not None and k != expect_k:
        raise WrongK(f"Window {window} has k = {k}, expected {expect_k}")
    return BoundedAffinePermutation(window, k)


def parse_window(text: str) -> BoundedAffinePermutation:
    """Parses "[2,4,6,5,7,9]" or the compact digit form "[2547]"."""
    body = text.strip().strip("[]").strip()
    if not body:
        raise InvalidInput(f"Empty window {text!r}")
    try:
        if "," in body or " " in body:
            values = [int(t) for t in body.replace(",", " ").split()]
        else:
            values = [int(c) for c in body]
    except ValueError as exc:
        raise InvalidInput(f"Cannot parse window {text!r}") from exc
    return from_window(values)


def identity(k: int, n: int) -> BoundedAffinePermutation:
    """The top cell permutation id(i) = i + k."""
    if not 0 <= k <= n:
        raise WrongK(f"k = {k} is not in [0, {n}]")
    return BoundedAffinePermutation([i + k for i in range(1, n + 1)], k)


def t_I(subset: Iterable[int], n: int) -> BoundedAffinePermutation:
    """The permutation with f(i) = i + n for i in I and f(i) = i otherwise."""
    subset = set(subset)
    if not subset <= set(range(1, n + 1)):
        raise InvalidInput(f"{sorted(subset)} is not a subset of [{n}]")
    return BoundedAffinePermutation([i + n if i in subset else i for i in range(1, n + 1)], len(subset))


def length(f: BoundedAffinePermutation) -> int:
    return affine_length(f.window)


def dimension(f: BoundedAffinePermutation) -> int:
    """Dimension k(n-k) - length of the positroid cell."""
    return f.k * (f.n - f.k) - length(f)


def rotate(f: BoundedAffinePermutation, times: int = 1) -> BoundedAffinePermutation:
    """Cyclic rotation g(i) = f(i-1) + 1."""
    window = f.window
    for _ in range(times % f.n):
        window = tuple(extend(window, i - 1) + 1 for i in range(1, f.n + 1))
    return BoundedAffinePermutation(window, f.k)


def right_multiply(f: BoundedAffinePermutation, i: int) -> BoundedAffinePermutation:
    """f * s_i, validated as a bounded affine permutation."""
    return from_window(right_multiply_window(f.window, i), expect_k=f.k)


def insert_fixed_point(f: BoundedAffinePermutation, i: int, color: str) -> BoundedAffinePermutation:
    """Inserts a new position i (1 <= i <= n+1) as a loop (black) or coloop (white)."""
    n = f.n
    if not 1 <= i <= n + 1:
        raise InvalidInput(f"Cannot insert position {i} into a window of length {n}")
    if color not in (BLACK, WHITE):
        raise InvalidInput(f"Unknown lollipop color {color!r}")
    window = []
    for j in range(1, n + 2):
        if j == i:
            window.append(i if color == BLACK else i + n + 1)
            continue
        old = j if j < i else j - 1
        v = f(old)
        m, r = (v - 1) // n, (v - 1) % n + 1
        window.append(m * (n + 1) + (r if r < i else r + 1))
    return BoundedAffinePermutation(window, f.k + (1 if color == WHITE else 0))


def remove_fixed_point(f: BoundedAffinePermutation, i: int) -> BoundedAffinePermutation:
    """Inverse of insert_fixed_point: deletes the loop or coloop at position i."""
    n = f.n
    if not (f.is_loop(i) or f.is_coloop(i)):
        raise InvalidInput(f"Position {i} of {f} is not a fixed point")
    window = []
    for j in range(1, n + 1):
        if j == i:
            continue
        v = f(j)
        m, r = (v - 1) // n, (v - 1) % n + 1
        window.append(m * (n - 1) + (r if r < i else r - 1))
    return BoundedAffinePermutation(window, f.k - (1 if f.is_coloop(i) else 0))


@lru_cache(maxsize=BOUND_CACHE_SIZE)
def _bound_windows(k: int, n: int) -> Tuple[Tuple[int, ...], ...]:
    target = k * n + n * (n + 1) // 2
    found = []

    def backtrack(i, used, window, total):
        if i > n:
            if total == target:
                found.append(tuple(window))
            return
        remaining = n - i + 1
        # every remaining value lies in [j, j+n]
        low = sum(range(i, n + 1))
        if total + low > target or total + low + n * remaining < target:
            return
        for v in range(i, i + n + 1):
            if v % n in used:
                continue
            used.add(v % n)
            window.append(v)
            backtrack(i + 1, used, window, total + v)
            window.pop()
            used.discard(v % n)

    backtrack(1, set(), [], 0)
    return tuple(sorted(found))


def enumerate_bound(k: int, n: int) -> List[BoundedAffinePermutation]:
    """All of Bound(k, n), sorted by window."""
    if not 0 <= k <= n:
        raise WrongK(f"k = {k} is not in [0, {n}]")
    windows = _bound_windows(k, n)
    logging.info(f"Bound({k},{n}) has {len(windows)} elements")
    return [BoundedAffinePermutation(w, k) for w in windows]


def k2_type(f: BoundedAffinePermutation) -> Tuple[int, Tuple[int, ...]]:
    """Type (alpha; beta_1, ..., beta_r) of a k = 2 permutation.

    alpha counts the zero columns (loops); the remaining positions split into cyclic runs of
    parallel columns, i linked to the next non-loop j exactly when f(i) = j.
    """
    if f.k != 2:
        raise WrongK(f"{f} has k = {f.k}, expected 2")
    n = f.n
    live = [i for i in range(1, n + 1) if not f.is_loop(i)]
    alpha = n - len(live)
    linked = []
    for idx, i in enumerate(live):
        nxt = live[(idx + 1) % len(live)] + (n if idx + 1 == len(live) else 0)
        linked.append(f(i) == nxt)
    # start from a position whose predecessor is not linked to it
    start = next(idx for idx in range(len(live)) if not linked[idx - 1])
    betas = []
    run = 0
    for step in range(len(live)):
        idx = (start + step) % len(live)
        run += 1
        if not linked[idx]:
            betas.append(run)
            run = 0
    return alpha, tuple(betas)
