from functools import lru_cache
from itertools import combinations
from typing import Iterable, List, Sequence, Tuple

from PositroidToolkit.errors import InvalidTableau, MismatchedShape

HOLE = None


class RectTableau:
    """Semistandard tableau of rectangular shape k x d with entries in [n].

    Attributes
    ----------
    rows : tuple of tuple of int
    n : int
    """

    def __init__(self, rows: Iterable[Sequence[int]], n: int):
        self.rows = tuple(tuple(int(x) for x in row) for row in rows)
        self.n = n
        widths = {len(row) for row in self.rows}
        if len(widths) > 1:
            raise MismatchedShape(f"Rows of lengths {sorted(widths)} do not form a rectangle")
        for row in self.rows:
            if not all(1 <= x <= n for x in row):
                raise InvalidTableau(f"Row {list(row)} has an entry outside [{n}]")
            if any(row[j] > row[j + 1] for j in range(len(row) - 1)):
                raise InvalidTableau(f"Row {list(row)} is not weakly increasing")
        for a in range(len(self.rows) - 1):
            if any(x >= y for x, y in zip(self.rows[a], self.rows[a + 1])):
                raise InvalidTableau(f"Rows {a + 1} and {a + 2} break a strictly increasing column")

    @property
    def k(self) -> int:
        return len(self.rows)

    @property
    def d(self) -> int:
        return len(self.rows[0]) if self.rows else 0

    def columns(self) -> List[Tuple[int, ...]]:
        return [tuple(row[j] for row in self.rows) for j in range(self.d)]

    def __getitem__(self, cell: Tuple[int, int]) -> int:
        a, b = cell
        return self.rows[a][b]

    def __eq__(self, other) -> bool:
        return isinstance(other, RectTableau) and (self.rows, self.n) == (other.rows, other.n)

    def __hash__(self):
        return hash((self.rows, self.n))

    def __lt__(self, other) -> bool:
        return self.columns() < other.columns()

    def __repr__(self) -> str:
        return f"RectTableau({[list(r) for r in self.rows]}, n={self.n})"

    def __str__(self) -> str:
        return format_tableau(self)


def weight(tableau: RectTableau) -> Tuple[int, ...]:
    """(alpha_1, ..., alpha_n), alpha_i the number of i's."""
    counts = [0] * tableau.n
    for row in tableau.rows:
        for x in row:
            counts[x - 1] += 1
    return tuple(counts)


def tableau_of_columns(columns: Sequence[Iterable[int]], n: int) -> RectTableau:
    columns = [sorted(c) for c in columns]
    k = len(columns[0]) if columns else 0
    return RectTableau([[c[a] for c in columns] for a in range(k)], n)


def column_tableau(I: Iterable[int], d: int, n: int) -> RectTableau:
    """T_I: row a filled with the a-th smallest element of I."""
    return tableau_of_columns([sorted(I)] * d, n)


@lru_cache(maxsize=None)
def _chains(k: int, d: int, n: int) -> Tuple[Tuple[Tuple[int, ...], ...], ...]:
    subsets = list(combinations(range(1, n + 1), k))
    out = []

    def extend(chain):
        if len(chain) == d:
            out.append(tuple(chain))
            return
        for c in subsets:
            if not chain or all(x <= y for x, y in zip(chain[-1], c)):
                extend(chain + [c])

    extend([])
    return tuple(out)


def all_tableaux(k: int, d: int, n: int) -> List[RectTableau]:
    """B(d omega_k): weakly increasing chains of d columns, each a k-subset of [n]."""
    return [tableau_of_columns(chain, n) for chain in _chains(k, d, n)]


def _slide_inward(grid, holes):
    """Reverse jeu de taquin: each hole moves up or left, the larger neighbor (the upper one on ties) filling it."""
    k, d = len(grid), len(grid[0])
    for a, b in holes:
        while True:
            up = grid[a - 1][b] if a > 0 else HOLE
            left = grid[a][b - 1] if b > 0 else HOLE
            if up is HOLE and left is HOLE:
                break
            if left is HOLE or (up is not HOLE and up >= left):
                grid[a][b], a = up, a - 1
            else:
                grid[a][b], b = left, b - 1
            grid[a][b] = HOLE


def _slide_outward(grid, holes):
    """Jeu de taquin: each hole moves down or right, the smaller neighbor (the lower one on ties) filling it."""
    k, d = len(grid), len(grid[0])
    for a, b in holes:
        while True:
            down = grid[a + 1][b] if a + 1 < k else HOLE
            right = grid[a][b + 1] if b + 1 < d else HOLE
            if down is HOLE and right is HOLE:
                break
            if right is HOLE or (down is not HOLE and down <= right):
                grid[a][b], a = down, a + 1
            else:
                grid[a][b], b = right, b + 1
            grid[a][b] = HOLE


def promote(tableau: RectTableau) -> RectTableau:
    """Promotion: delete the n's, slide the rest to the bottom right, add one, fill the holes with 1."""
    n = tableau.n
    if not tableau.rows or not tableau.d:
        return tableau
    grid = [[HOLE if x == n else x for x in row] for row in tableau.rows]
    holes = sorted(((a, b) for a, row in enumerate(grid) for b, x in enumerate(row) if x is HOLE),
                   key=lambda cell: (cell[1], -cell[0]))
    _slide_inward(grid, holes)
    return RectTableau([[1 if x is HOLE else x + 1 for x in row] for row in grid], n)


def inverse_promote(tableau: RectTableau) -> RectTableau:
    """Inverse of promote: delete the 1's, slide the rest to the top left, subtract one, fill the holes with n."""
    n = tableau.n
    if not tableau.rows or not tableau.d:
        return tableau
    grid = [[HOLE if x == 1 else x for x in row] for row in tableau.rows]
    holes = sorted(((a, b) for a, row in enumerate(grid) for b, x in enumerate(row) if x is HOLE),
                   key=lambda cell: (-cell[1], cell[0]))
    _slide_outward(grid, holes)
    return RectTableau([[n if x is HOLE else x - 1 for x in row] for row in grid], n)


def format_tableau(tableau: RectTableau) -> str:
    return "\n".join(" ".join(str(x) for x in row) for row in tableau.rows)


def parse_tableau(text: str, n: int) -> RectTableau:
    """One row per line, entries separated by spaces or commas."""
    rows = []
    for line in text.strip().splitlines():
        line = line.strip()
        if not line:
            continue
        try:
            rows.append([int(t) for t in line.replace(",", " ").split()])
        except ValueError as exc:
            raise InvalidTableau(f"Cannot parse tableau row {line!r}") from exc
    return RectTableau(rows, n)
