from fractions import Fraction
from typing import Any, Iterable, List, Sequence, Tuple

import logging

from PositroidToolkit.errors import DegenerateSymbolicPivot, DimensionMismatch, IndexSize, InvalidInput


def is_zero(x) -> bool:
    """Exact zero test for Rat, int and sympy field elements."""
    return x == 0


def exact_quotient(x, y):
    """Divides two scalars without ever leaving exact arithmetic.

    Integers stay integers when the division is exact, Rat/int pairs become Fractions and
    symbolic field elements use the field division.
    """
    if isinstance(x, int) and isinstance(y, int):
        q, r = divmod(x, y)
        return q if r == 0 else Fraction(x, y)
    if isinstance(x, (int, Fraction)) and isinstance(y, (int, Fraction)):
        return Fraction(x) / Fraction(y)
    return x / y


def parse_rat(token: str) -> Fraction:
    """Parses "p/q", "p" or a decimal-free signed integer into a Fraction."""
    try:
        return Fraction(token.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise InvalidInput(f"Not a rational literal: {token!r}") from exc


def format_scalar(x) -> str:
    if isinstance(x, (int, Fraction)):
        return str(Fraction(x))
    return str(x)


class ExactMatrix:
    """Dense rectangular matrix over an exact scalar type.

    Attributes
    ----------
    rows : tuple of tuple
        Matrix entries, Rat (Fraction or int) or sympy field elements.
    nrows : int
        Number of rows.
    ncols : int
        Number of columns.
    """

    def __init__(self, rows: Iterable[Sequence[Any]], ncols: int = None):
        self.rows = tuple(tuple(r) for r in rows)
        widths = {len(r) for r in self.rows}
        if len(widths) > 1:
            raise DimensionMismatch(f"Rows of unequal length: {sorted(widths)}")
        self.nrows = len(self.rows)
        if self.rows:
            self.ncols = len(self.rows[0])
        else:
            self.ncols = ncols if ncols is not None else 0

    @classmethod
    def identity(cls, n: int) -> "ExactMatrix":
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, nrows: int, ncols: int) -> "ExactMatrix":
        return cls([[0] * ncols for _ in range(nrows)], ncols=ncols)

    def __getitem__(self, index: Tuple[int, int]):
        i, j = index
        return self.rows[i][j]

    def __eq__(self, other) -> bool:
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        if (self.nrows, self.ncols) != (other.nrows, other.ncols):
            return False
        return all(is_zero(a - b) for ra, rb in zip(self.rows, other.rows) for a, b in zip(ra, rb))

    def __hash__(self):
        return hash((self.nrows, self.ncols))

    def __repr__(self) -> str:
        return f"ExactMatrix({[list(r) for r in self.rows]!r})"

    def column(self, j: int) -> List[Any]:
        return [r[j] for r in self.rows]

    def columns(self) -> List[List[Any]]:
        return [self.column(j) for j in range(self.ncols)]

    def transpose(self) -> "ExactMatrix":
        return ExactMatrix([list(c) for c in zip(*self.rows)] if self.rows else [], ncols=self.nrows)

    def __mul__(self, other: "ExactMatrix") -> "ExactMatrix":
        if self.ncols != other.nrows:
            raise DimensionMismatch(f"Cannot multiply {self.nrows}x{self.ncols} by {other.nrows}x{other.ncols}")
        cols = other.columns()
        out = []
        for r in self.rows:
            out.append([sum((a * b for a, b in zip(r, c)), 0) for c in cols])
        return ExactMatrix(out, ncols=other.ncols)

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> "ExactMatrix":
        return ExactMatrix([[self.rows[i][j] for j in cols] for i in rows], ncols=len(cols))

    def stack(self, other: "ExactMatrix") -> "ExactMatrix":
        if self.nrows and other.nrows and self.ncols != other.ncols:
            raise DimensionMismatch(f"Cannot stack {self.ncols} columns on {other.ncols}")
        return ExactMatrix(self.rows + other.rows, ncols=max(self.ncols, other.ncols))

    def map(self, fn) -> "ExactMatrix":
        return ExactMatrix([[fn(x) for x in r] for r in self.rows], ncols=self.ncols)

    def delete_column(self, j: int) -> "ExactMatrix":
        return ExactMatrix([r[:j] + r[j + 1:] for r in self.rows], ncols=self.ncols - 1)

    def insert_column(self, j: int, values: Sequence[Any]) -> "ExactMatrix":
        return ExactMatrix([r[:j] + (v,) + r[j:] for r, v in zip(self.rows, values)], ncols=self.ncols + 1)

    def column_operation(self, target: int, source: int, factor) -> "ExactMatrix":
        """Returns the matrix with column `target` replaced by target + factor * source."""
        out = []
        for r in self.rows:
            row = list(r)
            row[target] = row[target] + factor * row[source]
            out.append(row)
        return ExactMatrix(out, ncols=self.ncols)

    def to_text(self) -> str:
        return "\n".join(" ".join(format_scalar(x) for x in r) for r in self.rows)


def parse_matrix(text: str) -> ExactMatrix:
    """Parses the row-list text form: one row per line, entries separated by spaces or commas."""
    rows = []
    for line in text.splitlines():
        line = line.split("#", 1)[0].strip().strip("[]")
        if not line:
            continue
        tokens = [t for t in line.replace(",", " ").replace("[", " ").replace("]", " ").split() if t]
        rows.append([parse_rat(t) for t in tokens])
    return ExactMatrix(rows)


def rref_rank(m: ExactMatrix) -> Tuple[int, ExactMatrix, List[int]]:
    """Computes the reduced row-echelon form of a matrix over a field.

    Parameters
    ----------
    m : ExactMatrix
        Matrix over Rat or a sympy rational function field.

    Returns
    -------
    tuple
        (rank, reduced matrix, 0-based pivot columns).
    """
    a = [list(r) for r in m.rows]
    nrows, ncols = m.nrows, m.ncols
    pivots = []
    row = 0
    for col in range(ncols):
        if row == nrows:
            break
        pivot_row = next((i for i in range(row, nrows) if not is_zero(a[i][col])), None)
        if pivot_row is None:
            continue
        a[row], a[pivot_row] = a[pivot_row], a[row]
        pivot = a[row][col]
        try:
            a[row] = [exact_quotient(x, pivot) for x in a[row]]
        except (ZeroDivisionError, TypeError) as exc:
            raise DegenerateSymbolicPivot(f"Cannot invert pivot {pivot} in column {col}") from exc
        for i in range(nrows):
            if i != row and not is_zero(a[i][col]):
                factor = a[i][col]
                a[i] = [x - factor * y for x, y in zip(a[i], a[row])]
        pivots.append(col)
        row += 1
    logging.debug(f"rref: rank {len(pivots)} of {nrows}x{ncols}")
    return len(pivots), ExactMatrix(a, ncols=ncols), pivots


def determinant(m: ExactMatrix):
    """Fraction-free Bareiss determinant of a square matrix."""
    n = m.nrows
    if n != m.ncols:
        raise DimensionMismatch(f"Determinant of a non-square {m.nrows}x{m.ncols} matrix")
    if n == 0:
        return 1
    a = [list(r) for r in m.rows]
    sign = 1
    previous = 1
    for k in range(n - 1):
        if is_zero(a[k][k]):
            swap = next((i for i in range(k + 1, n) if not is_zero(a[i][k])), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = exact_quotient(a[i][j] * a[k][k] - a[i][k] * a[k][j], previous)
        previous = a[k][k]
    return sign * a[n - 1][n - 1]


def cofactor_determinant(m: ExactMatrix):
    """Laplace expansion along the first row. Exponential; for cross-checks only."""
    n = m.nrows
    if n != m.ncols:
        raise DimensionMismatch(f"Determinant of a non-square {m.nrows}x{m.ncols} matrix")
    if n == 0:
        return 1
    total = 0
    for j in range(n):
        entry = m[0, j]
        if is_zero(entry):
            continue
        rest = m.submatrix(range(1, n), [c for c in range(n) if c != j])
        term = entry * cofactor_determinant(rest)
        total = total + term if j % 2 == 0 else total - term
    return total


def minor(m: ExactMatrix, rows: Sequence[int], cols: Sequence[int]):
    """Exact minor with the given 0-based row and column indices, in the given order."""
    rows, cols = list(rows), list(cols)
    if len(rows) != len(cols):
        raise IndexSize(f"Minor needs equal index sets, got {len(rows)} rows and {len(cols)} columns")
    if len(set(rows)) != len(rows) or len(set(cols)) != len(cols):
        raise IndexSize(f"Repeated index in minor rows={rows} cols={cols}")
    if any(not 0 <= i < m.nrows for i in rows) or any(not 0 <= j < m.ncols for j in cols):
        raise IndexSize(f"Minor index out of range for a {m.nrows}x{m.ncols} matrix")
    return determinant(m.submatrix(rows, cols))


def nullspace(m: ExactMatrix) -> List[List[Any]]:
    """Basis of the right kernel of m."""
    rank, reduced, pivots = rref_rank(m)
    free = [j for j in range(m.ncols) if j not in pivots]
    basis = []
    for f in free:
        v = [0] * m.ncols
        v[f] = 1
        for r, p in enumerate(pivots):
            v[p] = -reduced[r, f]
        basis.append(v)
    return basis


def row_basis(m: ExactMatrix) -> ExactMatrix:
    """Nonzero rows of the reduced row-echelon form."""
    rank, reduced, _ = rref_rank(m)
    return ExactMatrix(reduced.rows[:rank], ncols=m.ncols)
