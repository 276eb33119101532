#!/usr/bin/env python3
"""
Exact integer and rational linear algebra for the surface obstruction engine.
Smith normal form, Bareiss determinants and congruence diagonalization of
symmetric forms. Every entry is a Python int or a Fraction, never a float.
"""
import logging
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Iterable, List, Optional, Sequence, Tuple

logger = logging.getLogger(__name__)


class MatrixShapeError(ValueError):
    """Raised when entries do not fit the declared matrix shape."""


class FormSymmetryError(ValueError):
    """Raised when a symmetric form is built from a non-symmetric matrix."""


@dataclass(frozen=True)
class IntMatrix:
    """Immutable integer matrix stored in row-major order."""
    rows: int
    cols: int
    entries: Tuple[int, ...]

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise MatrixShapeError(f"Negative shape {self.rows}x{self.cols}")
        if len(self.entries) != self.rows * self.cols:
            raise MatrixShapeError(
                f"Expected {self.rows * self.cols} entries for a {self.rows}x{self.cols} matrix, "
                f"got {len(self.entries)}"
            )
        for value in self.entries:
            if isinstance(value, bool) or not isinstance(value, int):
                raise MatrixShapeError(f"Matrix entries must be integers, got {value!r}")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], cols: Optional[int] = None) -> "IntMatrix":
        """Build from a list of rows; `cols` is only needed when there are no rows."""
        rows = [list(r) for r in rows]
        width = cols if cols is not None else (len(rows[0]) if rows else 0)
        for r in rows:
            if len(r) != width:
                raise MatrixShapeError(f"Ragged row of length {len(r)} in a matrix of width {width}")
        return cls(len(rows), width, tuple(v for r in rows for v in r))

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls.from_rows([[int(i == j) for j in range(n)] for i in range(n)], cols=n)

    @classmethod
    def zero(cls, rows: int, cols: int) -> "IntMatrix":
        return cls(rows, cols, (0,) * (rows * cols))

    @classmethod
    def diagonal(cls, values: Sequence[int]) -> "IntMatrix":
        n = len(values)
        return cls.from_rows([[values[i] if i == j else 0 for j in range(n)] for i in range(n)], cols=n)

    def __getitem__(self, index: Tuple[int, int]) -> int:
        i, j = index
        return self.entries[i * self.cols + j]

    def to_rows(self) -> List[List[int]]:
        return [list(self.entries[i * self.cols:(i + 1) * self.cols]) for i in range(self.rows)]

    def transpose(self) -> "IntMatrix":
        return IntMatrix.from_rows(
            [[self[i, j] for i in range(self.rows)] for j in range(self.cols)], cols=self.rows
        )

    def __matmul__(self, other: "IntMatrix") -> "IntMatrix":
        if self.cols != other.rows:
            raise MatrixShapeError(f"Cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}")
        return IntMatrix.from_rows(
            [[sum(self[i, k] * other[k, j] for k in range(self.cols)) for j in range(other.cols)]
             for i in range(self.rows)],
            cols=other.cols,
        )

    def is_square(self) -> bool:
        return self.rows == self.cols


@dataclass(frozen=True)
class SmithResult:
    """Invariant factors d1 | d2 | ... of an integer matrix."""
    invariant_factors: Tuple[int, ...]

    @property
    def rank(self) -> int:
        return len(self.invariant_factors)

    @property
    def torsion(self) -> Tuple[int, ...]:
        """The nontrivial invariant factors."""
        return tuple(d for d in self.invariant_factors if d > 1)


def smith_normal_form(matrix: IntMatrix) -> SmithResult:
    """
    Invariant factors of `matrix` over the integers.

    Pivot rule: the nonzero entry of smallest absolute value in the active
    block, first in row-major order. Rows that have become zero are moved out
    of the active block, which keeps the sparse relator matrices of
    Reidemeister-Schreier presentations cheap to reduce.
    """
    a = matrix.to_rows()
    nrows, ncols = matrix.rows, matrix.cols
    factors: List[int] = []
    t = 0
    while t < min(nrows, ncols):
        pivot = _find_pivot(a, t, nrows, ncols)
        if pivot is None:
            break
        # _find_pivot may have moved zero rows past the active block
        nrows = pivot[2]
        _move_pivot(a, t, pivot[0], pivot[1])
        while True:
            p = a[t][t]
            clean = True
            for i in range(t + 1, nrows):
                if a[i][t]:
                    q = a[i][t] // p
                    if q:
                        row_t, row_i = a[t], a[i]
                        for j in range(t, ncols):
                            if row_t[j]:
                                row_i[j] -= q * row_t[j]
                    if a[i][t]:
                        clean = False
            row_t = a[t]
            for j in range(t + 1, ncols):
                if row_t[j]:
                    q = row_t[j] // p
                    if q:
                        for i in range(t, nrows):
                            if a[i][t]:
                                a[i][j] -= q * a[i][t]
                    if row_t[j]:
                        clean = False
            if not clean:
                pivot = _find_pivot(a, t, nrows, ncols)
                nrows = pivot[2]
                _move_pivot(a, t, pivot[0], pivot[1])
                continue
            bad_row = _first_non_multiple_row(a, t, p, nrows, ncols)
            if bad_row is None:
                break
            # fold the offending row into the pivot row; the next column pass
            # leaves a remainder smaller than |p|
            for j in range(t, ncols):
                a[t][j] += a[bad_row][j]
        factors.append(abs(a[t][t]))
        t += 1
    logger.debug(f"🧮 SNF of {matrix.rows}x{matrix.cols} matrix: rank {len(factors)}")
    return SmithResult(tuple(factors))


def _find_pivot(a: List[List[int]], t: int, nrows: int, ncols: int) -> Optional[Tuple[int, int, int]]:
    """Smallest nonzero |entry| in a[t:nrows][t:ncols], first occurrence; also returns the new row count."""
    best = None
    i = t
    while i < nrows:
        row = a[i]
        if not any(row[t:ncols]):
            nrows -= 1
            a[i], a[nrows] = a[nrows], a[i]
            continue
        for j in range(t, ncols):
            v = row[j]
            if v and (best is None or abs(v) < best[0]):
                best = (abs(v), i, j)
                if best[0] == 1:
                    return i, j, nrows
        i += 1
    if best is None:
        return None
    return best[1], best[2], nrows


def _move_pivot(a: List[List[int]], t: int, i: int, j: int) -> None:
    a[t], a[i] = a[i], a[t]
    if j != t:
        for row in a:
            row[t], row[j] = row[j], row[t]


def _first_non_multiple_row(a: List[List[int]], t: int, p: int, nrows: int, ncols: int) -> Optional[int]:
    for i in range(t + 1, nrows):
        row = a[i]
        for j in range(t + 1, ncols):
            if row[j] % p:
                return i
    return None


def determinant(matrix: IntMatrix) -> int:
    """Bareiss fraction-free determinant of a square integer matrix."""
    if not matrix.is_square():
        raise MatrixShapeError(f"Determinant of a non-square {matrix.rows}x{matrix.cols} matrix")
    n = matrix.rows
    if n == 0:
        return 1
    a = matrix.to_rows()
    sign = 1
    previous = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // previous
        previous = a[k][k]
    return sign * a[n - 1][n - 1]


class Parity(Enum):
    EVEN = "even"
    ODD = "odd"


@dataclass(frozen=True)
class Signature:
    """Counts of positive, null and negative directions of a symmetric form."""
    b_plus: int
    b_zero: int
    b_minus: int

    @property
    def dimension(self) -> int:
        return self.b_plus + self.b_zero + self.b_minus

    @property
    def signature(self) -> int:
        return self.b_plus - self.b_minus

    def __add__(self, other: "Signature") -> "Signature":
        return Signature(self.b_plus + other.b_plus, self.b_zero + other.b_zero, self.b_minus + other.b_minus)

    def __str__(self) -> str:
        return f"({self.b_plus}, {self.b_zero}, {self.b_minus})"


@dataclass(frozen=True)
class SymmetricForm:
    """A symmetric integer bilinear form on Z^dimension."""
    entries: IntMatrix

    def __post_init__(self):
        m = self.entries
        if not m.is_square():
            raise FormSymmetryError(f"Form matrix must be square, got {m.rows}x{m.cols}")
        for i in range(m.rows):
            for j in range(i + 1, m.cols):
                if m[i, j] != m[j, i]:
                    raise FormSymmetryError(f"Entry ({i},{j}) = {m[i, j]} differs from ({j},{i}) = {m[j, i]}")

    @property
    def dimension(self) -> int:
        return self.entries.rows

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]]) -> "SymmetricForm":
        return cls(IntMatrix.from_rows(rows, cols=len(rows)))

    @classmethod
    def diagonal(cls, *values: int) -> "SymmetricForm":
        return cls(IntMatrix.diagonal(values))

    @classmethod
    def hyperbolic(cls) -> "SymmetricForm":
        return cls.from_rows([[0, 1], [1, 0]])

    @classmethod
    def empty(cls) -> "SymmetricForm":
        return cls(IntMatrix.zero(0, 0))


def signature_of(form: SymmetricForm) -> Signature:
    """
    Exact signature by congruence (Lagrange) reduction over the rationals.

    A zero diagonal with a nonzero off-diagonal entry a[i][j] is handled by
    the substitution e_i -> e_i + e_j, which makes the new diagonal 2*a[i][j].
    """
    a = [[Fraction(v) for v in row] for row in form.entries.to_rows()]
    b_plus = b_zero = b_minus = 0
    while a:
        n = len(a)
        pivot = next((i for i in range(n) if a[i][i] != 0), None)
        if pivot is None:
            pair = next(((i, j) for i in range(n) for j in range(i + 1, n) if a[i][j] != 0), None)
            if pair is None:
                b_zero += n
                break
            i, j = pair
            for col in range(n):
                a[i][col] += a[j][col]
            for row in range(n):
                a[row][i] += a[row][j]
            pivot = i
        _symmetric_swap(a, 0, pivot)
        d = a[0][0]
        if d > 0:
            b_plus += 1
        else:
            b_minus += 1
        for i in range(1, n):
            if a[i][0] != 0:
                f = a[i][0] / d
                for j in range(1, n):
                    a[i][j] -= f * a[0][j]
        a = [row[1:] for row in a[1:]]
    return Signature(b_plus, b_zero, b_minus)


def _symmetric_swap(a: List[List[Fraction]], i: int, j: int) -> None:
    if i == j:
        return
    a[i], a[j] = a[j], a[i]
    for row in a:
        row[i], row[j] = row[j], row[i]


def direct_sum(first: SymmetricForm, second: SymmetricForm) -> SymmetricForm:
    """Block-diagonal sum of two forms."""
    n, m = first.dimension, second.dimension
    rows = [r + [0] * m for r in first.entries.to_rows()]
    rows += [[0] * n + r for r in second.entries.to_rows()]
    return SymmetricForm(IntMatrix.from_rows(rows, cols=n + m))


def direct_sum_all(forms: Iterable[SymmetricForm]) -> SymmetricForm:
    total = SymmetricForm.empty()
    for form in forms:
        total = direct_sum(total, form)
    return total


def parity(form: SymmetricForm) -> Parity:
    m = form.entries
    return Parity.EVEN if all(m[i, i] % 2 == 0 for i in range(m.rows)) else Parity.ODD


def congruence(form: SymmetricForm, change: IntMatrix) -> SymmetricForm:
    """The congruent form U^T Q U."""
    return SymmetricForm(change.transpose() @ form.entries @ change)
