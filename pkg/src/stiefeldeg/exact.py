"""Exact integer/rational helpers: factorials, binomials, determinants."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence, Union

from .errors import DimensionError, DomainError

Number = Union[int, Fraction]


def factorial(n: int) -> int:
    if n < 0:
        raise DomainError(f"factorial of negative number {n}")
    return math.factorial(n)


def binomial(n: int, k: int) -> int:
    """Binomial coefficient for arbitrary integers.

    Zero when ``k < 0`` or ``k > n >= 0``.  For negative ``n`` the usual
    extension ``(-1)**k * C(k - n - 1, k)`` is returned.
    """
    if k < 0:
        return 0
    if n >= 0:
        return math.comb(n, k) if k <= n else 0
    return (-1) ** k * math.comb(k - n - 1, k)


@dataclass(frozen=True)
class Matrix:
    rows: int
    cols: int
    entries: tuple

    def __post_init__(self):
        if len(self.entries) != self.rows * self.cols:
            raise DimensionError(
                f"{len(self.entries)} entries for a {self.rows}x{self.cols} matrix")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[Number]]) -> "Matrix":
        rows = [list(r) for r in rows]
        ncols = len(rows[0]) if rows else 0
        if any(len(r) != ncols for r in rows):
            raise DimensionError("ragged rows")
        return cls(len(rows), ncols, tuple(x for r in rows for x in r))

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls.from_rows([[int(i == j) for j in range(n)] for i in range(n)])

    def __getitem__(self, ij: tuple[int, int]) -> Number:
        i, j = ij
        return self.entries[i * self.cols + j]

    def to_rows(self) -> list[list[Number]]:
        return [list(self.entries[i * self.cols:(i + 1) * self.cols])
                for i in range(self.rows)]

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols


def _as_matrix(m: Union[Matrix, Iterable[Sequence[Number]]]) -> Matrix:
    return m if isinstance(m, Matrix) else Matrix.from_rows(list(m))


def _bareiss(a: list[list[int]]) -> int:
    # Fraction-free elimination; every division below is exact.
    n = len(a)
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = a[k][k]
        for i in range(k + 1, n):
            aik = a[i][k]
            row_i, row_k = a[i], a[k]
            for j in range(k + 1, n):
                row_i[j] = (row_i[j] * pivot - aik * row_k[j]) // prev
        prev = pivot
    return sign * a[n - 1][n - 1]


def _gauss(a: list[list[Fraction]]) -> Fraction:
    n = len(a)
    result = Fraction(1)
    for k in range(n):
        piv = next((i for i in range(k, n) if a[i][k] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != k:
            a[k], a[piv] = a[piv], a[k]
            result = -result
        pivot = a[k][k]
        result *= pivot
        for i in range(k + 1, n):
            f = a[i][k] / pivot
            if f:
                for j in range(k, n):
                    a[i][j] -= f * a[k][j]
    return result


def det(m: Union[Matrix, Iterable[Sequence[Number]]]) -> Number:
    """Exact determinant.

    Integer matrices go through Bareiss elimination and return an ``int``;
    anything with a non-integral entry falls back to rational Gaussian
    elimination and returns a ``Fraction``.
    """
    m = _as_matrix(m)
    if not m.is_square:
        raise DimensionError(f"determinant of non-square {m.rows}x{m.cols} matrix")
    if m.rows == 0:
        return 1
    rows = m.to_rows()
    if all(isinstance(x, int) or (isinstance(x, Fraction) and x.denominator == 1)
           for x in m.entries):
        return _bareiss([[int(x) for x in r] for r in rows])
    return _gauss([[Fraction(x) for x in r] for r in rows])
