"""Exact linear algebra over the rationals.

Ranks use fraction-free (Bareiss) elimination on integer matrices obtained
by clearing each row's denominators.  Kernels and reduced row spaces use
ordinary Gauss-Jordan elimination over :class:`fractions.Fraction`.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Sequence

from .errors import ApolarError


@dataclass(frozen=True)
class QMatrix:
    rows: int
    cols: int
    entries: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self):
        if len(self.entries) != self.rows or any(len(r) != self.cols for r in self.entries):
            raise ApolarError(f"entry grid does not match shape {self.rows}x{self.cols}")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence], cols: int | None = None) -> "QMatrix":
        grid = tuple(tuple(Fraction(v) for v in r) for r in rows)
        if cols is None:
            cols = len(grid[0]) if grid else 0
        return cls(len(grid), cols, grid)

    @classmethod
    def identity(cls, n: int) -> "QMatrix":
        return cls.from_rows([[int(i == j) for j in range(n)] for i in range(n)], n)

    def transpose(self) -> "QMatrix":
        return QMatrix(
            self.cols,
            self.rows,
            tuple(tuple(self.entries[i][j] for i in range(self.rows)) for j in range(self.cols)),
        )

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def tolist(self) -> list[list[Fraction]]:
        return [list(r) for r in self.entries]


def integer_rows(rows: Sequence[Sequence]) -> list[list[int]]:
    """Scale each row by the lcm of its denominators."""
    out = []
    for r in rows:
        den = 1
        for v in r:
            if v and isinstance(v, Fraction):
                den = lcm(den, v.denominator)
        if den == 1:
            out.append([int(v) for v in r])
        else:
            out.append([v.numerator * (den // v.denominator) if v else 0 for v in r])
    return out


def bareiss_rank(rows: list[list[int]]) -> int:
    """Rank of an integer matrix; destroys ``rows``.

    Pivot is the first nonzero entry in column order.  After each step the
    surviving entries are minors of the original matrix, so the division by
    the previous pivot is exact.
    """
    nrows = len(rows)
    if not nrows:
        return 0
    ncols = len(rows[0])
    rank = 0
    prev = 1
    for col in range(ncols):
        if rank == nrows:
            break
        piv = None
        for i in range(rank, nrows):
            if rows[i][col]:
                piv = i
                break
        if piv is None:
            continue
        if piv != rank:
            rows[piv], rows[rank] = rows[rank], rows[piv]
        prow = rows[rank]
        p = prow[col]
        for i in range(rank + 1, nrows):
            row = rows[i]
            f = row[col]
            if f:
                for j in range(col + 1, ncols):
                    row[j] = (row[j] * p - f * prow[j]) // prev
            elif p != prev:
                for j in range(col + 1, ncols):
                    if row[j]:
                        row[j] = row[j] * p // prev
            row[col] = 0
        prev = p
        rank += 1
    return rank


def matrix_rank(m: QMatrix | Sequence[Sequence]) -> int:
    """Rank over Q by fraction-free elimination."""
    rows = m.entries if isinstance(m, QMatrix) else m
    rows = [r for r in integer_rows(rows) if any(r)]
    if not rows:
        return 0
    # eliminate along the shorter side
    if len(rows[0]) < len(rows):
        rows = [list(c) for c in zip(*rows)]
    return bareiss_rank(rows)


def rref(rows: Sequence[Sequence]) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form over Q; returns (nonzero rows, pivot columns)."""
    m = [[Fraction(v) for v in r] for r in rows]
    if not m:
        return [], []
    ncols = len(m[0])
    pivots = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(m)) if m[i][c]), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = 1 / m[r][c]
        m[r] = [v * inv for v in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def nullspace(rows: Sequence[Sequence], ncols: int) -> list[list[Fraction]]:
    """Basis of {v : M v = 0}, one vector per free column, in column order."""
    reduced, pivots = rref(rows) if rows else ([], [])
    free = [c for c in range(ncols) if c not in set(pivots)]
    basis = []
    for fcol in free:
        v = [Fraction(0)] * ncols
        v[fcol] = Fraction(1)
        for row, pc in zip(reduced, pivots):
            v[pc] = -row[fcol]
        basis.append(v)
    return basis
