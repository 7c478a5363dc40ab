"""Exact integer matrix algebra.

Smith normal form with unimodular transformation matrices, elementary
divisors and counting of kernels of mod-q reductions.  Everything works on
Python integers, so intermediate entries never overflow.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import gcd, prod
from typing import Iterable, Optional, Sequence


@dataclass(frozen=True)
class IntMatrix:
    """Integer matrix stored row-major.

    Zero-sized shapes are allowed; an ``l x 0`` matrix is the natural
    coefficient matrix of an empty arrangement.
    """

    rows: int
    cols: int
    entries: tuple

    def __post_init__(self):
        if len(self.entries) != self.rows * self.cols:
            raise ValueError(
                f"expected {self.rows * self.cols} entries, got {len(self.entries)}"
            )

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], cols: Optional[int] = None) -> "IntMatrix":
        rows = [tuple(int(v) for v in r) for r in rows]
        if cols is None:
            cols = len(rows[0]) if rows else 0
        if any(len(r) != cols for r in rows):
            raise ValueError("ragged rows")
        return cls(len(rows), cols, tuple(v for r in rows for v in r))

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence[int]], rows: int) -> "IntMatrix":
        columns = [tuple(int(v) for v in c) for c in columns]
        if any(len(c) != rows for c in columns):
            raise ValueError("column length does not match row count")
        return cls(rows, len(columns), tuple(columns[j][i] for i in range(rows) for j in range(len(columns))))

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls(n, n, tuple(int(i == j) for i in range(n) for j in range(n)))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "IntMatrix":
        return cls(rows, cols, (0,) * (rows * cols))

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> tuple:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def column(self, j: int) -> tuple:
        return tuple(self.entries[i * self.cols + j] for i in range(self.rows))

    def to_rows(self) -> list:
        return [list(self.row(i)) for i in range(self.rows)]

    def columns(self) -> list:
        return [self.column(j) for j in range(self.cols)]

    def transpose(self) -> "IntMatrix":
        return IntMatrix(self.cols, self.rows,
                         tuple(self[i, j] for j in range(self.cols) for i in range(self.rows)))

    def __matmul__(self, other: "IntMatrix") -> "IntMatrix":
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        ocols = [other.column(j) for j in range(other.cols)]
        out = []
        for i in range(self.rows):
            r = self.row(i)
            out.extend(sum(a * b for a, b in zip(r, c)) for c in ocols)
        return IntMatrix(self.rows, other.cols, tuple(out))

    def __sub__(self, other: "IntMatrix") -> "IntMatrix":
        if self.shape != other.shape:
            raise ValueError("shape mismatch")
        return IntMatrix(self.rows, self.cols, tuple(a - b for a, b in zip(self.entries, other.entries)))

    def __neg__(self) -> "IntMatrix":
        return IntMatrix(self.rows, self.cols, tuple(-a for a in self.entries))

    @property
    def shape(self) -> tuple:
        return (self.rows, self.cols)

    def hstack(self, other: "IntMatrix") -> "IntMatrix":
        if self.rows != other.rows:
            raise ValueError("row count mismatch")
        return IntMatrix.from_rows([self.row(i) + other.row(i) for i in range(self.rows)],
                                   cols=self.cols + other.cols)

    def select_columns(self, idx: Iterable[int]) -> "IntMatrix":
        idx = list(idx)
        return IntMatrix.from_rows([[self[i, j] for j in idx] for i in range(self.rows)],
                                   cols=len(idx))

    def vecmul(self, x: Sequence[int]) -> tuple:
        """Row vector times matrix, ``x @ self``."""
        return tuple(sum(x[i] * self[i, j] for i in range(self.rows)) for j in range(self.cols))

    def mod(self, q: int) -> "IntMatrix":
        return IntMatrix(self.rows, self.cols, tuple(a % q for a in self.entries))

    def is_zero(self) -> bool:
        return not any(self.entries)

    def max_abs(self) -> int:
        return max((abs(a) for a in self.entries), default=0)

    def __repr__(self):
        return f"IntMatrix({self.to_rows()!r})"


def determinant(m: IntMatrix) -> int:
    """Exact determinant by fraction-free (Bareiss) elimination."""
    n = m.rows
    if n != m.cols:
        raise ValueError("determinant of a non-square matrix")
    if n == 0:
        return 1
    a = m.to_rows()
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


@dataclass(frozen=True)
class SmithDecomposition:
    """``left @ M @ right == diag(divisors, 0, ..., 0)`` with both factors unimodular."""

    left: IntMatrix
    right: IntMatrix
    divisors: tuple
    rank: int

    def diagonal(self, rows: int, cols: int) -> IntMatrix:
        d = [[0] * cols for _ in range(rows)]
        for i, v in enumerate(self.divisors):
            d[i][i] = v
        return IntMatrix.from_rows(d, cols=cols)

    @property
    def max_divisor(self) -> int:
        """Largest elementary divisor; 1 for a zero matrix."""
        return self.divisors[-1] if self.divisors else 1


def _pick_pivot(a, t, nr, nc):
    best = None
    for i in range(t, nr):
        row = a[i]
        for j in range(t, nc):
            v = row[j]
            if v and (best is None or abs(v) < best[0]):
                best = (abs(v), i, j)
                if best[0] == 1:
                    return best
    return best


@lru_cache(maxsize=4096)
def smith_normal_form(m: IntMatrix) -> SmithDecomposition:
    """Smith normal form of an arbitrary integer matrix.

    Pivot rule: the nonzero entry of least absolute value in the active
    submatrix, ties to the lowest (row, col).  The output is therefore a
    deterministic function of the input.
    """
    nr, nc = m.rows, m.cols
    a = m.to_rows()
    u = [[int(i == j) for j in range(nr)] for i in range(nr)]
    v = [[int(i == j) for j in range(nc)] for i in range(nc)]

    def swap_rows(i, k):
        a[i], a[k] = a[k], a[i]
        u[i], u[k] = u[k], u[i]

    def swap_cols(j, k):
        for row in a:
            row[j], row[k] = row[k], row[j]
        for row in v:
            row[j], row[k] = row[k], row[j]

    def add_row(dst, src, c):
        # row_dst += c * row_src
        ra, rs = a[dst], a[src]
        for j in range(nc):
            ra[j] += c * rs[j]
        ua, us = u[dst], u[src]
        for j in range(nr):
            ua[j] += c * us[j]

    def add_col(dst, src, c):
        for row in a:
            row[dst] += c * row[src]
        for row in v:
            row[dst] += c * row[src]

    divisors = []
    t = 0
    while t < min(nr, nc):
        piv = _pick_pivot(a, t, nr, nc)
        if piv is None:
            break
        while True:
            _, pi, pj = piv
            if pi != t:
                swap_rows(t, pi)
            if pj != t:
                swap_cols(t, pj)
            p = a[t][t]
            for i in range(t + 1, nr):
                if a[i][t]:
                    add_row(i, t, -(a[i][t] // p))
            for j in range(t + 1, nc):
                if a[t][j]:
                    add_col(j, t, -(a[t][j] // p))
            if any(a[i][t] for i in range(t + 1, nr)) or any(a[t][j] for j in range(t + 1, nc)):
                piv = _pick_pivot(a, t, nr, nc)
                continue
            bad = next(((i, j) for i in range(t + 1, nr) for j in range(t + 1, nc)
                        if a[i][j] % p), None)
            if bad is None:
                break
            add_row(t, bad[0], 1)
            piv = _pick_pivot(a, t, nr, nc)
        if a[t][t] < 0:
            a[t] = [-x for x in a[t]]
            u[t] = [-x for x in u[t]]
        divisors.append(a[t][t])
        t += 1

    return SmithDecomposition(
        left=IntMatrix.from_rows(u, cols=nr),
        right=IntMatrix.from_rows(v, cols=nc),
        divisors=tuple(divisors),
        rank=len(divisors),
    )


def elementary_divisors(m: IntMatrix) -> tuple:
    return smith_normal_form(m).divisors


def rank(m: IntMatrix) -> int:
    return smith_normal_form(m).rank


def pi_periodic(m: IntMatrix, q: int) -> int:
    """Product of ``gcd(d_j, q)`` over the elementary divisors of ``m``."""
    if q < 1:
        raise ValueError("q must be positive")
    return prod(gcd(d, q) for d in elementary_divisors(m))


def kernel_count_mod_q(m: IntMatrix, q: int) -> int:
    """Number of row vectors ``z`` in ``(Z/q)^rows`` with ``z @ m == 0 mod q``."""
    snf = smith_normal_form(m)
    return prod(gcd(d, q) for d in snf.divisors) * q ** (m.rows - snf.rank)


def integer_solve(m: IntMatrix, b: Sequence[int]) -> Optional[tuple]:
    """Some integer row vector ``z`` with ``z @ m == b``, or None if none exists."""
    if len(b) != m.cols:
        raise ValueError("right-hand side length must equal the column count")
    snf = smith_normal_form(m)
    # z M = b  <=>  (z U^-1) D = b V
    c = tuple(sum(b[i] * snf.right[i, j] for i in range(m.cols)) for j in range(m.cols))
    y = [0] * m.rows
    for i, d in enumerate(snf.divisors):
        if c[i] % d:
            return None
        y[i] = c[i] // d
    if any(c[i] for i in range(snf.rank, m.cols)):
        return None
    z = snf.left.vecmul(y) if m.rows else ()
    if m.vecmul(z) != tuple(b):
        raise ArithmeticError("integer_solve produced a non-solution")
    return z
