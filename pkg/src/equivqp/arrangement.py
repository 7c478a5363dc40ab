"""Integer central hyperplane arrangements in coefficient form."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import lcm
from typing import Sequence

from . import kernels
from .group import MatrixGroup
from .linalg import IntMatrix, smith_normal_form
from .quasipoly import Polynomial

MAX_HYPERPLANES = 30


class ArrangementError(ValueError):
    pass


def _parallel(a: tuple, b: tuple) -> bool:
    # columns a, b nonzero; parallel iff all 2x2 minors vanish
    return all(a[i] * b[j] == a[j] * b[i] for i in range(len(a)) for j in range(i + 1, len(a)))


@dataclass(frozen=True)
class Arrangement:
    """Hyperplanes ``H_i = {x : x . s_i = 0}``; ``coeffs`` has the ``s_i`` as columns."""

    coeffs: IntMatrix

    def __post_init__(self):
        cols = self.coeffs.columns()
        if len(cols) > MAX_HYPERPLANES:
            raise ArrangementError(f"at most {MAX_HYPERPLANES} hyperplanes supported, got {len(cols)}")
        for i, c in enumerate(cols):
            if not any(c):
                raise ArrangementError(f"column {i} is zero")
        for i, j in combinations(range(len(cols)), 2):
            if _parallel(cols[i], cols[j]):
                raise ArrangementError(f"columns {i} and {j} define the same hyperplane")

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence[int]], rank: int) -> "Arrangement":
        return cls(IntMatrix.from_columns(columns, rank))

    @property
    def rank(self) -> int:
        return self.coeffs.rows

    @property
    def n(self) -> int:
        return self.coeffs.cols

    def columns(self) -> list:
        return self.coeffs.columns()

    def form_values(self, x) -> tuple:
        """``(alpha_1(x), ..., alpha_n(x))`` for a rational or integer point."""
        return self.coeffs.vecmul(x)

    def submatrix(self, subset) -> IntMatrix:
        return self.coeffs.select_columns(subset)


def _canonical_sign(c: tuple) -> tuple:
    for v in c:
        if v:
            return c if v > 0 else tuple(-x for x in c)
    return c


def _image(g: IntMatrix, col: tuple) -> tuple:
    # alpha o rho(g) has coefficient column R_g @ s
    return tuple(sum(g[i, j] * col[j] for j in range(g.cols)) for i in range(g.rows))


def check_invariance(a: Arrangement, g: MatrixGroup) -> bool:
    if a.rank != g.rank:
        raise ArrangementError("arrangement and group have different ranks")
    cols = {_canonical_sign(c) for c in a.columns()}
    gens = g.generators or g.elements
    return all(_canonical_sign(_image(m, c)) in cols for m in gens for c in cols)


def orbit_closure(columns: Sequence[Sequence[int]], g: MatrixGroup) -> Arrangement:
    """Smallest invariant arrangement containing the given hyperplanes (exact columns, up to sign)."""
    found = set()
    todo = []
    for c in columns:
        c = _canonical_sign(tuple(int(v) for v in c))
        if len(c) != g.rank or not any(c):
            raise ArrangementError("columns must be nonzero vectors of the group's rank")
        if c not in found:
            found.add(c)
            todo.append(c)
    gens = g.generators or g.elements
    while todo:
        c = todo.pop()
        for m in gens:
            d = _canonical_sign(_image(m, c))
            if d not in found:
                found.add(d)
                todo.append(d)
    return Arrangement.from_columns(sorted(found), g.rank)


def lcm_period_nA(a: Arrangement) -> int:
    """lcm of the largest elementary divisors of ``S_J`` over ``1 <= |J| <= min(l, n)``."""
    out = 1
    for size in range(1, min(a.rank, a.n) + 1):
        for subset in combinations(range(a.n), size):
            out = lcm(out, smith_normal_form(a.submatrix(subset)).max_divisor)
    return out


def characteristic_polynomial_whitney(a: Arrangement) -> Polynomial:
    coeffs = [0] * (a.rank + 1)
    for mask in range(1 << a.n):
        subset = [i for i in range(a.n) if mask >> i & 1]
        r = smith_normal_form(a.submatrix(subset)).rank if subset else 0
        coeffs[a.rank - r] += (-1) ** len(subset)
    return Polynomial(tuple(coeffs))


def bruteforce_fixed_complement_count(a: Arrangement, gamma: IntMatrix, q: int,
                                      budget: int = kernels.DEFAULT_BUDGET, backend=None) -> int:
    """Direct count of ``x in (Z/q)^l`` fixed by ``gamma`` with every ``x . s_i != 0 mod q``."""
    if q < 1:
        raise ValueError("q must be positive")
    if gamma.shape != (a.rank, a.rank):
        raise ArrangementError("gamma has the wrong shape")
    return kernels.count_fixed_complement(gamma - IntMatrix.identity(a.rank), a.coeffs, q,
                                          budget=budget, backend=backend)


def complement_points(a: Arrangement, q: int, gamma: IntMatrix | None = None,
                      budget: int = kernels.DEFAULT_BUDGET) -> list:
    """Points of ``M(A; q)`` (fixed by ``gamma`` if given) as integer tuples in ``[0, q)``."""
    fix = (gamma - IntMatrix.identity(a.rank)) if gamma is not None else IntMatrix.zeros(a.rank, 0)
    return kernels.fixed_complement_points(fix, a.coeffs, q, budget=budget)


def on_hyperplane(a: Arrangement, x) -> bool:
    return any(Fraction(v).denominator == 1 for v in a.form_values(x))
