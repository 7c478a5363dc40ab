"""Type A_l: the braid arrangement on the coweight lattice and its closed forms.

Coordinates are taken in the fundamental coweight basis, so ``L = Z^l``
and ``alpha_i(x) = x_i`` for the simple roots.  The positive root
``e_i - e_j`` (i < j) has coefficient column ``sum_{t=i}^{j-1} unit_t``.
The Weyl group is the symmetric group on ``l + 1`` letters acting through
the simple reflections ``s_i(w_i) = w_{i-1} - w_i + w_{i+1}``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations
from math import comb, factorial, gcd, prod

from .arrangement import Arrangement, check_invariance, lcm_period_nA
from .group import MatrixGroup, generate_group
from .linalg import IntMatrix, determinant
from .quasipoly import Polynomial, interpolate

MAX_RANK = 6


class RankTooLargeError(ValueError):
    pass


def partitions(n: int, largest: int | None = None):
    """Partitions of ``n`` as decreasing tuples, in reverse lexicographic order."""
    if largest is None:
        largest = n
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in partitions(n - first, first):
            yield (first,) + rest


def cycle_type(perm) -> tuple:
    """Cycle type of a permutation given as a tuple of images of 0..n-1."""
    seen = [False] * len(perm)
    parts = []
    for i in range(len(perm)):
        if not seen[i]:
            n, j = 0, i
            while not seen[j]:
                seen[j] = True
                j = perm[j]
                n += 1
            parts.append(n)
    return tuple(sorted(parts, reverse=True))


def simple_reflection(ell: int, i: int) -> IntMatrix:
    """Matrix of s_i (1-based) acting on row vectors of coweight coordinates."""
    rows = [[int(r == c) for c in range(ell)] for r in range(ell)]
    r = i - 1
    rows[r] = [0] * ell
    rows[r][r] = -1
    if r > 0:
        rows[r][r - 1] = 1
    if r + 1 < ell:
        rows[r][r + 1] = 1
    return IntMatrix.from_rows(rows, cols=ell)


def _epsilon(ell: int, i: int) -> tuple:
    # e_i minus the barycentre, i in 1..l+1, as w_i - w_{i-1}
    v = [0] * ell
    if i <= ell:
        v[i - 1] += 1
    if i >= 2:
        v[i - 2] -= 1
    return tuple(v)


def permutation_of(m: IntMatrix) -> tuple:
    """The permutation of ``e_1..e_{l+1}`` induced by a Weyl group matrix (0-based images)."""
    ell = m.rows
    eps = [_epsilon(ell, i) for i in range(1, ell + 2)]
    index = {e: i for i, e in enumerate(eps)}
    try:
        return tuple(index[m.vecmul(e)] for e in eps)
    except KeyError:
        raise ValueError("matrix does not permute the vectors e_i - barycentre") from None


def charpoly(m: IntMatrix) -> Polynomial:
    """``det(t I - m)`` by exact interpolation at ``t = 0..n``."""
    n = m.rows
    pts = []
    for t in range(n + 1):
        shifted = IntMatrix.from_rows([[t * int(i == j) - m[i, j] for j in range(n)] for i in range(n)], cols=n)
        pts.append((t, determinant(shifted)))
    return interpolate(pts)


def cycle_type_from_charpoly(m: IntMatrix) -> tuple:
    """Cycle type recovered from ``(t - 1) det(t I - m) = prod (t^part - 1)``."""
    target = charpoly(m) * Polynomial((-1, 1))
    n = m.rows + 1
    for p in partitions(n):
        cand = Polynomial((1,))
        for part in p:
            cand = cand * Polynomial.monomial(part) + cand * -1
        if cand == target:
            return p
    raise ValueError("characteristic polynomial is not that of a permutation")


@dataclass
class TypeAData:
    rank: int
    arrangement: Arrangement
    generators: list
    group: MatrixGroup
    class_cycle_types: list

    def class_of_cycle_type(self, ct) -> int:
        return self.class_cycle_types.index(tuple(ct))


def braid_columns(ell: int) -> list:
    cols = []
    for i in range(1, ell + 1):
        for j in range(i + 1, ell + 2):
            cols.append(tuple(int(i <= t + 1 <= j - 1) for t in range(ell)))
    return cols


def build_type_a(ell: int, max_rank: int = MAX_RANK) -> TypeAData:
    if ell < 1:
        raise ValueError("rank must be at least 1")
    if ell > max_rank:
        raise RankTooLargeError(f"rank {ell} exceeds the limit {max_rank}")
    arr = Arrangement.from_columns(braid_columns(ell), ell)
    gens = [simple_reflection(ell, i) for i in range(1, ell + 1)]
    g = generate_group(gens)
    if g.order != factorial(ell + 1):
        raise ArithmeticError("Weyl group has the wrong order")
    if not check_invariance(arr, g):
        raise ArithmeticError("braid arrangement is not invariant")
    if lcm_period_nA(arr) != 1:
        raise ArithmeticError("braid arrangement is not unimodular")
    types = []
    for rep in g.representatives():
        ct = cycle_type(permutation_of(rep))
        if ct != cycle_type_from_charpoly(rep):
            raise ArithmeticError("cycle type disagrees with the characteristic polynomial")
        types.append(ct)
    if sorted(types) != sorted(partitions(ell + 1)):
        raise ArithmeticError("conjugacy classes do not match partitions")
    return TypeAData(ell, arr, gens, g, types)


def phi_g(n: int, g: int) -> int:
    """``#{1 <= i <= n : gcd(n, i) == g}``."""
    if n % g:
        raise ValueError("g must divide n")
    return sum(1 for i in range(1, n + 1) if gcd(n, i) == g)


def rectangular(ct) -> tuple | None:
    """``(d, g)`` if the cycle type is ``g`` parts all equal to ``d``, else None."""
    ct = tuple(ct)
    if ct and all(p == ct[0] for p in ct):
        return ct[0], len(ct)
    return None


def closed_form_character(ell: int, ct, q: int) -> int:
    """Value of the type-A permutation character on the class with cycle type ``ct``."""
    if sum(ct) != ell + 1:
        raise ValueError("cycle type must partition l + 1")
    rect = rectangular(ct)
    if rect is None:
        return 0
    d, g = rect
    if q % d:
        return 0
    return phi_g(ell + 1, g) * prod(q - j * d for j in range(1, g))


def _gd(ell: int, k: int) -> tuple:
    if not 1 <= k <= ell + 1:
        raise ValueError("k must lie in 1..l+1")
    g = gcd(ell + 1, k)
    return g, (ell + 1) // g


def fixed_alcove_ehrhart(ell: int, k: int, q: int, closed: bool = True) -> int:
    """Lattice points in the q-dilate of the part of the alcove fixed by the k-th power of the Coxeter element."""
    g, d = _gd(ell, k)
    if q % d:
        return 0
    if closed:
        return comb(g - 1 + q // d, g - 1)
    val = Fraction(prod(q - j * d for j in range(1, g)), d ** (g - 1) * factorial(g - 1))
    return int(val)


def _compositions(total: int, parts: int, minimum: int):
    if parts == 1:
        if total >= minimum:
            yield (total,)
        return
    for first in range(minimum, total - minimum * (parts - 1) + 1):
        for rest in _compositions(total - first, parts - 1, minimum):
            yield (first,) + rest


def fixed_alcove_enumerate(ell: int, k: int, q: int, closed: bool = True) -> int:
    """Same count by listing barycentric coordinates ``x_0..x_l`` of ``q`` times the alcove.

    Points of the fixed sub-simplex are those with ``x_j == x_{j+k mod l+1}``;
    the open variant additionally needs every ``x_j > 0``.
    """
    _gd(ell, k)
    n = ell + 1
    return sum(1 for x in _compositions(q, n, 0 if closed else 1)
               if all(x[j] == x[(j + k) % n] for j in range(n)))


def conjugator_count(ell: int, k: int) -> int:
    """``#{tau : tau c^k tau^-1 in <c>}`` for the Coxeter element ``c = (1 2 ... l+1)``."""
    g, d = _gd(ell, k)
    return phi_g(ell + 1, g) * prod(ell + 1 - j * d for j in range(g))


def conjugator_count_bruteforce(ell: int, k: int) -> int:
    n = ell + 1
    c = tuple((i + 1) % n for i in range(n))

    def power(p, e):
        out = tuple(range(n))
        for _ in range(e):
            out = tuple(p[i] for i in out)
        return out

    cyclic = {power(c, e) for e in range(n)}
    ck = power(c, k)
    count = 0
    for tau in permutations(range(n)):
        inv = [0] * n
        for i, t in enumerate(tau):
            inv[t] = i
        conj = tuple(tau[ck[inv[i]]] for i in range(n))
        count += conj in cyclic
    return count


def coxeter_element(data: TypeAData) -> IntMatrix:
    """The group element acting on ``e_1..e_{l+1}`` as the cycle ``(1 2 ... l+1)``."""
    n = data.rank + 1
    target = tuple((i + 1) % n for i in range(n))
    for m in data.group.elements:
        if permutation_of(m) == target:
            return m
    raise LookupError("Coxeter element not found")
