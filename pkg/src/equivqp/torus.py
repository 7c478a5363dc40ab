"""Torsion points of the torus ``T = R^l / Z^l`` and chambers of the affine arrangement.

A q-torsion point is stored by its integer numerators ``a`` with
coordinates ``a / q``.  Fixed points of a group element are produced from
the Smith normal form of ``R - I`` rather than by scanning ``(Z/q)^l``, so
this module gives a second, independent count of the permutation
character.

Chambers of the affine arrangement ``{alpha_i(x) = k : k in Z}`` are open
slab intersections, recorded by the vector of floors ``k_i``.  Two chambers
project to the same component of the torus complement iff their k-vectors
differ by ``z @ S`` for an integer ``z``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from math import floor, gcd, prod
from typing import Iterator, Optional, Sequence

from . import kernels
from .arrangement import Arrangement, ArrangementError, complement_points
from .equivariant import EquivariantQuasiPolynomial, equivariant_characteristic_qpoly
from .group import ClassFunction, MatrixGroup, induce
from .linalg import IntMatrix, integer_solve, smith_normal_form


class OnHyperplaneError(ValueError):
    pass


class EmptyArrangementError(ArrangementError):
    pass


class WitnessNotFoundError(LookupError):
    pass


@dataclass(frozen=True)
class TorsionPoint:
    q: int
    numerators: tuple

    def __post_init__(self):
        object.__setattr__(self, "numerators", tuple(a % self.q for a in self.numerators))

    @property
    def coords(self) -> tuple:
        return tuple(Fraction(a, self.q) for a in self.numerators)

    def as_lq(self) -> tuple:
        """Image under ``T[q] -> L/qL``, ``x -> q x``."""
        return self.numerators


def _fixed_numerators(gamma: IntMatrix, q: int) -> Iterator[tuple]:
    ell = gamma.rows
    snf = smith_normal_form(gamma - IntMatrix.identity(ell))
    u = snf.left
    steps = []
    for i in range(ell):
        if i < snf.rank:
            g = gcd(snf.divisors[i], q)
            steps.append((g, q // g))
        else:
            steps.append((q, 1))
    rows = [u.row(i) for i in range(ell)]
    for coeffs in product(*(range(g) for g, _ in steps)):
        y = [0] * ell
        for (_, scale), c, row in zip(steps, coeffs, rows):
            if c:
                f = c * scale
                for j in range(ell):
                    y[j] += f * row[j]
        yield tuple(v % q for v in y)


def fixed_point_count(gamma: IntMatrix, q: int) -> int:
    snf = smith_normal_form(gamma - IntMatrix.identity(gamma.rows))
    return prod(gcd(d, q) for d in snf.divisors) * q ** (gamma.rows - snf.rank)


def fixed_torsion_points(gamma: IntMatrix, q: int, budget: int = kernels.DEFAULT_BUDGET) -> list:
    """All points of ``T[q]`` fixed by ``gamma``, each checked: ``x R - x`` integral."""
    if q < 1:
        raise ValueError("q must be positive")
    n = fixed_point_count(gamma, q)
    if n > budget:
        raise kernels.InstanceTooLargeError(f"{n} fixed points exceed the budget of {budget}")
    rmi = gamma - IntMatrix.identity(gamma.rows)
    out = []
    for y in _fixed_numerators(gamma, q):
        if any(v % q for v in rmi.vecmul(y)):
            raise ArithmeticError("parametrised point is not fixed")
        out.append(TorsionPoint(q, y))
    if len(set(out)) != n:
        raise ArithmeticError("fixed-point parametrisation is not injective")
    return out


def torsion_oracle_fixed_count(a: Arrangement, gamma: IntMatrix, q: int,
                               budget: int = kernels.DEFAULT_BUDGET) -> int:
    """Fixed torsion points off every affine hyperplane ``alpha_i(x) in Z``."""
    if fixed_point_count(gamma, q) > budget:
        raise kernels.InstanceTooLargeError("too many fixed points")
    cols = [tuple(c) for c in a.columns()]
    count = 0
    for y in _fixed_numerators(gamma, q):
        if all(sum(yi * si for yi, si in zip(y, c)) % q for c in cols):
            count += 1
    return count


@dataclass(frozen=True)
class ChamberKey:
    """Floors ``k_i`` of ``alpha_i`` on a chamber; ``witness`` is a point inside it."""

    k: tuple
    witness: tuple = field(compare=False, default=())


def _as_point(x) -> tuple:
    if isinstance(x, TorsionPoint):
        return x.coords
    return tuple(Fraction(v) for v in x)


def chamber_of(x, a: Arrangement) -> ChamberKey:
    p = _as_point(x)
    vals = a.form_values(p)
    for i, v in enumerate(vals):
        if v.denominator == 1:
            raise OnHyperplaneError(f"point lies on the affine hyperplane alpha_{i} = {v}")
    return ChamberKey(tuple(floor(v) for v in vals), p)


def same_chamber_mod_lattice(k1: ChamberKey, k2: ChamberKey, a: Arrangement) -> bool:
    return integer_solve(a.coeffs, [y - x for x, y in zip(k1.k, k2.k)]) is not None


def chamber_class(k: ChamberKey | Sequence[int], a: Arrangement) -> tuple:
    """Canonical invariant of ``k`` modulo the row lattice ``Z^l S``."""
    kv = k.k if isinstance(k, ChamberKey) else tuple(k)
    snf = smith_normal_form(a.coeffs)
    v = snf.right
    y = [sum(kv[i] * v[i, j] for i in range(a.n)) for j in range(a.n)]
    return tuple(yj % snf.divisors[j] if j < snf.rank else yj for j, yj in enumerate(y))


def find_witness(k: Sequence[int], a: Arrangement, max_q: int = 64) -> ChamberKey:
    """Certify that the chamber with floors ``k`` is nonempty by finding a torsion point in it."""
    k = tuple(k)
    target = chamber_class(k, a)
    for q in range(2, max_q + 1):
        for y in complement_points(a, q):
            x = tuple(Fraction(v, q) for v in y)
            key = chamber_of(x, a)
            if chamber_class(key, a) == target:
                z = integer_solve(a.coeffs, [kt - ki for kt, ki in zip(k, key.k)])
                w = tuple(xi + zi for xi, zi in zip(x, z))
                found = chamber_of(w, a)
                if found.k != k:
                    raise ArithmeticError("translated witness landed in the wrong chamber")
                return found
    raise WitnessNotFoundError(f"no torsion point with q <= {max_q} in the chamber {k}")


def chamber_action(gamma: IntMatrix, k: ChamberKey, a: Arrangement) -> ChamberKey:
    if not k.witness:
        raise ValueError("chamber key has no witness point")
    w = tuple(sum(k.witness[i] * gamma[i, j] for i in range(gamma.rows)) for j in range(gamma.cols))
    return chamber_of(w, a)


def chamber_orbit_isotropy(g: MatrixGroup, k: ChamberKey, a: Arrangement):
    """Orbit (one key per lattice class, first-seen order) and isotropy element indices."""
    home = chamber_class(k, a)
    orbit, seen, iso = [], set(), []
    for i, m in enumerate(g.elements):
        img = chamber_action(m, k, a)
        c = chamber_class(img, a)
        if c == home:
            iso.append(i)
        if c not in seen:
            seen.add(c)
            orbit.append(img)
    if len(orbit) * len(iso) != g.order:
        raise ArithmeticError("orbit-stabiliser count failed")
    return orbit, iso


def chamber_fixed_count(k: ChamberKey, gamma: IntMatrix, q: int, a: Arrangement,
                        budget: int = kernels.DEFAULT_BUDGET) -> int:
    """Points of ``C cap T[q]`` fixed by ``gamma``, which must stabilise the class of ``C``."""
    home = chamber_class(k, a)
    if k.witness and chamber_class(chamber_action(gamma, k, a), a) != home:
        raise ValueError("gamma does not stabilise this chamber class")
    if fixed_point_count(gamma, q) > budget:
        raise kernels.InstanceTooLargeError("too many fixed points")
    cols = a.columns()
    count = 0
    for y in _fixed_numerators(gamma, q):
        vals = [sum(yi * si for yi, si in zip(y, c)) for c in cols]
        if all(v % q for v in vals) and chamber_class([v // q for v in vals], a) == home:
            count += 1
    return count


@dataclass
class OrbitReport:
    representative: ChamberKey
    size: int
    isotropy: list
    chamber_count: int
    induced: list


@dataclass
class ChamberReport:
    q: int
    orbits: list
    total: list
    engine: list

    @property
    def holds(self) -> bool:
        return self.total == self.engine

    def render(self) -> str:
        lines = [f"q = {self.q}"]
        for i, o in enumerate(self.orbits, start=1):
            vals = ", ".join(str(v) for v in o.induced)
            lines.append(f"orbit {i}: size {o.size}, isotropy order {len(o.isotropy)}, "
                         f"chamber count {o.chamber_count}, induced character ({vals})")
        lines.append("sum of induced: (" + ", ".join(str(v) for v in self.total) + ")")
        lines.append("engine:         (" + ", ".join(str(v) for v in self.engine) + ")")
        lines.append("identity holds" if self.holds else "IDENTITY FAILS")
        return "\n".join(lines)


def verify_chamber_decomposition(a: Arrangement, g: MatrixGroup, q: int,
                                 engine: Optional[EquivariantQuasiPolynomial] = None,
                                 budget: int = kernels.DEFAULT_BUDGET) -> ChamberReport:
    """Check the permutation character equals the sum over chamber orbits of induced characters."""
    if a.n == 0:
        raise EmptyArrangementError("chamber decomposition needs a non-empty arrangement")
    if engine is None:
        engine = equivariant_characteristic_qpoly(a, g)
    classes = {}
    for y in complement_points(a, q, budget=budget):
        key = chamber_of(TorsionPoint(q, y), a)
        classes.setdefault(chamber_class(key, a), [key, 0])[1] += 1
    assigned = set()
    orbits = []
    for c, (key, count) in classes.items():
        if c in assigned:
            continue
        orbit, iso = chamber_orbit_isotropy(g, key, a)
        for o in orbit:
            oc = chamber_class(o, a)
            if oc not in classes:
                raise ArithmeticError("orbit left the set of chambers meeting T[q]")
            assigned.add(oc)
        h = g.subgroup(iso)
        psi = ClassFunction(h, [chamber_fixed_count(key, h.elements[cls[0]], q, a, budget)
                                for cls in h.classes])
        ind = induce(g, h, psi)
        values = []
        for v in ind.values:
            if not v.is_real() or v.re.denominator != 1:
                raise ArithmeticError("induced permutation character is not integral")
            values.append(int(v.re))
        orbits.append(OrbitReport(key, len(orbit), iso, count, values))
    total = [sum(o.induced[c] for o in orbits) for c in range(g.num_classes)]
    return ChamberReport(q, orbits, total, engine.evaluate(q))
