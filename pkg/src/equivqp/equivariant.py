"""The equivariant characteristic quasi-polynomial.

For each class representative ``g`` the fixed-point count on the mod-q
complement is assembled by inclusion-exclusion over subsets ``J`` of the
hyperplanes: each term is the kernel count of ``(R_g - I | S_J)`` mod q,
i.e. ``prod gcd(d_j, q) * q^(l - rank)``.  Constituents are read off the
Smith normal form data directly, without sampling.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm, prod

from .arrangement import Arrangement, ArrangementError, check_invariance
from .group import CharacterTable, GaussianRational, MatrixGroup, ReconstructionError
from .linalg import IntMatrix, smith_normal_form
from .quasipoly import Polynomial, QuasiPolynomial, combine, has_gcd_property, minimal_period


class NotInvariantError(ArrangementError):
    pass


def _terms(a: Arrangement, gamma: IntMatrix) -> list:
    """``(sign, divisors, rank)`` for every subset J, in binary-counter order."""
    base = gamma - IntMatrix.identity(a.rank)
    out = []
    for mask in range(1 << a.n):
        subset = [i for i in range(a.n) if mask >> i & 1]
        m = base.hstack(a.submatrix(subset)) if subset else base
        snf = smith_normal_form(m)
        out.append(((-1) ** len(subset), snf.divisors, snf.rank))
    return out


def _period(terms) -> int:
    return lcm(*(d[-1] if d else 1 for _, d, _ in terms))


def _class_qpoly(ell: int, terms) -> QuasiPolynomial:
    m = _period(terms)

    def constituent(r):
        coeffs = [0] * (ell + 1)
        for sign, divs, rk in terms:
            coeffs[ell - rk] += sign * prod(gcd(d, r) for d in divs)
        return Polynomial(tuple(coeffs))

    return QuasiPolynomial.from_function(m, constituent)


def _class_job(args):
    ell, a, gamma = args
    return _class_qpoly(ell, _terms(a, gamma))


@dataclass
class EquivariantQuasiPolynomial:
    group: MatrixGroup
    per_class: list
    period: int

    def evaluate(self, q: int) -> list:
        """Values at each class; exact integers (they are fixed-point counts)."""
        out = []
        for f in self.per_class:
            v = f(q)
            if v.denominator != 1:
                raise ArithmeticError("non-integral fixed-point count")
            out.append(int(v))
        return out

    def minimal_period(self) -> int:
        return lcm(*(minimal_period(f) for f in self.per_class))

    def has_gcd_property(self) -> bool:
        return all(has_gcd_property(f) for f in self.per_class)

    @property
    def identity(self) -> QuasiPolynomial:
        return self.per_class[0]


def equivariant_characteristic_qpoly(a: Arrangement, g: MatrixGroup, threads: int = 1) -> EquivariantQuasiPolynomial:
    if not check_invariance(a, g):
        raise NotInvariantError("arrangement is not invariant under the group")
    reps = g.representatives()
    jobs = [(a.rank, a, r) for r in reps]
    if threads > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=threads) as pool:
            qps = list(pool.map(_class_job, jobs))
    else:
        qps = [_class_job(j) for j in jobs]
    n_tilde = lcm(*(f.period for f in qps))
    return EquivariantQuasiPolynomial(g, [f.with_period(n_tilde) for f in qps], n_tilde)


def period_N_tilde(a: Arrangement, g: MatrixGroup) -> int:
    """lcm of the largest divisor of ``(R_g - I | S_J)`` over every element and subset."""
    out = 1
    for gamma in g.elements:
        out = lcm(out, _period(_terms(a, gamma)))
    return out


def period_n_Gamma(g: MatrixGroup) -> int:
    ident = IntMatrix.identity(g.rank)
    return lcm(1, *(smith_normal_form(m - ident).max_divisor for m in g.elements[1:]))


def decompose_equivariant(e: EquivariantQuasiPolynomial, table: CharacterTable) -> list:
    """Multiplicity quasi-polynomial of each irreducible, verified on ``q = 1..3*period``."""
    g = e.group
    if table.group is not g:
        raise ValueError("character table is for a different group")
    out = []
    for chi in table.irreducibles:
        weights = [v.conjugate() * Fraction(size, g.order) for v, size in zip(chi.values, g.class_sizes)]
        re = combine([(w.re, f) for w, f in zip(weights, e.per_class)])
        im = combine([(w.im, f) for w, f in zip(weights, e.per_class)])
        if not im.is_zero():
            raise ReconstructionError("multiplicity has a nonzero imaginary part")
        out.append(re)
    for q in range(1, 3 * e.period + 1):
        target = e.evaluate(q)
        mults = [m(q) for m in out]
        if any(x.denominator != 1 or x < 0 for x in mults):
            raise ReconstructionError(f"multiplicities at q={q} are not non-negative integers")
        for c in range(g.num_classes):
            val = sum((chi.values[c] * x for chi, x in zip(table.irreducibles, mults)), GaussianRational())
            if val != target[c]:
                raise ReconstructionError(f"reconstruction failed at q={q}, class {c}")
    return out
