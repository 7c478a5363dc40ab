"""Quasi-polynomials with exact rational constituents.

Residues are 1-based: constituent ``r`` (1 <= r <= period) is used when
``q % period == r % period``, so the last constituent covers multiples of
the period.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Sequence


class InsufficientSamplesError(ValueError):
    pass


class InconsistentSamplesError(ValueError):
    pass


def _trim(coeffs) -> tuple:
    c = [Fraction(x) for x in coeffs]
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def _frac_text(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


@dataclass(frozen=True)
class Polynomial:
    """Polynomial in one variable; ``coefficients[k]`` multiplies ``q**k``."""

    coefficients: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "coefficients", _trim(self.coefficients))

    @classmethod
    def monomial(cls, degree: int, coeff=1) -> "Polynomial":
        return cls((0,) * degree + (coeff,))

    @classmethod
    def from_roots(cls, roots: Iterable, lead=1) -> "Polynomial":
        p = cls((lead,))
        for a in roots:
            p = p * cls((-a, 1))
        return p

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def __call__(self, x):
        acc = Fraction(0)
        for c in reversed(self.coefficients):
            acc = acc * x + c
        return acc

    def __add__(self, other: "Polynomial") -> "Polynomial":
        a, b = self.coefficients, other.coefficients
        n = max(len(a), len(b))
        return Polynomial(tuple((a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)))

    def __mul__(self, other):
        if not isinstance(other, Polynomial):
            return Polynomial(tuple(c * other for c in self.coefficients))
        a, b = self.coefficients, other.coefficients
        if not a or not b:
            return Polynomial()
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            for j, y in enumerate(b):
                out[i + j] += x * y
        return Polynomial(tuple(out))

    __rmul__ = __mul__

    def __neg__(self) -> "Polynomial":
        return self * -1

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return self + (-other)

    def negate_variable(self) -> "Polynomial":
        """``p(-q)``."""
        return Polynomial(tuple(c if k % 2 == 0 else -c for k, c in enumerate(self.coefficients)))

    def __str__(self):
        if not self.coefficients:
            return "0"
        parts = []
        for k in range(self.degree, -1, -1):
            c = self.coefficients[k]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            a = abs(c)
            if k == 0:
                body = _frac_text(a)
            else:
                mono = "q" if k == 1 else f"q^{k}"
                body = mono if a == 1 else f"{_frac_text(a)}*{mono}"
            parts.append((sign, body))
        first_sign, first = parts[0]
        text = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text


@dataclass(frozen=True)
class QuasiPolynomial:
    period: int
    constituents: tuple

    def __post_init__(self):
        if self.period < 1:
            raise ValueError("period must be positive")
        if len(self.constituents) != self.period:
            raise ValueError("need exactly one constituent per residue")

    @classmethod
    def polynomial(cls, p: Polynomial) -> "QuasiPolynomial":
        return cls(1, (p,))

    @classmethod
    def from_function(cls, period: int, func) -> "QuasiPolynomial":
        """``func(r)`` gives the constituent for residue ``r`` in 1..period."""
        return cls(period, tuple(func(r) for r in range(1, period + 1)))

    def constituent(self, r: int) -> Polynomial:
        """Constituent for residue ``r`` (any integer, taken mod period)."""
        return self.constituents[(r - 1) % self.period]

    def __call__(self, q: int) -> Fraction:
        return evaluate(self, q)

    def with_period(self, m: int) -> "QuasiPolynomial":
        """Re-express at period ``m``; ``m`` must be a multiple or a valid smaller period."""
        if m % self.period == 0:
            return QuasiPolynomial(m, tuple(self.constituent(r) for r in range(1, m + 1)))
        if self.period % m == 0:
            cand = QuasiPolynomial(m, self.constituents[:m])
            if all(cand.constituent(r) == self.constituent(r) for r in range(1, self.period + 1)):
                return cand
        raise ValueError(f"{m} is not a period of this quasi-polynomial")

    def is_zero(self) -> bool:
        return all(not p.coefficients for p in self.constituents)

    def render(self) -> str:
        return "\n".join(
            f"period {self.period}; r≡{r}: {p}" for r, p in enumerate(self.constituents, start=1)
        )

    def __str__(self):
        return self.render()


def evaluate(f: QuasiPolynomial, q: int) -> Fraction:
    if q < 1:
        raise ValueError("quasi-polynomials are evaluated at positive integers")
    return f.constituent(q)(q)


def combine(terms: Sequence) -> QuasiPolynomial:
    """Linear combination of ``(scalar, quasi-polynomial)`` pairs.

    The result carries the lcm of the input periods; no minimisation.
    """
    terms = list(terms)
    m = lcm(*(f.period for _, f in terms)) if terms else 1
    out = []
    for r in range(1, m + 1):
        acc = Polynomial()
        for c, f in terms:
            acc = acc + f.constituent(r) * Fraction(c)
        out.append(acc)
    return QuasiPolynomial(m, tuple(out))


def _divisors(n: int) -> list:
    return [d for d in range(1, n + 1) if n % d == 0]


def minimal_period(f: QuasiPolynomial) -> int:
    for p in _divisors(f.period):
        if all(f.constituents[r] == f.constituents[r % p] for r in range(f.period)):
            return p
    return f.period  # unreachable: p = period always matches


def minimize(f: QuasiPolynomial) -> QuasiPolynomial:
    return f.with_period(minimal_period(f))


def has_gcd_property(f: QuasiPolynomial) -> bool:
    m = f.period
    seen = {}
    for r in range(1, m + 1):
        g = gcd(m, r)
        if g in seen and seen[g] != f.constituent(r):
            return False
        seen.setdefault(g, f.constituent(r))
    return True


def reciprocity(f: QuasiPolynomial, dim: int) -> QuasiPolynomial:
    """``q -> (-1)**dim * f(-q)``, with ``f(-q)`` read from residue ``-q``."""
    sign = -1 if dim % 2 else 1
    return QuasiPolynomial.from_function(
        f.period, lambda r: f.constituent(-r).negate_variable() * sign
    )


def interpolate(points) -> Polynomial:
    # Lagrange form accumulated in coefficient space
    total = Polynomial()
    for i, (xi, yi) in enumerate(points):
        basis = Polynomial((1,))
        denom = Fraction(1)
        for j, (xj, _) in enumerate(points):
            if j != i:
                basis = basis * Polynomial((-xj, 1))
                denom *= xi - xj
        total = total + basis * (Fraction(yi) / denom)
    return total


def fit_from_samples(samples: Iterable, period: int, degree: int) -> QuasiPolynomial:
    """Exact interpolation of a quasi-polynomial of given period and degree bound.

    Each residue class uses its first ``degree + 1`` samples; any further
    samples must agree with the fitted constituent.
    """
    by_res = {r: [] for r in range(1, period + 1)}
    seen = set()
    for q, v in samples:
        if q in seen:
            raise ValueError(f"duplicate sample at q={q}")
        seen.add(q)
        by_res[(q - 1) % period + 1].append((q, Fraction(v)))
    constituents = []
    for r in range(1, period + 1):
        pts = sorted(by_res[r])
        if len(pts) < degree + 1:
            raise InsufficientSamplesError(
                f"residue {r} mod {period}: {len(pts)} samples, need {degree + 1}"
            )
        p = interpolate(pts[:degree + 1])
        for q, v in pts[degree + 1:]:
            if p(q) != v:
                raise InconsistentSamplesError(
                    f"sample q={q} gives {v}, fitted constituent gives {p(q)}"
                )
        constituents.append(p)
    return QuasiPolynomial(period, tuple(constituents))
