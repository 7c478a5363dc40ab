"""Finite subgroups of GL_l(Z) and their class functions.

Groups are enumerated explicitly from generators.  Character values are
Gaussian rationals, which covers every group of interest here (cyclic
groups of order <= 4 and symmetric groups); anything needing a larger
cyclotomic field still gets per-class data but cannot be decomposed.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence

from .linalg import IntMatrix, determinant

DEFAULT_CAP = 100_000


class GroupError(ValueError):
    pass


class CapExceededError(GroupError):
    pass


class NotUnimodularError(GroupError):
    pass


class NotSubgroupError(GroupError):
    pass


class ReconstructionError(ArithmeticError):
    pass


@dataclass(frozen=True)
class GaussianRational:
    re: Fraction = Fraction(0)
    im: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "re", Fraction(self.re))
        object.__setattr__(self, "im", Fraction(self.im))

    @classmethod
    def coerce(cls, x) -> "GaussianRational":
        if isinstance(x, GaussianRational):
            return x
        if isinstance(x, complex):
            return cls(Fraction(x.real), Fraction(x.imag))
        return cls(Fraction(x))

    def __add__(self, o):
        o = GaussianRational.coerce(o)
        return GaussianRational(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __sub__(self, o):
        return self + (-GaussianRational.coerce(o))

    def __rsub__(self, o):
        return GaussianRational.coerce(o) - self

    def __mul__(self, o):
        o = GaussianRational.coerce(o)
        return GaussianRational(self.re * o.re - self.im * o.im, self.re * o.im + self.im * o.re)

    __rmul__ = __mul__

    def __truediv__(self, o):
        o = GaussianRational.coerce(o)
        n = o.re * o.re + o.im * o.im
        if n == 0:
            raise ZeroDivisionError("division by zero")
        return self * GaussianRational(o.re / n, -o.im / n)

    def conjugate(self):
        return GaussianRational(self.re, -self.im)

    def __eq__(self, o):
        try:
            o = GaussianRational.coerce(o)
        except (TypeError, ValueError):
            return NotImplemented
        return self.re == o.re and self.im == o.im

    def __hash__(self):
        return hash((self.re, self.im))

    def is_real(self) -> bool:
        return self.im == 0

    def __str__(self):
        def t(x):
            return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"
        if self.im == 0:
            return t(self.re)
        im = "i" if abs(self.im) == 1 else f"{t(abs(self.im))}i"
        if self.re == 0:
            return ("-" if self.im < 0 else "") + im
        return f"{t(self.re)}{'-' if self.im < 0 else '+'}{im}"


def _key(m: IntMatrix) -> tuple:
    return m.entries


def _inverse(m: IntMatrix) -> IntMatrix:
    """Exact inverse of a unimodular matrix (Gauss-Jordan over Q)."""
    n = m.rows
    a = [[Fraction(x) for x in m.row(i)] + [Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    for c in range(n):
        p = next(i for i in range(c, n) if a[i][c] != 0)
        a[c], a[p] = a[p], a[c]
        pv = a[c][c]
        a[c] = [x / pv for x in a[c]]
        for i in range(n):
            if i != c and a[i][c] != 0:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[c])]
    rows = [[x for x in row[n:]] for row in a]
    if any(x.denominator != 1 for row in rows for x in row):
        raise NotUnimodularError("matrix inverse is not integral")
    return IntMatrix.from_rows([[int(x) for x in row] for row in rows], cols=n)


class MatrixGroup:
    """A finite matrix group with its elements and conjugacy classes.

    Element 0 is the identity.  Elements are listed in breadth-first order
    from the identity multiplying by generators on the right; classes are
    ordered by their smallest element index, which is also the chosen
    representative.
    """

    def __init__(self, rank: int, elements: Sequence[IntMatrix], generators: Sequence[IntMatrix] = (),
                 parent: Optional["MatrixGroup"] = None, parent_indices: Optional[Sequence[int]] = None):
        self.rank = rank
        self.elements = list(elements)
        self.generators = list(generators)
        self.parent = parent
        self.parent_indices = list(parent_indices) if parent_indices is not None else None
        self._index = {_key(g): i for i, g in enumerate(self.elements)}
        if len(self._index) != len(self.elements):
            raise GroupError("duplicate elements")
        if self.elements[0] != IntMatrix.identity(rank):
            raise GroupError("element 0 must be the identity")
        self._inv = None
        self._compute_classes()

    @property
    def order(self) -> int:
        return len(self.elements)

    def __len__(self):
        return len(self.elements)

    def index(self, m: IntMatrix) -> int:
        try:
            return self._index[_key(m)]
        except KeyError:
            raise GroupError("matrix is not an element of the group") from None

    def contains(self, m: IntMatrix) -> bool:
        return _key(m) in self._index

    def mul(self, i: int, j: int) -> int:
        return self._index[_key(self.elements[i] @ self.elements[j])]

    def inverse(self, i: int) -> int:
        if self._inv is None:
            inv = [None] * self.order
            for k, g in enumerate(self.elements):
                if inv[k] is None:
                    j = self._index[_key(_inverse(g))]
                    inv[k], inv[j] = j, k
            self._inv = inv
        return self._inv[i]

    def conjugate(self, g: int, h: int) -> int:
        """Index of ``h g h^-1``."""
        return self.mul(self.mul(h, g), self.inverse(h))

    def _compute_classes(self):
        gens = [self.index(g) for g in self.generators] if self.generators else list(range(self.order))
        class_of = [None] * self.order
        witness = [None] * self.order  # witness[x] = h with h rep h^-1 = x
        classes = []
        for start in range(self.order):
            if class_of[start] is not None:
                continue
            c = len(classes)
            members = [start]
            class_of[start] = c
            witness[start] = 0
            todo = deque([start])
            while todo:
                x = todo.popleft()
                for s in gens:
                    y = self.conjugate(x, s)
                    if class_of[y] is None:
                        class_of[y] = c
                        witness[y] = self.mul(s, witness[x])
                        members.append(y)
                        todo.append(y)
            classes.append(sorted(members))
        self.classes = classes
        self.class_of = class_of
        self.conjugators = witness

    @property
    def num_classes(self) -> int:
        return len(self.classes)

    @property
    def class_sizes(self) -> list:
        return [len(c) for c in self.classes]

    def representative(self, c: int) -> IntMatrix:
        return self.elements[self.classes[c][0]]

    def representatives(self) -> list:
        return [self.representative(c) for c in range(self.num_classes)]

    def subgroup(self, indices: Sequence[int]) -> "MatrixGroup":
        """The subgroup on the given element indices, as a group of its own."""
        idx = sorted(set(indices))
        if 0 not in idx:
            raise NotSubgroupError("subset does not contain the identity")
        members = set(idx)
        for i in idx:
            if self.inverse(i) not in members:
                raise NotSubgroupError("subset not closed under inverses")
            for j in idx:
                if self.mul(i, j) not in members:
                    raise NotSubgroupError("subset not closed under products")
        return MatrixGroup(self.rank, [self.elements[i] for i in idx], parent=self, parent_indices=idx)


def generate_group(generators: Sequence[IntMatrix], cap: int = DEFAULT_CAP, rank: Optional[int] = None) -> MatrixGroup:
    gens = list(generators)
    if rank is None:
        if not gens:
            raise GroupError("rank is required when there are no generators")
        rank = gens[0].rows
    for g in gens:
        if g.shape != (rank, rank):
            raise GroupError(f"generator of shape {g.shape}, expected {(rank, rank)}")
        if abs(determinant(g)) != 1:
            raise NotUnimodularError(f"generator {g.to_rows()} is not unimodular")
    ident = IntMatrix.identity(rank)
    elements = [ident]
    seen = {_key(ident)}
    todo = deque([ident])
    while todo:
        x = todo.popleft()
        for g in gens:
            y = x @ g
            k = _key(y)
            if k not in seen:
                seen.add(k)
                elements.append(y)
                if len(elements) > cap:
                    raise CapExceededError(f"group has more than {cap} elements")
                todo.append(y)
    # drop generators equal to the identity so class BFS stays meaningful
    return MatrixGroup(rank, elements, generators=[g for g in gens if g != ident])


@dataclass
class ClassFunction:
    group: MatrixGroup
    values: list

    def __post_init__(self):
        self.values = [GaussianRational.coerce(v) for v in self.values]
        if len(self.values) != self.group.num_classes:
            raise ValueError("need one value per conjugacy class")

    def at_element(self, i: int) -> GaussianRational:
        return self.values[self.group.class_of[i]]

    def __add__(self, other: "ClassFunction") -> "ClassFunction":
        _same_group(self, other)
        return ClassFunction(self.group, [a + b for a, b in zip(self.values, other.values)])

    def __mul__(self, c) -> "ClassFunction":
        return ClassFunction(self.group, [v * c for v in self.values])

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, ClassFunction):
            return NotImplemented
        return self.group is other.group and self.values == other.values

    def restrict(self, sub: MatrixGroup) -> "ClassFunction":
        if sub.parent is not self.group:
            raise NotSubgroupError("not a subgroup of this function's group")
        return ClassFunction(sub, [self.at_element(sub.parent_indices[cls[0]]) for cls in sub.classes])


def _same_group(a: ClassFunction, b: ClassFunction):
    if a.group is not b.group:
        raise ValueError("class functions live on different groups")


def special_character(g: MatrixGroup, kind: str) -> ClassFunction:
    if kind == "trivial":
        return ClassFunction(g, [1] * g.num_classes)
    if kind == "regular":
        return ClassFunction(g, [g.order if c == 0 else 0 for c in range(g.num_classes)])
    if kind == "determinant":
        return ClassFunction(g, [determinant(r) for r in g.representatives()])
    raise ValueError(f"unknown character kind {kind!r}")


def inner_product(phi: ClassFunction, psi: ClassFunction) -> GaussianRational:
    _same_group(phi, psi)
    acc = GaussianRational()
    for size, a, b in zip(phi.group.class_sizes, phi.values, psi.values):
        acc = acc + a * b.conjugate() * size
    return acc / phi.group.order


def induce(g: MatrixGroup, h: MatrixGroup, psi: ClassFunction) -> ClassFunction:
    """Induced class function from the subgroup ``h`` of ``g``.

    ``h`` must come from ``g.subgroup``.  The averaging formula is evaluated
    at every element of ``g`` and checked to be constant on classes.
    """
    if h.parent is not g:
        raise NotSubgroupError("h is not a subgroup of g")
    if psi.group is not h:
        raise ValueError("psi must be a class function on h")
    local = {p: i for i, p in enumerate(h.parent_indices)}
    values = [None] * g.num_classes
    for x in range(g.order):
        acc = GaussianRational()
        for s in range(g.order):
            y = g.conjugate(x, g.inverse(s))  # s^-1 x s
            if y in local:
                acc = acc + psi.at_element(local[y])
        acc = acc / h.order
        c = g.class_of[x]
        if values[c] is None:
            values[c] = acc
        elif values[c] != acc:
            raise ArithmeticError("induced function is not a class function")
    return ClassFunction(g, values)


@dataclass
class CharacterTable:
    group: MatrixGroup
    irreducibles: list = field(default_factory=list)

    def __post_init__(self):
        self.irreducibles = [x if isinstance(x, ClassFunction) else ClassFunction(self.group, x)
                             for x in self.irreducibles]

    def validate(self) -> None:
        """Raise ValueError unless the table is an orthonormal basis of class functions."""
        k = len(self.irreducibles)
        if k != self.group.num_classes:
            raise ValueError(f"{k} characters for {self.group.num_classes} classes")
        for i, a in enumerate(self.irreducibles):
            for j, b in enumerate(self.irreducibles):
                if inner_product(a, b) != int(i == j):
                    raise ValueError(f"characters {i} and {j} are not orthonormal")
        if sum(x.values[0] * x.values[0] for x in self.irreducibles) != self.group.order:
            raise ValueError("degrees do not satisfy sum of squares = group order")


def decompose(chi: ClassFunction, table: CharacterTable) -> list:
    """Multiplicities of each irreducible in ``chi``, checked by reconstruction."""
    mult = [inner_product(chi, x) for x in table.irreducibles]
    recon = [GaussianRational() for _ in chi.values]
    for m, x in zip(mult, table.irreducibles):
        recon = [r + m * v for r, v in zip(recon, x.values)]
    if recon != chi.values:
        raise ReconstructionError("irreducibles do not reconstruct the class function")
    return mult
