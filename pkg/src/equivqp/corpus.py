"""Standard groups, worked examples and a seeded random corpus of invariant arrangements."""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Optional

from .arrangement import Arrangement, ArrangementError, orbit_closure
from .coxeter_a import build_type_a, cycle_type, permutation_of
from .group import CharacterTable, GaussianRational, MatrixGroup, generate_group
from .linalg import IntMatrix

ROTATION = IntMatrix.from_rows([[0, -1], [1, 0]])
SWAP = IntMatrix.from_rows([[0, 1], [1, 0]])


@dataclass
class Problem:
    name: str
    arrangement: Arrangement
    group: MatrixGroup
    table: Optional[CharacterTable] = None


def negation_group(rank: int) -> MatrixGroup:
    return generate_group([IntMatrix.from_rows([[-int(i == j) for j in range(rank)] for i in range(rank)])])


def swap_group() -> MatrixGroup:
    return generate_group([SWAP])


def rotation_group() -> MatrixGroup:
    return generate_group([ROTATION])


def symmetric_group(ell: int) -> MatrixGroup:
    """S_{l+1} acting on the coweight lattice of type A_l."""
    return build_type_a(ell).group


def order_two_table(g: MatrixGroup) -> CharacterTable:
    if g.order != 2:
        raise ValueError("group must have order 2")
    return CharacterTable(g, [[1, 1], [1, -1]])


def cyclic_table(g: MatrixGroup) -> CharacterTable:
    """Characters ``chi_k(h^j) = i^(jk)`` for a cyclic group of order 4 generated by ``g.generators[0]``."""
    if g.order != 4 or len(g.generators) != 1:
        raise ValueError("expected a cyclic group of order 4 with one generator")
    h = g.generators[0]
    powers = [IntMatrix.identity(g.rank)]
    for _ in range(3):
        powers.append(powers[-1] @ h)
    exps = [powers.index(g.representative(c)) for c in range(g.num_classes)]
    unit = [GaussianRational(1), GaussianRational(0, 1), GaussianRational(-1), GaussianRational(0, -1)]
    return CharacterTable(g, [[unit[(j * k) % 4] for j in exps] for k in range(4)])


# irreducible characters of S_3 and S_4 by cycle type
_SYMMETRIC_CHARACTERS = {
    3: [
        {(1, 1, 1): 1, (2, 1): 1, (3,): 1},
        {(1, 1, 1): 1, (2, 1): -1, (3,): 1},
        {(1, 1, 1): 2, (2, 1): 0, (3,): -1},
    ],
    4: [
        {(1, 1, 1, 1): 1, (2, 1, 1): 1, (2, 2): 1, (3, 1): 1, (4,): 1},
        {(1, 1, 1, 1): 1, (2, 1, 1): -1, (2, 2): 1, (3, 1): 1, (4,): -1},
        {(1, 1, 1, 1): 2, (2, 1, 1): 0, (2, 2): 2, (3, 1): -1, (4,): 0},
        {(1, 1, 1, 1): 3, (2, 1, 1): 1, (2, 2): -1, (3, 1): 0, (4,): -1},
        {(1, 1, 1, 1): 3, (2, 1, 1): -1, (2, 2): -1, (3, 1): 0, (4,): 1},
    ],
}


def symmetric_table(g: MatrixGroup) -> CharacterTable:
    n = g.rank + 1
    if n not in _SYMMETRIC_CHARACTERS:
        raise ValueError("character tables are bundled for S_3 and S_4 only")
    types = [cycle_type(permutation_of(r)) for r in g.representatives()]
    return CharacterTable(g, [[chi[t] for t in types] for chi in _SYMMETRIC_CHARACTERS[n]])


def three_lines_negation() -> Problem:
    """Three lines through the origin of Z^2 under x -> -x."""
    g = negation_group(2)
    a = Arrangement.from_columns([(1, 0), (0, 1), (1, -1)], 2)
    return Problem("three_lines_negation", a, g, order_two_table(g))


def swap_antidiagonal() -> Problem:
    """The line x1 + x2 = 0 under the coordinate swap."""
    g = swap_group()
    a = Arrangement.from_columns([(1, 1)], 2)
    return Problem("swap_antidiagonal", a, g, order_two_table(g))


def rotation_period_ten() -> Problem:
    """Forms 2x1 - x2 and x1 + 2x2 under the quarter-turn rotation."""
    g = rotation_group()
    a = Arrangement.from_columns([(2, -1), (1, 2)], 2)
    return Problem("rotation_period_ten", a, g, cyclic_table(g))


def swap_empty() -> Problem:
    g = swap_group()
    return Problem("swap_empty", Arrangement(IntMatrix.zeros(2, 0)), g, order_two_table(g))


def worked_examples() -> list:
    return [three_lines_negation(), swap_antidiagonal(), rotation_period_ten()]


def _groups() -> list:
    return [
        ("C2(-I) rank 1", negation_group(1)),
        ("C2(-I) rank 2", negation_group(2)),
        ("C2(-I) rank 3", negation_group(3)),
        ("C2(swap)", swap_group()),
        ("C4(rotation)", rotation_group()),
        ("S3", symmetric_group(2)),
        ("S4", symmetric_group(3)),
    ]


def random_invariant_arrangements(count: int, seed: int = 0, max_n: int = 6, bound: int = 4) -> list:
    """``count`` invariant arrangements built as orbit closures of random columns.

    Groups cycle through the standard list so each appears; candidate
    closures with too many hyperplanes or parallel columns are redrawn.
    """
    rng = random.Random(seed)
    groups = _groups()
    out = []
    attempts = 0
    while len(out) < count:
        attempts += 1
        if attempts > 1000 * count:
            raise RuntimeError("could not draw enough random arrangements")
        label, g = groups[len(out) % len(groups)]
        seeds = []
        for _ in range(rng.randint(1, 2)):
            c = tuple(rng.randint(-bound, bound) for _ in range(g.rank))
            if any(c):
                seeds.append(c)
        if not seeds:
            continue
        try:
            a = orbit_closure(seeds, g)
        except ArrangementError:
            continue
        if a.n > max_n or a.coeffs.max_abs() > bound:
            continue
        out.append(Problem(f"random {len(out)} [{label}]", a, g))
    return out
