from fractions import Fraction

import pytest

from equivqp.arrangement import (
    Arrangement,
    bruteforce_fixed_complement_count,
    characteristic_polynomial_whitney,
    lcm_period_nA,
)
from equivqp.corpus import cyclic_table, random_invariant_arrangements, rotation_group, swap_group, worked_examples
from equivqp.equivariant import (
    EquivariantQuasiPolynomial,
    NotInvariantError,
    decompose_equivariant,
    equivariant_characteristic_qpoly,
    period_N_tilde,
    period_n_Gamma,
)
from equivqp.group import generate_group
from equivqp.linalg import IntMatrix
from equivqp.quasipoly import Polynomial, QuasiPolynomial, minimal_period

P = Polynomial


def constituents(f):
    return f.with_period(minimal_period(f)).constituents


def test_three_lines(three_lines):
    e = equivariant_characteristic_qpoly(three_lines.arrangement, three_lines.group)
    assert [constituents(f) for f in e.per_class] == [(P((2, -3, 1)),), (P(),)]
    assert e.minimal_period() == 1
    half = P((1, Fraction(-3, 2), Fraction(1, 2)))
    assert [constituents(m) for m in decompose_equivariant(e, three_lines.table)] == [(half,), (half,)]


def test_swap_line(swap_line):
    e = equivariant_characteristic_qpoly(swap_line.arrangement, swap_line.group)
    assert constituents(e.per_class[0]) == (P((0, -1, 1)),)
    assert constituents(e.per_class[1]) == (P((-1, 1)), P((-2, 1)))
    assert e.minimal_period() == 2
    m1, md = decompose_equivariant(e, swap_line.table)
    for q in range(1, 21):
        if q % 2:
            assert (m1(q), md(q)) == (Fraction(q * q - 1, 2), Fraction((q - 1) ** 2, 2))
        else:
            assert (m1(q), md(q)) == (Fraction(q * q - 2, 2), Fraction(q * q - 2 * q + 2, 2))


def test_rotation(rotation):
    e = equivariant_characteristic_qpoly(rotation.arrangement, rotation.group)
    assert e.period == 10 and e.minimal_period() == 10
    assert constituents(e.per_class[0]) == (P((1, -2, 1)),) * 4 + (P((5, -2, 1)),)
    for f in e.per_class[1:]:
        assert constituents(f) == (P(), P((1,)))
    mults = decompose_equivariant(e, rotation.table)
    for q in (2, 4, 6, 8, 12):
        assert mults[0](q) == Fraction(q * q - 2 * q, 4) + 1
        assert all(m(q) == Fraction(q * q - 2 * q, 4) for m in mults[1:])


def test_empty_arrangement(swap_nothing):
    e = equivariant_characteristic_qpoly(swap_nothing.arrangement, swap_nothing.group)
    assert [constituents(f) for f in e.per_class] == [(P.monomial(2),), (P.monomial(1),)]


def test_not_invariant():
    with pytest.raises(NotInvariantError):
        equivariant_characteristic_qpoly(Arrangement.from_columns([(1, 0)], 2), swap_group())


def test_periods(rotation, swap_line, three_lines):
    trivial = generate_group([], rank=2)
    assert period_N_tilde(Arrangement(IntMatrix.zeros(2, 0)), trivial) == 1
    assert period_n_Gamma(trivial) == 1
    assert period_N_tilde(rotation.arrangement, rotation.group) == 10
    assert period_N_tilde(swap_line.arrangement, swap_line.group) == 2
    assert period_n_Gamma(rotation.group) == 2
    assert period_n_Gamma(three_lines.group) == 2
    assert period_n_Gamma(swap_line.group) == 1


def test_decompose_regular_multiple():
    g = rotation_group()
    # q times the regular character of C4
    zero = QuasiPolynomial.polynomial(P())
    e = EquivariantQuasiPolynomial(g, [QuasiPolynomial.polynomial(P((0, 4)))] + [zero] * 3, 1)
    for m in decompose_equivariant(e, cyclic_table(g)):
        assert m.constituents == (P((0, 1)),)


def test_threads_match_serial(rotation):
    a, g = rotation.arrangement, rotation.group
    s = equivariant_characteristic_qpoly(a, g)
    t = equivariant_characteristic_qpoly(a, g, threads=2)
    assert s.per_class == t.per_class and s.period == t.period


CORPUS = worked_examples() + random_invariant_arrangements(12, seed=4)


@pytest.mark.parametrize("prob", CORPUS, ids=[p.name for p in CORPUS])
def test_engine_properties(prob):
    a, g = prob.arrangement, prob.group
    e = equivariant_characteristic_qpoly(a, g)
    assert len(e.per_class) == g.num_classes
    assert e.has_gcd_property()
    assert e.period == period_N_tilde(a, g)
    for f in e.per_class:
        assert e.period % minimal_period(f) == 0
    ident = e.identity
    assert minimal_period(ident) % lcm_period_nA(a) == 0
    assert ident.constituent(1) == characteristic_polynomial_whitney(a)
    for q in range(1, 13):
        vals = e.evaluate(q)
        assert all(v >= 0 for v in vals)
        for c, rep in enumerate(g.representatives()):
            assert vals[c] == bruteforce_fixed_complement_count(a, rep, q)


@pytest.mark.parametrize("prob", CORPUS[:6], ids=[p.name for p in CORPUS[:6]])
def test_class_function_consistency(prob):
    a, g = prob.arrangement, prob.group
    for q in (2, 3, 6):
        for x in range(g.order):
            rep = g.classes[g.class_of[x]][0]
            assert g.conjugate(rep, g.conjugators[x]) == x
            assert (bruteforce_fixed_complement_count(a, g.elements[x], q)
                    == bruteforce_fixed_complement_count(a, g.elements[rep], q))


def test_orbit_count_is_integer():
    for p in CORPUS:
        e = equivariant_characteristic_qpoly(p.arrangement, p.group)
        for q in range(1, 9):
            vals = e.evaluate(q)
            burnside = Fraction(sum(v * s for v, s in zip(vals, p.group.class_sizes)), p.group.order)
            assert burnside.denominator == 1 and burnside >= 0
