from fractions import Fraction as F

import pytest

from equivqp.arrangement import Arrangement, bruteforce_fixed_complement_count, complement_points
from equivqp.corpus import random_invariant_arrangements, worked_examples
from equivqp.equivariant import equivariant_characteristic_qpoly
from equivqp.linalg import IntMatrix, kernel_count_mod_q
from equivqp.quasipoly import Polynomial, fit_from_samples
from equivqp.torus import (
    ChamberKey,
    EmptyArrangementError,
    OnHyperplaneError,
    TorsionPoint,
    chamber_action,
    chamber_class,
    chamber_fixed_count,
    chamber_of,
    chamber_orbit_isotropy,
    find_witness,
    fixed_torsion_points,
    same_chamber_mod_lattice,
    torsion_oracle_fixed_count,
    verify_chamber_decomposition,
)

HALF = (F(1, 2), F(1, 2))


def lattice_classes(a, q):
    return {chamber_class(chamber_of(TorsionPoint(q, y), a), a) for y in complement_points(a, q)}


def test_fixed_points_identity():
    assert len(fixed_torsion_points(IntMatrix.identity(2), 5)) == 25


def test_fixed_points_rotation(rotation):
    g = rotation.group
    pts = fixed_torsion_points(g.elements[1], 6)
    assert len(pts) == 2 and TorsionPoint(6, (3, 3)) in pts
    assert sorted(p.coords for p in pts) == [(0, 0), HALF]
    assert len(fixed_torsion_points(g.elements[2], 6)) == 4
    assert len(fixed_torsion_points(g.elements[2], 5)) == 1


def test_fixed_point_count_matches_kernel():
    for p in worked_examples() + random_invariant_arrangements(7, seed=8):
        for m in p.group.elements:
            for q in range(1, 21):
                assert len(fixed_torsion_points(m, q)) == kernel_count_mod_q(m - IntMatrix.identity(m.rows), q)


def test_negation_fixed_points_four(three_lines):
    assert len(fixed_torsion_points(three_lines.group.elements[1], 4)) == 4


def test_torsion_oracle_examples(rotation, three_lines, swap_line):
    assert torsion_oracle_fixed_count(rotation.arrangement, rotation.group.elements[1], 6) == 1
    for q in range(1, 21):
        assert torsion_oracle_fixed_count(three_lines.arrangement, three_lines.group.elements[1], q) == 0
    assert torsion_oracle_fixed_count(swap_line.arrangement, swap_line.group.elements[0], 7) == 42


def test_torsion_image_is_complement():
    for p in worked_examples():
        a = p.arrangement
        for q in (4, 5, 6):
            via_torus = {pt.as_lq() for pt in fixed_torsion_points(IntMatrix.identity(a.rank), q)
                         if not any(v.denominator == 1 for v in a.form_values(pt.coords))}
            assert via_torus == set(complement_points(a, q))


def test_chamber_of(rotation):
    a = rotation.arrangement
    assert chamber_of(HALF, a).k == (0, 1)
    assert chamber_of((F(1, 10), F(1, 10)), Arrangement.from_columns([(1, 1)], 2)).k == (0,)
    with pytest.raises(OnHyperplaneError):
        chamber_of((F(1, 2), F(0)), a)


def test_same_chamber(rotation):
    a = rotation.arrangement
    p = chamber_of(HALF, a)
    c1 = find_witness((0, 0), a)
    assert same_chamber_mod_lattice(p, p, a)
    shifted = chamber_of((c1.witness[0], c1.witness[1] + 1), a)
    assert shifted.k != c1.k and same_chamber_mod_lattice(c1, shifted, a)
    assert not same_chamber_mod_lattice(p, c1, a)


def test_chamber_action_and_orbits(rotation):
    a, g = rotation.arrangement, rotation.group
    p = chamber_of(HALF, a)
    c1 = find_witness((0, 0), a)
    assert chamber_action(g.elements[0], c1, a).k == c1.k
    assert chamber_class(chamber_action(g.elements[1], p, a), a) == chamber_class(p, a)
    orbit, iso = chamber_orbit_isotropy(g, p, a)
    assert len(orbit) == 1 and len(iso) == 4
    orbit, iso = chamber_orbit_isotropy(g, c1, a)
    assert len(orbit) == 4 and iso == [0]
    assert len({chamber_class(o, a) for o in orbit}) == 4
    trivial = g.subgroup([0])
    orbit, iso = chamber_orbit_isotropy(trivial, c1, a)
    assert len(orbit) == 1 and iso == [0]


def test_chamber_fixed_count(rotation):
    a, g = rotation.arrangement, rotation.group
    p = chamber_of(HALF, a)
    assert chamber_fixed_count(p, g.elements[0], 5, a) == 4
    for q in (2, 4, 6, 8):
        assert chamber_fixed_count(p, g.elements[1], q, a) == 1
    assert chamber_fixed_count(p, g.elements[0], 1, a) == 0
    with pytest.raises(ValueError):
        chamber_fixed_count(find_witness((0, 0), a), g.elements[1], 4, a)


def test_ehrhart_of_p(rotation):
    a = rotation.arrangement
    p = chamber_of(HALF, a)
    ident = IntMatrix.identity(2)
    f = fit_from_samples([(q, chamber_fixed_count(p, ident, q, a)) for q in range(1, 16)], 5, 2)
    fifth = F(1, 5)
    expected = {1: 1, 2: 5, 3: -3, 4: -3, 5: 5}
    for r in range(1, 6):
        assert f.constituent(r) == Polynomial((expected[r], -2, 1)) * fifth


def test_ehrhart_of_c_orbit(rotation):
    a = rotation.arrangement
    c1 = find_witness((0, 0), a)
    ident = IntMatrix.identity(2)
    f = fit_from_samples([(q, chamber_fixed_count(c1, ident, q, a)) for q in range(1, 16)], 5, 2)
    expected = {1: 1, 2: 0, 3: 2, 4: 2, 5: 5}
    for r in range(1, 6):
        assert f.constituent(r) == Polynomial((expected[r], -2, 1)) * F(1, 5)


def test_chamber_classes_partition():
    for p in worked_examples():
        a = p.arrangement
        e = equivariant_characteristic_qpoly(a, p.group)
        for q in range(1, 11):
            counts = {}
            for y in complement_points(a, q):
                c = chamber_class(chamber_of(TorsionPoint(q, y), a), a)
                counts[c] = counts.get(c, 0) + 1
            assert sum(counts.values()) == e.evaluate(q)[0]


def test_swap_line_single_class(swap_line):
    # a single form with coprime coefficients: every k-vector is a lattice translate
    assert len(lattice_classes(swap_line.arrangement, 4)) == 1


@pytest.mark.parametrize("q", range(1, 21))
def test_chamber_decomposition_examples(q, rotation, swap_line):
    for p in (rotation, swap_line):
        r = verify_chamber_decomposition(p.arrangement, p.group, q)
        assert r.holds
        if q == 1:
            assert r.engine == [0] * p.group.num_classes and r.orbits == []


def test_chamber_report_q6(rotation):
    r = verify_chamber_decomposition(rotation.arrangement, rotation.group, 6)
    assert sorted(o.size for o in r.orbits) == [1, 4]
    assert r.total == [25, 1, 1, 1]
    text = r.render()
    assert "orbit 1: size 4, isotropy order 1, chamber count 5, induced character (20, 0, 0, 0)" in text


def test_chamber_decomposition_random():
    for p in random_invariant_arrangements(8, seed=9):
        for q in (2, 3, 5, 6):
            assert verify_chamber_decomposition(p.arrangement, p.group, q).holds


def test_empty_arrangement_rejected(swap_nothing):
    with pytest.raises(EmptyArrangementError):
        verify_chamber_decomposition(swap_nothing.arrangement, swap_nothing.group, 3)


def test_brute_vs_torsion_random():
    for p in random_invariant_arrangements(10, seed=12):
        for q in range(1, 21):
            for rep in p.group.representatives():
                assert (torsion_oracle_fixed_count(p.arrangement, rep, q)
                        == bruteforce_fixed_complement_count(p.arrangement, rep, q))


def test_chamber_key_ignores_witness():
    assert ChamberKey((0, 1), (F(1, 2),)) == ChamberKey((0, 1))
