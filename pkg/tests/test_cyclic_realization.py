from fractions import Fraction as Fr

import pytest

from cyclicreal import cyclic_realization as cr
from cyclicreal.errors import InvalidBarycentric, InvalidCyclicPoint, NonStandardPpset, PpsetMismatch, WrongDegree
from cyclicreal.ppset import Embedded, PpsetMorphism, Product, Standard, identity_map, morphisms_equal
from cyclicreal.realization import bary, unit_vector

S0, S1 = Standard(0), Standard(1)
q, h = Fr(1, 4), Fr(1, 2)


def point(P, *pairs):
    """Point from (integer value, length) pairs over a standard or embedded ppset."""
    return cr.cyclic_point(P, [(P.from_int(z), t) for z, t in pairs])


HALF = point(S1, (0, h), (1, h))


def test_validation():
    with pytest.raises(InvalidCyclicPoint):
        cr.CyclicPoint(S1, ((S1.from_int(0), h),))
    with pytest.raises(InvalidCyclicPoint):
        cr.CyclicPoint(S1, ((S1.from_int(1), h), (S1.from_int(0), h)))
    with pytest.raises(InvalidCyclicPoint):
        cr.CyclicPoint(S1, ((S1.from_int(0), h), (S1.from_int(3), h)))
    with pytest.raises(InvalidCyclicPoint):
        cr.CyclicPoint(S1, ((S1.from_int(2), 1),))
    with pytest.raises(InvalidCyclicPoint):
        cr.cyclic_point(S1, [(S1.from_int(0), 0)])


def test_canonical_first_offset():
    p = point(S1, (2, h), (3, h))
    assert p == HALF
    assert p(Fr(3, 2)) == S1.from_int(3) and p(-q) == S1.from_int(-1)


def test_rotate_examples():
    assert cr.rotate(HALF, 0) == HALF
    assert cr.rotate(HALF, 1) == HALF
    r = cr.rotate(HALF, q)
    direct = point(S1, (-1, q), (0, h), (1, q))
    assert r == direct and cr.cyclic_metric(r, direct) == 0
    assert [v.orbit for v in r.values] == [1, 0, 1]
    a, b = Fr(1, 3), Fr(5, 12)
    assert cr.rotate(cr.rotate(HALF, a), b) == cr.rotate(HALF, a + b)


def test_cyclic_metric_examples():
    assert cr.cyclic_metric(HALF, HALF) == 0
    assert cr.cyclic_metric(HALF, cr.rotate(HALF, h)) == 1
    const = point(S0, (0, 1))
    for s in (q, h, Fr(2, 3)):
        assert cr.cyclic_metric(const, cr.rotate(const, s)) == 0
    with pytest.raises(PpsetMismatch):
        cr.cyclic_metric(HALF, const)


def test_homeo_examples():
    const = point(S0, (0, 1))
    b, s = cr.homeo_to_product(const)
    assert b == unit_vector(0, 0) and s.s == 0
    assert cr.homeo_from_product(unit_vector(0, 0), cr.phase(0), 0) == const
    b, s = cr.homeo_to_product(HALF)
    assert b == bary(h, h) and s.s == 0
    assert cr.homeo_from_product(bary(h, h), cr.phase(0), 1) == HALF
    with pytest.raises(NonStandardPpset):
        cr.homeo_to_product(point(Embedded((0, 3), 5), (0, 1)))
    with pytest.raises(InvalidBarycentric):
        cr.homeo_from_product(bary(h, h), cr.phase(0), 2)


def test_homeo_phase_point():
    # over [[0]] the phase 1/2 point is x -> floor(x + 1/2): its last value is the shift of the first
    p = cr.homeo_from_product(unit_vector(0, 0), cr.phase(h), 0)
    assert [S0.to_int(v) for v in p.values] == [0, 1]
    assert cr.homeo_to_product(p) == (unit_vector(0, 0), cr.phase(h))


def test_rotation_moves_phase():
    b = bary(Fr(1, 6), 0, Fr(5, 6))
    for s in (0, Fr(1, 5), Fr(3, 4)):
        p = cr.homeo_from_product(b, cr.phase(s), 2)
        for theta in (Fr(1, 3), Fr(7, 10)):
            b2, s2 = cr.homeo_to_product(cr.rotate(p, theta))
            assert b2 == b and s2 == cr.phase(s - theta)


def test_factor_examples():
    f = cr.factor_cyclic_point(HALF)
    assert f.n == 1 and f.point == HALF
    assert morphisms_equal(f.morphism, PpsetMorphism.of(identity_map(S1)))
    E = Embedded((0, 3), 5)
    p = point(E, (0, Fr(1, 3)), (3, Fr(2, 3)))
    f = cr.factor_cyclic_point(p)
    assert f.n == 1 and cr.reassemble(f) == p
    assert f.point == cr.CyclicPoint(S1, ((S1.from_int(0), Fr(1, 3)), (S1.from_int(1), Fr(2, 3))))
    one = point(E, (3, q), (8, 3 * q))
    f = cr.factor_cyclic_point(one)
    assert f.n == 0 and cr.reassemble(f) == one
    with pytest.raises(WrongDegree):
        cr.factor_cyclic_point(cr.pair_cyclic(HALF, HALF))


def test_pairing_examples():
    c0, c1 = point(S0, (0, 1)), point(S1, (1, 1))
    PQ = Product(S0, S1)
    assert cr.pair_cyclic(c0, c1) == cr.cyclic_point(PQ, [(PQ.join(c0.values[0], c1.values[0]), 1)])
    r = cr.pair_cyclic(HALF, c0)
    assert cr.unpair_cyclic(r) == (HALF, c0)
    assert cr.rotate(r, q) == cr.pair_cyclic(cr.rotate(HALF, q), cr.rotate(c0, q))


def test_json_round_trip_and_describe():
    E = Embedded((0, 3), 5)
    for p in (HALF, point(E, (0, Fr(1, 3)), (3, Fr(2, 3))), cr.pair_cyclic(HALF, HALF)):
        assert cr.point_from_json(cr.point_to_json(p)) == p
    text = HALF.describe()
    assert text.splitlines()[1] == "  [0, 1/2): orbit 0 offset [0]"
