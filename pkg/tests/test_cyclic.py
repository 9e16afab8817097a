import itertools
from math import comb

import pytest

from cyclicreal import cyclic as cy
from cyclicreal.errors import ObjectMismatch, ResidueOutOfRange


def brute_rotation_and_part(u, chi, m):
    """Solve u∘chi = chi'∘c by trying every rotation c of [n] and reading off chi'."""
    n1 = len(chi)
    target = [(v + u) % (m + 1) for v in chi]
    for c in range(n1):
        chi2 = [None] * n1
        for x in range(n1):
            chi2[(x + c) % n1] = target[x]
        if all(a <= b for a, b in zip(chi2, chi2[1:])):
            return tuple(chi2), c
    raise AssertionError("no factorization")


def test_u_star_examples():
    assert cy.u_star_chi_and_chi_star_u(0, (0, 1, 1), 2) == ((0, 1, 1), 0)
    assert cy.u_star_chi_and_chi_star_u(1, (0, 0), 1) == ((1, 1), 0)
    with pytest.raises(ResidueOutOfRange):
        cy.u_star_chi_and_chi_star_u(3, (0, 0), 1)


def test_u_star_for_bijections():
    # chi = id: chi^* u is u itself
    for n in range(4):
        for u in range(n + 1):
            assert cy.u_star_chi_and_chi_star_u(u, tuple(range(n + 1)), n) == (tuple(range(n + 1)), u)


@pytest.mark.parametrize("n,m", [(n, m) for n in range(4) for m in range(4)])
def test_u_star_against_brute_force(n, m):
    for chi in itertools.combinations_with_replacement(range(m + 1), n + 1):
        for u in range(m + 1):
            got = cy.u_star_chi_and_chi_star_u(u, chi, m)
            chi2, c = brute_rotation_and_part(u, chi, m)
            assert got[0] == chi2
            # the rotation is unique when chi is injective; otherwise it is the one the B-sets pick
            if len(set(chi)) == len(chi):
                assert got[1] == c


def test_compose_examples():
    b = cy.DeltaTildeMor(2, 1, (0, 0, 1), 2)
    assert cy.compose_delta_tilde(cy.delta_identity(1), b) == b
    phi = cy.DeltaTildeMor(1, 3, (1, 3), 0)
    assert cy.compose_delta_tilde(phi, cy.DeltaTildeMor(2, 1, (0, 0, 1), 0)) == cy.DeltaTildeMor(2, 3, (1, 1, 3), 0)
    with pytest.raises(ObjectMismatch):
        cy.compose_delta_tilde(b, b)


@pytest.mark.parametrize("n,m,k", list(itertools.product(range(3), repeat=3)))
def test_compose_agrees_with_periodic_model(n, m, k):
    for b in cy.hom_enumerate(n, m):
        for a in cy.hom_enumerate(m, k):
            assert cy.compose_delta_tilde(a, b) == cy.G(cy.compose_nabla(cy.F(a), cy.F(b)))


def test_F_examples():
    assert cy.F(cy.delta_identity(3)).values == (0, 1, 2, 3)
    assert cy.F(cy.rotation(1, 1)).values == (1, 2)
    assert cy.F(cy.DeltaTildeMor(1, 1, (0, 0), 0)).values == (0, 0)


def test_G_examples():
    assert cy.G(cy.nabla_identity(2)) == cy.delta_identity(2)
    assert cy.G(cy.NablaTildeMor(1, 1, (1, 2))) == cy.rotation(1, 1)


def test_G_is_well_defined_on_classes():
    for n, m in itertools.product(range(3), repeat=2):
        for f in cy.hom_enumerate(n, m, "nabla"):
            for r in range(-3, 4):
                shifted = cy.NablaTildeMor(n, m, tuple(v + r * (m + 1) for v in f.values))
                assert cy.nabla(n, m, shifted.values) == f
                assert cy.G(shifted) == cy.G(f)
                # precomposing with a full period is the same map
                pre = tuple(f(x + r * (n + 1)) for x in range(n + 1))
                assert cy.nabla(n, m, pre) == f


def test_nabla_examples():
    t1 = cy.translation(2, 1)
    assert cy.compose_nabla(t1, t1) == cy.translation(2, 2)
    assert cy.compose_nabla(cy.translation(2, 1), cy.translation(2, 2)) == cy.nabla_identity(2)
    f = cy.F(cy.DeltaTildeMor(2, 1, (0, 1, 1), 1))
    assert cy.compose_nabla(cy.nabla_identity(1), f) == f == cy.compose_nabla(f, cy.nabla_identity(2))
    with pytest.raises(ObjectMismatch):
        cy.compose_nabla(f, f)


def test_hom_counts():
    assert len(cy.hom_enumerate(1, 1)) == 6
    assert len(cy.hom_enumerate(0, 0)) == 1
    for m in range(5):
        assert len(cy.hom_enumerate(0, m)) == m + 1 == len(cy.hom_enumerate(0, m, "nabla"))
    assert len(cy.hom_enumerate(4, 4)) == comb(9, 5) * 5 == 630


def test_nabla_enumeration_is_canonical_and_distinct():
    for n, m in itertools.product(range(4), repeat=2):
        homs = cy.hom_enumerate(n, m, "nabla")
        assert len(set(homs)) == len(homs)
        assert all(cy.is_canonical(f) for f in homs)
        assert set(homs) == {cy.F(a) for a in cy.hom_enumerate(n, m)}


def test_dual_examples():
    for n in range(4):
        assert cy.dual(cy.nabla_identity(n)) == cy.nabla_identity(n)
    assert cy.dual(cy.translation(1, 1)) == cy.translation(1, -1)
    # h -> h∘(x+1) sends f_i to f_{i-1}, i.e. position -i to -i+1
    assert cy.dual(cy.translation(3, 1)) == cy.translation(3, 1)
    assert cy.translation(1, 1) == cy.translation(1, -1)


def test_map_to_point_order():
    n = 2
    fs = {i: cy.map_to_point(n, i) for i in range(-3, 4)}
    for i, j in itertools.product(fs, repeat=2):
        pointwise = all(fs[i](x) <= fs[j](x) for x in range(-9, 10))
        assert pointwise == (i >= j)
        assert cy.map_to_point_index(n, fs[i]) == -i


def test_literals():
    assert str(cy.DeltaTildeMor(1, 2, (0, 2), 1)) == "chi=[0,2];u=1"
    assert str(cy.nabla_identity(1)) == "f=[0,1]"
    with pytest.raises(ValueError):
        cy.DeltaTildeMor(1, 1, (1, 0), 0)
    with pytest.raises(ValueError):
        cy.NablaTildeMor(1, 0, (0, 3))
