import itertools

import pytest

from cyclicreal.errors import (
    DegreeError,
    NotArchimedean,
    NotOrderPreserving,
    NotPositiveArchimedean,
    SourceNotDegreeOne,
    WrongDegree,
)
from cyclicreal.ppset import (
    Embedded,
    PpsetElement,
    PpsetMap,
    PpsetMorphism,
    Product,
    Standard,
    SubPpset,
    archimedean_normal_form,
    compose_maps,
    identity_map,
    is_archimedean,
    is_equivariant_on_window,
    is_monotone_on_window,
    is_positive,
    module_compose,
    morphisms_equal,
    pair_morphisms,
    positivity_by_orbit,
    post_shift,
    ppset_from_json,
    ppset_map,
    ppset_to_json,
    pre_shift,
    projections,
    unpair_morphism,
)

S0, S1, S2 = Standard(0), Standard(1), Standard(2)


def morphisms(source, target):
    """All classes source -> target (degree-1 source), by brute force over a window.

    The canonical representative sends orbit 0 to offset zero; monotonicity then
    confines every other value to offsets in [0, 1].
    """
    k = target.degree
    offs = list(itertools.product(range(0, 2), repeat=k))
    cands = [PpsetElement(o, off) for off in offs for o in range(target.orbit_count)]
    firsts = [PpsetElement(o, (0,) * k) for o in range(target.orbit_count)]
    out = []
    for first in firsts:
        for rest in itertools.product(cands, repeat=source.orbit_count - 1):
            f = PpsetMap(source, target, (first,) + rest)
            if is_monotone_on_window(f, source, target, 2):
                out.append(PpsetMorphism(f))
    return out


def test_standard_examples():
    x = S0.from_int(0)
    assert S0.diag(x) == S0.from_int(1) and S0.lt(x, S0.diag(x))
    a, b, c = S1.from_int(0), S1.from_int(1), S1.from_int(2)
    assert S1.lt(a, b) and S1.lt(b, c) and c == S1.diag(a)
    assert [Standard(n).orbit_count for n in range(4)] == [1, 2, 3, 4]


def test_archimedean_examples():
    assert all(is_archimedean(Standard(n)) for n in range(4))
    assert is_archimedean(Embedded((0, 3), 5))
    with pytest.raises(WrongDegree):
        is_archimedean(Product(S0, S0))


def test_positivity_examples():
    assert all(is_positive(Standard(n)) for n in range(4))
    neg = Embedded((0, 3), 5, negative=True)
    assert positivity_by_orbit(neg) == [False, False]
    assert not is_positive(neg)


def test_non_archimedean_sub_ppset():
    # two orbits of Z x Z that are incomparable
    P = SubPpset(Product(S0, S0), (0,))
    with pytest.raises(WrongDegree):
        is_archimedean(P)
    with pytest.raises(NotArchimedean):
        is_positive(P)


def test_ppset_map_examples():
    f = identity_map(S2)
    assert all(f(x) == x for x in S2.window())
    collapse = ppset_map(S1, S0, [S0.from_int(0), S0.from_int(1)])
    assert [S0.to_int(collapse(S1.from_int(z))) for z in range(-2, 4)] == [-1, 0, 0, 1, 1, 2]
    assert is_equivariant_on_window(collapse, S1, S0)
    with pytest.raises(NotOrderPreserving):
        ppset_map(S1, S0, [S0.from_int(1), S0.from_int(0)])
    with pytest.raises(SourceNotDegreeOne):
        PpsetMap(Product(S0, S0), S0, (S0.from_int(0),))


def test_morphism_equality():
    f = ppset_map(S1, S2, [S2.from_int(1), S2.from_int(2)])
    assert morphisms_equal(f, post_shift(f, [1]))
    assert morphisms_equal(f, pre_shift(f, 1))
    assert morphisms_equal(PpsetMorphism.of(f), PpsetMorphism.of(post_shift(f, [-3])))
    c0 = ppset_map(S1, S0, [S0.from_int(0), S0.from_int(0)])
    c1 = ppset_map(S1, S0, [S0.from_int(0), S0.from_int(1)])
    assert not morphisms_equal(c0, c1)


def test_morphism_counts_standard():
    # classes [[n]] -> [[m]] number C(n+m+1, n+1)(n+1)
    from math import comb
    for n, m in itertools.product(range(3), repeat=2):
        assert len(morphisms(Standard(n), Standard(m))) == comb(n + m + 1, n + 1) * (n + 1)


def test_module_compose():
    f = PpsetMorphism.of(ppset_map(S1, S2, [S2.from_int(1), S2.from_int(2)]))
    idm = PpsetMorphism.of(identity_map(S1))
    assert module_compose(f, idm) == f
    for a in morphisms(S0, S1):
        for b in morphisms(S1, S1):
            for c in morphisms(S1, S2):
                assert module_compose(c, module_compose(b, a)) == module_compose(module_compose(c, b), a)
    # representative independence
    for a in morphisms(S1, S1):
        for b in morphisms(S1, S2):
            shifted = compose_maps(post_shift(b.representative, [2]), pre_shift(a.representative, -1))
            assert morphisms_equal(module_compose(b, a), shifted)
    h = PpsetMorphism.of(PpsetMap(S0, Product(S0, S0), (PpsetElement(0, (0, 0)),)))
    with pytest.raises(DegreeError):
        module_compose(h, f)


@pytest.mark.parametrize("m", range(3))
@pytest.mark.parametrize("P,Q", list(itertools.product([S0, S1], repeat=2)))
def test_product_universal_property(m, P, Q):
    R = Standard(m)
    into_product = morphisms(R, Product(P, Q))
    into_p, into_q = morphisms(R, P), morphisms(R, Q)
    assert len(into_product) == len(into_p) * len(into_q)
    pairs = {(f, g) for f in into_p for g in into_q}
    assert {unpair_morphism(h) for h in into_product} == pairs
    assert all(pair_morphisms(*unpair_morphism(h)) == h for h in into_product)


def test_product_basics():
    PQ = Product(S1, S2)
    assert PQ.orbit_count == 6 and PQ.degree == 2
    for pr in projections(PQ):
        assert is_monotone_on_window(pr, PQ, pr.target, 1)
    f = PpsetMorphism.of(ppset_map(S2, S1, [S1.from_int(0), S1.from_int(1), S1.from_int(1)]))
    g = PpsetMorphism.of(identity_map(S2))
    assert unpair_morphism(pair_morphisms(f, g)) == (f, g)


def test_normal_form_standard_is_identity():
    for n in range(4):
        nf = archimedean_normal_form(Standard(n))
        assert nf.n == n
        assert all(nf.f(x) == x and nf.g(x) == x for x in Standard(n).window())


def test_normal_form_embedded_example():
    E = Embedded((0, 3), 5)
    nf = archimedean_normal_form(E)
    assert nf.n == 1
    assert [E.to_int(nf.f(S1.from_int(i))) for i in range(4)] == [0, 3, 5, 8]
    assert [S1.to_int(nf.g(E.from_int(z))) for z in (3, 5)] == [1, 2]


def test_normal_form_rejects_negative():
    with pytest.raises(NotPositiveArchimedean):
        archimedean_normal_form(Embedded((0, 3), 5, negative=True))


def test_ppset_json_round_trip():
    for P in [S2, Embedded((1, 4), 7), Embedded((0,), 2, True), Product(S1, Embedded((0, 3), 5))]:
        assert ppset_from_json(ppset_to_json(P)) == P
