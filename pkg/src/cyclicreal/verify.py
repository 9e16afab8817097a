"""Verification suites: each checks one claim exhaustively or on seeded samples.

A suite returns a :class:`SuiteReport`; failures carry the input that
reproduces them. Suites are deterministic for a fixed seed.
"""

from __future__ import annotations

import itertools
import random
import time
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb

from . import cyclic as cy
from . import cyclic_realization as cr
from . import ppset as pp
from . import realization as rz
from . import sampling as sm
from .errors import UnknownSuite
from .nerve import enumerate_simplicial_maps, induced_map, nerve, nerve_product_level, restrict_to_vertices
from .poset import (
    Chain,
    FinitePoset,
    enumerate_monotone_maps,
    new_poset,
    product,
    standard_poset,
)


@dataclass
class SuiteReport:
    name: str
    cases: int = 0
    failures: list[str] = field(default_factory=list)
    wall_time: float = 0.0

    @property
    def ok(self) -> bool:
        return not self.failures

    def check(self, cond: bool, repro: str):
        self.cases += 1
        if not cond:
            self.failures.append(repro)

    def summary(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        return f"{status} {self.name}: {self.cases} cases, {len(self.failures)} failures ({self.wall_time:.2f}s)"


def all_posets(max_size: int) -> list[FinitePoset]:
    """Every labelled poset on 0..max_size elements (duplicates removed)."""
    out = []
    for size in range(max_size + 1):
        pairs = [(a, b) for a in range(size) for b in range(size) if a != b]
        seen = set()
        for mask in range(1 << len(pairs)):
            rel = [p for i, p in enumerate(pairs) if mask >> i & 1]
            try:
                P = new_poset(size, rel)
            except Exception:
                continue
            if P not in seen:
                seen.add(P)
                out.append(P)
    return out


# --- cyclic category --------------------------------------------------------------

def suite_cyclic_iso(seed=0, max_n=4, mult_max=3):
    """G∘F = id, F∘G = id on Hom([n],[m]); F multiplicative on composable pairs."""
    rep = SuiteReport("cyclic-iso")
    for n, m in itertools.product(range(max_n + 1), repeat=2):
        pairs = cy.hom_enumerate(n, m)
        nablas = cy.hom_enumerate(n, m, "nabla")
        expected = comb(n + m + 1, n + 1) * (n + 1)
        rep.check(len(pairs) == expected == len(nablas), f"|Hom([{n}],[{m}])| != {expected}")
        for a in pairs:
            rep.check(cy.G(cy.F(a)) == a, f"G(F({a})) != id")
        for f in nablas:
            rep.check(cy.F(cy.G(f)) == f, f"F(G({f})) != id")
    for n, m, k in itertools.product(range(mult_max + 1), repeat=3):
        for b in cy.hom_enumerate(n, m):
            Fb = cy.F(b)
            for a in cy.hom_enumerate(m, k):
                rep.check(cy.F(cy.compose_delta_tilde(a, b)) == cy.compose_nabla(cy.F(a), Fb),
                          f"F({a} o {b}) != F(a) o F(b) for [{n}]->[{m}]->[{k}]")
    return rep


def suite_delta_laws(seed=0, assoc_max=2, ident_max=4):
    rep = SuiteReport("delta-laws")
    for n, m in itertools.product(range(ident_max + 1), repeat=2):
        for a in cy.hom_enumerate(n, m):
            rep.check(cy.compose_delta_tilde(cy.delta_identity(m), a) == a, f"id o {a} != {a}")
            rep.check(cy.compose_delta_tilde(a, cy.delta_identity(n)) == a, f"{a} o id != {a}")
    objs = range(assoc_max + 1)
    for n, m, k, l in itertools.product(objs, repeat=4):
        for c in cy.hom_enumerate(n, m):
            for b in cy.hom_enumerate(m, k):
                bc = cy.compose_delta_tilde(b, c)
                for a in cy.hom_enumerate(k, l):
                    lhs = cy.compose_delta_tilde(cy.compose_delta_tilde(a, b), c)
                    rhs = cy.compose_delta_tilde(a, bc)
                    rep.check(lhs == rhs, f"({a} o {b}) o {c} != {a} o ({b} o {c})")
    return rep


def suite_rotation_part(seed=0, max_n=4):
    """χ^*u from the reordering of [n] agrees with translation by -k and with G_2(F(u)∘F(χ))."""
    rep = SuiteReport("rotation-part")
    for n, m in itertools.product(range(max_n + 1), repeat=2):
        for chi in (f.values for f in enumerate_monotone_maps(standard_poset(n), standard_poset(m))):
            for u in range(m + 1):
                _, c = cy.u_star_chi_and_chi_star_u(u, chi, m)
                # B_i = chi^{-1}(u^{-1}(i)), u^{-1}(i) = i - u mod m+1
                B = [[x for x in range(n + 1) if chi[x] == (i - u) % (m + 1)] for i in range(m + 1)]
                k = min(next(b for b in B if b))
                rep.check(c == (-k) % (n + 1), f"chi={chi} u={u}: rotation {c} vs -k={-k}")
                composite = cy.compose_nabla(cy.F(cy.rotation(m, u)), cy.F(cy.DeltaTildeMor(n, m, chi, 0)))
                rep.check(cy.G(composite).u == c, f"chi={chi} u={u}: G_2 disagrees")
    return rep


def suite_duality(seed=0, max_n=3, window_n=4, periods=3):
    rep = SuiteReport("duality")
    for n, m in itertools.product(range(max_n + 1), repeat=2):
        for f in cy.hom_enumerate(n, m, "nabla"):
            rep.check(cy.dual(cy.dual(f)) == f, f"dual(dual({f})) != {f} on [[{n}]]->[[{m}]]")
            for k in range(max_n + 1):
                for g in cy.hom_enumerate(m, k, "nabla"):
                    lhs = cy.dual(cy.compose_nabla(g, f))
                    rhs = cy.compose_nabla(cy.dual(f), cy.dual(g))
                    rep.check(lhs == rhs, f"dual({g} o {f}) != dual(f) o dual(g)")
    for n in range(max_n + 1):
        rep.check(cy.dual(cy.nabla_identity(n)) == cy.nabla_identity(n), f"dual(id_{n}) != id")
    # Map([[n]], [[0]]) ≅ [[n]]
    for n in range(window_n + 1):
        W = periods * (n + 1)
        xs = range(-W, W + 1)
        maps = {}
        for f0 in range(-periods, periods + 1):
            for vals in itertools.product(range(f0, f0 + 2), repeat=n):
                vals = (f0,) + vals
                if any(b < a for a, b in zip(vals, vals[1:])) or vals[-1] > f0 + 1:
                    continue
                fn = (lambda v: lambda x: v[x % (n + 1)] + x // (n + 1))(vals)
                i = cy.map_to_point_index(n, fn)
                fi = cy.map_to_point(n, -i)
                rep.check(all(fn(x) == fi(x) for x in xs), f"map {vals} is not f_i for i={-i}")
                maps[i] = fi
        idx = sorted(maps)
        for a in idx:
            for b in idx:
                pointwise = all(maps[a](x) <= maps[b](x) for x in xs)
                rep.check(pointwise == (a <= b), f"order mismatch for positions {a}, {b} on [[{n}]]")
            shifted = lambda x, a=a: maps[a](x + n + 1)
            rep.check(cy.map_to_point_index(n, shifted) == a + n + 1, f"shift of position {a} on [[{n}]]")
    return rep


# --- nerves -------------------------------------------------------------------------

def suite_nerve_bijection(seed=0, exhaustive_max=3, samples=50, sample_max=5, check_level=None):
    rep = SuiteReport("nerve-bijection")
    rng = random.Random(seed)
    cases = [(P, Q) for P in all_posets(exhaustive_max) for Q in all_posets(exhaustive_max)]
    cases += [(sm.random_poset(rng, rng.randint(1, sample_max)), sm.random_poset(rng, rng.randint(1, sample_max)))
              for _ in range(samples)]
    for P, Q in cases:
        maps = enumerate_simplicial_maps(nerve(P), nerve(Q), check_level)
        monos = enumerate_monotone_maps(P, Q)
        rep.check(len(maps) == len(monos), f"{len(maps)} simplicial vs {len(monos)} monotone for {P!r}, {Q!r}")
        rep.check(sorted(restrict_to_vertices(F).values for F in maps) == [f.values for f in monos],
                  f"restriction is not onto Hom({P!r}, {Q!r})")
        rep.check(all(induced_map(restrict_to_vertices(F)) == F for F in maps), f"F -> f -> S(f) != F for {P!r}")
        rep.check(all(restrict_to_vertices(induced_map(f)) == f for f in monos), f"f -> S(f) -> f != f for {P!r}")
    return rep


def suite_nerve_product(seed=0, max_k=3, random_count=2):
    rep = SuiteReport("nerve-product")
    rng = random.Random(seed)
    posets = [standard_poset(0), standard_poset(1), standard_poset(2)]
    posets += [sm.random_poset(rng, 4) for _ in range(random_count)]
    for P, Q in itertools.product(posets, repeat=2):
        for k in range(max_k + 1):
            w = nerve_product_level(P, Q, k)
            direct = enumerate_monotone_maps(standard_poset(k), product(P, Q))
            nP = len(enumerate_monotone_maps(standard_poset(k), P))
            nQ = len(enumerate_monotone_maps(standard_poset(k), Q))
            rep.check(len(direct) == len(w.forward) == nP * nQ == len(w.backward),
                      f"level {k} counts differ for {P!r} x {Q!r}")
            rep.check(all(w.backward[w.forward[s]] == s for s in w.forward), f"round trip at level {k}")
            rep.check(all(w.forward[w.backward[ab]] == ab for ab in w.backward), f"round trip back at level {k}")
    return rep


# --- realization ---------------------------------------------------------------------

def suite_square(seed=0):
    rep = SuiteReport("square")
    P = product(standard_poset(1), standard_poset(1))
    cx = rz.cell_complex(P)
    rep.check(cx.f_vector == (4, 5, 2), f"f-vector {cx.f_vector}")
    rep.check(cx.euler_characteristic == 1, f"euler {cx.euler_characteristic}")
    top = cx.top_cells()
    rep.check(len(top) == 2, f"{len(top)} top cells")
    if len(top) == 2:
        common = rz.shared_faces(cx, top[0], top[1])
        diag = (0, 3)  # (0,0) < (1,1)
        rep.check([c.elements for c in common] == [diag], f"shared faces {[c.elements for c in common]}")
        paths = sorted(c.elements for c in top)
        rep.check(paths == [(0, 1, 3), (0, 2, 3)], f"top cells {paths}")
    return rep


def suite_barycentric(seed=0, samples=1000, max_n=5, theta_max=3, theta_samples=100):
    rep = SuiteReport("barycentric")
    rng = random.Random(seed)
    for n in range(max_n + 1):
        Pn = standard_poset(n)
        for _ in range(samples):
            b = sm.random_bary(rng, n)
            rep.check(rz.to_barycentric(rz.from_barycentric(b)) == b, f"to(from({b})) != b")
            p = sm.random_step_point(rng, Pn)
            rep.check(rz.from_barycentric(rz.to_barycentric(p)) == p, f"from(to({p.segments})) != p")
            b2 = sm.random_bary(rng, n)
            d, bound = rz.lipschitz_bound(n, b, b2)
            rep.check(d <= bound, f"Lipschitz bound fails: {b}, {b2}: {d} > {bound}")
    for n, m in itertools.product(range(theta_max + 1), repeat=2):
        for theta in enumerate_monotone_maps(standard_poset(n), standard_poset(m)):
            for _ in range(theta_samples):
                p = sm.random_step_point(rng, standard_poset(n))
                lhs = rz.to_barycentric(rz.map_point(theta, p))
                rhs = rz.pushforward_theta(theta, rz.to_barycentric(p))
                rep.check(lhs == rhs, f"naturality fails for θ={theta.values}, p={p.segments}")
    return rep


def suite_colimit(seed=0, samples=1000, size=6):
    rep = SuiteReport("colimit")
    rng = random.Random(seed)
    for i in range(samples):
        if i % 50 == 0:
            P = sm.random_poset(rng, size)
        p = sm.random_step_point(rng, P)
        c = rz.canonical_factor(p)
        rep.check(rz.realize_colim(c) == p, f"realize(factor(p)) != p for {p.segments}")
        chain = Chain(P, tuple(sm.random_chain(rng, P)))
        c2 = rz.ColimPoint(chain, rz.BaryPoint(tuple(sm.random_partition(rng, len(chain)))))
        rep.check(rz.canonical_factor(rz.realize_colim(c2)) == c2, f"factor(realize(c)) != c for {c2}")
    return rep


def suite_product_realization(seed=0, samples=1000, max_n=3, random_posets=4):
    rep = SuiteReport("product-realization")
    rng = random.Random(seed)
    pairs = [(standard_poset(n), standard_poset(m)) for n in range(max_n + 1) for m in range(max_n + 1)]
    pairs += [(sm.random_poset(rng, rng.randint(1, 5)), sm.random_poset(rng, rng.randint(1, 5)))
              for _ in range(random_posets)]
    per = max(1, samples // len(pairs))
    for P, Q in pairs:
        seen = {}
        for _ in range(per):
            p, q = sm.random_step_point(rng, P), sm.random_step_point(rng, Q)
            r = rz.product_pair(p, q)
            rep.check(rz.unpair(r, P, Q) == (p, q), f"unpair(pair(p,q)) != (p,q) for {p.segments}, {q.segments}")
            # injectivity on the sample: equal images only for equal inputs
            prev = seen.setdefault(r, (p, q))
            rep.check(prev == (p, q), "pairing not injective on sample")
            r2 = sm.random_step_point(rng, product(P, Q))
            rep.check(rz.product_pair(*rz.unpair(r2, P, Q)) == r2, f"pair(unpair(r)) != r for {r2.segments}")
    return rep


def suite_metric(seed=0, samples=1000):
    rep = SuiteReport("metric")
    rng = random.Random(seed)
    for i in range(samples):
        if i % 100 == 0:
            P = sm.random_poset(rng, rng.randint(1, 6)) if i % 200 else standard_poset(rng.randint(0, 4))
        f, g, h = (sm.random_step_point(rng, P) for _ in range(3))
        dfg, dgh, dfh = rz.metric(f, g), rz.metric(g, h), rz.metric(f, h)
        rep.check(dfg == rz.metric(g, f), "symmetry")
        rep.check((dfg == 0) == (f == g), f"identity of indiscernibles: {f.segments} vs {g.segments}")
        rep.check(rz.metric(f, f) == 0, "d(f,f) != 0")
        rep.check(dfh <= dfg + dgh, f"triangle fails for {f.segments}, {g.segments}, {h.segments}")
    return rep


def _random_compact_ppset(rng):
    kind = rng.randrange(3)
    if kind == 0:
        return pp.Standard(rng.randint(0, 4))
    if kind == 1:
        return sm.random_embedded(rng)
    return pp.Product(pp.Standard(rng.randint(0, 2)), sm.random_embedded(rng, 3, 8))


def suite_cyclic_metric(seed=0, samples=1000):
    """Cyclic metric axioms. Identity of indiscernibles is checked on random
    pairs and on the pair (constant 0, 0-then-1) over [[0]]."""
    rep = SuiteReport("cyclic-metric")
    rng = random.Random(seed)
    P0 = pp.Standard(0)
    a = cr.cyclic_point(P0, [(P0.from_int(0), 1)])
    b = cr.cyclic_point(P0, [(P0.from_int(0), Fraction(1, 2)), (P0.from_int(1), Fraction(1, 2))])
    rep.check((cr.cyclic_metric(a, b) == 0) == (a == b),
              f"distinct points {a.segments} and {b.segments} at distance {cr.cyclic_metric(a, b)}")
    for i in range(samples):
        if i % 100 == 0:
            P = _random_compact_ppset(rng)
        p, q, r = (sm.random_cyclic_point(rng, P) for _ in range(3))
        dpq, dqr, dpr = cr.cyclic_metric(p, q), cr.cyclic_metric(q, r), cr.cyclic_metric(p, r)
        rep.check(dpq == cr.cyclic_metric(q, p), "symmetry")
        rep.check(cr.cyclic_metric(p, p) == 0, "d(p,p) != 0")
        rep.check((dpq == 0) == (p == q), f"identity of indiscernibles: {p.segments} vs {q.segments}")
        rep.check(dpr <= dpq + dqr, "triangle inequality")
        theta = Fraction(rng.randrange(61), 60)
        rep.check(cr.cyclic_metric(cr.rotate(p, theta), cr.rotate(q, theta)) == dpq,
                  f"rotation by {theta} changes distance")
    return rep


# --- ppsets -------------------------------------------------------------------------

def suite_normal_form(seed=0, samples=200, max_reps=6, max_period=30, window=2):
    rep = SuiteReport("normal-form")
    rng = random.Random(seed)
    for _ in range(samples):
        P = sm.random_embedded(rng, max_reps, max_period)
        nf = pp.archimedean_normal_form(P)
        S = pp.Standard(nf.n)
        tag = repr(P)
        rep.check(nf.n + 1 == P.orbit_count, f"n+1 != orbit count for {tag}")
        rep.check(all(nf.g(nf.f(x)) == x for x in S.window(window)), f"g∘f != id for {tag}")
        rep.check(all(nf.f(nf.g(x)) == x for x in P.window(window)), f"f∘g != id for {tag}")
        rep.check(pp.is_monotone_on_window(nf.f, S, P, window), f"f not monotone for {tag}")
        rep.check(pp.is_monotone_on_window(nf.g, P, S, window), f"g not monotone for {tag}")
        rep.check(pp.is_equivariant_on_window(nf.f, S, P, window), f"f not equivariant for {tag}")
        rep.check(pp.is_equivariant_on_window(nf.g, P, S, window), f"g not equivariant for {tag}")
        rep.check(all(nf.f(S.from_int(i)) == pp.normal_form_f_value(nf, P, i)
                      for i in range(-window * (nf.n + 1), window * (nf.n + 1))),
                  f"f differs from T^n1 t(n2) for {tag}")
    return rep


def suite_dichotomy(seed=0, samples=500):
    rep = SuiteReport("dichotomy")
    rng = random.Random(seed)
    for i in range(samples):
        kind = i % 3
        if kind == 0:
            P = pp.Standard(rng.randint(0, 6))
        else:
            P = sm.random_embedded(rng, negative=(kind == 2))
        rep.check(pp.is_archimedean(P), f"{P!r} should be archimedean")
        signs = pp.positivity_by_orbit(P)
        rep.check(len(set(signs)) == 1, f"positivity differs across orbits of {P!r}: {signs}")
        rep.check(pp.is_positive(P) == (kind != 2), f"wrong sign for {P!r}")
    return rep


def suite_homeo(seed=0, samples=1000, max_n=4):
    rep = SuiteReport("homeo")
    rng = random.Random(seed)
    for n in range(max_n + 1):
        S = pp.Standard(n)
        for _ in range(samples):
            b, s = sm.random_bary(rng, n), sm.random_phase(rng)
            p = cr.homeo_from_product(b, s, n)
            rep.check(cr.homeo_to_product(p) == (b, s), f"to(from({b}, {s.s})) != id")
            q = sm.random_cyclic_point(rng, S)
            rep.check(cr.homeo_from_product(*cr.homeo_to_product(q), n) == q, f"from(to(q)) != q for {q.segments}")
            theta = Fraction(rng.randrange(120), 60)
            b2, s2 = cr.homeo_to_product(cr.rotate(q, theta))
            b1, s1 = cr.homeo_to_product(q)
            rep.check(b2 == b1 and s2.s == (s1.s - theta) % 1, f"rotation by {theta} is not a phase translation")
    return rep


def suite_cyclic_factor(seed=0, samples=500):
    rep = SuiteReport("cyclic-factor")
    rng = random.Random(seed)
    for i in range(samples):
        if i % 10 == 0:
            P = sm.random_embedded(rng)
        p = sm.random_cyclic_point(rng, P)
        fac = cr.factor_cyclic_point(p)
        rep.check(cr.reassemble(fac) == p, f"reassembly fails for {p.segments} over {P!r}")
        rep.check(pp.is_archimedean(fac.image) and pp.is_positive(fac.image), "image not positive archimedean")
        rep.check(fac.n + 1 == len({v.orbit for v in p.values}), "n+1 != number of orbits hit")
    return rep


def suite_cyclic_pairing(seed=0, samples=1000):
    rep = SuiteReport("cyclic-pairing")
    rng = random.Random(seed)
    for i in range(samples):
        if i % 100 == 0:
            P, Q = _random_compact_ppset(rng), _random_compact_ppset(rng)
        p, q = sm.random_cyclic_point(rng, P), sm.random_cyclic_point(rng, Q)
        r = cr.pair_cyclic(p, q)
        rep.check(cr.unpair_cyclic(r) == (p, q), "unpair(pair(p,q)) != (p,q)")
        theta = Fraction(rng.randrange(60), 60)
        rep.check(cr.rotate(r, theta) == cr.pair_cyclic(cr.rotate(p, theta), cr.rotate(q, theta)),
                  "rotation does not act diagonally")
    return rep


SUITES = {
    "cyclic-iso": suite_cyclic_iso,
    "delta-laws": suite_delta_laws,
    "rotation-part": suite_rotation_part,
    "nerve-bijection": suite_nerve_bijection,
    "nerve-product": suite_nerve_product,
    "square": suite_square,
    "barycentric": suite_barycentric,
    "colimit": suite_colimit,
    "product-realization": suite_product_realization,
    "metric": suite_metric,
    "cyclic-metric": suite_cyclic_metric,
    "normal-form": suite_normal_form,
    "homeo": suite_homeo,
    "cyclic-factor": suite_cyclic_factor,
    "cyclic-pairing": suite_cyclic_pairing,
    "duality": suite_duality,
    "dichotomy": suite_dichotomy,
}


def run_suite(name: str, seed: int = 0, **caps) -> SuiteReport:
    if name not in SUITES:
        raise UnknownSuite(f"unknown suite {name!r}; choose from {', '.join(SUITES)}")
    t0 = time.perf_counter()
    rep = SUITES[name](seed=seed, **caps)
    rep.wall_time = time.perf_counter() - t0
    return rep
