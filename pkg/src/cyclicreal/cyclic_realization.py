"""Cyclic realization ||P|| of a compact ppset.

A point is an order preserving right-continuous step map ``f: R -> P`` with
``f(t + 1) = (1,...,1) f(t)``, taken modulo the shifts of ``P``. It is stored
as its restriction to ``[0, 1)``; the representative is fixed by requiring
``f(0)`` to have offset zero.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .errors import (
    InvalidBarycentric,
    InvalidCyclicPoint,
    NonStandardPpset,
    PpsetMismatch,
    WrongDegree,
)
from .ppset import (
    PpsetElement,
    PpsetMap,
    PpsetMorphism,
    Ppset,
    Product,
    Standard,
    SubPpset,
    archimedean_normal_form,
    compose_maps,
    ppset_from_dict,
    ppset_to_dict,
)
from .realization import BaryPoint, from_barycentric, step_point, to_barycentric
from .poset import standard_poset

ZERO = Fraction(0)
ONE = Fraction(1)


@dataclass(frozen=True)
class CirclePhase:
    s: Fraction

    def __post_init__(self):
        if not 0 <= self.s < 1:
            raise ValueError(f"phase {self.s} outside [0, 1)")


def phase(s) -> CirclePhase:
    return CirclePhase(Fraction(s) % 1)


@dataclass(frozen=True)
class CyclicPoint:
    ppset: Ppset
    segments: tuple[tuple[PpsetElement, Fraction], ...]

    def __post_init__(self):
        P, segs = self.ppset, self.segments
        if not segs:
            raise InvalidCyclicPoint("no segments")
        if any(length <= 0 for _, length in segs):
            raise InvalidCyclicPoint("segment lengths must be positive")
        if sum(length for _, length in segs) != 1:
            raise InvalidCyclicPoint("segment lengths must sum to 1")
        vals = [v for v, _ in segs]
        for a, b in zip(vals, vals[1:]):
            if not P.lt(a, b):
                raise InvalidCyclicPoint(f"values {a}, {b} not strictly increasing")
        if not P.leq(vals[-1], P.diag(vals[0])):
            raise InvalidCyclicPoint("last value exceeds the shift of the first")
        if any(vals[0].offset):
            raise InvalidCyclicPoint("first value must have zero offset")

    @property
    def values(self):
        return tuple(v for v, _ in self.segments)

    def breakpoints(self) -> list[Fraction]:
        out, acc = [], ZERO
        for _, length in self.segments:
            out.append(acc)
            acc += length
        return out

    def __call__(self, t) -> PpsetElement:
        t = Fraction(t)
        k = t.numerator // t.denominator
        frac = t - k
        acc = ZERO
        for v, length in self.segments:
            acc += length
            if frac < acc:
                return self.ppset.diag(v, k)
        raise AssertionError("unreachable")

    def describe(self) -> str:
        lines = [f"one period over {self.ppset!r}:"]
        for start, (v, length) in zip(self.breakpoints(), self.segments):
            lines.append(f"  [{start}, {start + length}): orbit {v.orbit} offset {list(v.offset)}")
        return "\n".join(lines)


def cyclic_point(P: Ppset, segments: Iterable[tuple[PpsetElement, object]]) -> CyclicPoint:
    """Canonicalize raw segments over one period: drop empties, merge repeats,
    post-shift so the value at 0 has offset zero."""
    out: list[list] = []
    for v, length in segments:
        length = Fraction(length)
        if length == 0:
            continue
        v = PpsetElement(v[0], tuple(v[1]))
        if out and out[-1][0] == v:
            out[-1][1] += length
        else:
            out.append([v, length])
    if not out:
        raise InvalidCyclicPoint("no segments")
    shift = [-a for a in out[0][0].offset]
    return CyclicPoint(P, tuple((P.shift(v, shift), length) for v, length in out))


def _refine(a, b):
    """Common refinement of two segment lists covering [0, 1)."""
    out = []
    i = j = 0
    ri, rj = a[0][1], b[0][1]
    while True:
        step = min(ri, rj)
        out.append((a[i][0], b[j][0], step))
        ri -= step
        rj -= step
        if ri == 0:
            i += 1
            if i == len(a):
                return out
            ri = a[i][1]
        if rj == 0:
            j += 1
            rj = b[j][1]


def _split_at(segments, cut: Fraction):
    """Split a segment list covering [0, 1) into the parts before and after ``cut``."""
    head, tail, acc = [], [], ZERO
    for v, length in segments:
        lo, hi = acc, acc + length
        acc = hi
        if hi <= cut:
            head.append((v, length))
        elif lo >= cut:
            tail.append((v, length))
        else:
            head.append((v, cut - lo))
            tail.append((v, hi - cut))
    return head, tail


def rotate(p: CyclicPoint, theta) -> CyclicPoint:
    """Precompose with translation: ``rotate(p, θ)(t) = p(t - θ)``."""
    theta = Fraction(theta) % 1
    if theta == 0:
        return p
    P = p.ppset
    head, tail = _split_at(p.segments, 1 - theta)
    return cyclic_point(P, [(P.diag(v, -1), length) for v, length in tail] + head)


def cyclic_metric(p: CyclicPoint, q: CyclicPoint) -> Fraction:
    """Measure of ``t`` in ``[0, 1)`` where the orbits of ``p(t)`` and ``q(t)`` differ."""
    if p.ppset != q.ppset:
        raise PpsetMismatch("points live over different ppsets")
    return sum((length for a, b, length in _refine(p.segments, q.segments) if a.orbit != b.orbit), ZERO)


# --- ||[[n]]|| = |Δ_n| × S^1 ----------------------------------------------------------

def homeo_to_product(p: CyclicPoint) -> tuple[BaryPoint, CirclePhase]:
    """``s = -min f^{-1}{0,1,...}``, ``φ(x) = f(x - s)`` on ``[0, 1)``."""
    P = p.ppset
    if not isinstance(P, Standard):
        raise NonStandardPpset("the product decomposition needs [[n]]")
    n1 = P.n + 1
    z = [P.to_int(v) for v in p.values]
    # f(0) = z[0] is in [0, n], so the least t with f(t) >= 0 lies in (-1, 0]
    jstar = next((j for j, v in enumerate(z) if v >= n1), None)
    if jstar is None:
        phi = [(v, length) for v, (_, length) in zip(z, p.segments)]
        s = ZERO
    else:
        start = p.breakpoints()[jstar]
        s = 1 - start
        phi = [(v - n1, length) for v, (_, length) in zip(z[jstar:], p.segments[jstar:])]
        phi += [(v, length) for v, (_, length) in zip(z[:jstar], p.segments[:jstar])]
    step = step_point(standard_poset(P.n), phi)
    return to_barycentric(step), CirclePhase(s)


def homeo_from_product(b: BaryPoint, s: CirclePhase, n: int) -> CyclicPoint:
    """``f(x) = φ({x + s}) + (n + 1)·[x + s]``."""
    if not isinstance(b, BaryPoint) or len(b.coords) != n + 1:
        raise InvalidBarycentric(f"need a barycentric point with {n + 1} coordinates")
    if not isinstance(s, CirclePhase):
        s = phase(s)
    P = Standard(n)
    phi = from_barycentric(b).segments
    before, after = _split_at(phi, s.s)
    segs = [(P.from_int(v), length) for v, length in after]
    segs += [(P.from_int(v + n + 1), length) for v, length in before]
    return cyclic_point(P, segs)


# --- ||C(P)|| = ||P|| ------------------------------------------------------------------

@dataclass(frozen=True)
class CyclicFactorization:
    n: int
    image: SubPpset
    morphism: PpsetMorphism  # [[n]] -> P
    point: CyclicPoint  # over [[n]]


def image_ppset(p: CyclicPoint) -> SubPpset:
    """Orbits hit by ``p``, listed in order of first appearance along the period."""
    orbits: list[int] = []
    for v in p.values:
        if v.orbit not in orbits:
            orbits.append(v.orbit)
    return SubPpset(p.ppset, tuple(orbits))


def map_cyclic_point(f, p: CyclicPoint, target: Ppset) -> CyclicPoint:
    """``f ∘ p`` for an equivariant map ``f`` into ``target``."""
    return cyclic_point(target, [(f(v), length) for v, length in p.segments])


def factor_cyclic_point(p: CyclicPoint) -> CyclicFactorization:
    """Factor ``p`` through its image, identified with [[n]]."""
    P = p.ppset
    if P.degree != 1:
        raise WrongDegree(f"factorization needs a degree-1 ppset, got degree {P.degree}")
    image = image_ppset(p)
    nf = archimedean_normal_form(image)
    q = map_cyclic_point(lambda v: nf.g(image.restrict(v)), p, Standard(nf.n))
    inclusion = PpsetMap(image, P, tuple(image.lift(x) for x in image.orbit_reps()))
    m = PpsetMorphism.of(compose_maps(inclusion, nf.f))
    return CyclicFactorization(nf.n, image, m, q)


def reassemble(fac: CyclicFactorization) -> CyclicPoint:
    m = fac.morphism.representative
    return map_cyclic_point(m, fac.point, m.target)


# --- products -------------------------------------------------------------------------

def pair_cyclic(p: CyclicPoint, q: CyclicPoint) -> CyclicPoint:
    PQ = Product(p.ppset, q.ppset)
    return cyclic_point(PQ, [(PQ.join(a, b), length) for a, b, length in _refine(p.segments, q.segments)])


def unpair_cyclic(r: CyclicPoint) -> tuple[CyclicPoint, CyclicPoint]:
    PQ = r.ppset
    left = cyclic_point(PQ.left, [(PQ.split(v)[0], length) for v, length in r.segments])
    right = cyclic_point(PQ.right, [(PQ.split(v)[1], length) for v, length in r.segments])
    return left, right


# --- JSON -------------------------------------------------------------------------------

def point_to_json(p: CyclicPoint) -> str:
    return json.dumps({
        "ppset": ppset_to_dict(p.ppset),
        "segments": [[v.orbit, list(v.offset), length.numerator, length.denominator]
                     for v, length in p.segments],
    })


def point_from_json(text: str) -> CyclicPoint:
    d = json.loads(text)
    P = ppset_from_dict(d["ppset"])
    segs = tuple((PpsetElement(o, tuple(off)), Fraction(num, den)) for o, off, num, den in d["segments"])
    return CyclicPoint(P, segs)
