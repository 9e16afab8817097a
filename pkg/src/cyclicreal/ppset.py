"""Periodic partially ordered sets: posets with an order preserving Z^k action.

Only compact ppsets are modelled. An element is named by its orbit index and an
offset vector in Z^k; generator ``T_i`` adds the i-th unit vector to the offset.
Universally quantified properties of the (infinite) carriers are checked on a
window of offsets ``[-W, W]^k``.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from functools import cmp_to_key
from typing import Callable, NamedTuple, Sequence

from .errors import (
    DegreeError,
    NotArchimedean,
    NotOrderPreserving,
    NotPositiveArchimedean,
    SourceNotDegreeOne,
    WrongDegree,
)

DEFAULT_WINDOW = 2


class PpsetElement(NamedTuple):
    orbit: int
    offset: tuple[int, ...]


class Ppset:
    """Common interface; concrete variants are the frozen dataclasses below."""

    degree: int
    orbit_count: int

    def leq(self, x: PpsetElement, y: PpsetElement) -> bool:
        raise NotImplementedError

    def lt(self, x, y) -> bool:
        return x != y and self.leq(x, y)

    def comparable(self, x, y) -> bool:
        return self.leq(x, y) or self.leq(y, x)

    def rep(self, orbit: int) -> PpsetElement:
        return PpsetElement(orbit, (0,) * self.degree)

    def orbit_reps(self) -> list[PpsetElement]:
        return [self.rep(o) for o in range(self.orbit_count)]

    def shift(self, x: PpsetElement, vec: Sequence[int]) -> PpsetElement:
        return PpsetElement(x.orbit, tuple(a + b for a, b in zip(x.offset, vec)))

    def diag(self, x: PpsetElement, times: int = 1) -> PpsetElement:
        """Apply the diagonal shift ``(1, ..., 1)`` the given number of times."""
        return PpsetElement(x.orbit, tuple(a + times for a in x.offset))

    def window(self, W: int = DEFAULT_WINDOW) -> list[PpsetElement]:
        offs = itertools.product(range(-W, W + 1), repeat=self.degree)
        return [PpsetElement(o, off) for off in offs for o in range(self.orbit_count)]

    def sort(self, xs):
        """Sort comparable elements in increasing order."""
        return sorted(xs, key=cmp_to_key(lambda a, b: 0 if a == b else (-1 if self.leq(a, b) else 1)))


@dataclass(frozen=True)
class Standard(Ppset):
    """[[n]]: the integers with ``T_1`` translation by ``n + 1``."""

    n: int

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("n must be non-negative")

    degree = 1

    @property
    def orbit_count(self):
        return self.n + 1

    def to_int(self, x: PpsetElement) -> int:
        return x.orbit + (self.n + 1) * x.offset[0]

    def from_int(self, z: int) -> PpsetElement:
        q, r = divmod(z, self.n + 1)
        return PpsetElement(r, (q,))

    def leq(self, x, y):
        return self.to_int(x) <= self.to_int(y)

    def __repr__(self):
        return f"[[{self.n}]]"


@dataclass(frozen=True)
class Embedded(Ppset):
    """The sub-ppset ``reps + period*Z`` of Z, with ``T_1`` adding ``period``.

    With ``negative`` set, the order is the reverse of the order on Z, which
    makes the shift move every element down.
    """

    reps: tuple[int, ...]
    period: int
    negative: bool = False

    degree = 1

    def __post_init__(self):
        if not self.reps:
            raise ValueError("need at least one representative")
        if any(b <= a for a, b in zip(self.reps, self.reps[1:])):
            raise ValueError("representatives must be strictly increasing")
        if self.reps[0] < 0 or self.reps[-1] >= self.period:
            raise ValueError("representatives must lie in [0, period)")

    @property
    def orbit_count(self):
        return len(self.reps)

    def to_int(self, x: PpsetElement) -> int:
        return self.reps[x.orbit] + self.period * x.offset[0]

    def from_int(self, z: int) -> PpsetElement:
        q, r = divmod(z, self.period)
        return PpsetElement(self.reps.index(r), (q,))

    def leq(self, x, y):
        a, b = self.to_int(x), self.to_int(y)
        return a >= b if self.negative else a <= b

    def __repr__(self):
        tag = " negative" if self.negative else ""
        return f"embedded {','.join(map(str, self.reps))}@{self.period}{tag}"


@dataclass(frozen=True)
class Product(Ppset):
    """Product poset with the product action; orbit ``(a, b)`` has index ``a*r_right + b``."""

    left: Ppset
    right: Ppset

    @property
    def degree(self):
        return self.left.degree + self.right.degree

    @property
    def orbit_count(self):
        return self.left.orbit_count * self.right.orbit_count

    def split(self, x: PpsetElement) -> tuple[PpsetElement, PpsetElement]:
        a, b = divmod(x.orbit, self.right.orbit_count)
        k = self.left.degree
        return PpsetElement(a, x.offset[:k]), PpsetElement(b, x.offset[k:])

    def join(self, a: PpsetElement, b: PpsetElement) -> PpsetElement:
        return PpsetElement(a.orbit * self.right.orbit_count + b.orbit, a.offset + b.offset)

    def leq(self, x, y):
        (xa, xb), (ya, yb) = self.split(x), self.split(y)
        return self.left.leq(xa, ya) and self.right.leq(xb, yb)

    def __repr__(self):
        return f"({self.left!r} x {self.right!r})"


@dataclass(frozen=True)
class SubPpset(Ppset):
    """The union of the given parent orbits, with the induced order and action."""

    parent: Ppset
    orbits: tuple[int, ...]

    @property
    def degree(self):
        return self.parent.degree

    @property
    def orbit_count(self):
        return len(self.orbits)

    def lift(self, x: PpsetElement) -> PpsetElement:
        return PpsetElement(self.orbits[x.orbit], x.offset)

    def restrict(self, x: PpsetElement) -> PpsetElement:
        return PpsetElement(self.orbits.index(x.orbit), x.offset)

    def leq(self, x, y):
        return self.parent.leq(self.lift(x), self.lift(y))


def standard(n: int) -> Standard:
    return Standard(n)


def embedded(reps: Sequence[int], period: int, negative: bool = False) -> Embedded:
    return Embedded(tuple(reps), period, negative)


def product_ppset(P: Ppset, Q: Ppset) -> Product:
    return Product(P, Q)


# --- predicates ----------------------------------------------------------------

def is_total_on_window(P: Ppset, W: int = DEFAULT_WINDOW) -> bool:
    win = P.window(W)
    return all(P.comparable(x, y) for i, x in enumerate(win) for y in win[:i])


def is_archimedean(P: Ppset, W: int = DEFAULT_WINDOW) -> bool:
    """Totally ordered, and every element is overtaken by some shift of any other.

    Both conditions are checked on the offset window ``[-W, W]``.
    """
    if P.degree != 1:
        raise WrongDegree(f"archimedean needs degree 1, got {P.degree}")
    if not is_total_on_window(P, W):
        return False
    reps = P.orbit_reps()
    for x in reps:
        for y in reps:
            if not any(P.lt(y, P.diag(x, k)) for k in range(-W, W + 1)):
                return False
    return True


def positivity_by_orbit(P: Ppset) -> list[bool]:
    """``T_1(x) > x`` evaluated at every orbit representative."""
    return [P.lt(x, P.diag(x)) for x in P.orbit_reps()]


def is_positive(P: Ppset) -> bool:
    if P.degree != 1 or not is_archimedean(P):
        raise NotArchimedean(f"{P!r} is not archimedean")
    signs = positivity_by_orbit(P)
    assert len(set(signs)) == 1, f"positivity differs between orbits: {signs}"
    return signs[0]


# --- maps and morphisms ----------------------------------------------------------

@dataclass(frozen=True)
class PpsetMap:
    """An equivariant map out of a degree-1 ppset, given on orbit representatives.

    The value at ``T^r(rep_o)`` is the diagonal shift ``(1,...,1)^r`` of
    ``rep_values[o]``.
    """

    source: Ppset
    target: Ppset
    rep_values: tuple[PpsetElement, ...]

    def __post_init__(self):
        if self.source.degree != 1:
            raise SourceNotDegreeOne("maps are given by representatives only for degree-1 sources")
        if len(self.rep_values) != self.source.orbit_count:
            raise ValueError("need one value per source orbit")

    def __call__(self, x: PpsetElement) -> PpsetElement:
        return self.target.diag(self.rep_values[x.orbit], x.offset[0])


@dataclass(frozen=True)
class Projection:
    """A projection of a product ppset onto one factor."""

    source: Product
    side: int  # 0 = left, 1 = right

    @property
    def target(self) -> Ppset:
        return self.source.left if self.side == 0 else self.source.right

    def __call__(self, x):
        return self.source.split(x)[self.side]


def projections(P: Product) -> tuple[Projection, Projection]:
    return Projection(P, 0), Projection(P, 1)


def is_monotone_on_window(fn: Callable, source: Ppset, target: Ppset, W: int = DEFAULT_WINDOW) -> bool:
    win = source.window(W)
    for x in win:
        fx = fn(x)
        for y in win:
            if source.leq(x, y) and not target.leq(fx, fn(y)):
                return False
    return True


def is_equivariant_on_window(fn: Callable, source: Ppset, target: Ppset, W: int = DEFAULT_WINDOW) -> bool:
    return all(fn(source.diag(x)) == target.diag(fn(x)) for x in source.window(W))


def ppset_map(source: Ppset, target: Ppset, rep_values: Sequence[PpsetElement], W: int = DEFAULT_WINDOW) -> PpsetMap:
    f = PpsetMap(source, target, tuple(PpsetElement(v[0], tuple(v[1])) for v in rep_values))
    if not is_monotone_on_window(f, source, target, W):
        raise NotOrderPreserving(f"map with values {rep_values} is not order preserving")
    return f


def identity_map(P: Ppset) -> PpsetMap:
    return PpsetMap(P, P, tuple(P.orbit_reps()))


def compose_maps(g, f: PpsetMap) -> PpsetMap:
    """``g ∘ f`` where ``g`` is any equivariant callable with a ``target``."""
    return PpsetMap(f.source, g.target, tuple(g(v) for v in f.rep_values))


def post_shift(f: PpsetMap, vec: Sequence[int]) -> PpsetMap:
    return PpsetMap(f.source, f.target, tuple(f.target.shift(v, vec) for v in f.rep_values))


def pre_shift(f: PpsetMap, r: int) -> PpsetMap:
    """``f ∘ T^r``."""
    return PpsetMap(f.source, f.target, tuple(f(f.source.diag(x, r)) for x in f.source.orbit_reps()))


@dataclass(frozen=True)
class PpsetMorphism:
    """A class of maps modulo shifts, stored through its canonical representative.

    For a degree-1 source the class is determined by post-shifts alone; the
    canonical representative sends orbit representative 0 to offset zero.
    """

    representative: PpsetMap

    @classmethod
    def of(cls, f: PpsetMap) -> PpsetMorphism:
        off = f.rep_values[0].offset
        return cls(post_shift(f, [-a for a in off]))

    @property
    def source(self):
        return self.representative.source

    @property
    def target(self):
        return self.representative.target


def morphisms_equal(f, g) -> bool:
    """True iff some post-shift of ``g``'s representative equals ``f``'s."""
    f = f.representative if isinstance(f, PpsetMorphism) else f
    g = g.representative if isinstance(g, PpsetMorphism) else g
    if f.source != g.source or f.target != g.target:
        return False
    if f.source.degree != 1:
        raise SourceNotDegreeOne("morphism equality is implemented for degree-1 sources")
    vec = [a - b for a, b in zip(f.rep_values[0].offset, g.rep_values[0].offset)]
    return post_shift(g, vec).rep_values == f.rep_values


def module_compose(g: PpsetMorphism, f: PpsetMorphism) -> PpsetMorphism:
    """Compose ``R -> P`` (in PP_1) with ``P -> Q`` (Q of any degree)."""
    if f.source.degree != 1 or g.source.degree != 1:
        raise DegreeError("composition needs degree-1 source and middle object")
    if f.target != g.source:
        raise DegreeError("morphisms are not composable")
    return PpsetMorphism.of(compose_maps(g.representative, f.representative))


def pair_morphisms(f: PpsetMorphism, g: PpsetMorphism) -> PpsetMorphism:
    """The morphism ``R -> P×Q`` corresponding to ``(f, g)``."""
    PQ = Product(f.target, g.target)
    vals = tuple(PQ.join(a, b) for a, b in zip(f.representative.rep_values, g.representative.rep_values))
    return PpsetMorphism.of(PpsetMap(f.source, PQ, vals))


def unpair_morphism(h: PpsetMorphism) -> tuple[PpsetMorphism, PpsetMorphism]:
    left, right = projections(h.target)
    return (PpsetMorphism.of(compose_maps(left, h.representative)),
            PpsetMorphism.of(compose_maps(right, h.representative)))


# --- normal form of positive archimedean ppsets ------------------------------------

class NormalForm(NamedTuple):
    n: int
    f: PpsetMap  # [[n]] -> P
    g: PpsetMap  # P -> [[n]]
    section: tuple[PpsetElement, ...]  # s(orbit)
    t: tuple[PpsetElement, ...]  # t(i), increasing


def archimedean_normal_form(P: Ppset) -> NormalForm:
    """Identify a positive archimedean compact ppset with [[n]], n + 1 = #orbits.

    Base point is the representative of orbit 0. For each orbit the section
    picks the least element of that orbit lying above the base point; sorting
    the section gives ``t: [n] -> P`` and

        f(i) = T^{i // (n+1)} t(i mod (n+1)),
        g(x) = t^{-1}(s(orbit x)) + (n+1) * m(x),  T^{m(x)} s(orbit x) = x.
    """
    try:
        positive = is_positive(P)
    except (NotArchimedean, WrongDegree) as exc:
        raise NotPositiveArchimedean(str(exc)) from exc
    if not positive:
        raise NotPositiveArchimedean(f"{P!r} is negative")
    base = P.rep(0)
    section = []
    lift = []  # lift[o] = j with s(o) = T^j rep(o)
    for o in range(P.orbit_count):
        x, j = P.rep(o), 0
        if P.leq(base, x):
            while P.leq(base, P.diag(x, j - 1)):
                j -= 1
        else:
            while not P.leq(base, P.diag(x, j)):
                j += 1
        section.append(P.diag(x, j))
        lift.append(j)
    t = tuple(P.sort(section))
    assert t[0] == base
    n = len(t) - 1
    source = Standard(n)
    f = PpsetMap(source, P, t)
    t_inv = {x: i for i, x in enumerate(t)}
    g_vals = tuple(source.from_int(t_inv[section[o]] + (n + 1) * (-lift[o])) for o in range(P.orbit_count))
    g = PpsetMap(P, source, g_vals)
    return NormalForm(n, f, g, tuple(section), t)


def normal_form_f_value(nf: NormalForm, P: Ppset, i: int) -> PpsetElement:
    """Evaluate ``f(i) = T^{n1(i)} t(n2(i))`` straight from the formula."""
    n1 = i // (nf.n + 1)
    n2 = i - (nf.n + 1) * n1
    return P.diag(nf.t[n2], n1)


# --- JSON ----------------------------------------------------------------------

def ppset_to_dict(P: Ppset) -> dict:
    if isinstance(P, Standard):
        return {"type": "standard", "n": P.n}
    if isinstance(P, Embedded):
        d = {"type": "embedded", "reps": list(P.reps), "period": P.period}
        if P.negative:
            d["negative"] = True
        return d
    if isinstance(P, Product):
        return {"type": "product", "left": ppset_to_dict(P.left), "right": ppset_to_dict(P.right)}
    raise TypeError(f"no JSON form for {type(P).__name__}")


def ppset_from_dict(d: dict) -> Ppset:
    kind = d["type"]
    if kind == "standard":
        return Standard(int(d["n"]))
    if kind == "embedded":
        return Embedded(tuple(d["reps"]), int(d["period"]), bool(d.get("negative", False)))
    if kind == "product":
        return Product(ppset_from_dict(d["left"]), ppset_from_dict(d["right"]))
    raise ValueError(f"unknown ppset type {kind!r}")


def ppset_to_json(P: Ppset) -> str:
    return json.dumps(ppset_to_dict(P))


def ppset_from_json(text: str) -> Ppset:
    return ppset_from_dict(json.loads(text))
