"""Finite posets, monotone maps, chains and products.

Elements of a poset are the dense indices ``0..size-1``; labels are optional
and never take part in equality. The order is stored as the up-set of every
element, already closed under reflexivity and transitivity.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field
from functools import cached_property
from typing import Hashable, Iterable, Sequence

from .errors import (
    AntisymmetryViolation,
    NotMonotone,
    NotTotallyOrderedSource,
    SourceTargetMismatch,
)


@dataclass(frozen=True)
class FinitePoset:
    size: int
    ups: tuple[frozenset[int], ...]
    names: tuple[Hashable, ...] | None = field(default=None, compare=False)

    def __post_init__(self):
        if len(self.ups) != self.size:
            raise ValueError("need one up-set per element")
        if self.names is not None and len(self.names) != self.size:
            raise ValueError("need one name per element")

    def leq(self, x: int, y: int) -> bool:
        return y in self.ups[x]

    def lt(self, x: int, y: int) -> bool:
        return x != y and y in self.ups[x]

    def comparable(self, x: int, y: int) -> bool:
        return y in self.ups[x] or x in self.ups[y]

    def label(self, x: int) -> Hashable:
        return x if self.names is None else self.names[x]

    @cached_property
    def relations(self) -> tuple[tuple[int, int], ...]:
        """All related ordered pairs ``(x, y)`` with ``x <= y``, sorted."""
        return tuple(sorted((x, y) for x in range(self.size) for y in self.ups[x]))

    @cached_property
    def downs(self) -> tuple[frozenset[int], ...]:
        down = [set() for _ in range(self.size)]
        for x, y in self.relations:
            down[y].add(x)
        return tuple(frozenset(d) for d in down)

    def is_total(self) -> bool:
        return all(self.comparable(x, y) for x in range(self.size) for y in range(x))

    def is_standard(self) -> bool:
        """True iff this is ``0 < 1 < ... < size-1`` in index order."""
        return all(self.ups[x] == frozenset(range(x, self.size)) for x in range(self.size))

    def linear_order(self) -> list[int]:
        """Elements of a total order listed from bottom to top."""
        if not self.is_total():
            raise NotTotallyOrderedSource("poset is not totally ordered")
        return sorted(range(self.size), key=lambda x: len(self.downs[x]))

    def covers(self) -> list[tuple[int, int]]:
        """The transitive reduction (Hasse diagram edges)."""
        out = []
        for x, y in self.relations:
            if x == y:
                continue
            if not any(self.lt(x, z) and self.lt(z, y) for z in range(self.size)):
                out.append((x, y))
        return out

    def __repr__(self):
        if self.is_standard():
            return f"[{self.size - 1}]"
        return f"FinitePoset(size={self.size}, covers={self.covers()})"


def new_poset(size: int, relations: Iterable[tuple[int, int]] = (), names=None) -> FinitePoset:
    """Build the poset generated by ``relations`` (pairs ``x <= y``).

    Raises AntisymmetryViolation if the closure relates two distinct elements
    both ways.
    """
    if size < 0:
        raise ValueError("size must be non-negative")
    ups = [{x} for x in range(size)]
    for x, y in relations:
        if not (0 <= x < size and 0 <= y < size):
            raise IndexError(f"relation {(x, y)} out of range for size {size}")
        ups[x].add(y)
    # Warshall closure on up-sets
    for k in range(size):
        for x in range(size):
            if k in ups[x]:
                ups[x] |= ups[k]
    for x in range(size):
        for y in ups[x]:
            if y != x and x in ups[y]:
                raise AntisymmetryViolation(f"{x} <= {y} and {y} <= {x}")
    return FinitePoset(size, tuple(frozenset(u) for u in ups),
                       None if names is None else tuple(names))


def standard_poset(n: int) -> FinitePoset:
    """The total order ``[n] = {0 < 1 < ... < n}``."""
    if n < 0:
        raise ValueError("n must be non-negative")
    size = n + 1
    return FinitePoset(size, tuple(frozenset(range(x, size)) for x in range(size)))


def antichain(size: int) -> FinitePoset:
    return new_poset(size)


def product(P: FinitePoset, Q: FinitePoset) -> FinitePoset:
    """Product order; the pair ``(x, y)`` has index ``x * Q.size + y``."""
    ups = []
    for x in range(P.size):
        for y in range(Q.size):
            ups.append(frozenset(a * Q.size + b for a in P.ups[x] for b in Q.ups[y]))
    names = tuple((P.label(x), Q.label(y)) for x in range(P.size) for y in range(Q.size))
    return FinitePoset(P.size * Q.size, tuple(ups), names)


def pair_index(Q: FinitePoset, x: int, y: int) -> int:
    return x * Q.size + y


@dataclass(frozen=True)
class MonotoneMap:
    source: FinitePoset
    target: FinitePoset
    values: tuple[int, ...]

    def __post_init__(self):
        if len(self.values) != self.source.size:
            raise ValueError("need one value per source element")
        if any(not 0 <= v < self.target.size for v in self.values):
            raise IndexError("value outside target")
        for x, y in self.source.relations:
            if not self.target.leq(self.values[x], self.values[y]):
                raise NotMonotone(f"{x} <= {y} but f({x}) !<= f({y})")

    def __call__(self, x: int) -> int:
        return self.values[x]

    def is_injective(self) -> bool:
        return len(set(self.values)) == len(self.values)

    def image(self) -> list[int]:
        return sorted(set(self.values))


def monotone_map(source: FinitePoset, target: FinitePoset, values: Sequence[int]) -> MonotoneMap:
    return MonotoneMap(source, target, tuple(values))


def identity(P: FinitePoset) -> MonotoneMap:
    return MonotoneMap(P, P, tuple(range(P.size)))


def constant(P: FinitePoset, Q: FinitePoset, q: int) -> MonotoneMap:
    return MonotoneMap(P, Q, (q,) * P.size)


def compose(g: MonotoneMap, f: MonotoneMap) -> MonotoneMap:
    """``g ∘ f``."""
    if f.target != g.source:
        raise SourceTargetMismatch(f"cannot compose: target {f.target!r} != source {g.source!r}")
    return MonotoneMap(f.source, g.target, tuple(g.values[v] for v in f.values))


def projections(P: FinitePoset, Q: FinitePoset) -> tuple[MonotoneMap, MonotoneMap]:
    PQ = product(P, Q)
    left = MonotoneMap(PQ, P, tuple(i // Q.size for i in range(PQ.size)))
    right = MonotoneMap(PQ, Q, tuple(i % Q.size for i in range(PQ.size)))
    return left, right


def pairing(f: MonotoneMap, g: MonotoneMap) -> MonotoneMap:
    """The map ``x -> (f(x), g(x))`` into the product of the targets."""
    if f.source != g.source:
        raise SourceTargetMismatch("pairing needs a common source")
    PQ = product(f.target, g.target)
    return MonotoneMap(f.source, PQ, tuple(a * g.target.size + b for a, b in zip(f.values, g.values)))


@dataclass(frozen=True)
class Chain:
    """A strictly increasing sequence of elements of ``poset``."""

    poset: FinitePoset
    elements: tuple[int, ...]

    def __post_init__(self):
        if not self.elements:
            raise ValueError("a chain has at least one element")
        for a, b in zip(self.elements, self.elements[1:]):
            if not self.poset.lt(a, b):
                raise ValueError(f"chain not strictly increasing at {a}, {b}")

    @property
    def dim(self) -> int:
        return len(self.elements) - 1

    def inclusion(self) -> MonotoneMap:
        return MonotoneMap(standard_poset(self.dim), self.poset, self.elements)

    def faces(self) -> list[Chain]:
        if self.dim == 0:
            return []
        return [Chain(self.poset, self.elements[:i] + self.elements[i + 1:])
                for i in range(len(self.elements))]

    def __len__(self):
        return len(self.elements)


def image_factorization(f: MonotoneMap) -> tuple[MonotoneMap, Chain]:
    """Factor ``f`` as a surjection onto ``[k]`` followed by its image chain.

    The source of ``f`` must be totally ordered.
    """
    order = f.source.linear_order()
    chain_elems: list[int] = []
    for x in order:
        v = f.values[x]
        if not chain_elems or chain_elems[-1] != v:
            chain_elems.append(v)
    chain = Chain(f.target, tuple(chain_elems))
    pos = {v: i for i, v in enumerate(chain_elems)}
    surj = MonotoneMap(f.source, standard_poset(len(chain_elems) - 1),
                       tuple(pos[v] for v in f.values))
    return surj, chain


def enumerate_monotone_maps(P: FinitePoset, Q: FinitePoset) -> list[MonotoneMap]:
    """All monotone maps ``P -> Q`` in lexicographic order of value vectors."""
    return [MonotoneMap(P, Q, v) for v in monotone_value_vectors(P, Q)]


def monotone_value_vectors(P: FinitePoset, Q: FinitePoset) -> list[tuple[int, ...]]:
    # constraints between x and earlier elements only; backtracking keeps lex order
    below = [[y for y in range(x) if P.leq(y, x)] for x in range(P.size)]
    above = [[y for y in range(x) if P.leq(x, y)] for x in range(P.size)]
    out: list[tuple[int, ...]] = []
    vals = [0] * P.size

    def extend(x):
        if x == P.size:
            out.append(tuple(vals))
            return
        for v in range(Q.size):
            if all(Q.leq(vals[y], v) for y in below[x]) and all(Q.leq(v, vals[y]) for y in above[x]):
                vals[x] = v
                extend(x + 1)

    extend(0)
    return out


def chains(P: FinitePoset, k: int) -> list[Chain]:
    """All strictly increasing ``(k+1)``-element sequences, lexicographically."""
    if k < 0:
        raise ValueError("k must be non-negative")
    out = []

    def extend(prefix):
        if len(prefix) == k + 1:
            out.append(Chain(P, tuple(prefix)))
            return
        for v in range(P.size):
            if not prefix or P.lt(prefix[-1], v):
                extend(prefix + [v])

    extend([])
    return out


def all_functions(P: FinitePoset, Q: FinitePoset):
    return itertools.product(range(Q.size), repeat=P.size)


# --- JSON --------------------------------------------------------------------

def poset_to_json(P: FinitePoset) -> str:
    labels = [P.label(x) for x in range(P.size)]
    labels = [list(x) if isinstance(x, tuple) else x for x in labels]
    return json.dumps({"elements": labels, "leq": [list(c) for c in P.covers()]})


def poset_from_json(text: str) -> FinitePoset:
    data = json.loads(text)
    elements = data["elements"]
    names = [tuple(e) if isinstance(e, list) else e for e in elements]
    return new_poset(len(elements), [tuple(p) for p in data.get("leq", [])], names)
