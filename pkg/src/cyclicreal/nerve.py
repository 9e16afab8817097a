"""The nerve S(P) of a finite poset.

A nerve is kept intensionally: level ``k`` is the set of monotone maps
``[k] -> P`` and is recomputed (and cached) on demand. Simplices are handled as
plain value tuples ``(v0, ..., vk)`` for speed; :class:`MonotoneMap` objects are
only built at the public boundary.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .errors import LevelMismatch
from .poset import (
    FinitePoset,
    MonotoneMap,
    compose,
    monotone_value_vectors,
    product,
    standard_poset,
)


@lru_cache(maxsize=None)
def _level(P: FinitePoset, k: int) -> tuple[tuple[int, ...], ...]:
    return tuple(monotone_value_vectors(standard_poset(k), P))


@lru_cache(maxsize=None)
def _thetas(j: int, k: int) -> tuple[tuple[int, ...], ...]:
    return _level(standard_poset(k), j)


@dataclass(frozen=True)
class NerveSet:
    base: FinitePoset

    def level(self, k: int) -> tuple[tuple[int, ...], ...]:
        """k-simplices as value vectors, lexicographically ordered."""
        return _level(self.base, k)

    def simplices(self, k: int) -> list[MonotoneMap]:
        dom = standard_poset(k)
        return [MonotoneMap(dom, self.base, v) for v in self.level(k)]

    def nondegenerate(self, k: int) -> list[tuple[int, ...]]:
        return [s for s in self.level(k) if len(set(s)) == len(s)]


def nerve(P: FinitePoset) -> NerveSet:
    return NerveSet(P)


@dataclass(frozen=True)
class SimplicialMapData:
    source: NerveSet
    target: NerveSet
    vertex_map: tuple[int, ...]

    def on_simplex(self, s: tuple[int, ...]) -> tuple[int, ...]:
        return tuple(self.vertex_map[v] for v in s)

    def vertex_monotone_map(self) -> MonotoneMap:
        return MonotoneMap(self.source.base, self.target.base, self.vertex_map)


def apply_simplicial_map(F: SimplicialMapData, sigma: MonotoneMap) -> MonotoneMap:
    if sigma.target != F.source.base or not sigma.source.is_standard():
        raise LevelMismatch("simplex does not belong to the source nerve")
    return compose(F.vertex_monotone_map(), sigma)


def induced_map(f: MonotoneMap) -> SimplicialMapData:
    """S(f): the simplicial map with vertex function ``f``."""
    return SimplicialMapData(NerveSet(f.source), NerveSet(f.target), f.values)


def restrict_to_vertices(F: SimplicialMapData) -> MonotoneMap:
    """Recover the poset map from the action of ``F`` on 0-simplices."""
    vals = tuple(F.on_simplex((x,))[0] for x in range(F.source.base.size))
    return MonotoneMap(F.source.base, F.target.base, vals)


def default_check_level(N1: NerveSet, N2: NerveSet) -> int:
    return max(3, N1.base.size, N2.base.size)


@lru_cache(maxsize=None)
def _index(P: FinitePoset, k: int) -> dict:
    return {s: i for i, s in enumerate(_level(P, k))}


@lru_cache(maxsize=None)
def _operator_table(P: FinitePoset, j: int, k: int) -> np.ndarray:
    """Row ``r``, column ``c``: index in level j of ``σ_c ∘ θ_r`` for θ_r: [j] -> [k]."""
    idx = _index(P, j)
    thetas = _thetas(j, k)
    table = np.empty((len(thetas), len(_level(P, k))), dtype=np.int64)
    for r, th in enumerate(thetas):
        for c, s in enumerate(_level(P, k)):
            table[r, c] = idx[tuple(s[i] for i in th)]
    return table


def levelwise(F: SimplicialMapData, check_level: int) -> list[np.ndarray]:
    """The family ``F_k: S(P)_k -> S(Q)_k`` as index arrays, k <= check_level."""
    P, Q = F.source.base, F.target.base
    out = []
    for k in range(check_level + 1):
        idx = _index(Q, k)
        out.append(np.array([idx[F.on_simplex(s)] for s in _level(P, k)], dtype=np.int64))
    return out


def check_naturality(F: SimplicialMapData, check_level: int) -> bool:
    """F(σ∘θ) = F(σ)∘θ for every σ of level ≤ check_level and every θ:[j]→[k].

    False as well when some simplex is not sent to a simplex of the target.
    """
    P, Q = F.source.base, F.target.base
    try:
        fam = levelwise(F, check_level)
    except KeyError:
        return False
    for k in range(check_level + 1):
        for j in range(check_level + 1):
            lhs = fam[j][_operator_table(P, j, k)]
            rhs = _operator_table(Q, j, k)[:, fam[k]]
            if not np.array_equal(lhs, rhs):
                return False
    return True


def enumerate_simplicial_maps(N1: NerveSet, N2: NerveSet, check_level: int | None = None) -> list[SimplicialMapData]:
    """All simplicial maps S(P) -> S(Q).

    Every vertex function is tried; it is kept iff it carries each 1-simplex of
    the source to a 1-simplex of the target. Naturality up to ``check_level``
    is then asserted for each survivor.
    """
    if check_level is None:
        check_level = default_check_level(N1, N2)
    if check_level < 1:
        raise ValueError("check_level must be at least 1")
    P, Q = N1.base, N2.base
    edges = N1.level(1)
    out = []
    for vals in itertools.product(range(Q.size), repeat=P.size):
        if all(Q.leq(vals[a], vals[b]) for a, b in edges):
            F = SimplicialMapData(N1, N2, vals)
            assert check_naturality(F, check_level)
            out.append(F)
    return out


@dataclass(frozen=True)
class ProductLevelWitness:
    """Level-k bijection S(P×Q)_k ↔ S(P)_k × S(Q)_k, both directions as dicts."""

    k: int
    forward: dict
    backward: dict


def nerve_product_level(P: FinitePoset, Q: FinitePoset, k: int) -> ProductLevelWitness:
    PQ = product(P, Q)
    fwd = {}
    for s in _level(PQ, k):
        fwd[s] = (tuple(i // Q.size for i in s), tuple(i % Q.size for i in s))
    back = {}
    for a in _level(P, k):
        for b in _level(Q, k):
            back[(a, b)] = tuple(x * Q.size + y for x, y in zip(a, b))
    # mutually inverse, hence a bijection
    assert all(back[fwd[s]] == s for s in fwd)
    assert all(fwd[back[ab]] == ab for ab in back)
    return ProductLevelWitness(k, fwd, back)


def level_json(N: NerveSet, k: int) -> dict:
    return {"level": k, "simplices": [list(s) for s in N.level(k)]}
