"""Seeded random generators for posets, points and ppsets.

Every function takes a :class:`random.Random` so suites are reproducible.
"""

from __future__ import annotations

import random
from fractions import Fraction

from .cyclic_realization import CyclicPoint, CirclePhase, cyclic_point
from .poset import FinitePoset, MonotoneMap, new_poset, standard_poset, monotone_value_vectors
from .ppset import Embedded, Ppset
from .realization import BaryPoint, StepPoint


def random_partition(rng: random.Random, k: int, denom: int = 60) -> list[Fraction]:
    """``k`` positive fractions summing to 1, over a random denominator."""
    D = rng.randint(max(k, 2), max(k, denom))
    cuts = sorted(rng.sample(range(1, D), k - 1)) if k > 1 else []
    bounds = [0] + cuts + [D]
    return [Fraction(b - a, D) for a, b in zip(bounds, bounds[1:])]


def random_bary(rng: random.Random, n: int, denom: int = 60, zero_prob: float = 0.25) -> BaryPoint:
    """A random point of |Δ_n|; some coordinates are zero on purpose."""
    support = [j for j in range(n + 1) if rng.random() >= zero_prob]
    if not support:
        support = [rng.randrange(n + 1)]
    parts = random_partition(rng, len(support), denom)
    coords = [Fraction(0)] * (n + 1)
    for j, t in zip(support, parts):
        coords[j] = t
    return BaryPoint(tuple(coords))


def random_phase(rng: random.Random, denom: int = 60) -> CirclePhase:
    D = rng.randint(1, denom)
    return CirclePhase(Fraction(rng.randrange(D), D))


def random_poset(rng: random.Random, size: int, density: float = 0.4) -> FinitePoset:
    """Random order generated by pairs ``i < j`` of a shuffled labelling."""
    perm = list(range(size))
    rng.shuffle(perm)
    rel = [(perm[i], perm[j]) for i in range(size) for j in range(i + 1, size) if rng.random() < density]
    return new_poset(size, rel)


def random_chain(rng: random.Random, P: FinitePoset, max_len: int | None = None) -> list[int]:
    x = rng.randrange(P.size)
    out = [x]
    while max_len is None or len(out) < max_len:
        above = sorted(y for y in P.ups[x] if y != x)
        if not above or rng.random() < 0.3:
            break
        x = rng.choice(above)
        out.append(x)
    return out


def random_step_point(rng: random.Random, P: FinitePoset, denom: int = 60) -> StepPoint:
    chain = random_chain(rng, P)
    return StepPoint(P, tuple(zip(chain, random_partition(rng, len(chain), denom))))


def random_monotone(rng: random.Random, P: FinitePoset, Q: FinitePoset) -> MonotoneMap:
    return MonotoneMap(P, Q, rng.choice(monotone_value_vectors(P, Q)))


def random_theta(rng: random.Random, n: int, m: int) -> MonotoneMap:
    return random_monotone(rng, standard_poset(n), standard_poset(m))


def random_embedded(rng: random.Random, max_reps: int = 6, max_period: int = 30, negative: bool = False) -> Embedded:
    period = rng.randint(1, max_period)
    k = rng.randint(1, min(max_reps, period))
    reps = tuple(sorted(rng.sample(range(period), k)))
    return Embedded(reps, period, negative)


def random_cyclic_point(rng: random.Random, P: Ppset, denom: int = 60) -> CyclicPoint:
    """A random equivariant step map on one period: a chain from ``v0`` up to at
    most the diagonal shift of ``v0``."""
    v0 = P.rep(rng.randrange(P.orbit_count))
    top = P.diag(v0)
    cands = [x for x in P.window(1) if P.lt(v0, x) and P.leq(x, top)]
    chain = [v0]
    while True:
        nxt = [x for x in cands if P.lt(chain[-1], x)]
        if not nxt or rng.random() < 0.3:
            break
        chain.append(rng.choice(nxt))
    return cyclic_point(P, zip(chain, random_partition(rng, len(chain), denom)))
