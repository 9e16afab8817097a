"""Geometric realization |P| of a finite poset by exact step functions.

A point of |P| is an order preserving map ``I -> P``. We store it as a list of
segments ``(element, length)``: the value is ``element`` on a half-open block
``[a, a + length)`` with blocks laid end to end from 0, the last one closed at 1.
All arithmetic is done in :class:`fractions.Fraction`.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import accumulate
from typing import Iterable

from .errors import (
    InvalidBarycentric,
    InvalidColimPoint,
    InvalidStepPoint,
    NonStandardPoset,
    PosetMismatch,
    SizeMismatch,
    UnsupportedExportDimension,
)
from .poset import Chain, FinitePoset, MonotoneMap, chains, product, projections, standard_poset

ZERO = Fraction(0)
ONE = Fraction(1)


@dataclass(frozen=True)
class BaryPoint:
    """Barycentric coordinates of a point of the standard simplex."""

    coords: tuple[Fraction, ...]

    def __post_init__(self):
        if not self.coords:
            raise InvalidBarycentric("empty coordinate vector")
        if any(c < 0 for c in self.coords):
            raise InvalidBarycentric(f"negative coordinate in {self.coords}")
        if sum(self.coords) != 1:
            raise InvalidBarycentric(f"coordinates sum to {sum(self.coords)}, not 1")

    @property
    def n(self) -> int:
        return len(self.coords) - 1

    def __iter__(self):
        return iter(self.coords)


def bary(*coords) -> BaryPoint:
    return BaryPoint(tuple(Fraction(c) for c in coords))


def unit_vector(n: int, j: int) -> BaryPoint:
    return BaryPoint(tuple(ONE if i == j else ZERO for i in range(n + 1)))


@dataclass(frozen=True)
class StepPoint:
    """A canonical order preserving step function ``I -> poset``."""

    poset: FinitePoset
    segments: tuple[tuple[int, Fraction], ...]

    def __post_init__(self):
        if not self.segments:
            raise InvalidStepPoint("no segments")
        if any(length <= 0 for _, length in self.segments):
            raise InvalidStepPoint("segment lengths must be positive")
        if sum(length for _, length in self.segments) != 1:
            raise InvalidStepPoint("segment lengths must sum to 1")
        vals = [v for v, _ in self.segments]
        for a, b in zip(vals, vals[1:]):
            if not self.poset.lt(a, b):
                raise InvalidStepPoint(f"values {a}, {b} not strictly increasing")

    @property
    def values(self) -> tuple[int, ...]:
        return tuple(v for v, _ in self.segments)

    @property
    def lengths(self) -> tuple[Fraction, ...]:
        return tuple(length for _, length in self.segments)

    def breakpoints(self) -> list[Fraction]:
        """Left endpoints of the segments."""
        return [ZERO] + list(accumulate(self.lengths))[:-1]

    def __call__(self, t) -> int:
        t = Fraction(t)
        if not 0 <= t <= 1:
            raise ValueError("t outside the unit interval")
        acc = ZERO
        for v, length in self.segments:
            acc += length
            if t < acc:
                return v
        return self.segments[-1][0]


def step_point(poset: FinitePoset, segments: Iterable[tuple[int, object]]) -> StepPoint:
    """Build a point from raw segments, dropping empty ones and merging repeats."""
    return StepPoint(poset, _canonical(segments))


def _canonical(segments) -> tuple[tuple[int, Fraction], ...]:
    out: list[list] = []
    for v, length in segments:
        length = Fraction(length)
        if length == 0:
            continue
        if length < 0:
            raise InvalidStepPoint("negative segment length")
        if out and out[-1][0] == v:
            out[-1][1] += length
        else:
            out.append([v, length])
    return tuple((v, length) for v, length in out)


def constant_point(poset: FinitePoset, x: int) -> StepPoint:
    return StepPoint(poset, ((x, ONE),))


def refine(p: StepPoint, q: StepPoint) -> list[tuple[int, int, Fraction]]:
    """Common refinement: blocks ``(p value, q value, length)``."""
    out = []
    i = j = 0
    ri, rj = p.segments[0][1], q.segments[0][1]
    while True:
        step = min(ri, rj)
        out.append((p.segments[i][0], q.segments[j][0], step))
        ri -= step
        rj -= step
        if ri == 0:
            i += 1
            if i == len(p.segments):
                break
            ri = p.segments[i][1]
        if rj == 0:
            j += 1
            rj = q.segments[j][1]
    return out


def metric(f: StepPoint, g: StepPoint) -> Fraction:
    """Measure of the set where ``f`` and ``g`` disagree."""
    if f.poset != g.poset:
        raise PosetMismatch("points live over different posets")
    return sum((length for a, b, length in refine(f, g) if a != b), ZERO)


def to_barycentric(p: StepPoint) -> BaryPoint:
    if not p.poset.is_standard():
        raise NonStandardPoset("barycentric coordinates need a poset [n]")
    coords = [ZERO] * p.poset.size
    for v, length in p.segments:
        coords[v] += length
    return BaryPoint(tuple(coords))


def from_barycentric(b: BaryPoint, n: int | None = None) -> StepPoint:
    """Value ``j`` on ``[t_0+...+t_{j-1}, t_0+...+t_j)``; empty blocks skipped."""
    if not isinstance(b, BaryPoint):
        b = BaryPoint(tuple(Fraction(c) for c in b))
    if n is not None and b.n != n:
        raise InvalidBarycentric(f"expected {n + 1} coordinates, got {len(b.coords)}")
    return StepPoint(standard_poset(b.n), tuple((j, t) for j, t in enumerate(b.coords) if t))


def pushforward_theta(theta: MonotoneMap, b: BaryPoint) -> BaryPoint:
    """θ_*(t)_i = sum of t_j over j in θ⁻¹(i)."""
    if theta.source.size != len(b.coords):
        raise SizeMismatch("θ source size does not match the point")
    s = [ZERO] * theta.target.size
    for j, t in enumerate(b.coords):
        s[theta.values[j]] += t
    return BaryPoint(tuple(s))


def map_point(f: MonotoneMap, p: StepPoint) -> StepPoint:
    """|f|(p) = f ∘ p."""
    if f.source != p.poset:
        raise PosetMismatch("map source differs from the point's poset")
    return step_point(f.target, ((f.values[v], length) for v, length in p.segments))


def product_pair(p: StepPoint, q: StepPoint) -> StepPoint:
    """The point ``t -> (p(t), q(t))`` of |P×Q|."""
    P, Q = p.poset, q.poset
    return step_point(product(P, Q), ((a * Q.size + b, length) for a, b, length in refine(p, q)))


def unpair(r: StepPoint, P: FinitePoset, Q: FinitePoset) -> tuple[StepPoint, StepPoint]:
    left, right = projections(P, Q)
    return map_point(left, r), map_point(right, r)


@dataclass(frozen=True)
class ColimPoint:
    """A non-degenerate simplex of the nerve with an interior point of it."""

    simplex: Chain
    interior: BaryPoint

    def __post_init__(self):
        if len(self.interior.coords) != len(self.simplex):
            raise InvalidColimPoint("interior point has the wrong dimension")
        if any(c <= 0 for c in self.interior.coords):
            raise InvalidColimPoint("interior coordinates must be strictly positive")


def canonical_factor(p: StepPoint) -> ColimPoint:
    return ColimPoint(Chain(p.poset, p.values), BaryPoint(p.lengths))


def realize_colim(c: ColimPoint) -> StepPoint:
    return map_point(c.simplex.inclusion(), from_barycentric(c.interior))


def lipschitz_bound(n: int, b1: BaryPoint, b2: BaryPoint) -> tuple[Fraction, Fraction]:
    """Return ``(d, 2(n+1)^2 * max|t_i - t'_i|)``."""
    if len(b1.coords) != n + 1 or len(b2.coords) != n + 1:
        raise SizeMismatch(f"points must have {n + 1} coordinates")
    eps = max(abs(a - b) for a, b in zip(b1.coords, b2.coords))
    return metric(from_barycentric(b1), from_barycentric(b2)), 2 * (n + 1) ** 2 * eps


def lipschitz_check(n: int, b1: BaryPoint, b2: BaryPoint) -> bool:
    d, bound = lipschitz_bound(n, b1, b2)
    return d <= bound


# --- cell complex --------------------------------------------------------------

@dataclass(frozen=True)
class CellComplex:
    poset: FinitePoset
    cells_by_dim: tuple[tuple[Chain, ...], ...]
    # incidence[k][i] lists indices in cells_by_dim[k-1] of the faces of cell i
    incidence: tuple[tuple[tuple[int, ...], ...], ...]

    @property
    def dim(self) -> int:
        return len(self.cells_by_dim) - 1

    @property
    def f_vector(self) -> tuple[int, ...]:
        return tuple(len(c) for c in self.cells_by_dim)

    @property
    def euler_characteristic(self) -> int:
        return sum((-1) ** k * n for k, n in enumerate(self.f_vector))

    def top_cells(self) -> tuple[Chain, ...]:
        return self.cells_by_dim[-1]

    def to_json(self) -> str:
        return json.dumps({
            "f_vector": list(self.f_vector),
            "cells": {str(k): [list(c.elements) for c in cells]
                      for k, cells in enumerate(self.cells_by_dim)},
        })


def cell_complex(P: FinitePoset) -> CellComplex:
    cells = []
    k = 0
    while True:
        level = chains(P, k)
        if not level:
            break
        cells.append(tuple(level))
        k += 1
    incidence = [tuple(() for _ in cells[0])] if cells else []
    for k in range(1, len(cells)):
        index = {c.elements: i for i, c in enumerate(cells[k - 1])}
        incidence.append(tuple(tuple(index[f.elements] for f in c.faces()) for c in cells[k]))
    return CellComplex(P, tuple(cells), tuple(incidence))


def shared_faces(cx: CellComplex, a: Chain, b: Chain) -> list[Chain]:
    """Codimension-one faces common to two cells."""
    fa = {f.elements for f in a.faces()}
    return [f for f in b.faces() if f.elements in fa]


def grid_coordinates(n: int, m: int) -> list[tuple[Fraction, Fraction]]:
    """Vertex positions ``(i/n, j/m)`` for the poset [n]×[m] (0 when n or m is 0)."""
    def c(i, k):
        return Fraction(i, k) if k else ZERO
    return [(c(i, n), c(j, m)) for i in range(n + 1) for j in range(m + 1)]


def to_off(n: int, m: int) -> str:
    """ASCII OFF of the 2-skeleton of the complex of [n]×[m].

    Vertices sit at ``(i/n, j/m, 0)``; each 2-cell is written as a triangle.
    """
    if n > 2 or m > 2:
        raise UnsupportedExportDimension("OFF export is limited to [n]x[m] with n, m <= 2")
    if n + m > 3:
        raise UnsupportedExportDimension(f"complex of dimension {n + m} > 3 cannot be exported as OFF")
    cx = cell_complex(product(standard_poset(n), standard_poset(m)))
    verts = grid_coordinates(n, m)
    faces = cx.cells_by_dim[2] if cx.dim >= 2 else ()
    edges = len(cx.cells_by_dim[1]) if cx.dim >= 1 else 0
    lines = ["OFF", f"{len(verts)} {len(faces)} {edges}"]
    for x, y in verts:
        lines.append(f"{float(x):g} {float(y):g} 0")
    for f in faces:
        lines.append("3 " + " ".join(str(v) for v in f.elements))
    return "\n".join(lines) + "\n"



def layered_coordinates(P: FinitePoset) -> list[tuple[float, float, float]]:
    """Vertex positions for a general poset: height along x, each level spread on a circle."""
    if P.is_total() and P.size <= 4:
        corners = [(0.0, 0.0, 0.0), (1.0, 0.0, 0.0), (0.0, 1.0, 0.0), (0.0, 0.0, 1.0)]
        return [corners[P.linear_order().index(x)] for x in range(P.size)]
    height = [0] * P.size
    for x in sorted(range(P.size), key=lambda x: len(P.downs[x])):
        height[x] = max((height[y] + 1 for y in P.downs[x] if y != x), default=0)
    levels: dict[int, list[int]] = {}
    for x in range(P.size):
        levels.setdefault(height[x], []).append(x)
    out = [(0.0, 0.0, 0.0)] * P.size
    for h, xs in levels.items():
        for i, x in enumerate(xs):
            a = 2 * math.pi * i / len(xs)
            r = 0.0 if len(xs) == 1 else 1.0
            out[x] = (float(h), round(r * math.cos(a), 6), round(r * math.sin(a), 6))
    return out


def poset_to_off(P: FinitePoset) -> str:
    """ASCII OFF of the 2-skeleton of the complex of ``P`` (dimension at most 3)."""
    cx = cell_complex(P)
    if cx.dim > 3:
        raise UnsupportedExportDimension(f"complex of dimension {cx.dim} > 3 cannot be exported as OFF")
    faces = cx.cells_by_dim[2] if cx.dim >= 2 else ()
    edges = len(cx.cells_by_dim[1]) if cx.dim >= 1 else 0
    lines = ["OFF", f"{P.size} {len(faces)} {edges}"]
    lines += [f"{x:g} {y:g} {z:g}" for x, y, z in layered_coordinates(P)]
    lines += ["3 " + " ".join(str(v) for v in f.elements) for f in faces]
    return "\n".join(lines) + "\n"
