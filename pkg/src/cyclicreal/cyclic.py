"""The cyclic category in two models.

Pair model: a morphism ``[n] -> [m]`` is ``(chi, u)`` with ``chi`` monotone
``[n] -> [m]`` and ``u`` a rotation of ``[n]``; it stands for ``chi ∘ u``.

Periodic model: a morphism ``[[n]] -> [[m]]`` is a class of monotone maps
``f: Z -> Z`` with ``f(x + n + 1) = f(x) + m + 1``, modulo ``f ~ f + (m + 1)``.
It is stored as ``(f(0), ..., f(n))`` for the representative whose least
non-negative preimage point ``x0 = min{x : f(x) >= 0}`` lies in ``[-n, 0]``.

``F`` and ``G`` translate between the models.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .errors import ObjectMismatch, ResidueOutOfRange
from .poset import monotone_value_vectors, standard_poset


def _is_monotone(vals) -> bool:
    return all(a <= b for a, b in zip(vals, vals[1:]))


@dataclass(frozen=True)
class DeltaTildeMor:
    n: int
    m: int
    chi: tuple[int, ...]
    u: int

    def __post_init__(self):
        if len(self.chi) != self.n + 1:
            raise ValueError(f"chi needs {self.n + 1} values")
        if not _is_monotone(self.chi) or any(not 0 <= v <= self.m for v in self.chi):
            raise ValueError(f"chi = {self.chi} is not a monotone map [{self.n}] -> [{self.m}]")
        if not 0 <= self.u <= self.n:
            raise ResidueOutOfRange(f"u = {self.u} outside 0..{self.n}")

    def __str__(self):
        return f"chi=[{','.join(map(str, self.chi))}];u={self.u}"


def delta_identity(n: int) -> DeltaTildeMor:
    return DeltaTildeMor(n, n, tuple(range(n + 1)), 0)


def rotation(n: int, u: int) -> DeltaTildeMor:
    return DeltaTildeMor(n, n, tuple(range(n + 1)), u % (n + 1))


@dataclass(frozen=True)
class NablaTildeMor:
    n: int
    m: int
    values: tuple[int, ...]

    def __post_init__(self):
        v = self.values
        if len(v) != self.n + 1:
            raise ValueError(f"need {self.n + 1} values")
        if not _is_monotone(v) or v[-1] > v[0] + self.m + 1:
            raise ValueError(f"{v} does not extend to an equivariant monotone map")

    def __call__(self, x: int) -> int:
        r, a = divmod(x, self.n + 1)
        return self.values[a] + r * (self.m + 1)

    def __str__(self):
        return f"f=[{','.join(map(str, self.values))}]"


def _first_nonnegative(f: NablaTildeMor) -> int:
    """``min{x : f(x) >= 0}``."""
    # f(x) >= 0 for x = 0 after at most a few period shifts; search outward
    r = -(f.values[0] // (f.m + 1))  # f(r*(n+1)) = f(0) + r*(m+1) >= 0
    x = r * (f.n + 1)
    while f(x - 1) >= 0:
        x -= 1
    while f(x) < 0:
        x += 1
    return x


def nabla(n: int, m: int, values) -> NablaTildeMor:
    """Canonical representative of the class of the given map."""
    f = NablaTildeMor(n, m, tuple(values))
    x0 = _first_nonnegative(f)
    r = -(-x0 // (n + 1))  # ceil(x0 / (n+1)); shifting by r lands x0 in [-n, 0]
    if r:
        f = NablaTildeMor(n, m, tuple(f(x + r * (n + 1)) for x in range(n + 1)))
    return f


def is_canonical(f: NablaTildeMor) -> bool:
    return -f.n <= _first_nonnegative(f) <= 0


def nabla_identity(n: int) -> NablaTildeMor:
    return NablaTildeMor(n, n, tuple(range(n + 1)))


def translation(n: int, k: int) -> NablaTildeMor:
    return nabla(n, n, [x + k for x in range(n + 1)])


# --- pair model -------------------------------------------------------------

def _cyclic_permutation_residue(perm: list[int]) -> int:
    n1 = len(perm)
    c = perm[0] % n1
    assert all(perm[x] == (x + c) % n1 for x in range(n1)), f"{perm} is not a rotation"
    return c


def b_sets(u: int, chi, m: int) -> list[list[int]]:
    """``B_{u(i)} = chi^{-1}(i)``, with ``u(i) = i + u mod m+1``."""
    B = [[] for _ in range(m + 1)]
    for x, v in enumerate(chi):
        B[(v + u) % (m + 1)].append(x)
    return B


def rotation_residue(u: int, chi, m: int) -> int:
    """Residue of the rotation ``chi^* u`` read off as translation by ``-k``,
    ``k`` the least element of the first non-empty ``B_i``."""
    n1 = len(chi)
    k = next(b[0] for b in b_sets(u, chi, m) if b)
    return (-k) % n1


def u_star_chi_and_chi_star_u(u: int, chi, m: int | None = None) -> tuple[tuple[int, ...], int]:
    """Solve ``u ∘ chi = u_* chi ∘ chi^* u`` for a rotation ``u`` of ``[m]``.

    Returns ``(u_* chi, chi^* u)``, the monotone part as a value tuple and the
    rotation of ``[n]`` as a residue.
    """
    chi = tuple(chi)
    if m is None:
        m = max(chi)
    if not 0 <= u <= m:
        raise ResidueOutOfRange(f"u = {u} outside 0..{m}")
    n1 = len(chi)
    new_order = [x for b in b_sets(u, chi, m) for x in b]
    perm = [0] * n1
    for pos, x in enumerate(new_order):
        perm[x] = pos
    c = _cyclic_permutation_residue(perm)
    assert c == rotation_residue(u, chi, m)
    inv = [0] * n1
    for x, p in enumerate(perm):
        inv[p] = x
    u_chi = tuple((chi[inv[y]] + u) % (m + 1) for y in range(n1))
    assert _is_monotone(u_chi), f"u_* chi = {u_chi} not monotone"
    return u_chi, c


def compose_delta_tilde(a: DeltaTildeMor, b: DeltaTildeMor) -> DeltaTildeMor:
    """``(phi, u) ∘ (chi, v) = (phi ∘ u_* chi, chi^* u ∘ v)``."""
    if b.m != a.n:
        raise ObjectMismatch(f"cannot compose [{a.n}]->[{a.m}] after [{b.n}]->[{b.m}]")
    u_chi, c = u_star_chi_and_chi_star_u(a.u, b.chi, b.m)
    phi = tuple(a.chi[y] for y in u_chi)
    return DeltaTildeMor(b.n, a.m, phi, (c + b.u) % (b.n + 1))


# --- the isomorphism ---------------------------------------------------------------

def F(a: DeltaTildeMor) -> NablaTildeMor:
    """``F(chi ∘ u) = F(chi) ∘ F(u)``, with ``F(u)`` translation by ``u``."""
    n1, m1 = a.n + 1, a.m + 1

    def chi_hat(x):
        r, q = divmod(x, n1)
        return a.chi[q] + r * m1

    return nabla(a.n, a.m, [chi_hat(x + a.u) for x in range(n1)])


def G(f: NablaTildeMor) -> DeltaTildeMor:
    """``v = -min f^{-1}{0, 1, ...}``, ``chi(x) = f(x - v)``."""
    f = nabla(f.n, f.m, f.values)
    v = -_first_nonnegative(f)
    chi = tuple(f(x - v) for x in range(f.n + 1))
    return DeltaTildeMor(f.n, f.m, chi, v)


def compose_nabla(g: NablaTildeMor, f: NablaTildeMor) -> NablaTildeMor:
    if f.m != g.n:
        raise ObjectMismatch(f"cannot compose [[{g.n}]]->[[{g.m}]] after [[{f.n}]]->[[{f.m}]]")
    return nabla(f.n, g.m, [g(f(x)) for x in range(f.n + 1)])


# --- Hom sets ---------------------------------------------------------------------

@lru_cache(maxsize=None)
def _delta_homs(n: int, m: int) -> tuple[DeltaTildeMor, ...]:
    return tuple(DeltaTildeMor(n, m, chi, u)
                 for chi in monotone_value_vectors(standard_poset(n), standard_poset(m))
                 for u in range(n + 1))


@lru_cache(maxsize=None)
def _nabla_homs(n: int, m: int) -> tuple[NablaTildeMor, ...]:
    # canonical representatives satisfy 0 <= f(0) <= m and f(n) <= f(0) + m + 1
    out = []

    def extend(vals):
        if len(vals) == n + 1:
            f = NablaTildeMor(n, m, tuple(vals))
            if is_canonical(f):
                out.append(f)
            return
        for v in range(vals[-1], vals[0] + m + 2):
            extend(vals + [v])

    for f0 in range(m + 1):
        extend([f0])
    return tuple(out)


def hom_enumerate(n: int, m: int, model: str = "pair") -> list:
    """All morphisms ``[n] -> [m]``; there are ``C(n+m+1, n+1) * (n+1)``."""
    if model == "pair":
        return list(_delta_homs(n, m))
    if model == "nabla":
        return list(_nabla_homs(n, m))
    raise ValueError(f"unknown model {model!r}")


# --- self-duality -----------------------------------------------------------------

def map_to_point(n: int, i: int):
    """``f_i(x) = floor((x - i)/(n+1))``, the element of Map([[n]], [[0]]) with
    ``min f_i^{-1}(0) = i``."""
    return lambda x: (x - i) // (n + 1)


def map_to_point_index(n: int, fn) -> int:
    """Position of ``fn`` in Map([[n]], [[0]]) ≅ [[n]].

    Maps are ordered pointwise; since ``f_i <= f_j`` iff ``i >= j``, the order
    preserving identification is ``f_i -> -i``.
    """
    i = 0
    while fn(i) > 0:
        i -= 1
    while fn(i) < 0:
        i += 1
    while fn(i - 1) == 0:
        i -= 1
    return -i


def dual(f: NablaTildeMor) -> NablaTildeMor:
    """Precomposition ``h -> h ∘ f`` on Map(-, [[0]]), transported to [[m]] -> [[n]].

    Under ``f_i -> -i``, position ``y`` of [[m]] goes to position
    ``-min{x : f(x) >= -y}`` of [[n]].
    """
    def at(y):
        return map_to_point_index(f.n, lambda x: (f(x) + y) // (f.m + 1))

    return nabla(f.m, f.n, [at(y) for y in range(f.m + 1)])
