"""Normalized cochains of finite abelian groups with trivial-action coefficients.

Coefficients live in a finite abelian group ``M`` written additively, so the
multiplicative identities of the categorical data (``b(gh,k) b(g,h) =
b(g,hk) b(h,k)`` and friends) become alternating sums here.  k^x-valued
cochains use ``M = Z/L`` standing for the roots of unity mu_L.

Coboundary problems are linear systems over Z/m; they are solved through the
Smith normal form of the bar differential restricted to normalized cells.  A
brute-force search is kept alongside as an oracle for tiny cases.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from functools import lru_cache
from math import gcd, prod
from typing import Callable, Mapping

import numpy as np

from .abgroup import AbGroup, Elem, GroupError
from .intlinalg import (
    LocalSmith,
    factor_prime_powers,
    local_smith,
    matvec,
    smith_normal_form,
    solve_mod_fast,
)

EXHAUSTIVE_BOUND = 10**7


class CochainError(ValueError):
    pass


def mu(order: int) -> AbGroup:
    """The root-of-unity group mu_L as Z/L (L = 1 gives the trivial group)."""
    return AbGroup((order,) if order > 1 else ())


def _cells(G: AbGroup, n: int) -> list[tuple[Elem, ...]]:
    return list(itertools.product(G.elements(), repeat=n))


@lru_cache(maxsize=None)
def normalized_cells(G: AbGroup, n: int) -> tuple[tuple[Elem, ...], ...]:
    e = G.identity
    nontriv = [g for g in G.elements() if g != e]
    return tuple(itertools.product(nontriv, repeat=n))


@dataclass(frozen=True, eq=False)
class Cochain:
    """A normalized n-cochain G^n -> M, stored as a total table."""
    degree: int
    source: AbGroup
    coeff: AbGroup
    table: Mapping[tuple[Elem, ...], Elem]

    def __post_init__(self):
        e = self.source.identity
        zero = self.coeff.identity
        full = {}
        for args in _cells(self.source, self.degree):
            v = self.table.get(args, zero)
            self.coeff.check(v)
            if e in args and v != zero:
                raise CochainError(f"cochain is not normalized: value {v} at {args}")
            full[args] = v
        extra = set(self.table) - set(full)
        if extra:
            raise CochainError(f"arguments outside {self.source}^{self.degree}: {sorted(extra)[:3]}")
        object.__setattr__(self, "table", full)

    @classmethod
    def from_function(cls, degree: int, source: AbGroup, coeff: AbGroup,
                      fn: Callable[..., Elem]) -> Cochain:
        e = source.identity
        table = {}
        for args in _cells(source, degree):
            table[args] = coeff.identity if e in args else fn(*args)
        return cls(degree, source, coeff, table)

    @classmethod
    def identity(cls, degree: int, source: AbGroup, coeff: AbGroup) -> Cochain:
        return cls(degree, source, coeff, {})

    def __call__(self, *args: Elem) -> Elem:
        return self.table[args]

    def _same_shape(self, other: Cochain) -> None:
        if (self.degree, self.source, self.coeff) != (other.degree, other.source, other.coeff):
            raise CochainError("cochains of different shape")

    def __add__(self, other: Cochain) -> Cochain:
        self._same_shape(other)
        M = self.coeff
        return Cochain(self.degree, self.source, M,
                       {k: M.add(v, other.table[k]) for k, v in self.table.items()})

    def __neg__(self) -> Cochain:
        M = self.coeff
        return Cochain(self.degree, self.source, M, {k: M.neg(v) for k, v in self.table.items()})

    def __sub__(self, other: Cochain) -> Cochain:
        return self + (-other)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Cochain):
            return NotImplemented
        return (self.degree, self.source, self.coeff) == (other.degree, other.source, other.coeff) \
            and self.table == other.table

    def __hash__(self):
        return hash((self.degree, self.source, tuple(sorted(self.table.items()))))

    def is_identity(self) -> bool:
        z = self.coeff.identity
        return all(v == z for v in self.table.values())

    def map_values(self, coeff: AbGroup, fn: Callable[[Elem], Elem]) -> Cochain:
        return Cochain(self.degree, self.source, coeff, {k: fn(v) for k, v in self.table.items()})

    # -- linear-algebra views -----------------------------------------------

    def component_vector(self, j: int) -> list[int]:
        """Values of the j-th coefficient coordinate on normalized cells."""
        return [self.table[c][j] for c in normalized_cells(self.source, self.degree)]

    @classmethod
    def from_component_vectors(cls, degree: int, source: AbGroup, coeff: AbGroup,
                               vectors: list[list[int]]) -> Cochain:
        cells = normalized_cells(source, degree)
        table = {}
        for idx, c in enumerate(cells):
            table[c] = tuple(vec[idx] % n for vec, n in zip(vectors, coeff.invariant_factors))
        return cls(degree, source, coeff, table)


# -- differential ---------------------------------------------------------------


def differential(c: Cochain) -> Cochain:
    """Bar differential with trivial action.

    (dc)(g_1..g_{n+1}) = c(g_2..) + sum_i (-1)^i c(.., g_i g_{i+1}, ..) + (-1)^{n+1} c(g_1..g_n)
    """
    G, M, n = c.source, c.coeff, c.degree
    table = {}
    e = G.identity
    for args in _cells(G, n + 1):
        if e in args:
            continue
        acc = M.identity
        acc = M.add(acc, c.table[args[1:]])
        for i in range(n):
            merged = args[:i] + (G.add(args[i], args[i + 1]),) + args[i + 2:]
            v = c.table[merged]
            acc = M.add(acc, v if i % 2 else M.neg(v))
        last = c.table[args[:n]]
        acc = M.add(acc, last if n % 2 else M.neg(last))
        table[args] = acc
    return Cochain(n + 1, G, M, table)


def is_cocycle(c: Cochain) -> bool:
    return differential(c).is_identity()


@lru_cache(maxsize=None)
def differential_matrix(G: AbGroup, n: int) -> tuple[tuple[int, ...], ...]:
    """Integer matrix of d: C^n -> C^{n+1} on normalized cells (rows = (n+1)-cells)."""
    e = G.identity
    src = normalized_cells(G, n)
    col = {c: i for i, c in enumerate(src)}
    rows = []
    for args in normalized_cells(G, n + 1):
        row = [0] * len(src)

        def bump(cell, sign):
            if e not in cell:
                row[col[cell]] += sign

        bump(args[1:], 1)
        for i in range(n):
            bump(args[:i] + (G.add(args[i], args[i + 1]),) + args[i + 2:], -1 if i % 2 == 0 else 1)
        bump(args[:n], 1 if n % 2 else -1)
        rows.append(tuple(row))
    return tuple(rows)


# -- coboundaries ---------------------------------------------------------------


def is_coboundary(c: Cochain, method: str = "snf") -> Cochain | None:
    """A primitive p with d(p) = c, or None.

    ``method="exhaustive"`` searches all normalized (n-1)-cochains and refuses
    when the search space exceeds ``EXHAUSTIVE_BOUND``.
    """
    if c.degree < 1:
        raise CochainError("degree-0 cochains have no primitive")
    if not is_cocycle(c):
        raise CochainError("is_coboundary expects a cocycle")
    if method == "exhaustive":
        return _coboundary_exhaustive(c)
    if method != "snf":
        raise ValueError(f"unknown method {method!r}")
    G, M, n = c.source, c.coeff, c.degree
    mat = differential_matrix(G, n - 1)
    vectors = []
    for j, m in enumerate(M.invariant_factors):
        sol = solve_mod_fast(mat, c.component_vector(j), m)
        if sol is None:
            return None
        vectors.append(sol)
    if not M.invariant_factors:
        vectors = []
    p = Cochain.from_component_vectors(n - 1, G, M, vectors)
    if differential(p) != c:
        raise ArithmeticError("Smith-form primitive failed verification")
    return p


def _coboundary_exhaustive(c: Cochain) -> Cochain | None:
    G, M, n = c.source, c.coeff, c.degree
    cells = normalized_cells(G, n - 1)
    space = M.order ** len(cells)
    if space > EXHAUSTIVE_BOUND:
        raise CochainError(
            f"exhaustive search over {space} cochains exceeds {EXHAUSTIVE_BOUND}; "
            "use the Smith-form path or a smaller instance"
        )
    for values in itertools.product(M.elements(), repeat=len(cells)):
        p = Cochain(n - 1, G, M, dict(zip(cells, values)))
        if differential(p) == c:
            return p
    return None


def same_class(c1: Cochain, c2: Cochain, method: str = "snf") -> bool:
    c1._same_shape(c2)
    return is_coboundary(c1 - c2, method=method) is not None


# -- cohomology groups ------------------------------------------------------------


@dataclass(frozen=True)
class CohomologyGroup:
    """H^n(G, M) as elementary divisors plus cocycle representatives of generators."""
    degree: int
    source: AbGroup
    coeff: AbGroup
    divisors: tuple[int, ...]
    generators: tuple[Cochain, ...]

    @property
    def order(self) -> int:
        return prod(self.divisors)

    def representatives(self) -> list[Cochain]:
        """One cocycle per class (the group has ``order`` elements)."""
        reps = []
        for ks in itertools.product(*(range(d) for d in self.divisors)):
            acc = Cochain.identity(self.degree, self.source, self.coeff)
            for k, g in zip(ks, self.generators):
                for _ in range(k):
                    acc = acc + g
            reps.append(acc)
        return reps


@lru_cache(maxsize=None)
def _local_differential(G: AbGroup, n: int, p: int, k: int) -> LocalSmith:
    return local_smith(differential_matrix(G, n), p, k)


def _local_cohomology(G: AbGroup, n: int, p: int, k: int) -> tuple[list[int], list[list[int]]]:
    """Elementary divisors and generator vectors (on normalized n-cells) of H^n(G, Z/p^k)."""
    q = p**k
    cells_n = normalized_cells(G, n)
    if not cells_n:
        return [], []
    ls = _local_differential(G, n, p, k)
    # cocycles in y = Vinv x coordinates: y_i in p^(k - v_i) Z/q, of order p^v_i
    active = [i for i, v in enumerate(ls.valuations) if v > 0]
    if not active:
        return [], []
    t = {i: p ** (k - ls.valuations[i]) for i in active}
    rel_cols = []
    d1 = differential_matrix(G, n - 1)
    if d1 and d1[0]:
        ys = (ls.Vinv @ (np.array(d1, dtype=np.int64) % q)) % q
        for j in range(ys.shape[1]):
            col = []
            for i in active:
                yi = int(ys[i, j])
                if yi % t[i]:
                    raise ArithmeticError("coboundary outside the cocycle lattice")
                col.append(yi // t[i])
            rel_cols.append(col)
    for r, i in enumerate(active):
        col = [0] * len(active)
        col[r] = p ** ls.valuations[i]
        rel_cols.append(col)
    rel = [[col[r] for col in rel_cols] for r in range(len(active))]
    snf = smith_normal_form(rel, len(rel_cols))
    diag = snf.diagonal
    factors, gens = [], []
    for j in range(len(active)):
        d = diag[j] if j < len(diag) else 0
        if d == 1:
            continue
        if d == 0:
            raise ArithmeticError("cohomology of a finite group came out infinite")
        y = [0] * len(cells_n)
        for r, i in enumerate(active):
            y[i] = snf.Uinv[r][j] * t[i]
        x = [int(v) % q for v in matvec(ls.V.tolist(), y)]
        factors.append(d)
        gens.append(x)
    return factors, gens


def cohomology_group(G: AbGroup, M: AbGroup, n: int) -> CohomologyGroup:
    """H^n(G, M) for trivial action, computed on the normalized cochain complex."""
    factors: list[int] = []
    gens: list[Cochain] = []
    for j, m in enumerate(M.invariant_factors):
        for p, k in factor_prime_powers(m):
            fs, vecs = _local_cohomology(G, n, p, k)
            scale = m // p**k  # Z/p^k embeds in Z/m
            for f, vec in zip(fs, vecs):
                vectors = [[0] * len(vec) for _ in M.invariant_factors]
                vectors[j] = [scale * v % m for v in vec]
                g = Cochain.from_component_vectors(n, G, M, vectors)
                if not is_cocycle(g):
                    raise ArithmeticError("cohomology generator is not a cocycle")
                factors.append(f)
                gens.append(g)
    return CohomologyGroup(n, G, M, tuple(factors), tuple(gens))


# -- random generation ---------------------------------------------------------------


def random_cochain(n: int, G: AbGroup, M: AbGroup, rng: random.Random) -> Cochain:
    els = M.elements()
    return Cochain(n, G, M, {c: rng.choice(els) for c in normalized_cells(G, n)})


def random_coboundary(n: int, G: AbGroup, M: AbGroup, rng: random.Random) -> Cochain:
    return differential(random_cochain(n - 1, G, M, rng))


def class_count_exhaustive(G: AbGroup, M: AbGroup, n: int) -> int:
    """|Z^n| / |B^n| by enumerating every normalized cochain (tiny cases only)."""
    cells = normalized_cells(G, n)
    if M.order ** len(cells) > EXHAUSTIVE_BOUND:
        raise CochainError("class_count_exhaustive: search space too large")
    cocycles = 0
    for values in itertools.product(M.elements(), repeat=len(cells)):
        if is_cocycle(Cochain(n, G, M, dict(zip(cells, values)))):
            cocycles += 1
    prev = normalized_cells(G, n - 1)
    if M.order ** len(prev) > EXHAUSTIVE_BOUND:
        raise CochainError("class_count_exhaustive: search space too large")
    boundaries = {
        differential(Cochain(n - 1, G, M, dict(zip(prev, values))))
        for values in itertools.product(M.elements(), repeat=len(prev))
    }
    return cocycles // len(boundaries)


# -- serialization -----------------------------------------------------------------


def cochain_to_json(c: Cochain) -> dict:
    """mu_L-valued cochain as {degree, group, coeff_order, entries}; identity entries omitted."""
    if c.coeff.rank != 1:
        raise CochainError("JSON form is defined for cyclic coefficients mu_L")
    L = c.coeff.order
    entries = []
    for args in normalized_cells(c.source, c.degree):
        k = c.table[args][0]
        if k:
            g = gcd(k, L)
            entries.append({"args": [list(a) for a in args],
                            "value": {"order": L // g, "exp": k // g}})
    return {"degree": c.degree, "group": list(c.source.invariant_factors),
            "coeff_order": L, "entries": entries}


def cochain_from_json(obj: Mapping, default_coeff_order: int | None = None) -> Cochain:
    """Inverse of :func:`cochain_to_json`; each value {order, exp} must have order | L."""
    try:
        G = AbGroup.parse(obj["group"]) if isinstance(obj["group"], str) else \
            AbGroup(tuple(int(n) for n in obj["group"]))
        n = int(obj.get("degree", 3))
        L = int(obj.get("coeff_order") or default_coeff_order or 0)
        entries = obj.get("entries", [])
    except (KeyError, TypeError, ValueError) as exc:
        raise CochainError(f"malformed cochain description: {exc}") from exc
    if L < 1:
        raise CochainError("coeff_order missing")
    M = mu(L)
    table = {}
    for ent in entries:
        args = tuple(G.check(tuple(int(x) for x in a)) for a in ent["args"])
        if len(args) != n:
            raise CochainError(f"entry {ent['args']} does not have {n} arguments")
        order, exp = int(ent["value"]["order"]), int(ent["value"]["exp"])
        if L % order:
            raise CochainError(f"value of order {order} is not in mu_{L}")
        table[args] = ((exp * (L // order)) % L,)
    return Cochain(n, G, M, table)


__all__ = [
    "Cochain",
    "CochainError",
    "CohomologyGroup",
    "mu",
    "normalized_cells",
    "differential",
    "differential_matrix",
    "is_cocycle",
    "is_coboundary",
    "same_class",
    "cohomology_group",
    "random_cochain",
    "random_coboundary",
    "class_count_exhaustive",
    "cochain_from_json",
    "cochain_to_json",
    "GroupError",
]
