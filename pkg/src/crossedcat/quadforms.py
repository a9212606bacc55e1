"""Bicharacters, quadratic forms and Gauss sums on finite abelian groups.

Every value here is a root of unity, so it is stored as its phase: a
``Fraction`` r in [0, 1) standing for exp(2 pi i r).  Products become sums of
phases and nothing needs a field until :func:`gauss_sum`.

Sign convention.  A quadratic form q is *compatible* with a bicharacter chi
when

    chi(a, b) = q(a) q(b) / q(a + b),

so the associated bilinear form w(a, b) = q(a + b) / (q(a) q(b)) equals
chi(a, b)^{-1}.  Both are exposed; all Tambara-Yamagami code uses chi.
"""

from __future__ import annotations

import itertools
import json
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from math import gcd
from typing import Iterable, Sequence

from .abgroup import AbGroup, Elem, GroupError, Hom
from .cyclotomic import CycField, CycNumber


def phase(r) -> Fraction:
    return Fraction(r) % 1


# -- bicharacters ---------------------------------------------------------------


@dataclass(frozen=True)
class BicharFlags:
    symmetric: bool
    nondegenerate: bool


@dataclass(frozen=True)
class Bicharacter:
    """chi(e_i, e_j) = exp(2 pi i r_ij) on the standard generators, extended biadditively."""

    group: AbGroup
    matrix: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self):
        A = self.group
        mat = tuple(tuple(phase(x) for x in row) for row in self.matrix)
        if len(mat) != A.rank or any(len(row) != A.rank for row in mat):
            raise GroupError(f"bicharacter on {A} needs a {A.rank}x{A.rank} matrix")
        for i, ni in enumerate(A.invariant_factors):
            for j, nj in enumerate(A.invariant_factors):
                r = mat[i][j]
                if (r * ni) % 1 or (r * nj) % 1:
                    raise GroupError(
                        f"chi(e_{i}, e_{j}) = exp(2 pi i {r}) is not well defined on "
                        f"Z/{ni} x Z/{nj}"
                    )
        object.__setattr__(self, "matrix", mat)

    @classmethod
    def parse(cls, group: AbGroup, text: str) -> Bicharacter:
        """Matrix literal such as ``"[[1/2]]"`` or ``"[[0, 1/2], [1/2, 0]]"``."""
        try:
            rows = json.loads(re.sub(r"(-?\d+(?:/\d+)?)", r'"\1"', text))
            mat = tuple(tuple(Fraction(x) for x in row) for row in rows)
        except (ValueError, TypeError, ZeroDivisionError) as exc:
            raise GroupError(f"malformed bicharacter matrix {text!r}") from exc
        if group.rank == 0 and mat in ((), ((),)):
            mat = ()
        return cls(group, mat)

    def phase(self, a: Elem, b: Elem) -> Fraction:
        m = self.matrix
        total = Fraction(0)
        for i, ai in enumerate(a):
            if ai:
                row = m[i]
                for j, bj in enumerate(b):
                    if bj:
                        total += ai * bj * row[j]
        return total % 1

    __call__ = phase

    @cached_property
    def table(self) -> dict[tuple[Elem, Elem], Fraction]:
        els = self.group.elements()
        return {(a, b): self.phase(a, b) for a in els for b in els}

    def flags(self) -> BicharFlags:
        return check_bicharacter(self)

    def transform(self, f: Hom) -> Bicharacter:
        """chi o (f x f)."""
        imgs = f.images
        return Bicharacter(self.group, tuple(
            tuple(self.phase(imgs[i], imgs[j]) for j in range(self.group.rank))
            for i in range(self.group.rank)
        ))

    def to_json(self) -> list[list[dict]]:
        return [[{"order": r.denominator, "exp": r.numerator} for r in row] for row in self.matrix]

    def literal(self) -> str:
        return "[" + ", ".join("[" + ", ".join(str(r) for r in row) + "]" for row in self.matrix) + "]"


def check_bicharacter(chi: Bicharacter) -> BicharFlags:
    """Exhaustive symmetry and nondegeneracy check (plus biadditivity as a sanity test)."""
    A = chi.group
    els = A.elements()
    t = chi.table
    for a, b, c in itertools.product(els, repeat=3):
        if t[A.add(a, b), c] != (t[a, c] + t[b, c]) % 1:
            raise ArithmeticError("bicharacter table is not additive in the first slot")
    symmetric = all(t[a, b] == t[b, a] for a in els for b in els)
    rows = {tuple(t[a, b] for b in els) for a in els}
    return BicharFlags(symmetric, len(rows) == len(els))


def hyperbolic(group: AbGroup) -> Bicharacter:
    """chi(e_i, e_j) = -1 iff i != j, on an elementary abelian 2-group of rank 2."""
    if group.invariant_factors != (2, 2):
        raise GroupError("the hyperbolic form is defined here on Z/2 x Z/2")
    h = Fraction(1, 2)
    return Bicharacter(group, ((Fraction(0), h), (h, Fraction(0))))


def symmetric_bicharacters(A: AbGroup, nondegenerate: bool = True) -> list[Bicharacter]:
    """All symmetric bicharacters on A, optionally only the nondegenerate ones."""
    facs = A.invariant_factors
    slots = [(i, j) for i in range(A.rank) for j in range(i, A.rank)]
    options = [[Fraction(k, gcd(facs[i], facs[j])) for k in range(gcd(facs[i], facs[j]))]
               for i, j in slots]
    out = []
    for vals in itertools.product(*options):
        mat = [[Fraction(0)] * A.rank for _ in range(A.rank)]
        for (i, j), v in zip(slots, vals):
            mat[i][j] = mat[j][i] = v
        chi = Bicharacter(A, tuple(map(tuple, mat)))
        if not nondegenerate or check_bicharacter(chi).nondegenerate:
            out.append(chi)
    return out


def aut_preserving(A: AbGroup, chi: Bicharacter) -> list[Hom]:
    """Aut(A, chi) by filtering all automorphisms."""
    els = A.elements()
    t = chi.table
    return [f for f in A.automorphisms()
            if all(t[f(a), f(b)] == t[a, b] for a in els for b in els)]


def bicharacter_orbit_representatives(A: AbGroup, chis: Sequence[Bicharacter]) -> list[Bicharacter]:
    """One bicharacter per Aut(A)-orbit (chi ~ chi o (f x f))."""
    auts = A.automorphisms()
    seen: set = set()
    reps = []
    for chi in chis:
        if chi.matrix in seen:
            continue
        reps.append(chi)
        for f in auts:
            seen.add(chi.transform(f).matrix)
    return reps


# -- quadratic forms ---------------------------------------------------------------


@dataclass(frozen=True)
class QuadraticForm:
    """q: A -> mu stored as a phase table (identity first, lexicographic order)."""

    group: AbGroup
    values: tuple[Fraction, ...]

    def __post_init__(self):
        vals = tuple(phase(v) for v in self.values)
        if len(vals) != self.group.order:
            raise GroupError(f"quadratic form on {self.group} needs {self.group.order} values")
        object.__setattr__(self, "values", vals)

    @classmethod
    def from_function(cls, group: AbGroup, fn) -> QuadraticForm:
        return cls(group, tuple(fn(a) for a in group.elements()))

    def __call__(self, a: Elem) -> Fraction:
        return self.values[self.group.index[a]]

    def bilinear(self, a: Elem, b: Elem) -> Fraction:
        """w(a, b) = q(a+b) / (q(a) q(b)), as a phase."""
        return (self(self.group.add(a, b)) - self(a) - self(b)) % 1

    def compose(self, f: Hom) -> QuadraticForm:
        """q o f."""
        return QuadraticForm.from_function(self.group, lambda a: self(f(a)))

    def diagonal_orders(self) -> int:
        from math import lcm

        return lcm(1, *(v.denominator for v in self.values))

    def to_json(self) -> list[dict]:
        return [{"elem": list(a), "value": {"order": v.denominator, "exp": v.numerator}}
                for a, v in zip(self.group.elements(), self.values)]

    def label(self) -> str:
        return "(" + ", ".join(str(v) for v in self.values) + ")"


def is_compatible(q: QuadraticForm, chi: Bicharacter) -> bool:
    """chi(a,b) = q(a)q(b)/q(ab), q(e) = 1 and q(-a) = q(a), exhaustively."""
    A = q.group
    els = A.elements()
    if q(A.identity) != 0:
        return False
    if any(q(A.neg(a)) != q(a) for a in els):
        return False
    return all((q(a) + q(b) - q(A.add(a, b))) % 1 == chi.phase(a, b) for a in els for b in els)


def quadratic_forms_with(chi: Bicharacter) -> list[QuadraticForm]:
    """All quadratic forms compatible with a symmetric chi.

    Generator values range over mu_{2 exp(A)}; the rest of the table is forced
    by q(a + e_i) = q(a) q(e_i) chi(a, e_i)^{-1}, and every candidate is then
    checked against the full definition.
    """
    A = chi.group
    if not check_bicharacter(chi).symmetric:
        raise GroupError("quadratic forms need a symmetric bicharacter")
    n = 2 * A.exponent
    gens = A.generators()
    els = A.elements()
    out = []
    for gen_vals in itertools.product(range(n), repeat=A.rank):
        table: dict[Elem, Fraction] = {A.identity: Fraction(0)}
        for a in els[1:]:
            i = max(k for k, c in enumerate(a) if c)
            prev = list(a)
            prev[i] -= 1
            prev = tuple(prev)
            table[a] = (table[prev] + Fraction(gen_vals[i], n) - chi.phase(prev, gens[i])) % 1
        q = QuadraticForm(A, tuple(table[a] for a in els))
        if is_compatible(q, chi):
            out.append(q)
    return out


def quadratic_forms_brute_force(chi: Bicharacter) -> list[QuadraticForm]:
    """Same set as :func:`quadratic_forms_with`, over every mu_{2 exp}-valued table."""
    A = chi.group
    n = 2 * A.exponent
    if n ** (A.order - 1) > 10**6:
        raise GroupError("brute-force quadratic form search too large")
    out = []
    for vals in itertools.product(range(n), repeat=A.order - 1):
        q = QuadraticForm(A, (Fraction(0),) + tuple(Fraction(v, n) for v in vals))
        if is_compatible(q, chi):
            out.append(q)
    return out


def gauss_sum(q: QuadraticForm, field: CycField) -> CycNumber:
    """sum_{a in A} q(a), exactly."""
    total = field.zero()
    for v in q.values:
        total = total + field.from_phase(v)
    return total


def orbits(forms: Iterable[QuadraticForm], auts: Sequence[Hom]) -> list[list[QuadraticForm]]:
    """Partition of ``forms`` into classes q ~ q' iff q'(f(a)) = q(a) for some f in ``auts``."""
    forms = list(forms)
    index = {q.values: k for k, q in enumerate(forms)}
    label = [-1] * len(forms)
    parts: list[list[QuadraticForm]] = []
    for k, q in enumerate(forms):
        if label[k] >= 0:
            continue
        label[k] = len(parts)
        part = [q]
        for f in auts:
            # q' = q o f^{-1} satisfies q'(f(a)) = q(a)
            other = q.compose(f.inverse())
            j = index.get(other.values)
            if j is not None and label[j] < 0:
                label[j] = label[k]
                part.append(forms[j])
        parts.append(part)
    return parts


__all__ = [
    "BicharFlags",
    "Bicharacter",
    "QuadraticForm",
    "aut_preserving",
    "bicharacter_orbit_representatives",
    "check_bicharacter",
    "gauss_sum",
    "hyperbolic",
    "is_compatible",
    "orbits",
    "phase",
    "quadratic_forms_brute_force",
    "quadratic_forms_with",
    "symmetric_bicharacters",
]
