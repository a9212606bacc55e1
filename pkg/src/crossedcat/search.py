"""Exhaustive search for root-of-unity solutions of coherence equations.

Unknown scalars are symbols; pushing symbolic tables through the same
diagram code used for verification yields every equation as a Laurent
polynomial with cyclotomic coefficients.  All unknowns range over mu_K, so a
value is an exponent x in Z/K standing for zeta_K^x.

* a one-term equation ``c X^e = 0`` (c != 0) has no solution;
* a two-term equation ``c1 X^e1 + c2 X^e2 = 0`` is the congruence
  ``(e1 - e2) . x = K r (mod K)`` with ``zeta^r = -c2/c1``, or has no
  solution in mu_K when -c2/c1 is not a K-th root of unity;
* the congruences are solved exactly and completely, and every solution is
  then tested against the remaining (three or more term) equations.

The result is the full set of mu_K-valued solutions; no closed form enters.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Hashable, Mapping, Sequence

from .cyclotomic import CycField, CycNumber
from .intlinalg import all_solutions_mod

Monomial = tuple  # sorted tuple of (variable index, exponent), exponents nonzero


def _mono_mul(a: Monomial, b: Monomial) -> Monomial:
    if not a:
        return b
    if not b:
        return a
    d = dict(a)
    for v, e in b:
        n = d.get(v, 0) + e
        if n:
            d[v] = n
        else:
            d.pop(v, None)
    return tuple(sorted(d.items()))


class Poly:
    """Laurent polynomial over a cyclotomic field: {monomial: coefficient}."""

    __slots__ = ("field", "terms")

    def __init__(self, field_: CycField, terms: Mapping[Monomial, CycNumber]):
        self.field = field_
        self.terms = {m: c for m, c in terms.items() if not c.is_zero()}

    @classmethod
    def var(cls, field_: CycField, index: int) -> Poly:
        return cls(field_, {((index, 1),): field_.one()})

    def _lift(self, other) -> Poly | None:
        if isinstance(other, Poly):
            return other
        if isinstance(other, CycNumber):
            return Poly(self.field, {(): other})
        if isinstance(other, (int, Fraction)):
            return Poly(self.field, {(): self.field.from_rational(other)})
        return None

    def __add__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        terms = dict(self.terms)
        for m, c in o.terms.items():
            cur = terms.get(m)
            terms[m] = c if cur is None else cur + c
        return Poly(self.field, terms)

    __radd__ = __add__

    def __neg__(self):
        return Poly(self.field, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        terms: dict = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in o.terms.items():
                m = _mono_mul(m1, m2)
                cur = terms.get(m)
                terms[m] = c1 * c2 if cur is None else cur + c1 * c2
        return Poly(self.field, terms)

    __rmul__ = __mul__

    def inv(self) -> Poly:
        if len(self.terms) != 1:
            raise ZeroDivisionError("only monomials are invertible")
        (m, c), = self.terms.items()
        return Poly(self.field, {tuple((v, -e) for v, e in m): c.inv()})

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return (self - o).is_zero()

    __hash__ = None

    def __repr__(self):
        return " + ".join(f"{c!r}*{m}" for m, c in self.terms.items()) or "0"


def as_poly(field_: CycField, x) -> Poly:
    if isinstance(x, Poly):
        return x
    if not isinstance(x, CycNumber):
        x = field_.from_rational(x)
    return Poly(field_, {(): x})


@dataclass
class Problem:
    """Unknown labels, the exponent modulus K and the collected equations ``poly == 0``."""

    field: CycField
    K: int
    labels: list = field(default_factory=list)
    equations: list = field(default_factory=list)

    def __post_init__(self):
        if self.field.root_order % self.K:
            raise ValueError(f"field of conductor {self.field.conductor} does not contain mu_{self.K}")
        self._index: dict = {}

    def unknown(self, label: Hashable) -> Poly:
        i = self._index.get(label)
        if i is None:
            i = self._index[label] = len(self.labels)
            self.labels.append(label)
        return Poly.var(self.field, i)

    def equate(self, lhs, rhs) -> None:
        d = as_poly(self.field, lhs) - as_poly(self.field, rhs)
        if not d.is_zero():
            self.equations.append(d)

    def equate_vectors(self, lhs: Mapping, rhs: Mapping) -> None:
        for t in set(lhs) | set(rhs):
            self.equate(lhs.get(t, self.field.zero()), rhs.get(t, self.field.zero()))


@dataclass
class SearchStats:
    unknowns: int = 0
    equations: int = 0
    congruences: int = 0
    candidates: int = 0
    solutions: int = 0


def solve(problem: Problem, limit: int = 10**6) -> tuple[list[dict], SearchStats]:
    """All assignments label -> mu_K (as CycNumbers) satisfying every equation."""
    K, F = problem.K, problem.field
    n = len(problem.labels)
    stats = SearchStats(unknowns=n, equations=len(problem.equations))
    rows: dict[tuple, int] = {}
    rest: list[Poly] = []
    for eq in problem.equations:
        items = list(eq.terms.items())
        if len(items) == 1:
            return [], stats
        if len(items) == 2:
            (m1, c1), (m2, c2) = items
            r = (-c2 * c1.inv()).root_exponent()
            if r is None or (r * K).denominator != 1:
                return [], stats
            row = [0] * n
            for v, e in m1:
                row[v] += e
            for v, e in m2:
                row[v] -= e
            rhs = int(r * K) % K
            row = [x % K for x in row]
            key = tuple(row)
            if key in rows and rows[key] != rhs:
                return [], stats
            rows[key] = rhs
        else:
            rest.append(eq)
    mat = [list(k) for k in rows]
    stats.congruences = len(mat)
    candidates = all_solutions_mod(mat, [rows[tuple(r)] for r in mat], K, n, limit=limit)
    stats.candidates = len(candidates)
    roots = [F.root(K, j) for j in range(K)]
    out = []
    for x in candidates:
        if all(_evaluate(eq, x, roots, K).is_zero() for eq in rest):
            out.append({lab: roots[x[i]] for i, lab in enumerate(problem.labels)})
    stats.solutions = len(out)
    return out, stats


def _evaluate(eq: Poly, x: Sequence[int], roots, K: int) -> CycNumber:
    total = None
    for m, c in eq.terms.items():
        k = sum(e * x[v] for v, e in m) % K
        term = c * roots[k]
        total = term if total is None else total + term
    return total


__all__ = ["Poly", "Problem", "SearchStats", "as_poly", "solve"]
