"""Pointed categories Vec_A^omega and their canonical braided A-crossed structure.

Simples are the elements of A, ``a (x) b = a + b`` and the associator on
``(a b) c`` is ``omega(a, b, c)`` with omega a normalized 3-cocycle valued in
mu_L.  The A-action fixes every simple; the element g acts with tensorator
``gamma(g | a, b)`` and the composition isomorphisms ``T(gh) -> T(g) T(h)`` are
``mu(g, h | a)``, where

    gamma(g | a, b) = omega(g, a, b) omega(a, b, g) / omega(a, g, b),
    mu(g, h | a)    = omega(g, h, a) omega(a, g, h) / omega(g, a, h).

With every G-braiding component equal to 1 this is a braided A-crossed
category; :func:`verify_crossed` checks the action and the crossed hexagons.

A braiding on Vec_A^omega exists exactly when some eta with
``delta_v(eta) = gamma`` exists and the class of the obstruction cocycle
vanishes.  Both sides are computed here: the obstruction by its closed form,
the braidings by exhaustive search over mu_K-valued tables, K = L exp(A).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Mapping

from .abgroup import AbGroup, Elem
from .cohomology import Cochain, CochainError, is_coboundary, is_cocycle, mu
from .cyclotomic import CycField, CycNumber, cyclotomic_field
from .search import Problem, solve
from .skeletal import (
    CrossedStructure,
    GActionData,
    MonFunctor,
    MonIdAutos,
    SkeletalCategory,
    action_compatibility_failures,
    braiding_from_trivialization,
    check_action,
    hexagon_equations,
    hexagon_report,
    monoidal_id_autos,
    obstruction_cocycle,
    ordinary,
    pointed_fusion,
    trivializations,
)

BRUTE_FORCE_MAX_ORDER = 16


def default_coeff_order(A: AbGroup) -> int:
    """L = 2 exp(A) |A|: mu_L holds a representative of every class in H^3(A, k^x)."""
    return 2 * A.exponent * A.order


@dataclass(frozen=True, eq=False)
class PointedCat:
    group: AbGroup
    omega: Cochain  # degree 3, coefficients mu(L)

    def __post_init__(self):
        if self.omega.degree != 3 or self.omega.source != self.group:
            raise CochainError("omega must be a 3-cochain on the grading group")
        if self.omega.coeff.rank != 1:
            raise CochainError("omega must take values in a cyclic group mu_L")
        if not is_cocycle(self.omega):
            raise CochainError("omega is not a 3-cocycle")

    @classmethod
    def trivial(cls, A: AbGroup, L: int | None = None) -> PointedCat:
        return cls(A, Cochain.identity(3, A, mu(L or default_coeff_order(A))))

    @property
    def L(self) -> int:
        return self.omega.coeff.order

    @property
    def K(self) -> int:
        """Exponent modulus for eta and braiding values: mu_{L exp(A)}."""
        return self.L * self.group.exponent

    @cached_property
    def field(self) -> CycField:
        return cyclotomic_field(self.K)

    def w(self, a: Elem, b: Elem, c: Elem) -> CycNumber:
        return self.field.root(self.L, self.omega(a, b, c)[0])

    @cached_property
    def category(self) -> SkeletalCategory:
        A = self.group
        ev = {a: self.w(a, A.neg(a), a).inv() for a in A.elements()}
        return SkeletalCategory(pointed_fusion(A), self.field,
                                lambda x, y, z, s, e, f: self.w(x, y, z), ev=ev)

    @cached_property
    def autos(self) -> MonIdAutos:
        return monoidal_id_autos(self.category.fusion)

    def label(self) -> str:
        return f"Vec_{self.group}^omega (omega in mu_{self.L})"


# -- crossed data ------------------------------------------------------------------


@dataclass(frozen=True, eq=False)
class CrossedDataPointed:
    """gamma[g, a, b] (tensorator of g_*) and mu[g, h, a] (component of T(gh) -> T(g)T(h))."""

    gamma: Mapping[tuple, CycNumber]
    mu: Mapping[tuple, CycNumber]


def crossed_data(cat: PointedCat) -> CrossedDataPointed:
    A, w = cat.group, cat.w
    els = A.elements()
    gamma = {(g, a, b): w(g, a, b) * w(a, b, g) * w(a, g, b).inv()
             for g in els for a in els for b in els}
    mu_ = {(g, h, a): w(g, h, a) * w(a, g, h) * w(g, a, h).inv()
           for g in els for h in els for a in els}
    data = CrossedDataPointed(gamma, mu_)
    for g in els:
        for a, b, c in itertools.product(els, repeat=3):
            # gamma(g|-,-) is a 2-cocycle: the tensorator of a functor fixing objects
            ab, bc = A.add(a, b), A.add(b, c)
            if gamma[g, a, b] * gamma[g, ab, c] != gamma[g, b, c] * gamma[g, a, bc]:
                raise ArithmeticError("gamma(g|-,-) is not a 2-cocycle")
    for g, h in itertools.product(els, repeat=2):
        gh = A.add(g, h)
        for a, b in itertools.product(els, repeat=2):
            # the character defect of mu(g,h|-) is the one forced by monoidality of t2
            lhs = mu_[g, h, A.add(a, b)] * gamma[gh, a, b]
            if lhs != mu_[g, h, a] * mu_[g, h, b] * gamma[g, a, b] * gamma[h, a, b]:
                raise ArithmeticError("mu(g,h|-) is not monoidal for the tensorators gamma")
    return data


def mu_is_character(cat: PointedCat, data: CrossedDataPointed | None = None) -> bool:
    """Whether every mu(g,h|-) is multiplicative; true iff gamma(-|a,b) is multiplicative in g."""
    data = data or crossed_data(cat)
    A = cat.group
    els = A.elements()
    return all(data.mu[g, h, A.add(a, b)] == data.mu[g, h, a] * data.mu[g, h, b]
               for g in els for h in els for a in els for b in els)


def displayed_formula_report(cat: PointedCat) -> dict:
    """Check the alternative expressions

        gamma'(g|a,b) = omega(g,a,b) omega(b,g,a) / omega(g,b,a),
        mu'(g,h|a)    = omega(h,g,a) / (omega(h,a,g) omega(g,h,a)),

    for being a 2-cocycle in (a, b) and a character in a respectively.
    """
    A, w = cat.group, cat.w
    els = A.elements()

    def gam(g, a, b):
        return w(g, a, b) * w(b, g, a) * w(g, b, a).inv()

    def mu_(g, h, a):
        return w(h, g, a) * (w(h, a, g) * w(g, h, a)).inv()

    cocycle = all(
        gam(g, a, b) * gam(g, A.add(a, b), c) == gam(g, b, c) * gam(g, a, A.add(b, c))
        for g in els for a, b, c in itertools.product(els, repeat=3))
    character = all(mu_(g, h, A.add(a, b)) == mu_(g, h, a) * mu_(g, h, b)
                    for g in els for h in els for a in els for b in els)
    return {"gamma_is_2_cocycle": cocycle, "mu_is_character": character}


def crossed_action(cat: PointedCat, data: CrossedDataPointed | None = None) -> GActionData:
    data = data or crossed_data(cat)
    A = cat.group
    els = A.elements()
    functors = {g: MonFunctor(cat.category, {a: a for a in els},
                              {(a, b, A.add(a, b)): data.gamma[g, a, b] for a in els for b in els})
                for g in els}
    t2 = {(g, h): {a: data.mu[g, h, a] for a in els} for g in els for h in els}
    return GActionData(cat.category, A, functors, t2)


def crossed_structure(cat: PointedCat, action: GActionData | None = None) -> CrossedStructure:
    """The canonical crossed structure: every G-braiding component equal to 1."""
    act = action or crossed_action(cat)
    A = cat.group
    one = cat.field.one()
    R = {(a, b, A.add(a, b)): one for a in A.elements() for b in A.elements()}
    return CrossedStructure(act, {a: a for a in A.elements()}, R)


@dataclass
class CrossedCheck:
    action: bool
    hexagons: bool
    compatibility: bool

    @property
    def holds(self) -> bool:
        return self.action and self.hexagons and self.compatibility


def verify_crossed(cat: PointedCat, cs: CrossedStructure | None = None) -> CrossedCheck:
    cs = cs or crossed_structure(cat)
    return CrossedCheck(check_action(cs.action).holds, hexagon_report(cs, stop_after=1).holds,
                        not action_compatibility_failures(cs))


# -- eta and the obstruction --------------------------------------------------------


def _exponent(x: CycNumber, K: int) -> int:
    r = x.root_exponent()
    if r is None or (r * K).denominator != 1:
        raise ArithmeticError(f"{x!r} is not a {K}-th root of unity")
    return int(r * K) % K


def solve_eta(cat: PointedCat, data: CrossedDataPointed | None = None) -> Cochain | None:
    """A 2-cochain eta(g, a) in mu_K with delta_v(eta) = gamma, or None.

    For each g this is the coboundary problem gamma(g|-,-) = d eta(g, -).
    mu_K suffices: iterating d u(a, j a) over j < ord(a) gives u(a)^ord(a) in mu_L.
    """
    data = data or crossed_data(cat)
    A, K = cat.group, cat.K
    M = mu(K)
    table = {}
    for g in A.elements()[1:]:
        gam = Cochain.from_function(2, A, M, lambda a, b: (_exponent(data.gamma[g, a, b], K),))
        p = is_coboundary(gam)
        if p is None:
            return None
        for a in A.elements()[1:]:
            table[g, a] = p(a)
    return Cochain(2, A, M, table)


def delta_v(eta: Cochain, g: Elem, a: Elem, b: Elem) -> int:
    """eta(g,a) eta(g,b) / eta(g,ab), as an exponent."""
    A = eta.source
    return eta(g, a)[0] + eta(g, b)[0] - eta(g, A.add(a, b))[0]


def delta_h(eta: Cochain, g: Elem, h: Elem, a: Elem) -> int:
    """eta(g,a) eta(h,a) / eta(gh,a), as an exponent."""
    A = eta.source
    return eta(g, a)[0] + eta(h, a)[0] - eta(A.add(g, h), a)[0]


def choices_from_eta(cat: PointedCat, eta: Cochain) -> dict:
    """chi_g = eta(g, -) as scalar families T(g) -> Id."""
    K = eta.coeff.order
    return {g: {a: cat.field.root(K, eta(g, a)[0]) for a in cat.group.elements()}
            for g in cat.group.elements()}


def _check_eta(cat: PointedCat, eta: Cochain, data: CrossedDataPointed) -> None:
    K = eta.coeff.order
    els = cat.group.elements()
    for g, a, b in itertools.product(els, repeat=3):
        if cat.field.root(K, delta_v(eta, g, a, b)) != data.gamma[g, a, b]:
            raise ValueError(f"delta_v(eta) != gamma at ({g} | {a}, {b})")


def pointed_obstruction(cat: PointedCat, eta: Cochain, data: CrossedDataPointed | None = None
                        ) -> Cochain:
    """b(eta) from the closed form delta_h(eta) mu, with coefficients Aut_(x)(Id) = A^.

    The value at (g, h) is the character a -> (delta_h(eta)(g,h|a) mu(g,h|a))^{-1};
    the inverse matches the orientation chi_gh t2^{-1} chi_g^{-1} chi_h^{-1} of the
    general obstruction, and both orientations have the same class.
    """
    data = data or crossed_data(cat)
    _check_eta(cat, eta, data)
    K = eta.coeff.order
    F, autos = cat.field, cat.autos

    def value(g, h):
        comps = {a: (F.root(K, delta_h(eta, g, h, a)) * data.mu[g, h, a]).inv()
                 for a in cat.group.elements()}
        return autos.log(comps)

    b = Cochain.from_function(2, cat.group, autos.group, value)
    if not is_cocycle(b):
        raise ArithmeticError("b(eta) is not a cocycle")
    return b


def engine_obstruction(cat: PointedCat, eta: Cochain, action: GActionData | None = None) -> Cochain:
    """The same cocycle through the general obstruction construction."""
    act = action or crossed_action(cat)
    return obstruction_cocycle(act, choices_from_eta(cat, eta), cat.autos)


@dataclass
class ObstructionResult:
    eta: Cochain | None
    obstruction: Cochain | None
    vanishes: bool

    @property
    def braided(self) -> bool:
        return self.eta is not None and self.vanishes


def obstruction(cat: PointedCat) -> ObstructionResult:
    data = crossed_data(cat)
    eta = solve_eta(cat, data)
    if eta is None:
        return ObstructionResult(None, None, False)
    b = pointed_obstruction(cat, eta, data)
    return ObstructionResult(eta, b, is_coboundary(b) is not None)


# -- braidings ------------------------------------------------------------------------


def braiding_cells(cat: PointedCat) -> list[tuple]:
    A = cat.group
    return [(a, b, A.add(a, b)) for a in A.elements() for b in A.elements()]


def braidings_pointed(cat: PointedCat) -> list[dict]:
    """Every braiding with values in mu_K, by exhaustive search over the hexagons.

    mu_K suffices: H1 makes c(a, -) a primitive of a mu_L-valued 2-cocycle, so
    c(a, b)^ord(b) lies in mu_L.
    """
    if cat.group.order > BRUTE_FORCE_MAX_ORDER:
        raise ValueError(f"brute-force braiding search is limited to |A| <= {BRUTE_FORCE_MAX_ORDER}")
    prob = Problem(cat.field, cat.K)
    R = {c: prob.unknown(c) for c in braiding_cells(cat)}
    cs = ordinary(cat.category, R)
    for _, _, _, lhs, rhs in hexagon_equations(cs):
        prob.equate_vectors(lhs, rhs)
    sols, _ = solve(prob)
    return sols


def braidings_from_theorem(cat: PointedCat) -> list[dict]:
    """Braidings c^eta(a, b) = eta(a)_b, one per trivialization of the crossed action."""
    res = obstruction(cat)
    if not res.braided:
        return []
    act = crossed_action(cat)
    cs = crossed_structure(cat, act)
    out = []
    for triv in trivializations(act, choices_from_eta(cat, res.eta), cat.autos):
        R = braiding_from_trivialization(cs, triv)
        if not hexagon_report(ordinary(cat.category, R), stop_after=1).holds:
            raise ArithmeticError("braiding from a trivialization fails a hexagon")
        out.append(R)
    return out


def table_key(cat: PointedCat, R: Mapping) -> tuple:
    return tuple(R[c] for c in braiding_cells(cat))


def diagonal_phases(cat: PointedCat, R: Mapping) -> tuple[Fraction, ...]:
    A = cat.group
    return tuple(R[a, a, A.add(a, a)].root_exponent() for a in A.elements())


__all__ = [
    "BRUTE_FORCE_MAX_ORDER",
    "CrossedCheck",
    "CrossedDataPointed",
    "ObstructionResult",
    "PointedCat",
    "braiding_cells",
    "braidings_from_theorem",
    "braidings_pointed",
    "choices_from_eta",
    "crossed_action",
    "crossed_data",
    "crossed_structure",
    "default_coeff_order",
    "delta_h",
    "delta_v",
    "diagonal_phases",
    "displayed_formula_report",
    "engine_obstruction",
    "mu_is_character",
    "obstruction",
    "pointed_obstruction",
    "solve_eta",
    "table_key",
    "verify_crossed",
]
