"""Tambara-Yamagami categories TY(A, chi, tau) and their Z/2-crossed structures.

Simples are the elements of A (coordinate tuples) and the extra label ``"m"``
with ``a b = a + b``, ``a m = m a = m`` and ``m m = sum_a a``.  The nontrivial
F-symbols are

    F(a, m, b; m) = chi(a, b),  F(m, a, m; b) = chi(a, b),
    F(m, m, m; m)[a, b] = tau chi(a, b)^{-1},

and the duality data are ``ev_m = tau^{-1}``, ``coev_m = 1``, trivial on A.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from math import lcm
from typing import Mapping

from .abgroup import AbGroup, Elem, GroupError, Hom
from .cyclotomic import CycField, CycNumber, CyclotomicError, cyclotomic_field, \
    sqrt_of_natural, square_roots_unitary, to_json
from .quadforms import Bicharacter, QuadraticForm, aut_preserving, check_bicharacter, \
    gauss_sum, orbits, quadratic_forms_with
from .search import Problem, SearchStats, solve
from .skeletal import (
    CrossedStructure,
    FusionData,
    GActionData,
    MonFunctor,
    SkeletalCategory,
    check_action,
    equivalent_actions,
    hexagon_report,
    action_compatibility_failures,
    action_equations,
    hexagon_equations,
    identity_functor,
    monoidal_id_autos,
    ordinary,
)

M = "m"
ALPHA_MAX_ORDER = 32


def conductor_for(A: AbGroup) -> int:
    """Default conductor: room for q-values, tau and alpha."""
    return lcm(16, 4 * A.order, 2 * A.exponent)


def ty_fusion(A: AbGroup) -> FusionData:
    els = A.elements()
    rules = {}
    for a in els:
        for b in els:
            rules[a, b] = (A.add(a, b),)
        rules[a, M] = (M,)
        rules[M, a] = (M,)
    rules[M, M] = tuple(els)
    duals = {a: A.neg(a) for a in els}
    duals[M] = M
    return FusionData(tuple(els) + (M,), rules, A.identity, duals)


@dataclass(frozen=True, eq=False)
class TYData:
    group: AbGroup
    chi: Bicharacter
    tau_sign: int
    field: CycField
    tau: CycNumber
    category: SkeletalCategory

    @property
    def fusion(self) -> FusionData:
        return self.category.fusion

    @property
    def simples(self):
        return self.category.simples

    def chi_value(self, a: Elem, b: Elem) -> CycNumber:
        return self.field.from_phase(self.chi.phase(a, b))

    def label(self) -> str:
        sign = "+" if self.tau_sign > 0 else "-"
        return f"TY({self.group}, chi={self.chi.literal()}, tau={sign}1/sqrt({self.group.order}))"

    @cached_property
    def degree(self) -> dict:
        """Z/2-grading: A in degree 0, m in degree 1."""
        d = {a: (0,) for a in self.group.elements()}
        d[M] = (1,)
        return d


def _ty_assoc(A: AbGroup, chi: Bicharacter, field_: CycField, tau: CycNumber):
    one = field_.one()
    cache: dict = {}

    def root(r: Fraction) -> CycNumber:
        v = cache.get(r)
        if v is None:
            v = cache[r] = field_.from_phase(r)
        return v

    def assoc(x, y, z, w, e, f):
        if x != M and y == M and z != M:
            return root(chi.phase(x, z))
        if x == M and y != M and z == M:
            return root(chi.phase(y, w))
        if x == M and y == M and z == M:
            return tau * root(-chi.phase(e, f))
        return one

    return assoc


def make_ty(A: AbGroup, chi: Bicharacter, tau_sign: int, conductor: int | None = None) -> TYData:
    """TY(A, chi, tau) with tau = tau_sign / sqrt(|A|)."""
    if tau_sign not in (1, -1):
        raise ValueError("tau_sign must be +1 or -1")
    if chi.group != A:
        raise GroupError("bicharacter lives on a different group")
    els = A.elements()
    for a in els:
        for b in els:
            if chi.phase(a, b) != chi.phase(b, a):
                raise GroupError(f"chi is not symmetric: chi({a}, {b}) != chi({b}, {a})")
    flags = check_bicharacter(chi)
    if not flags.nondegenerate:
        for a in els[1:]:
            if all(chi.phase(a, b) == 0 for b in els):
                raise GroupError(f"chi is degenerate: {a} pairs trivially with every element")
    N = conductor or conductor_for(A)
    if N % conductor_for(A):
        raise CyclotomicError(f"conductor {N} must be a multiple of {conductor_for(A)}")
    K = cyclotomic_field(N)
    tau = tau_sign * sqrt_of_natural(K, A.order) * Fraction(1, A.order)
    if tau * tau * A.order != 1:
        raise ArithmeticError("tau^2 |A| != 1")
    fusion = ty_fusion(A)
    ev = {x: K.one() for x in fusion.simples}
    coev = dict(ev)
    ev[M] = tau.inv()
    cat = SkeletalCategory(fusion, K, _ty_assoc(A, chi, K, tau), ev, coev)
    return TYData(A, chi, tau_sign, K, tau, cat)


# -- pentagon ---------------------------------------------------------------------


@dataclass
class PentagonReport:
    holds: bool
    failures: list = field(default_factory=list)
    quadruples: int = 0


def pentagon_check(ty: TYData, stop_after: int | None = None, category: SkeletalCategory | None = None
                   ) -> PentagonReport:
    """Pentagon on every quadruple of simples, (m, m, m, m)-type quadruples first."""
    cat = category or ty.category
    simples = cat.simples
    quads = sorted(itertools.product(simples, repeat=4), key=lambda q: -sum(x == M for x in q))
    fails = cat.pentagon_failures(stop_after=stop_after, quadruples=quads)
    return PentagonReport(not fails, fails, len(quads))


def mutate_mmm(ty: TYData, a: Elem, b: Elem) -> SkeletalCategory:
    """The category with the sign of F(m, m, m; m)[a, b] flipped."""
    val = ty.category.F(M, M, M, M, a, b)
    return ty.category.with_overrides({(M, M, M, M, a, b): -val})


# -- Z/2-actions ---------------------------------------------------------------------


Z2 = AbGroup((2,))


def inversion_functor(ty: TYData) -> MonFunctor:
    A = ty.group
    perm = {a: A.neg(a) for a in A.elements()}
    perm[M] = M
    base = identity_functor(ty.category)
    return MonFunctor(ty.category, perm, dict(base.tensorator))


def z2_actions(ty: TYData) -> list[GActionData]:
    """The strict action T(a) = -a, T(m) = m, and its twist by gamma_m = -1 in t2(1, 1)."""
    cat = ty.category
    one, minus = cat.field.one(), -cat.field.one()
    e, g = (0,), (1,)
    functors = {e: identity_functor(cat), g: inversion_functor(ty)}
    out = []
    for sign in (one, minus):
        t2 = {}
        for x, y in itertools.product((e, g), repeat=2):
            t2[x, y] = {s: one for s in cat.simples}
        t2[g, g] = {s: (sign if s == M else one) for s in cat.simples}
        out.append(GActionData(cat, Z2, functors, t2))
    return out


def actions_inequivalent(ty: TYData) -> bool:
    strict, other = z2_actions(ty)
    autos = monoidal_id_autos(ty.fusion)
    return not equivalent_actions(strict, other, autos)


# -- braidings --------------------------------------------------------------------


@dataclass(frozen=True, eq=False)
class RelBraiding:
    ty: TYData
    q: QuadraticForm

    def table(self) -> dict:
        ty = self.ty
        A, K = ty.group, ty.field
        R = {}
        for a in A.elements():
            for b in A.elements():
                R[a, b, A.add(a, b)] = ty.chi_value(a, b)
            R[a, M, M] = K.from_phase(self.q(a))
        return R


@dataclass(frozen=True, eq=False)
class CrossedBraiding:
    """The table c_{a,b} = chi(a,b), c_{a,m} = c_{m,a} = q(a), c_{m,m}|_a = alpha q(a)^{-1}."""

    ty: TYData
    q: QuadraticForm
    alpha: CycNumber

    def table(self) -> dict:
        ty = self.ty
        A, K = ty.group, ty.field
        R = RelBraiding(ty, self.q).table()
        for a in A.elements():
            qa = K.from_phase(self.q(a))
            R[M, a, M] = qa
            R[M, M, a] = self.alpha * qa.inv()
        return R

    def key(self) -> tuple:
        return table_key(self.ty, self.table())

    def alpha_phase(self) -> Fraction | None:
        return self.alpha.root_exponent()


def table_key(ty: TYData, R: dict) -> tuple:
    """Canonical hashable form of a braiding table (cells in a fixed order)."""
    return tuple((k, R[k]) for k in braiding_cells(ty) if k in R)


def braiding_cells(ty: TYData) -> list[tuple]:
    fu = ty.fusion
    return [(x, y, s) for x in fu.simples for y in fu.simples for s in fu.fuse(x, y)]


def crossed_structure(ty: TYData, R: dict, action: GActionData | None = None) -> CrossedStructure:
    act = action if action is not None else z2_actions(ty)[0]
    return CrossedStructure(act, ty.degree, R)


def relative_triples(ty: TYData) -> tuple[list, list]:
    """H1 runs over (a, x, y) and H2 over (a, b, x), with a, b in A."""
    A, S = ty.group.elements(), ty.simples
    return ([(a, x, y) for a in A for x in S for y in S],
            [(a, b, x) for a in A for b in A for x in S])


def relative_hexagons_hold(ty: TYData, R: dict) -> bool:
    t1, t2 = relative_triples(ty)
    return hexagon_report(ordinary(ty.category, R), stop_after=1, triples=t1, triples2=t2).holds


def relative_braidings(ty: TYData) -> list[RelBraiding]:
    """One relative braiding on Vec_A per compatible quadratic form, each verified."""
    out = []
    for q in quadratic_forms_with(ty.chi):
        rb = RelBraiding(ty, q)
        if not relative_hexagons_hold(ty, rb.table()):
            raise ArithmeticError(f"relative braiding for q = {q.label()} fails a hexagon")
        out.append(rb)
    return out


def alphas_for(ty: TYData, q: QuadraticForm) -> list[CycNumber]:
    """Both alpha with alpha^2 = tau sum_a q(a)."""
    z = ty.tau * gauss_sum(q, ty.field)
    r = z.root_exponent()
    if r is None or 8 % r.denominator:
        raise ArithmeticError("tau times the Gauss sum is not an 8th root of unity")
    roots = square_roots_unitary(z, ALPHA_MAX_ORDER)
    if not roots:
        raise CyclotomicError("alpha lies outside the field; enlarge the conductor")
    return roots


def crossed_braidings(ty: TYData) -> list[CrossedBraiding]:
    """The Z/2-crossed braidings (q, alpha) for the strict action."""
    out = []
    for q in quadratic_forms_with(ty.chi):
        for alpha in alphas_for(ty, q):
            out.append(CrossedBraiding(ty, q, alpha))
    return out


@dataclass
class CrossedReport:
    holds: bool
    failures: list = field(default_factory=list)
    checked: int = 0


def verify_crossed_braiding(ty: TYData, action: GActionData, R: dict,
                            stop_after: int | None = None) -> CrossedReport:
    """HH1/HH2 on every triple plus the grading and action-compatibility axioms."""
    rep = check_action(action)
    if not rep.holds:
        return CrossedReport(False, [("action",) + tuple(rep.failures[:1])])
    missing = [c for c in braiding_cells(ty) if c not in R]
    if missing:
        return CrossedReport(False, [("missing cell", missing[0])])
    cs = crossed_structure(ty, R, action)
    # (m, m, m) first: that is where the non-strict action breaks
    S = ty.simples
    triples = sorted(itertools.product(S, repeat=3), key=lambda t: -sum(x == M for x in t))
    hx = hexagon_report(cs, stop_after=stop_after, triples=triples)
    fails = list(hx.failures)
    fails += action_compatibility_failures(cs)
    return CrossedReport(not fails, fails, hx.checked)


def is_elementary_2(A: AbGroup) -> bool:
    return A.is_elementary_2()


def braidings(ty: TYData) -> list[CrossedBraiding]:
    """Ordinary braidings: the crossed ones when the action is trivial, else none."""
    if not ty.group.is_elementary_2():
        return []
    out = []
    for cb in crossed_braidings(ty):
        if not hexagon_report(ordinary(ty.category, cb.table())).holds:
            raise ArithmeticError("crossed braiding over a trivial action fails the hexagons")
        out.append(cb)
    return out


# -- twists ---------------------------------------------------------------------


@dataclass(frozen=True, eq=False)
class Twist:
    theta_a: tuple  # aligned with the group elements
    theta_m: CycNumber

    def values(self, ty: TYData) -> dict:
        d = dict(zip(ty.group.elements(), self.theta_a))
        d[M] = self.theta_m
        return d


def _acted(ty: TYData, x):
    """a_* on a simple for the strict action: the element of degree 1 inverts A."""
    return x if x == M else ty.group.neg(x)


def twist_equations(ty: TYData, R: Mapping, theta: Mapping):
    """Yield ``(name, where, lhs, rhs)`` for Tw1, Tw2, Tw3 and the ribbon duality condition."""
    fu, A = ty.fusion, ty.group
    deg = ty.degree
    yield "Tw1", A.identity, theta[A.identity], ty.field.one()
    for x in fu.simples:
        yield "Tw2", x, theta[_acted(ty, x)], theta[x]
    for x, y in itertools.product(fu.simples, repeat=2):
        ay = _acted(ty, y) if deg[x] == (1,) else y
        for s in fu.fuse(x, y):
            yield "Tw3", (x, y, s), theta[s], theta[x] * theta[y] * R[x, y, s] * R[ay, x, s]
    for x in fu.simples:
        yield "ribbon", x, theta[fu.dual(x)], ty.category.dual_scalar(x, theta[x])


def twist_failures(ty: TYData, R: Mapping, theta: Mapping) -> list:
    return [(name, where) for name, where, lhs, rhs in twist_equations(ty, R, theta) if lhs != rhs]


def twists(ty: TYData, cb: CrossedBraiding) -> list[Twist]:
    """theta_a = q(a)^{-2}, theta_m = beta with beta^{-2} = tau sum q; each verified."""
    K, A = ty.field, ty.group
    z = ty.tau * gauss_sum(cb.q, K)
    out = []
    for r in square_roots_unitary(z.inv(), ALPHA_MAX_ORDER):
        theta_a = tuple(K.from_phase(-2 * cb.q(a)) for a in A.elements())
        tw = Twist(theta_a, r)
        bad = twist_failures(ty, cb.table(), tw.values(ty))
        if bad:
            raise ArithmeticError(f"twist fails {bad[0]}")
        out.append(tw)
    return out


# -- brute-force oracles -----------------------------------------------------------

BRUTE_FORCE_MAX_ORDER = 8


def search_modulus(ty: TYData) -> int:
    """Unknown braiding and twist scalars are searched in mu_K, K = lcm(16, 2 exp(A))."""
    return lcm(16, 2 * ty.group.exponent)


def _check_bound(ty: TYData) -> None:
    if ty.group.order > BRUTE_FORCE_MAX_ORDER:
        raise ValueError(f"brute-force search is limited to |A| <= {BRUTE_FORCE_MAX_ORDER}")


def _braiding_search(ty: TYData, cs_of, cells, triples=None, triples2=None, action_axiom=False,
                     modulus: int | None = None) -> tuple[list[dict], SearchStats]:
    prob = Problem(ty.field, modulus or search_modulus(ty))
    R = {c: prob.unknown(c) for c in cells}
    cs = cs_of(R)
    for _, _, _, lhs, rhs in hexagon_equations(cs, triples, triples2):
        prob.equate_vectors(lhs, rhs)
    if action_axiom:
        for _, _, lhs, rhs in action_equations(cs):
            prob.equate(lhs, rhs)
    return solve(prob)


def brute_force_crossed_braidings(ty: TYData, action: GActionData, modulus: int | None = None
                                  ) -> list[dict]:
    """Every mu_K-valued table satisfying HH1, HH2 and the action axiom for ``action``.

    ``modulus`` overrides K; the field of ``ty`` must contain mu_K.
    """
    _check_bound(ty)
    sols, _ = _braiding_search(ty, lambda R: CrossedStructure(action, ty.degree, R),
                               braiding_cells(ty), action_axiom=True, modulus=modulus)
    return sols


def brute_force_braidings(ty: TYData, modulus: int | None = None) -> list[dict]:
    """Every mu_K-valued table satisfying the ordinary hexagons H1, H2."""
    _check_bound(ty)
    sols, _ = _braiding_search(ty, lambda R: ordinary(ty.category, R), braiding_cells(ty),
                               modulus=modulus)
    return sols


def brute_force_relative_braidings(ty: TYData) -> list[dict]:
    """Every mu_K-valued family c_{a,x} satisfying H1 on (a, x, y) and H2 on (a, b, x)."""
    _check_bound(ty)
    A = set(ty.group.elements())
    cells = [c for c in braiding_cells(ty) if c[0] in A]
    t1, t2 = relative_triples(ty)
    sols, _ = _braiding_search(ty, lambda R: ordinary(ty.category, R), cells, t1, t2)
    return sols


def brute_force_twists(ty: TYData, R: Mapping, modulus: int | None = None) -> list[dict]:
    """Every mu_K-valued family theta satisfying Tw1-Tw3 and the ribbon condition."""
    prob = Problem(ty.field, modulus or search_modulus(ty))
    theta = {x: prob.unknown(x) for x in ty.simples}
    for _, _, lhs, rhs in twist_equations(ty, R, theta):
        prob.equate(lhs, rhs)
    sols, _ = solve(prob)
    return sols


def solution_keys(ty: TYData, sols: list[dict]) -> set:
    return {table_key(ty, s) for s in sols}


# -- equivalences ---------------------------------------------------------------


def functor_F(ty: TYData, f: Hom) -> MonFunctor:
    """The strict autoequivalence F_f: a -> f(a), m -> m (needs f in Aut(A, chi))."""
    perm = {a: f(a) for a in ty.group.elements()}
    perm[M] = M
    return MonFunctor(ty.category, perm, dict(identity_functor(ty.category).tensorator))


def transport_table(ty: TYData, f: Hom, R: dict) -> dict:
    """The braiding R' with F_f(c_{x,y}) = c'_{F x, F y}, i.e. R'(Fx, Fy; Fs) = R(x, y; s)."""
    F = functor_F(ty, f)
    return {(F(x), F(y), F(s)): v for (x, y, s), v in R.items()}


def equivalence_classes(ty: TYData, items: list[CrossedBraiding]) -> list[list[int]]:
    """Partition of ``items`` (indices) by the (q-orbit, alpha) invariant.

    Every pair placed together is also witnessed by an explicit F_f carrying
    one table onto the other; a disagreement raises.
    """
    auts = aut_preserving(ty.group, ty.chi)
    forms = []
    for cb in items:
        if all(cb.q.values != q.values for q in forms):
            forms.append(cb.q)
    orbit_of = {}
    for k, part in enumerate(orbits(forms, auts)):
        for q in part:
            orbit_of[q.values] = k
    groups: dict = {}
    for i, cb in enumerate(items):
        groups.setdefault((orbit_of[cb.q.values], cb.alpha), []).append(i)
    classes = list(groups.values())
    keys = [cb.key() for cb in items]
    for cls in classes:
        for i in cls:
            for j in cls:
                if not any(table_key(ty, transport_table(ty, f, items[i].table())) == keys[j]
                           for f in auts):
                    raise ArithmeticError("orbit invariant and functor transport disagree")
    # and no functor joins two different classes
    where = {i: k for k, cls in enumerate(classes) for i in cls}
    index = {key: i for i, key in enumerate(keys)}
    for i, cb in enumerate(items):
        for f in auts:
            j = index.get(table_key(ty, transport_table(ty, f, cb.table())))
            if j is not None and where[j] != where[i]:
                raise ArithmeticError("functor transport joins two invariant classes")
    return classes


# -- Ising --------------------------------------------------------------------------

# the alpha values displayed for the Ising example, as phases: e^{2 pi i/8} for q_i
# and e^{3 pi i/8} for q_{-i}
ISING_DISPLAYED_ALPHA = {Fraction(1, 4): Fraction(1, 8), Fraction(3, 4): Fraction(3, 16)}


def ising_instances() -> list[TYData]:
    A = AbGroup((2,))
    chi = Bicharacter(A, ((Fraction(1, 2),),))
    return [make_ty(A, chi, +1), make_ty(A, chi, -1)]


def _phase_json(r: Fraction) -> dict:
    return {"order": r.denominator, "exp": r.numerator}


def ising_report() -> dict:
    """Both Ising categories, their braidings and ribbons, every check recorded.

    The ``alpha_discrepancy`` block compares the displayed alpha values with
    the computed square roots of tau sum q; it reports and does not assert.
    """
    cats = []
    totals = {"fusion": 0, "braided": 0, "ribbon": 0}
    discrepancy = []
    for ty in ising_instances():
        penta = pentagon_check(ty)
        strict, other = z2_actions(ty)
        entries = []
        for cb in braidings(ty):
            R = cb.table()
            crossed = verify_crossed_braiding(ty, strict, R).holds
            hexes = hexagon_report(ordinary(ty.category, R)).holds
            tws = twists(ty, cb)
            entries.append({
                "q": cb.q.to_json(),
                "alpha": to_json(cb.alpha),
                "crossed_hexagons": crossed,
                "ordinary_hexagons": hexes,
                "twists": [{"theta": {str(k): to_json(v) for k, v in tw.values(ty).items()},
                            "checks": not twist_failures(ty, R, tw.values(ty))} for tw in tws],
            })
            totals["ribbon"] += len(tws)
        totals["fusion"] += int(penta.holds)
        totals["braided"] += len(entries)
        classes = equivalence_classes(ty, braidings(ty))
        for q in quadratic_forms_with(ty.chi):
            psi = q.values[1]
            target = ty.tau * gauss_sum(q, ty.field)
            shown = ISING_DISPLAYED_ALPHA[psi]
            shown_sq = ty.field.from_phase(2 * shown)
            discrepancy.append({
                "tau_sign": ty.tau_sign,
                "q_psi": _phase_json(psi),
                "alpha_squared": to_json(target),
                "computed_alpha": sorted((to_json(a) for a in alphas_for(ty, q)),
                                         key=lambda d: (d["order"], d["exp"])),
                "displayed_alpha": _phase_json(shown),
                "displayed_alpha_squares_correctly": shown_sq == target,
            })
        cats.append({
            "label": ty.label(),
            "tau_sign": ty.tau_sign,
            "pentagon": penta.holds,
            "strict_action_valid": check_action(strict).holds,
            "nonstrict_action_valid": check_action(other).holds,
            "actions_inequivalent": actions_inequivalent(ty),
            "braidings": entries,
            "equivalence_classes": len(classes),
        })
    return {"categories": cats, "totals": totals, "alpha_discrepancy": discrepancy}


__all__ = [
    "ALPHA_MAX_ORDER",
    "CrossedBraiding",
    "CrossedReport",
    "M",
    "PentagonReport",
    "RelBraiding",
    "TYData",
    "Twist",
    "actions_inequivalent",
    "alphas_for",
    "braiding_cells",
    "braidings",
    "brute_force_braidings",
    "brute_force_crossed_braidings",
    "brute_force_relative_braidings",
    "brute_force_twists",
    "conductor_for",
    "crossed_braidings",
    "crossed_structure",
    "equivalence_classes",
    "functor_F",
    "ising_instances",
    "ising_report",
    "make_ty",
    "mutate_mmm",
    "pentagon_check",
    "relative_braidings",
    "relative_hexagons_hold",
    "relative_triples",
    "search_modulus",
    "solution_keys",
    "table_key",
    "transport_table",
    "ty_fusion",
    "twist_equations",
    "twist_failures",
    "twists",
    "verify_crossed_braiding",
    "z2_actions",
]
