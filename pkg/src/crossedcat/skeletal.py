"""Skeletal multiplicity-free monoidal data.

A morphism between tensor products of simples is a vector in the basis of
fusion trees: a leaf is a simple label, and ``Node(l, r, out)`` is the summand
``out`` of ``l (x) r``.  Structure maps act on trees:

* the associator ``((P, Q)_e, R)_s -> sum_f F(p, q, r; s)[e, f] (P, (Q, R)_f)_s``,
* a (crossed) braiding at a node ``(P, Q)_s -> R(p, q; s) (g(Q), P)_s`` where
  ``g`` is the degree of ``p`` and ``g(Q)`` applies the action functor to the
  subtree,
* a monoidal functor ``T`` relabels a tree by its permutation and picks up
  ``J(l, r; out)^{-1}`` at every internal node, since its tensorator
  ``J: T(X) (x) T(Y) -> T(X (x) Y)`` is read backwards on a summand.

Coherence diagrams are checked by pushing every basis tree through both sides
and comparing the resulting vectors exactly.

Orientation: ``t2(g, h)`` is the natural isomorphism ``T(gh) -> T(g) T(h)``;
the composite ``T(g) T(h) -> T(gh)`` used by trivializations is its inverse.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Hashable, Iterable, Mapping, Sequence

from .abgroup import AbGroup, Elem, homs
from .cohomology import Cochain, is_cocycle, is_coboundary
from .cyclotomic import CycField, CycNumber
from .intlinalg import smith_normal_form

Label = Hashable


class CoherenceError(ValueError):
    pass


# -- fusion rules ------------------------------------------------------------------


@dataclass(frozen=True, eq=False)
class FusionData:
    """Multiplicity-free fusion rules on a finite set of simple labels."""

    simples: tuple[Label, ...]
    rules: Mapping[tuple[Label, Label], tuple[Label, ...]]
    unit: Label
    duals: Mapping[Label, Label]

    def __post_init__(self):
        idx = {x: i for i, x in enumerate(self.simples)}
        rules = {}
        for x in self.simples:
            for y in self.simples:
                outs = tuple(self.rules.get((x, y), ()))
                if len(set(outs)) != len(outs):
                    raise CoherenceError(f"{x} (x) {y} has a repeated summand")
                rules[x, y] = tuple(sorted(outs, key=idx.__getitem__))
        object.__setattr__(self, "rules", rules)
        object.__setattr__(self, "_index", idx)

    def fuse(self, x: Label, y: Label) -> tuple[Label, ...]:
        return self.rules[x, y]

    def admits(self, x: Label, y: Label, z: Label) -> bool:
        return z in self.rules[x, y]

    def dual(self, x: Label) -> Label:
        return self.duals[x]

    def index(self, x: Label) -> int:
        return self._index[x]

    def check(self) -> None:
        """Unit laws, duals and associativity of the fusion ring."""
        u = self.unit
        for x in self.simples:
            if self.fuse(u, x) != (x,) or self.fuse(x, u) != (x,):
                raise CoherenceError(f"unit law fails at {x}")
            if u not in self.fuse(x, self.dual(x)):
                raise CoherenceError(f"{self.dual(x)} is not dual to {x}")
        for x, y, z in itertools.product(self.simples, repeat=3):
            left: dict[Label, int] = {}
            for e in self.fuse(x, y):
                for w in self.fuse(e, z):
                    left[w] = left.get(w, 0) + 1
            right: dict[Label, int] = {}
            for f in self.fuse(y, z):
                for w in self.fuse(x, f):
                    right[w] = right.get(w, 0) + 1
            if left != right:
                raise CoherenceError(f"fusion is not associative on ({x}, {y}, {z})")


def pointed_fusion(A: AbGroup) -> FusionData:
    els = A.elements()
    return FusionData(
        tuple(els),
        {(a, b): (A.add(a, b),) for a in els for b in els},
        A.identity,
        {a: A.neg(a) for a in els},
    )


# -- trees -----------------------------------------------------------------------


class Node:
    """Internal vertex of a fusion tree: the summand ``out`` of ``l (x) r``."""

    __slots__ = ("l", "r", "out", "_hash")

    def __init__(self, l, r, out):
        self.l = l
        self.r = r
        self.out = out
        self._hash = hash((Node, l, r, out))

    def __eq__(self, other):
        return isinstance(other, Node) and self.out == other.out and self.l == other.l \
            and self.r == other.r

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"({self.l!r}, {self.r!r})_{self.out!r}"


def top(t) -> Label:
    return t.out if isinstance(t, Node) else t


Vector = dict  # tree -> CycNumber


def basis(fusion: FusionData, shape) -> list:
    """All fusion trees with the bracketing of ``shape`` (a tree whose outs are None)."""
    if not isinstance(shape, Node):
        return [shape]
    out = []
    for l in basis(fusion, shape.l):
        for r in basis(fusion, shape.r):
            for o in fusion.fuse(top(l), top(r)):
                out.append(Node(l, r, o))
    return out


def shape(*leaves, bracket: str) -> Node:
    """Shape from a bracket pattern such as ``"((01)2)"`` over the given leaves."""
    pos = 0

    def parse():
        nonlocal pos
        ch = bracket[pos]
        if ch == "(":
            pos += 1
            l = parse()
            r = parse()
            assert bracket[pos] == ")"
            pos += 1
            return Node(l, r, None)
        pos += 1
        return leaves[int(ch)]

    return parse()


def _add(vec: Vector, tree, c) -> None:
    cur = vec.get(tree)
    val = c if cur is None else cur + c
    if val.is_zero():
        vec.pop(tree, None)
    else:
        vec[tree] = val


def apply(vec: Vector, move: Callable, path: str = "") -> Vector:
    """Apply a tree move at ``path`` (a string over 'l'/'r') to every tree of ``vec``."""
    out: Vector = {}
    for tree, c in vec.items():
        for new, k in _at(tree, path, move):
            _add(out, new, c * k)
    return out


def _at(tree, path: str, move):
    if not path:
        return move(tree)
    if not isinstance(tree, Node):
        raise CoherenceError(f"path {path!r} leaves the tree")
    if path[0] == "l":
        return [(Node(new, tree.r, tree.out), k) for new, k in _at(tree.l, path[1:], move)]
    return [(Node(tree.l, new, tree.out), k) for new, k in _at(tree.r, path[1:], move)]


def scale(vec: Vector, k) -> Vector:
    return {t: c * k for t, c in vec.items() if not (c * k).is_zero()}


def _invert_matrix(mat: list[list[CycNumber]]) -> list[list[CycNumber]]:
    n = len(mat)
    a = [row[:] for row in mat]
    one, zero = mat[0][0].field.one(), mat[0][0].field.zero()
    inv = [[one if i == j else zero for j in range(n)] for i in range(n)]
    for col in range(n):
        piv = next((r for r in range(col, n) if not a[r][col].is_zero()), None)
        if piv is None:
            raise CoherenceError("associator component is singular")
        a[col], a[piv] = a[piv], a[col]
        inv[col], inv[piv] = inv[piv], inv[col]
        p = a[col][col].inv()
        a[col] = [x * p for x in a[col]]
        inv[col] = [x * p for x in inv[col]]
        for r in range(n):
            if r != col and not a[r][col].is_zero():
                k = a[r][col]
                a[r] = [x - k * y for x, y in zip(a[r], a[col])]
                inv[r] = [x - k * y for x, y in zip(inv[r], inv[col])]
    return inv


# -- categories -------------------------------------------------------------------


class SkeletalCategory:
    """Fusion rules plus F-symbols ``F(x, y, z; w)[e, f]`` and duality scalars.

    ``assoc(x, y, z, w, e, f)`` is only called on admissible labels.
    ``ev[x]`` and ``coev[x]`` are the scalars of ``x* (x) x -> 1`` and
    ``1 -> x (x) x*`` on the unit summand.
    """

    def __init__(self, fusion: FusionData, field: CycField,
                 assoc: Callable[..., CycNumber],
                 ev: Mapping[Label, CycNumber] | None = None,
                 coev: Mapping[Label, CycNumber] | None = None,
                 overrides: Mapping[tuple, CycNumber] | None = None):
        self.fusion = fusion
        self.field = field
        self._assoc = assoc
        self.ev = dict(ev) if ev else {x: field.one() for x in fusion.simples}
        self.coev = dict(coev) if coev else {x: field.one() for x in fusion.simples}
        self.overrides = dict(overrides or {})
        self._F: dict = {}
        self._Finv: dict = {}

    def with_overrides(self, overrides: Mapping[tuple, CycNumber]) -> SkeletalCategory:
        """Copy with some F-symbols replaced (keys are ``(x, y, z, w, e, f)``)."""
        merged = dict(self.overrides)
        merged.update(overrides)
        return SkeletalCategory(self.fusion, self.field, self._assoc, self.ev, self.coev, merged)

    @property
    def simples(self):
        return self.fusion.simples

    def F(self, x, y, z, w, e, f) -> CycNumber:
        key = (x, y, z, w, e, f)
        val = self._F.get(key)
        if val is None:
            val = self.overrides.get(key)
            if val is None:
                val = self._assoc(x, y, z, w, e, f)
            self._F[key] = val
        return val

    def channels(self, x, y, z, w) -> tuple[list, list]:
        fu = self.fusion
        es = [e for e in fu.fuse(x, y) if fu.admits(e, z, w)]
        fs = [f for f in fu.fuse(y, z) if fu.admits(x, f, w)]
        return es, fs

    def F_inv(self, x, y, z, w, f, e) -> CycNumber:
        """Entry [f, e] of the inverse associator component."""
        key = (x, y, z, w)
        tab = self._Finv.get(key)
        if tab is None:
            es, fs = self.channels(x, y, z, w)
            if len(es) != len(fs):
                raise CoherenceError(f"associator block ({x},{y},{z};{w}) is not square")
            mat = [[self.F(x, y, z, w, e_, f_) for f_ in fs] for e_ in es]
            inv = _invert_matrix(mat)
            tab = {(f_, e_): inv[j][i] for j, f_ in enumerate(fs) for i, e_ in enumerate(es)}
            self._Finv[key] = tab
        return tab[f, e]

    # -- moves ---------------------------------------------------------------------

    def assoc(self, tree) -> list:
        """((P, Q)_e, R)_w -> sum_f F[e, f] (P, (Q, R)_f)_w."""
        if not (isinstance(tree, Node) and isinstance(tree.l, Node)):
            raise CoherenceError("associator needs a left-nested tree")
        P, Q, e = tree.l.l, tree.l.r, tree.l.out
        R, w = tree.r, tree.out
        x, y, z = top(P), top(Q), top(R)
        _, fs = self.channels(x, y, z, w)
        return [(Node(P, Node(Q, R, f), w), self.F(x, y, z, w, e, f)) for f in fs]

    def assoc_inv(self, tree) -> list:
        """(P, (Q, R)_f)_w -> sum_e F^{-1}[f, e] ((P, Q)_e, R)_w."""
        if not (isinstance(tree, Node) and isinstance(tree.r, Node)):
            raise CoherenceError("inverse associator needs a right-nested tree")
        P, Q, R, f = tree.l, tree.r.l, tree.r.r, tree.r.out
        w = tree.out
        x, y, z = top(P), top(Q), top(R)
        es, _ = self.channels(x, y, z, w)
        out = []
        for e in es:
            k = self.F_inv(x, y, z, w, f, e)
            if not k.is_zero():
                out.append((Node(Node(P, Q, e), R, w), k))
        return out

    # -- checks --------------------------------------------------------------------

    def check_normalized(self) -> list:
        """F-symbols with a unit argument must be 1."""
        u = self.fusion.unit
        bad = []
        for x, y in itertools.product(self.simples, repeat=2):
            for triple in ((u, x, y), (x, u, y), (x, y, u)):
                for w in self.simples:
                    es, fs = self.channels(*triple, w)
                    for e in es:
                        for f in fs:
                            if self.F(*triple, w, e, f) != 1:
                                bad.append(triple + (w, e, f))
        return bad

    def pentagon_failures(self, stop_after: int | None = None,
                          quadruples: Iterable | None = None) -> list[tuple]:
        """Quadruples (and root channels) where the pentagon fails."""
        failures = []
        quads = quadruples if quadruples is not None else itertools.product(self.simples, repeat=4)
        for a, b, c, d in quads:
            sh = shape(a, b, c, d, bracket="(((01)2)3)")
            for t in basis(self.fusion, sh):
                v = {t: self.field.one()}
                lhs = apply(apply(v, self.assoc), self.assoc)
                rhs = apply(apply(apply(v, self.assoc, "l"), self.assoc), self.assoc, "r")
                if lhs != rhs:
                    failures.append((a, b, c, d, t))
                    if stop_after is not None and len(failures) >= stop_after:
                        return failures
        return failures

    def zigzag(self, x) -> tuple[CycNumber, CycNumber]:
        """Scalars of the two snake composites on x and on x* (both 1 for valid duality)."""
        fu, u = self.fusion, self.fusion.unit
        xs = fu.dual(x)
        # x -> (x x*) x -> x (x* x) -> x
        first = self.coev[x] * self.F(x, xs, x, x, u, u) * self.ev[x]
        # x* -> x* (x x*) -> (x* x) x* -> x*
        second = self.coev[x] * self.F_inv(xs, x, xs, xs, u, u) * self.ev[x]
        return first, second

    def dual_scalar(self, x, lam: CycNumber) -> CycNumber:
        """The scalar of (lam id_x)^* on x*, computed through ev, coev and F^{-1}."""
        return lam * self.zigzag(x)[1]


# -- monoidal functors and natural isomorphisms ------------------------------------


@dataclass(frozen=True, eq=False)
class MonFunctor:
    """Permutation of simples plus tensorator scalars ``J(x, y; z)`` for z <= x (x) y.

    ``J(x, y; z)`` is the component of ``T(x) (x) T(y) -> T(x (x) y)`` on the summand z.
    """

    category: SkeletalCategory
    perm: Mapping[Label, Label]
    tensorator: Mapping[tuple[Label, Label, Label], CycNumber]

    def J(self, x, y, z) -> CycNumber:
        return self.tensorator[x, y, z]

    def __call__(self, x):
        return self.perm[x]

    def act(self, tree) -> tuple:
        """(T(tree), scalar) in the tree basis of the image."""
        if not isinstance(tree, Node):
            return self.perm[tree], self.category.field.one()
        l, kl = self.act(tree.l)
        r, kr = self.act(tree.r)
        k = kl * kr * self.J(top(tree.l), top(tree.r), tree.out).inv()
        return Node(l, r, self.perm[tree.out]), k

    def act_move(self, tree) -> list:
        t, k = self.act(tree)
        return [(t, k)]

    def is_strict(self) -> bool:
        return all(v == 1 for v in self.tensorator.values())

    def coherence_failures(self) -> list:
        """Triples where T(assoc) and assoc(T) disagree."""
        cat = self.category
        bad = []
        for x, y, z in itertools.product(cat.simples, repeat=3):
            for t in basis(cat.fusion, shape(x, y, z, bracket="((01)2)")):
                v = {t: cat.field.one()}
                lhs = apply(apply(v, cat.assoc), self.act_move)
                rhs = apply(apply(v, self.act_move), cat.assoc)
                if lhs != rhs:
                    bad.append((x, y, z, t))
        return bad

    def check(self) -> None:
        cat = self.category
        fu = cat.fusion
        if sorted(map(fu.index, self.perm.values())) != list(range(len(fu.simples))):
            raise CoherenceError("functor permutation is not a bijection of simples")
        if self.perm[fu.unit] != fu.unit:
            raise CoherenceError("functor does not fix the unit")
        for x, y in itertools.product(fu.simples, repeat=2):
            img = {self.perm[z] for z in fu.fuse(x, y)}
            if img != set(fu.fuse(self.perm[x], self.perm[y])):
                raise CoherenceError(f"functor does not preserve fusion at ({x}, {y})")
        bad = self.coherence_failures()
        if bad:
            raise CoherenceError(f"functor coherence fails at {bad[0][:3]}")


def identity_functor(cat: SkeletalCategory) -> MonFunctor:
    fu = cat.fusion
    one = cat.field.one()
    return MonFunctor(cat, {x: x for x in fu.simples},
                      {(x, y, z): one for x in fu.simples for y in fu.simples for z in fu.fuse(x, y)})


def compose_functors(F: MonFunctor, G: MonFunctor) -> MonFunctor:
    """F o G with J^{FG}(x, y; z) = J^F(Gx, Gy; Gz) J^G(x, y; z)."""
    if F.category is not G.category:
        raise CoherenceError("functors live on different categories")
    perm = {x: F.perm[G.perm[x]] for x in G.perm}
    ten = {(x, y, z): F.J(G.perm[x], G.perm[y], G.perm[z]) * G.J(x, y, z)
           for (x, y, z) in G.tensorator}
    return MonFunctor(F.category, perm, ten)


def transport(F: MonFunctor, gamma: Mapping[Label, CycNumber]) -> MonFunctor:
    """The unique tensorator on the same permutation making gamma: F -> H monoidal."""
    for x, g in gamma.items():
        if g.is_zero():
            raise CoherenceError(f"transport along a zero component at {x}")
    ten = {(x, y, z): gamma[z] * j * (gamma[x] * gamma[y]).inv()
           for (x, y, z), j in F.tensorator.items()}
    return MonFunctor(F.category, dict(F.perm), ten)


@dataclass(frozen=True, eq=False)
class NatIso:
    """Scalar components ``comps[x]: source(x) -> target(x)``."""

    source: MonFunctor
    target: MonFunctor
    comps: Mapping[Label, CycNumber]

    def failures(self) -> list:
        s, t = self.source, self.target
        if dict(s.perm) != dict(t.perm):
            return [("perm", None)]
        bad = []
        for (x, y, z), j in s.tensorator.items():
            if self.comps[z] * j != t.J(x, y, z) * self.comps[x] * self.comps[y]:
                bad.append((x, y, z))
        return bad

    def is_monoidal(self) -> bool:
        return not self.failures()


def functors_equal(F: MonFunctor, G: MonFunctor) -> bool:
    return dict(F.perm) == dict(G.perm) and all(
        F.tensorator[k] == G.tensorator[k] for k in F.tensorator)


# -- monoidal automorphisms of the identity -------------------------------------------


@dataclass(frozen=True, eq=False)
class MonIdAutos:
    """Aut_(x)(Id) as the character group of the universal grading group.

    ``degree[x]`` is the class of x in the universal grading group
    ``U = Z/d_1 x ... x Z/d_k``; the element ``u`` of ``group`` acts on x by the
    phase ``sum_i u_i degree[x]_i / d_i``.
    """

    fusion: FusionData
    group: AbGroup
    degree: Mapping[Label, Elem]

    def phase(self, u: Elem, x) -> Fraction:
        return self.group.pairing(u, self.degree[x])

    def scalars(self, u: Elem, field: CycField) -> dict:
        return {x: field.from_phase(self.phase(u, x)) for x in self.fusion.simples}

    def log(self, comps: Mapping[Label, CycNumber]) -> Elem:
        """The element u with the given components; raises if comps is not in the group."""
        phases = {}
        for x, c in comps.items():
            r = c.root_exponent()
            if r is None:
                raise CoherenceError(f"component {c!r} at {x} is not a root of unity")
            phases[x] = r
        for u in self.group.elements():
            if all(self.phase(u, x) == phases[x] for x in self.fusion.simples):
                return u
        raise CoherenceError("scalar family is not a monoidal automorphism of the identity")

    def brute_force_order(self, values: Sequence[Fraction]) -> int:
        """Count multiplicative functions simples -> ``values`` by exhaustion (oracle)."""
        fu = self.fusion
        others = [x for x in fu.simples if x != fu.unit]
        count = 0
        for vals in itertools.product(values, repeat=len(others)):
            lam = dict(zip(others, vals))
            lam[fu.unit] = Fraction(0)
            if all(lam[z] == (lam[x] + lam[y]) % 1
                   for x in fu.simples for y in fu.simples for z in fu.fuse(x, y)):
                count += 1
        return count


def monoidal_id_autos(fusion: FusionData) -> MonIdAutos:
    simples = fusion.simples
    col = {x: i for i, x in enumerate(simples)}
    rows = []
    unit = [0] * len(simples)
    unit[col[fusion.unit]] = 1
    rows.append(unit)
    seen = set()
    for x in simples:
        for y in simples:
            for z in fusion.fuse(x, y):
                r = [0] * len(simples)
                r[col[z]] += 1
                r[col[x]] -= 1
                r[col[y]] -= 1
                key = tuple(r)
                if any(key) and key not in seen:
                    seen.add(key)
                    rows.append(r)
    snf = smith_normal_form(rows, len(simples))
    diag = snf.diagonal + [0] * (len(simples) - len(snf.diagonal))
    if 0 in diag:
        raise CoherenceError("universal grading group is infinite; fusion graph not connected")
    keep = [i for i, d in enumerate(diag) if d > 1]
    group = AbGroup(tuple(diag[i] for i in keep))
    degree = {}
    for x in simples:
        coords = snf.V[col[x]]  # row e_x . V
        degree[x] = tuple(coords[i] % diag[i] for i in keep)
    return MonIdAutos(fusion, group, degree)


# -- group actions ----------------------------------------------------------------


@dataclass(frozen=True, eq=False)
class GActionData:
    """T: G -> Aut(C) with ``t2[g, h][x]`` the component of T(gh) -> T(g) T(h) at x."""

    category: SkeletalCategory
    group: AbGroup
    functors: Mapping[Elem, MonFunctor]
    t2: Mapping[tuple[Elem, Elem], Mapping[Label, CycNumber]]

    def T(self, g: Elem) -> MonFunctor:
        return self.functors[g]

    def t2_natiso(self, g: Elem, h: Elem) -> NatIso:
        G = self.group
        return NatIso(self.functors[G.add(g, h)],
                      compose_functors(self.functors[g], self.functors[h]), self.t2[g, h])


def trivial_action(cat: SkeletalCategory, G: AbGroup) -> GActionData:
    idf = identity_functor(cat)
    one = cat.field.one()
    els = G.elements()
    return GActionData(cat, G, {g: idf for g in els},
                       {(g, h): {x: one for x in cat.simples} for g in els for h in els})


@dataclass
class ActionReport:
    holds: bool
    failures: list = field(default_factory=list)


def check_action(act: GActionData) -> ActionReport:
    """Functor coherence, T(e) = Id, perm multiplicativity, monoidal t2 and the t2 square."""
    cat, G = act.category, act.group
    els = G.elements()
    e = G.identity
    fails: list = []
    for g in els:
        try:
            act.T(g).check()
        except CoherenceError as exc:
            fails.append(("functor", g, str(exc)))
    if not functors_equal(act.T(e), identity_functor(cat)):
        fails.append(("unit functor", e, "T(e) is not the identity"))
    for g, h in itertools.product(els, repeat=2):
        gh = G.add(g, h)
        comp = compose_functors(act.T(g), act.T(h))
        if dict(comp.perm) != dict(act.T(gh).perm):
            fails.append(("perm", (g, h), "T(g)T(h) and T(gh) permute differently"))
            continue
        bad = act.t2_natiso(g, h).failures()
        if bad:
            fails.append(("t2 monoidality", (g, h), bad[0]))
        if g == e or h == e:
            if any(c != 1 for c in act.t2[g, h].values()):
                fails.append(("t2 normalization", (g, h), "t2 with a unit argument is not 1"))
    for g, h, k in itertools.product(els, repeat=3):
        hk, gh = G.add(h, k), G.add(g, h)
        Tk = act.T(k)
        for x in cat.simples:
            lhs = act.t2[g, hk][x] * act.t2[h, k][x]
            rhs = act.t2[gh, k][x] * act.t2[g, h][Tk(x)]
            if lhs != rhs:
                fails.append(("t2 associativity", (g, h, k), x))
    return ActionReport(not fails, fails)


def natiso_to_identity_ok(T: MonFunctor, comps: Mapping[Label, CycNumber]) -> bool:
    """Is comps a monoidal isomorphism T -> Id (requires the identity permutation)?"""
    if any(T.perm[x] != x for x in T.perm):
        return False
    return NatIso(T, identity_functor(T.category), comps).is_monoidal()


def equivalent_actions(a: GActionData, b: GActionData, autos: MonIdAutos) -> list:
    """Intertwiners between two actions with the same functors, found by exhaustion.

    Families ``theta_g`` in Aut_(x)(Id) with
    ``theta_gh t2^a(g,h) = t2^b(g,h) theta_g theta_h`` componentwise.
    """
    G, cat = a.group, a.category
    els = G.elements()
    out = []
    for choice in itertools.product(autos.group.elements(), repeat=len(els)):
        theta = {g: autos.scalars(u, cat.field) for g, u in zip(els, choice)}
        if any(c != 1 for c in theta[G.identity].values()):
            continue
        ok = True
        for g, h in itertools.product(els, repeat=2):
            gh = G.add(g, h)
            for x in cat.simples:
                if theta[gh][x] * a.t2[g, h][x] != b.t2[g, h][x] * theta[g][x] * theta[h][x]:
                    ok = False
                    break
            if not ok:
                break
        if ok:
            out.append(choice)
    return out


# -- obstruction and trivializations ------------------------------------------------


def _check_choices(act: GActionData, choices: Mapping[Elem, Mapping[Label, CycNumber]]) -> None:
    for g in act.group.elements():
        T = act.T(g)
        if any(T.perm[x] != x for x in T.perm):
            raise CoherenceError(f"action not pointwise trivializable: T({g}) permutes simples")
        if not natiso_to_identity_ok(T, choices[g]):
            raise CoherenceError(f"choice at {g} is not a monoidal isomorphism T(g) -> Id")


def obstruction_components(act: GActionData, choices) -> dict:
    """b(g, h)_x = chi_gh,x t2(g, h)_x^{-1} chi_g,x^{-1} chi_h,x^{-1} as scalars."""
    G = act.group
    out = {}
    for g, h in itertools.product(G.elements(), repeat=2):
        gh = G.add(g, h)
        out[g, h] = {
            x: choices[gh][x] * (act.t2[g, h][x] * choices[g][x] * choices[h][x]).inv()
            for x in act.category.simples
        }
    return out


def obstruction_cocycle(act: GActionData, choices, autos: MonIdAutos | None = None) -> Cochain:
    """The 2-cocycle b in Z^2(G, Aut_(x)(Id)) attached to the choices chi_g: T(g) -> Id."""
    _check_choices(act, choices)
    if autos is None:
        autos = monoidal_id_autos(act.category.fusion)
    comps = obstruction_components(act, choices)
    G = act.group
    b = Cochain.from_function(2, G, autos.group, lambda g, h: autos.log(comps[g, h]))
    if not is_cocycle(b):
        raise ArithmeticError("obstruction is not a cocycle")
    return b


@dataclass(frozen=True, eq=False)
class Trivialization:
    """eta_g: T(g) -> Id with eta_g eta_h t2(g, h) = eta_gh componentwise."""

    action: GActionData
    etas: Mapping[Elem, Mapping[Label, CycNumber]]

    def failures(self) -> list:
        act = self.action
        G = act.group
        bad = []
        for g in G.elements():
            if not natiso_to_identity_ok(act.T(g), self.etas[g]):
                bad.append(("monoidal", g))
        for g, h in itertools.product(G.elements(), repeat=2):
            gh = G.add(g, h)
            for x in act.category.simples:
                if self.etas[g][x] * self.etas[h][x] * act.t2[g, h][x] != self.etas[gh][x]:
                    bad.append(("composition", (g, h), x))
        return bad

    def is_valid(self) -> bool:
        return not self.failures()

    def key(self) -> tuple:
        G = self.action.group
        cat = self.action.category
        return tuple(tuple(self.etas[g][x] for x in cat.simples) for g in G.elements())


def trivializations(act: GActionData, choices, autos: MonIdAutos | None = None) -> list[Trivialization]:
    """All trivializations: a primitive of b gives one, Hom(G, Aut_(x)(Id)) gives the rest."""
    if autos is None:
        autos = monoidal_id_autos(act.category.fusion)
    b = obstruction_cocycle(act, choices, autos)
    p = is_coboundary(b)
    if p is None:
        return []
    G, field_ = act.group, act.category.field
    out = []
    for phi in homs(G, autos.group):
        etas = {}
        for g in G.elements():
            u = autos.group.add(p(g), phi(g))
            lam = autos.scalars(u, field_)
            etas[g] = {x: lam[x] * choices[g][x] for x in act.category.simples}
        out.append(Trivialization(act, etas))
    return out


def trivializations_direct(act: GActionData, choices, autos: MonIdAutos | None = None
                           ) -> list[Trivialization]:
    """Oracle: every normalized u: G -> Aut_(x)(Id), keeping the valid u . chi."""
    if autos is None:
        autos = monoidal_id_autos(act.category.fusion)
    _check_choices(act, choices)
    G, field_ = act.group, act.category.field
    els = G.elements()
    out = []
    for us in itertools.product(autos.group.elements(), repeat=len(els) - 1):
        u = dict(zip(els[1:], us))
        u[G.identity] = autos.group.identity
        etas = {}
        for g in els:
            lam = autos.scalars(u[g], field_)
            etas[g] = {x: lam[x] * choices[g][x] for x in act.category.simples}
        t = Trivialization(act, etas)
        if t.is_valid():
            out.append(t)
    return out


# -- crossed braidings ------------------------------------------------------------


@dataclass(frozen=True, eq=False)
class CrossedStructure:
    """A G-grading of simples, an action and braiding scalars ``R(x, y; s)``.

    The braiding ``c_{x,y}: x (x) y -> g(y) (x) x`` for x of degree g acts on the
    summand s by ``R(x, y; s)``.  With the trivial group this is an ordinary
    braiding.
    """

    action: GActionData
    degree: Mapping[Label, Elem]
    R: Mapping[tuple[Label, Label, Label], CycNumber]

    @property
    def category(self) -> SkeletalCategory:
        return self.action.category

    def braid(self, tree) -> list:
        if not isinstance(tree, Node):
            raise CoherenceError("braiding needs a product")
        P, Q, s = tree.l, tree.r, tree.out
        g = self.degree[top(P)]
        gQ, k = self.action.T(g).act(Q)
        return [(Node(gQ, P, s), k * self.R[top(P), top(Q), s])]

    def t2_leaf(self, g: Elem, h: Elem):
        """Move applying t2(g, h) to a leaf."""
        def move(tree):
            return [(tree, self.action.t2[g, h][self._preimage(g, h, tree)])]
        return move

    def _preimage(self, g, h, label):
        T = self.action.T(self.action.group.add(g, h))
        for x, y in T.perm.items():
            if y == label:
                return x
        raise CoherenceError(f"{label} has no preimage")


@dataclass
class HexagonReport:
    holds: bool
    failures: list = field(default_factory=list)
    checked: int = 0


def hexagon_equations(cs: CrossedStructure, triples1: Iterable | None = None,
                      triples2: Iterable | None = None):
    """Yield ``(name, triple, tree, lhs, rhs)`` for HH1 and HH2 on every basis tree.

    HH1(x, y, z): c_{x, y z} read through associators equals
    (id (x) c_{x,z}) a (c_{x,y} (x) id) on ((x y) z).
    HH2(x, y, z): t2(g, h)_z c_{x y, z} read through inverse associators equals
    (c_{x,hz} (x) id) a^{-1} (id (x) c_{y,z}) on (x (y z)).
    With ``triples2`` omitted both hexagons run over ``triples1``.  The sides
    are vectors in the tree basis; their coefficients may be symbolic.
    """
    cat = cs.category
    one = cat.field.one()
    t1 = list(triples1) if triples1 is not None else list(itertools.product(cat.simples, repeat=3))
    t2 = list(triples2) if triples2 is not None else t1
    for x, y, z in t1:
        for t in basis(cat.fusion, shape(x, y, z, bracket="((01)2)")):
            v = {t: one}
            lhs = apply(apply(apply(v, cat.assoc), cs.braid), cat.assoc)
            rhs = apply(apply(apply(v, cs.braid, "l"), cat.assoc), cs.braid, "r")
            yield "HH1", (x, y, z), t, lhs, rhs
    for x, y, z in t2:
        g, h = cs.degree[x], cs.degree[y]
        for t in basis(cat.fusion, shape(x, y, z, bracket="(0(12))")):
            v = {t: one}
            lhs = apply(apply(apply(v, cat.assoc_inv), cs.braid), cat.assoc_inv)
            lhs = apply(lhs, cs.t2_leaf(g, h), "ll")
            rhs = apply(apply(apply(v, cs.braid, "r"), cat.assoc_inv), cs.braid, "l")
            yield "HH2", (x, y, z), t, lhs, rhs


def hexagon_report(cs: CrossedStructure, stop_after: int | None = None,
                   triples: Iterable | None = None, triples2: Iterable | None = None
                   ) -> HexagonReport:
    """HH1 and HH2 for every triple of simples (plain H1/H2 for the trivial action)."""
    fails = []
    checked = 0
    for name, trip, t, lhs, rhs in hexagon_equations(cs, triples, triples2):
        checked += 1
        if lhs != rhs:
            fails.append((name, trip, t))
            if stop_after is not None and len(fails) >= stop_after:
                break
    return HexagonReport(not fails, fails, checked)


def action_equations(cs: CrossedStructure):
    """Yield ``(g, (x, z, s), lhs, rhs)`` for the braiding-versus-action axiom.

    J^g(x,z;s) R(x,z;s) J^g(hz,x;s)^{-1} = R(gx,gz;gs) t2(g,h)_z / t2(h,g)_z, h = deg x.
    """
    act = cs.action
    cat = act.category
    for g in act.group.elements():
        T = act.T(g)
        for x, z in itertools.product(cat.simples, repeat=2):
            h = cs.degree[x]
            hz = act.T(h)(z)
            for s in cat.fusion.fuse(x, z):
                lhs = T.J(x, z, s) * cs.R[x, z, s] * T.J(hz, x, s).inv()
                rhs = cs.R[T(x), T(z), T(s)] * act.t2[g, h][z] * act.t2[h, g][z].inv()
                yield g, (x, z, s), lhs, rhs


def action_compatibility_failures(cs: CrossedStructure) -> list:
    """Grading compatibility and the braiding-versus-action axiom on every cell."""
    act = cs.action
    G, cat = act.group, act.category
    fu = cat.fusion
    bad = []
    for x, y in itertools.product(cat.simples, repeat=2):
        for z in fu.fuse(x, y):
            if cs.degree[z] != G.add(cs.degree[x], cs.degree[y]):
                bad.append(("grading", (x, y, z)))
    for g in G.elements():
        T = act.T(g)
        for x in cat.simples:
            if cs.degree[T(x)] != cs.degree[x]:
                bad.append(("action grading", g, x))
    for g, cell, lhs, rhs in action_equations(cs):
        if lhs != rhs:
            bad.append(("action", g, cell))
    return bad


def braiding_from_trivialization(cs: CrossedStructure, triv: Trivialization) -> dict:
    """R^eta(x, y; s) = eta(deg x)_y R(x, y; s)."""
    if triv.action is not cs.action:
        raise CoherenceError("trivialization belongs to a different action")
    return {(x, y, s): triv.etas[cs.degree[x]][y] * r for (x, y, s), r in cs.R.items()}


def ordinary(cat: SkeletalCategory, R: Mapping) -> CrossedStructure:
    """Wrap a braiding table as a crossed structure over the trivial group."""
    G = AbGroup(())
    return CrossedStructure(trivial_action(cat, G), {x: G.identity for x in cat.simples}, R)


__all__ = [
    "ActionReport",
    "CoherenceError",
    "CrossedStructure",
    "FusionData",
    "GActionData",
    "HexagonReport",
    "MonFunctor",
    "MonIdAutos",
    "NatIso",
    "Node",
    "SkeletalCategory",
    "Trivialization",
    "action_compatibility_failures",
    "action_equations",
    "apply",
    "basis",
    "braiding_from_trivialization",
    "check_action",
    "compose_functors",
    "equivalent_actions",
    "functors_equal",
    "hexagon_equations",
    "hexagon_report",
    "identity_functor",
    "monoidal_id_autos",
    "natiso_to_identity_ok",
    "obstruction_cocycle",
    "obstruction_components",
    "ordinary",
    "pointed_fusion",
    "shape",
    "top",
    "transport",
    "trivial_action",
    "trivializations",
    "trivializations_direct",
]
