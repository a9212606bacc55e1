"""Finite abelian groups in invariant-factor form.

Elements are plain tuples of residues ``(c_1, ..., c_k)`` with
``0 <= c_i < n_i``.  The group is written additively; reports switch to
multiplicative notation where the categorical data wants it.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from math import gcd, lcm, prod
from typing import Iterator, Sequence

Elem = tuple[int, ...]

DEFAULT_BOUND = 256
AUT_BOUND = 64


class GroupError(ValueError):
    pass


def invariant_factors(orders: Sequence[int]) -> tuple[int, ...]:
    """Invariant factors n_1 | n_2 | ... of the product of cyclic groups ``Z/o``."""
    primes: dict[int, list[int]] = {}
    for o in orders:
        if o < 1:
            raise GroupError(f"cyclic order must be positive, got {o}")
        n, p = o, 2
        while n > 1:
            if n % p == 0:
                pk = 1
                while n % p == 0:
                    n //= p
                    pk *= p
                primes.setdefault(p, []).append(pk)
            p += 1
    if not primes:
        return ()
    for v in primes.values():
        v.sort()
    length = max(len(v) for v in primes.values())
    factors = []
    for i in range(length):
        f = 1
        for v in primes.values():
            j = i - (length - len(v))
            if j >= 0:
                f *= v[j]
        factors.append(f)
    return tuple(factors)


@dataclass(frozen=True)
class AbGroup:
    """Finite abelian group Z/n_1 x ... x Z/n_k with n_1 | n_2 | ... | n_k."""

    invariant_factors: tuple[int, ...]
    bound: int = field(default=DEFAULT_BOUND, compare=False, repr=False)

    def __post_init__(self):
        facs = tuple(int(n) for n in self.invariant_factors)
        object.__setattr__(self, "invariant_factors", facs)
        for n in facs:
            if n < 2:
                raise GroupError(f"invariant factors must be >= 2, got {facs}")
        for a, b in zip(facs, facs[1:]):
            if b % a:
                raise GroupError(f"invariant factors must divide each other: {facs}")

    @classmethod
    def from_orders(cls, *orders: int) -> AbGroup:
        """Any product of cyclic groups, normalised to invariant factors."""
        return cls(invariant_factors(orders))

    @classmethod
    def parse(cls, text: str) -> AbGroup:
        """Group literal such as ``"2,2"`` or ``"4"``; ``"1"`` or ``""`` is trivial."""
        text = text.strip()
        if not text:
            return cls(())
        try:
            orders = [int(t) for t in re.split(r"[,x]", text)]
        except ValueError as exc:
            raise GroupError(f"malformed group literal {text!r}") from exc
        return cls.from_orders(*orders)

    def __str__(self) -> str:
        if not self.invariant_factors:
            return "1"
        return " x ".join(f"Z/{n}" for n in self.invariant_factors)

    @property
    def rank(self) -> int:
        return len(self.invariant_factors)

    @property
    def order(self) -> int:
        return prod(self.invariant_factors)

    @property
    def exponent(self) -> int:
        return self.invariant_factors[-1] if self.invariant_factors else 1

    @property
    def identity(self) -> Elem:
        return (0,) * self.rank

    def generators(self) -> list[Elem]:
        gens = []
        for i in range(self.rank):
            g = [0] * self.rank
            g[i] = 1
            gens.append(tuple(g))
        return gens

    def is_elementary_2(self) -> bool:
        return all(n == 2 for n in self.invariant_factors)

    # -- elements ---------------------------------------------------------

    def contains(self, x) -> bool:
        return (
            isinstance(x, tuple)
            and len(x) == self.rank
            and all(isinstance(c, int) and 0 <= c < n for c, n in zip(x, self.invariant_factors))
        )

    def check(self, x) -> Elem:
        if not self.contains(x):
            raise GroupError(f"{x!r} is not an element of {self}")
        return x

    def elem(self, *coords: int) -> Elem:
        """Element with the given coordinates reduced mod the invariant factors."""
        if len(coords) != self.rank:
            raise GroupError(f"{self} needs {self.rank} coordinates, got {len(coords)}")
        return tuple(c % n for c, n in zip(coords, self.invariant_factors))

    def add(self, x: Elem, y: Elem) -> Elem:
        self.check(x)
        self.check(y)
        return tuple((a + b) % n for a, b, n in zip(x, y, self.invariant_factors))

    def neg(self, x: Elem) -> Elem:
        self.check(x)
        return tuple((-a) % n for a, n in zip(x, self.invariant_factors))

    def sub(self, x: Elem, y: Elem) -> Elem:
        return self.add(x, self.neg(y))

    def mul(self, k: int, x: Elem) -> Elem:
        self.check(x)
        return tuple((k * a) % n for a, n in zip(x, self.invariant_factors))

    def order_of(self, x: Elem) -> int:
        self.check(x)
        return lcm(1, *(n // gcd(a, n) for a, n in zip(x, self.invariant_factors)))

    def eq(self, x: Elem, y: Elem) -> bool:
        return self.check(x) == self.check(y)

    def elements(self) -> list[Elem]:
        """All elements, identity first, lexicographic in the coordinates."""
        if self.order > self.bound:
            raise GroupError(f"|{self}| = {self.order} exceeds the enumeration bound {self.bound}")
        return self._elements

    enumerate = elements

    @cached_property
    def _elements(self) -> list[Elem]:
        return list(itertools.product(*(range(n) for n in self.invariant_factors)))

    @cached_property
    def index(self) -> dict[Elem, int]:
        return {x: i for i, x in enumerate(self.elements())}

    def __iter__(self) -> Iterator[Elem]:
        return iter(self.elements())

    def __len__(self) -> int:
        return self.order

    # -- duals, maps ----------------------------------------------------------

    def characters(self) -> list[Character]:
        return [Character(self, e) for e in self.elements()]

    def pairing(self, exps: Elem, x: Elem) -> Fraction:
        """Phase of the character with exponent vector ``exps`` at ``x``."""
        return sum(
            (Fraction(e * c, n) for e, c, n in zip(exps, x, self.invariant_factors)), Fraction(0)
        ) % 1

    def automorphisms(self) -> list[Hom]:
        """All automorphisms, by brute force over generator images."""
        if self.order > AUT_BOUND:
            raise GroupError(
                f"|{self}| = {self.order} exceeds the automorphism bound {AUT_BOUND}; "
                "restrict to generator images instead"
            )
        return [h for h in homs(self, self) if h.is_bijective()]


@dataclass(frozen=True)
class Character:
    """A character A -> mu, stored by its exponent vector (an element of A)."""

    group: AbGroup
    exps: Elem

    def phase(self, x: Elem) -> Fraction:
        return self.group.pairing(self.exps, x)

    def __call__(self, x: Elem) -> Fraction:
        return self.phase(x)

    def __mul__(self, other: Character) -> Character:
        return Character(self.group, self.group.add(self.exps, other.exps))

    def is_trivial(self) -> bool:
        return not any(self.exps)


@dataclass(frozen=True)
class Hom:
    """Homomorphism given by the images of the standard generators."""

    source: AbGroup
    target: AbGroup
    images: tuple[Elem, ...]

    def __call__(self, x: Elem) -> Elem:
        out = self.target.identity
        for c, img in zip(x, self.images):
            out = self.target.add(out, self.target.mul(c, img))
        return out

    @cached_property
    def table(self) -> dict[Elem, Elem]:
        return {x: self(x) for x in self.source.elements()}

    def is_bijective(self) -> bool:
        return self.source.order == self.target.order and len(set(self.table.values())) == self.target.order

    def compose(self, other: Hom) -> Hom:
        """self o other."""
        return Hom(other.source, self.target, tuple(self(img) for img in other.images))

    def inverse(self) -> Hom:
        back = {v: k for k, v in self.table.items()}
        return Hom(self.target, self.source, tuple(back[g] for g in self.target.generators()))

    def __hash__(self):
        return hash((self.source, self.target, self.images))


def homs(source: AbGroup, target: AbGroup) -> list[Hom]:
    """All homomorphisms source -> target.

    A generator of order n may go to any element whose order divides n.
    """
    tel = target.elements()
    options = []
    for n in source.invariant_factors:
        options.append([y for y in tel if n % target.order_of(y) == 0])
    return [Hom(source, target, imgs) for imgs in itertools.product(*options)]


def count_homs(source: AbGroup, target: AbGroup) -> int:
    return prod(gcd(n, m) for n in source.invariant_factors for m in target.invariant_factors)
