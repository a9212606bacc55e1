"""Exact arithmetic in cyclotomic fields Q(zeta_N).

Elements are stored in the power basis 1, x, ..., x^(phi(N)-1) modulo the
N-th cyclotomic polynomial, as an integer numerator vector over a single
positive denominator.  Because Phi_N is monic with integer coefficients the
reduction never leaves the integers, which keeps multiplication cheap.

>>> K = cyclotomic_field(8)
>>> i = K.root(4, 1)
>>> i * i == -1
True
>>> sqrt_of_natural(K, 2) ** 2 == 2
True
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd, lcm
from numbers import Rational

__all__ = [
    "CycField",
    "CycNumber",
    "CyclotomicError",
    "cyclotomic_field",
    "cyclotomic_polynomial",
    "root_of_unity",
    "sqrt_of_natural",
    "square_roots_unitary",
    "lift",
    "common_field",
]


class CyclotomicError(ValueError):
    """Raised for conductor mismatches, missing roots and division by zero."""


def _divisors(n: int) -> list[int]:
    return [d for d in range(1, n + 1) if n % d == 0]


def _poly_divexact(num: list[int], den: list[int]) -> list[int]:
    """Exact division of integer polynomials (lowest degree first), den monic."""
    num = list(num)
    out = [0] * (len(num) - len(den) + 1)
    for k in range(len(out) - 1, -1, -1):
        c = num[k + len(den) - 1]
        out[k] = c
        if c:
            for j, d in enumerate(den):
                num[k + j] -= c * d
    if any(num[: len(den) - 1]):
        raise ArithmeticError("inexact polynomial division")
    return out


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> tuple[int, ...]:
    """Coefficients of Phi_n, lowest degree first."""
    if n < 1:
        raise CyclotomicError(f"conductor must be positive, got {n}")
    poly = [-1] + [0] * (n - 1) + [1]
    for d in _divisors(n)[:-1]:
        poly = _poly_divexact(poly, list(cyclotomic_polynomial(d)))
    return tuple(poly)


class CycField:
    """The field Q(zeta_N).  Use :func:`cyclotomic_field` to get cached instances."""

    def __init__(self, conductor: int):
        if conductor < 1:
            raise CyclotomicError(f"conductor must be positive, got {conductor}")
        self.conductor = conductor
        self.minimal_poly = cyclotomic_polynomial(conductor)
        self.degree = len(self.minimal_poly) - 1
        # x^k mod Phi_N for k < 2*degree, as integer vectors
        deg = self.degree
        red = []
        vec = [1] + [0] * (deg - 1) if deg else []
        for _ in range(2 * max(deg, 1)):
            red.append(tuple(vec))
            # multiply by x
            top = vec[-1] if deg else 0
            vec = [0] + vec[:-1]
            if top:
                for j in range(deg):
                    vec[j] -= top * self.minimal_poly[j]
        self._xpow = red
        self._roots: dict[int, CycNumber] | None = None
        self._root_index: dict[tuple, int] | None = None

    def __repr__(self) -> str:
        return f"CycField({self.conductor})"

    def __reduce__(self):
        return (cyclotomic_field, (self.conductor,))

    # -- construction helpers -------------------------------------------------

    def _make(self, nums, den=1) -> CycNumber:
        return CycNumber._from_ints(self, tuple(nums), den)

    def zero(self) -> CycNumber:
        return self._make([0] * self.degree)

    def one(self) -> CycNumber:
        return self.from_rational(1)

    def from_rational(self, r) -> CycNumber:
        r = Fraction(r)
        nums = [0] * self.degree
        nums[0] = r.numerator
        return self._make(nums, r.denominator)

    def from_coeffs(self, coeffs) -> CycNumber:
        """Element sum coeffs[k] * zeta_N^k; any length, reduced canonically."""
        fracs = [Fraction(c) for c in coeffs]
        den = lcm(*(f.denominator for f in fracs)) if fracs else 1
        ints = [f.numerator * (den // f.denominator) for f in fracs]
        return self._make(self._reduce_long(ints), den)

    def _reduce_long(self, ints: list[int]) -> list[int]:
        deg = self.degree
        n = self.conductor
        # fold exponents mod N first so the table stays small
        folded = [0] * n
        for k, c in enumerate(ints):
            folded[k % n] += c
        out = [0] * deg
        for k, c in enumerate(folded):
            if not c:
                continue
            if k < deg:
                out[k] += c
            else:
                vec = self._xpow_any(k)
                for j in range(deg):
                    out[j] += c * vec[j]
        return out

    @lru_cache(maxsize=None)
    def _xpow_any(self, k: int) -> tuple[int, ...]:
        k %= self.conductor
        if k < len(self._xpow):
            return self._xpow[k]
        half = self._xpow_any(k // 2)
        sq = self._mul_ints(half, half)
        if k % 2:
            sq = self._mul_ints(sq, self._xpow[1])
        return tuple(sq)

    def _mul_ints(self, a, b) -> list[int]:
        deg = self.degree
        prod_ = [0] * (2 * deg - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        prod_[i + j] += x * y
        out = list(prod_[:deg])
        for k in range(deg, 2 * deg - 1):
            c = prod_[k]
            if c:
                vec = self._xpow[k]
                for j in range(deg):
                    out[j] += c * vec[j]
        return out

    def zeta_power(self, k: int) -> CycNumber:
        """zeta_N ** k."""
        return self._make(self._xpow_any(k % self.conductor))

    def root(self, order: int, exponent: int) -> CycNumber:
        """zeta_order ** exponent; ``order`` must divide the conductor."""
        if order < 1 or self.conductor % order:
            raise CyclotomicError(
                f"root of order {order} is not in Q(zeta_{self.conductor}); "
                f"lift to a conductor divisible by {order}"
            )
        return self.zeta_power((self.conductor // order) * exponent)

    def from_phase(self, phase) -> CycNumber:
        """exp(2 pi i * phase) for a rational phase."""
        phase = Fraction(phase) % 1
        d = phase.denominator
        if self.conductor % d == 0:
            return self.zeta_power((self.conductor // d) * phase.numerator)
        if self.root_order % d:
            raise CyclotomicError(
                f"exp(2 pi i {phase}) is not in Q(zeta_{self.conductor}); "
                f"lift to a conductor divisible by {d}"
            )
        return self._root((self.root_order // d) * phase.numerator)

    def contains_phase(self, phase) -> bool:
        return self.root_order % (Fraction(phase) % 1).denominator == 0

    # -- root-of-unity table ---------------------------------------------------

    @property
    def root_order(self) -> int:
        """Order of the group of roots of unity in this field."""
        return lcm(2, self.conductor)

    def _root(self, k: int) -> CycNumber:
        n = self.conductor
        if n % 2 == 0:
            return self.zeta_power(k)
        # N odd: zeta_{2N} = -zeta_N^((N+1)/2)
        z = self.zeta_power(k * ((n + 1) // 2))
        return -z if k % 2 else z

    def _build_roots(self) -> None:
        roots = {k: self._root(k) for k in range(self.root_order)}
        self._roots = roots
        self._root_index = {z._key(): k for k, z in roots.items()}

    def root_exponent(self, z: CycNumber) -> Fraction | None:
        """Phase r with z = exp(2 pi i r) if z is a root of unity, else None."""
        if self._root_index is None:
            self._build_roots()
        k = self._root_index.get(z._key())
        if k is None:
            return None
        return Fraction(k, self.root_order)


@lru_cache(maxsize=None)
def cyclotomic_field(conductor: int) -> CycField:
    return CycField(conductor)


class CycNumber:
    """An exact element of Q(zeta_N).  Immutable and hashable."""

    __slots__ = ("field", "nums", "den", "_hash")

    def __init__(self, field: CycField, coeffs):
        other = field.from_coeffs(coeffs)
        self.field = field
        self.nums = other.nums
        self.den = other.den
        self._hash = None

    @classmethod
    def _from_ints(cls, field, nums, den) -> CycNumber:
        if den < 0:
            nums = tuple(-x for x in nums)
            den = -den
        g = den
        for x in nums:
            if g == 1:
                break
            g = gcd(g, x)
        if g > 1:
            nums = tuple(x // g for x in nums)
            den //= g
        if not any(nums):
            den = 1
        obj = object.__new__(cls)
        obj.field = field
        obj.nums = tuple(nums)
        obj.den = den
        obj._hash = None
        return obj

    # -- views -----------------------------------------------------------------

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(x, self.den) for x in self.nums)

    @property
    def conductor(self) -> int:
        return self.field.conductor

    def _key(self):
        return (self.nums, self.den)

    def is_zero(self) -> bool:
        return not any(self.nums)

    def is_rational(self) -> bool:
        return not any(self.nums[1:])

    def to_fraction(self) -> Fraction:
        if not self.is_rational():
            raise CyclotomicError(f"{self!r} is not rational")
        return Fraction(self.nums[0] if self.nums else 0, self.den)

    def root_exponent(self) -> Fraction | None:
        return self.field.root_exponent(self)

    def __complex__(self) -> complex:
        import cmath

        n = self.field.conductor
        z = cmath.exp(2j * cmath.pi / n)
        return sum(c * z**k for k, c in enumerate(self.nums)) / self.den

    def __repr__(self) -> str:
        r = self.root_exponent()
        if r is not None:
            return f"zeta({r.denominator})^{r.numerator}"
        terms = []
        for k, c in enumerate(self.coeffs):
            if c:
                terms.append(f"{c}" if k == 0 else f"{c}*z^{k}")
        body = " + ".join(terms) if terms else "0"
        return f"<{body} in Q(z_{self.conductor})>"

    # -- coercion --------------------------------------------------------------

    def _coerce(self, other) -> CycNumber:
        if isinstance(other, CycNumber):
            if other.field is not self.field:
                raise CyclotomicError(
                    f"conductor mismatch: {self.conductor} vs {other.conductor}; lift first"
                )
            return other
        if isinstance(other, (int, Rational)):
            return self.field.from_rational(other)
        return NotImplemented

    # -- arithmetic ------------------------------------------------------------

    def __eq__(self, other) -> bool:
        if isinstance(other, CycNumber):
            if other.field is not self.field:
                raise CyclotomicError(
                    f"conductor mismatch: {self.conductor} vs {other.conductor}; lift first"
                )
            return self.nums == other.nums and self.den == other.den
        if isinstance(other, (int, Rational)):
            return self.is_rational() and self.to_fraction() == other
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.field.conductor, self.nums, self.den))
        return self._hash

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        d1, d2 = self.den, other.den
        if d1 == d2:
            nums = [a + b for a, b in zip(self.nums, other.nums)]
            return CycNumber._from_ints(self.field, nums, d1)
        nums = [a * d2 + b * d1 for a, b in zip(self.nums, other.nums)]
        return CycNumber._from_ints(self.field, nums, d1 * d2)

    __radd__ = __add__

    def __neg__(self):
        return CycNumber._from_ints(self.field, [-a for a in self.nums], self.den)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other - self

    def __mul__(self, other):
        if isinstance(other, (int, Rational)) and not isinstance(other, bool):
            f = Fraction(other)
            nums = [a * f.numerator for a in self.nums]
            return CycNumber._from_ints(self.field, nums, self.den * f.denominator)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        nums = self.field._mul_ints(self.nums, other.nums)
        return CycNumber._from_ints(self.field, nums, self.den * other.den)

    __rmul__ = __mul__

    def galois(self, k: int) -> CycNumber:
        """Image under the automorphism zeta_N -> zeta_N^k, gcd(k, N) = 1."""
        n = self.field.conductor
        if gcd(k, n) != 1:
            raise CyclotomicError(f"{k} is not a unit mod {n}")
        long = [0] * n
        for j, c in enumerate(self.nums):
            long[(j * k) % n] += c
        return CycNumber._from_ints(self.field, self.field._reduce_long(long), self.den)

    def conj(self) -> CycNumber:
        """Complex conjugation, zeta_N -> zeta_N^-1."""
        return self.galois(-1)

    def norm(self) -> Fraction:
        """Field norm down to Q."""
        n = self.field.conductor
        acc = self
        for k in range(2, n):
            if gcd(k, n) == 1:
                acc = acc * self.galois(k)
        return acc.to_fraction()

    def inv(self) -> CycNumber:
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero in a cyclotomic field")
        r = self.root_exponent()
        if r is not None:
            return self.field.from_phase(-r)
        n = self.field.conductor
        acc = self.field.one()
        for k in range(2, n):
            if gcd(k, n) == 1:
                acc = acc * self.galois(k)
        nrm = (acc * self).to_fraction()
        return acc * (1 / nrm)

    def __truediv__(self, other):
        if isinstance(other, (int, Rational)) and not isinstance(other, bool):
            if other == 0:
                raise ZeroDivisionError("division by zero")
            return self * (1 / Fraction(other))
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inv()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other * self.inv()

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inv() ** (-k)
        r = self.root_exponent()
        if r is not None:
            return self.field.from_phase(r * k)
        result = self.field.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __bool__(self) -> bool:
        return not self.is_zero()


# -- module-level operations --------------------------------------------------


def root_of_unity(field: CycField, order: int, exponent: int) -> CycNumber:
    """zeta_order ** exponent inside ``field``."""
    return field.root(order, exponent)


def sqrt_of_natural(field: CycField, n: int) -> CycNumber:
    """Positive square root of ``n``, built from a quadratic Gauss sum.

    Uses sum_{x mod 4n} zeta_{4n}^{x^2} = (1 + i) * 2 * sqrt(n); requires 4n | N.
    """
    if n < 1:
        raise CyclotomicError(f"expected a positive integer, got {n}")
    if field.conductor % (4 * n):
        raise CyclotomicError(
            f"sqrt({n}) needs a conductor divisible by {4 * n}, field has {field.conductor}"
        )
    gauss = field.zero()
    for x in range(4 * n):
        gauss = gauss + field.root(4 * n, x * x)
    i = field.root(4, 1)
    s = gauss * (1 - i) * Fraction(1, 4)
    if s * s != n:
        raise ArithmeticError(f"Gauss sum did not produce sqrt({n})")
    return s


def square_roots_unitary(z: CycNumber, max_order: int) -> list[CycNumber]:
    """Both square roots of a root of unity ``z``, if they lie in z's field.

    Raises when ``z`` is not a root of unity of order <= max_order.  Returns an
    empty list when the roots exist only in a larger cyclotomic field.
    """
    r = z.root_exponent()
    if r is None or r.denominator > max_order:
        raise CyclotomicError(
            f"{z!r} is not a root of unity of order <= {max_order}; enlarge the conductor"
        )
    half = r / 2
    if not z.field.contains_phase(half):
        return []
    u = z.field.from_phase(half)
    return [u, -u]


def lift(x: CycNumber, new_conductor: int) -> CycNumber:
    """Image of x under Q(zeta_N) -> Q(zeta_M), N | M."""
    n = x.conductor
    if new_conductor % n:
        raise CyclotomicError(f"cannot lift from conductor {n} to {new_conductor}")
    target = cyclotomic_field(new_conductor)
    step = new_conductor // n
    long = [0] * new_conductor
    for j, c in enumerate(x.nums):
        long[(j * step) % new_conductor] += c
    return CycNumber._from_ints(target, target._reduce_long(long), x.den)


def common_field(*conductors: int) -> CycField:
    return cyclotomic_field(lcm(*conductors))


def to_json(x: CycNumber) -> dict:
    r = x.root_exponent()
    if r is not None:
        return {"order": r.denominator, "exp": r.numerator}
    return {"conductor": x.conductor, "coeffs": [str(c) for c in x.coeffs]}


def from_json(obj: dict, field: CycField | None = None) -> CycNumber:
    if "order" in obj:
        if field is None:
            field = cyclotomic_field(lcm(2, int(obj["order"])))
        return field.from_phase(Fraction(int(obj["exp"]), int(obj["order"])))
    x = cyclotomic_field(int(obj["conductor"])).from_coeffs(Fraction(c) for c in obj["coeffs"])
    if field is not None and field is not x.field:
        x = lift(x, field.conductor)
    return x
