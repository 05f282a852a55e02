"""Exact arithmetic in cyclotomic fields Q(zeta_k).

An element is stored as an integer numerator vector over the power basis
1, zeta, ..., zeta^(phi(k)-1) together with a positive common denominator.
The representation is reduced (gcd of all numerators and the denominator is
1), so equality and hashing are coefficient-wise.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import cache
from numbers import Rational
from typing import Iterable, Sequence


class FieldMismatchError(ValueError):
    """Operands live in cyclotomic fields of different orders."""


def _exact_div(num: list[int], den: Sequence[int]) -> list[int]:
    # den is monic, coefficients low -> high
    num = list(num)
    dn = len(den) - 1
    quot = [0] * (len(num) - dn)
    for i in range(len(num) - 1, dn - 1, -1):
        c = num[i]
        if c:
            quot[i - dn] = c
            for j, dj in enumerate(den):
                num[i - dn + j] -= c * dj
    if any(num):
        raise ArithmeticError("inexact polynomial division")
    return quot


@cache
def cyclotomic_polynomial(k: int) -> tuple[int, ...]:
    """Integer coefficients of Phi_k, lowest degree first.

    >>> cyclotomic_polynomial(4)
    (1, 0, 1)
    """
    if k < 1:
        raise ValueError(f"cyclotomic order must be >= 1, got {k}")
    poly = [-1] + [0] * (k - 1) + [1]
    for d in range(1, k):
        if k % d == 0:
            poly = _exact_div(poly, cyclotomic_polynomial(d))
    return tuple(poly)


# -- polynomial helpers over Q (lists of Fraction, low -> high) ------------

def _trim(p: list) -> list:
    while p and p[-1] == 0:
        p.pop()
    return p


def _poly_divmod(a: list[Fraction], b: list[Fraction]) -> tuple[list, list]:
    a = list(a)
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 1)
    lead = b[-1]
    while len(a) >= len(b) and a:
        c = a[-1] / lead
        shift = len(a) - len(b)
        q[shift] = c
        for j, bj in enumerate(b):
            a[shift + j] -= c * bj
        _trim(a)
    return _trim(q), a


def _poly_mul(a: list, b: list) -> list:
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _poly_sub(a: list, b: list) -> list:
    n = max(len(a), len(b))
    out = [(a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0) for i in range(n)]
    return _trim([Fraction(v) for v in out])


class CyclotomicField:
    """The field Q(zeta_k). One instance per order."""

    _instances: dict[int, "CyclotomicField"] = {}

    def __new__(cls, order: int) -> "CyclotomicField":
        inst = cls._instances.get(order)
        if inst is None:
            inst = super().__new__(cls)
            inst._setup(order)
            cls._instances[order] = inst
        return inst

    def _setup(self, order: int) -> None:
        phi = cyclotomic_polynomial(order)
        n = len(phi) - 1
        self.order = order
        self.degree = n
        self.modulus = phi
        # x^j mod Phi for j < max(2n - 1, order)
        top = max(2 * n - 1, order, 1)
        powers = []
        cur = [0] * n
        cur[0] = 1
        for _ in range(top):
            powers.append(tuple(cur))
            carry = cur[-1]
            cur = [0] + cur[:-1]
            if carry:
                for t in range(n):
                    cur[t] -= carry * phi[t]
        self._powers = powers
        self._reduce = powers  # alias used by multiplication
        self.zero = Cyclotomic._new(self, (0,) * n, 1)
        self.one = Cyclotomic._new(self, (1,) + (0,) * (n - 1), 1)

    def __reduce__(self):
        return (CyclotomicField, (self.order,))

    def __repr__(self) -> str:
        return f"CyclotomicField({self.order})"

    def __call__(self, value) -> "Cyclotomic":
        """Build an element from an int, a Fraction, a coefficient list, or an element."""
        if isinstance(value, Cyclotomic):
            if value.field is not self:
                raise FieldMismatchError(f"element of Q(zeta_{value.field.order}) used in Q(zeta_{self.order})")
            return value
        if isinstance(value, Rational):
            return self.from_fraction(Fraction(value))
        return self.from_coeffs(value)

    def from_fraction(self, q: Fraction) -> "Cyclotomic":
        q = Fraction(q)
        return Cyclotomic._new(self, (q.numerator,) + (0,) * (self.degree - 1), q.denominator)

    def from_coeffs(self, coeffs: Iterable) -> "Cyclotomic":
        """Element sum_j c_j zeta^j; any number of coefficients, reduced mod Phi_k."""
        fr = [Fraction(c) for c in coeffs]
        den = math.lcm(*(c.denominator for c in fr)) if fr else 1
        ints = [c.numerator * (den // c.denominator) for c in fr]
        return Cyclotomic._from_long(self, ints, den)

    def root_of_unity(self, e: int) -> "Cyclotomic":
        """zeta^e."""
        return Cyclotomic._new(self, self._powers[e % self.order] if self.order > 1 else (1,), 1)

    @property
    def zeta(self) -> "Cyclotomic":
        return self.root_of_unity(1)

    def imaginary_unit(self) -> "Cyclotomic":
        if self.order % 4:
            raise ValueError(f"i is not in Q(zeta_{self.order})")
        return self.root_of_unity(self.order // 4)


class Cyclotomic:
    """Immutable element of Q(zeta_k)."""

    __slots__ = ("field", "num", "den", "_hash")

    field: CyclotomicField
    num: tuple[int, ...]
    den: int

    @classmethod
    def _new(cls, field: CyclotomicField, num: tuple[int, ...], den: int) -> "Cyclotomic":
        obj = object.__new__(cls)
        obj.field = field
        obj.num = num
        obj.den = den
        obj._hash = None
        return obj

    @classmethod
    def _normalized(cls, field, num, den) -> "Cyclotomic":
        if den != 1:
            if den < 0:
                num = [-v for v in num]
                den = -den
            g = math.gcd(den, *num)
            if g != 1:
                num = [v // g for v in num]
                den //= g
        return cls._new(field, tuple(num), den)

    @classmethod
    def _from_long(cls, field, ints: list[int], den: int) -> "Cyclotomic":
        n = field.degree
        res = list(ints[:n]) + [0] * max(0, n - len(ints))
        powers = field._powers
        for j in range(n, len(ints)):
            c = ints[j]
            if c:
                red = powers[j] if j < len(powers) else powers[j % field.order]
                for t in range(n):
                    res[t] += c * red[t]
        return cls._normalized(field, res, den)

    def __getstate__(self):
        return (self.field.order, self.num, self.den)

    def __setstate__(self, state):
        order, num, den = state
        self.field = CyclotomicField(order)
        self.num = num
        self.den = den
        self._hash = None

    # -- coercion ---------------------------------------------------------

    def _coerce(self, other) -> "Cyclotomic":
        if type(other) is Cyclotomic:
            if other.field is not self.field:
                raise FieldMismatchError(
                    f"mixed cyclotomic orders {self.field.order} and {other.field.order}")
            return other
        if isinstance(other, Rational):
            return self.field.from_fraction(Fraction(other))
        return NotImplemented

    # -- arithmetic -------------------------------------------------------

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if self.den == other.den:
            return Cyclotomic._normalized(self.field, [a + b for a, b in zip(self.num, other.num)], self.den)
        d1, d2 = self.den, other.den
        return Cyclotomic._normalized(
            self.field, [a * d2 + b * d1 for a, b in zip(self.num, other.num)], d1 * d2)

    __radd__ = __add__

    def __neg__(self):
        return Cyclotomic._new(self.field, tuple(-a for a in self.num), self.den)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if self.den == other.den:
            return Cyclotomic._normalized(self.field, [a - b for a, b in zip(self.num, other.num)], self.den)
        d1, d2 = self.den, other.den
        return Cyclotomic._normalized(
            self.field, [a * d2 - b * d1 for a, b in zip(self.num, other.num)], d1 * d2)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other - self

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        field = self.field
        a, b = self.num, other.num
        n = field.degree
        if n == 1:
            prod = [a[0] * b[0]]
        elif n == 2:
            # zeta^2 = r0 + r1 zeta
            r0, r1 = field._powers[2]
            a0, a1 = a
            b0, b1 = b
            top = a1 * b1
            prod = [a0 * b0 + top * r0, a0 * b1 + a1 * b0 + top * r1]
        else:
            conv = [0] * (2 * n - 1)
            for i, ai in enumerate(a):
                if ai:
                    for j, bj in enumerate(b):
                        conv[i + j] += ai * bj
            prod = conv[:n]
            powers = field._powers
            for j in range(n, 2 * n - 1):
                c = conv[j]
                if c:
                    red = powers[j]
                    for t in range(n):
                        prod[t] += c * red[t]
        return Cyclotomic._normalized(field, prod, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other * self.inverse()

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        result, base = self.field.one, self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def inverse(self) -> "Cyclotomic":
        """Multiplicative inverse by the extended Euclidean algorithm modulo Phi_k."""
        if not any(self.num):
            raise ZeroDivisionError("inverse of zero in a cyclotomic field")
        field = self.field
        if field.degree == 1:
            return field.from_fraction(Fraction(self.den, self.num[0]))
        r0 = [Fraction(c) for c in field.modulus]
        r1 = _trim([Fraction(c) for c in self.num])
        s0: list = []
        s1: list = [Fraction(1)]
        while r1:
            q, r = _poly_divmod(r0, r1)
            r0, r1 = r1, r
            s0, s1 = s1, _poly_sub(s0, _poly_mul(q, s1))
        # r0 is a nonzero constant since Phi_k is irreducible
        c = r0[0]
        return field.from_coeffs([x * self.den / c for x in s0])

    # -- comparisons ------------------------------------------------------

    def __eq__(self, other):
        if type(other) is Cyclotomic:
            return other.field is self.field and other.num == self.num and other.den == self.den
        if isinstance(other, Rational):
            return self.den == Fraction(other).denominator and self == self.field.from_fraction(Fraction(other))
        return NotImplemented

    def __hash__(self):
        h = self._hash
        if h is None:
            if self.field.degree == 1 or not any(self.num[1:]):
                h = hash(Fraction(self.num[0], self.den))
            else:
                h = hash((self.field.order, self.num, self.den))
            self._hash = h
        return h

    def __bool__(self) -> bool:
        return any(self.num)

    def is_zero(self) -> bool:
        return not any(self.num)

    def is_one(self) -> bool:
        return self.den == 1 and self.num[0] == 1 and not any(self.num[1:])

    def sort_key(self) -> tuple[Fraction, ...]:
        """Lexicographic key on the coefficient sequence (deterministic, no analytic meaning)."""
        return tuple(Fraction(a, self.den) for a in self.num)

    def coeffs(self) -> tuple[Fraction, ...]:
        return self.sort_key()

    def is_rational(self) -> bool:
        return not any(self.num[1:])

    def to_fraction(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return Fraction(self.num[0], self.den)

    # -- Galois structure (used by fast norm-based kernels) ---------------

    def galois(self, j: int) -> "Cyclotomic":
        """Image under zeta -> zeta^j (j coprime to the order)."""
        field = self.field
        k = field.order
        if math.gcd(j, k) != 1:
            raise ValueError(f"{j} is not a unit mod {k}")
        acc = [0] * field.degree
        for t, c in enumerate(self.num):
            if c:
                red = field._powers[(t * j) % k] if k > 1 else (1,)
                for s in range(field.degree):
                    acc[s] += c * red[s]
        return Cyclotomic._normalized(field, acc, self.den)

    def adjugate(self) -> "Cyclotomic":
        """Product of the nontrivial Galois conjugates; self * adjugate() is rational."""
        k = self.field.order
        out = self.field.one
        for j in range(2, k):
            if math.gcd(j, k) == 1:
                out = out * self.galois(j)
        return out

    def norm(self) -> Fraction:
        return (self * self.adjugate()).to_fraction()

    # -- formatting -------------------------------------------------------

    def format(self) -> str:
        """Comma-separated rational coefficients, the arrangement-file scalar format."""
        return ",".join(_fmt_fraction(c) for c in self.coeffs())

    def __str__(self) -> str:
        k = self.field.order
        sym = "i" if k == 4 else f"z{k}"
        terms = []
        for j, c in enumerate(self.coeffs()):
            if not c:
                continue
            if j == 0:
                terms.append(_fmt_fraction(c))
            else:
                mon = sym if j == 1 else f"{sym}^{j}"
                if c == 1:
                    terms.append(mon)
                elif c == -1:
                    terms.append("-" + mon)
                else:
                    terms.append(f"{_fmt_fraction(c)}*{mon}")
        if not terms:
            return "0"
        return "+".join(terms).replace("+-", "-")

    def __repr__(self) -> str:
        return f"Cyclotomic({self.field.order}, [{self.format()}])"


def _fmt_fraction(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def field_inverse(a: Cyclotomic) -> Cyclotomic:
    return a.inverse()


def parse_scalar(text: str, field: CyclotomicField) -> Cyclotomic:
    """Parse ``"1/2,0,3"`` (coefficients of powers of zeta) into an element."""
    parts = [p.strip() for p in text.split(",")]
    if not parts or any(not p for p in parts):
        raise ValueError(f"malformed cyclotomic scalar {text!r}")
    return field.from_coeffs(Fraction(p) for p in parts)
