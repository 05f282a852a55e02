"""Points and lines of the projective plane over a cyclotomic field."""

from __future__ import annotations

import math
from typing import Iterable, Sequence

from .cyclotomic import Cyclotomic, CyclotomicField, FieldMismatchError


class DegenerateInputError(ValueError):
    """Raised for coincident inputs where distinct ones are required."""


def _canonical(coords: Sequence[Cyclotomic]) -> tuple[Cyclotomic, ...]:
    for c in coords:
        if c:
            if c.is_one():
                return tuple(coords)
            inv = c.inverse()
            return tuple(x * inv for x in coords)
    raise DegenerateInputError("all coordinates are zero")


class _Triple:
    __slots__ = ("coords", "_hash")

    def __init__(self, coords: Iterable, field: CyclotomicField | None = None):
        vals = list(coords)
        if len(vals) != 3:
            raise ValueError("projective plane objects need exactly 3 coordinates")
        if field is None:
            field = next((v.field for v in vals if isinstance(v, Cyclotomic)), CyclotomicField(1))
        vals = [field(v) for v in vals]
        self.coords = _canonical(vals)
        self._hash = None

    @classmethod
    def _raw(cls, coords: tuple[Cyclotomic, ...]):
        obj = object.__new__(cls)
        obj.coords = _canonical(coords)
        obj._hash = None
        return obj

    @property
    def field(self) -> CyclotomicField:
        return self.coords[0].field

    def __eq__(self, other):
        if type(other) is not type(self):
            return NotImplemented
        return self.coords == other.coords

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((type(self).__name__, self.coords))
        return self._hash

    def sort_key(self):
        return tuple(c.sort_key() for c in self.coords)

    def __lt__(self, other):
        return self.sort_key() < other.sort_key()

    def __iter__(self):
        return iter(self.coords)

    def __getitem__(self, i):
        return self.coords[i]

    def __repr__(self):
        return f"{type(self).__name__}({' : '.join(str(c) for c in self.coords)})"

    def __getstate__(self):
        return self.coords

    def __setstate__(self, state):
        self.coords = state
        self._hash = None


class ProjPoint(_Triple):
    """A point (x : y : z), stored with first nonzero coordinate 1."""

    __slots__ = ()

    def on(self, line: "ProjLine") -> bool:
        return incident(self, line)


class ProjLine(_Triple):
    """A line a x + b y + c z = 0, stored as (a : b : c) in canonical form."""

    __slots__ = ()

    def contains(self, p: ProjPoint) -> bool:
        return incident(p, self)

    def evaluate(self, p: ProjPoint) -> Cyclotomic:
        a = self.coords
        b = p.coords
        return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]


def _check_same_field(a: _Triple, b: _Triple) -> None:
    if a.field is not b.field:
        raise FieldMismatchError(f"objects over Q(zeta_{a.field.order}) and Q(zeta_{b.field.order})")


def cross(u: Sequence[Cyclotomic], v: Sequence[Cyclotomic]) -> tuple[Cyclotomic, ...]:
    return (u[1] * v[2] - u[2] * v[1],
            u[2] * v[0] - u[0] * v[2],
            u[0] * v[1] - u[1] * v[0])


def incident(p: ProjPoint, line: ProjLine) -> bool:
    _check_same_field(p, line)
    a, b = line.coords, p.coords
    return (a[0] * b[0] + a[1] * b[1] + a[2] * b[2]).is_zero()


def join(p: ProjPoint, q: ProjPoint) -> ProjLine:
    """The line through two distinct points."""
    _check_same_field(p, q)
    if p == q:
        raise DegenerateInputError("join of a point with itself")
    return ProjLine._raw(cross(p.coords, q.coords))


def meet(l1: ProjLine, l2: ProjLine) -> ProjPoint:
    """The common point of two distinct lines."""
    _check_same_field(l1, l2)
    if l1 == l2:
        raise DegenerateInputError("meet of a line with itself")
    return ProjPoint._raw(cross(l1.coords, l2.coords))


def join_meet(a, b):
    """Join for two points, meet for two lines."""
    if isinstance(a, ProjPoint) and isinstance(b, ProjPoint):
        return join(a, b)
    if isinstance(a, ProjLine) and isinstance(b, ProjLine):
        return meet(a, b)
    raise TypeError("join_meet needs two points or two lines")


def det3(a: Sequence, b: Sequence, c: Sequence) -> Cyclotomic:
    return (a[0] * (b[1] * c[2] - b[2] * c[1])
            - a[1] * (b[0] * c[2] - b[2] * c[0])
            + a[2] * (b[0] * c[1] - b[1] * c[0]))


def collinear(p: ProjPoint, q: ProjPoint, r: ProjPoint) -> bool:
    if p == q or q == r or p == r:
        raise DegenerateInputError("collinearity test needs three distinct points")
    _check_same_field(p, q)
    _check_same_field(q, r)
    return det3(p.coords, q.coords, r.coords).is_zero()


def apply_matrix(m: Sequence[Sequence], p: ProjPoint) -> ProjPoint:
    """Image of a point under a 3x3 matrix acting on column vectors."""
    f = p.field
    rows = [[f(v) for v in row] for row in m]
    c = p.coords
    return ProjPoint._raw(tuple(r[0] * c[0] + r[1] * c[1] + r[2] * c[2] for r in rows))


# -- integral projective keys ---------------------------------------------
#
# Hot loops avoid field inversions: a vector with entries in Z[zeta] is
# made canonical by multiplying with the Galois adjugate of its first nonzero
# entry (turning it into a positive integer) and dividing out the integer
# content.  Two vectors get the same key iff they are proportional.

def integral_vector(coords: Sequence[Cyclotomic]) -> tuple[Cyclotomic, ...]:
    """Scale by a positive integer so that every entry has denominator 1."""
    den = math.lcm(*(c.den for c in coords))
    if den == 1:
        return tuple(coords)
    return tuple(c * den for c in coords)


def projective_key(coords: Sequence[Cyclotomic]) -> tuple:
    """Hashable key identifying the projective class of a nonzero vector."""
    for c in coords:
        if c:
            lead = c
            break
    else:
        raise DegenerateInputError("zero vector has no projective class")
    if lead.field.degree > 1 and not lead.is_rational():
        adj = lead.adjugate()
        coords = [x * adj for x in coords]
        lead = next(x for x in coords if x)
    nums = [x.num for x in coords]
    dens = [x.den for x in coords]
    den = math.lcm(*dens)
    flat = []
    for n, d in zip(nums, dens):
        s = den // d
        flat.extend(v * s for v in n)
    g = math.gcd(*flat)
    if lead.num[0] < 0:
        g = -g
    return tuple(v // g for v in flat)
