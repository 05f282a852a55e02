"""Linear systems of plane curves through points with multiplicities."""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from functools import cache
from math import comb
from typing import Sequence

from .cyclotomic import Cyclotomic, CyclotomicField
from .linalg import Echelon
from .projective import ProjPoint, _canonical


@cache
def monomials(d: int) -> tuple[tuple[int, int, int], ...]:
    """Exponent triples of degree d, descending lexicographic (x^d first)."""
    return tuple((a, b, d - a - b) for a in range(d, -1, -1) for b in range(d - a, -1, -1))


@cache
def _derivative_table(d: int, order: int):
    """For each derivative multi-index of the given order, the list of
    (monomial column, coefficient, reduced exponent) it produces."""
    out = []
    for al in monomials(order):
        entries = []
        for col, ex in enumerate(monomials(d)):
            coef = 1
            red = []
            for e, k in zip(ex, al):
                if e < k:
                    coef = 0
                    break
                for t in range(k):
                    coef *= e - t
                red.append(e - k)
            if coef:
                entries.append((col, coef, tuple(red)))
        out.append(entries)
    return out


def _powers(c: Cyclotomic, d: int) -> list[Cyclotomic]:
    out = [c.field.one]
    for _ in range(d):
        out.append(out[-1] * c)
    return out


def condition_rows(d: int, p: ProjPoint, m: int) -> list[list[Cyclotomic]]:
    """Rows expressing that a degree-d form vanishes to order m at p.

    Uses the partial derivatives of order exactly m-1; by Euler's identity
    these vanishing at p imply all lower-order derivatives vanish too, so
    the m(m+1)/2 rows cut out the same space as all derivatives of order < m.
    """
    if m < 1:
        raise ValueError("multiplicity must be >= 1")
    f = p.field
    n = len(monomials(d))
    if m - 1 > d:
        # every derivative of order > d is identically zero: no condition
        return []
    pw = [_powers(c, d) for c in p.coords]
    rows = []
    for entries in _derivative_table(d, m - 1):
        row = [f.zero] * n
        for col, coef, (a, b, c) in entries:
            row[col] = pw[0][a] * pw[1][b] * pw[2][c] * coef
        rows.append(row)
    return rows


def evaluate_form(coeffs: Sequence[Cyclotomic], d: int, p: ProjPoint) -> Cyclotomic:
    pw = [_powers(c, d) for c in p.coords]
    acc = p.field.zero
    for c, (a, b, e) in zip(coeffs, monomials(d)):
        if c:
            acc = acc + c * pw[0][a] * pw[1][b] * pw[2][e]
    return acc


@dataclass(frozen=True)
class LinearSystem:
    """Degree-d forms satisfying multiplicity conditions at points.

    ``dimension`` is the vector-space dimension (projective dimension + 1).
    ``empty_prefix`` is the smallest k such that the first k conditions
    alone already force dimension 0, or None when the system is nonempty.
    """

    degree: int
    conditions: tuple[tuple[ProjPoint, int], ...]
    dimension: int
    rank: int
    basis: tuple[tuple[Cyclotomic, ...], ...] = dc_field(repr=False)
    empty_prefix: int | None = None

    @property
    def n_monomials(self) -> int:
        return comb(self.degree + 2, 2)

    @property
    def is_empty(self) -> bool:
        return self.dimension == 0


def curve_system(d: int, conditions: Sequence[tuple[ProjPoint, int]],
                 field: CyclotomicField | None = None) -> LinearSystem:
    if d < 1:
        raise ValueError("degree must be >= 1")
    conditions = tuple((p, int(m)) for p, m in conditions)
    pts = [p for p, _ in conditions]
    if len(set(pts)) != len(pts):
        raise ValueError("condition points must be distinct")
    if field is None:
        field = pts[0].field if pts else CyclotomicField(1)
    n = comb(d + 2, 2)
    ech = Echelon(n)
    prefix = None
    for idx, (p, m) in enumerate(conditions):
        for row in condition_rows(d, p, m):
            ech.add(row)
            if ech.rank == n:
                break
        if ech.rank == n and prefix is None:
            prefix = idx + 1
            break
    if ech.rank == n:
        basis = ()
        # rank is already full; the remaining conditions cannot change it
    else:
        ns = ech.nullspace() if ech.rows else [
            [field.one if j == i else field.zero for j in range(n)] for i in range(n)]
        basis = tuple(_canonical(v) for v in ns)
    return LinearSystem(d, conditions, n - ech.rank, ech.rank, basis, prefix)


@dataclass(frozen=True)
class ConicResult:
    conic: tuple[Cyclotomic, ...] | None
    dimension: int

    @property
    def unique(self) -> bool:
        return self.conic is not None


def conic_through_five(points: Sequence[ProjPoint]) -> ConicResult:
    """The conic through five points, or the system dimension when it is not unique.

    Coefficients are for x^2, xy, xz, y^2, yz, z^2, canonical (first nonzero 1).
    """
    if len(points) != 5 or len(set(points)) != 5:
        raise ValueError("need five distinct points")
    sys = curve_system(2, [(p, 1) for p in points])
    if sys.dimension == 1:
        return ConicResult(sys.basis[0], 1)
    return ConicResult(None, sys.dimension)
