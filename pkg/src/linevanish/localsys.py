"""Rank-one local systems given by monodromy exponents, and the induced point partition.

A system assigns to line i an exponent a_i in [0, 1); its monodromy is
t_i = exp(2 pi i a_i).  For a Milnor system of order k we fix a_i = 1/k
(the choice between lambda and its inverse does not affect vanishing).
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .arrangement import IntersectionLattice, LatticePoint


class LocalSystemError(ValueError):
    pass


@dataclass(frozen=True)
class LocalSystem:
    exponents: tuple[Fraction, ...]
    description: str = ""

    def __post_init__(self):
        ex = tuple(Fraction(a) for a in self.exponents)
        for i, a in enumerate(ex):
            if not 0 <= a < 1:
                raise LocalSystemError(f"exponent {i + 1} = {a} is outside [0, 1)")
        total = sum(ex, Fraction(0))
        if total.denominator != 1:
            raise LocalSystemError(f"exponents sum to {total}, which is not an integer")
        object.__setattr__(self, "exponents", ex)

    @property
    def n(self) -> int:
        return len(self.exponents)

    @property
    def strict(self) -> bool:
        """All t_i != 1."""
        return all(a != 0 for a in self.exponents)

    def spec(self) -> str:
        return self.description or "exponents: " + " ".join(str(a) for a in self.exponents)


@dataclass(frozen=True)
class SymbolicSystem:
    """A local system known only through which multiple points have t_p = 1.

    Used for generic monodromy constrained by sums (all t_i != 1 assumed).
    ``eq1`` holds lattice indices (0-based) of the points with t_p = 1.
    """

    eq1: frozenset[int]
    n: int
    description: str = ""

    @property
    def strict(self) -> bool:
        return True

    def spec(self) -> str:
        return self.description or "partition: eq1={" + ",".join(str(i + 1) for i in sorted(self.eq1)) + "}"


@dataclass(frozen=True)
class Partition:
    T_eq1: tuple[int, ...]
    T_neq1: tuple[int, ...]

    def is_bad(self, idx: int) -> bool:
        return idx in self._eq1_set

    @property
    def _eq1_set(self) -> frozenset:
        s = self.__dict__.get("_eq1_cache")
        if s is None:
            s = frozenset(self.T_eq1)
            object.__setattr__(self, "_eq1_cache", s)
        return s


def total_turn_exponent(p: LatticePoint, L: LocalSystem) -> Fraction:
    s = sum((L.exponents[i] for i in p.incident), Fraction(0))
    return s - (s.numerator // s.denominator)


def partition(lattice: IntersectionLattice, L: LocalSystem | SymbolicSystem) -> Partition:
    if L.n != lattice.arrangement.n:
        raise LocalSystemError(f"local system has {L.n} exponents for {lattice.arrangement.n} lines")
    T = lattice.T
    if isinstance(L, SymbolicSystem):
        bad = set(L.eq1)
        stray = bad - set(T)
        if stray:
            raise LocalSystemError(
                f"points {sorted(i + 1 for i in stray)} are not of multiplicity >= 3")
        eq1 = tuple(i for i in T if i in bad)
    else:
        eq1 = tuple(i for i in T if total_turn_exponent(lattice.points[i], L) == 0)
    eqs = set(eq1)
    return Partition(eq1, tuple(i for i in T if i not in eqs))


def k_prime(lattice: IntersectionLattice, part: Partition, i: int) -> int:
    """Number of T_{!=1} points on line i."""
    neq = set(part.T_neq1)
    return sum(1 for j in lattice.per_line[i].points if j in neq)


def bad_points_on_line(lattice: IntersectionLattice, part: Partition, i: int) -> tuple[int, ...]:
    return tuple(j for j in lattice.per_line[i].points if part.is_bad(j))


def milnor_system(n: int, k: int) -> LocalSystem:
    if k < 2:
        raise LocalSystemError(f"Milnor order must be >= 2, got {k}")
    if n % k:
        raise LocalSystemError(f"order {k} does not divide the number of lines {n}")
    return LocalSystem(tuple(Fraction(1, k) for _ in range(n)), f"milnor: {k}")


def milnor_order_filter(lattice: IntersectionLattice) -> list[int]:
    """Orders k > 1 that can carry Milnor-fiber eigenvalues.

    Keeps k dividing n such that every line passes through a multiple point
    whose multiplicity is divisible by k; any other order has a trivial
    eigenspace.
    """
    n = lattice.arrangement.n
    out = []
    for k in range(2, n + 1):
        if n % k:
            continue
        if all(any(lattice.points[j].multiplicity % k == 0 for j in st.points)
               for st in lattice.per_line):
            out.append(k)
    return out


def parse_fraction_list(tokens: Iterable[str]) -> tuple[Fraction, ...]:
    return tuple(Fraction(t) for t in tokens)


def exponents_from(values: Sequence) -> LocalSystem:
    return LocalSystem(tuple(Fraction(v) for v in values))


def parse_local_system(text: str, n: int, *, source: str = "<text>") -> LocalSystem | SymbolicSystem:
    """Parse one of

        exponents: a1 a2 ... an
        milnor: k
        partition: eq1={i, j, ...}      (1-based lattice point indices)

    ``#`` starts a comment; exactly one directive is allowed.
    """
    found = []
    for ln_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            found.append((ln_no, line))
    if len(found) != 1:
        raise LocalSystemError(f"{source}: expected exactly one directive, found {len(found)}")
    ln_no, line = found[0]
    where = f"{source}:{ln_no}: "
    key, _, body = line.partition(":")
    key, body = key.strip(), body.strip()
    try:
        if key == "exponents":
            ex = parse_fraction_list(body.split())
            if len(ex) != n:
                raise LocalSystemError(f"{len(ex)} exponents for {n} lines")
            return LocalSystem(ex, "exponents: " + " ".join(str(a) for a in ex))
        if key == "milnor":
            if not body.isdigit():
                raise LocalSystemError(f"milnor order must be an integer, got {body!r}")
            return milnor_system(n, int(body))
        if key == "partition":
            m = re.fullmatch(r"eq1\s*=\s*\{([^}]*)\}", body)
            if not m:
                raise LocalSystemError(f"expected eq1={{...}}, got {body!r}")
            idx = [t for t in re.split(r"[\s,]+", m.group(1).strip()) if t]
            if any(not t.isdigit() or int(t) < 1 for t in idx):
                raise LocalSystemError(f"point indices must be positive integers: {m.group(1)!r}")
            eq1 = frozenset(int(t) - 1 for t in idx)
            return SymbolicSystem(eq1, n, "partition: eq1={" + ",".join(str(i + 1) for i in sorted(eq1)) + "}")
    except (ValueError, ZeroDivisionError) as e:
        raise LocalSystemError(where + str(e)) from None
    raise LocalSystemError(where + f"unknown directive {key!r}")
