"""Multiplicity vectors of hypothetical bad curves, and degree bounds."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from ..arrangement import IntersectionLattice
from ..localsys import Partition


@dataclass(frozen=True)
class MultiplicityVector:
    degree: int
    mults: tuple[tuple[int, int], ...]  # (lattice index, m_p) with m_p > 0, sorted

    @property
    def support(self) -> tuple[int, ...]:
        return tuple(p for p, _ in self.mults)

    @property
    def s(self) -> int:
        return sum(m for _, m in self.mults)

    def as_dict(self) -> dict[int, int]:
        return dict(self.mults)


def milnor_bound_ok(d: int, ms) -> bool:
    """(d-1)(d-2) >= sum (m_p - 1)^2 over the support."""
    return (d - 1) * (d - 2) >= sum((m - 1) ** 2 for m in ms if m > 0)


def delta_bound_ok(d: int, ms) -> bool:
    """(d-1)(d-2) >= sum m_p (m_p - 1)."""
    return (d - 1) * (d - 2) >= sum(m * (m - 1) for m in ms)


class EnumerationBudgetExceeded(RuntimeError):
    pass


def enumerate_mult_vectors(lattice: IntersectionLattice, partition: Partition, d: int, *,
                           delta_prune: bool = True,
                           max_nodes: int | None = None) -> list[MultiplicityVector]:
    """Nonnegative m on T_{=1} with sum over each line equal to d, subject to the
    global identity and the genus prunes.

    Points are assigned in lattice order; after each assignment every line
    whose bad points are all assigned must sum to exactly d, and no line may
    exceed d.  Deterministic output order (lexicographic in assignment).
    ``max_nodes`` caps the number of search nodes visited
    (EnumerationBudgetExceeded beyond it).
    """
    if d < 1:
        raise ValueError("degree must be >= 1")
    bad = list(partition.T_eq1)
    n = lattice.arrangement.n
    genus = (d - 1) * (d - 2)
    lines_of = [lattice.points[p].incident for p in bad]
    # for each line, how many of its bad points come after position k
    last_pos = [-1] * n
    for k, inc in enumerate(lines_of):
        for i in inc:
            last_pos[i] = k
    # lines with no bad point at all can never reach d
    if any(last_pos[i] < 0 for i in range(n)):
        return []
    line_sum = [0] * n
    out: list[MultiplicityVector] = []
    current = [0] * len(bad)
    nodes = [0]

    def rec(k: int, mil: int, dlt: int):
        nodes[0] += 1
        if max_nodes is not None and nodes[0] > max_nodes:
            raise EnumerationBudgetExceeded(f"more than {max_nodes} search nodes at degree {d}")
        if k == len(bad):
            ms = tuple((bad[j], current[j]) for j in range(len(bad)) if current[j])
            total = sum(lattice.points[p].multiplicity * m for p, m in ms)
            if total != n * d:
                raise AssertionError("per-line sums do not add up to the global identity")
            out.append(MultiplicityVector(d, ms))
            return
        inc = lines_of[k]
        cap = min(d - line_sum[i] for i in inc)
        for m in range(cap, -1, -1):
            mil2 = mil + (m - 1) ** 2 if m > 0 else mil
            dlt2 = dlt + m * (m - 1)
            if mil2 > genus or (delta_prune and dlt2 > genus):
                continue
            ok = True
            for i in inc:
                line_sum[i] += m
            for i in inc:
                if last_pos[i] == k and line_sum[i] != d:
                    ok = False
            if ok:
                current[k] = m
                rec(k + 1, mil2, dlt2)
                current[k] = 0
            for i in inc:
                line_sum[i] -= m

    rec(0, 0, 0)
    out.reverse()
    return out


@dataclass(frozen=True)
class DegreeBound:
    bound: int | None
    profile: dict
    case1: tuple[int, ...] = ()
    case2: tuple[int, ...] = ()
    reason: str = ""


def _uniform_profile(lattice: IntersectionLattice, partition: Partition):
    bad = set(partition.T_eq1)
    counts = {sum(1 for j in st.points if j in bad) for st in lattice.per_line}
    mults = {lattice.points[p].multiplicity for p in bad}
    c = counts.pop() if len(counts) == 1 else None
    nu = mults.pop() if len(mults) == 1 else None
    return c, nu


def auto_degree_bound(lattice: IntersectionLattice, partition: Partition) -> DegreeBound:
    """Largest possible degree of a bad curve, for the profiles with a proof.

    c = 0 (no bad point on some line): no bad curve can exist, bound 0.
    c = 1: a line meeting the curve in a single point forces the curve to be a line.
    c = 3 with common multiplicity nu: two-case Cauchy-Schwarz analysis,
    full support versus a missed point whose lines carry two curve points each.
    """
    bad = set(partition.T_eq1)
    n = lattice.arrangement.n
    per_line = [sum(1 for j in st.points if j in bad) for st in lattice.per_line]
    c, nu = _uniform_profile(lattice, partition)
    prof = {"bad_points_per_line": sorted(set(per_line)),
            "bad_point_multiplicities": sorted({lattice.points[p].multiplicity for p in bad})}
    if min(per_line) == 0:
        return DegreeBound(0, prof, reason="a line carries no bad point, so no curve satisfies the line sums")
    if c == 1:
        return DegreeBound(1, prof, reason="each line carries exactly one bad point")
    if c != 3 or nu is None:
        return DegreeBound(None, prof, reason="profile outside the proven cases")
    N = len(bad)
    # Case 1: all N points on C.  s = sum m = n d / nu; the genus inequality
    # with N sum m^2 >= s^2 gives (A-1) d^2 + (3-2B) d + (N-2) <= 0.
    A = Fraction(n, nu) ** 2 / N
    B = Fraction(n, nu)
    # Case 2: some bad point is missed; each of its nu lines meets C in two
    # bad points with multiplicities a_i + b_i = d, and
    # sum (a_i^2 + b_i^2) >= nu d^2 / 2 turns the genus inequality into
    # (nu/2 - 1) d^2 + (3 - 2 nu) d + (2 nu - 2) <= 0.
    a2, b2, c2 = Fraction(nu, 2) - 1, 3 - 2 * nu, 2 * nu - 2
    if A <= 1 or a2 <= 0:
        return DegreeBound(None, prof, reason="degree inequalities do not bound d")
    a1, b1, c1 = A - 1, 3 - 2 * B, Fraction(N - 2)
    # Cauchy root bound: every real root is below 1 + max(|b|, |c|) / a
    limit = int(max(1 + max(abs(b1), abs(c1)) / a1, 1 + max(abs(b2), abs(c2)) / a2)) + 1
    case1 = tuple(d for d in range(1, limit + 1)
                  if (n * d) % nu == 0 and a1 * d * d + b1 * d + c1 <= 0)
    case2 = tuple(d for d in range(2, limit + 1) if a2 * d * d + b2 * d + c2 <= 0)
    # if some line through a missed point met C only once, C would be a line
    line_case = (1,)
    dmax = max(case1 + case2 + line_case)
    return DegreeBound(dmax, prof, case1, case2,
                       reason="uniform profile with three bad points per line")
