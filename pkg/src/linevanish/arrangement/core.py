"""Line arrangements and their intersection lattices."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from math import comb
from typing import Sequence

from ..exactgeom import CyclotomicField, ProjLine, ProjPoint, cross, projective_key
from ..exactgeom.projective import incident


class ArrangementError(ValueError):
    pass


@dataclass(frozen=True, eq=False)
class Arrangement:
    """An ordered list of distinct lines over Q(zeta_k).

    ``point_labels`` optionally names distinguished multiple points by the
    set of line indices through them; label j (1-based) is the j-th set.
    ``provenance`` holds free-form construction data (section plane, notes).
    """

    field: CyclotomicField
    lines: tuple[ProjLine, ...]
    label: str = ""
    point_labels: tuple[frozenset[int], ...] = ()
    provenance: dict = field(default_factory=dict)

    def __post_init__(self):
        if len(self.lines) < 3:
            raise ArrangementError(f"an arrangement needs at least 3 lines, got {len(self.lines)}")
        seen = {}
        for i, ln in enumerate(self.lines):
            if ln.field is not self.field:
                raise ArrangementError(f"line {i + 1} is over Q(zeta_{ln.field.order}), expected Q(zeta_{self.field.order})")
            if ln in seen:
                raise ArrangementError(f"lines {seen[ln] + 1} and {i + 1} coincide")
            seen[ln] = i

    @property
    def n(self) -> int:
        return len(self.lines)

    @property
    def field_order(self) -> int:
        return self.field.order


@dataclass(frozen=True)
class LatticePoint:
    point: ProjPoint
    incident: tuple[int, ...]
    label: int | None = None

    @property
    def multiplicity(self) -> int:
        return len(self.incident)


@dataclass(frozen=True)
class LineStats:
    k: int  # points of multiplicity >= 3 on the line
    d: int  # nodes on the line
    points: tuple[int, ...]  # lattice indices of all multiple points on the line


@dataclass(frozen=True, eq=False)
class IntersectionLattice:
    arrangement: Arrangement
    points: tuple[LatticePoint, ...]
    per_line: tuple[LineStats, ...]
    checks: dict

    @property
    def T(self) -> tuple[int, ...]:
        return tuple(i for i, p in enumerate(self.points) if p.multiplicity >= 3)

    @property
    def P(self) -> tuple[int, ...]:
        return tuple(i for i, p in enumerate(self.points) if p.multiplicity == 2)

    def with_multiplicity(self, m: int) -> tuple[int, ...]:
        return tuple(i for i, p in enumerate(self.points) if p.multiplicity == m)

    def multiplicity_counts(self) -> dict[int, int]:
        out: dict[int, int] = {}
        for p in self.points:
            out[p.multiplicity] = out.get(p.multiplicity, 0) + 1
        return dict(sorted(out.items()))

    def line_profile(self, i: int) -> dict[int, int]:
        out: dict[int, int] = {}
        for j in self.per_line[i].points:
            m = self.points[j].multiplicity
            out[m] = out.get(m, 0) + 1
        return dict(sorted(out.items()))

    def index_of(self, p: ProjPoint) -> int | None:
        for i, lp in enumerate(self.points):
            if lp.point == p:
                return i
        return None

    def labeled(self, label: int) -> int:
        """Lattice index of the point carrying a 1-based label."""
        for i, lp in enumerate(self.points):
            if lp.label == label:
                return i
        raise KeyError(label)

    def meet_index(self, i: int, j: int) -> int:
        return self._meet_table[(min(i, j), max(i, j))]

    @property
    def _meet_table(self) -> dict:
        cached = self.__dict__.get("_meets")
        if cached is None:
            cached = {}
            for idx, lp in enumerate(self.points):
                for a, b in combinations(lp.incident, 2):
                    cached[(a, b)] = idx
            object.__setattr__(self, "_meets", cached)
        return cached


def intersection_lattice(A: Arrangement) -> IntersectionLattice:
    groups: dict[tuple, list] = {}
    lines = A.lines
    coords = [ln.coords for ln in lines]
    for i, j in combinations(range(A.n), 2):
        v = cross(coords[i], coords[j])
        key = projective_key(v)
        g = groups.get(key)
        if g is None:
            groups[key] = [v, {i, j}]
        else:
            g[1].add(i)
            g[1].add(j)
    pts = [(ProjPoint._raw(v), tuple(sorted(s))) for v, s in groups.values()]

    label_of: dict[tuple[int, ...], int] = {}
    for lab, s in enumerate(A.point_labels, start=1):
        label_of[tuple(sorted(s))] = lab
    labeled = sorted((label_of[inc], p, inc) for p, inc in pts if inc in label_of)
    if len(labeled) != len(A.point_labels):
        found = {lab for lab, _, _ in labeled}
        missing = [lab for lab in range(1, len(A.point_labels) + 1) if lab not in found]
        raise ArrangementError(f"labeled points {missing} are not lattice points of this arrangement")
    rest = sorted(((p, inc) for p, inc in pts if inc not in label_of), key=lambda t: t[0].sort_key())
    points = tuple([LatticePoint(p, inc, lab) for lab, p, inc in labeled]
                   + [LatticePoint(p, inc) for p, inc in rest])

    on_line: list[list[int]] = [[] for _ in range(A.n)]
    for idx, lp in enumerate(points):
        for i in lp.incident:
            on_line[i].append(idx)
    stats = []
    for i in range(A.n):
        k = sum(1 for j in on_line[i] if points[j].multiplicity >= 3)
        d = sum(1 for j in on_line[i] if points[j].multiplicity == 2)
        stats.append(LineStats(k, d, tuple(on_line[i])))

    n = A.n
    pair_total = sum(comb(lp.multiplicity, 2) for lp in points)
    per_line_ok = all(sum(points[j].multiplicity - 1 for j in on_line[i]) == n - 1 for i in range(n))
    checks = {
        "pair_count": pair_total,
        "pair_count_expected": comb(n, 2),
        "pair_identity": pair_total == comb(n, 2),
        "per_line_identity": per_line_ok,
    }
    if not (checks["pair_identity"] and per_line_ok):
        raise ArrangementError(f"lattice double-counting failed: {checks}")
    return IntersectionLattice(A, points, tuple(stats), checks)


def is_pencil(A: Arrangement) -> bool:
    p = ProjPoint._raw(cross(A.lines[0].coords, A.lines[1].coords))
    return all(incident(p, ln) for ln in A.lines[2:])


def lines_through(A: Arrangement, p: ProjPoint) -> tuple[int, ...]:
    return tuple(i for i, ln in enumerate(A.lines) if incident(p, ln))


def make_arrangement(field: CyclotomicField, rows: Sequence[Sequence], label: str = "",
                     **kw) -> Arrangement:
    return Arrangement(field, tuple(ProjLine(r, field) for r in rows), label, **kw)
