"""Intersection theory on the blow-up of P^2 at a set of multiple points."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from ..arrangement import IntersectionLattice
from ..exactgeom import ProjLine, ProjPoint, cross
from ..exactgeom.projective import incident


@dataclass(frozen=True, order=True)
class Component:
    """A curve on the blow-up.

    kind 0: strict transform of arrangement line ``index``;
    kind 1: exceptional curve over lattice point ``index``;
    kind 2: strict transform of the auxiliary line ``index`` of the model.
    """

    kind: int
    index: int

    @property
    def label(self) -> str:
        return ("H", "E", "L")[self.kind] + str(self.index + 1)

    def __repr__(self) -> str:
        return self.label


def StrictLine(i: int) -> Component:
    return Component(0, i)


def Exceptional(p: int) -> Component:
    return Component(1, p)


def AuxLine(j: int) -> Component:
    return Component(2, j)


def parse_component(label: str) -> Component:
    kinds = {"H": 0, "E": 1, "L": 2}
    if not label or label[0] not in kinds or not label[1:].isdigit() or int(label[1:]) < 1:
        raise ValueError(f"bad component label {label!r}")
    return Component(kinds[label[0]], int(label[1:]) - 1)


class ModelError(ValueError):
    pass


class DivisorModel:
    """Bl_B P^2 for a set B of lattice points, with optional auxiliary lines.

    Pairings follow from the total transforms: for distinct lines their
    strict transforms meet once unless the meeting point was blown up,
    H^2 = 1 - #(B on H), E^2 = -1, E.H = [p on H], distinct E's are disjoint.
    """

    def __init__(self, lattice: IntersectionLattice, blown: Iterable[int],
                 aux_lines: Sequence[ProjLine] = ()):
        self.lattice = lattice
        self.blown = frozenset(blown)
        for p in self.blown:
            if not 0 <= p < len(lattice.points):
                raise ModelError(f"lattice index {p} out of range")
        A = lattice.arrangement
        self.aux_lines = tuple(aux_lines)
        self._point_index = {lp.point: i for i, lp in enumerate(lattice.points)}
        self._line_blown = [sum(1 for j in st.points if j in self.blown) for st in lattice.per_line]
        self._incident = [frozenset(lp.incident) for lp in lattice.points]
        # auxiliary line data: blown points on it, and how it meets everything else
        self._aux_points: list[frozenset[int]] = []
        self._aux_meets_line: list[list[int | None]] = []
        for j, L in enumerate(self.aux_lines):
            if L in A.lines:
                raise ModelError(f"auxiliary line {j + 1} is an arrangement line")
            on = frozenset(i for i, lp in enumerate(lattice.points) if incident(lp.point, L))
            self._aux_points.append(on)
            meets = []
            for H in A.lines:
                q = ProjPoint._raw(cross(L.coords, H.coords))
                meets.append(self._point_index.get(q))
            self._aux_meets_line.append(meets)

    @property
    def components(self) -> list[Component]:
        n = self.lattice.arrangement.n
        return ([StrictLine(i) for i in range(n)]
                + [Exceptional(p) for p in sorted(self.blown)]
                + [AuxLine(j) for j in range(len(self.aux_lines))])

    def check(self, c: Component) -> None:
        if c.kind == 0 and 0 <= c.index < self.lattice.arrangement.n:
            return
        if c.kind == 1 and c.index in self.blown:
            return
        if c.kind == 2 and 0 <= c.index < len(self.aux_lines):
            return
        raise ModelError(f"{c.label} is not a component of this model")

    def _aux_aux_blown(self, j1: int, j2: int) -> bool:
        L1, L2 = self.aux_lines[j1], self.aux_lines[j2]
        q = ProjPoint._raw(cross(L1.coords, L2.coords))
        idx = self._point_index.get(q)
        return idx is not None and idx in self.blown

    def pairing(self, c1: Component, c2: Component) -> int:
        if c1.kind > c2.kind:
            c1, c2 = c2, c1
        k1, i1, k2, i2 = c1.kind, c1.index, c2.kind, c2.index
        if k1 == 0 and k2 == 0:
            if i1 == i2:
                return 1 - self._line_blown[i1]
            return 0 if self.lattice.meet_index(i1, i2) in self.blown else 1
        if k1 == 0 and k2 == 1:
            return 1 if i1 in self._incident[i2] else 0
        if k1 == 1 and k2 == 1:
            return -1 if i1 == i2 else 0
        if k1 == 0 and k2 == 2:
            idx = self._aux_meets_line[i2][i1]
            return 0 if idx is not None and idx in self.blown else 1
        if k1 == 1 and k2 == 2:
            return 1 if i1 in self._aux_points[i2] else 0
        # two auxiliary lines
        if i1 == i2:
            return 1 - sum(1 for p in self._aux_points[i1] if p in self.blown)
        return 0 if self._aux_aux_blown(i1, i2) else 1


def pairing(model: DivisorModel, c1: Component, c2: Component) -> int:
    model.check(c1)
    model.check(c2)
    return model.pairing(c1, c2)


@dataclass(frozen=True)
class QDivisor:
    """Effective Q-divisor: component -> positive rational coefficient."""

    coefficients: Mapping[Component, Fraction] = field(default_factory=dict)

    def __post_init__(self):
        clean = {}
        for c, v in self.coefficients.items():
            v = Fraction(v)
            if v < 0:
                raise ValueError(f"negative coefficient on {c.label}")
            if v:
                clean[c] = v
        object.__setattr__(self, "coefficients", dict(sorted(clean.items())))

    @property
    def support(self) -> tuple[Component, ...]:
        return tuple(self.coefficients)

    def coeff(self, c: Component) -> Fraction:
        return self.coefficients.get(c, Fraction(0))

    def plus(self, other: Mapping[Component, Fraction]) -> "QDivisor":
        d = dict(self.coefficients)
        for c, v in other.items():
            d[c] = d.get(c, Fraction(0)) + Fraction(v)
        return QDivisor(d)

    @classmethod
    def unit(cls, comps: Iterable[Component]) -> "QDivisor":
        return cls({c: Fraction(1) for c in comps})


def qdiv_dot(model: DivisorModel, D: QDivisor, c: Component) -> Fraction:
    model.check(c)
    return sum((v * model.pairing(b, c) for b, v in D.coefficients.items()), Fraction(0))


def qdiv_self(model: DivisorModel, D: QDivisor) -> Fraction:
    return sum((v * qdiv_dot(model, D, c) for c, v in D.coefficients.items()), Fraction(0))


def divisor_connected(model: DivisorModel, support: Sequence[Component]) -> bool:
    support = list(dict.fromkeys(support))
    if not support:
        raise ValueError("empty support")
    for c in support:
        model.check(c)
    seen = {support[0]}
    stack = [support[0]]
    while stack:
        a = stack.pop()
        for b in support:
            if b not in seen and model.pairing(a, b) > 0:
                seen.add(b)
                stack.append(b)
    return len(seen) == len(support)


# -- the canonical divisor of the vanishing criterion ------------------------

def total_model(lattice: IntersectionLattice, aux_lines: Sequence[ProjLine] = ()) -> DivisorModel:
    """Blow up every point of multiplicity >= 3."""
    return DivisorModel(lattice, lattice.T, aux_lines)


def canonical_support(lattice: IntersectionLattice, partition) -> list[Component]:
    """All strict lines and the exceptional curves over T_{!=1}."""
    return ([StrictLine(i) for i in range(lattice.arrangement.n)]
            + [Exceptional(p) for p in partition.T_neq1])


def closed_form_slacks(lattice: IntersectionLattice, partition) -> dict[Component, int]:
    """Intersection numbers of the canonical unit divisor, by closed formula.

    D.H_i = 1 - k_i + k'_i + d_i and D.E_p = n_p - 1 (p in T_{!=1}),
    D.E_p = n_p (p in T_{=1}), on the model blowing up all of T.
    """
    neq = set(partition.T_neq1)
    out: dict[Component, int] = {}
    for i, st in enumerate(lattice.per_line):
        kp = sum(1 for j in st.points if j in neq)
        out[StrictLine(i)] = 1 - st.k + kp + st.d
    for p in lattice.T:
        n_p = lattice.points[p].multiplicity
        out[Exceptional(p)] = n_p - 1 if p in neq else n_p
    return out


def bilinear_slacks(model: DivisorModel, D: QDivisor,
                    comps: Iterable[Component]) -> dict[Component, Fraction]:
    return {c: qdiv_dot(model, D, c) for c in comps}
