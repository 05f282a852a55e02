"""Star configurations: 12 bad points split into 6 pairs whose joins are
arrangement lines through one common point of multiplicity 6."""

from __future__ import annotations

from dataclasses import dataclass, field

from ..arrangement import IntersectionLattice


@dataclass
class StarVerdict:
    is_star: bool
    center: int | None = None  # lattice index
    pairs: tuple[tuple[int, int], ...] = ()
    trace: list[str] = field(default_factory=list)
    forced: list[dict] = field(default_factory=list)

    def to_json(self) -> dict:
        out = {"verdict": "star" if self.is_star else "not_star", "trace": self.trace}
        if self.is_star:
            out["center"] = self.center + 1
            out["pairs"] = [[a + 1, b + 1] for a, b in self.pairs]
        else:
            out["forced_centers"] = self.forced
        return out


def _common_line(lattice: IntersectionLattice, u: int, v: int) -> int | None:
    common = set(lattice.points[u].incident) & set(lattice.points[v].incident)
    return min(common) if common else None


def _match(points: list[int], lines_ok: dict[int, dict[int, int]], used: set[int]):
    """Perfect matching of ``points`` with distinct lines; lines_ok[u][v] is the line."""
    if not points:
        return []
    u = points[0]
    for v, line in lines_ok[u].items():
        if v in points and line not in used:
            rest = [w for w in points if w != u and w != v]
            used.add(line)
            sub = _match(rest, lines_ok, used)
            used.discard(line)
            if sub is not None:
                return [(u, v)] + sub
    return None


def _forced_centers(lattice: IntersectionLattice, pts: list[int], mult: int) -> list[dict]:
    """Walk the pairs through the first point: each joining line holds exactly one
    further point of the center multiplicity, which would have to be the center."""
    u = pts[0]
    heavy = {i for i, lp in enumerate(lattice.points) if lp.multiplicity == mult}
    out = []
    for v in pts[1:]:
        line = _common_line(lattice, u, v)
        if line is None:
            continue
        third = [w for w in lattice.per_line[line].points if w in heavy and w not in (u, v)]
        if len(third) == 1:
            out.append({"pair": [u + 1, v + 1], "line": line + 1, "center": third[0] + 1})
    return out


def star_configuration_check(points12, lattice: IntersectionLattice, partition=None, *,
                             center_multiplicity: int = 6) -> StarVerdict:
    pts = sorted(points12)
    if len(pts) != 12 or len(set(pts)) != 12:
        raise ValueError("a star configuration needs 12 distinct points")
    if partition is not None:
        bad = set(partition.T_eq1)
        if not set(pts) <= bad:
            raise ValueError("star configurations are built from bad points")
    forced = _forced_centers(lattice, pts, center_multiplicity)
    trace = []
    for f in forced:
        trace.append(f"pair {{{f['pair'][0]},{f['pair'][1]}}} forces center {f['center']}")
    distinct = []
    for f in forced:
        if f["center"] not in [g["center"] for g in distinct]:
            distinct.append(f)
    if len(distinct) >= 2:
        trace.append(f"contradiction: centers {distinct[0]['center']} and {distinct[1]['center']}")
    # exhaustive decision over every possible center
    centers = [i for i, lp in enumerate(lattice.points) if lp.multiplicity == center_multiplicity]
    for c in centers:
        through = set(lattice.points[c].incident)
        lines_ok: dict[int, dict[int, int]] = {u: {} for u in pts}
        for a in range(12):
            for b in range(a + 1, 12):
                u, v = pts[a], pts[b]
                line = _common_line(lattice, u, v)
                if line is not None and line in through:
                    lines_ok[u][v] = line
                    lines_ok[v][u] = line
        if any(not lines_ok[u] for u in pts):
            continue
        m = _match(pts, lines_ok, set())
        if m is not None:
            return StarVerdict(True, c, tuple(m), [f"center {c + 1} admits the pairing"], forced)
    trace.append(f"no center among {len(centers)} points of multiplicity {center_multiplicity} admits a pairing")
    return StarVerdict(False, None, (), trace, forced)
