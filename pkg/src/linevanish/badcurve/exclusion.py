"""Exclusion of bad curves degree by degree."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any

from ..arrangement import IntersectionLattice
from ..exactgeom import curve_system
from ..localsys import Partition
from .multvectors import (DegreeBound, EnumerationBudgetExceeded, MultiplicityVector,
                          auto_degree_bound, delta_bound_ok, enumerate_mult_vectors)


@dataclass
class VectorVerdict:
    vector: MultiplicityVector
    status: str  # "excluded" | "candidate"
    reason: str = ""  # "empty-linear-system" | "delta-genus"
    evidence: dict = field(default_factory=dict)


@dataclass
class DegreeVerdict:
    degree: int
    status: str  # "excluded" | "candidate" | "skipped"
    reason: str = ""  # "no-feasible-vector" | "empty-linear-system" | mixed reasons
    vectors: list[VectorVerdict] = field(default_factory=list)
    evidence: dict = field(default_factory=dict)

    @property
    def candidates(self) -> list[VectorVerdict]:
        return [v for v in self.vectors if v.status == "candidate"]


@dataclass
class CurveExclusionReport:
    bound_kind: str  # "proven" | "user" | "none"
    d_max: int | None
    bound: DegreeBound
    degrees: list[DegreeVerdict]

    @property
    def complete(self) -> bool:
        """Every degree up to a proven bound is excluded."""
        return (self.bound_kind == "proven"
                and all(d.status == "excluded" for d in self.degrees))

    @property
    def candidates(self) -> list[VectorVerdict]:
        return [v for d in self.degrees for v in d.candidates]


def _label(lattice: IntersectionLattice, idx: int) -> int:
    return idx + 1


def _conditions(lattice, vec: MultiplicityVector):
    return [(lattice.points[p].point, m) for p, m in vec.mults]


def _vector_json(lattice, vec: MultiplicityVector) -> dict:
    return {"degree": vec.degree,
            "multiplicities": {str(_label(lattice, p)): m for p, m in vec.mults}}


def judge_vector(lattice: IntersectionLattice, vec: MultiplicityVector) -> VectorVerdict:
    d = vec.degree
    sys = curve_system(d, _conditions(lattice, vec))
    ev: dict[str, Any] = {
        "conditions": [[_label(lattice, p), m] for p, m in vec.mults],
        "monomials": sys.n_monomials,
        "rank": sys.rank,
        "dimension": sys.dimension,
    }
    if sys.dimension == 0:
        ev["empty_prefix"] = sys.empty_prefix
        return VectorVerdict(vec, "excluded", "empty-linear-system", ev)
    ms = [m for _, m in vec.mults]
    if not delta_bound_ok(d, ms):
        ev["delta_inequality"] = {
            "lhs": (d - 1) * (d - 2),
            "rhs": sum(m * (m - 1) for m in ms),
        }
        return VectorVerdict(vec, "excluded", "delta-genus", ev)
    ev["basis"] = [[c.format() for c in b] for b in sys.basis]
    return VectorVerdict(vec, "candidate", "", ev)


def full_support_relaxation(lattice: IntersectionLattice, partition: Partition, d: int) -> dict:
    """Curves of degree d through every bad point: a relaxation of the vectors
    with full support, recording the shortest prefix already forcing emptiness."""
    pts = [(lattice.points[p].point, 1) for p in partition.T_eq1]
    sys = curve_system(d, pts)
    out = {"degree": d, "points": len(pts), "dimension": sys.dimension}
    if sys.empty_prefix is not None:
        out["empty_prefix"] = [_label(lattice, p) for p in partition.T_eq1[:sys.empty_prefix]]
    return out


def exclude_bad_curves(lattice: IntersectionLattice, partition: Partition,
                       d_max: int | None = None, *,
                       max_nodes: int | None = None) -> CurveExclusionReport:
    """Test every multiplicity vector up to the degree bound.

    ``d_max`` None uses the proven bound (if the profile admits one).  A user
    bound counts as proven only when it reaches the proven bound.  With
    ``max_nodes`` set, a degree whose enumeration exceeds the budget is
    reported as skipped.
    """
    bound = auto_degree_bound(lattice, partition)
    if d_max is None:
        if bound.bound is None:
            return CurveExclusionReport("none", None, bound, [])
        top, kind = bound.bound, "proven"
    else:
        top = d_max
        kind = "proven" if bound.bound is not None and d_max >= bound.bound else "user"
    degrees = []
    for d in range(1, top + 1):
        try:
            vecs = enumerate_mult_vectors(lattice, partition, d, delta_prune=False,
                                          max_nodes=max_nodes)
        except EnumerationBudgetExceeded as e:
            degrees.append(DegreeVerdict(d, "skipped", "enumeration-budget", [], {"note": str(e)}))
            continue
        if not vecs:
            ev = {"enumerated": 0}
            if partition.T_eq1 and d >= 2:
                ev["full_support_relaxation"] = full_support_relaxation(lattice, partition, d)
            degrees.append(DegreeVerdict(d, "excluded", "no-feasible-vector", [], ev))
            continue
        verdicts = [judge_vector(lattice, v) for v in vecs]
        cands = [v for v in verdicts if v.status == "candidate"]
        reasons = sorted({v.reason for v in verdicts if v.status == "excluded"})
        ev = {"enumerated": len(vecs)}
        if cands:
            degrees.append(DegreeVerdict(d, "candidate", ",".join(reasons), verdicts, ev))
        else:
            degrees.append(DegreeVerdict(d, "excluded", ",".join(reasons), verdicts, ev))
    return CurveExclusionReport(kind, top, bound, degrees)


def recheck_exclusion(lattice: IntersectionLattice, report_json: dict) -> bool:
    """Re-run the rank computations recorded in a serialized exclusion report."""
    for deg in report_json.get("degrees", []):
        for v in deg.get("vectors", []):
            if v["status"] == "excluded" and v["reason"] == "empty-linear-system":
                ev = v["evidence"]
                conds = [(lattice.points[lab - 1].point, m) for lab, m in ev["conditions"]]
                sys = curve_system(deg["degree"], conds)
                if sys.dimension != 0:
                    return False
                recorded = (ev["monomials"], ev["rank"], ev["dimension"], ev["empty_prefix"])
                if recorded != (sys.n_monomials, sys.rank, sys.dimension, sys.empty_prefix):
                    return False
            if v["status"] == "excluded" and v["reason"] == "delta-genus":
                ineq = v["evidence"]["delta_inequality"]
                d = deg["degree"]
                ms = [m for _, m in v["evidence"]["conditions"]]
                if ineq["lhs"] != (d - 1) * (d - 2) or ineq["rhs"] != sum(m * (m - 1) for m in ms):
                    return False
                if ineq["lhs"] >= ineq["rhs"]:
                    return False
    return True


def exclusion_to_json(lattice: IntersectionLattice, rep: CurveExclusionReport) -> dict:
    return {
        "bound_kind": rep.bound_kind,
        "d_max": rep.d_max,
        "complete": rep.complete,
        "degree_bound": {
            "bound": rep.bound.bound,
            "profile": rep.bound.profile,
            "case1_degrees": list(rep.bound.case1),
            "case2_degrees": list(rep.bound.case2),
            "reason": rep.bound.reason,
        },
        "degrees": [
            {
                "degree": d.degree,
                "status": d.status,
                "reason": d.reason,
                "evidence": d.evidence,
                "vectors": [
                    {"multiplicities": _vector_json(lattice, v.vector)["multiplicities"],
                     "status": v.status, "reason": v.reason, "evidence": v.evidence}
                    for v in d.vectors
                ],
            }
            for d in rep.degrees
        ],
    }
