"""Vanishing criteria for H^1(M, L) and sweeps over Milnor-fiber eigenvalue orders."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping

from .arrangement import Arrangement, IntersectionLattice, intersection_lattice, is_pencil
from .badcurve import exclude_bad_curves, exclusion_to_json
from .blowup import (AuxLine, DisconnectedExtensionError, DivisorModel, Exceptional, QDivisor,
                     StrictLine, canonical_support, certificate_from_single_bad_point,
                     closed_form_slacks, divisor_connected, extend_nm, nm_search, qdiv_dot,
                     qdiv_self, total_model, verify_nm)
from .exactgeom import ProjLine, join, meet, parse_scalar
from .localsys import (LocalSystem, Partition, SymbolicSystem, milnor_order_filter, milnor_system,
                       partition)

# degree range searched when the bad-point profile has no proven bound and
# the caller gave none; results are then never more than "inconclusive"
EXPLORATORY_D_MAX = 4
EXPLORATORY_NODES = 200000

CERTIFIED = "vanishing_certified"
INCONCLUSIVE = "inconclusive"
VIOLATED = "hypotheses_violated"


@dataclass
class VanishingReport:
    arrangement: str
    system: str
    criterion: str | None
    status: str
    evidence: dict = field(default_factory=dict)
    external_assumptions: list = field(default_factory=list)
    citations: list = field(default_factory=list)

    @property
    def certified(self) -> bool:
        return self.status == CERTIFIED

    def to_json(self) -> dict:
        return {
            "arrangement": self.arrangement,
            "system": self.system,
            "criterion": self.criterion,
            "status": self.status,
            "evidence": self.evidence,
            "external_assumptions": list(self.external_assumptions),
            "citations": list(self.citations),
        }


def _pt(i: int) -> int:
    return i + 1


# -- quick criteria -----------------------------------------------------------

def criterion_cdo(lattice: IntersectionLattice, part: Partition) -> int | None:
    """First line carrying no bad point, if any."""
    for i, st in enumerate(lattice.per_line):
        if not any(part.is_bad(j) for j in st.points):
            return i
    return None


def cdo_certificate(lattice: IntersectionLattice, H: int):
    """NM divisor on the blow-up of T along H: H + sum b E_p with b = 1 - 1/(2k)."""
    blown = [j for j in lattice.per_line[H].points if lattice.points[j].multiplicity >= 3]
    model = DivisorModel(lattice, blown)
    k = len(blown)
    coeffs = {StrictLine(H): Fraction(1)}
    for p in blown:
        coeffs[Exceptional(p)] = 1 - Fraction(1, 2 * k)
    D = QDivisor(coeffs)
    return model, verify_nm(model, D)


def bad_lines_through(lattice: IntersectionLattice, part: Partition, p: int) -> list[dict]:
    """Lines L through bad point p, not in the arrangement, with L meeting the
    arrangement only in bad points.  Every such line contains a second bad
    point, so joining p with the other bad points finds them all."""
    A = lattice.arrangement
    P = lattice.points[p].point
    idx = {lp.point: i for i, lp in enumerate(lattice.points)}
    seen = set()
    out = []
    for q in part.T_eq1:
        if q == p:
            continue
        L = join(P, lattice.points[q].point)
        if L in seen or L in A.lines:
            continue
        seen.add(L)
        hits = set()
        ok = True
        for H in A.lines:
            x = meet(L, H)
            j = idx.get(x)
            if j is None or not part.is_bad(j):
                ok = False
                break
            hits.add(j)
        if ok:
            out.append({"line": [c.format() for c in L.coords],
                        "points": sorted(_pt(j) for j in hits)})
    return out


@dataclass
class SingleBadPointResult:
    witness: tuple[int, int] | None  # (H0, p)
    blocked: list[dict] = field(default_factory=list)  # lines H0 rejected by a bad line


def criterion_single_bad_point(lattice: IntersectionLattice, part: Partition) -> SingleBadPointResult:
    blocked = []
    lines_at: dict[int, list] = {}
    for i, st in enumerate(lattice.per_line):
        bad = [j for j in st.points if part.is_bad(j)]
        if len(bad) != 1:
            continue
        p = bad[0]
        if p not in lines_at:
            lines_at[p] = bad_lines_through(lattice, part, p)
        if not lines_at[p]:
            return SingleBadPointResult((i, p), blocked)
        blocked.append({"line": _pt(i), "point": _pt(p), "bad_lines": lines_at[p]})
    return SingleBadPointResult(None, blocked)


def single_bad_point_evidence(lattice: IntersectionLattice, part: Partition, H0: int, p: int) -> dict:
    model = total_model(lattice)
    D = certificate_from_single_bad_point(model, H0, p, part)
    cert = verify_nm(model, D)
    if not cert.ok:
        raise AssertionError("explicit certificate failed: " + cert.describe())
    # enlarge to H0, the lines missing p, and the exceptionals over T_{!=1}
    through_p = set(lattice.points[p].incident)
    target = ([StrictLine(H0)] + [StrictLine(i) for i in range(lattice.arrangement.n) if i not in through_p]
              + [Exceptional(q) for q in part.T_neq1])
    ev = {"witness": {"line": _pt(H0), "point": _pt(p)}, "nm_certificate": cert.to_json()}
    extra = [c for c in target if c not in set(D.support)]
    try:
        D2 = extend_nm(model, cert, extra)
        cert2 = verify_nm(model, D2)
        ev["extended_certificate"] = cert2.to_json()
        ev["connectivity"] = divisor_connected(model, D2.support)
    except DisconnectedExtensionError as e:
        ev["extension_failure"] = str(e)
    ev["no_bad_line"] = {"candidates_checked": len(part.T_eq1) - 1, "bad_lines": []}
    return ev


# -- full pipeline --------------------------------------------------------------

def _candidate_obstructions(lattice: IntersectionLattice, part: Partition, rep) -> list[dict]:
    """For degree-1 candidates, the NM failure of D' enlarged by that line."""
    out = []
    A = lattice.arrangement
    for deg in rep.degrees:
        if deg.degree != 1:
            continue
        for v in deg.candidates:
            if v.evidence.get("dimension") != 1:
                continue
            coeffs = [parse_scalar(c, A.field) for c in v.evidence["basis"][0]]
            L = ProjLine(coeffs, A.field)
            if L in A.lines:
                continue
            model = total_model(lattice, [L])
            base = canonical_support(lattice, part)
            support = base + [AuxLine(0)]
            res = verify_nm(model, QDivisor.unit(support), support)
            out.append({"curve": [c.format() for c in L.coords], "degree": 1,
                        "component": AuxLine(0).label,
                        "intersection_with_D": str(qdiv_dot(model, QDivisor.unit(base), AuxLine(0))),
                        "nm_failure": None if res.ok else res.to_json()})
    return out


def full_pipeline(lattice: IntersectionLattice, part: Partition, *, d_max: int | None = None,
                  max_rows: int = 20000) -> tuple[str, dict]:
    model = total_model(lattice)
    support = canonical_support(lattice, part)
    ev: dict = {"normal_crossing": {
        "blown_up": "all points of multiplicity >= 3",
        "holds": True,
        "note": "after blowing up every multiple point of multiplicity >= 3 the total transform has only nodes",
    }}
    obstructions = []
    # closed-form cross-check of the unit divisor
    unit = QDivisor.unit(support)
    closed = closed_form_slacks(lattice, part)
    for c in support:
        if qdiv_dot(model, unit, c) != closed[c]:
            raise AssertionError(f"closed form disagrees with the pairing on {c.label}")
    res = nm_search(model, support, max_rows=max_rows)
    nm_ok = False
    if res.status == "feasible":
        cert = verify_nm(model, res.divisor, support)
        ev["nm_certificate"] = cert.to_json()
        ev["nm_certificate"]["method"] = res.method
        self_int = qdiv_self(model, res.divisor)
        ev["self_intersection_positive"] = self_int > 0
        nm_ok = cert.ok and self_int > 0
        if not nm_ok:
            obstructions.append("NM divisor has non-positive self-intersection")
        # enlarge to the full total transform by the exceptionals over T_{=1}
        try:
            D2 = extend_nm(model, cert, [Exceptional(p) for p in part.T_eq1])
            ev["total_transform_certificate"] = verify_nm(model, D2).to_json()
        except DisconnectedExtensionError as e:
            ev["total_transform_certificate"] = {"failure": str(e)}
    else:
        ev["nm_certificate"] = None
        ev["nm_search"] = {"status": res.status, "explanation": res.explanation}
        obstructions.append(f"NM search {res.status}")
    conn = divisor_connected(model, support)
    ev["connectivity"] = conn
    if not conn:
        obstructions.append("D' is disconnected")
    bound_given = d_max
    if d_max is None:
        rep = exclude_bad_curves(lattice, part)
        if rep.bound_kind == "none":
            rep = exclude_bad_curves(lattice, part, EXPLORATORY_D_MAX, max_nodes=EXPLORATORY_NODES)
            ev["exploratory_d_max"] = EXPLORATORY_D_MAX
    else:
        rep = exclude_bad_curves(lattice, part, bound_given)
    ev["exclusion"] = exclusion_to_json(lattice, rep)
    if rep.candidates:
        obstructions.append(f"{len(rep.candidates)} inconclusive bad-curve candidate(s)")
        ev["candidate_obstructions"] = _candidate_obstructions(lattice, part, rep)
    if rep.bound_kind != "proven":
        obstructions.append("no proven degree bound: exclusion is bounded only")
    elif not rep.complete and not rep.candidates:
        obstructions.append("exclusion incomplete")
    ev["obstructions"] = obstructions
    status = CERTIFIED if (nm_ok and conn and rep.complete) else INCONCLUSIVE
    return status, ev


def _system_spec(L) -> str:
    return L.spec()


def certify_vanishing(A: Arrangement, L: LocalSystem | SymbolicSystem, *, d_max: int | None = None,
                      external_assumptions=(), lattice: IntersectionLattice | None = None,
                      max_rows: int = 20000) -> VanishingReport:
    lattice = lattice or intersection_lattice(A)
    rep = VanishingReport(A.label, _system_spec(L), None, VIOLATED,
                          external_assumptions=list(external_assumptions))
    problems = []
    if not L.strict:
        zero = [i + 1 for i, a in enumerate(L.exponents) if a == 0]
        problems.append(f"trivial monodromy around lines {zero}")
    if is_pencil(A):
        problems.append("arrangement is a pencil")
    if problems:
        rep.evidence = {"violations": problems}
        return rep
    part = partition(lattice, L)
    summary = {"T_eq1": len(part.T_eq1), "T_neq1": len(part.T_neq1)}

    H = criterion_cdo(lattice, part)
    if H is not None:
        model, cert = cdo_certificate(lattice, H)
        rep.criterion, rep.status = "cdo", CERTIFIED
        rep.evidence = {"partition": summary, "witness": {"line": _pt(H)},
                        "nm_certificate": cert.to_json(), "connectivity": True,
                        "normal_crossing": {"blown_up": "multiple points on the witness line", "holds": True}}
        rep.citations.append("a line without bad points gives vanishing (complement of the blow-up along it is C^2)")
        return rep

    sbp = criterion_single_bad_point(lattice, part)
    if sbp.witness is not None:
        H0, p = sbp.witness
        ev = single_bad_point_evidence(lattice, part, H0, p)
        ev["partition"] = summary
        ev["normal_crossing"] = {"blown_up": "all points of multiplicity >= 3", "holds": True}
        rep.criterion, rep.status, rep.evidence = "single_bad_point", CERTIFIED, ev
        return rep

    status, ev = full_pipeline(lattice, part, d_max=d_max, max_rows=max_rows)
    ev["partition"] = summary
    if sbp.blocked:
        ev["single_bad_point_gap"] = {
            "note": "a line holds a single bad point, but a line through it meets the arrangement "
                    "only in bad points; the criterion without this condition is conjectural and not used",
            "blocked": sbp.blocked,
        }
    rep.criterion, rep.status, rep.evidence = "full_pipeline", status, ev
    return rep


# -- Milnor sweeps ----------------------------------------------------------------

def cited_dimensions(A: Arrangement) -> dict[int, dict]:
    """Known eigenspace dimensions quoted from the literature, never computed."""
    prov = A.provenance or {}
    if prov.get("family") == "ceva":
        m = prov["m"]
        return {3: {"dim_H1_F_lambda": 2 if m % 3 == 0 else 1,
                    "source": "MP", "applies_to": "lambda of order 3"}}
    return {}


def parse_assumptions(spec: str | None) -> dict[int, str]:
    """'2,3:MPP' -> {2: 'MPP', 3: 'MPP'}; several groups separated by ';'."""
    out: dict[int, str] = {}
    if not spec:
        return out
    for group in spec.split(";"):
        group = group.strip()
        if not group:
            continue
        orders, _, cite = group.partition(":")
        cite = cite.strip() or "external"
        for o in orders.split(","):
            o = o.strip()
            if not o.isdigit() or int(o) < 2:
                raise ValueError(f"bad order {o!r} in assumption {group!r}")
            out[int(o)] = cite
    return out


@dataclass
class SweepReport:
    arrangement: str
    orders: list[int]
    per_order: dict[int, dict]
    aggregate: str
    undetermined: list[int]

    def to_json(self) -> dict:
        return {
            "arrangement": self.arrangement,
            "orders": self.orders,
            "per_order": {str(k): v for k, v in sorted(self.per_order.items())},
            "aggregate": self.aggregate,
            "undetermined": self.undetermined,
        }


IDENTITY = "monodromy identity on H^1"


def milnor_sweep(A: Arrangement, *, external_assumptions: Mapping[int, str] | None = None,
                 d_max: int | None = None, certify_assumed: bool = False,
                 lattice: IntersectionLattice | None = None) -> SweepReport:
    lattice = lattice or intersection_lattice(A)
    assumed = dict(external_assumptions or {})
    orders = milnor_order_filter(lattice)
    cited = cited_dimensions(A)
    per: dict[int, dict] = {}
    undetermined = []
    for k in orders:
        entry: dict = {}
        if k in assumed and not certify_assumed:
            entry["status"] = "externally_excluded"
            entry["citation"] = assumed[k]
            per[k] = entry
            continue
        r = certify_vanishing(A, milnor_system(A.n, k), d_max=d_max, lattice=lattice)
        entry["report"] = r.to_json()
        if r.certified:
            entry["status"] = "certified"
            entry["criterion"] = r.criterion
        elif k in assumed:
            entry["status"] = "externally_excluded"
            entry["citation"] = assumed[k]
        else:
            entry["status"] = "undetermined"
            undetermined.append(k)
            if k in cited:
                entry["cited"] = cited[k]
        per[k] = entry
    aggregate = IDENTITY if not undetermined else "undetermined orders remain"
    return SweepReport(A.label, orders, per, aggregate, undetermined)
