"""NM divisors: verification, search, explicit constructions and extension.

An effective Q-divisor sum a_i D_i with all a_i > 0 is an NM divisor when
its intersection with every one of its components is positive.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .fme import FMResult, solve_strict
from .model import (Component, DivisorModel, Exceptional, QDivisor, StrictLine, qdiv_dot)


@dataclass(frozen=True)
class NMCertificate:
    divisor: QDivisor
    slacks: dict[Component, Fraction]
    self_intersection: Fraction

    ok = True

    def to_json(self) -> dict:
        return {
            "coefficients": {c.label: str(v) for c, v in self.divisor.coefficients.items()},
            "slacks": {c.label: str(v) for c, v in self.slacks.items()},
            "self_intersection": str(self.self_intersection),
        }


@dataclass(frozen=True)
class NMFailure:
    violations: dict[Component, Fraction]
    missing: tuple[Component, ...] = ()
    slacks: dict[Component, Fraction] = field(default_factory=dict)

    ok = False

    def describe(self) -> str:
        parts = [f"{c.label}: D.{c.label} = {v}" for c, v in self.violations.items()]
        parts += [f"{c.label}: coefficient is not positive" for c in self.missing]
        return "; ".join(parts)

    def to_json(self) -> dict:
        return {
            "violations": {c.label: str(v) for c, v in self.violations.items()},
            "missing": [c.label for c in self.missing],
        }


def verify_nm(model: DivisorModel, D: QDivisor,
              support: Sequence[Component] | None = None) -> NMCertificate | NMFailure:
    """Check D.C > 0 for every C in the declared support (default: D's support)."""
    supp = tuple(sorted(set(support))) if support is not None else D.support
    for c in supp:
        model.check(c)
    missing = tuple(c for c in supp if D.coeff(c) <= 0)
    outside = [c for c in D.support if c not in set(supp)]
    if outside:
        raise ValueError(f"divisor has components outside the declared support: {outside}")
    slacks = {c: qdiv_dot(model, D, c) for c in supp}
    bad = {c: v for c, v in slacks.items() if v <= 0}
    if bad or missing:
        return NMFailure(bad, missing, slacks)
    self_int = sum((D.coeff(c) * slacks[c] for c in supp), Fraction(0))
    return NMCertificate(D, slacks, self_int)


def pairing_matrix(model: DivisorModel, support: Sequence[Component]) -> list[list[int]]:
    return [[model.pairing(a, b) for b in support] for a in support]


@dataclass(frozen=True)
class NMSearchResult:
    status: str  # "feasible" | "infeasible" | "undecided"
    divisor: QDivisor | None = None
    method: str = ""
    explanation: dict | None = None


def nm_search(model: DivisorModel, support: Sequence[Component], *,
              max_rows: int = 20000) -> NMSearchResult:
    """Find positive coefficients on ``support`` making an NM divisor, or prove none exist.

    The unit vector is tried first; otherwise the strict system
    {M a > 0, a > 0} (M the pairing matrix) is decided by Fourier-Motzkin.
    An infeasibility answer carries nonnegative multipliers y, z with
    y^T M + z = 0, which is impossible for any positive a.
    """
    support = list(dict.fromkeys(support))
    if not support:
        raise ValueError("empty support")
    for c in support:
        model.check(c)
    unit = QDivisor.unit(support)
    if verify_nm(model, unit, support).ok:
        return NMSearchResult("feasible", unit, "unit")
    M = pairing_matrix(model, support)
    m = len(support)
    rows = [list(r) for r in M] + [[1 if j == i else 0 for j in range(m)] for i in range(m)]
    res: FMResult = solve_strict(rows, max_rows=max_rows)
    if res.status == "feasible":
        D = QDivisor(dict(zip(support, res.solution)))
        if not verify_nm(model, D, support).ok:
            raise AssertionError("Fourier-Motzkin solution failed verification")
        return NMSearchResult("feasible", D, "fourier-motzkin")
    if res.status == "infeasible":
        y = res.certificate
        expl = {
            "slack_multipliers": {support[i].label: str(y[i]) for i in range(m) if y[i]},
            "positivity_multipliers": {support[i].label: str(y[m + i]) for i in range(m) if y[m + i]},
        }
        return NMSearchResult("infeasible", None, "fourier-motzkin", expl)
    return NMSearchResult("undecided", None, "fourier-motzkin", {"note": res.note})


def check_farkas(model: DivisorModel, support: Sequence[Component], explanation: dict) -> bool:
    """Re-verify an infeasibility explanation: y^T M + z = 0 with y, z >= 0 not both zero."""
    labels = [c.label for c in support]
    y = [Fraction(explanation["slack_multipliers"].get(l, "0")) for l in labels]
    z = [Fraction(explanation["positivity_multipliers"].get(l, "0")) for l in labels]
    if any(v < 0 for v in y + z) or not any(y + z):
        return False
    M = pairing_matrix(model, support)
    for j in range(len(support)):
        if sum((y[i] * M[i][j] for i in range(len(support))), Fraction(0)) + z[j] != 0:
            return False
    return True


class HypothesisError(ValueError):
    pass


class DisconnectedExtensionError(ValueError):
    pass


def _half_inverse(self_int: int) -> Fraction:
    return Fraction(1, 2 * -self_int) if self_int < 0 else Fraction(1)


def certificate_from_single_bad_point(model: DivisorModel, H0: int, p: int, partition) -> QDivisor:
    """The explicit NM divisor built around a line with a single bad point.

    With q_1..q_s the points of T_{!=1} on H0 and H_{i,c} the other lines
    through q_i, the divisor is
        H0 + sum b_i E_{q_i} + sum a_{i,c} H_{i,c},
    with a_{i,c} = 1/(2(-H_{i,c}^2)) when that square is negative (else 1)
    and b_i = 1 + (sum_c a_{i,c})/2.  For s = 0 it is H0 + eps H1 for a line
    H1 missing p.
    """
    lattice = model.lattice
    on_H0 = lattice.per_line[H0].points
    bad = [j for j in on_H0 if partition.is_bad(j)]
    if bad != [p]:
        raise HypothesisError(
            f"line H{H0 + 1} meets T_=1 in {[j + 1 for j in bad]}, expected exactly [{p + 1}]")
    qs = [j for j in on_H0 if j in set(partition.T_neq1)]
    for q in qs:
        if q not in model.blown:
            raise HypothesisError(f"point {q + 1} is not blown up in the model")
    coeffs: dict[Component, Fraction] = {StrictLine(H0): Fraction(1)}
    if qs:
        for q in qs:
            others = [i for i in lattice.points[q].incident if i != H0]
            total = Fraction(0)
            for i in others:
                a = _half_inverse(model.pairing(StrictLine(i), StrictLine(i)))
                coeffs[StrictLine(i)] = a
                total += a
            coeffs[Exceptional(q)] = 1 + total / 2
    else:
        through_p = set(lattice.points[p].incident)
        H1 = next((i for i in range(lattice.arrangement.n) if i not in through_p), None)
        if H1 is None:
            raise HypothesisError("arrangement is a pencil through the bad point")
        coeffs[StrictLine(H1)] = _half_inverse(model.pairing(StrictLine(H1), StrictLine(H1)))
    return QDivisor(coeffs)


def extension_order(model: DivisorModel, support: Sequence[Component],
                    extra: Sequence[Component]) -> list[Component]:
    """Order ``extra`` so each component meets the support built so far."""
    current = list(support)
    pending = [c for c in dict.fromkeys(extra) if c not in set(support)]
    order = []
    while pending:
        for c in pending:
            if any(model.pairing(c, s) > 0 for s in current):
                order.append(c)
                current.append(c)
                pending.remove(c)
                break
        else:
            raise DisconnectedExtensionError(
                "cannot attach " + ", ".join(c.label for c in pending) + " to the support")
    return order


def extend_nm(model: DivisorModel, cert: NMCertificate, extra: Sequence[Component]) -> QDivisor:
    """Add the extra components one at a time with exact small coefficients.

    Each new component C gets eps equal to half the supremum of values
    keeping every slack (old ones and D.C itself) positive.
    """
    for c in extra:
        model.check(c)
    D = cert.divisor
    support = list(D.support)
    slacks = {c: qdiv_dot(model, D, c) for c in support}
    for C in extension_order(model, support, extra):
        dC = qdiv_dot(model, D, C)
        if dC <= 0:
            raise DisconnectedExtensionError(f"{C.label} does not meet the divisor positively")
        bound = None
        for c in support:
            pc = model.pairing(C, c)
            if pc < 0:
                b = slacks[c] / -pc
                bound = b if bound is None or b < bound else bound
        sq = model.pairing(C, C)
        if sq < 0:
            b = dC / -sq
            bound = b if bound is None or b < bound else bound
        eps = bound / 2 if bound is not None else Fraction(1)
        D = D.plus({C: eps})
        for c in support:
            slacks[c] += eps * model.pairing(C, c)
        slacks[C] = dC + eps * sq
        support.append(C)
    return D
