"""Canonical JSON output, schema validation, golden tables and re-verification."""

from __future__ import annotations

import json
from fractions import Fraction
from importlib import resources
from pathlib import Path

from .arrangement import Arrangement, IntersectionLattice, intersection_lattice
from .badcurve import (collinear_subsets, common_intersection, conics_with_min_incidence,
                       pairwise_overlap_table, recheck_exclusion)
from .blowup import (DivisorModel, QDivisor, divisor_connected, parse_component, qdiv_dot,
                     total_model)
from .localsys import parse_local_system

SCHEMA_VERSION = 1


def dumps(obj) -> str:
    """Deterministic JSON text (sorted keys, fixed indentation, trailing newline)."""
    return json.dumps(obj, sort_keys=True, indent=2, ensure_ascii=False, default=_default) + "\n"


def _default(o):
    if isinstance(o, Fraction):
        return str(o)
    if isinstance(o, (set, frozenset)):
        return sorted(o)
    raise TypeError(f"cannot serialize {type(o).__name__}")


def load_schema() -> dict:
    text = resources.files("linevanish").joinpath("report.schema.json").read_text()
    return json.loads(text)


def validate(obj) -> None:
    """Raise jsonschema.ValidationError when ``obj`` does not match the schema."""
    import jsonschema
    jsonschema.validate(json.loads(dumps(obj)), load_schema())


def envelope(command: str, arrangement: str, system: str | None, result) -> dict:
    return {"schema_version": SCHEMA_VERSION, "command": command,
            "input": {"arrangement": arrangement, "system": system}, "result": result}


# -- golden tables ----------------------------------------------------------------

def sets_json(sets) -> list[list[int]]:
    """0-based index tuples -> sorted list of sorted 1-based lists."""
    return sorted(sorted(i + 1 for i in s) for s in sets)


def golden_tables(points, *, conic_threshold: int = 12, quad_prefix: int = 24,
                  threads: int = 1) -> dict[str, object]:
    triples = collinear_subsets(points, 3)
    quads = collinear_subsets(points, 4)
    quads_prefix = collinear_subsets(points[:quad_prefix], 4)
    conics = conics_with_min_incidence(points, conic_threshold, threads=threads)
    conic_sets = [h.points for h in conics]
    tables = {
        "collinear_triples": sets_json(triples),
        "collinear_quadruples": sets_json(quads),
        f"collinear_quadruples_first_{quad_prefix}": sets_json(quads_prefix),
        f"conics_min_{conic_threshold}": sets_json(conic_sets),
    }
    if len(conic_sets) >= 2:
        srt = sorted(conic_sets, key=lambda s: sorted(s))
        tables["conic_overlaps"] = pairwise_overlap_table(srt)
    return tables


def emit_goldens(tables: dict[str, object], path) -> list[Path]:
    out = Path(path)
    out.mkdir(parents=True, exist_ok=True)
    written = []
    for name, data in sorted(tables.items()):
        f = out / f"{name}.json"
        f.write_text(dumps(data))
        written.append(f)
    return written


# -- re-verification of certify reports -----------------------------------------

def _check_certificate(model: DivisorModel, block: dict) -> list[str]:
    coeffs = {parse_component(k): Fraction(v) for k, v in block["coefficients"].items()}
    issues = [f"coefficient of {c.label} is not positive" for c, v in coeffs.items() if v <= 0]
    if issues:
        return issues
    D = QDivisor(coeffs)
    total = Fraction(0)
    for label, s in block["slacks"].items():
        c = parse_component(label)
        got = qdiv_dot(model, D, c)
        if got != Fraction(s):
            issues.append(f"slack of {label}: recorded {s}, recomputed {got}")
        if got <= 0:
            issues.append(f"slack of {label} is not positive")
        total += D.coeff(c) * got
    if set(block["slacks"]) != set(block["coefficients"]):
        issues.append("slacks and coefficients cover different components")
    if total != Fraction(block["self_intersection"]):
        issues.append(f"self-intersection: recorded {block['self_intersection']}, recomputed {total}")
    return issues


def recheck_certify_report(report: dict, A: Arrangement,
                           lattice: IntersectionLattice | None = None) -> list[str]:
    """Re-run every stored check of a vanishing report; returns a list of problems."""
    lattice = lattice or intersection_lattice(A)
    issues = []
    if report["arrangement"] != A.label:
        return [f"report is for {report['arrangement']!r}, not {A.label!r}"]
    ev = report["evidence"]
    if report["status"] != "vanishing_certified":
        return issues
    L = parse_local_system(report["system"], A.n)
    from .localsys import partition
    part = partition(lattice, L)
    crit = report["criterion"]
    if crit == "cdo":
        H = ev["witness"]["line"] - 1
        if any(part.is_bad(j) for j in lattice.per_line[H].points):
            issues.append(f"witness line {H + 1} carries a bad point")
        blown = [j for j in lattice.per_line[H].points if lattice.points[j].multiplicity >= 3]
        issues += _check_certificate(DivisorModel(lattice, blown), ev["nm_certificate"])
    elif crit == "single_bad_point":
        H0, p = ev["witness"]["line"] - 1, ev["witness"]["point"] - 1
        bad = [j for j in lattice.per_line[H0].points if part.is_bad(j)]
        if bad != [p]:
            issues.append("witness line does not carry exactly the witness bad point")
        from .certify import bad_lines_through
        if bad_lines_through(lattice, part, p):
            issues.append("a line through the witness point meets the arrangement only in bad points")
        model = total_model(lattice)
        issues += _check_certificate(model, ev["nm_certificate"])
        if "extended_certificate" in ev:
            issues += _check_certificate(model, ev["extended_certificate"])
    elif crit == "full_pipeline":
        model = total_model(lattice)
        issues += _check_certificate(model, ev["nm_certificate"])
        supp = [parse_component(k) for k in ev["nm_certificate"]["coefficients"]]
        if divisor_connected(model, supp) != ev["connectivity"]:
            issues.append("connectivity verdict differs")
        ex = ev["exclusion"]
        if not (ex["complete"] and ex["bound_kind"] == "proven"):
            issues.append("exclusion is not complete under a proven bound")
        if any(d["status"] != "excluded" for d in ex["degrees"]):
            issues.append("a degree is not excluded")
        if not recheck_exclusion(lattice, ex):
            issues.append("an exclusion rank computation does not reproduce")
    else:
        issues.append(f"unknown criterion {crit!r}")
    return issues
