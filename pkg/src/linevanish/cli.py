"""Command-line front end.

    linevanish lattice   --builtin g31-section
    linevanish certify   --builtin ceva:4 --milnor 4
    linevanish milnor    --builtin g31-section --assume-excluded 2,3:MPP
    linevanish incidence --builtin g31-section --points mult=6 --collinear 3

Mathematical verdicts go to the JSON body; the exit status is nonzero only
for usage, parse and internal errors.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import certify as cert_mod
from .arrangement import (Arrangement, ArrangementError, GenericityError, ParseError,
                          gen_ceva, gen_g31_published_section, gen_g31_section, gen_hexagonal,
                          gen_near_pencils, intersection_lattice, is_pencil, near_pencil_system,
                          parse_arrangement)
from .badcurve import (collinear_subsets, common_intersection, conics_with_min_incidence,
                       default_threads, exclude_bad_curves, exclusion_to_json,
                       pairwise_overlap_table, star_configuration_check)
from .blowup import (Exceptional, QDivisor, canonical_support, divisor_connected, extend_nm,
                     nm_search, parse_component, qdiv_self, total_model, verify_nm)
from .localsys import (LocalSystemError, SymbolicSystem, k_prime, milnor_order_filter,
                       milnor_system, parse_local_system, partition)
from .report import dumps, emit_goldens, envelope, golden_tables, sets_json

VERBS = ("lattice", "partition", "certify", "milnor", "incidence", "nm", "exclude")


class UsageError(Exception):
    pass


# -- input resolution -------------------------------------------------------------

def resolve_builtin(name: str) -> Arrangement:
    parts = name.split(":")
    head = parts[0]
    try:
        if head == "ceva" and len(parts) == 2:
            return gen_ceva(int(parts[1]))
        if head == "g31-section" and len(parts) == 1:
            return gen_g31_section()
        if head == "g31-section" and parts[1:] == ["published"]:
            return gen_g31_published_section()
        if head == "hexagon" and len(parts) == 2:
            return gen_hexagonal(parts[1])
        if head == "near-pencil" and len(parts) == 3:
            ell = int(parts[1])
            cs = [int(c) for c in parts[2].split(",")]
            if len(cs) == 1:
                cs = cs * ell
            return gen_near_pencils(ell, cs)
    except ValueError as e:
        if isinstance(e, (ArrangementError, GenericityError)):
            raise
        raise UsageError(f"bad builtin {name!r}: {e}") from None
    raise UsageError(f"unknown builtin {name!r}; expected ceva:m, g31-section, g31-section:published, "
                     "hexagon:on-conic, hexagon:off-conic or near-pencil:l:c")


def load_arrangement(args) -> Arrangement:
    if bool(args.builtin) == bool(args.file):
        raise UsageError("give exactly one of --builtin and --file")
    if args.builtin:
        return resolve_builtin(args.builtin)
    path = Path(args.file)
    return parse_arrangement(path.read_text(), label=path.name, source=str(path))


def natural_system(A: Arrangement, lattice):
    """The system a builtin comes with: 1/c_i for near-pencils, all vertices bad for hexagons."""
    fam = (A.provenance or {}).get("family")
    if fam == "near-pencil":
        return near_pencil_system(A)
    if fam == "hexagon":
        verts = frozenset(lattice.labeled(j) for j in range(1, 7))
        return SymbolicSystem(verts, A.n, "partition: eq1={" + ",".join(str(v + 1) for v in sorted(verts)) + "}")
    raise UsageError(f"{A.label} has no built-in local system; use --milnor, --exponents or --system")


def load_system(args, A: Arrangement, lattice, required: bool = True):
    given = [x for x in (args.milnor, args.exponents, args.system, args.system_file) if x is not None]
    if len(given) > 1:
        raise UsageError("give at most one of --milnor, --exponents, --system, --system-file")
    if not given:
        if required:
            raise UsageError("a local system is required (--milnor, --exponents, --system, --system-file)")
        return None
    if args.milnor is not None:
        return milnor_system(A.n, args.milnor)
    if args.exponents is not None:
        return parse_local_system("exponents: " + args.exponents, A.n, source="--exponents")
    if args.system_file is not None:
        p = Path(args.system_file)
        return parse_local_system(p.read_text(), A.n, source=str(p))
    if args.system == "builtin":
        return natural_system(A, lattice)
    return parse_local_system(args.system, A.n, source="--system")


# -- verbs ------------------------------------------------------------------------

def cmd_lattice(args, A, lattice):
    counts = lattice.multiplicity_counts()
    profiles: dict[str, int] = {}
    for i in range(A.n):
        key = ",".join(f"{m}:{c}" for m, c in lattice.line_profile(i).items())
        profiles[key] = profiles.get(key, 0) + 1
    terms = [f"{c}*C({m},2)" for m, c in counts.items()]
    res = {
        "lines": A.n,
        "field_order": A.field.order,
        "pencil": is_pencil(A),
        "multiplicity_counts": {str(m): c for m, c in counts.items()},
        "line_profiles": [{"profile": {m.split(":")[0]: int(m.split(":")[1]) for m in k.split(",")},
                           "lines": v} for k, v in sorted(profiles.items())],
        "totals": {"nodes": len(lattice.P), "multiple_points": len(lattice.T)},
        "checks": dict(lattice.checks, identity=" + ".join(terms) + f" = C({A.n},2) = {lattice.checks['pair_count_expected']}"),
        "milnor_orders": milnor_order_filter(lattice),
        "provenance": {k: v for k, v in (A.provenance or {}).items()},
    }
    if args.list_points:
        res["points"] = [{"index": i + 1, "multiplicity": lp.multiplicity,
                          "coords": [c.format() for c in lp.point.coords],
                          "lines": [j + 1 for j in lp.incident]}
                         for i, lp in enumerate(lattice.points) if lp.multiplicity >= args.min_mult]
    return envelope("lattice", A.label, None, res)


def cmd_partition(args, A, lattice):
    L = load_system(args, A, lattice)
    part = partition(lattice, L)
    res = {
        "strict": L.strict,
        "T_eq1": [i + 1 for i in part.T_eq1],
        "T_neq1_count": len(part.T_neq1),
        "per_line": [{"line": i + 1, "k": st.k, "k_prime": k_prime(lattice, part, i), "d": st.d,
                      "bad_points": [j + 1 for j in st.points if part.is_bad(j)]}
                     for i, st in enumerate(lattice.per_line)],
    }
    return envelope("partition", A.label, L.spec(), res)


def cmd_certify(args, A, lattice):
    L = load_system(args, A, lattice)
    rep = cert_mod.certify_vanishing(A, L, d_max=args.d_max, lattice=lattice, max_rows=args.max_rows)
    return envelope("certify", A.label, L.spec(), rep.to_json())


def cmd_milnor(args, A, lattice):
    assumed = cert_mod.parse_assumptions(args.assume_excluded)
    sw = cert_mod.milnor_sweep(A, external_assumptions=assumed, d_max=args.d_max,
                               certify_assumed=args.certify_assumed, lattice=lattice)
    out = sw.to_json()
    out["external_assumptions"] = [{"order": k, "citation": v} for k, v in sorted(assumed.items())]
    return envelope("milnor", A.label, None, out)


def _select_points(args, A, lattice):
    sel = args.points
    if sel == "labeled":
        idx = [i for i, lp in enumerate(lattice.points) if lp.label is not None]
    elif sel.startswith("mult="):
        m = int(sel[5:])
        idx = list(lattice.with_multiplicity(m))
    elif sel == "T":
        idx = list(lattice.T)
    else:
        raise UsageError(f"bad --points {sel!r}; use mult=k, labeled or T")
    if args.prefix is not None:
        idx = idx[:args.prefix]
    return idx


def cmd_incidence(args, A, lattice):
    idx = _select_points(args, A, lattice)
    pts = [lattice.points[i].point for i in idx]
    threads = args.threads or default_threads()
    if args.goldens:
        emit_goldens(golden_tables(pts, conic_threshold=args.conics or 12, threads=threads), args.goldens)
    if args.collinear is not None:
        return sets_json(collinear_subsets(pts, args.collinear))
    if args.conics is not None:
        hits = conics_with_min_incidence(pts, args.conics, threads=threads, brute=args.brute)
        sets = [h.points for h in hits]
        if args.overlap:
            return pairwise_overlap_table(sorted(sets, key=lambda s: sorted(s))) if len(sets) > 1 else []
        if args.stars:
            verdicts = []
            for s in sorted(sets, key=lambda s: sorted(s)):
                v = star_configuration_check([idx[j] for j in s], lattice)
                verdicts.append({"set": sorted(j + 1 for j in s), **v.to_json()})
            return envelope("incidence", A.label, None, {"stars": verdicts})
        if args.intersections:
            srt = sorted(sets, key=lambda s: sorted(s))
            return envelope("incidence", A.label, None, {
                "first_three": [j + 1 for j in common_intersection(srt[:3])] if len(srt) >= 3 else None,
                "last_three": [j + 1 for j in common_intersection(srt[-3:])] if len(srt) >= 3 else None,
            })
        return sets_json(sets)
    if args.goldens:
        return envelope("incidence", A.label, None, {"goldens": str(args.goldens)})
    raise UsageError("incidence needs --collinear K or --conics THRESHOLD")


def cmd_nm(args, A, lattice):
    L = load_system(args, A, lattice)
    part = partition(lattice, L)
    model = total_model(lattice)
    if args.support:
        support = [parse_component(s.strip()) for s in args.support.split(",") if s.strip()]
    else:
        support = canonical_support(lattice, part)
    res = nm_search(model, support, max_rows=args.max_rows)
    out = {"support": [c.label for c in support], "status": res.status, "method": res.method}
    if res.divisor is not None:
        cert = verify_nm(model, res.divisor, support)
        out["certificate"] = cert.to_json()
        out["self_intersection_positive"] = qdiv_self(model, res.divisor) > 0
        out["connectivity"] = divisor_connected(model, support)
        if args.extend_bad:
            D2 = extend_nm(model, cert, [Exceptional(p) for p in part.T_eq1])
            out["extended_certificate"] = verify_nm(model, D2).to_json()
    else:
        out["explanation"] = res.explanation
    return envelope("nm", A.label, L.spec(), out)


def cmd_exclude(args, A, lattice):
    L = load_system(args, A, lattice)
    part = partition(lattice, L)
    rep = exclude_bad_curves(lattice, part, args.d_max)
    return envelope("exclude", A.label, L.spec(), exclusion_to_json(lattice, rep))


HANDLERS = {"lattice": cmd_lattice, "partition": cmd_partition, "certify": cmd_certify,
            "milnor": cmd_milnor, "incidence": cmd_incidence, "nm": cmd_nm, "exclude": cmd_exclude}


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="linevanish", description="Vanishing certificates for twisted "
                                 "cohomology of line arrangement complements.")
    sub = ap.add_subparsers(dest="verb", required=True)
    for verb in VERBS:
        p = sub.add_parser(verb)
        p.add_argument("--builtin", help="ceva:m, g31-section[:published], hexagon:on-conic|off-conic, near-pencil:l:c")
        p.add_argument("--file", help="arrangement text file")
        p.add_argument("--output", "-o", help="write JSON here instead of standard output")
        if verb in ("partition", "certify", "nm", "exclude"):
            p.add_argument("--milnor", type=int)
            p.add_argument("--exponents", help="space-separated fractions, one per line")
            p.add_argument("--system", help="inline directive, e.g. 'partition: eq1={1,2}', or 'builtin'")
            p.add_argument("--system-file")
        if verb in ("certify", "milnor", "exclude"):
            p.add_argument("--d-max", type=int)
        if verb in ("certify", "nm"):
            p.add_argument("--max-rows", type=int, default=20000)
        if verb == "lattice":
            p.add_argument("--list-points", action="store_true")
            p.add_argument("--min-mult", type=int, default=3)
        if verb == "milnor":
            p.add_argument("--assume-excluded", help="orders with citation, e.g. 2,3:MPP")
            p.add_argument("--certify-assumed", action="store_true",
                           help="run the pipeline on externally excluded orders too")
        if verb == "incidence":
            p.add_argument("--points", default="mult=6")
            p.add_argument("--prefix", type=int, help="use only the first N selected points")
            p.add_argument("--collinear", type=int, choices=(3, 4))
            p.add_argument("--conics", type=int, metavar="THRESHOLD")
            p.add_argument("--brute", action="store_true")
            p.add_argument("--overlap", action="store_true")
            p.add_argument("--stars", action="store_true")
            p.add_argument("--intersections", action="store_true")
            p.add_argument("--threads", type=int)
            p.add_argument("--goldens", help="directory for golden tables")
        if verb == "nm":
            p.add_argument("--support", help="component labels, e.g. H1,H2,E5")
            p.add_argument("--extend-bad", action="store_true")
    return ap


def run(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        A = load_arrangement(args)
        lattice = intersection_lattice(A)
        out = HANDLERS[args.verb](args, A, lattice)
    except (UsageError, ParseError, LocalSystemError, ArrangementError, GenericityError, OSError) as e:
        print(f"linevanish: error: {e}", file=sys.stderr)
        return 2
    text = dumps(out)
    if args.output:
        Path(args.output).write_text(text)
    else:
        sys.stdout.write(text)
    return 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
