"""Incidence enumerations: collinear subsets and conics through many points."""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import combinations
from typing import Sequence

from ..exactgeom import (Cyclotomic, ProjPoint, collinear, cross, curve_system, det3,
                         evaluate_form, projective_key)
from ..exactgeom.projective import _canonical, integral_vector


def collinear_subsets(points: Sequence[ProjPoint], k: int) -> list[tuple[int, ...]]:
    """All k-subsets (0-based, lexicographic) of pairwise distinct points lying on one line."""
    if k not in (3, 4):
        raise ValueError("k must be 3 or 4")
    if len(set(points)) != len(points):
        raise ValueError("points must be pairwise distinct")
    n = len(points)
    triples = [t for t in combinations(range(n), 3)
               if collinear(points[t[0]], points[t[1]], points[t[2]])]
    if k == 3:
        return triples
    quads = []
    for a, b, c in triples:
        for d in range(c + 1, n):
            if det3(points[a].coords, points[b].coords, points[d].coords).is_zero():
                quads.append((a, b, c, d))
    return quads


def count_collinear_tests(n: int, k: int) -> int:
    from math import comb
    return comb(n, k)


# -- conics ----------------------------------------------------------------

def _dot(u, v):
    return u[0] * v[0] + u[1] * v[1] + u[2] * v[2]


def _quad_product(p, q) -> tuple:
    """Coefficients of (p.x)(q.x) in the monomial order x^2, xy, xz, y^2, yz, z^2."""
    return (p[0] * q[0], p[0] * q[1] + p[1] * q[0], p[0] * q[2] + p[2] * q[0],
            p[1] * q[1], p[1] * q[2] + p[2] * q[1], p[2] * q[2])


def conic_is_reducible(c: Sequence[Cyclotomic]) -> bool:
    a, b, cc, d, e, f = c
    two = 2
    m = ((a * two, b, cc), (b, d * two, e), (cc, e, f * two))
    return det3(*m).is_zero()


@dataclass(frozen=True)
class ConicHit:
    conic: tuple[Cyclotomic, ...]
    points: tuple[int, ...]
    reducible: bool


def _incidence(conic, points) -> tuple[int, ...]:
    return tuple(i for i, p in enumerate(points) if evaluate_form(conic, 2, p).is_zero())


def _irreducible_for_first(args) -> list[tuple]:
    """Irreducible conics whose three smallest incident indices start with ``a``."""
    a, points, threshold = args
    V = [integral_vector(p.coords) for p in points]
    n = len(V)
    found = []
    for b in range(a + 1, n):
        lab = cross(V[a], V[b])
        eab = [_dot(lab, v) for v in V]
        for c in range(b + 1, n):
            if eab[c].is_zero():
                continue
            if n - c - 1 < threshold - 3:
                break
            lac = cross(V[a], V[c])
            lbc = cross(V[b], V[c])
            # Cremona coordinates: conics through a, b, c become lines
            classes: dict[tuple, list] = {}
            for x in range(c + 1, n):
                e1, e2, e3 = eab[x], _dot(lac, V[x]), _dot(lbc, V[x])
                w = (e1 * e2, e1 * e3, e2 * e3)
                key = projective_key(w)
                ent = classes.get(key)
                if ent is None:
                    classes[key] = [w, 1]
                else:
                    ent[1] += 1
            cl = list(classes.values())
            if sum(m for _, m in cl) < threshold - 3:
                continue
            seen_lines: dict[tuple, list] = {}
            for i in range(len(cl)):
                wi = cl[i][0]
                for j in range(i + 1, len(cl)):
                    lam = cross(wi, cl[j][0])
                    key = projective_key(lam)
                    ent = seen_lines.get(key)
                    if ent is None:
                        seen_lines[key] = [lam, {i, j}]
                    else:
                        ent[1].add(i)
                        ent[1].add(j)
            for lam, members in seen_lines.values():
                if 3 + sum(cl[i][1] for i in members) < threshold:
                    continue
                q1, q2, q3 = _quad_product(lab, lac), _quad_product(lab, lbc), _quad_product(lac, lbc)
                conic = _canonical(tuple(lam[0] * u + lam[1] * v + lam[2] * w
                                         for u, v, w in zip(q1, q2, q3)))
                if conic_is_reducible(conic):
                    continue
                inc = _incidence(conic, points)
                if inc[:3] != (a, b, c):
                    continue
                found.append((conic, inc))
    return found


def _line_pair_conics(points: Sequence[ProjPoint], threshold: int) -> list[tuple]:
    """Reducible conics L1 + L2 admitting a 5-point subset with a unique conic."""
    n = len(points)
    V = [integral_vector(p.coords) for p in points]
    lines: dict[tuple, list] = {}
    for i, j in combinations(range(n), 2):
        ln = cross(V[i], V[j])
        key = projective_key(ln)
        if key not in lines:
            on = tuple(x for x in range(n) if _dot(ln, V[x]).is_zero())
            lines[key] = [ln, on]
    ls = sorted(lines.values(), key=lambda t: t[1])
    out = []
    for (l1, s1), (l2, s2) in combinations(ls, 2):
        union = sorted(set(s1) | set(s2))
        if len(union) < threshold:
            continue
        common = set(s1) & set(s2)
        a_only = len(s1) - len(common)
        b_only = len(s2) - len(common)
        if not ((len(s1) >= 3 and b_only >= 2) or (len(s2) >= 3 and a_only >= 2)):
            continue
        conic = _canonical(_quad_product(l1, l2))
        out.append((conic, tuple(union)))
    return out


def conics_with_min_incidence(points: Sequence[ProjPoint], threshold: int, *,
                              threads: int = 1, brute: bool = False) -> list[ConicHit]:
    """Distinct conics through >= threshold of the points that are determined by
    some five of them (i.e. some 5-subset has a unique conic).

    The default method walks 5-subsets (a<b<c<d<e) through the net of conics
    on a, b, c; each irreducible conic is reported from its three smallest
    incident points, and line pairs are enumerated from the point-lines.
    ``brute`` instead scans all threshold-sized subsets (oracle; small inputs).
    """
    if threshold < 5:
        raise ValueError("threshold must be at least 5")
    if len(set(points)) != len(points):
        raise ValueError("points must be pairwise distinct")
    points = list(points)
    if brute:
        hits = _brute(points, threshold)
    else:
        jobs = [(a, points, threshold) for a in range(len(points))]
        if threads > 1 and len(points) > 12:
            with ProcessPoolExecutor(max_workers=threads) as ex:
                parts = list(ex.map(_irreducible_for_first, jobs))
        else:
            parts = [_irreducible_for_first(j) for j in jobs]
        raw = [h for part in parts for h in part] + _line_pair_conics(points, threshold)
        hits = {}
        for conic, inc in raw:
            hits.setdefault(conic, inc)
    out = [ConicHit(c, inc, conic_is_reducible(c)) for c, inc in hits.items()]
    out.sort(key=lambda h: h.points)
    return out


def _brute(points, threshold) -> dict:
    hits = {}
    for sub in combinations(range(len(points)), threshold):
        sys = curve_system(2, [(points[i], 1) for i in sub])
        if sys.dimension == 1:
            conic = sys.basis[0]
            if conic not in hits:
                hits[conic] = _incidence(conic, points)
    return hits


def default_threads() -> int:
    try:
        return max(1, int(os.environ.get("LINEVANISH_THREADS", "1")))
    except ValueError:
        return 1


def pairwise_overlap_table(sets: Sequence[Sequence[int]]) -> list[list[int]]:
    if len(sets) < 2:
        raise ValueError("need at least two sets")
    ss = [set(s) for s in sets]
    return [[len(a & b) for b in ss] for a in ss]


def common_intersection(sets: Sequence[Sequence[int]]) -> list[int]:
    it = iter(sets)
    acc = set(next(it))
    for s in it:
        acc &= set(s)
    return sorted(acc)
