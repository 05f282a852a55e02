from __future__ import annotations

import copy
import itertools
import math

import pytest

from linevanish.arrangement import (gen_ceva, gen_hexagonal, gen_near_pencils, intersection_lattice,
                                    near_pencil_system, published_points)
from linevanish.badcurve import (EnumerationBudgetExceeded, auto_degree_bound, delta_bound_ok,
                                 enumerate_mult_vectors, exclude_bad_curves, exclusion_to_json,
                                 full_support_relaxation, judge_vector, milnor_bound_ok,
                                 recheck_exclusion)
from linevanish.exactgeom import curve_system
from linevanish.localsys import milnor_system, partition


def brute_vectors(lattice, part, d, *, delta_prune=True):
    """Every assignment in {0..d} on the bad points, filtered by the definitions."""
    bad = list(part.T_eq1)
    genus = (d - 1) * (d - 2)
    out = []
    for ms in itertools.product(range(d + 1), repeat=len(bad)):
        m = dict(zip(bad, ms))
        if any(sum(m.get(j, 0) for j in st.points) != d for st in lattice.per_line):
            continue
        if sum((v - 1) ** 2 for v in ms if v) > genus:
            continue
        if delta_prune and sum(v * (v - 1) for v in ms) > genus:
            continue
        out.append(tuple((p, v) for p, v in zip(bad, ms) if v))
    return sorted(out)


def _hexagon(variant):
    A = gen_hexagonal(variant)
    lat = intersection_lattice(A)
    return lat, partition(lat, milnor_system(A.n, 3))


def _near_pencil():
    A = gen_near_pencils(3, [3, 3, 4])
    lat = intersection_lattice(A)
    return lat, partition(lat, near_pencil_system(A))


@pytest.mark.parametrize("make", [lambda: _hexagon("on_conic"), lambda: _hexagon("off_conic"),
                                  _near_pencil])
@pytest.mark.parametrize("d", [1, 2, 3, 4])
@pytest.mark.parametrize("delta", [True, False])
def test_enumeration_matches_brute_force(make, d, delta):
    lat, part = make()
    got = sorted(v.mults for v in enumerate_mult_vectors(lat, part, d, delta_prune=delta))
    assert got == brute_vectors(lat, part, d, delta_prune=delta)


def test_enumeration_on_ceva3_order3():
    A = gen_ceva(3)
    lat = intersection_lattice(A)
    part = partition(lat, milnor_system(A.n, 3))
    got = sorted(v.mults for v in enumerate_mult_vectors(lat, part, 1))
    assert got == brute_vectors(lat, part, 1)
    assert len(got) == 4


def test_enumeration_budget():
    A = gen_ceva(5)
    lat = intersection_lattice(A)
    part = partition(lat, milnor_system(A.n, 3))
    with pytest.raises(EnumerationBudgetExceeded):
        enumerate_mult_vectors(lat, part, 4, max_nodes=50)


def test_genus_bounds():
    assert milnor_bound_ok(3, [2]) and not milnor_bound_ok(3, [3])
    assert delta_bound_ok(4, [2, 2, 2]) and not delta_bound_ok(4, [2, 2, 2, 2])
    assert milnor_bound_ok(4, [2] * 6) and not delta_bound_ok(4, [2] * 6)


# -- degree bounds --------------------------------------------------------------

def _case1_possible(d, n=60, nu=6, N=30):
    # all bad points on C: s = n d / nu, N sum m^2 >= s^2, genus inequality
    s = n * d / nu
    return (d - 1) * (d - 2) >= s * s / N - 2 * s + N


def _case2_possible(d, nu=6):
    # a missed point: nu lines carrying pairs with a + b = d, sum of squares >= nu d^2 / 2
    return (d - 1) * (d - 2) >= nu * d * d / 2 - 2 * nu * d + 2 * nu


def test_g31_degree_bound(g31_lattice, g31_order6):
    b = auto_degree_bound(g31_lattice, g31_order6)
    assert b.bound == 4
    assert b.case1 == (3, 4)
    assert b.case2 == (2,)
    # independent scan of the two inequalities
    assert tuple(d for d in range(1, 50) if _case1_possible(d)) == (3, 4)
    assert tuple(d for d in range(2, 50) if _case2_possible(d)) == (2,)


def test_degree_bound_profiles():
    lat, part = _near_pencil()
    assert auto_degree_bound(lat, part).bound == 1
    lat, part = _hexagon("on_conic")
    assert auto_degree_bound(lat, part).bound is None
    A = gen_ceva(4)
    lat = intersection_lattice(A)
    # order 4: the vertex points are the only bad ones; most lines see one
    b = auto_degree_bound(lat, partition(lat, milnor_system(A.n, 4)))
    assert b.bound in (0, 1)


# -- exclusion ------------------------------------------------------------------

@pytest.fixture(scope="module")
def g31_exclusion(g31_lattice, g31_order6):
    return exclude_bad_curves(g31_lattice, g31_order6)


def test_g31_exclusion_is_complete(g31_exclusion):
    rep = g31_exclusion
    assert rep.bound_kind == "proven" and rep.complete
    assert [d.degree for d in rep.degrees] == [1, 2, 3, 4]
    assert all(d.status == "excluded" for d in rep.degrees)
    assert rep.candidates == []


def test_g31_exclusion_reasons(g31_exclusion):
    by = {d.degree: d for d in g31_exclusion.degrees}
    assert len(by[3].vectors) == 1
    assert by[3].vectors[0].reason == "empty-linear-system"
    assert by[4].reason == "no-feasible-vector"
    assert by[4].evidence["full_support_relaxation"]["empty_prefix"] == list(range(1, 16))


@pytest.mark.parametrize("plane", ["published", "default"])
def test_cubic_and_quartic_prefixes(plane, g31_sextuples):
    pts = published_points(corrected=True) if plane == "published" else g31_sextuples
    # ten points still carry a cubic; the eleventh kills it
    assert curve_system(3, [(p, 1) for p in pts[:10]]).dimension == 1
    assert curve_system(3, [(p, 1) for p in pts[:11]]).dimension == 0
    assert curve_system(4, [(p, 1) for p in pts[:14]]).dimension == 1
    assert curve_system(4, [(p, 1) for p in pts[:15]]).dimension == 0


def test_relaxation_evidence_shape(g31_lattice, g31_order6):
    ev = full_support_relaxation(g31_lattice, g31_order6, 3)
    assert ev["dimension"] == 0 and ev["empty_prefix"] == list(range(1, 12))


def test_exclusion_json_rechecks(g31_lattice, g31_exclusion):
    js = exclusion_to_json(g31_lattice, g31_exclusion)
    assert recheck_exclusion(g31_lattice, js)
    bad = copy.deepcopy(js)
    vec = next(v for d in bad["degrees"] for v in d["vectors"])
    vec["evidence"]["rank"] += 1
    assert not recheck_exclusion(g31_lattice, bad)


def test_hexagon_on_conic_candidate():
    lat, part = _hexagon("on_conic")
    rep = exclude_bad_curves(lat, part, 4)
    by = {d.degree: d for d in rep.degrees}
    assert by[2].status == "candidate"
    (cand,) = by[2].vectors
    assert cand.vector.as_dict() == {p: 1 for p in part.T_eq1}
    assert len(cand.evidence["basis"]) == 1
    assert by[4].vectors[0].reason == "delta-genus"
    assert rep.bound_kind == "user" and not rep.complete


def test_hexagon_off_conic_excludes_conic_and_quartic():
    lat, part = _hexagon("off_conic")
    rep = exclude_bad_curves(lat, part, 4)
    by = {d.degree: d for d in rep.degrees}
    assert all(d.status == "excluded" for d in rep.degrees)
    (conic,) = by[2].vectors
    assert conic.reason == "empty-linear-system"
    (quartic,) = by[4].vectors
    assert quartic.vector.as_dict() == {p: 2 for p in part.T_eq1}
    assert quartic.reason == "empty-linear-system"
    # six double points on a quartic: 15 - 18 conditions, and the system is really empty
    assert quartic.evidence["dimension"] == 0
    assert not rep.complete  # no proven bound for this profile


def test_vector_candidates_carry_a_basis():
    lat, part = _near_pencil()
    (v,) = enumerate_mult_vectors(lat, part, 1)
    verdict = judge_vector(lat, v)
    assert verdict.status == "candidate"
    assert verdict.evidence["dimension"] == 1
    assert math.comb(3, 2) == verdict.evidence["monomials"]
