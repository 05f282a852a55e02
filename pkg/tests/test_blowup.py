from __future__ import annotations

import itertools
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import small_builtins
from linevanish.arrangement import gen_hexagonal, intersection_lattice, near_pencil_system
from linevanish.blowup import (AuxLine, DivisorModel, Exceptional, ModelError, QDivisor,
                               StrictLine, bilinear_slacks, canonical_support, check_farkas,
                               closed_form_slacks, divisor_connected, extend_nm, nm_search,
                               pairing, parse_component, qdiv_self, solve_strict, total_model,
                               verify_nm)
from linevanish.exactgeom import ProjLine
from linevanish.localsys import LocalSystem, milnor_order_filter, milnor_system, partition


# -- Picard-lattice oracle: H^2 = 1, E_p^2 = -1, H.E_p = 0 ------------------------

def picard_class(lattice, blown, comp) -> dict:
    """Total-transform bookkeeping, kept independent of the model's shortcuts."""
    if comp.kind == 1:
        return {("E", comp.index): Fraction(1)}
    # strict transform of a line: H minus the blown points on it
    cls = {("H",): Fraction(1)}
    for j in lattice.per_line[comp.index].points:
        if j in blown:
            cls[("E", j)] = Fraction(-1)
    return cls


def intersect(lattice, blown, c1, c2) -> Fraction:
    a, b = picard_class(lattice, blown, c1), picard_class(lattice, blown, c2)
    return sum((a[k] * b[k] * (1 if k == ("H",) else -1) for k in set(a) & set(b)), Fraction(0))


def oracle_unit_slacks(lattice, part):
    blown = set(lattice.T)
    supp = canonical_support(lattice, part)
    comps = [StrictLine(i) for i in range(lattice.arrangement.n)] + [Exceptional(p) for p in lattice.T]
    return {c: sum(intersect(lattice, blown, s, c) for s in supp) for c in comps}


def systems_for(A, lat):
    out = [milnor_system(A.n, k) for k in milnor_order_filter(lat)]
    if A.provenance.get("family") == "near-pencil":
        out.append(near_pencil_system(A))
    return out


CASES = [(A, L) for A in small_builtins() for L in systems_for(A, intersection_lattice(A))]


@pytest.mark.parametrize("A, L", CASES, ids=lambda x: getattr(x, "label", None) or x.spec())
def test_closed_form_equals_bilinear_and_picard(A, L):
    lat = intersection_lattice(A)
    part = partition(lat, L)
    closed = closed_form_slacks(lat, part)
    model = total_model(lat)
    unit = QDivisor.unit(canonical_support(lat, part))
    bil = bilinear_slacks(model, unit, closed.keys())
    assert {c: Fraction(v) for c, v in closed.items()} == bil
    assert oracle_unit_slacks(lat, part) == bil


@pytest.mark.parametrize("k", [2, 3, 6])
def test_closed_form_on_g31_milnor(g31, g31_lattice, k):
    part = partition(g31_lattice, milnor_system(g31.n, k))
    closed = closed_form_slacks(g31_lattice, part)
    model = total_model(g31_lattice)
    unit = QDivisor.unit(canonical_support(g31_lattice, part))
    assert bilinear_slacks(model, unit, closed.keys()) == {c: Fraction(v) for c, v in closed.items()}


@settings(max_examples=30, deadline=None)
@given(st.lists(st.integers(min_value=1, max_value=5), min_size=8, max_size=8))
def test_closed_form_equals_bilinear_random_systems(nums):
    A = gen_hexagonal("off_conic")
    lat = intersection_lattice(A)
    ex = [Fraction(v, 6) for v in nums]
    ex.append((-sum(ex)) % 1)
    L = LocalSystem(tuple(ex))
    part = partition(lat, L)
    closed = closed_form_slacks(lat, part)
    assert oracle_unit_slacks(lat, part) == {c: Fraction(v) for c, v in closed.items()}


def test_g31_unit_divisor_numbers(g31_lattice, g31_order6):
    closed = closed_form_slacks(g31_lattice, g31_order6)
    neq = set(g31_order6.T_neq1)
    for c, v in closed.items():
        if c.kind == 0:
            assert v == 10
        elif c.index in neq:
            assert v == 2
        else:
            assert v == 6
    model = total_model(g31_lattice)
    unit = QDivisor.unit(canonical_support(g31_lattice, g31_order6))
    assert qdiv_self(model, unit) == 60 * 10 + 320 * 2 == 1240
    cert = verify_nm(model, unit)
    assert cert.ok and cert.self_intersection == 1240


# -- model basics ---------------------------------------------------------------

def test_pairing_rules():
    A = gen_hexagonal("on_conic")
    lat = intersection_lattice(A)
    model = total_model(lat)
    p = lat.T[0]
    i, j = lat.points[p].incident[:2]
    assert pairing(model, StrictLine(i), StrictLine(i)) == 1 - 2
    assert pairing(model, StrictLine(i), StrictLine(j)) == 0
    assert pairing(model, StrictLine(i), Exceptional(p)) == 1
    assert pairing(model, Exceptional(p), Exceptional(p)) == -1
    node = lat.with_multiplicity(2)[0]
    with pytest.raises(ModelError):
        pairing(model, Exceptional(node), StrictLine(0))


def test_aux_line_pairings():
    A = gen_hexagonal("on_conic")
    lat = intersection_lattice(A)
    model = total_model(lat, [ProjLine((7, 11, 13))])
    assert pairing(model, AuxLine(0), AuxLine(0)) == 1
    assert pairing(model, AuxLine(0), StrictLine(0)) == 1
    with pytest.raises(ModelError):
        total_model(lat, [A.lines[0]])


def test_component_labels_round_trip():
    for c in (StrictLine(4), Exceptional(17), AuxLine(0)):
        assert parse_component(c.label) == c


def test_negative_coefficients_rejected():
    with pytest.raises(ValueError):
        QDivisor({StrictLine(0): Fraction(-1)})


# -- Fourier-Motzkin ------------------------------------------------------------

def _grid_solution(M, radius=4):
    n = len(M[0])
    for x in itertools.product(range(-radius, radius + 1), repeat=n):
        if all(sum(a * b for a, b in zip(r, x)) > 0 for r in M):
            return x
    return None


small = st.integers(min_value=-3, max_value=3)


@settings(max_examples=150, deadline=None)
@given(st.integers(min_value=1, max_value=3).flatmap(
    lambda n: st.lists(st.lists(small, min_size=n, max_size=n), min_size=1, max_size=5)))
def test_fme_against_grid_sampling(M):
    res = solve_strict(M)
    grid = _grid_solution(M)
    if res.status == "feasible":
        assert all(sum(Fraction(a) * b for a, b in zip(r, res.solution)) > 0 for r in M)
    else:
        assert res.status == "infeasible"
        y = res.certificate
        assert all(v >= 0 for v in y) and any(y)
        for j in range(len(M[0])):
            assert sum(y[i] * M[i][j] for i in range(len(M))) == 0
        # a Gordan certificate leaves no room for a grid point either
        assert grid is None
    if grid is not None:
        assert res.status == "feasible"


CAPPED = [[-2, 1, 3, 3, 3, -3], [-1, -3, 0, 3, 0, 0], [2, 0, 3, -2, -3, 0], [-3, 3, 0, 0, 1, 3],
          [3, -3, 2, 0, -1, 2], [3, -2, 1, -3, -1, -3], [-3, -3, 2, 1, -3, 0], [2, -2, 0, 2, -3, 1],
          [-2, 3, 0, 0, 1, -2], [-1, -2, 2, -2, 3, 0], [-1, -3, 0, 3, 1, 2], [-3, -2, 2, 2, 3, -1],
          [-3, 2, -1, 2, 2, 1], [0, 1, 3, 2, -2, -1]]


def test_fme_row_cap_gives_undecided():
    assert solve_strict(CAPPED, max_rows=5).status == "undecided"
    res = solve_strict(CAPPED)
    assert res.status == "feasible"
    assert all(sum(Fraction(a) * b for a, b in zip(r, res.solution)) > 0 for r in CAPPED)


def test_fme_rejects_empty_system():
    with pytest.raises(ValueError):
        solve_strict([])


# -- NM search --------------------------------------------------------------------

def test_nm_search_unit_on_g31(g31_lattice, g31_order6):
    model = total_model(g31_lattice)
    res = nm_search(model, canonical_support(g31_lattice, g31_order6))
    assert res.status == "feasible" and res.method == "unit"


def test_nm_search_infeasible_has_checkable_certificate():
    lat = intersection_lattice(gen_hexagonal("on_conic"))
    model = total_model(lat)
    supp = [StrictLine(0)]  # self-intersection -1 on its own
    res = nm_search(model, supp)
    assert res.status == "infeasible"
    assert check_farkas(model, supp, res.explanation)
    forged = {"slack_multipliers": {"H1": "1"}, "positivity_multipliers": {"H1": "2"}}
    assert not check_farkas(model, supp, forged)


@pytest.mark.parametrize("A", small_builtins(), ids=lambda A: A.label)
def test_nm_search_answers_are_verified(A):
    lat = intersection_lattice(A)
    model = total_model(lat)
    supp = [StrictLine(i) for i in range(A.n)]
    res = nm_search(model, supp)
    if res.status == "feasible":
        assert verify_nm(model, res.divisor, supp).ok
    else:
        assert res.status == "infeasible" and check_farkas(model, supp, res.explanation)


def test_extension_keeps_positivity(g31_lattice, g31_order6):
    model = total_model(g31_lattice)
    supp = canonical_support(g31_lattice, g31_order6)
    cert = verify_nm(model, QDivisor.unit(supp))
    extra = [Exceptional(p) for p in g31_order6.T_eq1]
    D = extend_nm(model, cert, extra)
    full = verify_nm(model, D)
    assert full.ok
    assert divisor_connected(model, list(D.support))
    assert all(D.coeff(c) > 0 for c in extra)


def test_connectivity():
    lat = intersection_lattice(gen_hexagonal("on_conic"))
    model = DivisorModel(lat, lat.T)
    # two lines through a blown-up vertex are disjoint on the blow-up
    p = lat.T[0]
    i, j = lat.points[p].incident[:2]
    assert not divisor_connected(model, [StrictLine(i), StrictLine(j)])
    assert divisor_connected(model, [StrictLine(i), StrictLine(j), Exceptional(p)])
