from __future__ import annotations

from fractions import Fraction
from itertools import combinations

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from expected_tables import COLLINEAR_TRIPLES, CONIC_SETS, as_sorted_lists
from linevanish.arrangement import published_points
from linevanish.badcurve import (collinear_subsets, common_intersection, conics_with_min_incidence,
                                 count_collinear_tests, pairwise_overlap_table,
                                 star_configuration_check)
from linevanish.exactgeom import ProjPoint
from linevanish.report import sets_json


# -- collinearity ---------------------------------------------------------------

def test_collinear_triples_match_table(g31_sextuples):
    got = sets_json(collinear_subsets(g31_sextuples, 3))
    assert got == as_sorted_lists(COLLINEAR_TRIPLES)


def test_no_collinear_quadruples(g31_sextuples):
    assert collinear_subsets(g31_sextuples, 4) == []
    assert collinear_subsets(g31_sextuples[:24], 4) == []


def test_triples_are_the_arrangement_lines(g31, g31_lattice):
    # every collinear triple spans a line of the arrangement, and each line holds one triple
    seen = set()
    for i in range(g31.n):
        six = tuple(j + 1 for j in g31_lattice.per_line[i].points if j < 30)
        assert len(six) == 3
        seen.add(six)
    assert sorted(map(list, seen)) == as_sorted_lists(COLLINEAR_TRIPLES)


def test_published_points_with_fix_give_the_same_triples():
    got = sets_json(collinear_subsets(published_points(corrected=True), 3))
    assert got == as_sorted_lists(COLLINEAR_TRIPLES)


def test_test_counts():
    assert count_collinear_tests(30, 3) == 4060
    assert count_collinear_tests(30, 4) == 27405
    assert count_collinear_tests(24, 4) == 10626


# -- conics ---------------------------------------------------------------------

def _rref_nullity_vector(rows):
    """Fraction Gaussian elimination; the nullspace vector when it is 1-dimensional."""
    m = [list(r) for r in rows]
    ncols = len(m[0])
    piv_cols, r = [], 0
    for c in range(ncols):
        p = next((i for i in range(r, len(m)) if m[i][c]), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        inv = 1 / m[r][c]
        m[r] = [v * inv for v in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        piv_cols.append(c)
        r += 1
    free = [c for c in range(ncols) if c not in piv_cols]
    if len(free) != 1:
        return None
    v = [Fraction(0)] * ncols
    v[free[0]] = Fraction(1)
    for i, c in enumerate(piv_cols):
        v[c] = -m[i][free[0]]
    lead = next(x for x in v if x)
    return tuple(x / lead for x in v)


def _veronese(p):
    x, y, z = p
    return (x * x, x * y, x * z, y * y, y * z, z * z)


def five_subset_oracle(coords, threshold):
    """Literal definition: conics determined by some 5 points, with >= threshold incidences."""
    pts = [tuple(Fraction(c) for c in p) for p in coords]
    found = {}
    for sub in combinations(range(len(pts)), 5):
        conic = _rref_nullity_vector([_veronese(pts[i]) for i in sub])
        if conic is None or conic in found:
            continue
        inc = tuple(i for i, p in enumerate(pts)
                    if sum(a * b for a, b in zip(conic, _veronese(p))) == 0)
        found[conic] = inc
    return sorted(inc for inc in found.values() if len(inc) >= threshold)


ints = st.integers(min_value=-6, max_value=6)


@st.composite
def point_sets_with_structure(draw):
    pts = []
    # points on a rational conic image of (1 : t : t^2)
    a, b, c = draw(st.tuples(ints, ints, ints))
    for t in draw(st.lists(st.integers(-4, 4), max_size=7, unique=True)):
        pts.append((1 + a * t, t + b * t * t, t * t + c))
    # points on a line
    for t in draw(st.lists(st.integers(-4, 4), max_size=5, unique=True)):
        pts.append((t, 1, 2 * t + 1))
    pts += draw(st.lists(st.tuples(ints, ints, ints), max_size=5))
    uniq, seen = [], set()
    for p in pts:
        if any(p):
            q = ProjPoint(p)
            if q not in seen:
                seen.add(q)
                uniq.append(p)
    assume(6 <= len(uniq) <= 12)
    return uniq


@settings(max_examples=40, deadline=None)
@given(point_sets_with_structure(), st.integers(min_value=5, max_value=8))
def test_conic_enumeration_matches_five_subset_oracle(coords, threshold):
    pts = [ProjPoint(c) for c in coords]
    got = sorted(h.points for h in conics_with_min_incidence(pts, threshold))
    assert got == five_subset_oracle(coords, threshold)


@settings(max_examples=15, deadline=None)
@given(point_sets_with_structure(), st.integers(min_value=5, max_value=7))
def test_conic_enumeration_matches_brute_mode(coords, threshold):
    assume(len(coords) <= 10)
    pts = [ProjPoint(c) for c in coords]
    fast = sorted(h.points for h in conics_with_min_incidence(pts, threshold))
    slow = sorted(h.points for h in conics_with_min_incidence(pts, threshold, brute=True))
    assert fast == slow


def test_conic_threshold_validation():
    with pytest.raises(ValueError):
        conics_with_min_incidence([ProjPoint((1, 0, 0))] * 6, 5)
    with pytest.raises(ValueError):
        conics_with_min_incidence([ProjPoint((1, t, 0)) for t in range(6)], 4)


@pytest.fixture(scope="module")
def g31_conics(g31_sextuples):
    return conics_with_min_incidence(g31_sextuples, 12)


def test_twelve_point_conics(g31_conics):
    sets = [[i + 1 for i in h.points] for h in g31_conics]
    assert sorted(sets) == as_sorted_lists(CONIC_SETS)
    assert not any(h.reducible for h in g31_conics)


def test_conic_set_overlaps(g31_conics):
    sets = [sorted(s) for s in CONIC_SETS]
    table = pairwise_overlap_table(sets)
    assert all(table[i][j] == 4 for i in range(10) for j in range(10) if i != j)
    assert common_intersection(sets[:3]) == [1, 6]
    assert common_intersection(sets[-3:]) == []


def test_no_thirteen_point_conic(g31_sextuples):
    assert conics_with_min_incidence(g31_sextuples, 13) == []
    assert conics_with_min_incidence(g31_sextuples[:23], 13) == []


# -- star configurations --------------------------------------------------------

@pytest.mark.parametrize("k", range(10))
def test_conic_sets_are_not_stars(g31_lattice, k):
    s = sorted(CONIC_SETS[k])
    v = star_configuration_check([i - 1 for i in s], g31_lattice)
    assert not v.is_star


def test_first_conic_set_trace(g31_lattice):
    v = star_configuration_check([i - 1 for i in sorted(CONIC_SETS[0])], g31_lattice)
    assert v.trace[0] == "pair {1,2} forces center 3"
    assert v.trace[1] == "pair {1,5} forces center 4"
    assert "contradiction: centers 3 and 4" in v.trace


def test_lines_through_a_point_give_a_star(g31_lattice):
    # the other two sextuple points on each of the six lines through p1
    center = 0
    pts = []
    for line in g31_lattice.points[center].incident:
        pts += [j for j in g31_lattice.per_line[line].points if j < 30 and j != center]
    v = star_configuration_check(pts, g31_lattice)
    assert v.is_star and v.center == center
    assert len(v.pairs) == 6


def test_star_check_rejects_wrong_size(g31_lattice):
    with pytest.raises(ValueError):
        star_configuration_check(list(range(11)), g31_lattice)
