from __future__ import annotations

from collections import Counter
from fractions import Fraction
from itertools import combinations
from math import comb

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from conftest import gauss_point, small_builtins
from expected_tables import MISPRINT_FIX, SEXTUPLE_POINTS
from linevanish.arrangement import (PUBLISHED_PLANE, ArrangementError, GenericityError,
                                    ParseError, format_arrangement, gen_ceva, gen_g31_section,
                                    gen_hexagonal, gen_near_pencils, intersection_lattice,
                                    is_pencil, make_arrangement, parse_arrangement,
                                    published_points)
from linevanish.exactgeom import CyclotomicField, ProjLine

Q = CyclotomicField(1)


# -- independent lattice oracle over plain fractions -------------------------------

def _norm(v):
    for c in v:
        if c:
            return tuple(Fraction(x) / c for x in v)
    raise ValueError("zero vector")


def oracle_multiplicities(rows) -> Counter:
    lines = [_norm(r) for r in rows]
    pts = {}
    for i, j in combinations(range(len(lines)), 2):
        a, b = lines[i], lines[j]
        p = _norm((a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]))
        pts.setdefault(p, set()).update((i, j))
    return Counter(len(s) for s in pts.values())


ints = st.integers(min_value=-5, max_value=5)


@st.composite
def rational_arrangements(draw):
    rows = draw(st.lists(st.tuples(ints, ints, ints), min_size=3, max_size=9))
    seen, out = set(), []
    for r in rows:
        if any(r) and _norm(r) not in seen:
            seen.add(_norm(r))
            out.append(r)
    assume(len(out) >= 3)
    return out


@settings(max_examples=60, deadline=None)
@given(rational_arrangements())
def test_lattice_matches_fraction_oracle(rows):
    A = make_arrangement(Q, rows)
    lat = intersection_lattice(A)
    assert Counter(lat.multiplicity_counts()) == oracle_multiplicities(rows)


@settings(max_examples=60, deadline=None)
@given(rational_arrangements())
def test_double_counting_identities(rows):
    A = make_arrangement(Q, rows)
    lat = intersection_lattice(A)
    n = A.n
    assert sum(c * comb(m, 2) for m, c in lat.multiplicity_counts().items()) == comb(n, 2)
    for i in range(n):
        # each other line meets line i exactly once
        assert sum((m - 1) * c for m, c in lat.line_profile(i).items()) == n - 1
    assert lat.checks["pair_identity"] and lat.checks["per_line_identity"]


@pytest.mark.parametrize("A", small_builtins(), ids=lambda A: A.label)
def test_double_counting_on_builtins(A):
    lat = intersection_lattice(A)
    assert sum(c * comb(m, 2) for m, c in lat.multiplicity_counts().items()) == comb(A.n, 2)


# -- G31 section ------------------------------------------------------------------

def test_g31_totals_and_per_line_profile(g31, g31_lattice):
    assert g31.n == 60
    assert g31_lattice.multiplicity_counts() == {2: 360, 3: 320, 6: 30}
    for i in range(60):
        assert g31_lattice.line_profile(i) == {2: 12, 3: 16, 6: 3}
    assert 360 + 3 * 320 + 15 * 30 == comb(60, 2)


def test_g31_labels_come_first(g31_lattice):
    assert [g31_lattice.points[i].label for i in range(30)] == list(range(1, 31))
    assert all(g31_lattice.points[i].multiplicity == 6 for i in range(30))


def test_published_plane_is_rejected_as_degenerate():
    with pytest.raises(GenericityError) as err:
        gen_g31_section(PUBLISHED_PLANE)
    assert len(err.value.collapses) == 3


def test_published_plane_counts(published_plane_lattice):
    assert published_plane_lattice.multiplicity_counts() == {2: 351, 3: 317, 4: 3, 6: 30}
    assert published_plane_lattice.arrangement.provenance["generic"] is False


def test_published_points_transcriptions_agree():
    assert [gauss_point(c) for c in SEXTUPLE_POINTS] == published_points(corrected=False)
    fixed = list(SEXTUPLE_POINTS)
    for j, c in MISPRINT_FIX.items():
        fixed[j - 1] = c
    assert [gauss_point(c) for c in fixed] == published_points(corrected=True)


def test_published_plane_sextuples_are_published_points_with_one_misprint(published_plane_lattice):
    lat = published_plane_lattice
    computed = {lat.points[i].point for i in lat.with_multiplicity(6)}
    verbatim = [gauss_point(c) for c in SEXTUPLE_POINTS]
    missing = [j for j, p in enumerate(verbatim, start=1) if p not in computed]
    assert missing == [24]
    fixed = gauss_point(MISPRINT_FIX[24])
    assert fixed in computed
    # labels follow the published order
    assert [lat.points[i].point for i in range(30)] == published_points(corrected=True)


# -- generators -------------------------------------------------------------------

@pytest.mark.parametrize("m", [3, 4, 5, 6])
def test_ceva_incidences(m):
    A = gen_ceva(m)
    lat = intersection_lattice(A)
    want = Counter({3: m * m})
    want[m] += 3
    assert Counter(lat.multiplicity_counts()) == want
    assert A.n == 3 * m and not is_pencil(A)
    for g in A.point_labels:
        assert len(g) == m


@pytest.mark.parametrize("variant", ["on_conic", "off_conic", "on-conic", "off-conic"])
def test_hexagon_incidences(variant):
    A = gen_hexagonal(variant)
    lat = intersection_lattice(A)
    assert lat.multiplicity_counts() == {2: 18, 3: 6}
    assert len(A.point_labels) == 6


def test_near_pencil_has_only_the_vertices_as_multiple_points():
    A = gen_near_pencils(3, [3, 3, 4])
    lat = intersection_lattice(A)
    assert Counter(lat.multiplicity_counts())[3] == 2
    assert Counter(lat.multiplicity_counts())[4] == 1
    assert sum(c for m, c in lat.multiplicity_counts().items() if m >= 3) == 3


def test_generator_argument_checks():
    with pytest.raises(ArrangementError):
        gen_ceva(2)
    with pytest.raises(ArrangementError):
        gen_hexagonal("square")
    with pytest.raises(ArrangementError):
        gen_near_pencils(2, [3])


def test_pencil_detection():
    A = make_arrangement(Q, [(1, 0, 0), (0, 1, 0), (1, 1, 0)])
    assert is_pencil(A)


# -- text format --------------------------------------------------------------------

@pytest.mark.parametrize("A", small_builtins() + [gen_ceva(5)], ids=lambda A: A.label)
def test_format_parse_round_trip(A):
    B = parse_arrangement(format_arrangement(A))
    assert B.lines == A.lines
    assert B.field is A.field


def test_parse_comments_and_spacing():
    text = "# two lines and a third\nfield 1\nline: 1 0 0\nline:  0   1\t0   # wait\nline: 1 1 1\n"
    A = parse_arrangement(text)
    assert A.lines[2] == ProjLine((1, 1, 1))


@pytest.mark.parametrize("text, where", [
    ("line: 1 0 0\n", 1),
    ("field 1\nline: 1 0\n", 2),
    ("field 1\nfield 2\n", 2),
    ("field x\n", 1),
    ("field 1\nline: 1 0 0\nbogus\n", 3),
    ("field 1\nline: 0 0 0\n", 2),
])
def test_parse_errors_name_the_line(text, where):
    with pytest.raises(ParseError) as err:
        parse_arrangement(text, source="a.txt")
    assert err.value.line == where
    assert str(err.value).startswith(f"a.txt:{where}:")


def test_duplicate_lines_rejected():
    with pytest.raises((ArrangementError, ParseError)):
        parse_arrangement("field 1\nline: 1 0 0\nline: 2 0 0\nline: 0 1 0\n")
