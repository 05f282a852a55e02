from __future__ import annotations

import re
import sys
from fractions import Fraction

import pytest

from linevanish.arrangement import (gen_ceva, gen_g31_published_section, gen_g31_section,
                                    gen_hexagonal, gen_near_pencils, intersection_lattice)
from linevanish.exactgeom import CyclotomicField, ProjPoint
from linevanish.localsys import milnor_system, partition

QI = CyclotomicField(4)

_GAUSS = re.compile(r"^([+-]?\d+)?(?:([+-])(\d*)i)?$|^([+-]?\d*)i$")


def gauss(text: str):
    """'9-i' -> 9 - i in Q(i); a tiny parser kept apart from the package."""
    s = text.replace(" ", "")
    m = _GAUSS.match(s)
    if not m:
        raise ValueError(text)
    if m.group(4) is not None:
        coef = m.group(4)
        im = int(coef + "1") if coef in ("", "+", "-") else int(coef)
        return QI.from_coeffs([0, im])
    re_part = int(m.group(1) or 0)
    im = 0
    if m.group(2):
        im = int(m.group(3) or 1) * (1 if m.group(2) == "+" else -1)
    return QI.from_coeffs([re_part, im])


def gauss_point(coords) -> ProjPoint:
    return ProjPoint([gauss(c) for c in coords], QI)


@pytest.fixture(scope="session")
def g31():
    return gen_g31_section()


@pytest.fixture(scope="session")
def g31_lattice(g31):
    return intersection_lattice(g31)


@pytest.fixture(scope="session")
def g31_sextuples(g31_lattice):
    # labeled points come first in lattice order
    return [g31_lattice.points[i].point for i in range(30)]


@pytest.fixture(scope="session")
def g31_order6(g31, g31_lattice):
    return partition(g31_lattice, milnor_system(g31.n, 6))


@pytest.fixture(scope="session")
def published_plane_lattice():
    return intersection_lattice(gen_g31_published_section())


def small_builtins():
    return [gen_ceva(3), gen_ceva(4), gen_hexagonal("on_conic"), gen_hexagonal("off_conic"),
            gen_near_pencils(3, [3, 3, 4]), gen_near_pencils(2, [3, 2])]


@pytest.fixture(scope="session")
def builtin_lattices():
    return [intersection_lattice(A) for A in small_builtins()]


def frac_tuple(values):
    return tuple(Fraction(v) for v in values)


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod and mod.LINES:
        terminalreporter.section("acceptance criteria")
        for line in mod.LINES:
            terminalreporter.write_line(line)
