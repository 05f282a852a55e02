"""The reflection arrangement of G31 in C^4 and its plane sections.

The defining polynomial is

    xyzt (x^4-y^4)(x^4-z^4)(x^4-t^4)(y^4-z^4)(y^4-t^4)(z^4-t^4)
      * prod over the 16 quadrics (a)^2 -/+ (b)^2

where the quadrics pair (x-y),(x+y) with (z+t),(z-t) under both signs, and
(x-z),(x+z) with (y+t),(y-t) and (x-t),(x+t) with (y+z),(y-z) under the
plus sign.  Over Q(i) everything splits into 60 linear forms.
"""

from __future__ import annotations

from itertools import combinations

from ..exactgeom import CyclotomicField, ProjPoint
from .core import Arrangement
from .sections import restrict_to_plane

QI = CyclotomicField(4)
_I = QI.imaginary_unit()

# the section plane used by the published coordinates: 2x + 5y - 9z - t = 0
PUBLISHED_PLANE = (2, 5, -9, -1)
# a verified generic plane close to it; the published one is not generic
DEFAULT_PLANE = (2, 9, -15, -1)


def _v(*c):
    return tuple(QI(x) for x in c)


def _add(u, v):
    return tuple(a + b for a, b in zip(u, v))


def _scale(c, u):
    return tuple(c * a for a in u)


def g31_forms() -> list[tuple]:
    """The 60 linear factors, as coefficient 4-tuples over Q(i) in variables x, y, z, t."""
    X, Y, Z, T = _v(1, 0, 0, 0), _v(0, 1, 0, 0), _v(0, 0, 1, 0), _v(0, 0, 0, 1)
    neg = lambda u: _scale(QI(-1), u)  # noqa: E731
    forms = [X, Y, Z, T]
    # a^4 - b^4 = (a-b)(a+b)(a-ib)(a+ib)
    for a, b in combinations([X, Y, Z, T], 2):
        forms += [_add(a, neg(b)), _add(a, b), _add(a, _scale(-_I, b)), _add(a, _scale(_I, b))]
    xmy, xpy = _add(X, neg(Y)), _add(X, Y)
    zpt, zmt = _add(Z, T), _add(Z, neg(T))
    # a^2 - b^2 = (a-b)(a+b)
    for a, b in [(xmy, zpt), (xmy, zmt), (xpy, zpt), (xpy, zmt)]:
        forms += [_add(a, neg(b)), _add(a, b)]
    # a^2 + b^2 = (a+ib)(a-ib)
    xmz, xpz = _add(X, neg(Z)), _add(X, Z)
    ypt, ymt = _add(Y, T), _add(Y, neg(T))
    xmt, xpt = _add(X, neg(T)), _add(X, T)
    ypz, ymz = _add(Y, Z), _add(Y, neg(Z))
    for a, b in [(xmy, zpt), (xmy, zmt), (xpy, zpt), (xpy, zmt),
                 (xmz, ypt), (xmz, ymt), (xpz, ypt), (xpz, ymt),
                 (xmt, ypz), (xmt, ymz), (xpt, ypz), (xpt, ymz)]:
        forms += [_add(a, _scale(_I, b)), _add(a, _scale(-_I, b))]
    return forms


# Published sextuple points on the plane 2x+5y-9z-t=0, coordinates (x:y:z),
# each entry a Gaussian integer (re, im).  Transcribed verbatim.
PUBLISHED_POINTS: tuple = (
    ((0, 0), (0, 0), (1, 0)), ((0, 0), (1, 0), (0, 0)), ((0, 0), (9, 0), (5, 0)),
    ((1, 0), (0, 0), (0, 0)), ((9, 0), (0, 0), (2, 0)), ((5, 0), (-2, 0), (0, 0)),
    ((10, 0), (10, 0), (7, 0)), ((8, 0), (8, 0), (7, 0)), ((-10, 0), (10, 0), (3, 0)),
    ((-8, 0), (8, 0), (3, 0)),
    ((4, 0), (7, 0), (4, 0)), ((6, 0), (7, 0), (6, 0)), ((-4, 0), (11, 0), (4, 0)),
    ((-6, 0), (11, 0), (6, 0)), ((4, 0), (1, 0), (1, 0)),
    ((14, 0), (-1, 0), (1, 0)), ((4, 0), (3, 0), (3, 0)), ((14, 0), (-3, 0), (3, 0)),
    ((9, -1), (1, 9), (2, 5)), ((9, 1), (-1, 9), (2, 5)),
    ((9, -1), (-1, -9), (2, -5)), ((9, 1), (1, -9), (2, -5)),
    ((5, 1), (-2, 9), (-1, 5)), ((5, -1), (-2, 9), (-1, 5)),
    ((5, 1), (-2, -9), (1, -5)), ((5, -1), (-2, -9), (-1, -5)),
    ((-5, 9), (2, -1), (1, 2)), ((5, -9), (-2, -1), (1, -2)),
    ((5, 9), (-2, 1), (1, 2)), ((-5, -9), (2, 1), (1, -2)),
)

# Entry 24 as published is not on the section; flipping the sign of the real
# part of its last coordinate gives the sextuple point on the same flat
# (the conjugate-symmetric partner of entry 25).
ERRATA = {24: ((5, -1), (-2, 9), (1, 5))}


def _gauss(re_im) -> object:
    re, im = re_im
    return QI(re) + _I * im


def published_points(corrected: bool = True) -> list[ProjPoint]:
    out = []
    for j, pt in enumerate(PUBLISHED_POINTS, start=1):
        if corrected and j in ERRATA:
            pt = ERRATA[j]
        out.append(ProjPoint([_gauss(c) for c in pt], QI))
    return out


def _lift(p: ProjPoint, plane) -> tuple:
    # coordinates (x, y, z) on plane with t eliminated
    x, y, z = p.coords
    a, b, c, d = (QI(v) for v in plane)
    t = -(a * x + b * y + c * z) / d
    return (x, y, z, t)


def label_flats() -> tuple[frozenset[int], ...]:
    """For each published label, the set of form indices vanishing on its flat.

    A labeled sextuple point is a codimension-2 flat of the G31 arrangement,
    so it can be located on any generic section by its six forms.
    """
    forms = g31_forms()
    out = []
    for j, p in enumerate(published_points(corrected=True), start=1):
        v = _lift(p, PUBLISHED_PLANE)
        s = frozenset(i for i, f in enumerate(forms) if not sum((a * b for a, b in zip(f, v)), QI.zero))
        if len(s) != 6:
            raise AssertionError(f"label {j}: expected 6 forms through the point, got {len(s)}")
        out.append(s)
    return tuple(out)


def gen_g31_section(plane=DEFAULT_PLANE, *, allow_degenerate: bool = False,
                    label: str | None = None) -> Arrangement:
    """The 60-line section of the G31 arrangement by ``plane`` (t eliminated).

    Sextuple points are labeled 1..30 through their flats.
    """
    if label is None:
        label = "g31-section" if tuple(plane) == DEFAULT_PLANE else f"g31-section{list(plane)}"
    return restrict_to_plane(g31_forms(), plane, field=QI, eliminate=3, label=label,
                             allow_degenerate=allow_degenerate, point_labels=label_flats())


def gen_g31_published_section() -> Arrangement:
    """Section by the published plane; its genericity defects are recorded, not raised."""
    return gen_g31_section(PUBLISHED_PLANE, allow_degenerate=True, label="g31-section:published")
