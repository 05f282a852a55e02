"""Built-in families of arrangements."""

from __future__ import annotations

from fractions import Fraction

from ..exactgeom import CyclotomicField, ProjLine, ProjPoint, curve_system, join
from .core import Arrangement, ArrangementError, intersection_lattice


def gen_ceva(m: int) -> Arrangement:
    """(x^m - y^m)(y^m - z^m)(x^m - z^m) over Q(zeta_m)."""
    if m < 3:
        raise ArrangementError(f"Ceva arrangements need m >= 3, got {m}")
    F = CyclotomicField(m)
    one, zero = F.one, F.zero
    rows = []
    for j in range(m):
        rows.append((one, -F.root_of_unity(j), zero))
    for j in range(m):
        rows.append((zero, one, -F.root_of_unity(j)))
    for j in range(m):
        rows.append((one, zero, -F.root_of_unity(j)))
    lines = tuple(ProjLine(r, F) for r in rows)
    # the three vertices where the pencils meet
    verts = (frozenset(range(m)), frozenset(range(m, 2 * m)), frozenset(range(2 * m, 3 * m)))
    return Arrangement(F, lines, f"ceva:{m}", point_labels=verts,
                       provenance={"family": "ceva", "m": m})


# cyclic vertex order; the order 0, 1, -1, 2, -2, 3 creates an extra triple point
HEXAGON_PARAMETERS = (0, 1, -1, -2, 2, 3)
OFF_CONIC_VERTEX = (1, 3, 8)


def _conic_point(t) -> tuple:
    return (1, t, t * t)


def gen_hexagonal(variant: str = "on_conic") -> Arrangement:
    """Six sides and three long diagonals of a hexagon with rational vertices.

    on_conic: vertices (1 : t : t^2) on y^2 = xz.  off_conic: the last vertex
    moved off that conic.  Either way every line holds exactly two vertices,
    the vertices are the only triple points and all other meets are nodes;
    this is verified here.
    """
    v = variant.replace("-", "_")
    if v not in ("on_conic", "off_conic"):
        raise ArrangementError(f"unknown hexagon variant {variant!r}")
    F = CyclotomicField(1)
    coords = [_conic_point(t) for t in HEXAGON_PARAMETERS]
    if v == "off_conic":
        coords[-1] = OFF_CONIC_VERTEX
    pts = [ProjPoint(c, F) for c in coords]
    pairs = [(i, (i + 1) % 6) for i in range(6)] + [(i, i + 3) for i in range(3)]
    lines = tuple(join(pts[a], pts[b]) for a, b in pairs)
    verts = tuple(frozenset(k for k, pr in enumerate(pairs) if i in pr) for i in range(6))
    A = Arrangement(F, lines, "hexagon:" + v.replace("_", "-"), point_labels=verts,
                    provenance={"family": "hexagon", "variant": v,
                                "vertices": [[str(x) for x in c] for c in coords]})
    lat = intersection_lattice(A)
    if sorted(lat.multiplicity_counts().items()) != [(2, 18), (3, 6)]:
        raise ArrangementError(f"hexagon incidences broken: {lat.multiplicity_counts()}")
    on_conic = curve_system(2, [(p, 1) for p in pts]).dimension > 0
    if on_conic != (v == "on_conic"):
        raise ArrangementError("hexagon vertices have the wrong conic position")
    return A


def near_pencil_points(ell: int):
    return [(1, j, 0) for j in range(ell)]


def gen_near_pencils(ell: int, cs) -> Arrangement:
    """Pencils of c_i lines through points p_i = (1 : i : 0) of the line z = 0.

    The line z = 0 itself is not included; the slopes are chosen so that the
    p_i are the only points where more than two lines meet (verified).
    """
    cs = list(cs)
    if ell < 2 or len(cs) != ell or any(c < 2 for c in cs):
        raise ArrangementError(f"near-pencils need l >= 2 and l values c_i >= 2, got l={ell}, c={cs}")
    F = CyclotomicField(1)
    rows = []
    groups = []
    w = 1
    for i, c in enumerate(cs):
        # lines through (1 : i : 0): -i x + y + w z = 0
        grp = []
        for _ in range(c):
            grp.append(len(rows))
            rows.append((-i, 1, w * w + 3 * w * i + 7 * i * i))
            w += 1
        groups.append(frozenset(grp))
    lines = tuple(ProjLine(r, F) for r in rows)
    A = Arrangement(F, lines, f"near-pencil:{ell}:" + ",".join(map(str, cs)),
                    point_labels=tuple(groups),
                    provenance={"family": "near-pencil", "l": ell, "c": cs,
                                "transversal": ["0", "0", "1"]})
    lat = intersection_lattice(A)
    big = sorted(lp.incident for lp in lat.points if lp.multiplicity >= 3)
    want = sorted(tuple(sorted(g)) for g, c in zip(groups, cs) if c >= 3)
    if big != want:
        raise ArrangementError("near-pencil has extra multiple points; pick other slopes")
    return A


def near_pencil_system(A: Arrangement):
    """Exponents 1/c_i on the lines through p_i, so every t_{p_i} = 1."""
    from ..localsys import LocalSystem
    ex = [Fraction(0)] * A.n
    for g in A.point_labels:
        for i in g:
            ex[i] = Fraction(1, len(g))
    return LocalSystem(tuple(ex), "near-pencil: 1/c_i")
