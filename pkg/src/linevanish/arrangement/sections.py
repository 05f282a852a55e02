"""Plane sections of hyperplane arrangements in C^4."""

from __future__ import annotations

from itertools import combinations
from typing import Sequence

from ..exactgeom import Cyclotomic, CyclotomicField, ProjLine, cross, projective_key
from .core import Arrangement


class GenericityError(ValueError):
    """The section plane is not generic for the arrangement."""

    def __init__(self, message: str, collapses: list | None = None):
        super().__init__(message)
        self.collapses = collapses or []


Form4 = Sequence[Cyclotomic]


def _coerce(form, field):
    if len(form) != 4:
        raise ValueError("linear forms in 4 variables need 4 coefficients")
    return tuple(field(c) for c in form)


def plucker_key(f: Form4, g: Form4) -> tuple:
    """Key of the 2-dimensional span of two forms (their codimension-2 flat)."""
    v = [f[a] * g[b] - f[b] * g[a] for a, b in combinations(range(4), 2)]
    return projective_key(v)


def restrict_to_plane(forms: Sequence[Form4], plane: Form4, *, field: CyclotomicField,
                      eliminate: int | None = None, label: str = "",
                      allow_degenerate: bool = False,
                      point_labels: tuple = ()) -> Arrangement:
    """Restrict 4-variable linear forms to the plane ``plane = 0``.

    The variable with index ``eliminate`` (default: the last one with a
    nonzero plane coefficient) is solved for; the remaining three variables,
    in their original order, are the coordinates of the resulting P^2.

    Genericity is verified: two line pairs meet at the same section point
    only if they span the same codimension-2 flat upstairs.  A violation
    raises GenericityError unless ``allow_degenerate`` is set, in which case
    the collapses are recorded in the arrangement's provenance.
    """
    forms = [_coerce(f, field) for f in forms]
    plane = _coerce(plane, field)
    if eliminate is None:
        eliminate = max(j for j in range(4) if plane[j])
    e = eliminate
    if not plane[e]:
        raise ValueError(f"plane coefficient of variable {e} is zero; cannot eliminate it")
    keep = [j for j in range(4) if j != e]
    pkeys = projective_key(plane)
    for idx, f in enumerate(forms):
        if not any(f):
            raise ValueError(f"form {idx + 1} is zero")
        if projective_key(f) == pkeys:
            raise GenericityError(f"plane is proportional to form {idx + 1}")
    fkeys = [projective_key(f) for f in forms]
    if len(set(fkeys)) != len(fkeys):
        raise ValueError("forms are not pairwise non-proportional")

    inv = plane[e].inverse()
    restricted = [tuple(f[j] - f[e] * plane[j] * inv for j in keep) for f in forms]

    # a restricted form can only vanish or coincide when the plane lies in a flat
    rkeys = []
    for idx, r in enumerate(restricted):
        if not any(r):
            raise GenericityError(f"form {idx + 1} vanishes on the plane")
        rkeys.append(projective_key(r))
    if len(set(rkeys)) != len(rkeys):
        raise GenericityError("two forms restrict to the same line")

    by_point: dict[tuple, set] = {}
    by_flat: dict[tuple, set] = {}
    pair_flat = {}
    for i, j in combinations(range(len(forms)), 2):
        pk = projective_key(cross(restricted[i], restricted[j]))
        by_point.setdefault(pk, set()).update((i, j))
        fk = plucker_key(forms[i], forms[j])
        pair_flat[(i, j)] = fk
        by_flat.setdefault(fk, set()).update((i, j))
    collapses = []
    for pk, members in by_point.items():
        flats = {pair_flat[(i, j)] for i, j in combinations(sorted(members), 2)}
        if len(flats) > 1:
            groups = sorted(sorted(by_flat[fk]) for fk in flats)
            collapses.append({"lines": sorted(members), "flats": groups})
    collapses.sort(key=lambda c: c["lines"])
    prov = {
        "plane": [c.format() for c in plane],
        "eliminated_variable": e,
        "generic": not collapses,
    }
    if collapses:
        if not allow_degenerate:
            raise GenericityError(
                f"section plane merges distinct flats at {len(collapses)} point(s)", collapses)
        prov["degeneracies"] = collapses
    lines = tuple(ProjLine(r, field) for r in restricted)
    return Arrangement(field, lines, label, point_labels, prov)
