"""Exact row echelon forms over a cyclotomic field."""

from __future__ import annotations

from typing import Iterable, Sequence

from .cyclotomic import Cyclotomic


class Echelon:
    """Incrementally maintained reduced row echelon form.

    Rows are added one at a time; each new row is reduced against the
    current pivots and, if nonzero, normalized so its pivot entry is 1.
    Pivot choice is the first nonzero entry.
    """

    def __init__(self, ncols: int):
        self.ncols = ncols
        self.rows: list[list[Cyclotomic]] = []
        self.pivots: list[int] = []

    @property
    def rank(self) -> int:
        return len(self.rows)

    def reduce(self, row: Sequence[Cyclotomic]) -> list[Cyclotomic]:
        row = list(row)
        for prow, pc in zip(self.rows, self.pivots):
            c = row[pc]
            if c:
                for j in range(pc, self.ncols):
                    if prow[j]:
                        row[j] = row[j] - c * prow[j]
        return row

    def add(self, row: Sequence[Cyclotomic]) -> bool:
        """Insert a row; return True iff it increased the rank."""
        row = self.reduce(row)
        pc = next((j for j, v in enumerate(row) if v), None)
        if pc is None:
            return False
        inv = row[pc].inverse()
        row = [v * inv if v else v for v in row]
        # keep the form fully reduced so nullspace extraction is direct
        for prow in self.rows:
            c = prow[pc]
            if c:
                for j in range(pc, self.ncols):
                    if row[j]:
                        prow[j] = prow[j] - c * row[j]
        self.rows.append(row)
        self.pivots.append(pc)
        return True

    def nullspace(self) -> list[list[Cyclotomic]]:
        """Basis of {v : row . v = 0 for every stored row}."""
        if not self.rows:
            return []
        field = self.rows[0][0].field
        pivset = set(self.pivots)
        basis = []
        for free in range(self.ncols):
            if free in pivset:
                continue
            v = [field.zero] * self.ncols
            v[free] = field.one
            for prow, pc in zip(self.rows, self.pivots):
                if prow[free]:
                    v[pc] = -prow[free]
            basis.append(v)
        return basis


def rank(rows: Iterable[Sequence[Cyclotomic]], ncols: int | None = None) -> int:
    rows = list(rows)
    if not rows:
        return 0
    ech = Echelon(ncols if ncols is not None else len(rows[0]))
    for r in rows:
        ech.add(r)
    return ech.rank


def nullspace(rows: Sequence[Sequence[Cyclotomic]], ncols: int, field) -> list[list[Cyclotomic]]:
    ech = Echelon(ncols)
    for r in rows:
        ech.add(r)
    if not ech.rows:
        return [[field.one if j == i else field.zero for j in range(ncols)] for i in range(ncols)]
    return ech.nullspace()
