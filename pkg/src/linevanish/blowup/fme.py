"""Fourier-Motzkin elimination for strict homogeneous systems  M x > 0.

Either a rational solution is produced, or a nonnegative, nonzero row
combination y with y^T M = 0 (a Gordan certificate that no solution exists).
Rows are kept as primitive integer vectors together with the multipliers
expressing them in terms of the input rows.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence


@dataclass(frozen=True)
class FMResult:
    status: str  # "feasible" | "infeasible" | "undecided"
    solution: tuple[Fraction, ...] | None = None
    certificate: tuple[Fraction, ...] | None = None  # multipliers on input rows
    note: str = ""


def _primitive(row: list[int], hist: dict[int, Fraction]):
    g = math.gcd(*row)
    if g > 1:
        row = [v // g for v in row]
        hist = {k: v / g for k, v in hist.items()}
    return row, hist


def solve_strict(M: Sequence[Sequence], *, max_rows: int = 20000) -> FMResult:
    """Decide feasibility of {x : M x > 0 componentwise}."""
    nrows = len(M)
    if nrows == 0:
        raise ValueError("empty system")
    nvars = len(M[0])
    rows: list[tuple[list[int], dict[int, Fraction]]] = []
    for r_idx, r in enumerate(M):
        fr = [Fraction(v) for v in r]
        den = math.lcm(*(v.denominator for v in fr))
        ints = [int(v * den) for v in fr]
        rows.append(_primitive(ints, {r_idx: Fraction(den)}))

    stages = []  # (variable, rows before elimination)
    remaining = list(range(nvars))
    eliminated = 0
    while True:
        for row, hist in rows:
            if not any(row):
                cert = [Fraction(0)] * nrows
                for k, v in hist.items():
                    cert[k] = v
                return FMResult("infeasible", certificate=tuple(cert))
        if not remaining:
            break
        # cheapest variable first (fewest generated rows), lowest index on ties
        best = None
        for v in remaining:
            pos = sum(1 for row, _ in rows if row[v] > 0)
            neg = sum(1 for row, _ in rows if row[v] < 0)
            cost = pos * neg - pos - neg
            if best is None or cost < best[0]:
                best = (cost, v)
        var = best[1]
        stages.append((var, rows))
        remaining.remove(var)
        eliminated += 1
        pos = [(r, h) for r, h in rows if r[var] > 0]
        neg = [(r, h) for r, h in rows if r[var] < 0]
        new: dict[tuple, dict] = {}
        for r, h in rows:
            if r[var] == 0:
                new.setdefault(tuple(r), h)
        for rp, hp in pos:
            for rn, hn in neg:
                cp, cn = -rn[var], rp[var]
                hist = dict()
                for k, v in hp.items():
                    hist[k] = hist.get(k, 0) + cp * v
                for k, v in hn.items():
                    hist[k] = hist.get(k, 0) + cn * v
                # Chernikov: a combination of more than (eliminated + 1) input
                # rows is implied by others and can be dropped
                if len(hist) > eliminated + 1:
                    continue
                row = [cp * a + cn * b for a, b in zip(rp, rn)]
                row, hist = _primitive(row, hist)
                key = tuple(row)
                if key not in new:
                    new[key] = hist
        rows = [(list(k), h) for k, h in new.items()]
        if len(rows) > max_rows:
            return FMResult("undecided", note=f"elimination exceeded {max_rows} rows")

    # back substitution in reverse elimination order
    x: list[Fraction | None] = [None] * nvars
    for var, st_rows in reversed(stages):
        lo = hi = None
        for row, _ in st_rows:
            c = row[var]
            if c == 0:
                continue
            rest = sum((Fraction(row[j]) * x[j] for j in range(nvars)
                        if j != var and row[j] and x[j] is not None), Fraction(0))
            bound = -rest / c
            if c > 0:
                lo = bound if lo is None or bound > lo else lo
            else:
                hi = bound if hi is None or bound < hi else hi
        if lo is not None and hi is not None:
            val = (lo + hi) / 2
        elif lo is not None:
            val = lo + 1
        elif hi is not None:
            val = hi - 1
        else:
            val = Fraction(1)
        x[var] = val
    sol = tuple(v if v is not None else Fraction(1) for v in x)
    for r in M:
        if sum((Fraction(a) * b for a, b in zip(r, sol)), Fraction(0)) <= 0:
            raise AssertionError("back substitution produced an invalid point")
    return FMResult("feasible", solution=sol)
