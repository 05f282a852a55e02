"""Plain-text arrangement files.

    # comment
    field 4
    line: 1,0  0,1  0,0

Each scalar lists the rational coefficients of 1, zeta, zeta^2, ... separated
by commas; scalars are separated by whitespace.
"""

from __future__ import annotations

import re

from ..exactgeom import CyclotomicField, ProjLine, parse_scalar
from .core import Arrangement, ArrangementError


class ParseError(ValueError):
    def __init__(self, message: str, line: int | None = None, source: str = "<text>"):
        where = f"{source}:{line}: " if line is not None else f"{source}: "
        super().__init__(where + message)
        self.line = line


def _split_scalars(body: str) -> list[str]:
    # "1, 0  0, 1" -> ["1,0", "0,1"]: commas bind tighter than whitespace
    return re.sub(r"\s*,\s*", ",", body.strip()).split()


def parse_arrangement(text: str, *, label: str = "", source: str = "<text>") -> Arrangement:
    field = None
    rows = []
    for ln_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("field"):
            if field is not None:
                raise ParseError("duplicate field header", ln_no, source)
            parts = line.split()
            if len(parts) != 2 or not parts[1].isdigit() or int(parts[1]) < 1:
                raise ParseError(f"expected 'field k' with k >= 1, got {line!r}", ln_no, source)
            field = CyclotomicField(int(parts[1]))
            continue
        if line.startswith("line:"):
            if field is None:
                raise ParseError("line before the field header", ln_no, source)
            toks = _split_scalars(line[5:])
            if len(toks) != 3:
                raise ParseError(f"expected 3 coefficients, got {len(toks)}", ln_no, source)
            try:
                coeffs = [parse_scalar(t, field) for t in toks]
                rows.append((ln_no, ProjLine(coeffs, field)))
            except (ValueError, ZeroDivisionError) as e:
                raise ParseError(str(e), ln_no, source) from None
            continue
        raise ParseError(f"unrecognized line {line!r}", ln_no, source)
    if field is None:
        raise ParseError("missing 'field k' header", None, source)
    seen = {}
    for ln_no, L in rows:
        if L in seen:
            raise ParseError(f"line repeats the line on source line {seen[L]}", ln_no, source)
        seen[L] = ln_no
    try:
        return Arrangement(field, tuple(L for _, L in rows), label or source)
    except ArrangementError as e:
        raise ParseError(str(e), None, source) from None


def format_arrangement(A: Arrangement) -> str:
    out = [f"# {A.label}" if A.label else "# arrangement", f"field {A.field.order}"]
    for L in A.lines:
        out.append("line: " + "  ".join(c.format() for c in L.coords))
    return "\n".join(out) + "\n"
