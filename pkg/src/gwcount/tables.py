"""Row generation and formatting for the two shipped invariant tables.

Table 1 lists the signed real counts N^R_d of degree-d curves through d
conjugate point-pairs in P^3 for odd d, available both from the closed-form
series and from the general real engine via the sign bridge

    N^R_d = (-1)^((d-1)/2) * <(2n-1)^d>_d   with n = 2.

Table 2 lists real invariants of P^5 (insertions 5^a 3^b) and P^7
(insertions 7^a 5^b 3^c) over all dimension-balanced exponent rows at small
odd degree, computed by the general engine.  Rows enumerate exponents in
descending lexicographic order.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass

from .keys import CodimVector, RealKey
from .p3 import real_series_p3
from .real_engine import RealEvalContext, eval_real

__all__ = [
    "EngineDisagreement",
    "TableRow",
    "format_rows",
    "table1_rows",
    "table2_rows",
    "TABLE2_DEGREES",
]

TABLE2_DEGREES = {"p5": (1, 3, 5, 7, 9), "p7": (1, 3, 5)}


@dataclass(frozen=True)
class TableRow:
    d: int
    signature: str | None
    value: int


class EngineDisagreement(Exception):
    """Closed-form series and general engine produced different rows."""

    def __init__(self, diffs: list[tuple[int, int, int]]) -> None:
        self.diffs = diffs
        detail = "; ".join(
            f"d={d}: closed {a} vs general {b}" for d, a, b in diffs
        )
        super().__init__(f"table1 engines disagree: {detail}")


def table1_rows(
    dmax: int = 31,
    engine: str = "both",
    ctx: RealEvalContext | None = None,
) -> list[TableRow]:
    """N^R_d for odd d <= dmax, by the requested engine(s).

    With ``engine="both"`` the rows are computed twice and compared;
    disagreement raises EngineDisagreement listing the differing degrees.
    """
    if dmax < 1:
        raise ValueError("dmax must be >= 1")
    if engine not in ("closed", "general", "both"):
        raise ValueError(f"unknown engine {engine!r}")
    degrees = range(1, dmax + 1, 2)
    closed = general = None
    if engine in ("closed", "both"):
        series = real_series_p3(dmax)
        closed = [series[d] for d in degrees]
    if engine in ("general", "both"):
        if ctx is None:
            ctx = RealEvalContext()
        general = []
        for d in degrees:
            raw = eval_real(RealKey(n=2, d=d, insertions=CodimVector.of(*[3] * d)), ctx)
            general.append((-1) ** ((d - 1) // 2) * raw)
    if closed is not None and general is not None:
        diffs = [
            (d, a, b) for d, a, b in zip(degrees, closed, general) if a != b
        ]
        if diffs:
            raise EngineDisagreement(diffs)
    values = closed if closed is not None else general
    assert values is not None
    return [TableRow(d, None, v) for d, v in zip(degrees, values)]


def _p5_exponents(d: int) -> list[tuple[int, int]]:
    # Dimension balance for n = 3: 4a + 2b = 3(d+1) - 2, descending in a.
    target = 3 * (d + 1) - 2
    rows = []
    for a in range(target // 4, -1, -1):
        rem = target - 4 * a
        if rem % 2 == 0:
            rows.append((a, rem // 2))
    return rows


def _p7_exponents(d: int) -> list[tuple[int, int, int]]:
    # 6a + 4b + 2c = 4(d+1) - 2, descending lexicographic in (a, b).
    target = 4 * (d + 1) - 2
    rows = []
    for a in range(target // 6, -1, -1):
        rem_a = target - 6 * a
        for b in range(rem_a // 4, -1, -1):
            rem_b = rem_a - 4 * b
            if rem_b % 2 == 0:
                rows.append((a, b, rem_b // 2))
    return rows


def table2_rows(space: str, ctx: RealEvalContext | None = None) -> list[TableRow]:
    """All dimension-balanced rows of the P^5 or P^7 table, general engine."""
    if space not in TABLE2_DEGREES:
        raise ValueError(f"space must be 'p5' or 'p7', got {space!r}")
    if ctx is None:
        ctx = RealEvalContext()
    rows: list[TableRow] = []
    for d in TABLE2_DEGREES[space]:
        if space == "p5":
            for a, b in _p5_exponents(d):
                cv = CodimVector(tuple(p for p in ((3, b), (5, a)) if p[1]))
                value = eval_real(RealKey(n=3, d=d, insertions=cv), ctx)
                rows.append(TableRow(d, f"5^{a} 3^{b}", value))
        else:
            for a, b, c in _p7_exponents(d):
                cv = CodimVector(tuple(p for p in ((3, c), (5, b), (7, a)) if p[1]))
                value = eval_real(RealKey(n=4, d=d, insertions=cv), ctx)
                rows.append(TableRow(d, f"7^{a} 5^{b} 3^{c}", value))
    return rows


def format_rows(rows: list[TableRow], fmt: str = "text") -> str:
    """Render rows as aligned text, CSV, or JSON with string-encoded values."""
    with_signature = any(r.signature is not None for r in rows)
    if fmt == "text":
        out = []
        width = max((len(str(r.d)) for r in rows), default=1)
        sigwidth = max((len(r.signature or "") for r in rows), default=0)
        for r in rows:
            if with_signature:
                out.append(f"{r.d:>{width}}  {r.signature:<{sigwidth}}  {r.value}")
            else:
                out.append(f"{r.d:>{width}}  {r.value}")
        return "\n".join(out) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        if with_signature:
            writer.writerow(["d", "signature", "value"])
            for r in rows:
                writer.writerow([r.d, r.signature, r.value])
        else:
            writer.writerow(["d", "value"])
            for r in rows:
                writer.writerow([r.d, r.value])
        return buf.getvalue()
    if fmt == "json":
        if with_signature:
            payload = [
                {"d": r.d, "signature": r.signature, "value": str(r.value)}
                for r in rows
            ]
        else:
            payload = [{"d": r.d, "value": str(r.value)} for r in rows]
        return json.dumps(payload, indent=2) + "\n"
    raise ValueError(f"unknown format {fmt!r}")
