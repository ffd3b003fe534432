"""Persistent store of evaluated invariants, kept in a versioned text format.

Each record is one line::

    gw1|C|N=<int>|d=<int>|c=<c1,c2,...>|v=<decimal>
    gw1|R|n=<int>|d=<int>|c=<c1,c2,...>|v=<decimal>

preceded by the header line ``#gw-cache v1``.  Records are sorted by
(kind, dimension, degree, codimensions), so saving is deterministic and a
load/save round trip is byte-identical.  The store only ever replays values
into engine memos; it never changes what an engine would compute.
"""

from __future__ import annotations

import os

from .complex_engine import ComplexEvalContext
from .keys import CodimVector, ComplexKey, RealKey
from .real_engine import RealEvalContext

__all__ = [
    "CacheError",
    "CacheFormatError",
    "CacheIntegrityError",
    "CacheStore",
    "HEADER",
]

HEADER = "#gw-cache v1"

# Internal record key: (kind, dimension, degree, expanded codim tuple) where
# kind is "C" (complex, dimension = N) or "R" (real, dimension = n).
RecordKey = tuple[str, int, int, tuple[int, ...]]


class CacheError(Exception):
    pass


class CacheFormatError(CacheError):
    """Malformed file: bad header, version, or record line."""


class CacheIntegrityError(CacheError):
    """An insert tried to change the value already stored for a key."""


def _record_key(key: ComplexKey | RealKey) -> RecordKey:
    if isinstance(key, ComplexKey):
        return ("C", key.N, key.d, key.insertions.expand())
    if isinstance(key, RealKey):
        # phi is metadata: both involutions share one record.
        return ("R", key.n, key.d, key.insertions.expand())
    raise TypeError(f"expected ComplexKey or RealKey, got {type(key).__name__}")


class CacheStore:
    """In-memory record set with deterministic text serialization."""

    def __init__(self) -> None:
        self.records: dict[RecordKey, int] = {}

    def __len__(self) -> int:
        return len(self.records)

    def lookup(self, key: ComplexKey | RealKey) -> int | None:
        return self.records.get(_record_key(key))

    def insert(self, key: ComplexKey | RealKey, value: int) -> None:
        self._insert_record(_record_key(key), value)

    def _insert_record(self, rkey: RecordKey, value: int) -> None:
        existing = self.records.get(rkey)
        if existing is not None and existing != value:
            kind, dim, d, entries = rkey
            raise CacheIntegrityError(
                f"conflicting values for {kind} dim={dim} d={d} "
                f"c={','.join(map(str, entries))}: had {existing}, got {value}"
            )
        self.records[rkey] = value

    def stats(self) -> dict[str, int]:
        complex_count = sum(1 for k in self.records if k[0] == "C")
        return {
            "records": len(self.records),
            "complex": complex_count,
            "real": len(self.records) - complex_count,
        }

    # -- engine memo interchange ------------------------------------------

    def warm(self, cctx: ComplexEvalContext | None = None,
             rctx: RealEvalContext | None = None) -> None:
        """Replay stored records into engine memos (idempotent)."""
        for (kind, dim, d, entries), value in self.records.items():
            pairs = CodimVector.from_entries(entries).pairs
            if kind == "C" and cctx is not None:
                cctx.memo[(dim, d, pairs)] = value
            elif kind == "R" and rctx is not None:
                rctx.memo[(dim, d, pairs)] = value

    def absorb(self, cctx: ComplexEvalContext | None = None,
               rctx: RealEvalContext | None = None) -> None:
        """Collect engine memo entries into the store (conflicts are errors)."""
        if cctx is not None:
            for (N, d, pairs), value in cctx.memo.items():
                self._insert_record(("C", N, d, CodimVector(pairs).expand()), value)
        if rctx is not None:
            for (n, d, pairs), value in rctx.memo.items():
                self._insert_record(("R", n, d, CodimVector(pairs).expand()), value)

    # -- serialization -----------------------------------------------------

    def render(self) -> str:
        lines = [HEADER]
        for (kind, dim, d, entries) in sorted(self.records):
            value = self.records[(kind, dim, d, entries)]
            dimtag = "N" if kind == "C" else "n"
            centry = ",".join(map(str, entries))
            lines.append(f"gw1|{kind}|{dimtag}={dim}|d={d}|c={centry}|v={value}")
        return "\n".join(lines) + "\n"

    def save(self, path: str | os.PathLike[str]) -> None:
        with open(path, "w", encoding="ascii") as fh:
            fh.write(self.render())

    @classmethod
    def load(cls, path: str | os.PathLike[str]) -> "CacheStore":
        with open(path, "r", encoding="ascii") as fh:
            lines = fh.read().splitlines()
        if not lines or lines[0] != HEADER:
            raise CacheFormatError(
                f"unsupported cache header: {lines[0]!r}" if lines else "empty cache file"
            )
        store = cls()
        for lineno, line in enumerate(lines[1:], start=2):
            store._insert_record(*_parse_line(line, lineno))
        return store


def _parse_line(line: str, lineno: int) -> tuple[RecordKey, int]:
    parts = line.split("|")
    if len(parts) != 6 or parts[0] != "gw1":
        raise CacheFormatError(f"line {lineno}: malformed record {line!r}")
    kind = parts[1]
    if kind not in ("C", "R"):
        raise CacheFormatError(f"line {lineno}: unknown kind {kind!r}")
    dimtag = "N" if kind == "C" else "n"
    try:
        dim = _field(parts[2], dimtag)
        d = _field(parts[3], "d")
        centry = parts[4]
        if not centry.startswith("c="):
            raise ValueError(f"expected c=..., got {centry!r}")
        body = centry[2:]
        entries = tuple(int(x) for x in body.split(",")) if body else ()
        if any(e < 0 for e in entries) or list(entries) != sorted(entries):
            raise ValueError(f"codimensions must be sorted and >= 0: {body!r}")
        ventry = parts[5]
        if not ventry.startswith("v="):
            raise ValueError(f"expected v=..., got {ventry!r}")
        value = int(ventry[2:])
    except ValueError as exc:
        raise CacheFormatError(f"line {lineno}: {exc}") from None
    return (kind, dim, d, entries), value


def _field(part: str, tag: str) -> int:
    prefix = tag + "="
    if not part.startswith(prefix):
        raise ValueError(f"expected {prefix}..., got {part!r}")
    return int(part[len(prefix):])
