"""graph6 and DIMACS serialisation."""
from __future__ import annotations

import warnings
from typing import Iterable, Iterator

from .graph import Graph

G6_HEADER = b">>graph6<<"
G6_MAX_N = 258047


class FormatError(ValueError):
    """Malformed input; ``offset`` is a byte offset (graph6) or line number (DIMACS)."""

    def __init__(self, message: str, offset: int | None = None):
        self.offset = offset
        where = f" at offset {offset}" if offset is not None else ""
        super().__init__(f"{message}{where}")


def _encode_n(n: int) -> bytes:
    if n < 63:
        return bytes([n + 63])
    if n <= G6_MAX_N:
        return bytes([126, ((n >> 12) & 63) + 63, ((n >> 6) & 63) + 63, (n & 63) + 63])
    raise ValueError(f"graph6 supports at most {G6_MAX_N} vertices, got {n}")


def write_graph6(g: Graph) -> bytes:
    """graph6 encoding of ``g`` without header or trailing newline."""
    out = bytearray(_encode_n(g.n))
    acc = 0
    nbits = 0
    rows = g.rows
    for j in range(1, g.n):
        row = rows[j]
        for i in range(j):
            acc = (acc << 1) | ((row >> i) & 1)
            nbits += 1
            if nbits == 6:
                out.append(acc + 63)
                acc = nbits = 0
    if nbits:
        out.append((acc << (6 - nbits)) + 63)
    return bytes(out)


def parse_graph6(text: bytes | str) -> Graph:
    """Parse one graph6 record. A leading ``>>graph6<<`` and surrounding whitespace are ignored."""
    data = text.encode("ascii") if isinstance(text, str) else bytes(text)
    data = data.strip()
    base = 0
    if data.startswith(G6_HEADER):
        base = len(G6_HEADER)
    for k in range(base, len(data)):
        if not 63 <= data[k] <= 126:
            raise FormatError(f"non-printable or out-of-range byte {data[k]!r}", k)
    if base >= len(data):
        raise FormatError("empty graph6 record", base)
    pos = base
    if data[pos] != 126:
        n = data[pos] - 63
        pos += 1
    else:
        if pos + 1 < len(data) and data[pos + 1] == 126:
            raise FormatError("8-byte graph6 header (n > 258047) not supported", pos)
        if pos + 4 > len(data):
            raise FormatError("truncated extended header", pos)
        b1, b2, b3 = (c - 63 for c in data[pos + 1 : pos + 4])
        n = (b1 << 12) | (b2 << 6) | b3
        pos += 4
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    body = data[pos:]
    if len(body) < need:
        raise FormatError(f"truncated bit stream: need {need} bytes, found {len(body)}", pos + len(body))
    if len(body) > need:
        raise FormatError("trailing bytes after bit stream", pos + need)
    rows = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            byte = body[k // 6] - 63
            if (byte >> (5 - k % 6)) & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            k += 1
    return Graph(n, tuple(rows))


def iter_graph6_lines(lines: Iterable[bytes | str]) -> Iterator[tuple[int, Graph | FormatError]]:
    """Yield ``(line_number, graph_or_error)`` for a newline-delimited graph6 stream; blank lines are skipped."""
    for lineno, line in enumerate(lines, start=1):
        if isinstance(line, str):
            line = line.encode("ascii", errors="replace")
        if not line.strip():
            continue
        try:
            yield lineno, parse_graph6(line)
        except FormatError as exc:
            yield lineno, exc


def write_dimacs(g: Graph, comment: str | None = None) -> str:
    lines = []
    if comment:
        lines.extend(f"c {c}" for c in comment.splitlines())
    edges = g.edges()
    lines.append(f"p edge {g.n} {len(edges)}")
    lines.extend(f"e {u + 1} {v + 1}" for u, v in edges)
    return "\n".join(lines) + "\n"


def parse_dimacs(text: str) -> Graph:
    """Parse DIMACS ``p edge n m`` / ``e u v`` text (1-indexed). Duplicate edges collapse."""
    n = None
    declared = None
    edges = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line[0] == "c":
            continue
        parts = line.split()
        if parts[0] == "p":
            if n is not None:
                raise FormatError("duplicate problem line", lineno)
            if len(parts) != 4 or parts[1] not in ("edge", "col"):
                raise FormatError(f"bad problem line {line!r}", lineno)
            try:
                n, declared = int(parts[2]), int(parts[3])
            except ValueError:
                raise FormatError(f"bad problem line {line!r}", lineno) from None
        elif parts[0] == "e":
            if n is None:
                raise FormatError("edge line before problem line", lineno)
            if len(parts) != 3:
                raise FormatError(f"bad edge line {line!r}", lineno)
            try:
                u, v = int(parts[1]), int(parts[2])
            except ValueError:
                raise FormatError(f"bad edge line {line!r}", lineno) from None
            if not (1 <= u <= n and 1 <= v <= n):
                raise FormatError(f"vertex out of range in {line!r} (n={n})", lineno)
            if u == v:
                raise FormatError(f"self-loop in {line!r}", lineno)
            edges.add((min(u, v) - 1, max(u, v) - 1))
        else:
            raise FormatError(f"unrecognised line {line!r}", lineno)
    if n is None:
        raise FormatError("missing 'p edge' header")
    if declared != len(edges):
        warnings.warn(f"DIMACS header declares {declared} edges, found {len(edges)} distinct", stacklevel=2)
    return Graph.from_edges(n, edges)


def read_graph(data: bytes, fmt: str = "auto") -> Graph:
    """Decode a single graph from file contents; ``fmt`` is ``graph6``, ``dimacs`` or ``auto``."""
    if fmt == "auto":
        # graph6 bytes are all >= 63, so a space or tab can only come from DIMACS
        fmt = "dimacs" if b" " in data or b"\t" in data else "graph6"
    if fmt == "graph6":
        lines = [ln for ln in data.splitlines() if ln.strip()]
        if len(lines) != 1:
            raise FormatError(f"expected one graph6 record, found {len(lines)}")
        return parse_graph6(lines[0])
    if fmt == "dimacs":
        try:
            text = data.decode("ascii")
        except UnicodeDecodeError as exc:
            raise FormatError("non-ASCII DIMACS input", exc.start) from None
        return parse_dimacs(text)
    raise ValueError(f"unknown format {fmt!r}")
