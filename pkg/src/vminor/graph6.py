"""graph6 encoder/decoder.

Only the one-byte (n <= 62) and four-byte (n <= 258047) size headers are
supported. Bits of the upper triangle are packed column by column
(``x(0,1), x(0,2), x(1,2), x(0,3), ...``), six per byte, most significant
bit first, each byte offset by 63.
"""

from __future__ import annotations

import logging
from typing import IO, Iterable, Iterator

from vminor.graph import Graph

log = logging.getLogger(__name__)

HEADER = ">>graph6<<"
MAX_N = 258047


class Graph6Error(ValueError):
    """Malformed graph6 input; ``offset`` is the 0-based byte position at fault."""

    def __init__(self, message: str, offset: int | None = None):
        if offset is not None:
            message = f"byte {offset}: {message}"
        super().__init__(message)
        self.offset = offset


def _encode_n(n: int) -> str:
    if n < 0:
        raise Graph6Error(f"negative vertex count {n}")
    if n <= 62:
        return chr(63 + n)
    if n <= MAX_N:
        return chr(126) + "".join(chr(63 + (n >> s & 0x3F)) for s in (12, 6, 0))
    raise Graph6Error(f"n = {n} exceeds the 18-bit graph6 header limit {MAX_N}")


def write_graph6(g: Graph) -> str:
    """Encode ``g`` as a single graph6 line (no trailing newline)."""
    n = g.n
    out = [_encode_n(n)]
    rows = g.rows
    acc = 0
    nbits = 0
    for y in range(1, n):
        for x in range(y):
            acc = acc << 1 | (rows[x] >> y & 1)
            nbits += 1
            if nbits == 6:
                out.append(chr(63 + acc))
                acc = 0
                nbits = 0
    if nbits:
        out.append(chr(63 + (acc << (6 - nbits))))
    return "".join(out)


def body_length(n: int) -> int:
    return (n * (n - 1) // 2 + 5) // 6


def parse_graph6(line: str | bytes) -> Graph:
    """Decode one graph6 line. Raises :class:`Graph6Error` with the faulting byte offset."""
    if isinstance(line, bytes):
        line = line.decode("ascii", errors="replace")
    line = line.rstrip("\r\n")
    if line.startswith(HEADER):
        line = line[len(HEADER):]
    if not line:
        raise Graph6Error("empty graph6 line", 0)
    data = [ord(c) - 63 for c in line]
    for i, d in enumerate(data):
        if not 0 <= d <= 63:
            raise Graph6Error(f"character {line[i]!r} outside the range 63..126", i)
    if data[0] < 63:
        n, pos = data[0], 1
    else:
        if len(data) >= 2 and data[1] == 63:
            raise Graph6Error("36-bit size header is not supported", 1)
        if len(data) < 4:
            raise Graph6Error("truncated 18-bit size header", len(data))
        n = data[1] << 12 | data[2] << 6 | data[3]
        pos = 4
        if n <= 62:
            raise Graph6Error(f"non-canonical long header for n = {n}", 0)
    need = body_length(n)
    body = data[pos:]
    if len(body) < need:
        raise Graph6Error(f"truncated body: expected {need} bytes, found {len(body)}", len(data))
    if len(body) > need:
        raise Graph6Error(f"{len(body) - need} trailing bytes after graph body", pos + need)
    rows = [0] * n
    total = n * (n - 1) // 2
    k = 0
    x, y = 0, 1
    for bi, d in enumerate(body):
        for shift in range(5, -1, -1):
            bit = d >> shift & 1
            if k >= total:
                if bit:
                    raise Graph6Error("nonzero padding bit", pos + bi)
                continue
            if bit:
                rows[x] |= 1 << y
                rows[y] |= 1 << x
            k += 1
            x += 1
            if x == y:
                x = 0
                y += 1
    return Graph._trusted(tuple(rows))


def read_graph6_stream(lines: Iterable[str], errors: list | None = None) -> Iterator[Graph]:
    """Yield graphs from graph6 lines, skipping blanks and the optional ``>>graph6<<`` header.

    With ``errors`` given, unparseable lines are recorded there as
    ``(line_number, message)`` and skipped; otherwise the error propagates.
    """
    for lineno, raw in enumerate(lines, start=1):
        text = raw.strip()
        if text.startswith(HEADER):
            text = text[len(HEADER):]
        if not text:
            continue
        try:
            yield parse_graph6(text)
        except Graph6Error as exc:
            if errors is None:
                raise Graph6Error(f"line {lineno}: {exc}") from exc
            log.warning("line %d: %s", lineno, exc)
            errors.append((lineno, str(exc)))


def write_graph6_stream(graphs: Iterable[Graph], out: IO[str]) -> int:
    count = 0
    for g in graphs:
        out.write(write_graph6(g))
        out.write("\n")
        count += 1
    return count
