"""graph6 for simple graphs and a plain 0/1 matrix format for targets.

graph6 cannot carry loops, so targets use the ``.hm`` text format::

    2
    11
    10

first line ``q``, then ``q`` rows of ``q`` characters from ``{0,1}``.
"""

from __future__ import annotations

from .graphs import HGraph, SimpleGraph


class ParseError(ValueError):
    """Malformed input. ``offset`` is a byte offset (graph6) or row index (.hm)."""

    def __init__(self, message: str, offset: int | None = None):
        super().__init__(message)
        self.offset = offset


_G6_HEADER = b">>graph6<<"
_MAX_SHORT = 62
_MAX_LONG = 258047


def _as_bytes(text) -> bytes:
    if isinstance(text, str):
        try:
            return text.encode("ascii")
        except UnicodeEncodeError as exc:
            raise ParseError(f"non-ASCII character at byte {exc.start}", exc.start) from None
    return bytes(text)


def parse_graph6(text: str | bytes) -> SimpleGraph:
    data = _as_bytes(text).rstrip(b"\r\n")
    base = 0
    if data.startswith(_G6_HEADER):
        base = len(_G6_HEADER)
        data = data[base:]
    for i, c in enumerate(data):
        if not 63 <= c <= 126:
            raise ParseError(f"byte {base + i}: character {c!r} outside graph6 range 63..126", base + i)
    if not data:
        raise ParseError(f"byte {base}: empty graph6 string", base)

    if data[0] != 126:
        n, pos = data[0] - 63, 1
    elif len(data) >= 2 and data[1] == 126:
        raise ParseError(f"byte {base + 1}: 8-byte size form (n > {_MAX_LONG}) not supported", base + 1)
    else:
        if len(data) < 4:
            raise ParseError(f"byte {base + len(data)}: truncated long-form size", base + len(data))
        n = ((data[1] - 63) << 12) | ((data[2] - 63) << 6) | (data[3] - 63)
        if n <= _MAX_SHORT:
            raise ParseError(f"byte {base}: long-form size used for n={n} <= {_MAX_SHORT}", base)
        pos = 4

    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    body = data[pos:]
    if len(body) < need:
        raise ParseError(
            f"byte {base + len(data)}: truncated bit field ({len(body)} of {need} bytes)",
            base + len(data),
        )
    if len(body) > need:
        raise ParseError(f"byte {base + pos + need}: trailing data after bit field", base + pos + need)

    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            byte = body[k // 6] - 63
            if byte >> (5 - k % 6) & 1:
                edges.append((i, j))
            k += 1
    if need and (body[-1] - 63) & ((1 << (need * 6 - nbits)) - 1):
        raise ParseError(f"byte {base + pos + need - 1}: nonzero padding bits", base + pos + need - 1)
    return SimpleGraph(n, edges)


def serialize_graph6(g: SimpleGraph) -> str:
    n = g.n
    if n > _MAX_LONG:
        raise ValueError(f"graph6 serialisation supports n <= {_MAX_LONG}")
    if n <= _MAX_SHORT:
        out = [n + 63]
    else:
        out = [126, 63 + (n >> 12 & 63), 63 + (n >> 6 & 63), 63 + (n & 63)]
    acc = nacc = 0
    for j in range(1, n):
        for i in range(j):
            acc = acc << 1 | ((i, j) in g.edges)
            nacc += 1
            if nacc == 6:
                out.append(acc + 63)
                acc = nacc = 0
    if nacc:
        out.append((acc << (6 - nacc)) + 63)
    return bytes(out).decode("ascii")


def parse_hgraph(text: str) -> HGraph:
    lines = text.replace("\r\n", "\n").split("\n")
    while lines and lines[-1].strip() == "":
        lines.pop()
    if not lines:
        raise ParseError("empty H-matrix input", 0)
    try:
        q = int(lines[0].strip())
    except ValueError:
        raise ParseError(f"header: expected vertex count, got {lines[0]!r}", 0) from None
    if q < 0:
        raise ParseError(f"header: negative vertex count {q}", 0)
    rows = lines[1:]
    if len(rows) != q:
        raise ParseError(f"expected {q} matrix rows, found {len(rows)}", len(rows))
    mat = []
    for r, line in enumerate(rows):
        line = line.strip()
        if len(line) != q:
            raise ParseError(f"row {r}: length {len(line)}, expected {q} (non-square)", r)
        bad = [c for c in line if c not in "01"]
        if bad:
            raise ParseError(f"row {r}: character {bad[0]!r} outside {{0,1}}", r)
        mat.append([int(c) for c in line])
    for i in range(q):
        for j in range(i):
            if mat[i][j] != mat[j][i]:
                raise ParseError(f"row {i}: asymmetric entry at column {j}", i)
    return HGraph(mat)


def serialize_hgraph(h: HGraph) -> str:
    rows = ["".join(str(x) for x in row) for row in h.matrix]
    return "\n".join([str(h.q)] + rows) + "\n"
