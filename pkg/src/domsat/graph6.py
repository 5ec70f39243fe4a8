"""graph6 encoding and decoding for graphs on 1..64 vertices.

graph6 packs the column-major upper triangle of the adjacency matrix into
6-bit groups offset by 63, after a size header.  It is the only graph
interchange format used anywhere in this package.
"""

from __future__ import annotations

from .graphs import MAX_VERTICES, Graph

_HEADER_PREFIX = ">>graph6<<"
_LO, _HI = 63, 126


class Graph6Error(ValueError):
    """Raised for malformed graph6 input; the message locates the fault."""


def _triangle_bits(g: Graph) -> list[int]:
    # column order: (0,1), (0,2), (1,2), (0,3), ...
    bits = []
    for v in range(1, g.n):
        row = g.rows[v]
        for u in range(v):
            bits.append(row >> u & 1)
    return bits


def graph6_encode(g: Graph) -> str:
    """Encode a labeled graph; inverse of graph6_decode up to labeling."""
    if g.n <= 62:
        header = [g.n + 63]
    else:
        header = [126, (g.n >> 12 & 63) + 63, (g.n >> 6 & 63) + 63, (g.n & 63) + 63]
    bits = _triangle_bits(g)
    while len(bits) % 6:
        bits.append(0)
    body = []
    for i in range(0, len(bits), 6):
        group = 0
        for b in bits[i:i + 6]:
            group = group << 1 | b
        body.append(group + 63)
    return "".join(map(chr, header + body))


def graph6_decode(text: str) -> Graph:
    """Decode a graph6 string into a vertex-labeled Graph.

    Accepts an optional '>>graph6<<' prefix and surrounding whitespace.
    Malformed headers, truncated bodies, trailing bytes, and nonzero
    padding are each rejected with a distinct message.
    """
    s = text.strip()
    if s.startswith(_HEADER_PREFIX):
        s = s[len(_HEADER_PREFIX):]
    if not s:
        raise Graph6Error("malformed header: empty input")
    data = [ord(c) for c in s]
    for pos, byte in enumerate(data):
        if not _LO <= byte <= _HI:
            raise Graph6Error(f"byte {byte} at position {pos} outside graph6 range 63..126")

    if data[0] == 126:
        if len(data) >= 2 and data[1] == 126:
            raise Graph6Error("malformed header: order above 258047 is not supported")
        if len(data) < 4:
            raise Graph6Error("malformed header: long-form size needs 4 bytes")
        n = ((data[1] - 63) << 12) | ((data[2] - 63) << 6) | (data[3] - 63)
        body = data[4:]
        body_start = 4
    else:
        n = data[0] - 63
        body = data[1:]
        body_start = 1

    if n < 1 or n > MAX_VERTICES:
        raise Graph6Error(f"malformed header: order {n} outside 1..{MAX_VERTICES}")

    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    if len(body) < need:
        raise Graph6Error(
            f"truncated bit stream: need {need} body bytes, found {len(body)}"
        )
    if len(body) > need:
        raise Graph6Error(
            f"trailing garbage after position {body_start + need - 1}"
        )

    bits = []
    for byte in body:
        group = byte - 63
        bits.extend(group >> shift & 1 for shift in range(5, -1, -1))
    if any(bits[nbits:]):
        raise Graph6Error("nonzero padding bits in final byte")

    rows = [0] * n
    i = 0
    for v in range(1, n):
        for u in range(v):
            if bits[i]:
                rows[u] |= 1 << v
                rows[v] |= 1 << u
            i += 1
    return Graph(n, tuple(rows))
