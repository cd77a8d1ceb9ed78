"""graph6 codec, short form only (n <= 62), bit-exact.

Layout: byte 0 is chr(n+63); then the upper triangle of the adjacency
matrix, read column by column ((0,1),(0,2),(1,2),(0,3),...), packed
big-endian into 6-bit groups, zero-padded, each group stored as
chr(value+63).  An optional ">>graph6<<" header is tolerated on input and
never emitted.
"""

from __future__ import annotations

from .graphs import Graph, upper_triangle_pairs

HEADER = b">>graph6<<"

_MIN_BYTE = 63   # '?'
_MAX_BYTE = 126  # '~', also the long-form marker when used as length byte


class Graph6Error(ValueError):
    """Malformed graph6 input or an unencodable graph."""


def graph6_encode(g: Graph) -> bytes:
    if g.n > 62:
        raise Graph6Error(f"short-form graph6 supports order <= 62, got {g.n}")
    out = bytearray([g.n + 63])
    acc = 0
    nbits = 0
    for i, j in upper_triangle_pairs(g.n):
        acc = acc << 1 | (g.rows[i] >> j & 1)
        nbits += 1
        if nbits == 6:
            out.append(acc + 63)
            acc = 0
            nbits = 0
    if nbits:
        out.append((acc << (6 - nbits)) + 63)
    return bytes(out)


def graph6_decode(data: bytes | str) -> Graph:
    if isinstance(data, str):
        try:
            data = data.encode("ascii")
        except UnicodeEncodeError as exc:
            raise Graph6Error(f"non-ASCII input: {exc}") from None
    if data.startswith(HEADER):
        data = data[len(HEADER):]
    if not data:
        raise Graph6Error("empty graph6 string")
    first = data[0]
    if first == _MAX_BYTE:
        raise Graph6Error("long-form graph6 (order > 62) not supported")
    if not _MIN_BYTE <= first < _MAX_BYTE:
        raise Graph6Error(f"malformed length byte {first!r}")
    n = first - 63
    if n == 0:
        raise Graph6Error("order-0 graph not representable")
    npairs = n * (n - 1) // 2
    nbytes = (npairs + 5) // 6
    body = data[1:]
    if len(body) < nbytes:
        raise Graph6Error(f"truncated: need {nbytes} data bytes for order {n}, got {len(body)}")
    if len(body) > nbytes:
        raise Graph6Error(f"trailing garbage after {nbytes} data bytes")
    rows = [0] * n
    pairs = upper_triangle_pairs(n)
    idx = 0
    for byte in body:
        if not _MIN_BYTE <= byte <= _MAX_BYTE:
            raise Graph6Error(f"data byte {byte!r} outside graph6 range")
        value = byte - 63
        for shift in range(5, -1, -1):
            bit = value >> shift & 1
            if idx < npairs:
                if bit:
                    i, j = pairs[idx]
                    rows[i] |= 1 << j
                    rows[j] |= 1 << i
            elif bit:
                raise Graph6Error("nonzero padding bits")
            idx += 1
    return Graph(n, tuple(rows))
