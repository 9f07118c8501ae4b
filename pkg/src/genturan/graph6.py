"""graph6 encoding (simple undirected graphs).

Follows the public format description shipped with nauty: a size prefix
N(n) followed by the upper triangle of the adjacency matrix in column
order (x(0,1), x(0,2), x(1,2), x(0,3), ...), packed six bits per byte
and offset by 63.
"""

from __future__ import annotations

from .graph import Graph, GraphError


class Graph6Error(GraphError):
    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte offset {offset})")
        self.offset = offset


def _encode_size(n: int) -> bytes:
    if n < 63:
        return bytes([n + 63])
    if n < 258048:
        return bytes([126]) + bytes(63 + ((n >> s) & 63) for s in (12, 6, 0))
    if n < 1 << 36:
        return bytes([126, 126]) + bytes(63 + ((n >> s) & 63) for s in (30, 24, 18, 12, 6, 0))
    raise GraphError(f"graph6 cannot encode n={n}")


def encode_g6(g: Graph) -> str:
    g.require_simple("graph6 encoding")
    n = g.n
    out = bytearray(_encode_size(n))
    acc = 0
    nbits = 0
    for j in range(1, n):
        row = g.adj[j]
        for i in range(j):
            acc = (acc << 1) | (row >> i & 1)
            nbits += 1
            if nbits == 6:
                out.append(acc + 63)
                acc = nbits = 0
    if nbits:
        out.append((acc << (6 - nbits)) + 63)
    return out.decode("ascii")


def _decode_size(data: bytes) -> tuple[int, int]:
    if not data:
        raise Graph6Error("empty graph6 string", 0)
    if data[0] != 126:
        return data[0] - 63, 1
    if len(data) >= 2 and data[1] == 126:
        chunk, start = data[2:8], 2
    else:
        chunk, start = data[1:4], 1
    if len(chunk) < (6 if start == 2 else 3):
        raise Graph6Error("truncated size field", len(data))
    n = 0
    for k, c in enumerate(chunk):
        if not 63 <= c <= 126:
            raise Graph6Error(f"invalid size byte {c!r}", start + k)
        n = (n << 6) | (c - 63)
    return n, start + len(chunk)


def decode_g6(text: str | bytes) -> Graph:
    data = text.encode("ascii") if isinstance(text, str) else bytes(text)
    data = data.strip()
    if data.startswith(b">>graph6<<"):
        data = data[10:]
    if data[:1] == b":" or data[:1] == b"&":
        raise Graph6Error("sparse6/digraph6 input is not graph6", 0)
    n, pos = _decode_size(data)
    if not 0 <= n:
        raise Graph6Error("negative size", 0)
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    body = data[pos:]
    if len(body) != need:
        raise Graph6Error(f"expected {need} data bytes for n={n}, found {len(body)}", pos + min(len(body), need))
    adj = [0] * n
    bit = 0
    i, j = 0, 1
    for k, c in enumerate(body):
        if not 63 <= c <= 126:
            raise Graph6Error(f"invalid data byte {c!r}", pos + k)
        v = c - 63
        for s in range(5, -1, -1):
            if bit >= nbits:
                if v >> s & 1:
                    raise Graph6Error("nonzero padding bits", pos + k)
                continue
            if v >> s & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            bit += 1
            i += 1
            if i == j:
                i, j = 0, j + 1
    return Graph.from_adjacency(adj)
