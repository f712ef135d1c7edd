"""graph6 text encoding of simple undirected graphs.

A token is a size header followed by the upper triangle of the adjacency
matrix, column by column (x(0,1), x(0,2), x(1,2), x(0,3), ...), six bits per
printable byte, most significant bit first, zero padded.
"""
from __future__ import annotations

import dataclasses
import typing as t

from domprism.errors import Graph6Error
from domprism.graph import Graph
from domprism.vertexset import check_capacity

HEADER = ">>graph6<<"

_OFFSET = 63
_LONG = 126
_SHORT_MAX = 62


@dataclasses.dataclass(frozen=True)
class Graph6Record:
    """One decoded line of a graph6 stream."""

    line_number: int
    text: str
    graph: Graph


def _decode_size(data: bytes, line_number: t.Union[int, None]) -> t.Tuple[int, int]:
    """Return (n, offset of the first payload byte)."""
    if data[0] != _LONG:
        return data[0] - _OFFSET, 1
    if len(data) > 1 and data[1] == _LONG:
        start, width = 2, 6
    else:
        start, width = 1, 3
    if len(data) < start + width:
        msg = "Truncated size header"
        raise Graph6Error(msg, line_number)
    n = 0
    for b in data[start : start + width]:
        n = n << 6 | (b - _OFFSET)
    return n, start + width


def parse_graph6(token: str, line_number: t.Union[int, None] = None) -> Graph:
    """Decode one graph6 token.

    Args:
        token: graph6 text, optionally prefixed by the >>graph6<< header
        line_number: Input line reported in errors

    Returns:
        Decoded graph

    Raises:
        Graph6Error for a byte outside 63..126, a truncated or overlong
            payload, nonzero padding bits, or an order of 0
        CapacityError if the order exceeds the vertex capacity
    """
    text = token.strip()
    if text.startswith(HEADER):
        text = text[len(HEADER) :]
    if not text:
        msg = "Empty graph6 token"
        raise Graph6Error(msg, line_number)
    try:
        data = text.encode("ascii")
    except UnicodeEncodeError as e:
        msg = f"Non-ASCII character in '{text}'"
        raise Graph6Error(msg, line_number) from e
    for i, b in enumerate(data):
        if not _OFFSET <= b <= _LONG:
            msg = f"Byte {b} at position {i} outside 63..126"
            raise Graph6Error(msg, line_number)

    n, pos = _decode_size(data, line_number)
    if n < 1:
        msg = "graph6 order 0 is not a graph here"
        raise Graph6Error(msg, line_number)
    check_capacity(n)

    num_bits = n * (n - 1) // 2
    expected = -(-num_bits // 6)
    payload = data[pos:]
    if len(payload) < expected:
        msg = f"Truncated payload: need {expected} bytes for n={n}, got {len(payload)}"
        raise Graph6Error(msg, line_number)
    if len(payload) > expected:
        msg = f"Overlong payload: need {expected} bytes for n={n}, got {len(payload)}"
        raise Graph6Error(msg, line_number)

    value = 0
    for b in payload:
        value = value << 6 | (b - _OFFSET)
    padding = 6 * expected - num_bits
    if value & ((1 << padding) - 1):
        msg = f"Nonzero padding bits in the last byte of '{text}'"
        raise Graph6Error(msg, line_number)
    shift = 6 * expected - 1
    adj = [0] * n
    for v in range(1, n):
        for u in range(v):
            if value >> shift & 1:
                adj[u] |= 1 << v
                adj[v] |= 1 << u
            shift -= 1
    return Graph(n, adj)


def encode_graph6(g: Graph) -> str:
    """Encode a graph as a graph6 token without header.

    Raises:
        CapacityError if the order exceeds the vertex capacity
    """
    n = g.n
    check_capacity(n)
    if n <= _SHORT_MAX:
        header = [n + _OFFSET]
    else:
        header = [_LONG] + [(n >> s & 0x3F) + _OFFSET for s in (12, 6, 0)]

    adj = g.adjacency
    bits = [adj[u] >> v & 1 for v in range(1, n) for u in range(v)]
    bits.extend([0] * (-len(bits) % 6))
    payload = []
    for i in range(0, len(bits), 6):
        chunk = 0
        for b in bits[i : i + 6]:
            chunk = chunk << 1 | b
        payload.append(chunk + _OFFSET)
    return bytes(header + payload).decode("ascii")


def read_graph6(lines: t.Iterable[str]) -> t.Iterator[Graph6Record]:
    """Decode a stream of graph6 lines.

    Blank lines are skipped. Line numbers are 1-based.

    Raises:
        Graph6Error carrying the offending line number
    """
    for line_number, line in enumerate(lines, start=1):
        text = line.strip()
        if text.startswith(HEADER):
            text = text[len(HEADER) :]
        if not text:
            continue
        yield Graph6Record(line_number, text, parse_graph6(text, line_number))
