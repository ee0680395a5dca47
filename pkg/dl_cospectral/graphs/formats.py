"""
Text codecs for graphs.

graph6 is the usual one-line-per-graph exchange format. The header holds the
order (one byte up to 62, ``~`` plus three bytes up to 258047, ``~~`` plus six
bytes above that) and the body packs the upper triangle of the adjacency
column by column, six bits per printable byte (value + 63), zero padded.

The fixture edge-list format is ``"n; u v; u v; ..."``: the order followed by
one ``u v`` pair per segment.
"""

from typing import IO, Iterator, List, Tuple

from dl_cospectral.core.config import settings
from dl_cospectral.core.exceptions import EdgeListError, Graph6Error, OrderLimitError
from dl_cospectral.graphs.graph import Graph

GRAPH6_HEADER = ">>graph6<<"
SMALL_ORDER_LIMIT = 62
MEDIUM_ORDER_LIMIT = 258047
CODEC_ORDER_LIMIT = 68719476735


def _decode_header(data: bytes, start: int) -> Tuple[int, int]:
    """Return ``(order, body_offset)`` for the length header at ``start``."""
    if start >= len(data):
        raise Graph6Error("missing length header", start)
    if data[start] != 126:
        return data[start] - 63, start + 1
    if start + 1 < len(data) and data[start + 1] == 126:
        width, lower = 6, MEDIUM_ORDER_LIMIT + 1
        first = start + 2
    else:
        width, lower = 3, SMALL_ORDER_LIMIT + 1
        first = start + 1
    if first + width > len(data):
        raise Graph6Error("malformed length header: too few header bytes", len(data))
    order = 0
    for byte in data[first:first + width]:
        order = order << 6 | (byte - 63)
    if order < lower:
        raise Graph6Error(
            f"malformed length header: order {order} must use the shorter header form", start
        )
    return order, first + width


def _encode_header(order: int) -> bytes:
    if order <= SMALL_ORDER_LIMIT:
        return bytes([order + 63])
    if order <= MEDIUM_ORDER_LIMIT:
        return bytes([126] + [(order >> shift & 63) + 63 for shift in (12, 6, 0)])
    return bytes([126, 126] + [(order >> shift & 63) + 63 for shift in (30, 24, 18, 12, 6, 0)])


def parse_graph6(text: str) -> Graph:
    """
    Parse one graph6 line.

    Args:
        text: graph6 string; a trailing newline and a leading ``>>graph6<<``
            marker are accepted

    Returns:
        Graph: The decoded graph

    Raises:
        Graph6Error: On a malformed header, truncated data, trailing garbage,
            nonzero padding or a byte outside ``?``..``~``; the error carries
            the byte offset of the fault
        OrderLimitError: If the encoded order is above ``DL_ORDER_CAP``
    """
    text = text.rstrip("\r\n")
    try:
        data = text.encode("ascii")
    except UnicodeEncodeError as error:
        raise Graph6Error("non-ASCII character", error.start) from error

    start = len(GRAPH6_HEADER) if data.startswith(GRAPH6_HEADER.encode()) else 0
    for offset in range(start, len(data)):
        if not 63 <= data[offset] <= 126:
            raise Graph6Error(f"out-of-range character {chr(data[offset])!r}", offset)

    order, body_start = _decode_header(data, start)
    if order < 1:
        raise Graph6Error("graph6 order 0 does not describe a graph", start)
    cap = settings.DL_ORDER_CAP
    if order > cap:
        raise OrderLimitError(order, cap)

    bit_count = order * (order - 1) // 2
    body_length = (bit_count + 5) // 6
    body = data[body_start:]
    if len(body) < body_length:
        raise Graph6Error(
            f"truncated edge data: expected {body_length} bytes, found {len(body)}", len(data)
        )
    if len(body) > body_length:
        raise Graph6Error("trailing garbage after edge data", body_start + body_length)

    packed = 0
    for byte in body:
        packed = packed << 6 | (byte - 63)
    padding = body_length * 6 - bit_count
    if packed & ((1 << padding) - 1):
        raise Graph6Error("nonzero padding bits", len(data) - 1)
    packed >>= padding

    edges: List[Tuple[int, int]] = []
    position = bit_count - 1
    for j in range(1, order):
        for i in range(j):
            if packed >> position & 1:
                edges.append((i, j))
            position -= 1
    return Graph(order, edges)


def encode_graph6(g: Graph) -> str:
    """Encode ``g`` under its current labeling (no canonical relabeling)."""
    if g.order > CODEC_ORDER_LIMIT:
        raise OrderLimitError(g.order, CODEC_ORDER_LIMIT, "graph6 order")
    rows = g.rows
    out = bytearray(_encode_header(g.order))
    chunk = 0
    filled = 0
    for j in range(1, g.order):
        row = rows[j]
        for i in range(j):
            chunk = chunk << 1 | (row >> i & 1)
            filled += 1
            if filled == 6:
                out.append(chunk + 63)
                chunk = filled = 0
    if filled:
        out.append((chunk << (6 - filled)) + 63)
    return out.decode("ascii")


def iter_graph6(stream: IO[str]) -> Iterator[Tuple[int, str]]:
    """Yield ``(line_number, text)`` for each non-blank line of a graph6 stream."""
    for line_number, line in enumerate(stream, start=1):
        line = line.strip()
        if line and line != GRAPH6_HEADER:
            yield line_number, line


def parse_edge_list(text: str) -> Graph:
    """
    Parse the fixture edge-list format ``"n; u v; u v; ..."``.

    Empty segments (a trailing ``;``) are ignored.

    Raises:
        EdgeListError: If the order or a pair is not made of integers, or a
            segment has other than two entries
    """
    segments = [segment.strip() for segment in text.strip().split(";")]
    segments = [segment for segment in segments if segment]
    if not segments:
        raise EdgeListError("empty edge list")
    try:
        order = int(segments[0])
    except ValueError as error:
        raise EdgeListError(f"order {segments[0]!r} is not an integer") from error

    edges = []
    for index, segment in enumerate(segments[1:], start=1):
        parts = segment.split()
        if len(parts) != 2:
            raise EdgeListError(f"segment {index} ({segment!r}) must hold exactly two vertices")
        try:
            edges.append((int(parts[0]), int(parts[1])))
        except ValueError as error:
            raise EdgeListError(f"segment {index} ({segment!r}) is not a pair of integers") from error
    return Graph(order, edges)


def format_edge_list(g: Graph) -> str:
    return "; ".join([str(g.order)] + [f"{u} {v}" for u, v in g.edges()])
