"""graph6 encoding and decoding of simple graphs."""

import logging
from typing import Iterable, Iterator, List, Optional, TextIO, Tuple

from rigikit.errors import Graph6ParseError, InvalidArgumentError
from rigikit.models.graph_models import SimpleGraph

logger = logging.getLogger(__name__)

HEADER = ">>graph6<<"
BIAS = 63
MAX_BYTE = 126
ONE_BYTE_LIMIT = 62
FOUR_BYTE_LIMIT = 258047
MAX_VERTICES = 68719476735


def _encode_size(n: int) -> str:
    if n <= ONE_BYTE_LIMIT:
        return chr(n + BIAS)
    if n <= FOUR_BYTE_LIMIT:
        return "~" + "".join(chr(((n >> shift) & 63) + BIAS) for shift in (12, 6, 0))
    if n <= MAX_VERTICES:
        return "~~" + "".join(
            chr(((n >> shift) & 63) + BIAS) for shift in (30, 24, 18, 12, 6, 0)
        )
    raise InvalidArgumentError(f"Graph with {n} vertices cannot be encoded in graph6")


def _decode_size(data: bytes, offset: int) -> Tuple[int, int]:
    """Return (n, number of size bytes)."""

    def chunk(start: int, length: int) -> int:
        if start + length > len(data):
            raise Graph6ParseError("Truncated size field", offset + len(data))
        value = 0
        for position in range(start, start + length):
            value = (value << 6) | (data[position] - BIAS)
        return value

    if data[0] != MAX_BYTE:
        return data[0] - BIAS, 1
    if len(data) > 1 and data[1] == MAX_BYTE:
        return chunk(2, 6), 8
    return chunk(1, 3), 4


def parse_graph6(text: str, line: Optional[int] = None) -> SimpleGraph:
    """
    Decode one graph6 word.

    Args:
        text: graph6 word, optionally preceded by the >>graph6<< header
        line: Line number reported in error messages

    Returns:
        The encoded SimpleGraph

    Raises:
        Graph6ParseError: Malformed length, byte outside 63..126 or nonzero padding
    """
    word = text.strip()
    offset = 0
    if word.startswith(HEADER):
        word = word[len(HEADER):]
        offset = len(HEADER)
    if not word:
        raise Graph6ParseError("Empty graph6 word", offset, line)

    try:
        data = word.encode("ascii")
    except UnicodeEncodeError:
        bad = next(i for i, ch in enumerate(word) if ord(ch) > 127)
        raise Graph6ParseError("Non-ASCII character", offset + bad, line) from None

    for position, byte in enumerate(data):
        if byte < BIAS or byte > MAX_BYTE:
            raise Graph6ParseError(
                f"Byte {byte} outside printable range 63..126", offset + position, line
            )

    n, size_length = _decode_size(data, offset)
    body = data[size_length:]
    pair_count = n * (n - 1) // 2
    expected = (pair_count + 5) // 6
    if len(body) != expected:
        raise Graph6ParseError(
            f"Expected {expected} body bytes for n={n}, found {len(body)}",
            offset + size_length + min(len(body), expected),
            line,
        )

    # Pairs in column-major order: (0,1), (0,2), (1,2), (0,3), ...
    edges: List[Tuple[int, int]] = []
    bit_index = 0
    for j in range(1, n):
        for i in range(j):
            byte = body[bit_index // 6] - BIAS
            if (byte >> (5 - bit_index % 6)) & 1:
                edges.append((i, j))
            bit_index += 1

    padding_bits = expected * 6 - pair_count
    if padding_bits:
        last = body[-1] - BIAS
        if last & ((1 << padding_bits) - 1):
            raise Graph6ParseError(
                "Nonzero padding bits", offset + size_length + expected - 1, line
            )

    return SimpleGraph(n, tuple(edges))


def emit_graph6(graph: SimpleGraph) -> str:
    """
    Encode a graph as its canonical minimal-length graph6 word.

    Args:
        graph: Graph to encode (labels are kept as given)

    Returns:
        graph6 word without header
    """
    n = graph.n
    masks = graph.adjacency_masks
    bits: List[int] = []
    for j in range(1, n):
        row = masks[j]
        for i in range(j):
            bits.append((row >> i) & 1)
    while len(bits) % 6:
        bits.append(0)

    body = []
    for start in range(0, len(bits), 6):
        value = 0
        for bit in bits[start:start + 6]:
            value = (value << 1) | bit
        body.append(chr(value + BIAS))
    return _encode_size(n) + "".join(body)


def read_graph6_lines(
    stream: TextIO,
) -> Iterator[Tuple[int, Optional[SimpleGraph], Optional[Graph6ParseError]]]:
    """
    Parse a graph6 stream line by line, skipping blank lines.

    Yields:
        (line number, graph or None, error or None)
    """
    for number, raw in enumerate(stream, start=1):
        if not raw.strip():
            continue
        try:
            yield number, parse_graph6(raw, line=number), None
        except Graph6ParseError as exc:
            logger.debug("graph6 parse failure on line %d: %s", number, exc)
            yield number, None, exc


def write_graph6_lines(graphs: Iterable[SimpleGraph], stream: TextIO) -> int:
    """Write one graph6 word per line; returns the number written."""
    count = 0
    for graph in graphs:
        stream.write(emit_graph6(graph) + "\n")
        count += 1
    return count
