from ..config import max_graph6_order
from ..util import Graph6FormatException
from .graph import build_graph

OFFSET = 63


def encode_graph6(graph):
    """
    graph6 bytes of a graph with at most 62 vertices.

    Upper-triangle bits run over columns j=1..n-1 and rows i=0..j-1, packed big-endian six at a time.
    :param graph: Graph
    :return: bytes without trailing newline
    """
    n = graph.n
    if n > max_graph6_order:
        raise ValueError(f"graph6 encoding supports at most {max_graph6_order} vertices, got {n}")
    bits = [1 if graph.has_edge(i, j) else 0 for j in range(1, n) for i in range(j)]
    bits += [0] * (-len(bits) % 6)
    out = bytearray([n + OFFSET])
    for k in range(0, len(bits), 6):
        value = 0
        for bit in bits[k:k + 6]:
            value = (value << 1) | bit
        out.append(value + OFFSET)
    return bytes(out)


def graph6_text(graph):
    return encode_graph6(graph).decode('ascii')


def decode_graph6(data):
    """
    Inverse of encode_graph6. Accepts str or bytes, tolerates one trailing newline.
    """
    if isinstance(data, str):
        data = data.encode('ascii')
    data = data.rstrip(b'\n')
    if not data:
        raise Graph6FormatException("empty graph6 string")
    if any(byte < OFFSET or byte > 126 for byte in data):
        raise Graph6FormatException(f"graph6 byte out of range in {data!r}")
    n = data[0] - OFFSET
    if n > max_graph6_order:
        raise Graph6FormatException(f"graph6 header {n} exceeds the single-byte size range")
    bit_count = n * (n - 1) // 2
    expected = 1 + (bit_count + 5) // 6
    if len(data) < expected:
        raise Graph6FormatException(f"graph6 string too short for {n} vertices")
    if len(data) > expected:
        raise Graph6FormatException(f"trailing garbage after graph6 string for {n} vertices")
    bits = []
    for byte in data[1:]:
        value = byte - OFFSET
        bits.extend((value >> shift) & 1 for shift in range(5, -1, -1))
    if any(bits[bit_count:]):
        raise Graph6FormatException("graph6 padding bits are not zero")
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if bits[k]:
                edges.append((i, j))
            k += 1
    return build_graph(n, edges)


def read_graph6_lines(text):
    """Graphs from graph6 text, one per non-empty line."""
    return [decode_graph6(line) for line in text.splitlines() if line.strip()]
