"""graph6 (short form, n <= 62) and plain edge-list codecs."""
from __future__ import annotations

from typing import Iterator

from .graph import Graph, from_edge_list

HEADER = ">>graph6<<"
MAX_GRAPH6_N = 62


class FormatError(ValueError):
    pass


def _edge_bits(n: int) -> Iterator[tuple]:
    # column order: x(0,1), x(0,2), x(1,2), x(0,3), ...
    for j in range(1, n):
        for i in range(j):
            yield i, j


def to_graph6(G: Graph) -> str:
    if G.n > MAX_GRAPH6_N:
        raise FormatError(f"graph6 short form holds at most {MAX_GRAPH6_N} vertices, got {G.n}")
    out = [chr(G.n + 63)]
    acc = nbits = 0
    for i, j in _edge_bits(G.n):
        acc = (acc << 1) | (G.masks[i] >> j & 1)
        nbits += 1
        if nbits == 6:
            out.append(chr(acc + 63))
            acc = nbits = 0
    if nbits:
        out.append(chr((acc << (6 - nbits)) + 63))
    return "".join(out)


def parse_graph6(text: str) -> Graph:
    s = text.strip()
    if s.startswith(HEADER):
        s = s[len(HEADER):].strip()
    if not s:
        raise FormatError("empty graph6 string")
    for ch in s:
        if not 63 <= ord(ch) <= 126:
            raise FormatError(f"byte {ord(ch)} outside the printable graph6 range")
    n = ord(s[0]) - 63
    if n > MAX_GRAPH6_N:
        raise FormatError("long-form graph6 headers (n > 62) are not supported")
    nbits = n * (n - 1) // 2
    payload = s[1:]
    if len(payload) != (nbits + 5) // 6:
        raise FormatError(f"graph6 payload has {len(payload)} bytes, expected {(nbits + 5) // 6} for n={n}")
    bits = 0
    for ch in payload:
        bits = (bits << 6) | (ord(ch) - 63)
    pad = 6 * len(payload) - nbits
    if bits & ((1 << pad) - 1):
        raise FormatError("nonzero padding bits in graph6 payload")
    bits >>= pad
    edges = []
    k = nbits - 1
    for i, j in _edge_bits(n):
        if bits >> k & 1:
            edges.append((i, j))
        k -= 1
    return from_edge_list(n, edges)


def to_edge_list(G: Graph) -> str:
    lines = [f"{G.n} {G.m}"] + [f"{e.u} {e.v}" for e in G.edges()]
    return "\n".join(lines) + "\n"


def parse_edge_list(text: str) -> Graph:
    rows = [ln.split() for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("#")]
    try:
        n, m = (int(x) for x in rows[0])
        edges = [(int(a), int(b)) for a, b in rows[1:]]
    except (IndexError, ValueError) as exc:
        raise FormatError(f"malformed edge list: {exc}") from None
    if len(edges) != m:
        raise FormatError(f"edge list declares {m} edges but has {len(edges)}")
    try:
        return from_edge_list(n, edges)
    except ValueError as exc:
        raise FormatError(str(exc)) from None


def read_graphs(text: str) -> list:
    """Parse either one edge list or one graph6 string per line."""
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise FormatError("no graph in input")
    first = lines[0].split()
    if len(first) == 2 and all(x.lstrip("-").isdigit() for x in first):
        return [parse_edge_list(text)]
    return [parse_graph6(ln) for ln in lines if ln != HEADER]
