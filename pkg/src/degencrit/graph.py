"""Immutable simple graphs on vertices ``0..n-1`` and the combinators used throughout."""
from __future__ import annotations

from collections import deque
from typing import Iterable, NamedTuple, Sequence

from ._backend import KernelGraph


class GraphError(ValueError):
    """Invalid vertex, edge, or vertex set."""


class Edge(NamedTuple):
    u: int
    v: int

    @classmethod
    def of(cls, a: int, b: int) -> "Edge":
        if a == b:
            raise GraphError(f"self-loop at vertex {a}")
        return cls(a, b) if a < b else cls(b, a)

    def __str__(self) -> str:
        return f"{self.u}-{self.v}"


class Graph:
    """A finite simple graph with dense integer vertices.

    ``adjacency[v]`` is the sorted tuple of neighbours of ``v``. Instances are
    immutable and hashable; equality is equality of labelled graphs.
    """

    __slots__ = ("n", "adjacency", "masks", "_kernel", "_m")

    def __init__(self, n: int, adjacency: Sequence[Iterable[int]]):
        if n < 0 or len(adjacency) != n:
            raise GraphError(f"adjacency has {len(adjacency)} rows for n={n}")
        adj = tuple(tuple(sorted(set(row))) for row in adjacency)
        masks = []
        for v, row in enumerate(adj):
            x = 0
            for w in row:
                if not 0 <= w < n:
                    raise GraphError(f"neighbour {w} of {v} out of range")
                if w == v:
                    raise GraphError(f"self-loop at vertex {v}")
                x |= 1 << w
            masks.append(x)
        for v, row in enumerate(adj):
            for w in row:
                if not masks[w] >> v & 1:
                    raise GraphError(f"asymmetric adjacency between {v} and {w}")
        self.n = n
        self.adjacency = adj
        self.masks = tuple(masks)
        self._m = sum(len(r) for r in adj) // 2
        self._kernel = None

    @property
    def m(self) -> int:
        return self._m

    @property
    def kernel(self):
        if self._kernel is None:
            self._kernel = KernelGraph(self.n, self.adjacency)
        return self._kernel

    def vertices(self) -> range:
        return range(self.n)

    def edges(self) -> list:
        """Edges in lexicographic order."""
        return [Edge(u, v) for u in range(self.n) for v in self.adjacency[u] if u < v]

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def neighbours(self, v: int) -> tuple:
        return self.adjacency[v]

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.masks[u] >> v & 1)

    def degrees(self) -> list:
        return [len(r) for r in self.adjacency]

    def __eq__(self, other) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.masks == other.masks

    def __hash__(self) -> int:
        return hash((self.n, self.masks))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def from_edge_list(n: int, edges: Iterable[Sequence[int]]) -> Graph:
    adj = [set() for _ in range(n)]
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u}, {v}) has an endpoint outside [0, {n})")
        if u == v:
            raise GraphError(f"self-loop at vertex {u}")
        adj[u].add(v)
        adj[v].add(u)
    return Graph(n, adj)


def _from_masks(n: int, masks: Sequence[int]) -> Graph:
    return Graph(n, [[w for w in range(n) if x >> w & 1] for x in masks])


def _check_vertices(G: Graph, S: Iterable[int]) -> list:
    S = sorted(set(S))
    for v in S:
        if not 0 <= v < G.n:
            raise GraphError(f"vertex {v} out of range for n={G.n}")
    return S


def induced_subgraph(G: Graph, S: Iterable[int]) -> Graph:
    """G[S], relabelled to ``0..|S|-1`` in sorted order of S."""
    S = _check_vertices(G, S)
    index = {v: i for i, v in enumerate(S)}
    return Graph(len(S), [[index[w] for w in G.adjacency[v] if w in index] for v in S])


def delete_vertices(G: Graph, S: Iterable[int]) -> Graph:
    drop = set(_check_vertices(G, S))
    return induced_subgraph(G, [v for v in range(G.n) if v not in drop])


def delete_edge(G: Graph, u: int, v: int) -> Graph:
    if not G.has_edge(u, v):
        raise GraphError(f"{u}-{v} is not an edge")
    adj = [list(r) for r in G.adjacency]
    adj[u].remove(v)
    adj[v].remove(u)
    return Graph(G.n, adj)


def add_edge(G: Graph, u: int, v: int) -> Graph:
    return from_edge_list(G.n, list(G.edges()) + [(u, v)])


def relabel(G: Graph, perm: Sequence[int]) -> Graph:
    """Graph with vertex ``v`` renamed ``perm[v]``."""
    if sorted(perm) != list(range(G.n)):
        raise GraphError("relabelling is not a permutation")
    adj = [None] * G.n
    for v in range(G.n):
        adj[perm[v]] = [perm[w] for w in G.adjacency[v]]
    return Graph(G.n, adj)


def disjoint_union(G1: Graph, G2: Graph) -> Graph:
    off = G1.n
    return Graph(G1.n + G2.n, [list(r) for r in G1.adjacency] + [[w + off for w in r] for r in G2.adjacency])


def complete_join(G1: Graph, G2: Graph) -> Graph:
    """G1 + G2; G1 keeps indices ``0..n1-1``."""
    n1, n2 = G1.n, G2.n
    adj = [list(r) + list(range(n1, n1 + n2)) for r in G1.adjacency]
    adj += [[w + n1 for w in r] + list(range(n1)) for r in G2.adjacency]
    return Graph(n1 + n2, adj)


def square(G: Graph) -> Graph:
    masks = []
    for v in range(G.n):
        x = G.masks[v]
        for w in G.adjacency[v]:
            x |= G.masks[w]
        masks.append(x & ~(1 << v))
    return _from_masks(G.n, masks)


def complement(G: Graph) -> Graph:
    full = (1 << G.n) - 1
    return _from_masks(G.n, [full & ~x & ~(1 << v) for v, x in enumerate(G.masks)])


def degree_profile(G: Graph) -> tuple:
    """(ascending degree sequence, minimum degree, maximum degree)."""
    if G.n == 0:
        raise GraphError("degree profile of the empty graph is undefined")
    seq = sorted(G.degrees())
    return seq, seq[0], seq[-1]


def min_degree(G: Graph) -> int:
    return degree_profile(G)[1]


def _component_mask(G: Graph, start: int, alive: int) -> int:
    seen = 1 << start
    frontier = seen
    while frontier:
        nxt = 0
        while frontier:
            low = frontier & -frontier
            nxt |= G.masks[low.bit_length() - 1]
            frontier ^= low
        nxt &= alive & ~seen
        seen |= nxt
        frontier = nxt
    return seen


def _connected_on(G: Graph, alive: int) -> bool:
    if not alive:
        return True
    start = (alive & -alive).bit_length() - 1
    return _component_mask(G, start, alive) == alive


def is_connected(G: Graph) -> bool:
    """Connectivity; the empty graph counts as connected."""
    return _connected_on(G, (1 << G.n) - 1)


def components(G: Graph) -> list:
    """Vertex sets of the components, ordered by smallest member."""
    alive = (1 << G.n) - 1
    out = []
    while alive:
        start = (alive & -alive).bit_length() - 1
        comp = _component_mask(G, start, alive)
        out.append([v for v in range(G.n) if comp >> v & 1])
        alive &= ~comp
    return out


def cut_vertices(G: Graph) -> list:
    full = (1 << G.n) - 1
    base = len(components(G))
    out = []
    for v in range(G.n):
        rest = full & ~(1 << v)
        k = 0
        while rest:
            start = (rest & -rest).bit_length() - 1
            rest &= ~_component_mask(G, start, rest)
            k += 1
        if k > base:
            out.append(v)
    return out


def is_two_connected(G: Graph) -> bool:
    if G.n < 3 or not is_connected(G):
        return False
    full = (1 << G.n) - 1
    return all(_connected_on(G, full & ~(1 << v)) for v in range(G.n))


def has_clique(G: Graph, k: int) -> bool:
    """Whether G contains K_k (backtracking over candidate masks)."""
    if k < 1:
        raise GraphError("clique order must be positive")
    masks = G.masks

    def extend(cand: int, need: int) -> bool:
        if need == 0:
            return True
        while cand:
            if cand.bit_count() < need:
                return False
            low = cand & -cand
            v = low.bit_length() - 1
            cand ^= low
            if extend(cand & masks[v], need - 1):
                return True
        return False

    eligible = 0
    for v in range(G.n):
        if len(G.adjacency[v]) >= k - 1:
            eligible |= 1 << v
    return extend(eligible, k)


def is_complete(G: Graph) -> bool:
    return G.m == G.n * (G.n - 1) // 2


def is_regular(G: Graph) -> bool:
    return G.n == 0 or len(set(G.degrees())) == 1


def is_independent(G: Graph, S: Iterable[int]) -> bool:
    S = list(S)
    return all(not G.has_edge(u, v) for i, u in enumerate(S) for v in S[i + 1:])
