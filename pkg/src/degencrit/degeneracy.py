"""Colouring number (degeneracy + 1) by smallest-last elimination, with brute-force oracles."""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Sequence

from . import guards
from .graph import Graph, GraphError, delete_edge, delete_vertices, induced_subgraph, min_degree

BRUTE_FORCE_MAX_N = 9
SUBSET_SWEEP_MAX_N = 7


@dataclass(frozen=True)
class DegeneracyCertificate:
    """Smallest-last elimination: ``order[i]`` is removed at step ``i`` having
    ``removal_degree[i]`` neighbours among the vertices not yet removed."""

    order: tuple
    removal_degree: tuple
    col: int

    def colouring_order(self) -> list:
        """The reverse of the removal order; greedy colouring along it uses at most ``col`` colours."""
        return list(reversed(self.order))

    def replay(self, G: Graph) -> bool:
        """Recompute removal degrees from scratch and compare with the certificate."""
        if sorted(self.order) != list(range(G.n)):
            return False
        remaining = (1 << G.n) - 1
        for v, d in zip(self.order, self.removal_degree):
            remaining &= ~(1 << v)
            if (G.masks[v] & remaining).bit_count() != d:
                return False
        expected = 1 + max(self.removal_degree) if G.n else 0
        return self.col == expected


def degeneracy_ordering(G: Graph) -> DegeneracyCertificate:
    """Smallest-last order from a bucket queue; ties go to the lowest vertex index.

    Buckets are vertex bitmasks indexed by current degree, so popping the lowest
    index is a lowest-set-bit extraction and each decrement moves one bit.
    """
    n = G.n
    masks = G.masks
    deg = [len(r) for r in G.adjacency]
    buckets = [0] * (n + 1)
    for v in range(n):
        buckets[deg[v]] |= 1 << v
    remaining = (1 << n) - 1
    order, removal = [], []
    d = 0
    while remaining:
        while not buckets[d]:
            d += 1
        low = buckets[d] & -buckets[d]
        v = low.bit_length() - 1
        buckets[d] ^= low
        remaining ^= low
        order.append(v)
        removal.append(d)
        nb = masks[v] & remaining
        while nb:
            wbit = nb & -nb
            w = wbit.bit_length() - 1
            buckets[deg[w]] ^= wbit
            deg[w] -= 1
            buckets[deg[w]] |= wbit
            nb ^= wbit
        if d:
            d -= 1
    col = 1 + max(removal) if n else 0
    return DegeneracyCertificate(tuple(order), tuple(removal), col)


def colouring_number(G: Graph) -> int:
    return G.kernel.colouring_number()


def degeneracy(G: Graph) -> int:
    """Largest k such that G has an induced subgraph of minimum degree k; -1 for K0."""
    return colouring_number(G) - 1


def colouring_number_bruteforce(G: Graph) -> int:
    """Minimum over all vertex orderings of the largest back-degree, plus one.

    Depth-first over ordering prefixes. A branch is cut when its running maximum
    already reaches the best complete ordering, or when the same prefix set was
    reached before with a running maximum no larger.
    """
    guards.check("colouring_number_bruteforce", G.n, BRUTE_FORCE_MAX_N)
    if G.n == 0:
        return 0
    masks = G.masks
    full = (1 << G.n) - 1
    best = G.n
    seen = {}

    def extend(prefix: int, cur: int) -> None:
        nonlocal best
        if cur >= best:
            return
        if prefix == full:
            best = cur
            return
        if seen.get(prefix, G.n + 1) <= cur:
            return
        seen[prefix] = cur
        rest = full & ~prefix
        while rest:
            low = rest & -rest
            v = low.bit_length() - 1
            rest ^= low
            back = (masks[v] & prefix).bit_count()
            extend(prefix | low, cur if cur > back else back)

    extend(0, 0)
    return best + 1


def colouring_number_subsets(G: Graph) -> int:
    """One plus the largest minimum degree over all non-empty induced subgraphs."""
    guards.check("colouring_number_subsets", G.n, SUBSET_SWEEP_MAX_N)
    if G.n == 0:
        return 0
    best = 0
    for size in range(1, G.n + 1):
        for S in combinations(range(G.n), size):
            best = max(best, min_degree(induced_subgraph(G, S)))
    return best + 1


def max_min_degree_witness(G: Graph) -> tuple:
    """``(k, S)`` with ``k = col(G) - 1`` and ``G[S]`` of minimum degree ``k``.

    S is the set still present when the smallest-last elimination first removes
    a vertex of degree k.
    """
    if G.n == 0:
        raise GraphError("the empty graph has no witness")
    cert = degeneracy_ordering(G)
    k = cert.col - 1
    i = cert.removal_degree.index(k)
    return k, sorted(cert.order[i:])


def critical_subgraph_witness(G: Graph) -> tuple:
    """``(F, labels)``: a col-critical subgraph F of G with col(F) = col(G);
    vertex ``i`` of F is vertex ``labels[i]`` of G."""
    if G.n == 0:
        raise GraphError("the empty graph has no col-critical subgraph")
    target = colouring_number(G)
    _, labels = max_min_degree_witness(G)
    F = induced_subgraph(G, labels)
    changed = True
    while changed:
        changed = False
        i = 0
        while i < F.n:
            if F.n > 1 and F.kernel.colouring_number(removed=(i,)) == target:
                F = delete_vertices(F, [i])
                labels = labels[:i] + labels[i + 1:]
                changed = True
            else:
                i += 1
        for e in F.edges():
            if F.kernel.colouring_number(skip_edge=e) == target:
                F = delete_edge(F, e.u, e.v)
                changed = True
    return F, labels


def col_critical_subgraph(G: Graph) -> Graph:
    return critical_subgraph_witness(G)[0]


def greedy_colour_along(G: Graph, order: Sequence[int]) -> list:
    """Colour vertices in ``order`` with the least positive colour unused by earlier neighbours.

    Returns ``colour[v]`` for each vertex ``v``.
    """
    if sorted(order) != list(range(G.n)):
        raise GraphError("order is not a permutation of the vertices")
    colour = [0] * G.n
    for v in order:
        used = {colour[w] for w in G.adjacency[v]}
        c = 1
        while c in used:
            c += 1
        colour[v] = c
    return colour
