"""Pure-Python hot kernels.

Mirrors ``_ckernels`` exactly: same inputs, same outputs, same tie-breaking,
so canonical forms computed by either backend are interchangeable.
"""
from __future__ import annotations

from typing import Optional, Sequence

BACKEND = "python"
CANON_MAXN = 16


def _degeneracy(masks: Sequence[int], alive: int) -> int:
    """Largest removal degree of a smallest-last elimination of ``alive``; -1 if empty."""
    deg = {}
    top = 0
    buckets = [0] * (len(masks) + 1)
    rest = alive
    while rest:
        low = rest & -rest
        v = low.bit_length() - 1
        d = (masks[v] & alive).bit_count()
        deg[v] = d
        buckets[d] |= low
        if d > top:
            top = d
        rest ^= low
    best = -1
    d = 0
    remaining = alive
    while remaining:
        while not buckets[d]:
            d += 1
        low = buckets[d] & -buckets[d]
        v = low.bit_length() - 1
        buckets[d] ^= low
        remaining ^= low
        if d > best:
            best = d
        nb = masks[v] & remaining
        while nb:
            wbit = nb & -nb
            w = wbit.bit_length() - 1
            dw = deg[w]
            buckets[dw] ^= wbit
            buckets[dw - 1] |= wbit
            deg[w] = dw - 1
            nb ^= wbit
        if d > 0:
            d -= 1
    return best


class KernelGraph:
    """Colouring-number kernels over one fixed graph."""

    __slots__ = ("n", "masks", "full")

    def __init__(self, n: int, adjacency: Sequence[Sequence[int]]):
        self.n = n
        masks = []
        for nbrs in adjacency:
            x = 0
            for w in nbrs:
                x |= 1 << w
            masks.append(x)
        self.masks = masks
        self.full = (1 << n) - 1

    def colouring_number(self, removed: Sequence[int] = (), skip_edge: Optional[tuple] = None) -> int:
        alive = self.full
        for v in removed:
            alive &= ~(1 << v)
        masks = self.masks
        if skip_edge is not None:
            u, v = skip_edge
            masks = list(masks)
            masks[u] &= ~(1 << v)
            masks[v] &= ~(1 << u)
        return _degeneracy(masks, alive) + 1

    def vertex_deletion_cols(self) -> list:
        full, masks = self.full, self.masks
        return [_degeneracy(masks, full & ~(1 << v)) + 1 for v in range(self.n)]

    def edge_deletion_cols(self, edges: Sequence[tuple]) -> list:
        out = []
        masks = list(self.masks)
        for u, v in edges:
            mu, mv = masks[u], masks[v]
            masks[u] = mu & ~(1 << v)
            masks[v] = mv & ~(1 << u)
            out.append(_degeneracy(masks, self.full) + 1)
            masks[u], masks[v] = mu, mv
        return out

    def endpoint_deletion_cols(self, edges: Sequence[tuple]) -> list:
        full, masks = self.full, self.masks
        return [_degeneracy(masks, full & ~((1 << u) | (1 << v))) + 1 for u, v in edges]


def _refine(rows: Sequence[int], cells: list) -> list:
    while True:
        cmasks = []
        for c in cells:
            x = 0
            for v in c:
                x |= 1 << v
            cmasks.append(x)
        new = []
        for c in cells:
            if len(c) == 1:
                new.append(c)
                continue
            sig = {v: tuple((rows[v] & cm).bit_count() for cm in cmasks) for v in c}
            ordered = sorted(c, key=lambda v: (sig[v], v))
            frag = [ordered[0]]
            for v in ordered[1:]:
                if sig[v] != sig[frag[-1]]:
                    new.append(frag)
                    frag = [v]
                else:
                    frag.append(v)
            new.append(frag)
        if len(new) == len(cells):
            return new
        cells = new


def _search(rows: Sequence[int], cells: list, best: list) -> None:
    for t, cell in enumerate(cells):
        if len(cell) > 1:
            break
    else:
        order = [c[0] for c in cells]
        pos = [0] * len(rows)
        for i, v in enumerate(order):
            pos[v] = i
        cert = []
        for v in order:
            r = rows[v]
            code = 0
            while r:
                low = r & -r
                code |= 1 << pos[low.bit_length() - 1]
                r ^= low
            cert.append(code)
        cert = tuple(cert)
        if best[0] is None or cert > best[0]:
            best[0] = cert
            best[1] = order
        return
    tried = []
    for v in cell:
        # swapping twins is an automorphism fixing this node, so their subtrees coincide
        if any((rows[v] & ~(1 << u)) == (rows[u] & ~(1 << v)) for u in tried):
            continue
        tried.append(v)
        rest = [x for x in cell if x != v]
        _search(rows, _refine(rows, cells[:t] + [[v], rest] + cells[t + 1:]), best)


def canonical_labelling(n: int, rows: Sequence[int], colours: Optional[Sequence[int]] = None):
    """Return ``(certificate, order)`` for the (vertex-coloured) graph.

    ``order[i]`` is the vertex placed at canonical position ``i`` and
    ``certificate[i]`` is its neighbourhood as a bitmask over canonical positions.
    """
    if n > CANON_MAXN:
        raise ValueError(f"canonical labelling supports at most {CANON_MAXN} vertices, got {n}")
    if n == 0:
        return (), []
    if colours is None:
        cells = [list(range(n))]
    else:
        cells = [[v for v in range(n) if colours[v] == c] for c in sorted(set(colours))]
    best = [None, None]
    _search(rows, _refine(rows, cells), best)
    return best[0], best[1]
