"""Canonical forms and isomorphism for small graphs.

The canonical labelling is the maximum adjacency certificate over the leaves
of an individualisation-refinement tree (equitable partitions, twin pruning).
"""
from __future__ import annotations

from typing import Optional, Sequence

from . import guards
from ._backend import canonical_labelling as _labelling
from .formats import to_graph6
from .graph import Graph, GraphError, relabel

CanonicalForm = bytes


def canonical_order(G: Graph, colours: Optional[Sequence[int]] = None) -> list:
    """Vertices of G listed in canonical position order."""
    if G.n > guards.CANON_CAP:
        raise GraphError(f"canonicalisation is capped at n <= {guards.CANON_CAP}, got n={G.n}")
    return _labelling(G.n, G.masks, colours)[1]


def canonical_graph(G: Graph, colours: Optional[Sequence[int]] = None) -> Graph:
    order = canonical_order(G, colours)
    perm = [0] * G.n
    for i, v in enumerate(order):
        perm[v] = i
    return relabel(G, perm)


def canonical_form(G: Graph, colours: Optional[Sequence[int]] = None) -> CanonicalForm:
    form = to_graph6(canonical_graph(G, colours)).encode("ascii")
    if colours is not None:
        form += b"|" + ",".join(str(c) for c in sorted(colours)).encode("ascii")
    return form


def are_isomorphic(G: Graph, H: Graph) -> bool:
    if G.n != H.n or G.m != H.m or sorted(G.degrees()) != sorted(H.degrees()):
        return False
    return canonical_form(G) == canonical_form(H)
