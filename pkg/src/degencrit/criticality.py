"""col-critical, col-vertex-critical and double-col-critical predicates."""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .degeneracy import colouring_number
from .graph import Graph, is_connected, is_two_connected


def is_col_vertex_critical(G: Graph) -> bool:
    col = colouring_number(G)
    return all(c < col for c in G.kernel.vertex_deletion_cols())


def is_col_critical(G: Graph) -> bool:
    # col is monotone, so every proper subgraph sits inside some G - e or G - v
    col = colouring_number(G)
    k = G.kernel
    return all(c < col for c in k.vertex_deletion_cols()) and all(
        c < col for c in k.edge_deletion_cols(G.edges())
    )


def double_col_critical_edges(G: Graph) -> list:
    """Edges uv with col(G - u - v) <= col(G) - 2, in lexicographic order."""
    col = colouring_number(G)
    edges = G.edges()
    return [e for e, c in zip(edges, G.kernel.endpoint_deletion_cols(edges)) if c <= col - 2]


def is_double_col_critical(G: Graph) -> bool:
    return is_connected(G) and len(double_col_critical_edges(G)) == G.m


@dataclass(frozen=True)
class CriticalityReport:
    n: int
    m: int
    col: int
    min_degree: Optional[int]
    max_degree: Optional[int]
    is_col_critical: bool
    is_col_vertex_critical: bool
    dcc_edges: tuple = field(repr=False)
    is_double_col_critical: bool = False
    is_two_connected: bool = False

    @property
    def edge_count(self) -> int:
        return self.m

    @property
    def dcc_edge_count(self) -> int:
        return len(self.dcc_edges)

    @property
    def dcc_ratio(self) -> Optional[Fraction]:
        """Fraction of double-col-critical edges; None for edgeless graphs."""
        return Fraction(len(self.dcc_edges), self.m) if self.m else None

    def as_dict(self) -> dict:
        ratio = self.dcc_ratio
        return {
            "n": self.n,
            "m": self.m,
            "col": self.col,
            "delta": self.min_degree,
            "Delta": self.max_degree,
            "col_critical": self.is_col_critical,
            "col_vertex_critical": self.is_col_vertex_critical,
            "double_col_critical": self.is_double_col_critical,
            "dcc_edges": [str(e) for e in self.dcc_edges],
            "dcc_count": len(self.dcc_edges),
            "dcc_ratio": None if ratio is None else f"{ratio.numerator}/{ratio.denominator}",
            "two_connected": self.is_two_connected,
        }


def criticality_report(G: Graph) -> CriticalityReport:
    k = G.kernel
    col = colouring_number(G)
    edges = G.edges()
    vcols = k.vertex_deletion_cols()
    vertex_critical = all(c < col for c in vcols)
    critical = vertex_critical and all(c < col for c in k.edge_deletion_cols(edges))
    dcc = tuple(e for e, c in zip(edges, k.endpoint_deletion_cols(edges)) if c <= col - 2)
    degs = G.degrees()
    return CriticalityReport(
        n=G.n,
        m=G.m,
        col=col,
        min_degree=min(degs) if degs else None,
        max_degree=max(degs) if degs else None,
        is_col_critical=critical,
        is_col_vertex_critical=vertex_critical,
        dcc_edges=dcc,
        is_double_col_critical=is_connected(G) and len(dcc) == G.m,
        is_two_connected=is_two_connected(G),
    )
