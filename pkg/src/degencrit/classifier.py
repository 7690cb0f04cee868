"""Classification of double-col-critical graphs with colouring number 5, and complete-join results."""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Optional, Union

from . import guards
from .canon import canonical_form
from .criticality import is_col_critical, is_double_col_critical
from .degeneracy import col_critical_subgraph, colouring_number
from .families import BrickKind, cycle_square, glued_pair
from .graph import (
    Graph,
    GraphError,
    complete_join,
    components,
    degree_profile,
    induced_subgraph,
    is_independent,
    is_regular,
    min_degree,
)

GLUED_KINDS = (
    (BrickKind.K5_NABLA, BrickKind.K5_NABLA),
    (BrickKind.K5_NABLA, BrickKind.K222_NABLA),
    (BrickKind.K222_NABLA, BrickKind.K222_NABLA),
)


class ClaimViolation(RuntimeError):
    """A graph contradicts a proved statement the code relies on."""


class PreconditionError(ValueError):
    pass


@dataclass(frozen=True)
class CycleSquare:
    n: int

    @property
    def is_complete(self) -> bool:
        # C5 squared is K5; reported as a cycle square by convention
        return self.n == 5

    def __str__(self) -> str:
        return f"CycleSquare({self.n})"


@dataclass(frozen=True)
class GluedBricks:
    a: BrickKind
    b: BrickKind

    def __str__(self) -> str:
        return f"GluedBricks({self.a.value},{self.b.value})"


@dataclass(frozen=True)
class NotApplicable:
    reason: str

    def __str__(self) -> str:
        return f"NotApplicable({self.reason})"


ClassLabel = Union[CycleSquare, GluedBricks, NotApplicable]


def reference_graph(label: ClassLabel) -> Graph:
    if isinstance(label, CycleSquare):
        return cycle_square(label.n)
    if isinstance(label, GluedBricks):
        return glued_pair(label.a, label.b)
    raise GraphError(f"{label} has no reference construction")


@lru_cache(maxsize=None)
def _reference_forms(n: int) -> tuple:
    refs = []
    if 5 <= n <= guards.CANON_CAP:
        refs.append((CycleSquare(n), canonical_form(cycle_square(n))))
    for a, b in GLUED_KINDS:
        g = glued_pair(a, b)
        if g.n == n:
            refs.append((GluedBricks(a, b), canonical_form(g)))
    return tuple(refs)


def classify_dcc5(G: Graph) -> ClassLabel:
    """Match G against the finite menu of double-col-critical graphs with col 5 on n(G) vertices."""
    if G.n > guards.CANON_CAP:
        raise guards.GuardError(f"classify_dcc5: n={G.n} exceeds the canonicalisation cap {guards.CANON_CAP}")
    col = colouring_number(G)
    if col != 5:
        return NotApplicable(f"colouring number {col}, not 5")
    if not is_double_col_critical(G):
        return NotApplicable("not double-col-critical")
    form = canonical_form(G)
    hits = [label for label, ref in _reference_forms(G.n) if ref == form]
    if len(hits) != 1:
        raise ClaimViolation(f"double-col-critical graph with col 5 matched {len(hits)} references: {form!r}")
    return hits[0]


@dataclass(frozen=True)
class JoinColBounds:
    """Bounds on col(G1 + G2).

    ``lower`` uses the col-critical subgraphs found by ``col_critical_subgraph``
    as the minimum-degree witnesses; they are minimal, not necessarily of
    minimum order, so the bound is valid but may not be the best available.
    """

    lower: int
    upper: int
    exact: Optional[int] = None


def join_col_bounds(G1: Graph, G2: Graph) -> JoinColBounds:
    if G1.n == 0 or G2.n == 0:
        raise GraphError("join bounds need two non-empty graphs")
    c1, c2 = colouring_number(G1), colouring_number(G2)
    J1, J2 = col_critical_subgraph(G1), col_critical_subgraph(G2)
    upper = min(c1 + G2.n, c2 + G1.n)
    lower = min(c1 + J2.n, c2 + J1.n)
    exact = upper if c1 == min_degree(G1) + 1 and c2 == min_degree(G2) + 1 else None
    return JoinColBounds(lower, upper, exact)


@dataclass(frozen=True)
class DecompositionCheck:
    verdict: str  # "matches_i", "matches_ii" or "no_match"
    conditions: tuple  # every condition that holds, subset of ("i", "ii")
    predicted_col: Optional[int]
    col: int
    col_critical: bool


def check_decomposable_col_critical(G: Graph, V1: Iterable[int], V2: Iterable[int]) -> DecompositionCheck:
    """Evaluate both join conditions for criticality on the split G = G[V1] + G[V2].

    When either holds, G must be col-critical with col = delta(G1) + n(G2) + 1;
    a disagreement raises ClaimViolation.
    """
    V1, V2 = sorted(set(V1)), sorted(set(V2))
    if not V1 or not V2 or set(V1) & set(V2) or sorted(V1 + V2) != list(range(G.n)):
        raise GraphError("V1, V2 must partition the vertex set into two non-empty parts")
    if any(not G.has_edge(u, v) for u in V1 for v in V2):
        raise GraphError("not a complete join: some V1-V2 pair is non-adjacent")
    G1, G2 = induced_subgraph(G, V1), induced_subgraph(G, V2)
    if not is_regular(G1):
        raise GraphError("G[V1] must be regular")
    d1 = min_degree(G1)
    _, d2, _ = degree_profile(G2)
    n1, n2 = G1.n, G2.n

    conditions = []
    non_min = [v for v in range(n2) if G2.degree(v) != d2]
    if is_independent(G2, non_min) and d1 + n2 == d2 + n1:
        conditions.append("i")
    smallest = min(len(c) for c in components(G1))
    if G2.m == 0 and n1 - d1 - smallest < n2 < n1 - d1:
        conditions.append("ii")

    col = colouring_number(G)
    critical = is_col_critical(G)
    predicted = d1 + n2 + 1 if conditions else None
    if conditions and (col != predicted or not critical):
        raise ClaimViolation(
            f"conditions {conditions} hold but col={col} (predicted {predicted}), col_critical={critical}"
        )
    verdict = f"matches_{conditions[0]}" if conditions else "no_match"
    return DecompositionCheck(verdict, tuple(conditions), predicted, col, critical)


def verify_join_double_col_critical(G1: Graph, G2: Graph) -> bool:
    """Whether G1 + G2 is double-col-critical with col = min(col1 + n2, col2 + n1)."""
    bad = [name for name, g in (("G1", G1), ("G2", G2)) if not is_double_col_critical(g)]
    if bad:
        raise PreconditionError(f"{' and '.join(bad)} not double-col-critical")
    J = complete_join(G1, G2)
    expected = min(colouring_number(G1) + G2.n, colouring_number(G2) + G1.n)
    return colouring_number(J) == expected and is_double_col_critical(J)
