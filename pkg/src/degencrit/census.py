"""Exhaustive isomorph-free enumeration of small graphs and the verification censuses built on it."""
from __future__ import annotations

import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Iterator, List, Optional

from . import guards
from ._backend import canonical_labelling as _labelling
from .canon import canonical_form
from .classifier import (
    ClaimViolation,
    NotApplicable,
    check_decomposable_col_critical,
    classify_dcc5,
)
from .criticality import CriticalityReport, criticality_report
from .degeneracy import colouring_number, critical_subgraph_witness
from .formats import to_graph6
from .graph import (
    Graph,
    _from_masks,
    delete_vertices,
    has_clique,
    is_complete,
    is_connected,
    min_degree,
)

log = logging.getLogger(__name__)

ENUM_MAX_N = 10
ENUM_MAX_N_DENSE = 11  # when min_degree >= 4
DCC5_MAX_N = 10
COL4_MAX_N = 8
SWEEP_MAX_N = 8
RATIO_MAX_P = 8
RATIO_MAX_K = 64


@dataclass(frozen=True)
class CensusConstraints:
    n: int
    min_degree: int = 0
    max_degree: Optional[int] = None
    forbid_clique: Optional[int] = None
    require_connected: bool = True
    max_col: Optional[int] = None

    def __post_init__(self):
        if self.n < 0 or self.min_degree < 0:
            raise ValueError("n and min_degree must be non-negative")
        if self.max_degree is not None and not self.min_degree <= self.max_degree <= max(self.n - 1, 0):
            raise ValueError(f"need min_degree <= max_degree <= n-1, got {self.min_degree}, {self.max_degree}")
        if self.forbid_clique is not None and self.forbid_clique < 1:
            raise ValueError("forbid_clique must be positive")

    def level_min_degree(self, k: int) -> int:
        # deleting one vertex lowers any degree by at most one
        return max(0, self.min_degree - (self.n - k))

    def admits(self, G: Graph) -> bool:
        degs = G.degrees()
        if degs and min(degs) < self.min_degree:
            return False
        if self.max_degree is not None and degs and max(degs) > self.max_degree:
            return False
        if self.forbid_clique is not None and has_clique(G, self.forbid_clique):
            return False
        if self.max_col is not None and colouring_number(G) > self.max_col:
            return False
        return not self.require_connected or is_connected(G)


def _check_enum_guard(c: CensusConstraints) -> None:
    default = ENUM_MAX_N_DENSE if c.min_degree >= 4 else ENUM_MAX_N
    guards.check("enumerate_connected", c.n, default)


# The enumeration works on tuples of adjacency bitmasks; Graph objects are
# built only for the graphs that are emitted.


def _reach(masks, start: int, alive: int) -> int:
    seen = frontier = 1 << start
    while frontier:
        nxt = 0
        while frontier:
            low = frontier & -frontier
            nxt |= masks[low.bit_length() - 1]
            frontier ^= low
        frontier = nxt & alive & ~seen
        seen |= frontier
    return seen


def _splits(masks, n: int, v: int) -> bool:
    """Whether deleting v disconnects a connected graph."""
    rest = ((1 << n) - 1) & ~(1 << v)
    if not rest:
        return False
    return _reach(masks, (rest & -rest).bit_length() - 1, rest) != rest


def _clique_in(masks, cand: int, k: int) -> bool:
    if k == 0:
        return True
    while cand.bit_count() >= k:
        low = cand & -cand
        cand ^= low
        if _clique_in(masks, cand & masks[low.bit_length() - 1], k - 1):
            return True
    return False


def _has_core(masks, n: int, k: int) -> bool:
    """Whether some non-empty induced subgraph has minimum degree >= k."""
    alive = (1 << n) - 1
    changed = True
    while changed and alive:
        changed = False
        rest = alive
        while rest:
            low = rest & -rest
            rest ^= low
            if (masks[low.bit_length() - 1] & alive).bit_count() < k:
                alive ^= low
                changed = True
    return bool(alive)


def _is_canonical_child(masks, n: int, new: int, connected: bool):
    """Certificate of the child if ``new`` is in the orbit of its canonical
    deletion vertex, else None.

    The deletion vertex is the eligible vertex (non-cut when connected) with the
    least (degree, neighbour degree sum), ties broken by the last canonical
    position.
    """
    deg = [x.bit_count() for x in masks]

    def key(v):
        x, total = masks[v], 0
        while x:
            low = x & -x
            total += deg[low.bit_length() - 1]
            x ^= low
        return (deg[v], total)

    mine = key(new)
    cands = [new]
    for v in range(n):
        if v == new or deg[v] > mine[0]:
            continue
        kv = key(v)
        if kv > mine:
            continue
        if connected and _splits(masks, n, v):
            continue
        if kv < mine:
            return None
        cands.append(v)
    cert, order = _labelling(n, masks, None)
    if len(cands) == 1:
        return cert
    pos = {v: i for i, v in enumerate(order)}
    f = max(cands, key=pos.__getitem__)
    if f == new:
        return cert
    mark_new = [int(v == new) for v in range(n)]
    mark_f = [int(v == f) for v in range(n)]
    if _labelling(n, masks, mark_new)[0] != _labelling(n, masks, mark_f)[0]:
        return None
    return cert


def _children(masks, c: CensusConstraints) -> Iterator[tuple]:
    n = len(masks)
    need = c.level_min_degree(n + 1)
    cap = c.max_degree
    degs = [x.bit_count() for x in masks]
    required = 0
    optional = []
    for v in range(n):
        if degs[v] < need - 1:
            return
        if degs[v] < need:
            if cap is not None and degs[v] >= cap:
                return
            required |= 1 << v
        elif cap is None or degs[v] < cap:
            optional.append(v)
    bit = 1 << n
    seen = set()
    for r in range(len(optional) + 1):
        for extra in combinations(optional, r):
            S = required
            for v in extra:
                S |= 1 << v
            d = S.bit_count()
            if d < need or (cap is not None and d > cap):
                continue
            if c.require_connected and n and not S:
                continue
            if c.forbid_clique is not None and _clique_in(masks, S, c.forbid_clique - 1):
                continue
            child = tuple(x | bit if S >> v & 1 else x for v, x in enumerate(masks)) + (S,)
            if c.max_col is not None and _has_core(child, n + 1, c.max_col):
                continue
            cert = _is_canonical_child(child, n + 1, n, c.require_connected)
            if cert is None or cert in seen:
                continue
            seen.add(cert)
            yield child


def _expand(masks, c: CensusConstraints) -> Iterator[tuple]:
    if len(masks) == c.n:
        yield masks
        return
    for child in _children(masks, c):
        yield from _expand(child, c)


def _level(c: CensusConstraints, k: int) -> list:
    frontier = [(0,)]
    for _ in range(1, k):
        frontier = [ch for g in frontier for ch in _children(g, c)]
    return frontier


def _expand_root(args) -> list:
    masks, c = args
    return list(_expand(masks, c))


def enumerate_connected(constraints: CensusConstraints, workers: int = 1, split_level: int = 5) -> Iterator[Graph]:
    """One graph per isomorphism class satisfying ``constraints``.

    Graphs grow one vertex at a time, and a child is kept only when its new
    vertex is, up to automorphism, the one a canonical rule would delete. Every
    constraint is hereditary under that deletion (degree bounds relaxed by one
    per missing vertex), so it prunes whole subtrees. Output order is the
    depth-first order of the generation tree; with ``workers > 1`` the subtrees
    below ``split_level`` run in separate processes and are concatenated in
    the same order.
    """
    c = constraints
    _check_enum_guard(c)
    if c.n == 0:
        if c.admits(Graph(0, [])):
            yield Graph(0, [])
        return
    if workers <= 1 or c.n <= split_level:
        batches = [_expand((0,), c)]
    else:
        roots = _level(c, split_level)
        with ProcessPoolExecutor(max_workers=workers) as pool:
            batches = list(pool.map(_expand_root, [(r, c) for r in roots]))
    for batch in batches:
        for masks in batch:
            G = _from_masks(c.n, masks)
            if c.admits(G):
                yield G


def all_graphs(n: int, connected: bool = False) -> List[Graph]:
    return list(enumerate_connected(CensusConstraints(n=n, require_connected=connected)))


# ---------------------------------------------------------------- censuses


@dataclass
class CensusRow:
    n: int
    graphs_enumerated: int
    hits: list = field(default_factory=list)  # (canonical graph6, label string)

    def as_dict(self) -> dict:
        return {
            "n": self.n,
            "graphs_enumerated": self.graphs_enumerated,
            "hit_count": len(self.hits),
            "hits": [{"graph6": g6, "label": label} for g6, label in self.hits],
        }


def census_dcc5(n_max: int, workers: int = 1) -> List[CensusRow]:
    """Every double-col-critical graph with col 5 on 5..n_max vertices.

    Such graphs have minimum degree exactly 4, so only min-degree-4 graphs are
    enumerated. Each hit must classify to a cycle square or glued pair.
    """
    guards.check("census_dcc5", n_max, DCC5_MAX_N)
    rows = []
    for n in range(5, n_max + 1):
        row = CensusRow(n, 0)
        # a non-complete hit has no K4, and col <= 5 holds in every induced subgraph
        cons = CensusConstraints(n=n, min_degree=4, max_col=5, forbid_clique=4 if n > 5 else None)
        for G in enumerate_connected(cons, workers=workers):
            row.graphs_enumerated += 1
            if colouring_number(G) != 5:
                continue
            rep = criticality_report(G)
            if not rep.is_double_col_critical:
                continue
            label = classify_dcc5(G)
            if isinstance(label, NotApplicable):
                raise ClaimViolation(f"unclassified double-col-critical col-5 graph {to_graph6(G)}")
            row.hits.append((canonical_form(G).decode(), str(label)))
        row.hits.sort()
        log.info("dcc5 n=%d: %d graphs, %d hits", n, row.graphs_enumerated, len(row.hits))
        rows.append(row)
    return rows


def is_wheel(G: Graph) -> bool:
    if G.n < 4:
        return False
    for hub in range(G.n):
        if G.degree(hub) == G.n - 1:
            rim = delete_vertices(G, [hub])
            if is_connected(rim) and all(d == 2 for d in rim.degrees()):
                return True
    return False


@dataclass(frozen=True)
class Col4Record:
    graph6: str
    n: int
    m: int
    dcc_count: int
    is_extremal: bool
    is_wheel: bool

    def as_dict(self) -> dict:
        return dict(self.__dict__)


def census_col4_edge_bound(n_max: int, workers: int = 1) -> List[Col4Record]:
    """All 4-col-critical non-complete graphs on at most n_max vertices with their
    double-col-critical edge counts.

    Such graphs have minimum degree 3 and no K4 (a K4 would be a proper subgraph
    of the same colouring number), which bounds the enumeration.
    """
    guards.check("census_col4_edge_bound", n_max, COL4_MAX_N)
    out = []
    for n in range(5, n_max + 1):
        cons = CensusConstraints(n=n, min_degree=3, forbid_clique=4, max_col=4)
        for G in enumerate_connected(cons, workers=workers):
            if colouring_number(G) != 4 or is_complete(G):
                continue
            rep = criticality_report(G)
            if not rep.is_col_critical:
                continue
            d = rep.dcc_edge_count
            out.append(Col4Record(canonical_form(G).decode(), n, G.m, d, 2 * d == G.m, is_wheel(G)))
    out.sort(key=lambda r: (r.n, r.graph6))
    return out


def summarize_col4(records: List[Col4Record]) -> dict:
    extremal = [r for r in records if r.is_extremal]
    return {
        "graphs": len(records),
        "bound_violations": [r.graph6 for r in records if 2 * r.dcc_count > r.m],
        "extremal": [{"graph6": r.graph6, "n": r.n, "wheel": r.is_wheel} for r in extremal],
        "extremal_all_wheels": all(r.is_wheel for r in extremal),
        "min_extremal_order": min((r.n for r in extremal), default=None),
    }


# ---------------------------------------------------------------- property sweep


@dataclass(frozen=True)
class Violation:
    check: str
    graph6: str
    detail: str


def check_graph(G: Graph, report: Optional[CriticalityReport] = None) -> List[Violation]:
    """Run every structural statement about col-critical and double-col-critical
    graphs against G. ``report`` may be supplied (or forged, for negative
    controls); everything else is recomputed from G."""
    rep = report if report is not None else criticality_report(G)
    g6 = to_graph6(G) if G.n <= 62 else f"n={G.n},m={G.m}"
    out = []

    def bad(name: str, detail: str) -> None:
        out.append(Violation(name, g6, detail))

    col = rep.col
    delta = rep.min_degree
    kern = G.kernel
    edges = G.edges()

    # drop by exactly one
    for x, c in list(enumerate(kern.vertex_deletion_cols())) + list(zip(edges, kern.edge_deletion_cols(edges))):
        if c > col or c < col - 1:
            bad("drop-by-one", f"deleting {x} gives col {c} from {col}")

    if G.n:
        if (rep.is_col_critical or rep.is_col_vertex_critical) and col != delta + 1:
            bad("critical-min-degree", f"critical but col={col}, delta={delta}")
        F, labels = critical_subgraph_witness(G)
        Fc = colouring_number(F)
        Fr = criticality_report(F)
        if not (Fc == col == min_degree(F) + 1 and Fr.is_col_critical):
            bad("critical-subgraph", f"witness has col {Fc}, delta {min_degree(F)}, critical={Fr.is_col_critical}")
        if any(not G.has_edge(labels[e.u], labels[e.v]) for e in F.edges()):
            bad("critical-subgraph", "witness is not a subgraph")

    dcc_set = set(rep.dcc_edges)
    if rep.is_double_col_critical:
        if not rep.is_col_vertex_critical:
            bad("dcc-vertex-critical", "double-col-critical but not col-vertex-critical")
        if col <= 4 and not is_complete(G):
            bad("dcc-small-col-clique", f"double-col-critical with col {col} but not complete")
        if G.n and delta != col - 1:
            bad("dcc-min-degree", f"delta={delta}, col={col}")
        # K2 is the one exception: G - u - v is empty there
        for e in edges if G.n >= 3 else ():
            common = G.masks[e.u] & G.masks[e.v]
            if not any(common >> w & 1 and G.degree(w) == delta for w in range(G.n)):
                bad("dcc-common-neighbour", f"edge {e} has no common neighbour of degree {delta}")
        if not is_complete(G) and col >= 2 and has_clique(G, col - 1):
            bad("dcc-no-large-clique", f"non-complete but contains K{col - 1}")
        if col >= 3 and not rep.is_two_connected:
            bad("dcc-two-connected", "double-col-critical with col >= 3 but not 2-connected")
        if col == 5:
            if delta != 4:
                bad("dcc5-a-min-degree-4", f"delta={delta}")
            for e in edges:
                if G.degree(e.u) != 4 and G.degree(e.v) != 4:
                    bad("dcc5-degree-4-endpoint", f"edge {e} has endpoint degrees {G.degree(e.u)}, {G.degree(e.v)}")
                common = G.masks[e.u] & G.masks[e.v]
                if not any(common >> w & 1 and G.degree(w) == 4 for w in range(G.n)):
                    bad("dcc5-c-common-4-neighbour", f"edge {e}")
                if kern.colouring_number(removed=(e.u, e.v)) > 3:
                    bad("dcc5-d-no-min-degree-3", f"G - {e.u} - {e.v} has an induced subgraph of min degree >= 3")
            if G.n <= guards.CANON_CAP and isinstance(classify_dcc5(G), NotApplicable):
                bad("dcc5-classified", "no class label")
    if rep.is_col_critical and col == 4 and not is_complete(G):
        for e, f in combinations(sorted(dcc_set), 2):
            if not set(e) & set(f):
                bad("col4-dcc-incident", f"double-col-critical edges {e} and {f} are disjoint")
        if 2 * len(dcc_set) > G.m:
            bad("col4-half-bound", f"{len(dcc_set)} of {G.m} edges double-col-critical")
    return out


@dataclass
class SweepReport:
    n_max: int
    graphs_checked: int = 0
    families_checked: int = 0
    violations: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def as_dict(self) -> dict:
        return {
            "n_max": self.n_max,
            "graphs_checked": self.graphs_checked,
            "families_checked": self.families_checked,
            "violations": [v.__dict__ for v in self.violations],
        }


def family_corpus() -> list:
    from . import families as fam

    out = [("K%d" % n, fam.complete(n)) for n in range(1, 8)]
    out += [("C%d" % n, fam.cycle(n)) for n in range(3, 10)]
    out += [("C%d^2" % n, fam.cycle_square(n)) for n in range(5, 13)]
    out += [("W%d" % n, fam.wheel(n)) for n in range(3, 10)]
    for a in fam.BrickKind:
        out.append((f"brick-{a.value}", fam.brick(a)))
    for a, b in (("k5", "k5"), ("k5", "k222"), ("k222", "k222")):
        out.append((f"glued-{a}-{b}", fam.glued_pair(fam.BrickKind(a), fam.BrickKind(b))))
    out += [("F%d" % k, fam.f_graph(k)) for k in range(4, 11)]
    out.append(("icosahedron", fam.icosahedron()))
    out.append(("torus-4x4", fam.toroidal_triangulated(4, 4)))
    out.append(("petersen", fam.petersen()))
    out += [("G_%d" % t, fam.complete_join(fam.cycle_square(6), fam.complete(t))) for t in range(1, 4)]
    out.append(("ratio-6-8", fam.ratio_family(6, 8)))
    return out


def property_sweep(n_max: int, include_families: bool = True) -> SweepReport:
    """Check every structural statement over all connected graphs on at most n_max vertices."""
    guards.check("property_sweep", n_max, SWEEP_MAX_N)
    rep = SweepReport(n_max)
    for n in range(1, n_max + 1):
        for G in enumerate_connected(CensusConstraints(n=n)):
            rep.graphs_checked += 1
            rep.violations.extend(check_graph(G))
    if include_families:
        for _, G in family_corpus():
            rep.families_checked += 1
            rep.violations.extend(check_graph(G))
    return rep


# ---------------------------------------------------------------- ratio threshold


@dataclass(frozen=True)
class RatioThreshold:
    p: int
    epsilon: Fraction
    k: Optional[int]
    dcc_count: Optional[int] = None
    m: Optional[int] = None
    col_critical: Optional[bool] = None
    join_verdict: Optional[str] = None

    @property
    def ratio(self) -> Optional[Fraction]:
        return None if self.k is None else Fraction(self.dcc_count, self.m)

    def as_dict(self) -> dict:
        r = self.ratio
        return {
            "p": self.p,
            "epsilon": str(self.epsilon),
            "k": self.k,
            "dcc_count": self.dcc_count,
            "m": self.m,
            "ratio": None if r is None else f"{r.numerator}/{r.denominator}",
            "col_critical": self.col_critical,
            "join_verdict": self.join_verdict,
            "cap_exceeded": self.k is None,
        }


def find_ratio_threshold(p: int, epsilon, k_max: int = RATIO_MAX_K) -> RatioThreshold:
    """Least k for which F_k + (p-5 independent vertices) has more than a 1 - epsilon
    fraction of double-col-critical edges. The witness is also checked to be
    p-col-critical, directly and through the join criterion."""
    from .families import ratio_family

    epsilon = Fraction(epsilon)
    if not 5 <= p <= RATIO_MAX_P:
        raise guards.GuardError(f"find_ratio_threshold: p must be in [5, {RATIO_MAX_P}], got {p}")
    if epsilon <= 0:
        raise ValueError("epsilon must be positive")
    for k in range(4, min(k_max, RATIO_MAX_K) + 1):
        G = ratio_family(p, k)
        rep = criticality_report(G)
        ratio = rep.dcc_ratio
        if ratio <= 1 - epsilon:
            continue
        if ratio >= 1:
            raise ClaimViolation(f"ratio family p={p}, k={k} is fully double-col-critical")
        if rep.col != p or not rep.is_col_critical:
            raise ClaimViolation(f"ratio family p={p}, k={k} has col {rep.col}, critical={rep.is_col_critical}")
        verdict = None
        if p > 5:
            verdict = check_decomposable_col_critical(G, range(2 * k), range(2 * k, G.n)).verdict
        return RatioThreshold(p, epsilon, k, rep.dcc_edge_count, rep.m, rep.is_col_critical, verdict)
    return RatioThreshold(p, epsilon, None)

