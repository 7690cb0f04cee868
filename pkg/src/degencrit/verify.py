"""Verification suites shared by the CLI and the acceptance tests.

Each suite returns a SuiteResult; ``passed`` is False on any violation.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import combinations_with_replacement

from . import families as fam
from .canon import are_isomorphic, canonical_form
from .census import (
    CensusConstraints,
    census_col4_edge_bound,
    census_dcc5,
    check_graph,
    enumerate_connected,
    property_sweep,
    summarize_col4,
)
from .classifier import (
    GLUED_KINDS,
    CycleSquare,
    GluedBricks,
    PreconditionError,
    join_col_bounds,
    verify_join_double_col_critical,
)
from .criticality import criticality_report, is_double_col_critical
from .degeneracy import colouring_number, colouring_number_bruteforce, colouring_number_subsets
from .formats import to_graph6
from .graph import Graph, complete_join, degree_profile, delete_edge, is_complete

SUITES = ("observations", "joins", "theorem28", "prop33", "families")


@dataclass
class SuiteResult:
    name: str
    passed: bool = True
    details: dict = field(default_factory=dict)
    failures: list = field(default_factory=list)

    def fail(self, msg: str) -> None:
        self.passed = False
        self.failures.append(msg)

    def as_dict(self) -> dict:
        return {"suite": self.name, "passed": self.passed, "details": self.details, "failures": self.failures}


# ---------------------------------------------------------------- observations


def spoke_mutant():
    """W5 minus one spoke, with a report that falsely claims double-col-criticality."""
    G = delete_edge(fam.wheel(5), 0, 5)
    honest = criticality_report(G)
    forged = type(honest)(**{**honest.__dict__, "dcc_edges": tuple(G.edges()), "is_double_col_critical": True})
    return G, forged


def small_col_rigidity(n_max: int) -> list:
    """Connected graphs on at most n_max vertices that are double-col-critical with col <= 4 but not complete."""
    bad = []
    for n in range(1, n_max + 1):
        for G in enumerate_connected(CensusConstraints(n=n)):
            if colouring_number(G) <= 4 and is_double_col_critical(G) and not is_complete(G):
                bad.append(to_graph6(G))
    return bad


def suite_observations(n_max: int = 7) -> SuiteResult:
    res = SuiteResult("observations")
    rep = property_sweep(n_max)
    res.details.update(graphs_checked=rep.graphs_checked, families_checked=rep.families_checked)
    for v in rep.violations:
        res.fail(f"{v.check} on {v.graph6}: {v.detail}")
    G, forged = spoke_mutant()
    caught = check_graph(G, forged)
    res.details["mutant_caught"] = sorted({v.check for v in caught})
    if not caught:
        res.fail("forged spoke-deleted wheel was not caught")
    rigid = small_col_rigidity(n_max)
    res.details["small_col_exceptions"] = rigid
    if rigid:
        res.fail(f"non-complete double-col-critical graphs with col <= 4: {rigid}")
    return res


# ---------------------------------------------------------------- joins


def join_corpus() -> list:
    out = [(f"K{n}", fam.complete(n)) for n in range(1, 6)]
    out += [(f"C{n}^2", fam.cycle_square(n)) for n in range(5, 10)]
    out += [(f"glued-{a.value}-{b.value}", fam.glued_pair(a, b)) for a, b in GLUED_KINDS]
    out.append(("icosahedron", fam.icosahedron()))
    return out


def join_pairs(count: int = 50, seed: int = 0) -> list:
    corpus = join_corpus()
    pairs = list(combinations_with_replacement(range(len(corpus)), 2))
    chosen = sorted(random.Random(seed).sample(pairs, count))
    return [(corpus[i], corpus[j]) for i, j in chosen]


def join_sandwich_failures(graphs: list) -> tuple:
    """Check lower <= col(G1 + G2) <= upper (and exactness) for every ordered pair; returns (pairs, failures)."""
    failures = []
    count = 0
    for G1 in graphs:
        for G2 in graphs:
            count += 1
            b = join_col_bounds(G1, G2)
            col = colouring_number(complete_join(G1, G2))
            if not b.lower <= col <= b.upper or (b.exact is not None and col != b.exact):
                failures.append(f"{to_graph6(G1)} + {to_graph6(G2)}: col {col}, bounds {b}")
    return count, failures


def suite_joins(n_max: int = 5, pair_count: int = 50, seed: int = 0) -> SuiteResult:
    res = SuiteResult("joins")
    small = [G for n in range(1, n_max + 1) for G in enumerate_connected(CensusConstraints(n=n, require_connected=False))]
    count, failures = join_sandwich_failures(small)
    res.details["sandwich_pairs"] = count
    for f in failures:
        res.fail(f"bounds: {f}")

    checked = 0
    for (na, A), (nb, B) in join_pairs(pair_count, seed):
        checked += 1
        if not verify_join_double_col_critical(A, B):
            res.fail(f"join {na} + {nb} is not double-col-critical with the predicted col")
    res.details["double_critical_join_pairs"] = checked

    # the converse fails: C6^2 is a join of two factors that are not double-col-critical
    C4, K2bar = fam.cycle(4), fam.edgeless(2)
    witness = complete_join(C4, K2bar)
    ok = (
        are_isomorphic(witness, fam.cycle_square(6))
        and is_double_col_critical(witness)
        and not is_double_col_critical(C4)
        and not is_double_col_critical(K2bar)
    )
    try:
        verify_join_double_col_critical(C4, K2bar)
        ok = False
    except PreconditionError:
        pass
    res.details["non_converse_witness"] = ok
    if not ok:
        res.fail("C6^2 = C4 + complement(K2) witness does not behave as expected")
    return res


# ---------------------------------------------------------------- theorem 2.8


def expected_dcc5(n: int) -> list:
    out = [(canonical_form(fam.cycle_square(n)).decode(), str(CycleSquare(n)))]
    for a, b in GLUED_KINDS:
        g = fam.glued_pair(a, b)
        if g.n == n:
            out.append((canonical_form(g).decode(), str(GluedBricks(a, b))))
    return sorted(out)


def suite_theorem28(n_max: int = 9) -> SuiteResult:
    res = SuiteResult("theorem28")
    rows = census_dcc5(n_max)
    res.details["rows"] = [r.as_dict() for r in rows]
    res.details["hit_counts"] = [len(r.hits) for r in rows]
    for r in rows:
        if r.hits != expected_dcc5(r.n):
            res.fail(f"n={r.n}: hits {r.hits} differ from {expected_dcc5(r.n)}")
    return res


# ---------------------------------------------------------------- prop 3.3


def suite_prop33(n_max: int = 8) -> SuiteResult:
    res = SuiteResult("prop33")
    records = census_col4_edge_bound(n_max)
    summary = summarize_col4(records)
    res.details.update(summary)
    if summary["bound_violations"]:
        res.fail(f"more than m/2 double-col-critical edges: {summary['bound_violations']}")
    if not summary["extremal_all_wheels"]:
        res.fail("an extremal graph is not a wheel")
    # which wheels attain the bound, independent of the census
    res.details["wheels_attaining_bound"] = [
        k for k in range(3, 12) if is_wheel_extremal(k)
    ]
    return res


def is_wheel_extremal(k: int) -> bool:
    rep = criticality_report(fam.wheel(k))
    return rep.col == 4 and not is_complete(fam.wheel(k)) and rep.is_col_critical and 2 * rep.dcc_edge_count == rep.m


# ---------------------------------------------------------------- families


def suite_families() -> SuiteResult:
    res = SuiteResult("families")

    def expect(name: str, cond: bool) -> None:
        res.details[name] = bool(cond)
        if not cond:
            res.fail(name)

    for name, G, col in (
        ("C6^2", fam.cycle_square(6), 5),
        ("icosahedron", fam.icosahedron(), 6),
        ("torus-4x4", fam.toroidal_triangulated(4, 4), 7),
    ):
        expect(f"{name} col {col} and double-col-critical", colouring_number(G) == col and is_double_col_critical(G))
    for t in (1, 2, 3):
        G = complete_join(fam.cycle_square(6), fam.complete(t))
        _, lo, hi = degree_profile(G)
        expect(f"C6^2 + K{t}", colouring_number(G) == t + 5 and lo == G.n - 2 and hi == G.n - 1)
    for k in range(4, 11):
        rep = criticality_report(fam.f_graph(k))
        expect(f"F{k}", rep.col == 5 and rep.is_col_critical and rep.m - rep.dcc_edge_count == 2)
    return res


# ---------------------------------------------------------------- oracle


def random_graph(rng: random.Random, n: int, p: float) -> Graph:
    adj = [[] for _ in range(n)]
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < p:
                adj[u].append(v)
                adj[v].append(u)
    return Graph(n, adj)


def random_corpus(count: int, seed: int, n_max: int = 9) -> list:
    rng = random.Random(seed)
    return [random_graph(rng, rng.randint(1, n_max), rng.random()) for _ in range(count)]


def oracle_mismatches(graphs) -> tuple:
    """Compare the fast colouring number with both brute-force definitions; returns (checked, mismatches)."""
    checked, bad = 0, []
    for G in graphs:
        checked += 1
        fast = colouring_number(G)
        slow = colouring_number_bruteforce(G)
        sweep = colouring_number_subsets(G) if G.n <= 7 else slow
        if not fast == slow == sweep:
            bad.append({"graph6": to_graph6(G), "fast": fast, "ordering": slow, "subsets": sweep})
    return checked, bad


def run_suite(name: str, n_max=None) -> SuiteResult:
    if name == "observations":
        return suite_observations(n_max or 7)
    if name == "joins":
        return suite_joins(n_max or 5)
    if name == "theorem28":
        return suite_theorem28(n_max or 9)
    if name == "prop33":
        return suite_prop33(n_max or 8)
    if name == "families":
        return suite_families()
    raise ValueError(f"unknown suite {name!r}")
