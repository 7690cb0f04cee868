from fractions import Fraction

import pytest

from degencrit import families as fam
from degencrit.canon import canonical_form
from degencrit.census import (
    CensusConstraints,
    all_graphs,
    census_col4_edge_bound,
    census_dcc5,
    check_graph,
    enumerate_connected,
    find_ratio_threshold,
    is_wheel,
    property_sweep,
    summarize_col4,
)
from degencrit.criticality import criticality_report
from degencrit.graph import delete_edge, from_edge_list, has_clique, is_connected
from degencrit.guards import GuardError
from degencrit.verify import spoke_mutant
from oracles import isomorphism_classes

# connected and all graphs per order
CONNECTED = [1, 1, 1, 2, 6, 21, 112, 853]
ALL = [1, 1, 2, 4, 11, 34, 156, 1044]


def forms(graphs):
    return [canonical_form(G) for G in graphs]


@pytest.mark.parametrize("n", range(0, 7))
def test_complete_against_labelled_bruteforce(backend, n):
    for connected in (True, False):
        got = forms(all_graphs(n, connected))
        assert len(got) == len(set(got))
        want = {canonical_form(from_edge_list(n, e)) for e in isomorphism_classes(n, connected)}
        assert set(got) == want


@pytest.mark.parametrize("n", range(0, 8))
def test_known_counts(n):
    assert len(all_graphs(n, connected=True)) == CONNECTED[n]
    assert len(all_graphs(n)) == ALL[n]


def test_constraints_are_respected_and_complete():
    for n in range(3, 8):
        c = CensusConstraints(n=n, min_degree=2, max_degree=min(4, n - 1), forbid_clique=4)
        got = list(enumerate_connected(c))
        assert all(c.admits(G) for G in got)
        assert all(min(G.degrees()) >= 2 and max(G.degrees()) <= 4 and not has_clique(G, 4) for G in got)
        want = [G for G in all_graphs(n, connected=True) if c.admits(G)]
        assert sorted(forms(got)) == sorted(forms(want))


def test_max_col_constraint():
    c = CensusConstraints(n=7, max_col=3)
    got = list(enumerate_connected(c))
    want = [G for G in all_graphs(7, connected=True) if c.admits(G)]
    assert sorted(forms(got)) == sorted(forms(want))


def test_spec_examples():
    assert len(list(enumerate_connected(CensusConstraints(n=4)))) == 6
    assert forms(enumerate_connected(CensusConstraints(n=5, min_degree=4))) == [canonical_form(fam.complete(5))]
    seven = forms(enumerate_connected(CensusConstraints(n=7, min_degree=4, forbid_clique=4)))
    assert canonical_form(fam.glued_pair(fam.BrickKind.K5_NABLA, fam.BrickKind.K5_NABLA)) in seven


def test_empty_order():
    assert [G.n for G in enumerate_connected(CensusConstraints(n=0))] == [0]


def test_constraint_validation():
    with pytest.raises(ValueError):
        CensusConstraints(n=4, min_degree=3, max_degree=2)
    with pytest.raises(ValueError):
        CensusConstraints(n=4, max_degree=4)
    with pytest.raises(ValueError):
        CensusConstraints(n=-1)


def test_guards(monkeypatch):
    with pytest.raises(GuardError):
        next(enumerate_connected(CensusConstraints(n=11)))
    with pytest.raises(GuardError):
        next(enumerate_connected(CensusConstraints(n=12, min_degree=4)))
    with pytest.raises(GuardError):
        census_dcc5(11)
    with pytest.raises(GuardError):
        census_col4_edge_bound(9)
    with pytest.raises(GuardError):
        property_sweep(9)
    monkeypatch.setenv("DEGENCRIT_MAX_N", "4")
    with pytest.raises(GuardError):
        next(enumerate_connected(CensusConstraints(n=5)))


def test_parallel_output_matches_sequential():
    c = CensusConstraints(n=7, min_degree=2)
    seq = forms(enumerate_connected(c))
    par = forms(enumerate_connected(c, workers=2, split_level=4))
    assert seq == par
    assert seq == forms(enumerate_connected(c))


def test_dcc5_small():
    rows = census_dcc5(8)
    assert [len(r.hits) for r in rows] == [1, 1, 2, 2]
    assert [label for _, label in rows[2].hits] == ["GluedBricks(k5,k5)", "CycleSquare(7)"]
    assert rows[1].as_dict()["hits"] == [{"graph6": canonical_form(fam.cycle_square(6)).decode(), "label": "CycleSquare(6)"}]


def test_col4_census_up_to_seven():
    records = census_col4_edge_bound(7)
    summary = summarize_col4(records)
    assert summary["bound_violations"] == []
    assert summary["extremal_all_wheels"]
    assert summary["min_extremal_order"] == 5
    assert [r["n"] for r in summary["extremal"]] == [5, 6, 7]
    w5 = canonical_form(fam.wheel(5)).decode()
    assert any(r.graph6 == w5 and r.dcc_count == 5 and r.m == 10 for r in records)


def test_is_wheel():
    assert all(is_wheel(fam.wheel(k)) for k in range(3, 9))
    assert not is_wheel(fam.cycle_square(6))
    assert not is_wheel(delete_edge(fam.wheel(5), 0, 1))


def test_sweep_is_clean_up_to_six():
    rep = property_sweep(6)
    assert rep.ok, rep.violations[:5]
    assert rep.graphs_checked == sum(CONNECTED[1:7])


def test_negative_control_is_caught():
    G, forged = spoke_mutant()
    assert not criticality_report(G).is_double_col_critical
    names = {v.check for v in check_graph(G, forged)}
    assert "dcc-min-degree" in names or "dcc-common-neighbour" in names
    assert check_graph(G) == []


def test_forged_reports_on_other_statements():
    # a col-critical 4-graph claiming two disjoint double-col-critical edges
    W = fam.wheel(6)
    honest = criticality_report(W)
    rim = tuple(e for e in W.edges() if 6 not in e)
    forged = type(honest)(**{**honest.__dict__, "dcc_edges": rim[:1] + rim[3:4]})
    assert "col4-dcc-incident" in {v.check for v in check_graph(W, forged)}


@pytest.mark.parametrize("p", [5, 6, 7])
def test_ratio_threshold(p):
    res = find_ratio_threshold(p, Fraction(1, 10))
    assert res.k is not None
    assert Fraction(9, 10) < res.ratio < 1
    assert res.m - res.dcc_count == 2 and res.col_critical
    if p > 5:
        assert res.join_verdict.startswith("matches")
    # least such k
    if res.k > 4:
        assert find_ratio_threshold(p, Fraction(1, 10), k_max=res.k - 1).k is None


def test_ratio_threshold_examples():
    assert find_ratio_threshold(5, Fraction(1, 2)).as_dict()["ratio"] == "7/8"
    assert find_ratio_threshold(5, Fraction(1, 10)).k == 6  # 11/12; k = 5 gives exactly 9/10
    capped = find_ratio_threshold(5, Fraction(1, 1000), k_max=8)
    assert capped.k is None and capped.as_dict()["cap_exceeded"]
    with pytest.raises(GuardError):
        find_ratio_threshold(9, Fraction(1, 10))
    with pytest.raises(ValueError):
        find_ratio_threshold(5, 0)


def test_enumerated_graphs_are_connected():
    assert all(is_connected(G) for G in enumerate_connected(CensusConstraints(n=6)))
