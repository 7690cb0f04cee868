import importlib
import sys

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from degencrit import _pykernels
from degencrit.graph import Graph

# the kernel fixtures only select a module, so reuse across examples is safe
settings.register_profile("default", suppress_health_check=[HealthCheck.function_scoped_fixture], deadline=None)
settings.load_profile("default")

KERNEL_MODULES = [_pykernels]
try:
    KERNEL_MODULES.append(importlib.import_module("degencrit._ckernels"))
except ImportError:  # extension not built
    pass


@pytest.fixture(params=KERNEL_MODULES, ids=lambda m: m.BACKEND)
def kernels(request):
    return request.param


@pytest.fixture(params=KERNEL_MODULES, ids=lambda m: m.BACKEND)
def backend(request, monkeypatch):
    """Route the library through one kernel module for the duration of a test."""
    from degencrit import canon, census, graph

    mod = request.param
    monkeypatch.setattr(graph, "KernelGraph", mod.KernelGraph)
    monkeypatch.setattr(canon, "_labelling", mod.canonical_labelling)
    monkeypatch.setattr(census, "_labelling", mod.canonical_labelling)
    return mod.BACKEND


@st.composite
def graphs(draw, min_n=0, max_n=9):
    n = draw(st.integers(min_n, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    chosen = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    adj = [[] for _ in range(n)]
    for (u, v), keep in zip(pairs, chosen):
        if keep:
            adj[u].append(v)
            adj[v].append(u)
    return Graph(n, adj)


@st.composite
def graphs_with_permutation(draw, min_n=0, max_n=9):
    G = draw(graphs(min_n, max_n))
    perm = draw(st.permutations(list(range(G.n))))
    return G, perm


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in mod.summary_lines():
        terminalreporter.write_line(line)
