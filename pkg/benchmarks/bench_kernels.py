"""Time the compiled kernels against the pure-Python fallback.

    python benchmarks/bench_kernels.py [--repeat 3] [--quick]

Each workload is run once per available backend; the table reports the best
of ``--repeat`` runs and the speed-up of the compiled core.
"""
import argparse
import random
import time

from degencrit import _pykernels
from degencrit import families as fam
from degencrit.graph import Graph

try:
    from degencrit import _ckernels
except ImportError:  # extension not built
    _ckernels = None


def random_graph(rng, n, p):
    adj = [[] for _ in range(n)]
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < p:
                adj[u].append(v)
                adj[v].append(u)
    return Graph(n, adj)


def workloads(quick):
    rng = random.Random(1)
    big = [fam.toroidal_triangulated(20, 20), random_graph(rng, 300, 0.05)]
    mid = [random_graph(rng, 12, 0.5) for _ in range(50 if quick else 300)]
    dense = fam.ratio_family(7, 12)

    def col_big(mod):
        for G in big:
            mod.KernelGraph(G.n, G.adjacency).colouring_number()

    def report_dense(mod):
        k = mod.KernelGraph(dense.n, dense.adjacency)
        edges = dense.edges()
        k.vertex_deletion_cols()
        k.edge_deletion_cols(edges)
        k.endpoint_deletion_cols(edges)

    def canon_mid(mod):
        for G in mid:
            mod.canonical_labelling(G.n, G.masks, None)

    def canon_symmetric(mod):
        for G in (fam.petersen(), fam.icosahedron(), fam.cycle_square(12)):
            mod.canonical_labelling(G.n, G.masks, None)

    return [
        ("colouring number, n=400 and n=300", col_big),
        ("all deletions, ratio family p=7 k=12", report_dense),
        (f"canonical labelling, {len(mid)} random n=12", canon_mid),
        ("canonical labelling, symmetric graphs", canon_symmetric),
    ]


def census_workload(mod, n):
    from degencrit import canon, census, graph
    from degencrit.census import CensusConstraints, enumerate_connected

    saved = graph.KernelGraph, canon._labelling, census._labelling
    graph.KernelGraph, canon._labelling, census._labelling = mod.KernelGraph, mod.canonical_labelling, mod.canonical_labelling
    try:
        cons = CensusConstraints(n=n, min_degree=4, max_col=5, forbid_clique=4)
        return sum(1 for _ in enumerate_connected(cons))
    finally:
        graph.KernelGraph, canon._labelling, census._labelling = saved


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        t = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t)
    return min(times)


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--quick", action="store_true", help="smaller workloads")
    args = ap.parse_args(argv)

    mods = [_pykernels] + ([_ckernels] if _ckernels else [])
    jobs = workloads(args.quick)
    n = 8 if args.quick else 9
    jobs.append((f"dcc5 census enumeration, n={n}", lambda mod: census_workload(mod, n)))

    print(f"{'workload':45s} " + " ".join(f"{m.BACKEND:>10s}" for m in mods) + "   speed-up")
    for name, job in jobs:
        times = [best_of(lambda m=m: job(m), args.repeat) for m in mods]
        speed = f"{times[0] / times[-1]:8.1f}x" if len(times) > 1 else "       -"
        print(f"{name:45s} " + " ".join(f"{t:9.3f}s" for t in times) + f"  {speed}")
    if not _ckernels:
        print("compiled kernels not built; only the fallback was timed")


if __name__ == "__main__":
    main()
