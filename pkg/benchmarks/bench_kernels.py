"""Compare the compiled kernels with the pure-Python fallback.

    python3 benchmarks/bench_kernels.py [--repeat N] [--lemma2-cliques K]

Each row times one workload on both backends (best of N) and checks that the
two backends return identical results.
"""
from __future__ import annotations

import argparse
import statistics
import time

import numpy as np

from witt_uniq import _pykernels, graphs, sphere
from witt_uniq._pykernels import HEUR_MIN_SIZE, MODE_COUNT, MODE_ENUMERATE
from witt_uniq.designs import build_witt_instance

try:
    from witt_uniq import _ckernels
except ImportError:  # extension not built
    _ckernels = None


def best_of(fn, repeat):
    times = []
    out = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        times.append(time.perf_counter() - t0)
    return min(times), statistics.median(times), out


def workloads(lemma2_cliques):
    inst = build_witt_instance()
    rows = [list(r) for r in inst.rows]
    f = sphere.build_frame()
    Y1 = sphere.enumerate_Y1(f)
    y1g = sphere.y1_graph(f, Y1)
    bits = y1g.adjacency_bits()
    t12 = graphs.triangular_graph(12)
    cliques = graphs.enumerate_cliques(y1g, 10)[:lemma2_cliques]
    C1 = sphere.simplex_vectors(f)
    num_all = sphere.gram_numerators(C1 + Y1)
    grams = [sphere.gram_graph(num_all[np.ix_(list(range(11)) + [11 + i for i in c],
                                              list(range(11)) + [11 + i for i in c])])
             for c in cliques]

    def dlx(k):
        return lambda: k.dlx_search(inst.columns, rows, MODE_COUNT, HEUR_MIN_SIZE)[0]

    def dlx_enum(k):
        return lambda: len(k.dlx_search(inst.columns, rows, MODE_ENUMERATE, HEUR_MIN_SIZE)[1])

    def cliques10(k):
        return lambda: k.k_cliques(len(Y1), bits, 10, True)[0]

    def refine_t12(k):
        def run():
            r = k.Refiner(t12.n, t12.colors, 3)
            # individualize each vertex in turn: 66 cells after refinement
            return [r.refine([0 if u == v else 1 for u in range(t12.n)]) for v in range(t12.n)]
        return run

    def lemma2(k):
        def run():
            saved = graphs.kernels.Refiner, graphs.kernels.relabel
            graphs.kernels.Refiner, graphs.kernels.relabel = k.Refiner, k.relabel
            try:
                return [graphs.canonical_form(g).digest for g in grams]
            finally:
                graphs.kernels.Refiner, graphs.kernels.relabel = saved
        return run

    return [
        ("exact cover count (5040)", dlx),
        ("exact cover enumerate", dlx_enum),
        ("10-cliques of Y1 graph (30240)", cliques10),
        ("T(12) refinement, 66 individualizations", refine_t12),
        (f"canonical forms, {len(grams)} order-10 clique Grams", lemma2),
    ]


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--lemma2-cliques", type=int, default=300)
    args = ap.parse_args(argv)
    if _ckernels is None:
        raise SystemExit("compiled extension witt_uniq._ckernels is not built")
    print(f"{'workload':<40}{'cython s':>10}{'python s':>10}{'speedup':>9}  same")
    for name, make in workloads(args.lemma2_cliques):
        tc, _, oc = best_of(make(_ckernels), args.repeat)
        tp, _, op = best_of(make(_pykernels), args.repeat)
        print(f"{name:<40}{tc:>10.3f}{tp:>10.3f}{tp / tc:>8.1f}x  {oc == op}")


if __name__ == "__main__":
    main()
