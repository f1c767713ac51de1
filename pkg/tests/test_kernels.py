import random

import numpy as np
import pytest

from witt_uniq import _pykernels, kernels
from witt_uniq.designs import build_witt_instance

ck = pytest.importorskip("witt_uniq._ckernels")


def test_backend_reported():
    assert kernels.BACKEND in ("cython", "python")


@pytest.mark.parametrize("mode", [0, 1, 2])
@pytest.mark.parametrize("heur", [0, 1])
def test_dlx_backends_agree(mode, heur):
    inst = build_witt_instance()
    rows = [list(r) for r in inst.rows]
    a = ck.dlx_search(inst.columns, rows, mode, heur)
    b = _pykernels.dlx_search(inst.columns, rows, mode, heur)
    assert a == b


def _random_adj(rng, n, p):
    adj = [0] * n
    for i in range(n):
        for j in range(i + 1, n):
            if rng.random() < p:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
    return adj


def test_cliques_backends_agree():
    rng = random.Random(5)
    for _ in range(40):
        n = rng.randint(1, 150)
        adj = _random_adj(rng, n, rng.choice([0.3, 0.6, 0.9]))
        for k in (1, 2, 3, 4):
            assert ck.k_cliques(n, adj, k) == _pykernels.k_cliques(n, adj, k)


def test_refiner_backends_agree():
    rng = random.Random(9)
    for _ in range(60):
        n = rng.randint(1, 30)
        k = rng.randint(2, 4)
        m = np.zeros((n, n), dtype=np.uint8)
        for i in range(n):
            for j in range(i + 1, n):
                m[i, j] = m[j, i] = rng.randint(1, k - 1) if k > 1 else 1
        cells = [rng.randint(0, 2) for _ in range(n)]
        # cells must be a contiguous range of ids
        ids = {c: t for t, c in enumerate(sorted(set(cells)))}
        cells = [ids[c] for c in cells]
        a = ck.Refiner(n, m.tobytes(), k).refine(cells)
        b = _pykernels.Refiner(n, m.tobytes(), k).refine(cells)
        assert a == b
        perm = list(range(n))
        rng.shuffle(perm)
        assert ck.relabel(n, m.tobytes(), perm) == _pykernels.relabel(n, m.tobytes(), perm)
