"""Pure-Python implementations of the hot kernels.

Same algorithms, same output order as the compiled ``_ckernels`` module;
``witt_uniq.kernels`` picks one at import.
"""
from __future__ import annotations

import numpy as np

MODE_FIRST, MODE_ENUMERATE, MODE_COUNT = 0, 1, 2
HEUR_MIN_SIZE, HEUR_LEFTMOST = 0, 1


def dlx_search(ncols: int, rows: list[list[int]], mode: int, heuristic: int):
    """Dancing-links exact cover.

    Returns ``(count, solutions)``; each solution lists row indices in the
    order they were chosen.  ``solutions`` is empty in count mode.
    """
    # node 0 is the root, 1..ncols are column headers
    L = list(range(-1, ncols)) + []
    L[0] = ncols
    R = [i + 1 for i in range(ncols + 1)]
    R[ncols] = 0
    U = list(range(ncols + 1))
    D = list(range(ncols + 1))
    C = list(range(ncols + 1))
    ROW = [-1] * (ncols + 1)
    S = [0] * (ncols + 1)
    for r, cols in enumerate(rows):
        first = -1
        for c in cols:
            h = c + 1
            x = len(L)
            C.append(h)
            ROW.append(r)
            U.append(U[h])
            D.append(h)
            D[U[h]] = x
            U[h] = x
            S[h] += 1
            if first < 0:
                first = x
                L.append(x)
                R.append(x)
            else:
                L.append(L[first])
                R.append(first)
                R[L[first]] = x
                L[first] = x

    def cover(h):
        R[L[h]] = R[h]
        L[R[h]] = L[h]
        i = D[h]
        while i != h:
            j = R[i]
            while j != i:
                U[D[j]] = U[j]
                D[U[j]] = D[j]
                S[C[j]] -= 1
                j = R[j]
            i = D[i]

    def uncover(h):
        i = U[h]
        while i != h:
            j = L[i]
            while j != i:
                S[C[j]] += 1
                U[D[j]] = j
                D[U[j]] = j
                j = L[j]
            i = U[i]
        R[L[h]] = h
        L[R[h]] = h

    solutions = []
    partial = []
    count = 0

    def search() -> bool:
        nonlocal count
        if R[0] == 0:
            count += 1
            if mode != MODE_COUNT:
                solutions.append(list(partial))
            return mode == MODE_FIRST
        h = R[0]
        if heuristic == HEUR_MIN_SIZE:
            best = S[h]
            j = R[h]
            while j != 0 and best > 0:
                if S[j] < best:
                    best = S[j]
                    h = j
                j = R[j]
        if S[h] == 0:
            return False
        cover(h)
        r = D[h]
        while r != h:
            partial.append(ROW[r])
            j = R[r]
            while j != r:
                cover(C[j])
                j = R[j]
            stop = search()
            j = L[r]
            while j != r:
                uncover(C[j])
                j = L[j]
            partial.pop()
            if stop:
                uncover(h)
                return True
            r = D[r]
        uncover(h)
        return False

    search()
    return count, solutions


def k_cliques(n: int, adj: list[int], k: int, count_only: bool = False):
    """All k-cliques as ascending vertex tuples, in lexicographic order.

    ``adj[v]`` is a bitset (Python int) of the neighbours of ``v``.
    """
    out = []
    total = 0
    if k <= 0:
        return (1, [()]) if not count_only else (1, [])
    clique: list[int] = []

    def extend(cand: int):
        nonlocal total
        need = k - len(clique)
        if need == 0:
            total += 1
            if not count_only:
                out.append(tuple(clique))
            return
        while cand:
            if cand.bit_count() < need:
                return
            low = cand & -cand
            v = low.bit_length() - 1
            cand ^= low
            clique.append(v)
            extend(cand & adj[v])
            clique.pop()

    extend((1 << n) - 1)
    return total, out


class Refiner:
    """Equitable refinement of ordered vertex partitions of a colored complete graph.

    ``colors`` is an n*n array of small ints (diagonal included).  A partition
    is given as ``cells``: vertex -> ordinal cell index.  One round assigns each
    vertex the key (cell, counts of (color, cell) over all w) and renumbers cells
    by ascending key; rounds repeat until no cell splits.
    """

    def __init__(self, n: int, colors, ncolors: int):
        self.n = n
        self.ncolors = ncolors
        if isinstance(colors, (bytes, bytearray)):
            m = np.frombuffer(colors, dtype=np.uint8).reshape(n, n)
        else:
            m = np.asarray(colors, dtype=np.uint8).reshape(n, n)
        self.masks = [(m == k).astype(np.int32) for k in range(ncolors)]

    def refine(self, cells):
        n = self.n
        cells = np.asarray(cells, dtype=np.int64)
        ar = np.arange(n)
        while True:
            c = int(cells.max()) + 1 if n else 0
            onehot = np.zeros((n, c), dtype=np.int32)
            onehot[ar, cells] = 1
            counts = np.concatenate([mk @ onehot for mk in self.masks], axis=1)
            keys = np.column_stack([cells, counts])
            order = np.lexsort(keys.T[::-1])
            sk = keys[order]
            newgroup = np.ones(n, dtype=bool)
            newgroup[1:] = np.any(sk[1:] != sk[:-1], axis=1)
            ids = np.cumsum(newgroup) - 1
            newcells = np.empty(n, dtype=np.int64)
            newcells[order] = ids
            nc = int(ids[-1]) + 1 if n else 0
            if nc == c:
                reps = sk[newgroup]
                sizes = np.bincount(newcells, minlength=nc)
                inv = np.concatenate([[nc], sizes, reps[:, 1:].ravel()]).astype("<i4")
                return newcells.tolist(), nc, inv.tobytes()
            cells = newcells


def relabel(n: int, colors: bytes, labels) -> bytes:
    """Color matrix rewritten so vertex v sits at position labels[v]."""
    m = np.frombuffer(colors, dtype=np.uint8).reshape(n, n)
    inv = np.empty(n, dtype=np.int64)
    inv[np.asarray(labels, dtype=np.int64)] = np.arange(n)
    return m[np.ix_(inv, inv)].tobytes()
