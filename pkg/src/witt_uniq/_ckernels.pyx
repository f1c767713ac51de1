# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled twins of the kernels in ``_pykernels``; outputs are identical."""
from libc.stdlib cimport malloc, free, calloc
from libc.string cimport memset, memcpy
from libc.stdint cimport uint64_t, int32_t

import numpy as np

cdef enum:
    MODE_FIRST = 0
    MODE_ENUMERATE = 1
    MODE_COUNT = 2
    HEUR_MIN_SIZE = 0

cdef extern from *:
    int __builtin_popcountll(unsigned long long) nogil
    int __builtin_ctzll(unsigned long long) nogil

# ---------------------------------------------------------------- dancing links

cdef struct DLX:
    int *L
    int *R
    int *U
    int *D
    int *C
    int *ROW
    int *S
    int *partial
    int depth
    long long count
    int mode
    int heuristic


cdef inline void _cover(DLX *x, int h) noexcept nogil:
    cdef int i, j
    x.R[x.L[h]] = x.R[h]
    x.L[x.R[h]] = x.L[h]
    i = x.D[h]
    while i != h:
        j = x.R[i]
        while j != i:
            x.U[x.D[j]] = x.U[j]
            x.D[x.U[j]] = x.D[j]
            x.S[x.C[j]] -= 1
            j = x.R[j]
        i = x.D[i]


cdef inline void _uncover(DLX *x, int h) noexcept nogil:
    cdef int i, j
    i = x.U[h]
    while i != h:
        j = x.L[i]
        while j != i:
            x.S[x.C[j]] += 1
            x.U[x.D[j]] = j
            x.D[x.U[j]] = j
            j = x.L[j]
        i = x.U[i]
    x.R[x.L[h]] = h
    x.L[x.R[h]] = h


cdef bint _search(DLX *x, list solutions):
    cdef int h, j, r, best
    cdef bint stop
    if x.R[0] == 0:
        x.count += 1
        if x.mode != MODE_COUNT:
            solutions.append([x.partial[t] for t in range(x.depth)])
        return x.mode == MODE_FIRST
    h = x.R[0]
    if x.heuristic == HEUR_MIN_SIZE:
        best = x.S[h]
        j = x.R[h]
        while j != 0 and best > 0:
            if x.S[j] < best:
                best = x.S[j]
                h = j
            j = x.R[j]
    if x.S[h] == 0:
        return False
    _cover(x, h)
    r = x.D[h]
    while r != h:
        x.partial[x.depth] = x.ROW[r]
        x.depth += 1
        j = x.R[r]
        while j != r:
            _cover(x, x.C[j])
            j = x.R[j]
        stop = _search(x, solutions)
        j = x.L[r]
        while j != r:
            _uncover(x, x.C[j])
            j = x.L[j]
        x.depth -= 1
        if stop:
            _uncover(x, h)
            return True
        r = x.D[r]
    _uncover(x, h)
    return False


def dlx_search(int ncols, rows, int mode, int heuristic):
    cdef int nnodes = ncols + 1
    cdef int i, h, xnode, first, r, c
    for cols in rows:
        nnodes += len(cols)
    cdef DLX x
    x.L = <int *> malloc(nnodes * sizeof(int))
    x.R = <int *> malloc(nnodes * sizeof(int))
    x.U = <int *> malloc(nnodes * sizeof(int))
    x.D = <int *> malloc(nnodes * sizeof(int))
    x.C = <int *> malloc(nnodes * sizeof(int))
    x.ROW = <int *> malloc(nnodes * sizeof(int))
    x.S = <int *> calloc(ncols + 1, sizeof(int))
    x.partial = <int *> malloc((len(rows) + 1) * sizeof(int))
    x.depth = 0
    x.count = 0
    x.mode = mode
    x.heuristic = heuristic
    try:
        for i in range(ncols + 1):
            x.L[i] = i - 1
            x.R[i] = i + 1
            x.U[i] = i
            x.D[i] = i
            x.C[i] = i
            x.ROW[i] = -1
        x.L[0] = ncols
        x.R[ncols] = 0
        xnode = ncols + 1
        for r in range(len(rows)):
            first = -1
            for c in rows[r]:
                h = c + 1
                x.C[xnode] = h
                x.ROW[xnode] = r
                x.U[xnode] = x.U[h]
                x.D[xnode] = h
                x.D[x.U[h]] = xnode
                x.U[h] = xnode
                x.S[h] += 1
                if first < 0:
                    first = xnode
                    x.L[xnode] = xnode
                    x.R[xnode] = xnode
                else:
                    x.L[xnode] = x.L[first]
                    x.R[xnode] = first
                    x.R[x.L[first]] = xnode
                    x.L[first] = xnode
                xnode += 1
        solutions = []
        _search(&x, solutions)
        return x.count, solutions
    finally:
        free(x.L); free(x.R); free(x.U); free(x.D)
        free(x.C); free(x.ROW); free(x.S); free(x.partial)


# ---------------------------------------------------------------- k-cliques

cdef struct CliqueCtx:
    int n
    int words
    int k
    uint64_t *adj
    uint64_t *stack
    int *clique
    long long total
    bint count_only


cdef inline int _popcount(uint64_t *b, int words) noexcept nogil:
    cdef int t, s = 0
    for t in range(words):
        s += __builtin_popcountll(b[t])
    return s


cdef void _extend(CliqueCtx *ctx, int depth, list out):
    cdef uint64_t *cand = ctx.stack + depth * ctx.words
    cdef uint64_t *nxt = ctx.stack + (depth + 1) * ctx.words
    cdef uint64_t *av
    cdef int need = ctx.k - depth
    cdef int t, v, b
    if need == 0:
        ctx.total += 1
        if not ctx.count_only:
            out.append(tuple([ctx.clique[i] for i in range(depth)]))
        return
    for t in range(ctx.words):
        while cand[t]:
            if _popcount(cand, ctx.words) < need:
                return
            b = __builtin_ctzll(cand[t])
            cand[t] &= cand[t] - 1
            v = t * 64 + b
            av = ctx.adj + v * ctx.words
            for b in range(ctx.words):
                nxt[b] = cand[b] & av[b]
            ctx.clique[depth] = v
            _extend(ctx, depth + 1, out)


def k_cliques(int n, adj, int k, bint count_only=False):
    if k <= 0:
        return (1, [()]) if not count_only else (1, [])
    cdef CliqueCtx ctx
    cdef int words = (n + 63) // 64 if n > 0 else 1
    cdef int v, t
    ctx.n = n
    ctx.words = words
    ctx.k = k
    ctx.total = 0
    ctx.count_only = count_only
    ctx.adj = <uint64_t *> calloc(n * words + 1, sizeof(uint64_t))
    ctx.stack = <uint64_t *> calloc((k + 1) * words, sizeof(uint64_t))
    ctx.clique = <int *> malloc((k + 1) * sizeof(int))
    mask64 = (1 << 64) - 1
    try:
        for v in range(n):
            a = adj[v]
            for t in range(words):
                ctx.adj[v * words + t] = <uint64_t> ((a >> (64 * t)) & mask64)
        for t in range(words):
            if n >= 64 * (t + 1):
                ctx.stack[t] = ~(<uint64_t> 0)
            elif n > 64 * t:
                ctx.stack[t] = ((<uint64_t> 1) << (n - 64 * t)) - 1
            else:
                ctx.stack[t] = 0
        out = []
        _extend(&ctx, 0, out)
        return ctx.total, out
    finally:
        free(ctx.adj); free(ctx.stack); free(ctx.clique)


# ---------------------------------------------------------------- refinement

cdef class Refiner:
    """Compiled twin of ``_pykernels.Refiner``."""
    cdef int n
    cdef int ncolors
    cdef unsigned char *m
    cdef int *counts
    cdef int *order
    cdef int *cells
    cdef int *newcells

    def __cinit__(self, int n, colors, int ncolors):
        self.n = n
        self.ncolors = ncolors
        self.m = <unsigned char *> malloc(n * n + 1)
        self.counts = <int *> malloc((n * (ncolors * n + 1) + 1) * sizeof(int))
        self.order = <int *> malloc((n + 1) * sizeof(int))
        self.cells = <int *> malloc((n + 1) * sizeof(int))
        self.newcells = <int *> malloc((n + 1) * sizeof(int))
        buf = bytes(colors) if isinstance(colors, (bytes, bytearray)) else np.asarray(colors, dtype=np.uint8).tobytes()
        cdef const unsigned char[:] mv = buf
        cdef int i
        for i in range(n * n):
            self.m[i] = mv[i]

    def __dealloc__(self):
        free(self.m); free(self.counts); free(self.order)
        free(self.cells); free(self.newcells)

    cdef inline int _cmp(self, int a, int b, int width) noexcept nogil:
        cdef int *ra = self.counts + a * width
        cdef int *rb = self.counts + b * width
        cdef int t
        for t in range(width):
            if ra[t] != rb[t]:
                return -1 if ra[t] < rb[t] else 1
        return 0

    def refine(self, cells):
        cdef int n = self.n
        cdef int K = self.ncolors
        cdef int v, w, i, j, c, nc, width, key, tmp
        cdef int *row
        cdef unsigned char *mrow
        for v in range(n):
            self.cells[v] = cells[v]
        c = 0
        for v in range(n):
            if self.cells[v] + 1 > c:
                c = self.cells[v] + 1
        while True:
            # row layout: [cell, counts(color k, cell j) at 1 + k*c + j]
            width = 1 + K * c
            memset(self.counts, 0, n * width * sizeof(int))
            for v in range(n):
                row = self.counts + v * width
                row[0] = self.cells[v]
                mrow = self.m + v * n
                for w in range(n):
                    row[1 + mrow[w] * c + self.cells[w]] += 1
            # stable insertion sort of vertex order by row
            for v in range(n):
                self.order[v] = v
            for i in range(1, n):
                key = self.order[i]
                j = i - 1
                while j >= 0 and self._cmp(self.order[j], key, width) > 0:
                    self.order[j + 1] = self.order[j]
                    j -= 1
                self.order[j + 1] = key
            nc = 0
            for i in range(n):
                if i > 0 and self._cmp(self.order[i - 1], self.order[i], width) != 0:
                    nc += 1
                self.newcells[self.order[i]] = nc
            nc = nc + 1 if n > 0 else 0
            if nc == c:
                break
            memcpy(self.cells, self.newcells, n * sizeof(int))
            c = nc
        sizes = [0] * nc
        for v in range(n):
            sizes[self.newcells[v]] += 1
        inv = np.empty(1 + nc + nc * K * nc, dtype="<i4")
        inv[0] = nc
        for i in range(nc):
            inv[1 + i] = sizes[i]
        # first vertex of each cell in sorted order is its representative
        j = 0
        for i in range(n):
            if i == 0 or self.newcells[self.order[i]] != self.newcells[self.order[i - 1]]:
                row = self.counts + self.order[i] * width
                for w in range(K * nc):
                    inv[1 + nc + j * K * nc + w] = row[1 + w]
                j += 1
        return [self.newcells[v] for v in range(n)], nc, inv.tobytes()


def relabel(int n, const unsigned char[:] colors, labels):
    cdef int v, w
    cdef int *lab = <int *> malloc((n + 1) * sizeof(int))
    out = bytearray(n * n)
    cdef unsigned char[:] o = out
    try:
        for v in range(n):
            lab[v] = labels[v]
        for v in range(n):
            for w in range(n):
                o[lab[v] * n + lab[w]] = colors[v * n + w]
        return bytes(out)
    finally:
        free(lab)
