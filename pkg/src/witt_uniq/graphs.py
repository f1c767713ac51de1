"""Edge-colored complete graphs: SRG checks, T(m), cliques, isomorphism, canonical forms.

A :class:`ColoredGraph` stores an n x n matrix of small integer labels.
Label 0 is reserved for the diagonal.  ``values`` names what each label
means, so two graphs are only compared label-for-label when their ``values``
agree.
"""
from __future__ import annotations

import hashlib
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Sequence

import numpy as np

from . import kernels
from .designs import VerificationError
from .ratmath import rat_str

SIMPLE_VALUES = ("diag", "non-edge", "edge")


@dataclass(frozen=True)
class ColoredGraph:
    n: int
    colors: bytes
    values: tuple[str, ...] = SIMPLE_VALUES
    tags: tuple | None = field(default=None, compare=False)

    def __post_init__(self):
        n = self.n
        if len(self.colors) != n * n:
            raise ValueError("color matrix must have n*n entries")
        m = self.matrix()
        if not np.array_equal(m, m.T):
            raise ValueError("color matrix is not symmetric")
        off = ~np.eye(n, dtype=bool)
        if n and (np.any(np.diag(m) != 0) or np.any(m[off] == 0)):
            raise ValueError("label 0 must appear exactly on the diagonal")
        if n and int(m.max()) >= len(self.values):
            raise ValueError("label without a value name")

    @classmethod
    def simple(cls, adj, tags=None) -> "ColoredGraph":
        a = np.asarray(adj, dtype=bool)
        n = a.shape[0]
        m = np.where(a, 2, 1).astype(np.uint8)
        np.fill_diagonal(m, 0)
        return cls(n, m.tobytes(), SIMPLE_VALUES, tags)

    @classmethod
    def from_values(cls, matrix: Sequence[Sequence], tags=None) -> "ColoredGraph":
        """Complete graph colored by the off-diagonal entries (e.g. exact inner products)."""
        n = len(matrix)
        distinct = sorted({matrix[i][j] for i in range(n) for j in range(n) if i != j})
        if len(distinct) > 254:
            raise ValueError("too many distinct edge values")
        index = {v: t + 1 for t, v in enumerate(distinct)}
        m = np.zeros((n, n), dtype=np.uint8)
        for i in range(n):
            row = matrix[i]
            for j in range(n):
                if i != j:
                    m[i, j] = index[row[j]]
        names = tuple(rat_str(v) if isinstance(v, (Fraction, int)) else str(v) for v in distinct)
        return cls(n, m.tobytes(), ("diag",) + names, tags)

    def matrix(self) -> np.ndarray:
        return np.frombuffer(self.colors, dtype=np.uint8).reshape(self.n, self.n)

    @property
    def is_simple(self) -> bool:
        return self.values == SIMPLE_VALUES

    def adjacency(self, label: int = 2) -> np.ndarray:
        return (self.matrix() == label).astype(np.int64)

    def adjacency_bits(self, label: int = 2) -> list[int]:
        m = self.matrix()
        out = []
        for i in range(self.n):
            bits = 0
            for j in np.nonzero(m[i] == label)[0]:
                bits |= 1 << int(j)
            out.append(bits)
        return out

    def permuted(self, perm: Sequence[int]) -> "ColoredGraph":
        """Graph in which vertex v of self becomes vertex perm[v]."""
        return ColoredGraph(self.n, kernels.relabel(self.n, self.colors, list(perm)), self.values)

    def induced(self, verts: Sequence[int]) -> "ColoredGraph":
        m = self.matrix()[np.ix_(verts, verts)]
        return ColoredGraph(len(verts), np.ascontiguousarray(m).tobytes(), self.values)


@dataclass(frozen=True)
class CanonicalForm:
    labeling: tuple[int, ...]
    canon: bytes
    values: tuple[str, ...]
    digest: str
    leaves: int = field(default=0, compare=False)


def relation_graph(s, i: int) -> ColoredGraph:
    if not 1 <= i <= s.d:
        raise ValueError(f"class {i} outside 1..{s.d}")
    return ColoredGraph.simple(np.array(s.rel) == i)


def srg_check(g: ColoredGraph) -> tuple[int, int, int, int]:
    """(n, k, lambda, mu); raises VerificationError at the first violation."""
    if not g.is_simple:
        raise ValueError("srg_check needs a simple graph")
    a = g.adjacency()
    n = g.n
    deg = a.sum(axis=1)
    k = int(deg[0])
    bad = np.nonzero(deg != k)[0]
    if len(bad):
        v = int(bad[0])
        raise VerificationError(f"vertex {v} has degree {int(deg[v])}, expected {k}", ("k", v, int(deg[v])))
    common = a @ a
    off = ~np.eye(n, dtype=bool)
    out = []
    for name, mask in (("lambda", (a == 1) & off), ("mu", (a == 0) & off)):
        xs, ys = np.nonzero(mask)
        if not len(xs):
            raise VerificationError(f"no pairs to define {name}", (name,))
        val = int(common[xs[0], ys[0]])
        wrong = np.nonzero(common[xs, ys] != val)[0]
        if len(wrong):
            x, y = int(xs[wrong[0]]), int(ys[wrong[0]])
            raise VerificationError(f"{name} not constant at {(x, y)}: {int(common[x, y])} vs {val}",
                                    (name, (x, y), int(common[x, y]), val))
        out.append(val)
    return (n, k, out[0], out[1])


def triangular_graph(m: int) -> ColoredGraph:
    """T(m): 2-subsets of [0, m) in lexicographic order, adjacent iff they meet in one point."""
    if m < 4:
        raise ValueError("need m >= 4")
    verts = list(combinations(range(m), 2))
    adj = [[len(set(a) & set(b)) == 1 for b in verts] for a in verts]
    return ColoredGraph.simple(adj, tags=tuple(verts))


def enumerate_cliques(g: ColoredGraph, size: int, count_only: bool = False):
    """All cliques of exactly ``size`` vertices, lexicographic on sorted vertex lists."""
    total, cl = kernels.k_cliques(g.n, g.adjacency_bits(), size, count_only)
    return total if count_only else cl


def verify_delsarte_clique_facts(t12: ColoredGraph, eigenvalues_A2=(20, -2, -2, 8)) -> dict:
    """Exhaustive check of the maximum-clique structure of T(12).

    ``eigenvalues_A2`` is the column of P belonging to the class-2 relation;
    the Delsarte bound 1 - k/theta_min is compared to the clique order.
    """
    n = t12.n
    a = t12.adjacency()
    k = int(eigenvalues_A2[0])
    theta_min = min(eigenvalues_A2[1:])
    bound = 1 - Fraction(k, theta_min)
    order = int(bound)
    if bound.denominator != 1:
        raise VerificationError(f"Delsarte bound {bound} is not an integer", (bound,))
    if enumerate_cliques(t12, order + 1, count_only=True):
        raise VerificationError(f"a clique larger than the bound {order} exists", (order,))
    cliques = enumerate_cliques(t12, order)
    per_vertex = [0] * n
    for c in cliques:
        for v in c:
            per_vertex[v] += 1
    for v, cnt in enumerate(per_vertex):
        if cnt != 2:
            raise VerificationError(f"vertex {v} lies in {cnt} maximum cliques", ("membership", v, cnt))
    for ci, c in enumerate(cliques):
        inside = np.zeros(n, dtype=bool)
        inside[list(c)] = True
        nbrs = a[:, inside].sum(axis=1)
        for v in np.nonzero(~inside)[0]:
            if nbrs[v] != 2:
                raise VerificationError(f"vertex {int(v)} has {int(nbrs[v])} neighbours in clique {ci}",
                                        ("outside", int(v), ci, int(nbrs[v])))
    report = {"delsarte_bound": order, "clique_order": order, "num_max_cliques": len(cliques),
              "cliques_per_vertex": 2, "outside_neighbours": 2, "cliques": cliques}
    if t12.tags is not None:
        x = t12.tags.index((0, 1))
        report["cliques_at_x"] = [sorted(t12.tags[v] for v in c) for c in cliques if x in c]
    return report


# -- individualization / refinement search

def _cell_members(cells: Sequence[int], t: int) -> list[int]:
    return [v for v, c in enumerate(cells) if c == t]


def _target_cell(cells: Sequence[int], nc: int) -> int:
    sizes = [0] * nc
    for c in cells:
        sizes[c] += 1
    for t, s in enumerate(sizes):
        if s > 1:
            return t
    return -1


def _individualize(cells: Sequence[int], v: int, t: int) -> list[int]:
    return [c + 1 if (c > t or (c == t and u != v)) else c for u, c in enumerate(cells)]


def _orbit(v: int, gens: list[list[int]]) -> set[int]:
    orb = {v}
    stack = [v]
    while stack:
        u = stack.pop()
        for g in gens:
            w = g[u]
            if w not in orb:
                orb.add(w)
                stack.append(w)
    return orb


class _CanonSearch:
    """Search tree of ordered partitions; the canonical leaf minimises
    (invariant sequence, relabeled matrix).  Pruning: node invariants against
    the best leaf, orbits of discovered automorphisms fixing the current
    prefix, and backjumping when a leaf reproduces the first or best leaf."""

    def __init__(self, g: ColoredGraph):
        self.g = g
        self.n = g.n
        self.ref = kernels.Refiner(g.n, g.colors, max(len(g.values), 1))
        self.first = None
        self.best = None
        self.autos: list[list[int]] = []
        self.leaves = 0

    def run(self):
        cells, nc, inv = self.ref.refine([0] * self.n)
        self._visit(cells, nc, (inv,), ())
        return self.best

    def _leaf(self, cells, seq, path):
        self.leaves += 1
        canon = kernels.relabel(self.n, self.g.colors, cells)
        leaf = (seq, canon, list(cells), path)
        if self.first is None:
            self.first = self.best = leaf
            return None
        for ref in (self.first, self.best):
            if ref[0] == seq and ref[1] == canon:
                inv = [0] * self.n
                for v, lab in enumerate(ref[2]):
                    inv[lab] = v
                self.autos.append([inv[lab] for lab in cells])
                common = 0
                while common < len(path) and path[common] == ref[3][common]:
                    common += 1
                return common
        if (seq, canon) < (self.best[0], self.best[1]):
            self.best = leaf
        return None

    def _visit(self, cells, nc, seq, path):
        if self.best is not None and seq > self.best[0][:len(seq)]:
            return None
        if nc == self.n:
            return self._leaf(cells, seq, path)
        depth = len(path)
        t = _target_cell(cells, nc)
        explored: list[int] = []
        seen_autos = -1
        covered: set[int] = set()
        for v in _cell_members(cells, t):
            if explored:
                if len(self.autos) != seen_autos:
                    seen_autos = len(self.autos)
                    gens = [a for a in self.autos if all(a[p] == p for p in path)]
                    covered = set()
                    for u in explored:
                        covered |= _orbit(u, gens)
                if v in covered:
                    continue
            explored.append(v)
            covered.add(v)
            child, nc2, inv2 = self.ref.refine(_individualize(cells, v, t))
            r = self._visit(child, nc2, seq + (inv2,), path + (v,))
            if r is not None and r < depth:
                return r
        return None


def canonical_form(g: ColoredGraph) -> CanonicalForm:
    search = _CanonSearch(g)
    seq, canon, labels, _ = search.run()
    h = hashlib.sha256()
    h.update(f"n={g.n};values={'|'.join(g.values)};".encode())
    h.update(canon)
    return CanonicalForm(tuple(labels), canon, g.values, h.hexdigest(), search.leaves)


def find_isomorphism(g: ColoredGraph, h: ColoredGraph) -> list[int] | None:
    """Bijection ``phi`` with h[phi[u]][phi[v]] == g[u][v], or None if none exists."""
    if g.n != h.n or g.values != h.values:
        return None
    n = g.n
    if n == 0:
        return []
    ncol = max(len(g.values), 1)
    rg = kernels.Refiner(n, g.colors, ncol)
    rh = kernels.Refiner(n, h.colors, ncol)

    def match(cg, ch, nc):
        if nc == n:
            phi = [0] * n
            pos = [0] * n
            for w, c in enumerate(ch):
                pos[c] = w
            for v, c in enumerate(cg):
                phi[v] = pos[c]
            if kernels.relabel(n, g.colors, cg) == kernels.relabel(n, h.colors, ch):
                return phi
            return None
        t = _target_cell(cg, nc)
        v = _cell_members(cg, t)[0]
        ig, ncg, invg = rg.refine(_individualize(cg, v, t))
        for w in _cell_members(ch, t):
            ih, nch, invh = rh.refine(_individualize(ch, w, t))
            if invg == invh:
                r = match(ig, ih, ncg)
                if r is not None:
                    return r
        return None

    cg, ncg, invg = rg.refine([0] * n)
    ch, nch, invh = rh.refine([0] * n)
    if invg != invh:
        return None
    return match(cg, ch, ncg)


def is_isomorphism(g: ColoredGraph, h: ColoredGraph, phi: Sequence[int]) -> bool:
    if g.values != h.values or sorted(phi) != list(range(g.n)):
        return False
    return g.permuted(phi).colors == h.colors
