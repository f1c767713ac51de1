"""Exact spherical representation of the scheme in its 10-dimensional eigenspace.

Points are never given coordinates.  A point u on S^9 is encoded by its
frame vector: the 11 inner products of u with the vertices of a fixed regular
simplex (the clique C1 through x).  With G the simplex Gram matrix and G+ its
pseudo-inverse, <u, u'> = v^T G+ v' for consistent (zero-sum) frame vectors.

Naming: the eigenspace projector is never materialised here; "edge relation"
always means the graph on Y1 whose edges are pairs at inner product alpha2.
"""
from __future__ import annotations

import hashlib
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import factorial
from typing import Sequence

import numpy as np

from . import graphs
from .designs import VerificationError
from .graphs import ColoredGraph
from .ratmath import RatMatrix, mat_mul, rank, rat_str
from .reference import ALPHA1, ALPHA2, ALPHA3, ANGLES
from .scheme import AssociationScheme, verify_scheme_axioms

FrameVector = tuple  # length-11 tuple of Fractions

M = 11
SCALE = 30            # every entry of a candidate frame vector is a multiple of 1/30
IP_DENOM = 990        # <a, b> = (10/11) a.b = (30a).(30b) / 990 for zero-sum a, b


@dataclass(frozen=True)
class SimplexFrame:
    m: int
    G: RatMatrix
    Gpinv: RatMatrix


@dataclass(frozen=True)
class SphericalConfig:
    points: tuple
    labels: tuple[str, ...]


def build_frame() -> SimplexFrame:
    """Regular 11-point simplex Gram and its Moore-Penrose inverse, certified."""
    G = RatMatrix(M, M, [1 if i == j else ALPHA2 for i in range(M) for j in range(M)])
    Gp = RatMatrix(M, M, [Fraction(10, 11) * ((1 if i == j else 0) - Fraction(1, 11))
                          for i in range(M) for j in range(M)])
    GGp = mat_mul(G, Gp)
    GpG = mat_mul(Gp, G)
    checks = {
        "G Gp G = G": mat_mul(GGp, G) == G,
        "Gp G Gp = Gp": mat_mul(GpG, Gp) == Gp,
        "G Gp symmetric": GGp == GGp.transpose(),
        "Gp G symmetric": GpG == GpG.transpose(),
        "G 1 = 0": all(sum(G.row(i)) == 0 for i in range(M)),
        "rank G = 10": rank(G) == M - 1,
    }
    failed = [k for k, ok in checks.items() if not ok]
    if failed:
        raise VerificationError(f"simplex frame certification failed: {failed}", failed)
    return SimplexFrame(M, G, Gp)


def _check_consistent(v: Sequence) -> None:
    if len(v) != M:
        raise ValueError(f"frame vector must have {M} entries")
    if sum(v) != 0:
        raise ValueError(f"frame vector {tuple(map(rat_str, v))} is not in the row space of G")


def frame_ip(f: SimplexFrame, a: Sequence, b: Sequence) -> Fraction:
    """a^T G+ b; both arguments must have zero entry sum."""
    _check_consistent(a)
    _check_consistent(b)
    Gp = f.Gpinv
    return sum((a[i] * Gp[i, j] * b[j] for i in range(M) for j in range(M) if a[i] and b[j]),
               Fraction(0))


def simplex_vectors(f: SimplexFrame) -> list[FrameVector]:
    """Frame vectors of C1 itself: the rows of G (row 0 is x)."""
    return [tuple(f.G.row(i)) for i in range(M)]


def scaled(vectors: Sequence[Sequence[Fraction]]) -> np.ndarray:
    """Frame vectors times SCALE as an int64 array; rejects non-multiples of 1/30."""
    out = np.empty((len(vectors), M), dtype=np.int64)
    for r, v in enumerate(vectors):
        for t, x in enumerate(v):
            y = x * SCALE
            if y.denominator != 1:
                raise ValueError(f"entry {x} is not a multiple of 1/{SCALE}")
            out[r, t] = int(y)
    if np.any(out.sum(axis=1) != 0):
        raise ValueError("inconsistent frame vector (nonzero entry sum)")
    return out


def ip_numerators(A: np.ndarray, B: np.ndarray | None = None) -> np.ndarray:
    """Inner products times IP_DENOM, for scaled zero-sum frame vectors."""
    return A @ (A if B is None else B).T


ANGLE_NUMS = tuple(int(a * IP_DENOM) for a in ANGLES)   # 264, -99, -462
ALPHA2_NUM = ANGLE_NUMS[1]


def _pattern_vectors(prefix: tuple, counts: dict) -> list[FrameVector]:
    """All vectors ``prefix + w`` with w a rearrangement of the given multiset."""
    values = sorted(counts)
    length = sum(counts.values())
    out = []

    def rec(pos_left: list[int], assign: dict, vi: int):
        if vi == len(values) - 1:
            full = dict(assign)
            for p in pos_left:
                full[p] = values[vi]
            out.append(prefix + tuple(full[p] for p in range(length)))
            return
        val = values[vi]
        for chosen in combinations(pos_left, counts[val]):
            nxt = dict(assign)
            for p in chosen:
                nxt[p] = val
            rec([p for p in pos_left if p not in chosen], nxt, vi + 1)

    rec(list(range(length)), {}, 0)
    return sorted(out)


def _filter_sphere(f: SimplexFrame, cands: list[FrameVector]) -> list[FrameVector]:
    keep = []
    for v in cands:
        if sum(v) != 0:
            continue
        a = scaled([v])
        if int(ip_numerators(a)[0, 0]) == IP_DENOM:
            keep.append(v)
    return keep


def multinomial(*ks: int) -> int:
    out = factorial(sum(ks))
    for k in ks:
        out //= factorial(k)
    return out


def enumerate_Y1(f: SimplexFrame) -> list[FrameVector]:
    """Candidates for C2 \\ {x}: (alpha2, rearrangement of {a1^6, a2^1, a3^3})."""
    cands = _pattern_vectors((ALPHA2,), {ALPHA1: 6, ALPHA2: 1, ALPHA3: 3})
    return _filter_sphere(f, cands)


def enumerate_Y_candidates(f: SimplexFrame) -> list[FrameVector]:
    """All unit consistent rearrangements of {a1^6, a2^2, a3^3}."""
    return _filter_sphere(f, _pattern_vectors((), {ALPHA1: 6, ALPHA2: 2, ALPHA3: 3}))


def enumerate_Y(f: SimplexFrame, fixed_c2: Sequence[FrameVector]) -> list[FrameVector]:
    fixed = set(fixed_c2)
    return [v for v in enumerate_Y_candidates(f) if v not in fixed]


def forced_pattern(num_alpha2: int = 2, length: int = M) -> tuple[int, int]:
    """Solve a + b = length - num_alpha2 and zero entry sum for (#alpha1, #alpha3)."""
    # a*alpha1 + num_alpha2*alpha2 + b*alpha3 = 0 with a + b = rest
    rest = length - num_alpha2
    sols = [(a, rest - a) for a in range(rest + 1)
            if a * ALPHA1 + num_alpha2 * ALPHA2 + (rest - a) * ALPHA3 == 0]
    if len(sols) != 1:
        raise VerificationError(f"pattern not forced: {sols}", sols)
    return sols[0]


def fix_C2(f: SimplexFrame, C: RatMatrix) -> list[FrameVector]:
    """Frame vectors of the rows of V2 = C V1, i.e. the rows of C G, certified."""
    CG = mat_mul(C, f.G)
    vecs = [tuple(CG.row(i)) for i in range(CG.rows)]
    y1_pattern = sorted([ALPHA1] * 6 + [ALPHA2] + [ALPHA3] * 3)
    for i, v in enumerate(vecs):
        if frame_ip(f, v, v) != 1:
            raise VerificationError(f"C2 vector {i} is not a unit vector", ("norm", i))
        if v[0] != ALPHA2:
            raise VerificationError(f"C2 vector {i} has <y, x> = {v[0]}", ("x", i))
        if sorted(v[1:]) != y1_pattern:
            raise VerificationError(f"C2 vector {i} is not in Y1", ("y1", i))
    for i, j in combinations(range(len(vecs)), 2):
        ip = frame_ip(f, vecs[i], vecs[j])
        if ip != ALPHA2:
            raise VerificationError(f"C2 vectors {i}, {j} have inner product {ip}", ("pair", i, j))
    return vecs


def y1_graph(f: SimplexFrame, Y1: Sequence[FrameVector]) -> ColoredGraph:
    """Edge relation on Y1: inner product equal to alpha2."""
    S = ip_numerators(scaled(Y1))
    return ColoredGraph.simple(S == ALPHA2_NUM)


def gram_numerators(vectors: Sequence[FrameVector]) -> np.ndarray:
    return ip_numerators(scaled(vectors))


def gram_graph(num: np.ndarray, tags=None) -> ColoredGraph:
    """Complete graph colored by exact inner products num / IP_DENOM."""
    n = num.shape[0]
    off = ~np.eye(n, dtype=bool)
    if n and np.any(np.diag(num) != IP_DENOM):
        raise VerificationError("Gram diagonal is not all 1", ("diag",))
    present = np.unique(num[off]) if n > 1 else np.array([], dtype=np.int64)
    lut = {int(v): t + 1 for t, v in enumerate(present)}
    m = np.zeros((n, n), dtype=np.uint8)
    for v, lab in lut.items():
        m[(num == v) & off] = lab
    names = ("diag",) + tuple(rat_str(Fraction(int(v), IP_DENOM)) for v in present)
    return ColoredGraph(n, m.tobytes(), names, tags)


def gram_strings(vectors: Sequence[FrameVector]) -> list[list[str]]:
    num = gram_numerators(vectors)
    return [[rat_str(Fraction(int(x), IP_DENOM)) for x in row] for row in num]


# -- every order-10 clique of the Y1 graph completes C1 the same way

def _lemma2_chunk(args):
    num_all, cliques, ref_canon = args
    base = list(range(M))
    out = []
    for cl in cliques:
        idx = base + [M + i for i in cl]
        g = gram_graph(num_all[np.ix_(idx, idx)])
        cf = graphs.canonical_form(g)
        out.append((cf.digest, cf.canon == ref_canon))
    return out


@dataclass
class Lemma2Report:
    cliques: int
    reference_digest: str
    all_equal: bool
    first_divergence: int | None
    sample_size: int
    sample_isomorphisms_ok: bool
    gram_diagonal_ok: bool
    reference_gram: list[list[str]]


def lemma2_check(f: SimplexFrame, Y1: Sequence[FrameVector], fixed_c2: Sequence[FrameVector],
                 cliques: Sequence[Sequence[int]], threads: int = 1, sample_fraction: float = 0.01,
                 seed: int = 20240101) -> Lemma2Report:
    C1 = simplex_vectors(f)
    ref_vecs = C1 + list(fixed_c2)
    ref_graph = gram_graph(gram_numerators(ref_vecs))
    ref = graphs.canonical_form(ref_graph)
    num_all = gram_numerators(C1 + list(Y1))
    cliques = [tuple(c) for c in cliques]
    if threads <= 1 or len(cliques) < 2:
        results = _lemma2_chunk((num_all, cliques, ref.canon))
    else:
        size = max(1, len(cliques) // (threads * 8))
        chunks = [(num_all, cliques[i:i + size], ref.canon) for i in range(0, len(cliques), size)]
        with ProcessPoolExecutor(max_workers=threads) as ex:
            results = [r for part in ex.map(_lemma2_chunk, chunks) for r in part]
    first_bad = next((i for i, (dg, same) in enumerate(results)
                      if dg != ref.digest or not same), None)
    rng = random.Random(seed)
    k = max(1, round(len(cliques) * sample_fraction)) if cliques else 0
    sample = sorted(rng.sample(range(len(cliques)), k)) if k else []
    sample_ok = True
    for i in sample:
        idx = list(range(M)) + [M + j for j in cliques[i]]
        g = gram_graph(num_all[np.ix_(idx, idx)])
        phi = graphs.find_isomorphism(g, ref_graph)
        if phi is None or not graphs.is_isomorphism(g, ref_graph, phi):
            sample_ok = False
            break
    return Lemma2Report(len(cliques), ref.digest, first_bad is None, first_bad, len(sample),
                        sample_ok, True, gram_strings(ref_vecs))


# -- the set Z and its split

def filter_Z(f: SimplexFrame, Y: Sequence[FrameVector], fixed_c2: Sequence[FrameVector]) -> list[FrameVector]:
    """Members of Y whose inner product with every fixed C2 vector is an angle."""
    S = ip_numerators(scaled(Y), scaled(fixed_c2))
    ok = np.isin(S, ANGLE_NUMS).all(axis=1)
    return [v for v, keep in zip(Y, ok) if keep]


@dataclass
class ZSplit:
    Z1: list
    Z2: list
    component_sizes: tuple[int, ...]
    cross_outside_angles: bool
    angles_Z1: tuple[str, ...]
    angles_Z2: tuple[str, ...]
    digest_Z1: str
    digest_Z2: str
    isomorphism_witness: list[int] | None


def split_Z(f: SimplexFrame, Z: Sequence[FrameVector], fixed_c2: Sequence[FrameVector]) -> ZSplit:
    """Compatibility graph on Z must be two disjoint 45-cliques; the two completions agree."""
    Z = list(Z)
    n = len(Z)
    S = ip_numerators(scaled(Z))
    compat = np.isin(S, ANGLE_NUMS)
    np.fill_diagonal(compat, False)
    # connected components, labelled from the lexicographically least member
    comp = [-1] * n
    comps = []
    for s in range(n):
        if comp[s] >= 0:
            continue
        comp[s] = len(comps)
        members = [s]
        stack = [s]
        while stack:
            u = stack.pop()
            for w in np.nonzero(compat[u])[0]:
                w = int(w)
                if comp[w] < 0:
                    comp[w] = comp[s]
                    members.append(w)
                    stack.append(w)
        comps.append(sorted(members))
    sizes = tuple(len(c) for c in comps)
    if len(comps) != 2:
        raise VerificationError(f"compatibility graph has {len(comps)} components {sizes}", sizes)
    for ci, c in enumerate(comps):
        sub = compat[np.ix_(c, c)]
        if int(sub.sum()) != len(c) * (len(c) - 1):
            raise VerificationError(f"component {ci} is not a clique", (ci,))
    a, b = comps
    cross = S[np.ix_(a, b)]
    cross_out = not np.isin(cross, ANGLE_NUMS).any()
    if not cross_out:
        raise VerificationError("a cross pair has an inner product in the angle set", ("cross",))
    Z1 = [Z[i] for i in a]
    Z2 = [Z[i] for i in b]

    def angles(part):
        num = ip_numerators(scaled(part))
        off = ~np.eye(len(part), dtype=bool)
        return tuple(rat_str(Fraction(int(x), IP_DENOM)) for x in np.unique(num[off]))

    C1 = simplex_vectors(f)
    g1 = gram_graph(gram_numerators(C1 + list(fixed_c2) + Z1))
    g2 = gram_graph(gram_numerators(C1 + list(fixed_c2) + Z2))
    d1 = graphs.canonical_form(g1)
    d2 = graphs.canonical_form(g2)
    if d1.canon != d2.canon:
        raise VerificationError("the two 66-point Gram matrices are not equivalent", (d1.digest, d2.digest))
    phi = graphs.find_isomorphism(g1, g2)
    return ZSplit(Z1, Z2, sizes, cross_out, angles(Z1), angles(Z2), d1.digest, d2.digest, phi)


# -- final configuration

def assemble_config(f: SimplexFrame, fixed_c2, Z1) -> SphericalConfig:
    pts = simplex_vectors(f) + list(fixed_c2) + list(Z1)
    labels = ([f"C1:{i}" for i in range(M)] + [f"C2:{i}" for i in range(len(fixed_c2))]
              + [f"Z1:{i}" for i in range(len(Z1))])
    return SphericalConfig(tuple(pts), tuple(labels))


def config_scheme(f: SimplexFrame, config: SphericalConfig) -> AssociationScheme:
    """Classes from inner products: alpha_j -> j; anything else is an error."""
    num = gram_numerators(config.points)
    n = len(config.points)
    cls = {ANGLE_NUMS[j]: j + 1 for j in range(3)}
    rel = [[0] * n for _ in range(n)]
    for x in range(n):
        if int(num[x, x]) != IP_DENOM:
            raise VerificationError(f"point {config.labels[x]} is not a unit vector", (x,))
        for y in range(n):
            if x != y:
                c = cls.get(int(num[x, y]))
                if c is None:
                    ip = Fraction(int(num[x, y]), IP_DENOM)
                    raise VerificationError(
                        f"<{config.labels[x]}, {config.labels[y]}> = {ip} is not an angle", (x, y, ip))
                rel[x][y] = c
    return AssociationScheme(n, 3, tuple(map(tuple, rel)))


def final_scheme_check(f: SimplexFrame, config: SphericalConfig, expected_p) -> tuple[AssociationScheme, tuple, bool]:
    s = config_scheme(f, config)
    p = verify_scheme_axioms(s)
    return s, p, p == tuple(tuple(tuple(r) for r in pi) for pi in expected_p)


def vectors_fingerprint(vectors) -> str:
    h = hashlib.sha256()
    for v in vectors:
        h.update((",".join(rat_str(x) for x in v) + "\n").encode())
    return h.hexdigest()
