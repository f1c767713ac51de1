"""Association schemes: construction from a design, axioms, eigenmatrices, Krein parameters."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .designs import BlockDesign, VerificationError
from .ratmath import RatMatrix, char_poly, integer_roots, mat_inverse, mat_mul, nullspace


class UnsupportedInstance(ValueError):
    pass


@dataclass(frozen=True)
class AssociationScheme:
    n: int
    d: int
    rel: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        rel = tuple(tuple(int(x) for x in r) for r in self.rel)
        object.__setattr__(self, "rel", rel)
        if len(rel) != self.n or any(len(r) != self.n for r in rel):
            raise ValueError("relation matrix must be n x n")
        seen = set()
        for x in range(self.n):
            if rel[x][x] != 0:
                raise ValueError(f"rel[{x}][{x}] must be 0")
            for y in range(self.n):
                c = rel[x][y]
                if c != rel[y][x]:
                    raise ValueError(f"rel is not symmetric at ({x}, {y})")
                if x != y:
                    if not 1 <= c <= self.d:
                        raise ValueError(f"class {c} at ({x}, {y}) outside 1..{self.d}")
                    seen.add(c)
        if self.n > 1 and seen != set(range(1, self.d + 1)):
            raise ValueError(f"classes {sorted(set(range(1, self.d + 1)) - seen)} never occur")

    def adjacency(self, i: int) -> np.ndarray:
        return (np.array(self.rel, dtype=np.int64) == i).astype(np.int64)


@dataclass(frozen=True)
class SchemeParameters:
    p: tuple
    valencies: tuple[int, ...]
    P: RatMatrix
    Q: RatMatrix
    multiplicities: tuple[int, ...]
    krein: tuple


def scheme_from_design(d: BlockDesign) -> AssociationScheme:
    """Blocks are vertices; distinct blocks meeting in s points are in class 4 - s."""
    if (d.v, d.k, d.b) != (11, 5, 66):
        raise ValueError(f"expected the 4-(11,5,1) design, got v={d.v} k={d.k} b={d.b}")
    sets = [frozenset(b) for b in d.blocks]
    n = len(sets)
    rel = [[0] * n for _ in range(n)]
    for x in range(n):
        for y in range(n):
            if x == y:
                continue
            s = len(sets[x] & sets[y])
            if s not in (1, 2, 3):
                raise VerificationError(
                    f"blocks {d.blocks[x]} and {d.blocks[y]} meet in {s} points", (x, y, s))
            rel[x][y] = 4 - s
    return AssociationScheme(n, 3, tuple(map(tuple, rel)))


def verify_scheme_axioms(s: AssociationScheme) -> tuple:
    """Intersection numbers ``p[i][j][k]`` (nested tuples).

    For every (x, y) in class k, counts z with rel[x][z] = i and rel[z][y] = j
    via the products A_i A_j; raises VerificationError with witness
    ``(i, j, k, (x, y), count, expected)`` at the first non-constant count.
    """
    d = s.d
    rel = np.array(s.rel, dtype=np.int64)
    A = [(rel == i).astype(np.int64) for i in range(d + 1)]
    # first pair (x, y) of each class in row-major order fixes the expected value
    reps = {}
    for k in range(d + 1):
        xs, ys = np.nonzero(A[k])
        reps[k] = (int(xs[0]), int(ys[0]))
    p = [[[0] * (d + 1) for _ in range(d + 1)] for _ in range(d + 1)]
    for i in range(d + 1):
        for j in range(d + 1):
            prod = A[i] @ A[j]
            for k in range(d + 1):
                x0, y0 = reps[k]
                expected = int(prod[x0, y0])
                bad = np.nonzero((prod != expected) & (A[k] == 1))
                if len(bad[0]):
                    x, y = int(bad[0][0]), int(bad[1][0])
                    raise VerificationError(
                        f"p[{i}][{j}][{k}] not constant: {int(prod[x, y])} at {(x, y)} vs {expected}",
                        (i, j, k, (x, y), int(prod[x, y]), expected))
                p[i][j][k] = expected
    return tuple(tuple(tuple(r) for r in pi) for pi in p)


def intersection_matrix(p, i: int) -> RatMatrix:
    """L_i with (L_i)[k][j] = p[i][j][k]."""
    m = len(p)
    return RatMatrix.from_rows([[p[i][j][k] for j in range(m)] for k in range(m)])


def p_tensor_from_matrices(mats) -> tuple:
    """Inverse of :func:`intersection_matrix` over all i."""
    m = len(mats)
    return tuple(tuple(tuple(int(mats[i][k][j]) for k in range(m)) for j in range(m))
                 for i in range(m))


def eigenmatrices(p, n: int) -> tuple[RatMatrix, RatMatrix, tuple[int, ...]]:
    """First and second eigenmatrices and multiplicities.

    Each row of P is a left eigenvector of L_1 normalised to first entry 1;
    it is simultaneously a left eigenvector of every L_j with eigenvalue equal
    to its j-th entry.  Rows are ordered by descending eigenvalue of L_1.
    Q is defined by P Q = n I.
    """
    d = len(p) - 1
    L = [intersection_matrix(p, i) for i in range(d + 1)]
    roots, rem = integer_roots(char_poly(L[1]))
    if rem != [1] or any(mult != 1 for _, mult in roots):
        raise UnsupportedInstance("eigenvalues of L_1 are not simple integers")
    L1t = L[1].transpose()
    rows = []
    for theta, _ in roots:
        shifted = L1t - RatMatrix.identity(d + 1).scale(theta)
        (vec,) = nullspace(shifted)
        if vec[0] == 0:
            raise UnsupportedInstance(f"eigenvector for {theta} has zero first entry")
        w = [x / vec[0] for x in vec]
        row = RatMatrix(1, d + 1, w)
        for j in range(d + 1):
            if mat_mul(row, L[j]) != row.scale(w[j]):
                raise VerificationError(f"row for {theta} is not an eigenvector of L_{j}", (theta, j))
        rows.append(w)
    P = RatMatrix.from_rows(rows)
    Q = mat_inverse(P).scale(n)
    mults = []
    for i in range(d + 1):
        m = Q[0, i]
        if m.denominator != 1:
            raise VerificationError(f"multiplicity m_{i} = {m} is not an integer", (i, m))
        mults.append(int(m))
    return P, Q, tuple(mults)


def krein_parameters(P: RatMatrix, Q: RatMatrix, valencies, multiplicities, n: int) -> tuple:
    """q[i][j][k] = (m_i m_j / n) * sum_l P[i][l] P[j][l] P[k][l] / k_l^2."""
    d = P.rows - 1
    if mat_mul(P, Q) != RatMatrix.identity(d + 1).scale(n):
        raise ValueError("P Q != n I")
    q = []
    for i in range(d + 1):
        qi = []
        for j in range(d + 1):
            qij = []
            for k in range(d + 1):
                s = sum((P[i, l] * P[j, l] * P[k, l] / (valencies[l] ** 2) for l in range(d + 1)),
                        Fraction(0))
                qij.append(Fraction(multiplicities[i] * multiplicities[j], n) * s)
            qi.append(tuple(qij))
        q.append(tuple(qi))
    return tuple(q)


def krein_nonnegative(q) -> bool:
    return all(x >= 0 for a in q for b in a for x in b)


def is_q_polynomial(q) -> bool:
    """Tridiagonal pattern of q[1][j][k] for the ordering E_0, E_1, ..., E_d."""
    m = len(q)
    for j in range(m):
        for k in range(m):
            gap = abs(j - k)
            if gap > 1 and q[1][j][k] != 0:
                return False
            if gap == 1 and q[1][j][k] == 0:
                return False
    return True


def angle_set(Q: RatMatrix) -> tuple[Fraction, ...]:
    """Inner products of the first-eigenspace representation, in class order 1..d."""
    return tuple(Q[j, 1] / Q[0, 1] for j in range(1, Q.rows))


def scheme_parameters(s: AssociationScheme) -> SchemeParameters:
    p = verify_scheme_axioms(s)
    vals = tuple(p[i][i][0] for i in range(s.d + 1))
    P, Q, mults = eigenmatrices(p, s.n)
    q = krein_parameters(P, Q, vals, mults, s.n)
    return SchemeParameters(p, vals, P, Q, mults, q)
