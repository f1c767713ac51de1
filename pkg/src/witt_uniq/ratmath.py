"""Exact rational scalars, vectors and dense matrices.

Scalars are :class:`fractions.Fraction`; matrices are immutable row-major
tuples.  Inversion and rank use fraction-free (Bareiss) elimination on an
integer matrix obtained by clearing denominators.
"""
from __future__ import annotations

from fractions import Fraction
from math import lcm
from typing import Iterable, Sequence

Rational = Fraction


class SingularMatrixError(ValueError):
    pass


class DimensionError(ValueError):
    pass


def rat(x) -> Fraction:
    """Coerce ints, Fractions and "p/q" strings to a Fraction."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, float):
        raise TypeError("floats are not accepted in exact arithmetic")
    return Fraction(x)


def rat_str(x: Fraction) -> str:
    x = rat(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


class RatMatrix:
    __slots__ = ("rows", "cols", "entries")

    def __init__(self, rows: int, cols: int, entries: Iterable):
        ent = tuple(rat(e) for e in entries)
        if len(ent) != rows * cols:
            raise DimensionError(f"expected {rows * cols} entries, got {len(ent)}")
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "cols", cols)
        object.__setattr__(self, "entries", ent)

    def __setattr__(self, name, value):
        raise AttributeError("RatMatrix is immutable")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence]) -> "RatMatrix":
        rows = [list(r) for r in rows]
        ncols = len(rows[0]) if rows else 0
        if any(len(r) != ncols for r in rows):
            raise DimensionError("ragged rows")
        return cls(len(rows), ncols, [e for r in rows for e in r])

    @classmethod
    def identity(cls, n: int) -> "RatMatrix":
        return cls(n, n, [1 if i == j else 0 for i in range(n) for j in range(n)])

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "RatMatrix":
        return cls(rows, cols, [0] * (rows * cols))

    def __getitem__(self, ij) -> Fraction:
        i, j = ij
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> tuple[Fraction, ...]:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def col(self, j: int) -> tuple[Fraction, ...]:
        return self.entries[j::self.cols]

    def tolist(self) -> list[list[Fraction]]:
        return [list(self.row(i)) for i in range(self.rows)]

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    def transpose(self) -> "RatMatrix":
        return RatMatrix(self.cols, self.rows,
                         [self[i, j] for j in range(self.cols) for i in range(self.rows)])

    T = property(transpose)

    def scale(self, c) -> "RatMatrix":
        c = rat(c)
        return RatMatrix(self.rows, self.cols, [c * e for e in self.entries])

    def __add__(self, other: "RatMatrix") -> "RatMatrix":
        if self.shape != other.shape:
            raise DimensionError(f"cannot add {self.shape} and {other.shape}")
        return RatMatrix(self.rows, self.cols, [a + b for a, b in zip(self.entries, other.entries)])

    def __sub__(self, other: "RatMatrix") -> "RatMatrix":
        return self + other.scale(-1)

    def __matmul__(self, other: "RatMatrix") -> "RatMatrix":
        return mat_mul(self, other)

    def __eq__(self, other) -> bool:
        return (isinstance(other, RatMatrix) and self.shape == other.shape
                and self.entries == other.entries)

    def __hash__(self) -> int:
        return hash((self.rows, self.cols, self.entries))

    def __repr__(self) -> str:
        body = "; ".join(" ".join(rat_str(e) for e in self.row(i)) for i in range(self.rows))
        return f"RatMatrix({self.rows}x{self.cols}: {body})"

    def to_strings(self) -> list[list[str]]:
        return [[rat_str(e) for e in self.row(i)] for i in range(self.rows)]

    @classmethod
    def from_strings(cls, rows: Sequence[Sequence[str]]) -> "RatMatrix":
        return cls.from_rows([[Fraction(s) for s in r] for r in rows])


def mat_mul(a: RatMatrix, b: RatMatrix) -> RatMatrix:
    if a.cols != b.rows:
        raise DimensionError(f"cannot multiply {a.shape} by {b.shape}")
    bcols = [b.col(j) for j in range(b.cols)]
    out = []
    for i in range(a.rows):
        r = a.row(i)
        for c in bcols:
            out.append(sum((x * y for x, y in zip(r, c) if x and y), Fraction(0)))
    return RatMatrix(a.rows, b.cols, out)


def mat_vec(a: RatMatrix, v: Sequence) -> tuple[Fraction, ...]:
    if a.cols != len(v):
        raise DimensionError(f"cannot apply {a.shape} to vector of length {len(v)}")
    v = [rat(x) for x in v]
    return tuple(sum((x * y for x, y in zip(a.row(i), v)), Fraction(0)) for i in range(a.rows))


def dot(u: Sequence, v: Sequence) -> Fraction:
    if len(u) != len(v):
        raise DimensionError("vector lengths differ")
    return sum((rat(x) * rat(y) for x, y in zip(u, v)), Fraction(0))


def _integer_rows(a: RatMatrix) -> list[list[int]]:
    """Scale each row by the lcm of its denominators."""
    out = []
    for i in range(a.rows):
        r = a.row(i)
        m = lcm(*(e.denominator for e in r)) if r else 1
        out.append([int(e * m) for e in r])
    return out


def _bareiss(m: list[list[int]], ncols_pivot: int) -> tuple[list[list[int]], list[int]]:
    """In-place fraction-free forward elimination.

    Pivots are taken from the first ``ncols_pivot`` columns, first nonzero row
    in column order.  Returns the echelon matrix and the pivot columns.
    """
    nrows = len(m)
    ncols = len(m[0]) if m else 0
    prev = 1
    r = 0
    pivots = []
    for c in range(ncols_pivot):
        if r == nrows:
            break
        p = next((i for i in range(r, nrows) if m[i][c] != 0), None)
        if p is None:
            continue
        if p != r:
            m[r], m[p] = m[p], m[r]
        piv = m[r][c]
        for i in range(r + 1, nrows):
            mic = m[i][c]
            row_i = m[i]
            row_r = m[r]
            for j in range(c + 1, ncols):
                # exact division is guaranteed by Sylvester's identity
                row_i[j] = (piv * row_i[j] - mic * row_r[j]) // prev
            row_i[c] = 0
        prev = piv
        pivots.append(c)
        r += 1
    return m, pivots


def rank(a: RatMatrix) -> int:
    _, pivots = _bareiss(_integer_rows(a), a.cols)
    return len(pivots)


def determinant(a: RatMatrix) -> Fraction:
    if a.rows != a.cols:
        raise DimensionError("determinant of a non-square matrix")
    n = a.rows
    if n == 0:
        return Fraction(1)
    scale = Fraction(1)
    m = []
    for i in range(n):
        r = a.row(i)
        d = lcm(*(e.denominator for e in r))
        scale /= d
        m.append([int(e * d) for e in r])
    swaps = 0
    prev = 1
    for c in range(n):
        p = next((i for i in range(c, n) if m[i][c] != 0), None)
        if p is None:
            return Fraction(0)
        if p != c:
            m[c], m[p] = m[p], m[c]
            swaps += 1
        piv = m[c][c]
        for i in range(c + 1, n):
            for j in range(c + 1, n):
                m[i][j] = (piv * m[i][j] - m[i][c] * m[c][j]) // prev
            m[i][c] = 0
        prev = piv
    det = m[n - 1][n - 1] * (-1 if swaps % 2 else 1)
    return det * scale


def mat_inverse(a: RatMatrix) -> RatMatrix:
    """Inverse by Bareiss elimination on ``[A | I]`` followed by back substitution."""
    if a.rows != a.cols:
        raise DimensionError(f"cannot invert a {a.shape} matrix")
    n = a.rows
    ints = _integer_rows(a)
    row_scale = [lcm(*(e.denominator for e in a.row(i))) for i in range(n)]
    aug = [ints[i] + [row_scale[i] if j == i else 0 for j in range(n)] for i in range(n)]
    # row swaps in _bareiss permute the augmented identity along with A
    echelon, pivots = _bareiss(aug, n)
    if len(pivots) < n:
        raise SingularMatrixError("matrix is singular")
    # back substitution over Fractions on the (integer) upper-triangular system
    x = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n - 1, -1, -1):
        row = echelon[i]
        piv = row[i]
        for j in range(n):
            s = Fraction(row[n + j])
            for k in range(i + 1, n):
                if row[k]:
                    s -= row[k] * x[k][j]
            x[i][j] = s / piv
    return RatMatrix.from_rows(x)


def nullspace(a: RatMatrix) -> list[tuple[Fraction, ...]]:
    """Basis of the right kernel, one vector per free column (free entry = 1)."""
    m, pivots = _bareiss(_integer_rows(a), a.cols)
    r = len(pivots)
    free = [c for c in range(a.cols) if c not in pivots]
    basis = []
    for f in free:
        x = [Fraction(0)] * a.cols
        x[f] = Fraction(1)
        for i in range(r - 1, -1, -1):
            pc = pivots[i]
            s = Fraction(0)
            for j in range(pc + 1, a.cols):
                if m[i][j]:
                    s += m[i][j] * x[j]
            x[pc] = -s / m[i][pc]
        basis.append(tuple(x))
    return basis


def char_poly(a: RatMatrix) -> list[Fraction]:
    """Monic characteristic polynomial, highest degree first (Faddeev-LeVerrier)."""
    if a.rows != a.cols:
        raise DimensionError("characteristic polynomial of a non-square matrix")
    n = a.rows
    coeffs = [Fraction(1)]
    ident = RatMatrix.identity(n)
    m = RatMatrix.zeros(n, n)
    c = Fraction(1)
    for k in range(1, n + 1):
        m = mat_mul(a, m) + ident.scale(c)
        am = mat_mul(a, m)
        c = -sum((am[i, i] for i in range(n)), Fraction(0)) / k
        coeffs.append(c)
    return coeffs


def poly_eval(coeffs: Sequence, x) -> Fraction:
    acc = Fraction(0)
    for c in coeffs:
        acc = acc * x + c
    return acc


def _divisors(n: int) -> list[int]:
    n = abs(n)
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def _deflate(coeffs: list[int], r: int) -> list[int]:
    out = [coeffs[0]]
    for c in coeffs[1:-1]:
        out.append(c + out[-1] * r)
    return out


def integer_roots(coeffs: Sequence) -> tuple[list[tuple[int, int]], list[int]]:
    """Integer roots of a monic integer polynomial (highest degree first).

    Returns ``(roots, remainder)`` where ``roots`` is a list of
    ``(root, multiplicity)`` in descending root order and ``remainder`` is the
    monic cofactor left after deflating every integer root.
    """
    cs = [rat(c) for c in coeffs]
    if cs[0] != 1 or any(c.denominator != 1 for c in cs):
        raise ValueError("polynomial must be monic with integer coefficients")
    poly = [int(c) for c in cs]
    found: dict[int, int] = {}
    while len(poly) > 1 and poly[-1] == 0:
        found[0] = found.get(0, 0) + 1
        poly = poly[:-1]
    progress = True
    while progress and len(poly) > 1:
        progress = False
        for d in _divisors(poly[-1]):
            for r in (d, -d):
                if poly_eval(poly, r) == 0:
                    found[r] = found.get(r, 0) + 1
                    poly = _deflate(poly, r)
                    progress = True
                    break
            if progress:
                break
    return sorted(found.items(), key=lambda t: -t[0]), poly
