from fractions import Fraction as F

import pytest

from witt_uniq import reference
from witt_uniq.designs import VerificationError
from witt_uniq.ratmath import RatMatrix, mat_mul
from witt_uniq.scheme import (AssociationScheme, UnsupportedInstance, angle_set, eigenmatrices,
                              intersection_matrix, is_q_polynomial, krein_nonnegative,
                              krein_parameters, p_tensor_from_matrices, scheme_parameters,
                              verify_scheme_axioms)


def brute_force_p(s):
    """Triple loop over (x, y, z); returns p or None if some count is not constant."""
    d = s.d
    table = {}
    for x in range(s.n):
        rx = s.rel[x]
        for y in range(s.n):
            k = rx[y]
            counts = [[0] * (d + 1) for _ in range(d + 1)]
            for z in range(s.n):
                counts[rx[z]][s.rel[z][y]] += 1
            if k in table:
                if table[k] != counts:
                    return None
            else:
                table[k] = counts
    return tuple(tuple(tuple(table[k][i][j] for k in range(d + 1)) for j in range(d + 1))
                 for i in range(d + 1))


def test_axioms_match_brute_force(witt_scheme):
    p = verify_scheme_axioms(witt_scheme)
    assert p == brute_force_p(witt_scheme)


def test_rel_partition(witt_scheme):
    rel = witt_scheme.rel
    for x in range(66):
        for y in range(66):
            assert rel[x][y] == rel[y][x]
            assert (rel[x][y] == 0) == (x == y)


def test_p_matches_reference(witt_scheme):
    p = verify_scheme_axioms(witt_scheme)
    for i in range(4):
        assert intersection_matrix(p, i).tolist() == [list(r) for r in reference.L_MATRICES[i]]
    assert p_tensor_from_matrices(reference.L_MATRICES) == p


def test_eigenmatrices(witt_scheme):
    sp = scheme_parameters(witt_scheme)
    assert sp.P == reference.P
    assert sp.Q == reference.Q
    assert sp.multiplicities == (1, 10, 44, 11)
    assert sp.valencies == (1, 30, 20, 15)
    assert mat_mul(sp.P, sp.Q) == RatMatrix.identity(4).scale(66)
    assert sp.P.row(0) == sp.valencies
    assert all(sp.P[i, 0] == 1 and sp.Q[i, 0] == 1 for i in range(4))
    for i in range(4):
        for j in range(4):
            assert sp.multiplicities[i] * sp.P[i, j] == sp.valencies[j] * sp.Q[j, i]
    assert [sp.P[i, 1] for i in range(4)] == [30, 8, -1, -6]


def test_krein(witt_scheme):
    sp = scheme_parameters(witt_scheme)
    q, m = sp.krein, sp.multiplicities
    assert krein_nonnegative(q)
    assert is_q_polynomial(q)
    for i in range(4):
        for j in range(4):
            assert q[i][j][0] == (m[i] if i == j else 0)
            for k in range(4):
                assert q[i][j][k] == q[j][i][k]
                assert m[k] * q[i][j][k] == m[j] * q[i][k][j]


def test_q_polynomial_detects_break():
    q = [[[F(0)] * 4 for _ in range(4)] for _ in range(4)]
    for j in range(4):
        for k in range(4):
            if abs(j - k) == 1:
                q[1][j][k] = F(1)
    assert is_q_polynomial(q)
    q[1][0][2] = F(1)
    assert not is_q_polynomial(q)
    q[1][0][2] = F(0)
    q[1][2][3] = F(0)
    assert not is_q_polynomial(q)


def test_angle_set():
    assert angle_set(reference.Q) == (F(4, 15), F(-1, 10), F(-7, 15))
    assert F(4, 15) == F(8, 3) / 10


def test_trivial_one_class_scheme():
    s = AssociationScheme(3, 1, ((0, 1, 1), (1, 0, 1), (1, 1, 0)))
    p = verify_scheme_axioms(s)
    assert p[1][1][1] == 1 and p[1][1][0] == 2
    P, Q, mults = eigenmatrices(p, 3)
    assert P.tolist() == [[1, 2], [1, -1]]
    assert mults == (1, 2)
    assert mat_mul(P, Q) == RatMatrix.identity(2).scale(3)
    q = krein_parameters(P, Q, (1, 2), mults, 3)
    assert krein_nonnegative(q)


def test_axiom_violation_witness():
    # path on 4 vertices: distances as classes, not a scheme
    rel = [[abs(i - j) for j in range(4)] for i in range(4)]
    s = AssociationScheme(4, 3, rel)
    with pytest.raises(VerificationError) as exc:
        verify_scheme_axioms(s)
    i, j, k, (x, y), got, want = exc.value.witness
    assert got != want and s.rel[x][y] == k
    assert brute_force_p(s) is None


def test_repeated_eigenvalue_unsupported():
    # class 1 is a perfect matching on 4 vertices: L_1 has eigenvalue 1 twice
    s = AssociationScheme(4, 2, ((0, 1, 2, 2), (1, 0, 2, 2), (2, 2, 0, 1), (2, 2, 1, 0)))
    p = verify_scheme_axioms(s)
    with pytest.raises(UnsupportedInstance):
        eigenmatrices(p, 4)


@pytest.mark.parametrize("rel", [
    ((0, 1), (2, 0)),
    ((1, 1), (1, 0)),
    ((0, 1, 1), (1, 0, 1), (1, 1, 0), ),
])
def test_invalid_relations(rel):
    with pytest.raises(ValueError):
        AssociationScheme(len(rel), 2, rel)
