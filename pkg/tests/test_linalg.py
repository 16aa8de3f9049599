from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from axial_lab.linalg import (DimensionMismatch, LinAlgError, Matrix, NotSquare, Span, determinant,
                              independent_subset, inverse, kernel_basis, rank, rref, solve)
from axial_lab.scalars import QQ, function_field, prime_field
from oracles import cofactor_det, matmul

F_ETA = function_field(("eta",))
F_A = function_field(("alpha",))
ETA = F_ETA.gen("eta")


def M(rows, field=QQ):
    return Matrix(rows, field)


def test_rref_examples():
    r, rk, piv = rref(M([[2, 4], [1, 2]]))
    assert r == M([[1, 2], [0, 0]]) and rk == 1 and piv == [0]
    eye = Matrix.identity(3, QQ)
    assert rref(eye) == (eye, 3, [0, 1, 2])
    assert rank(M([[1, ETA], [ETA, ETA**2]], F_ETA)) == 1


def test_kernel_examples():
    assert kernel_basis(M([[1, 1], [1, 1]])) == [(Fraction(-1), Fraction(1))]
    assert kernel_basis(Matrix.identity(4, QQ)) == []
    ker = kernel_basis(Matrix.zeros(2, 2, QQ))
    assert len(ker) == 2 and rank(Matrix(ker, QQ)) == 2


def test_determinant_examples():
    alpha = F_A.gen("alpha")
    assert determinant(M([[1, alpha], [alpha, 1]], F_A)) == 1 - alpha**2
    with pytest.raises(NotSquare):
        determinant(M([[1, 2, 3]]))
    assert determinant(Matrix.zeros(0, 0, QQ)) == 1


def test_determinant_two_generated_involution():
    # involution fixing a plane and negating a line, entries in Q(eta, alpha)
    f = function_field(("eta", "alpha"))
    eta, alpha = f.gen("eta"), f.gen("alpha")
    s = 1 / (1 - 2 * eta)
    rows = [[1 - 2 * eta, 0, 0], [4 * alpha * (1 - eta), 1 + 2 * eta, -4],
            [2 * alpha * (1 - eta), 2 * eta, -(1 + 2 * eta)]]
    m = Matrix(rows, f).scale(s)
    assert determinant(m) == -1
    assert cofactor_det([list(r) for r in m.rows], f.zero, f.one) == -1


def test_solve_examples():
    b = (Fraction(3), Fraction(-2), Fraction(7))
    assert solve(Matrix.identity(3, QQ), b) == b
    x = solve(M([[1, 1]]), [2])
    assert M([[1, 1]]).apply(x) == (2,)
    assert x == (2, 0)
    assert solve(M([[1], [1]]), [1, 2]) is None
    with pytest.raises(DimensionMismatch):
        solve(M([[1, 1]]), [1, 2])


def test_inverse_and_errors():
    m = M([[2, 1], [1, 1]])
    assert inverse(m) @ m == Matrix.identity(2, QQ)
    with pytest.raises(LinAlgError):
        inverse(M([[1, 2], [2, 4]]))
    with pytest.raises(DimensionMismatch):
        M([[1, 2], [3]])
    with pytest.raises(DimensionMismatch):
        m @ M([[1, 2, 3]])


def test_gf_determinant():
    gf7 = prime_field(7)
    m = Matrix([[3, 1], [2, 5]], gf7)
    assert determinant(m) == gf7(13)


def test_matrix_json_round_trip():
    m = M([[Fraction(1, 2), -3], [0, 7]])
    assert Matrix.from_json(m.to_json(), QQ) == m
    assert m.to_json() == [["1/2", "-3"], ["0", "7"]]


def test_span_and_independent_subset():
    vecs = [(1, 0, 1), (2, 0, 2), (0, 1, 0), (1, 1, 1), (0, 0, 1)]
    vecs = [tuple(QQ(x) for x in v) for v in vecs]
    assert independent_subset(vecs, QQ) == [0, 2, 4]
    s = Span(3, QQ)
    assert s.add(vecs[0]) and not s.add(vecs[1])
    assert s.contains(vecs[1]) and not s.contains(vecs[2])


# -- properties ------------------------------------------------------------

entries = st.integers(-6, 6)


def q_matrices(n, m=None):
    m = n if m is None else m
    return st.lists(st.lists(entries.map(Fraction), min_size=m, max_size=m), min_size=n, max_size=n)


def eta_matrices(n):
    term = st.tuples(entries, st.integers(0, 2)).map(lambda t: F_ETA(t[0]) * ETA ** t[1])
    cell = st.lists(term, min_size=1, max_size=2).map(lambda ts: sum(ts, F_ETA.zero))
    denom = st.sampled_from([F_ETA.one, 1 - 2 * ETA, 1 + ETA])
    cell = st.tuples(cell, denom).map(lambda t: t[0] / t[1])
    return st.lists(st.lists(cell, min_size=n, max_size=n), min_size=n, max_size=n)


@given(st.integers(1, 4).flatmap(lambda n: st.tuples(st.integers(1, 5).flatmap(lambda c: q_matrices(n, c)))))
def test_kernel_property(data):
    (rows,) = data
    m = M(rows)
    ker = kernel_basis(m)
    assert len(ker) == m.ncols - rank(m)
    for v in ker:
        assert all(x == 0 for x in m.apply(v))
    if ker:
        assert rank(Matrix(ker, QQ)) == len(ker)


@given(st.integers(1, 4).flatmap(q_matrices))
def test_rref_is_reduced(rows):
    r, rk, piv = rref(M(rows))
    for i, p in enumerate(piv):
        assert r[i, p] == 1
        assert all(r[k, p] == 0 for k in range(r.nrows) if k != i)
    assert all(x == 0 for row in r.rows[rk:] for x in row)
    assert rank(Matrix(list(r.rows) + [tuple(x) for x in rows], QQ)) == rk


@given(st.integers(2, 4).flatmap(q_matrices))
def test_determinant_matches_cofactor_q(rows):
    assert determinant(M(rows)) == cofactor_det(rows, Fraction(0), Fraction(1))


@given(st.integers(2, 3).flatmap(eta_matrices))
def test_determinant_matches_cofactor_function_field(rows):
    assert determinant(Matrix(rows, F_ETA)) == cofactor_det(rows, F_ETA.zero, F_ETA.one)


@given(q_matrices(3), q_matrices(3))
def test_determinant_multiplicative(a, b):
    prod = matmul(a, b, Fraction(0))
    assert determinant(M(prod)) == determinant(M(a)) * determinant(M(b))
    assert M(a) @ M(b) == M(prod)


@given(st.sampled_from([5, 7, 11]).flatmap(
    lambda p: st.tuples(st.just(p), st.lists(st.lists(st.integers(0, p - 1), min_size=3, max_size=3),
                                             min_size=3, max_size=3))))
def test_determinant_gf_matches_cofactor(data):
    p, rows = data
    f = prime_field(p)
    rows = [[f(x) for x in r] for r in rows]
    assert determinant(Matrix(rows, f)) == cofactor_det(rows, f.zero, f.one)


@given(st.integers(1, 4).flatmap(lambda n: st.tuples(q_matrices(n), st.lists(entries.map(Fraction), min_size=n, max_size=n))))
def test_solve_property(data):
    rows, b = data
    m = M(rows)
    x = solve(m, b)
    aug_rank = rank(Matrix([list(r) + [bi] for r, bi in zip(rows, b)], QQ))
    if x is None:
        assert aug_rank > rank(m)
    else:
        assert m.apply(x) == tuple(b)
