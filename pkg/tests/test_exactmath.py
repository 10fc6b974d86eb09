import itertools
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from latticespec import exactmath as em
from latticespec.errors import DimensionError, NotPrimitiveError, SingularMatrixError


def leibniz_det(m):
    n = len(m)
    total = 0
    for perm in itertools.permutations(range(n)):
        inversions = sum(1 for i, j in itertools.combinations(range(n), 2) if perm[i] > perm[j])
        term = (-1) ** inversions
        for i in range(n):
            term *= m[i][perm[i]]
        total += term
    return total


def square(n, lo=-6, hi=6):
    return st.lists(st.lists(st.integers(lo, hi), min_size=n, max_size=n), min_size=n, max_size=n)


@pytest.mark.parametrize("m, expected", [
    (em.identity(3), 1),
    ([[1, 0], [-1, 3]], 3),
    ([[0, 1, 0], [0, 0, 1], [-2, -2, -3]], -2),
])
def test_det_examples(m, expected):
    assert em.det(m) == expected


def test_det_rejects_non_square():
    with pytest.raises(DimensionError):
        em.det([[1, 2, 3], [4, 5, 6]])


@given(st.integers(1, 4).flatmap(lambda n: st.tuples(square(n), square(n))))
def test_det_matches_leibniz_and_is_multiplicative(pair):
    a, b = pair
    assert em.det(a) == leibniz_det(a)
    assert em.det(em.matmul(a, b)) == em.det(a) * em.det(b)


def test_solve_examples():
    assert em.solve_rational(em.identity(3), (4, -5, 6)) == (4, -5, 6)
    assert em.solve_rational([[1, -1], [0, 3]], (0, 1)) == (Fraction(1, 3), Fraction(1, 3))
    assert em.solve_rational([[1, -1], [0, 3]], (0, 3)) == (1, 1)


def test_solve_singular():
    with pytest.raises(SingularMatrixError):
        em.solve_rational([[1, 2], [2, 4]], (1, 1))


@given(st.integers(1, 4).flatmap(lambda n: st.tuples(square(n), st.lists(st.integers(-9, 9), min_size=n, max_size=n))))
def test_solve_roundtrip(args):
    m, b = args
    if em.det(m) == 0:
        return
    x = em.solve_rational(m, b)
    assert tuple(sum(Fraction(a) * y for a, y in zip(row, x)) for row in m) == tuple(b)


def check_snf(m, u, d, v):
    assert em.matmul(em.matmul(u, m), v) == d
    assert abs(em.det(u)) == 1 and abs(em.det(v)) == 1
    diag = [d[i][i] for i in range(min(len(d), len(d[0])))]
    assert all(d[i][j] == 0 for i in range(len(d)) for j in range(len(d[0])) if i != j)
    assert all(x >= 0 for x in diag)
    for a, b in zip(diag, diag[1:]):
        assert (b == 0) if a == 0 else (b % a == 0)


@pytest.mark.parametrize("m, diag", [
    ([[2, 0], [0, 3]], [1, 6]),
    (em.identity(3), [1, 1, 1]),
    ([[1, -1], [0, 3]], [1, 3]),
    ([[1, -1], [0, -1]], [1, 1]),
    ([[12, 6, 4, 8], [3, 9, 6, 12], [2, 16, 14, 28], [20, 10, 10, 20]], [1, 10, 30, 0]),
])
def test_snf_examples(m, diag):
    u, d, v = em.snf(m)
    check_snf(m, u, d, v)
    assert [d[i][i] for i in range(len(diag))] == diag


@settings(max_examples=150)
@given(st.integers(1, 4).flatmap(lambda r: st.integers(1, 4).flatmap(
    lambda c: st.lists(st.lists(st.integers(-8, 8), min_size=c, max_size=c), min_size=r, max_size=r))))
def test_snf_contract(m):
    check_snf(m, *em.snf(m))


@pytest.mark.parametrize("q", [(1,), (1, 1, 3), (0, 1), (1, 2, 2, 3), (6, 10, 15), (-3, 5)])
def test_unimodular_completion(q):
    u = em.unimodular_completion(q)
    assert em.matvec(u, q) == (0,) * (len(q) - 1) + (1,)
    assert abs(em.det(u)) == 1


def test_unimodular_completion_rejects_non_primitive():
    with pytest.raises(NotPrimitiveError):
        em.unimodular_completion((2, 4, 6))


@given(st.lists(st.integers(-30, 30), min_size=1, max_size=6))
def test_unimodular_completion_property(q):
    from math import gcd
    g = 0
    for x in q:
        g = gcd(g, x)
    if g != 1:
        return
    u = em.unimodular_completion(q)
    assert em.matvec(u, q) == (0,) * (len(q) - 1) + (1,)
    assert abs(em.det(u)) == 1


def test_adjugate_and_inverse():
    m = [[2, 1, 0], [1, 3, 1], [0, 1, 4]]
    adj = em.adjugate(m)
    assert em.matmul(m, adj) == tuple(tuple(em.det(m) * int(i == j) for j in range(3)) for i in range(3))
    with pytest.raises(SingularMatrixError):
        em.inverse_unimodular(m)
    u = [[1, 2], [1, 3]]
    assert em.matmul(u, em.inverse_unimodular(u)) == em.identity(2)


def test_lll_keeps_lattice_and_shortens():
    basis = [[1, 0, 0], [903, 1, 0], [5, 17, 1]]
    t, r = em.lll_reduce(basis)
    assert abs(em.det(t)) == 1
    assert em.matmul(t, basis) == r
    assert max(abs(x) for row in r for x in row) == 1


def test_cofactor_normal_is_orthogonal():
    vecs = [[1, 2, 3, 4], [0, 1, -1, 2], [3, 0, 1, 1]]
    a = em.cofactor_normal(vecs)
    assert any(a)
    assert all(sum(x * y for x, y in zip(a, v)) == 0 for v in vecs)
    assert not any(em.cofactor_normal([[1, 2, 3], [2, 4, 6]]))
