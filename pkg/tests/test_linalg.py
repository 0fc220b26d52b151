"""Exact linear algebra over Q and GF(p)."""

from __future__ import annotations

import flint

from arikikoike.linalg import ExactMatrix, column_space, intersection_dim, rank, row_reduce, solve


def Q(*xs):
    return [flint.fmpq(x) for x in xs]


def F(p, *xs):
    return [flint.nmod(x, p) for x in xs]


def test_rank_examples():
    assert rank([Q(1, 0, 0), Q(0, 1, 0), Q(0, 0, 1)]) == 3
    assert rank([Q(0, 0), Q(0, 0)]) == 0
    assert rank([Q(1, 2), Q(2, 4)]) == 1
    assert rank([]) == 0


def test_rank_depends_on_the_field():
    # determinant 7 vanishes in GF(7)
    assert rank([Q(1, 2), Q(3, 13)]) == 2
    assert rank([F(7, 1, 2), F(7, 3, 13)]) == 1


def test_solve_examples():
    assert solve([Q(2)], Q(1)) == Q(flint.fmpq(1, 2))
    assert solve([Q(0)], Q(1)) is None
    assert solve([], Q(0, 0)) == []
    assert solve([], Q(1, 0)) is None


def test_solve_over_prime_field():
    x = solve([F(5, 1, 1), F(5, 1, 4)], F(5, 2, 0))
    assert x is not None
    assert [x[0] + x[1], x[0] + 4 * x[1]] == F(5, 2, 0)


def test_intersection_dim_examples():
    a = [Q(1, 0, 0), Q(0, 1, 0)]
    b = [Q(0, 1, 0), Q(0, 0, 1)]
    assert intersection_dim(a, b) == 1
    assert intersection_dim(a, [Q(0, 0, 1)]) == 0
    assert intersection_dim(a, a) == 2


def test_row_reduce_pivots():
    red, piv = row_reduce([Q(0, 2, 4), Q(0, 1, 2), Q(1, 0, 1)])
    assert piv == [0, 1]
    assert red == [Q(1, 0, 1), Q(0, 1, 2)]
    assert column_space([Q(0, 2, 4)]) == [Q(0, 1, 2)]


def test_matrix_operations():
    a = ExactMatrix.from_rows([Q(1, 2), Q(3, 4)])
    b = ExactMatrix.from_columns([Q(1, 3), Q(2, 4)])
    assert a == b
    assert a.determinant() == -2
    assert a.trace() == 5
    assert (a @ ExactMatrix.from_rows([Q(1, 0), Q(0, 1)])) == a
    assert (a - a).is_zero()
    assert a.transpose().entries == [Q(1, 3), Q(2, 4)]
    assert a.apply(Q(1, 1)) == Q(3, 7)
    assert (a + a).entries[1] == Q(6, 8)
