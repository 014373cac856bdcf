from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from eqsig.matrix import SymIntMatrix, det, rank, solve

from oracles import det_cofactor, det_leibniz
from strategies import sym_matrices


def test_identity_det():
    assert det(SymIntMatrix.identity(3)) == 1
    assert det([]) == 1


def test_rejects_nonsymmetric():
    with pytest.raises(ValueError, match="not symmetric"):
        SymIntMatrix([[1, 2], [3, 4]])


def test_rejects_non_integer_entries():
    with pytest.raises(TypeError):
        SymIntMatrix([[1.0]])
    with pytest.raises(TypeError):
        SymIntMatrix([[True]])


def test_det_needs_row_swap():
    assert det([[0, 1], [1, 0]]) == -1
    assert det([[0, 0, 1], [0, 1, 0], [1, 0, 0]]) == -1


@settings(max_examples=200)
@given(st.integers(1, 6).flatmap(lambda m: st.lists(
    st.lists(st.integers(-9, 9), min_size=m, max_size=m), min_size=m, max_size=m)))
def test_bareiss_matches_cofactor_on_general_matrices(rows):
    assert det(rows) == det_cofactor(rows)


@given(st.integers(1, 5).flatmap(sym_matrices))
def test_bareiss_matches_leibniz(M):
    assert det(M) == det_leibniz(M.tolist())


def test_big_entries_stay_exact():
    big = 10 ** 30
    M = [[big, 1], [1, big]]
    assert det(M) == big * big - 1


def test_rank():
    assert rank([[1, 2], [2, 4]]) == 1
    assert rank([[0, 0], [0, 0]]) == 0
    assert rank(SymIntMatrix.identity(4)) == 4


def test_solve():
    x = solve([[2, 1], [1, 3]], [1, 2])
    assert x == [Fraction(1, 5), Fraction(3, 5)]
    with pytest.raises(ZeroDivisionError):
        solve([[1, 1], [1, 1]], [1, 0])


def test_congruence_and_outer():
    M = SymIntMatrix([[1, 0], [0, -1]])
    C = [[1, 1], [0, 1]]
    assert M.congruent(C) == SymIntMatrix([[1, 1], [1, 0]])
    assert SymIntMatrix.outer([1, -1], 4) == SymIntMatrix([[4, -4], [-4, 4]])
