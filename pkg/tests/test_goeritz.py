import pytest
from hypothesis import given

from eqsig import corpus
from eqsig.goeritz import (
    EquivariantGoeritz, check_det_identity, det_identity, full_matrix, minus_part, plus_part,
)
from eqsig.matrix import SymIntMatrix, det

from oracles import det_cofactor
from strategies import goeritz_forms

G61 = corpus.get("6_1").goeritz
G51 = corpus.get("5_1").goeritz
G940 = corpus.get("9_40").goeritz


def test_full_matrix_6_1():
    assert full_matrix(G61).tolist() == [
        [-3, 1, 2, 0],
        [1, -2, 0, 0],
        [2, 0, -3, 1],
        [0, 0, 1, -2],
    ]


def test_full_matrix_5_1():
    assert full_matrix(G51).tolist() == [
        [-2, 1, 1, 0],
        [1, -2, 0, 0],
        [1, 0, -2, 1],
        [0, 0, 1, -2],
    ]


def test_block_diagonal_when_b_zero():
    A = [[1, 2], [2, 3]]
    G = EquivariantGoeritz.from_blocks(A, [[0, 0], [0, 0]])
    assert full_matrix(G).tolist() == [[1, 2, 0, 0], [2, 3, 0, 0], [0, 0, 1, 2], [0, 0, 2, 3]]
    assert plus_part(G) == minus_part(G) == SymIntMatrix(A).scale(2)


def test_eigenspace_parts_6_1():
    assert plus_part(G61).tolist() == [[-10, 2], [2, -4]]
    assert minus_part(G61).tolist() == [[-2, 2], [2, -4]]


def test_eigenspace_parts_9_40():
    assert plus_part(G940).tolist() == [[-8, 2, 0, 2], [2, -4, 2, 0], [0, 2, 0, 0], [2, 0, 0, -8]]
    assert minus_part(G940).tolist() == [[-4, 2, 0, 2], [2, -4, 2, 0], [0, 2, -4, 0], [2, 0, 0, -4]]


def test_determinants_6_1():
    # (-10)(-4) - 2*2
    assert det(plus_part(G61)) == 36
    full = full_matrix(G61).tolist()
    assert det_cofactor(full) == 9
    assert abs(det(full_matrix(G61))) == 9


def test_det_identity_6_1():
    chk = det_identity(G61)
    assert chk.det_plus * chk.det_minus == 36 * 4 == 4 ** 2 * 9
    assert chk.identity_holds and chk.knot_like


@pytest.mark.parametrize("name", corpus.names())
def test_det_identity_corpus(name):
    chk = det_identity(corpus.get(name).goeritz)
    assert chk.identity_holds
    assert chk.det_full % 2 == 1


def test_blocks_must_match():
    with pytest.raises(ValueError):
        EquivariantGoeritz.from_blocks([[1]], [[1, 0], [0, 1]])
    with pytest.raises(ValueError):
        EquivariantGoeritz.from_blocks([[1, 2], [0, 1]], [[0, 0], [0, 0]])


@given(goeritz_forms(max_n=6))
def test_det_identity_holds_for_any_symmetric_blocks(G):
    assert check_det_identity(G)


@given(goeritz_forms(max_n=5))
def test_parts_symmetric_and_even(G):
    for part in (plus_part(G), minus_part(G)):
        assert all(x % 2 == 0 for row in part.rows for x in row)
        assert part == SymIntMatrix(part.tolist())


@given(goeritz_forms(max_n=4))
def test_det_identity_b_zero(G):
    H = EquivariantGoeritz(G.A, SymIntMatrix([[0] * G.n] * G.n))
    dA = det(G.A)
    chk = det_identity(H)
    assert chk.det_plus == chk.det_minus == 2 ** G.n * dA
    assert chk.det_full == dA * dA
