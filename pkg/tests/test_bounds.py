import random
from fractions import Fraction

import pytest
from hypothesis import assume, given, settings, strategies as st

from eqsig import corpus
from eqsig.bounds import (
    MOVE_BOUNDS, check_move_bound, delta_sigma, lower_bounds, rank_one_diagnostics,
    verify_sequence,
)
from eqsig.goeritz import EquivariantGoeritz, plus_part
from eqsig.matrix import SymIntMatrix, det
from eqsig.moves import TypeA1, TypeA2, TypeB, TypeC
from eqsig.selftest import random_move_case
from eqsig.signature import SingularFormError, equivariant_parts, equivariant_signature

from oracles import det_cofactor, quad_inverse
from strategies import sym_matrices

G51 = corpus.get("5_1").goeritz
G940 = corpus.get("9_40").goeritz
A2 = TypeA2(1, 4, 1, "bicolored", 1)
A1 = TypeA1(4, 1, "unicolored")


def test_delta_examples():
    assert delta_sigma(G51, TypeB(1, 1)) == 2
    assert delta_sigma(G940, A2) == -6
    assert delta_sigma(G940, TypeC(1, "bicolored")) == 0


def test_check_move_bound():
    assert check_move_bound(TypeB(1, 1), 2)
    assert check_move_bound(A2, -6)
    assert not check_move_bound(TypeC(1), 4)
    assert check_move_bound("A1", 6) and not check_move_bound("A1", 8)
    assert not check_move_bound("B", 2, max_delta=0)
    assert MOVE_BOUNDS == {"A1": 6, "A2": 6, "B": 2, "C": 2}


def test_lower_bounds():
    lb = lower_bounds(G940)
    assert lb.sigma == 6 and lb.uA_min == 2
    lb = lower_bounds(G51)
    assert (lb.uB_min, lb.uC_min) == (2, 2)
    lb = lower_bounds(0)
    assert (lb.uA_min, lb.uB_min, lb.uC_min, lb.homotopy_selfintersections_min) == (0, 0, 0, 0)
    assert lb.caveats
    assert lower_bounds(-7).uA_min == 3


def test_verify_9_40():
    rep = verify_sequence(G940, [A2, A1])
    assert rep.trajectory == [6, 0, 0]
    assert rep.compliant
    assert [s.bound for s in rep.steps] == [6, 6]


def test_verify_5_1():
    rep = verify_sequence(G51, [TypeB(1, 1)])
    assert rep.trajectory == [-4, -2] and rep.compliant


def test_verify_empty():
    rep = verify_sequence(G51, [])
    assert rep.steps == () or list(rep.steps) == []
    assert rep.final_sigma == -4


def test_verify_doctored_bound():
    rep = verify_sequence(G51, [TypeC(1, "bicolored"), TypeC(1, "bicolored")], max_delta=0)
    assert not rep.compliant


def test_rank_one_hand_case():
    r = rank_one_diagnostics(SymIntMatrix([[-1, 0], [0, -1]]), [1, 0])
    assert r.delta_sigma == 2
    assert (r.det_before, r.det_after) == (1, -3)
    assert r.identity_holds and r.interlacing_ok


def test_rank_one_zero_vector():
    r = rank_one_diagnostics(SymIntMatrix([[2, 1], [1, -1]]), [0, 0])
    assert r.delta_sigma == 0 and r.identity_holds


def test_rank_one_9_40():
    Mp = plus_part(G940)
    u = [1, 0, 0, -1]
    r = rank_one_diagnostics(Mp, u)
    oracle = det_cofactor(Mp.tolist()) * (1 + 4 * quad_inverse(Mp.tolist(), u))
    assert r.det_predicted == oracle == r.det_after
    assert isinstance(r.det_predicted, Fraction)


def test_rank_one_errors():
    with pytest.raises(SingularFormError):
        rank_one_diagnostics(SymIntMatrix([[1, 1], [1, 1]]), [1, 0])
    with pytest.raises(ValueError):
        rank_one_diagnostics(SymIntMatrix([[1]]), [1], t=0)
    with pytest.raises(ValueError):
        rank_one_diagnostics(SymIntMatrix([[1]]), [1, 2])


@settings(max_examples=150)
@given(st.integers(1, 6).flatmap(lambda m: st.tuples(
    sym_matrices(m, -6, 6), st.lists(st.integers(-2, 2), min_size=m, max_size=m))))
def test_rank_one_property(case):
    M, u = case
    N = M + SymIntMatrix.outer(u, 4)
    assume(det(M) != 0 and det(N) != 0)
    r = rank_one_diagnostics(M, u)
    assert r.identity_holds and r.interlacing_ok


@pytest.mark.parametrize("kind", ["A1", "A2", "B", "C"])
def test_move_signature_structure(kind):
    rng = random.Random(f"structure-{kind}")
    for _ in range(150):
        G, m, H = random_move_case(rng, kind, 5)
        p0, p1 = equivariant_parts(G), equivariant_parts(H)
        delta = p1.value - p0.value
        if kind in ("A1", "A2"):
            inner = (p1.sigma_plus - p1.sigma_minus) - (p0.sigma_plus - p0.sigma_minus)
            assert abs(inner) <= 2
            assert abs(p1.e - p0.e) in (0, 4)
        else:
            assert delta % 2 == 0 and abs(delta) <= 2


def test_lower_bounds_monotone():
    prev = lower_bounds(0)
    for s in range(1, 40):
        for sigma in (s, -s):
            lb = lower_bounds(sigma)
            for key in ("uA_min", "uB_min", "uC_min", "homotopy_selfintersections_min"):
                assert 0 <= getattr(prev, key) <= getattr(lb, key)
        prev = lb


def test_empty_form_has_zero_signature():
    G = EquivariantGoeritz(SymIntMatrix([]), SymIntMatrix([]))
    assert G.n == 0
    assert equivariant_signature(G) == 0
    assert lower_bounds(G).uA_min == 0
