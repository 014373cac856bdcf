from dataclasses import replace

import pytest
from hypothesis import given

from eqsig import corpus
from eqsig.diagram import (
    Color, Crossing, DiagramError, Locus, Region, SymmetricDiagram, correction_term,
    full_goeritz, goeritz, is_admissible, off_axis_pair, on_axis, relabel_pairs, validate,
)
from eqsig.matrix import SymIntMatrix

from strategies import diagrams
from zoo import ZOO


def two_crossing():
    return SymmetricDiagram(1, off_axis_pair("x", "a1", "fixed", -1))


def test_region_tokens():
    assert Region.parse("a3'") == Region(3, True)
    assert str(Region(2, False)) == "a2"
    assert str(Region.parse("fixed")) == "fixed"
    assert Region(2, False).rho() == Region(2, True)
    assert Region.parse("fixed").rho().is_fixed
    with pytest.raises(DiagramError):
        Region.parse("b1")


def test_validate_ok():
    assert validate(two_crossing()).ok


def test_partner_not_involutive():
    base = Crossing("c1", (Region(1, False), Region(1, False)), 1,
                    Color.UNICOLORED, None, Locus.OFF_AXIS, "c2")
    d = SymmetricDiagram(1, (
        base,
        replace(base, id="c2", regions=(Region(1, True), Region(1, True)), partner="c3"),
        replace(base, id="c3", regions=(Region(1, True), Region(1, True)), partner="c1"),
    ))
    report = validate(d)
    assert not report.ok
    assert any(v.crossing == "c2" and "partner not involutive" in v.message
               for v in report.violations)


def test_eta_not_invariant():
    c, p = off_axis_pair("x", "a1", "fixed", -1)
    report = validate(SymmetricDiagram(1, (c, replace(p, eta=1))))
    assert any("η not ρ-invariant" in v.message for v in report.violations)


def test_other_violations():
    c, p = off_axis_pair("x", "a1", "a2", -1)
    msgs = [v.message for v in validate(SymmetricDiagram(1, (c, p))).violations]
    assert any("out of range" in m for m in msgs)
    msgs = [str(v) for v in validate(SymmetricDiagram(2, (c, replace(p, regions=(Region(1, True), Region(2, False)))))).violations]
    assert any("ρ-image" in m for m in msgs)
    bad = on_axis("h", "a1", "a1'", 1)
    msgs = [v.message for v in validate(SymmetricDiagram(1, (replace(bad, partner="zz"),))).violations]
    assert any("does not exist" in m for m in msgs)


def test_admissibility():
    assert is_admissible(two_crossing())
    d = SymmetricDiagram(1, (*off_axis_pair("x", "a1", "fixed", -1),
                             on_axis("k", "a1", "a1'", 1, locus=Locus.ON_AXIS_H_PRIME)))
    assert not is_admissible(d)
    assert is_admissible(SymmetricDiagram(0, ()))
    with pytest.raises(DiagramError):
        goeritz(d)


def test_invalid_diagram_raises():
    c, p = off_axis_pair("x", "a1", "fixed", -1)
    with pytest.raises(DiagramError, match="invalid diagram"):
        is_admissible(SymmetricDiagram(1, (c, replace(p, eta=1))))


def test_correction_term():
    d = SymmetricDiagram(1, off_axis_pair("x", "a1", "fixed", -1, epsilon=1))
    assert correction_term(d) == -2
    assert correction_term(two_crossing()) == 0
    assert correction_term(corpus.diagram_5_1()) == 4


def test_on_axis_bicolored_ignored_by_e():
    d = SymmetricDiagram(1, (*off_axis_pair("x", "a1", "fixed", -1),
                             on_axis("h", "a1", "a1'", 1, epsilon=1)))
    assert correction_term(d) == 0


def test_goeritz_single_pair():
    G = goeritz(two_crossing())
    assert G.A == SymIntMatrix([[-1]])
    assert G.B == SymIntMatrix([[0]])


def test_goeritz_no_mixed_crossings():
    d = SymmetricDiagram(2, (*off_axis_pair("x", "a1", "a2", 1),
                             *off_axis_pair("f", "a2", "fixed", -1)))
    assert goeritz(d).B == SymIntMatrix([[0, 0], [0, 0]])


def test_goeritz_6_1():
    G = goeritz(corpus.diagram_6_1())
    assert G.A.tolist() == [[-3, 1], [1, -2]]
    assert G.B.tolist() == [[2, 0], [0, 0]]
    assert G.e == 0


@pytest.mark.parametrize("name", ["6_1", "5_1", "9_40"])
def test_reconstructions_match_corpus(name):
    assert goeritz(corpus.DIAGRAMS[name]()).same_form(corpus.get(name).goeritz)


def test_goeritz_needs_pairs():
    with pytest.raises(DiagramError):
        goeritz(SymmetricDiagram(0, ()))


@pytest.mark.parametrize("name", sorted(ZOO))
def test_full_rows_sum_to_zero(name):
    g = full_goeritz(ZOO[name])
    assert all(sum(row) == 0 for row in g)
    assert all(g[i][j] == g[j][i] for i in range(len(g)) for j in range(len(g)))


@given(diagrams())
def test_random_diagrams_valid_and_even_e(d):
    assert validate(d).ok
    assert correction_term(d) % 2 == 0
    assert all(sum(row) == 0 for row in full_goeritz(d))


@given(diagrams())
def test_crossing_renaming_invariance(d):
    mapping = {c.id: "r_" + c.id for c in d.crossings}
    renamed = d.with_crossings(replace(c, id=mapping[c.id], partner=mapping[c.partner])
                               for c in d.crossings)
    assert goeritz(renamed) == goeritz(d)


@given(diagrams(max_n=4))
def test_relabel_is_conjugation(d):
    n = d.n
    perm = {i: n + 1 - i for i in range(1, n + 1)}
    G, H = goeritz(d), goeritz(relabel_pairs(d, perm))
    P = [[1 if perm[j + 1] == i + 1 else 0 for j in range(n)] for i in range(n)]
    assert H.A == G.A.congruent([list(r) for r in zip(*P)])
    assert H.B == G.B.congruent([list(r) for r in zip(*P)])
    assert H.e == G.e


def test_loop_crossings_do_not_contribute():
    G1 = goeritz(ZOO["with-loop"])
    d = ZOO["with-loop"]
    G2 = goeritz(d.with_crossings(c for c in d.crossings if not c.is_loop))
    assert G1.same_form(G2)
