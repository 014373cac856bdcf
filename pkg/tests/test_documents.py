import json

import pytest
from hypothesis import given

from eqsig import corpus
from eqsig.bounds import verify_sequence
from eqsig.documents import (
    DIAGRAM, GOERITZ, REPORT, Document, DocumentError, MoveScriptError, format_moves,
    goeritz_document, parse_document, parse_moves, serialize, to_obj,
)
from eqsig.moves import TypeA1, TypeA2, TypeB, TypeC

from strategies import diagrams
from zoo import ZOO

DOC_5_1 = """{
  "kind": "equivariant-goeritz",
  "label": "5_1",
  "n": 2,
  "A": [[-2, 1], [1, -2]],
  "B": [[1, 0], [0, 0]],
  "e": 4
}"""


def test_parse_5_1():
    doc = parse_document(DOC_5_1)
    assert doc.kind == GOERITZ and doc.label == "5_1"
    assert doc.payload.same_form(corpus.get("5_1").goeritz)


def test_non_symmetric_block():
    obj = json.loads(DOC_5_1)
    obj["A"] = [[-2, 1], [0, -2]]
    with pytest.raises(DocumentError, match="A not symmetric") as info:
        parse_document(json.dumps(obj))
    assert info.value.path == "A/0/1"


def test_truncated_text():
    with pytest.raises(DocumentError, match="syntax error") as info:
        parse_document(DOC_5_1[:40])
    assert info.value.line is not None and info.value.column is not None


@pytest.mark.parametrize("mutate, where", [
    (lambda o: o.update(extra=1), "<root>"),
    (lambda o: o.update(e=4.0), "e"),
    (lambda o: o.update(e=True), "e"),
    (lambda o: o["A"][0].__setitem__(0, "x"), "A/0/0"),
    (lambda o: o.pop("B"), "<root>"),
])
def test_schema_violations(mutate, where):
    obj = json.loads(DOC_5_1)
    mutate(obj)
    with pytest.raises(DocumentError, match="schema violation") as info:
        parse_document(json.dumps(obj))
    assert info.value.path == where


def test_float_literal_rejected():
    with pytest.raises(DocumentError):
        parse_document(DOC_5_1.replace('"e": 4', '"e": 4.0'))
    with pytest.raises(DocumentError):
        parse_document(DOC_5_1.replace('"e": 4', '"e": NaN'))


def test_wrong_size_and_kind():
    with pytest.raises(DocumentError, match="3x3"):
        parse_document(DOC_5_1.replace('"n": 2', '"n": 3'))
    with pytest.raises(DocumentError, match="unknown kind"):
        parse_document('{"kind": "knot"}')
    with pytest.raises(DocumentError, match="JSON object"):
        parse_document("[1]")


def test_bad_region_token_has_path():
    obj = to_obj(Document(DIAGRAM, corpus.diagram_5_1(), "5_1"))
    obj["crossings"][0]["regions"] = ["a0", "a1"]
    with pytest.raises(DocumentError) as info:
        parse_document(json.dumps(obj))
    assert info.value.path.startswith("crossings/0/regions")


@pytest.mark.parametrize("name", corpus.names())
def test_corpus_round_trip(name):
    e = corpus.get(name)
    doc = goeritz_document(e.goeritz, e.notes_text())
    text = serialize(doc)
    back = parse_document(text)
    assert back.payload == e.goeritz
    assert back.notes == doc.notes
    assert serialize(back) == text


@pytest.mark.parametrize("name", sorted(ZOO))
def test_diagram_round_trip(name):
    doc = Document(DIAGRAM, ZOO[name], ZOO[name].label)
    text = serialize(doc)
    assert parse_document(text).payload == ZOO[name]
    assert serialize(parse_document(text)) == text


@given(diagrams())
def test_random_diagram_round_trip(d):
    text = serialize(Document(DIAGRAM, d))
    assert parse_document(text).payload == d


def test_report_round_trip():
    G = corpus.get("9_40").goeritz
    rep = verify_sequence(G, [TypeA2(1, 4, 1, "bicolored", 1), TypeA1(4, 1, "unicolored")])
    text = serialize(Document(REPORT, rep, "9_40"))
    back = parse_document(text)
    assert back.payload.trajectory == [6, 0, 0]
    assert serialize(back) == text


def test_report_inconsistency_detected():
    G = corpus.get("5_1").goeritz
    obj = to_obj(Document(REPORT, verify_sequence(G, [TypeB(1, 1)])))
    obj["steps"][0]["delta"] = 4
    with pytest.raises(DocumentError, match="inconsistent"):
        parse_document(json.dumps(obj))


def test_matrix_rows_on_one_line():
    text = serialize(goeritz_document(corpus.get("5_1").goeritz))
    assert "[-2, 1]," in text


def test_parse_moves_examples():
    assert parse_moves("B k=1 sign=+1") == [TypeB(1, 1)]
    assert parse_moves("C sign=+1 color=bicolored") == [TypeC(1, "bicolored")]
    assert parse_moves("A2 i=1 j=4 sign=+1 color=bicolored eps=+1; A1 k=4 sign=+1 color=unicolored") == [
        TypeA2(1, 4, 1, "bicolored", 1), TypeA1(4, 1, "unicolored")]
    assert parse_moves(" ; ") == []
    assert parse_moves("A2 i=2 j=2 sign=-1 color=bicolored eps=-1 mixed=true") == [
        TypeA2(2, 2, -1, "bicolored", -1, mixed=True)]


@pytest.mark.parametrize("text, fragment", [
    ("A2 i=2 j=2 sign=-1 color=unicolored", "i"),
    ("D k=1", "unknown move type"),
    ("B k=1", "missing sign"),
    ("B k=0 sign=+1", "positive integer"),
    ("B k=1 sign=+2", r"\+1 or -1"),
    ("B k=1 sign=+1 sign=-1", "duplicate"),
    ("B k=1 sign=+1 color=bicolored", "unknown key"),
    ("A1 k=1 sign=+1 color=bicolored", "eps"),
    ("B k=1 sign", "key=value"),
])
def test_parse_moves_errors(text, fragment):
    with pytest.raises(MoveScriptError, match=fragment) as info:
        parse_moves(text)
    assert "column" in str(info.value)


def test_error_column():
    with pytest.raises(MoveScriptError) as info:
        parse_moves("B k=1 sign=+1; B k=x sign=+1")
    assert info.value.position == 19


def test_format_round_trip():
    moves = [TypeB(2, -1), TypeC(-1, "unicolored"), TypeA1(1, 1, "bicolored", -1),
             TypeA2(1, 3, -1, "unicolored"), TypeA2(2, 2, 1, "bicolored", 1, mixed=True)]
    assert parse_moves(format_moves(moves)) == moves
