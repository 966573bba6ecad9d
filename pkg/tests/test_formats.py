import json
from fractions import Fraction
from pathlib import Path

import pytest

from frobrank import (
    QQ,
    Matrix,
    build_report,
    emit_instance,
    emit_report,
    parse_certificate,
    parse_instance,
)
from frobrank.errors import DimensionMismatch, FieldError, ParseError, ScalarError

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"


def test_parse_fixture_instance(tight_triple):
    field, a, b, c = parse_instance((FIXTURES / "tight_rational.json").read_bytes())
    assert field == QQ
    assert (a, b, c) == tight_triple


def test_parse_rejects_composite_field():
    doc = '{"field": "GF(4)", "A": {"rows": 0, "cols": 0, "data": []}, "B": {"rows": 0, "cols": 0, "data": []}, "C": {"rows": 0, "cols": 0, "data": []}}'
    with pytest.raises(FieldError):
        parse_instance(doc)


def test_parse_rejects_broken_chain():
    doc = {
        "field": "Q",
        "A": {"rows": 3, "cols": 2, "data": [["1", "0"], ["0", "1"], ["0", "0"]]},
        "B": {"rows": 3, "cols": 3, "data": [["1", "0", "0"]] * 3},
        "C": {"rows": 3, "cols": 1, "data": [["1"], ["0"], ["0"]]},
    }
    with pytest.raises(DimensionMismatch):
        parse_instance(json.dumps(doc))


def test_parse_rejects_bad_scalars_and_schema():
    with pytest.raises(ParseError):
        parse_instance(b"not json")
    with pytest.raises(ParseError):
        parse_instance(b'{"field": "Q"}')
    doc = {
        "field": "Q",
        "A": {"rows": 1, "cols": 1, "data": [["0.5"]]},
        "B": {"rows": 1, "cols": 1, "data": [["1"]]},
        "C": {"rows": 1, "cols": 1, "data": [["1"]]},
    }
    with pytest.raises(ScalarError):
        parse_instance(json.dumps(doc))
    doc["A"]["data"] = [[None]]
    with pytest.raises(ScalarError):
        parse_instance(json.dumps(doc))


def test_scalar_canonicalization_on_load():
    doc = {
        "field": "Q",
        "A": {"rows": 1, "cols": 1, "data": [["2/4"]]},
        "B": {"rows": 1, "cols": 1, "data": [["-6/4"]]},
        "C": {"rows": 1, "cols": 1, "data": [["3"]]},
    }
    _, a, b, _ = parse_instance(json.dumps(doc))
    assert a[0, 0] == Fraction(1, 2)
    assert b[0, 0] == Fraction(-3, 2)


def test_prime_field_fraction_entries():
    doc = {
        "field": "GF(7)",
        "A": {"rows": 1, "cols": 1, "data": [["1/2"]]},
        "B": {"rows": 1, "cols": 1, "data": [["-1"]]},
        "C": {"rows": 1, "cols": 1, "data": [["9"]]},
    }
    _, a, b, c = parse_instance(json.dumps(doc))
    assert a[0, 0] == 4 and b[0, 0] == 6 and c[0, 0] == 2


def test_instance_round_trip(tight_triple):
    raw = (FIXTURES / "tight_rational.json").read_bytes()
    parsed = parse_instance(raw)
    emitted = emit_instance(*parsed)
    assert parse_instance(emitted) == parsed
    # Emission is canonical: a second round trip is byte-stable.
    assert emit_instance(*parse_instance(emitted)) == emitted


def test_report_emission_deterministic(tight_triple):
    a, b, c = tight_triple
    report = build_report(a, b, c, include_certificate=True, include_trace=True)
    assert emit_report(report, "json") == emit_report(report, "json")
    assert emit_report(report, "text") == emit_report(report, "text")
    with pytest.raises(ValueError):
        emit_report(report, "yaml")


def test_report_text_contents(tight_triple):
    a, b, c = tight_triple
    report = build_report(a, b, c, include_certificate=True)
    text = emit_report(report, "text").decode()
    lines = text.splitlines()
    assert "rank(B)=2" in lines
    assert "rank(ABC)+rank(B)=3" in lines
    assert "rank(AB)+rank(BC)=3" in lines
    assert "gap=0" in lines
    assert "verdict=equality" in lines
    assert "X=" in lines and "Y=" in lines
    assert "  [0 -1/2 0]" in lines


def test_report_json_schema(tight_triple, strict_triple):
    a, b, c = tight_triple
    doc = json.loads(emit_report(build_report(a, b, c, include_certificate=True), "json"))
    assert doc["verdict"] == "equality"
    assert doc["rank_profile"]["gap"] == 0
    assert doc["rank_profile"]["lhs"] == doc["rank_profile"]["rhs"] == 3
    assert set(doc["criteria"].values()) == {True}
    assert "certificate" in doc and "witness" not in doc

    doc = json.loads(emit_report(build_report(*strict_triple, include_certificate=True), "json"))
    assert doc["verdict"] == "strict"
    assert "certificate" not in doc and doc["witness"]["data"] == [["0"], ["1"]]


def test_certificate_documents_parse(tight_triple):
    a, b, c = tight_triple
    x, y = parse_certificate((FIXTURES / "tight_rational_cert.json").read_bytes(), QQ)
    assert x == Matrix(QQ, [[0, Fraction(-1, 2), 0], [0, -1, 0]])
    assert y == Matrix(QQ, [[1, 0, 0], [0, 0, 0]])
    # A certify report can be fed back as a certificate document.
    report = emit_report(build_report(a, b, c, include_certificate=True), "json")
    x2, y2 = parse_certificate(report, QQ)
    assert x2 == x
    with pytest.raises(ParseError):
        parse_certificate(b'{"X": {"rows": 0, "cols": 0, "data": []}}', QQ)


def test_check_report_is_bare(strict_triple):
    report = build_report(*strict_triple, include_certificate=False)
    doc = json.loads(emit_report(report, "json"))
    assert "certificate" not in doc and "witness" not in doc
    assert doc["verdict"] == "strict"
