from __future__ import annotations

import json

import pytest

from gwcount import RealEvalContext, table1_rows, table2_rows
from gwcount.tables import EngineDisagreement, TableRow, format_rows

from golden import TABLE1, TABLE2_P5, TABLE2_P7


def test_table1_engines_agree_and_match_golden(engines):
    _, rctx = engines
    rows = table1_rows(11, engine="both", ctx=rctx)
    assert [(r.d, r.value) for r in rows] == [
        (d, TABLE1[d]) for d in range(1, 12, 2)
    ]


def test_table1_single_engine_variants(engines):
    _, rctx = engines
    closed = table1_rows(9, engine="closed")
    general = table1_rows(9, engine="general", ctx=rctx)
    assert [(r.d, r.value) for r in closed] == [(r.d, r.value) for r in general]


def test_table1_validation():
    with pytest.raises(ValueError):
        table1_rows(0)
    with pytest.raises(ValueError):
        table1_rows(5, engine="quantum")


def test_engine_disagreement_payload():
    exc = EngineDisagreement([(3, 1, 2)])
    assert exc.diffs == [(3, 1, 2)]
    assert "d=3" in str(exc)


def test_table2_p5_rows_match_golden(engines):
    _, rctx = engines
    rows = table2_rows("p5", ctx=rctx)
    assert len(rows) == 24
    got = {}
    for r in rows:
        a_part, b_part = r.signature.split()
        a = int(a_part.split("^")[1])
        b = int(b_part.split("^")[1])
        got[(r.d, (a, b))] = r.value
    assert got == TABLE2_P5


def test_table2_p7_rows_match_golden(engines):
    _, rctx = engines
    rows = table2_rows("p7", ctx=rctx)
    assert len(rows) == 27
    got = {}
    for r in rows:
        a_part, b_part, c_part = r.signature.split()
        key = tuple(int(p.split("^")[1]) for p in (a_part, b_part, c_part))
        got[(r.d, key)] = r.value
    assert got == TABLE2_P7


def test_table2_row_order_descends_lexicographically(engines):
    _, rctx = engines
    rows = table2_rows("p5", ctx=rctx)
    d1_rows = [r.signature for r in rows if r.d == 1]
    assert d1_rows == ["5^1 3^0", "5^0 3^2"]
    d3_rows = [r.signature for r in rows if r.d == 3]
    assert d3_rows == ["5^2 3^1", "5^1 3^3", "5^0 3^5"]


def test_table2_rejects_unknown_space():
    with pytest.raises(ValueError):
        table2_rows("p9")


def test_format_text():
    rows = [TableRow(1, None, 1), TableRow(11, None, 136457)]
    text = format_rows(rows, "text")
    assert text == " 1  1\n11  136457\n"


def test_format_csv():
    rows = [TableRow(1, None, 1), TableRow(3, None, 1)]
    assert format_rows(rows, "csv") == "d,value\n1,1\n3,1\n"
    rows2 = [TableRow(3, "5^2 3^1", -1)]
    assert format_rows(rows2, "csv") == "d,signature,value\n3,5^2 3^1,-1\n"


def test_format_json_values_are_strings():
    rows = [TableRow(31, None, TABLE1[31])]
    payload = json.loads(format_rows(rows, "json"))
    assert payload == [{"d": 31, "value": str(TABLE1[31])}]
    rows2 = [TableRow(1, "7^1 5^0 3^0", 1)]
    payload2 = json.loads(format_rows(rows2, "json"))
    assert payload2 == [{"d": 1, "signature": "7^1 5^0 3^0", "value": "1"}]


def test_format_rejects_unknown():
    with pytest.raises(ValueError):
        format_rows([TableRow(1, None, 1)], "xml")
