"""Report serialization: determinism, rational encoding, round trips."""

from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oelab import Report, csv_header, emit_report, parse_report
from oelab.report import SCHEMA, _KINDS

value_strategy = st.one_of(
    st.integers(-(10**12), 10**12),
    st.fractions(max_denominator=10**6),
)

report_strategy = st.builds(
    Report,
    kind=st.sampled_from(_KINDS),
    parameters=st.dictionaries(
        st.text(st.characters(categories=("Ll",)), min_size=1, max_size=8),
        st.one_of(value_strategy, st.text(max_size=12)),
        max_size=5,
    ),
    values=st.dictionaries(
        st.text(st.characters(categories=("Ll",)), min_size=1, max_size=8),
        value_strategy,
        max_size=5,
    ),
    verdict=st.sampled_from([None, "holds", "violated", "not-applicable"]),
    witness_path=st.one_of(st.none(), st.just("/tmp/w.txt")),
)


@given(report_strategy)
@settings(max_examples=200)
def test_json_roundtrip(report):
    assert parse_report(emit_report(report)) == report


@given(report_strategy)
@settings(max_examples=100)
def test_emission_is_deterministic(report):
    assert emit_report(report) == emit_report(report)
    a = Report(report.kind, dict(reversed(report.parameters.items())),
               dict(reversed(report.values.items())), report.verdict,
               report.witness_path)
    assert emit_report(a) == emit_report(report)


def test_rational_encoding():
    rep = Report("bound", values={"x": Fraction(3, 7), "y": Fraction(4, 2)})
    text = emit_report(rep)
    assert '"x":{"den":7,"num":3}' in text
    assert '"y":2' in text  # whole rationals collapse to plain ints
    back = parse_report(text)
    assert back.values == {"x": Fraction(3, 7), "y": 2}


def test_csv_header_and_row_align():
    rep = Report(
        "search",
        parameters={"n": 6, "mode": "odd", "exhaustive": True},
        values={"minimum_op": 3, "ratio": Fraction(1, 2)},
    )
    header = csv_header(rep)
    row = emit_report(rep, "csv-row")
    assert header == "kind,p_exhaustive,p_mode,p_n,v_minimum_op,v_ratio,verdict"
    assert row == "search,true,odd,6,3,1/2,"
    assert len(header.split(",")) == len(row.split(","))


def test_validation():
    with pytest.raises(ValueError):
        Report("banana")
    with pytest.raises(ValueError):
        Report("op", verdict="maybe")
    with pytest.raises(ValueError):
        Report("op", values={"x": 1.5})
    with pytest.raises(ValueError):
        Report("op", values={"x": True})
    with pytest.raises(ValueError):
        emit_report(Report("op"), fmt="yaml")
    with pytest.raises(ValueError):
        parse_report('{"kind":"op","schema":"other/9"}')
    with pytest.raises(ValueError):
        parse_report('[1,2]')
    with pytest.raises(ValueError):
        parse_report('{"kind":"op","schema":"%s","values":{"x":{"num":1}}}' % SCHEMA)


def test_schema_tag_present():
    assert '"schema":"oelab/1"' in emit_report(Report("op"))
