import io
import json
import math
from fractions import Fraction

import pytest

from negsssp.driver import SolverConfig, solve
from negsssp.generators import gen_potential_shifted
from negsssp.graph import SsspOutcome, build_graph
from negsssp.io import (
    CountError,
    ParseError,
    emit_result,
    format_weight,
    graph_text,
    parse_graph,
    read_report,
    write_graph,
)


def test_parse_decimal_weight():
    g = parse_graph("p sp 2 1\na 0 1 -2.5")
    assert g.n == 2 and g.edge_list() == [(0, 1, Fraction(-5, 2))]
    gf = parse_graph("p sp 2 1\na 0 1 -2.5", "float")
    assert gf.edge_list() == [(0, 1, -2.5)]


def test_parse_singleton_and_comments():
    g = parse_graph("# hello\n\np sp 1 0\n# bye\n")
    assert g.n == 1 and g.m == 0


def test_count_mismatch():
    with pytest.raises(CountError) as exc:
        parse_graph("p sp 3 2\na 0 1 1\n")
    assert exc.value.line == 1


@pytest.mark.parametrize(
    "text, line",
    [
        ("a 0 1 1\n", 1),
        ("p sp 2 1\na 0 5 1\n", 2),
        ("p sp 2 1\na 0 1 x\n", 2),
        ("p sp 2 1\na 0 1\n", 2),
        ("p sp 2\n", 1),
        ("p sp 2 1\nq 0 1 1\n", 2),
        ("p sp 2 1\np sp 2 1\n", 2),
        ("p sp 2 1\na 0 1 inf\n", 2),
    ],
)
def test_parse_errors_carry_line_numbers(text, line):
    with pytest.raises(ParseError) as exc:
        parse_graph(text)
    assert exc.value.line == line and f"line {line}" in str(exc.value)


def test_missing_header():
    with pytest.raises(ParseError):
        parse_graph("# nothing\n")


def test_format_weight():
    assert format_weight(3) == "3"
    assert format_weight(Fraction(-5, 2)) == "-2.5"
    assert format_weight(Fraction(1, 3)) == "1/3"
    assert format_weight(Fraction(8, 4)) == "2"
    assert format_weight(math.inf) == "inf"
    assert format_weight(0.1) == "0.1"
    assert format_weight(Fraction(-3, 40)) == "-0.075"
    # more digits than a default Decimal context holds
    big = Fraction(2 * 10 ** 27 + 1, 2)
    assert format_weight(big) == "1" + "0" * 27 + ".5"


def test_roundtrip_generated():
    for seed in range(5):
        g = gen_potential_shifted(15, 40, 0.2, (0, 9), seed)
        text = graph_text(g, "seed %d" % seed)
        g2 = parse_graph(text)
        assert sorted(g2.edge_list()) == sorted(g.edge_list()) and g2.n == g.n


def test_roundtrip_fractions_and_file_handle():
    g = build_graph(3, [(0, 1, Fraction(-7, 4)), (1, 2, Fraction(3, 5))])
    buf = io.StringIO()
    write_graph(g, buf)
    buf.seek(0)
    assert parse_graph(buf).edge_list() == g.edge_list()


def test_emit_text_unreachable():
    g = build_graph(4, [(0, 1, 1), (1, 2, -1)])
    out, trace = solve(g, 0)
    text = emit_result(g, out, trace)
    assert text.splitlines() == ["d 0 0", "d 1 1", "d 2 0", "d 3 inf"]


def test_emit_text_cycle():
    g = build_graph(2, [(0, 1, -2), (1, 0, 1)])
    out = SsspOutcome.from_cycle(g, [0, 1])
    assert emit_result(g, out).splitlines() == ["NEGATIVE CYCLE", "c 0", "c 1", "cycle_weight -1"]


def test_json_roundtrip():
    g = gen_potential_shifted(25, 120, 0.15, (0, 9), 4)
    out, trace = solve(g, 0, SolverConfig.desk())
    text = emit_result(g, out, trace, "json")
    back = read_report(text)
    assert back["schema"] == 1 and back["status"] == "ok"
    assert back["dist"] == out.dist
    assert back["trace"] == json.loads(json.dumps(trace.as_dict()))
    assert "timings" not in back["trace"]
    assert "timings" in read_report(emit_result(g, out, trace, "json", timings=True))["trace"]


def test_json_cycle_and_bad_schema():
    g = build_graph(2, [(0, 1, -2), (1, 0, 1)])
    back = read_report(emit_result(g, SsspOutcome.from_cycle(g, [0, 1]), fmt="json"))
    assert back["status"] == "negative_cycle" and back["cycle_weight"] == -1
    with pytest.raises(ValueError):
        read_report('{"schema": 2}')
    with pytest.raises(ValueError):
        emit_result(g, SsspOutcome.from_cycle(g, [0, 1]), fmt="xml")
