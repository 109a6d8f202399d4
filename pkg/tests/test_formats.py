import json
import math
from fractions import Fraction

import pytest
from hypothesis import given

from helpers import digraphs
from ordo import Digraph, InducedSet, Infeasible, solve_upper
from ordo.errors import ParseError
from ordo.formats import (
    format_dg,
    format_dimacs_cnf,
    parse_bounds,
    parse_dg,
    parse_dimacs_cnf,
    parse_rankings_csv,
    parse_thresholds,
    report,
    witness_from_json,
    witness_json,
    write_atomic,
)
from ordo.results import CutSet, DegreeDeficit, StuckSet, SumMismatch


def test_parse_dg():
    D = parse_dg("# triangle\n3 3\n0 1\n1 2 2.5\n2 0 inf\n")
    assert D.n == 3 and [a.weight for a in D.arcs] == [1, Fraction(5, 2), math.inf]
    assert parse_dg("2 1\n0 1\n", default_weight=4).arcs[0].weight == 4


@pytest.mark.parametrize(
    "text",
    ["", "3\n", "2 1\n", "2 1\n0 0\n", "2 1\n0 2\n", "2 1\n0 1 -1\n", "2 1\n0 1 x\n", "a b\n", "2 1\n0 1 1 1\n"],
)
def test_parse_dg_rejects(text):
    with pytest.raises(ParseError):
        parse_dg(text)


@given(digraphs(max_n=6, weighted=True))
def test_dg_round_trip(D):
    assert parse_dg(format_dg(D)) == D


def test_parse_bounds():
    b = parse_bounds({"f": {"0": 1}, "g": {"1": "inf", "2": 0}, "m_delta": {"0": 2}, "weights": [1, "-1"]}, 3)
    assert b["f"] == [1, -math.inf, -math.inf]
    assert b["g"] == [math.inf, math.inf, 0]
    assert b["m_delta"] == [2, 0, 0]
    assert b["weights"] == [1, -1]
    for bad in ({"h": {}}, {"g": {"9": 1}}, {"g": {"0": "x"}}, {"weights": "1"}, []):
        with pytest.raises(ParseError):
            parse_bounds(bad, 3)


def test_dimacs_round_trip():
    text = "c comment\np cnf 3 2\n1 -2 3 0\n-1 2\n-3 0\n"
    F = parse_dimacs_cnf(text)
    assert F.clauses == ((1, -2, 3), (-1, 2, -3))
    assert parse_dimacs_cnf(format_dimacs_cnf(F)) == F
    for bad in ("1 2 0\n", "p cnf 2 2\n1 2 0\n", "p cnf 2 1\n1 5 0\n", "p dnf 1 1\n1 0\n"):
        with pytest.raises(ParseError):
            parse_dimacs_cnf(bad)


def test_rankings_csv():
    P = parse_rankings_csv("A,B,C\n# comment\nC, A, B\n")
    assert P.names == ("A", "B", "C") and P.rankings == ((0, 1, 2), (2, 0, 1))
    with pytest.raises(ParseError):
        parse_rankings_csv("A,B\nA\n")
    with pytest.raises(ParseError):
        parse_rankings_csv("")


def test_thresholds():
    D = Digraph(3, [(0, 1), (1, 2)])
    net = parse_thresholds({"tau": {"1": 1, "2": 1}, "seed": [0]}, D)
    assert net.tau == (0, 1, 1) and net.seed == {0}
    for bad in ({}, {"tau": [1]}, {"tau": {"0": -1}}, {"tau": [0, 0, 0], "seed": [7]}):
        with pytest.raises(ParseError):
            parse_thresholds(bad, D)


@pytest.mark.parametrize(
    "w",
    [InducedSet((0, 2), "lower"), CutSet((), 1), StuckSet((1,), True), SumMismatch(3, 2), DegreeDeficit((0,))],
)
def test_witness_round_trip(w):
    assert witness_from_json(json.loads(json.dumps(witness_json(w)))) == w


def test_report_shape():
    tri = Digraph(3, [(0, 1), (1, 2), (2, 0)])
    r = report("solve", solve_upper(tri, 1))
    assert r["schema"] == "ordo/1" and r["feasible"] and r["order"] == [2, 1, 0]
    assert r["profile"]["delta_left"] == [1, 1, 0]
    r = report("solve", Infeasible(InducedSet((0, 1, 2)), "stuck"))
    assert r["witness"] == {"type": "induced-set", "vertices": [0, 1, 2], "side": "upper"}
    assert r["diagnostics"] == {"reason": "stuck"}


def test_write_atomic(tmp_path):
    p = tmp_path / "out.json"
    write_atomic(p, "one")
    write_atomic(p, "two")
    assert p.read_text() == "two" and [x.name for x in tmp_path.iterdir()] == ["out.json"]
