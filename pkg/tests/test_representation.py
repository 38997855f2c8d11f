"""Constructive utility values: segment bisection, tables, verification."""
from __future__ import annotations

import dataclasses
import math

import pytest

from relation_lab.checkers import CheckConfig, SolvGap
from relation_lab.core import (
    Comparison,
    ComparisonOracle,
    Domain,
    fixture,
    oracle_from_utility,
)
from relation_lab.representation import (
    IncompletenessError,
    IndiffCertificate,
    build_utility_table,
    solve_indifference_on_segment,
    verify_representation,
    wold_utility_value,
)

CFG = CheckConfig()
_LIN = oracle_from_utility("lin", 2, lambda p: p[0] + p[1])


# ---------------------------------------------------------------------------
# segment bisection
# ---------------------------------------------------------------------------

def test_bisection_solves_a_linear_segment_exactly():
    cert = solve_indifference_on_segment(_LIN, (1.0, 0.5), (2.0, 2.0), (0.0, 0.0), CFG)
    assert isinstance(cert, IndiffCertificate)
    assert cert.lam == 0.375
    assert cert.point == (0.75, 0.75)
    assert cert.oracle_calls == 5
    assert cert.sandwich == ((0.75, 0.75), (0.75, 0.75))


def test_weight_one_selects_the_first_endpoint():
    at_a = solve_indifference_on_segment(_LIN, (2.0, 2.0), (2.0, 2.0), (0.0, 0.0), CFG)
    at_b = solve_indifference_on_segment(_LIN, (0.0, 0.0), (2.0, 2.0), (0.0, 0.0), CFG)
    assert (at_a.lam, at_a.point) == (1.0, (2.0, 2.0))
    assert (at_b.lam, at_b.point) == (0.0, (0.0, 0.0))


def test_bisection_lands_on_exact_floats_when_they_exist():
    o = oracle_from_utility("min", 2, lambda p: min(p))
    cert = solve_indifference_on_segment(o, (0.4, 5.0), (2.0, 2.0), (0.0, 0.0), CFG)
    assert cert.lam == 0.2
    assert cert.point == (0.4, 0.4)


def test_float_exhaustion_returns_a_gap_witness():
    lex = fixture("lex")
    w = solve_indifference_on_segment(lex.oracle, (2 / 3, 0.5), (1.0, 0.0), (0.0, 0.0), CFG)
    assert isinstance(w, SolvGap)
    lo, hi = w.bracket
    assert hi == math.nextafter(lo, math.inf)  # adjacent floats: nothing between
    assert lo == 0.6666666666666666
    assert w.replay(lex.oracle)


def test_endpoints_on_the_same_side_are_rejected():
    with pytest.raises(ValueError):
        solve_indifference_on_segment(_LIN, (9.0, 9.0), (1.0, 0.0), (0.0, 0.0), CFG)


def test_incomparable_answers_abort_with_the_offending_pair():
    o = ComparisonOracle("inc", 2, lambda a, b: Comparison.INCOMP)
    d = Domain(box=((0.0, 1.0), (0.0, 1.0)))
    with pytest.raises(IncompletenessError) as info:
        wold_utility_value(o, d, (0.5, 0.5), CFG)
    assert len(info.value.pair) == 2


# ---------------------------------------------------------------------------
# diagonal utility values
# ---------------------------------------------------------------------------

def test_utility_value_is_the_diagonal_weight():
    d = Domain(box=((0.0, 2.0), (0.0, 2.0)))
    assert wold_utility_value(_LIN, d, (0.5, 1.0), CFG) == 0.375
    assert wold_utility_value(_LIN, d, (0.0, 0.0), CFG) == 0.0
    assert wold_utility_value(_LIN, d, (2.0, 2.0), CFG) == 1.0


# ---------------------------------------------------------------------------
# utility tables
# ---------------------------------------------------------------------------

def test_table_records_isolated_gap_cells_and_keeps_going():
    sj = fixture("step_jump")
    t = build_utility_table(sj.oracle, sj.domain, CheckConfig(resolution=0.25))
    assert len(t.points) == 81
    assert not t.complete
    assert set(t.failures.keys()) == {(1.0, 0.0)}
    assert isinstance(t.failures[(1.0, 0.0)], SolvGap)
    assert len(t.values) == 80
    assert t.pitch == 0.25
    assert t.diagonal == ((0.0, 0.0), (2.0, 2.0))


def test_incomplete_tables_refuse_export_and_verification():
    sj = fixture("step_jump")
    t = build_utility_table(sj.oracle, sj.domain, CheckConfig(resolution=0.25))
    with pytest.raises(ValueError):
        t.to_csv()
    with pytest.raises(ValueError):
        verify_representation(sj.oracle, t, 10, 0)


def test_three_level_relation_builds_a_complete_three_value_table():
    sb = fixture("step_bounded")
    t = build_utility_table(sb.oracle, sb.domain, CheckConfig(resolution=0.25))
    assert t.complete
    assert set(t.values.values()) == {0.0, 0.5, 1.0}
    report = verify_representation(sb.oracle, t, 200, 0)
    assert (report.pairs, report.agreements, report.worst) == (200, 200, None)


def test_verification_catches_a_corrupted_cell():
    sb = fixture("step_bounded")
    t = build_utility_table(sb.oracle, sb.domain, CheckConfig(resolution=0.25))
    vals = dict(t.values)
    cell = sorted(vals)[0]
    vals[cell] = 0.123456
    bad = dataclasses.replace(t, values=vals)
    report = verify_representation(sb.oracle, bad, 300, 0)
    assert report.agreements < report.pairs
    a, b, t_a, t_b, predicted, actual = report.worst
    assert predicted is not actual


def test_verification_is_deterministic_in_the_seed():
    sb = fixture("step_bounded")
    t = build_utility_table(sb.oracle, sb.domain, CheckConfig(resolution=0.25))
    one = verify_representation(sb.oracle, t, 64, 3)
    two = verify_representation(sb.oracle, t, 64, 3)
    assert (one.pairs, one.agreements, one.worst) == (two.pairs, two.agreements, two.worst)


def test_csv_export_shape():
    sb = fixture("step_bounded")
    t = build_utility_table(sb.oracle, sb.domain, CheckConfig(resolution=0.25))
    lines = t.to_csv().splitlines()
    assert lines[0] == "x1,x2,t"
    assert len(lines) == 1 + len(t.values)
    for row in lines[1:]:
        x1, x2, val = row.split(",")
        assert t.values[(float(x1), float(x2))] == float(val)
