"""Falsification checkers: verdicts, witnesses, replay, and block solvability."""
from __future__ import annotations

from fractions import Fraction

import pytest

from relation_lab.checkers import (
    BasicFail,
    CheckConfig,
    ClosureWitness,
    CurveFamily,
    OpennessWitness,
    SolvGap,
    Verdict,
    VerdictKind,
    check_archimedean,
    check_basic,
    check_continuity,
    check_restricted_solvability,
    check_stronger_rs,
    check_wold,
)
from relation_lab.core import (
    Comparison,
    ComparisonOracle,
    Domain,
    OracleHooks,
    compare,
    fixture,
    oracle_from_utility,
)

CFG = CheckConfig()


# ---------------------------------------------------------------------------
# configuration validation
# ---------------------------------------------------------------------------

def test_config_rejects_nonpositive_resolution():
    with pytest.raises(ValueError):
        CheckConfig(resolution=-1.0)
    with pytest.raises(ValueError):
        CheckConfig(resolution=0.0)


def test_config_rejects_nonpositive_budgets():
    with pytest.raises(ValueError):
        CheckConfig(sample_budget=0)
    with pytest.raises(ValueError):
        CheckConfig(bisect_max_iter=0)


# ---------------------------------------------------------------------------
# verdicts and witness replay
# ---------------------------------------------------------------------------

def test_verdict_kind_vocabulary():
    assert [k.value for k in VerdictKind] == ["holds", "violated", "inapplicable"]


def test_violated_verdict_replays_against_its_oracle():
    f = fixture("gp2")
    v = check_continuity(f.oracle, f.domain, CFG)
    assert v.kind is VerdictKind.VIOLATED
    assert isinstance(v.witness, ClosureWitness)
    assert v.witness.x == (3.0, 1.0)
    assert v.witness.side == "upper"
    assert v.replay(f.oracle)


def test_replay_fails_against_a_different_relation():
    f = fixture("gp2")
    v = check_continuity(f.oracle, f.domain, CFG)
    flat = oracle_from_utility("flat", 2, lambda p: 0.0)
    assert not v.replay(flat)


def test_holds_verdict_has_no_witness_and_replays_trivially():
    f = fixture("linear_sum")
    v = check_continuity(f.oracle, f.domain, CFG)
    assert v.kind is VerdictKind.HOLDS
    assert v.witness is None
    assert v.replay(f.oracle)


def test_verdict_serialization_shape():
    f = fixture("gp2")
    d = check_continuity(f.oracle, f.domain, CFG).to_dict()
    assert sorted(d.keys()) == ["axiom", "kind", "resolution", "witness"]
    assert d["axiom"] == "continuity"
    assert d["kind"] == "violated"
    w = d["witness"]
    assert w["type"] == "ClosureWitness"
    a, b, result = w["comparisons"][0]
    assert len(a) == 2 and len(b) == 2
    assert result in ("succ", "prec", "indiff", "incomp")


def test_checks_are_deterministic():
    f = fixture("gp2")
    first = check_continuity(f.oracle, f.domain, CFG).to_dict()
    second = check_continuity(f.oracle, f.domain, CFG).to_dict()
    assert first == second


def test_openness_witness_replay_detects_tampering():
    o = oracle_from_utility("sum", 1, lambda p: p[0])
    recorded = (((1.0,), (0.0,), compare(o, (1.0,), (0.0,))),)
    w = OpennessWitness(comparisons=recorded, x=(1.0,), y=(0.0,), intruders=())
    assert w.replay(o)
    flipped = OpennessWitness(
        comparisons=(((1.0,), (0.0,), Comparison.PREC),),
        x=(1.0,), y=(0.0,), intruders=(),
    )
    assert not flipped.replay(o)


# ---------------------------------------------------------------------------
# incomparability is reported as a completeness failure
# ---------------------------------------------------------------------------

def _incomparable_oracle():
    return ComparisonOracle("incomp", 1, lambda a, b: Comparison.INCOMP)


def test_axiom_checkers_surface_incomparability():
    o = _incomparable_oracle()
    d = Domain(box=((0.0, 1.0),))
    cfg = CheckConfig(resolution=0.25)
    for fn in (check_continuity, check_archimedean):
        v = fn(o, d, cfg)
        assert v.kind is VerdictKind.VIOLATED
        assert isinstance(v.witness, BasicFail)
        assert v.witness.property == "complete"
        assert v.replay(o)


def test_basic_battery_flags_incompleteness():
    o = _incomparable_oracle()
    verdicts = check_basic(o, Domain(box=((0.0, 1.0),)), CheckConfig(resolution=0.25))
    assert sorted(verdicts.keys()) == [
        "complete", "convex_upper", "order_dense", "transitive", "weakly_monotone",
    ]
    assert verdicts["complete"].kind is VerdictKind.VIOLATED


# ---------------------------------------------------------------------------
# inapplicability carries a reason instead of a witness
# ---------------------------------------------------------------------------

def test_nonconvex_domain_makes_mixture_axioms_inapplicable():
    s = fixture("sqrt2_gap")
    v = check_wold(s.oracle, s.domain, None, CFG)
    assert v.kind is VerdictKind.INAPPLICABLE
    assert v.witness is None
    assert v.reason
    assert v.replay(s.oracle)


def test_default_curve_family_matches_explicit_default():
    f = fixture("linear_sum")
    implicit = check_wold(f.oracle, f.domain, None, CFG).to_dict()
    explicit = check_wold(f.oracle, f.domain, CurveFamily.default(), CFG).to_dict()
    assert implicit == explicit


# ---------------------------------------------------------------------------
# coordinate-restricted solvability
# ---------------------------------------------------------------------------

def test_solvability_can_be_probed_per_coordinate():
    s = fixture("sqrt2_gap")
    ok = check_restricted_solvability(s.oracle, s.domain, CFG, coordinates=[1])
    bad = check_restricted_solvability(s.oracle, s.domain, CFG, coordinates=[2])
    assert ok.kind is VerdictKind.HOLDS
    assert bad.kind is VerdictKind.VIOLATED
    assert isinstance(bad.witness, SolvGap)
    assert bad.witness.coordinate == 2
    assert all(isinstance(t, Fraction) for t in bad.witness.bracket)
    assert bad.replay(s.oracle)


def test_block_solvability_on_a_linear_relation_holds():
    o = oracle_from_utility("lin3", 3, lambda p: p[0] + p[1] + p[2])
    d = Domain(box=((0.0, 1.0),) * 3)
    cfg = CheckConfig(resolution=0.25)
    assert check_stronger_rs(o, d, (1, 2), cfg).kind is VerdictKind.HOLDS
    assert check_stronger_rs(o, d, (3,), cfg).kind is VerdictKind.HOLDS


def test_block_solvability_detects_a_jump_across_the_block():
    # Value jumps by 1 as the (x2, x3) block crosses the diagonal, so targets
    # strictly inside the jump are unreachable.  The hook certifies absence;
    # without it a falsifier cannot distinguish a gap from a missed root.
    def u(p):
        return p[0] + (1.0 if p[1] + p[2] > 1.0 else 0.0)

    def solve(a, b, x):
        attained = {u(a), u(b)}
        if u(x) in attained:
            return ("found", 0.0 if u(x) == u(a) else 1.0)
        return ("none", None)

    o = ComparisonOracle(
        "step_block", 3,
        lambda a, b: (
            Comparison.INDIFF if u(a) == u(b)
            else Comparison.SUCC if u(a) > u(b) else Comparison.PREC
        ),
        hooks=OracleHooks(solve_on_segment=solve),
    )
    d = Domain(box=((0.0, 1.0),) * 3)
    v = check_stronger_rs(o, d, (2, 3), CheckConfig(resolution=0.25))
    assert v.kind is VerdictKind.VIOLATED
    assert isinstance(v.witness, SolvGap)
    assert v.witness.coordinate == (2, 3)
    assert v.witness.bracket == (0.0, 1.0)
    assert v.replay(o)


def test_block_arguments_are_validated():
    o = oracle_from_utility("lin3", 3, lambda p: sum(p))
    d = Domain(box=((0.0, 1.0),) * 3)
    with pytest.raises(ValueError):
        check_stronger_rs(o, d, (), CFG)
    with pytest.raises(ValueError):
        check_stronger_rs(o, d, (1, 2, 3), CFG)
    with pytest.raises(ValueError):
        check_stronger_rs(o, d, (4,), CFG)
