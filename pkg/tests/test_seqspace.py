"""Infinite-coordinate points under the infimum relation, all exact."""
from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from relation_lab.core import Comparison
from relation_lab.checkers import VerdictKind
from relation_lab.seqspace import (
    SEQ_EXPECTED,
    SEQ_FIXTURE_NAME,
    SeqWitness,
    converges_to,
    coordinate,
    inf_utility,
    replace_coordinate,
    seq_compare,
    seq_fixture_checks,
    seq_mixture,
    seq_point,
    seq_profile,
)

F = Fraction


# ---------------------------------------------------------------------------
# canonical form and coordinates
# ---------------------------------------------------------------------------

def test_prefixes_matching_the_tail_are_trimmed():
    p = seq_point([F(3), F(2), F(2)], F(2))
    assert p.prefix == (F(3),)
    assert p.tail == F(2)
    assert seq_point([F(2), F(2)], F(2)) == seq_point([], F(2))
    assert hash(seq_point([F(2)], F(2))) == hash(seq_point([], F(2)))


def test_coordinates_are_zero_based_and_default_to_the_tail():
    p = seq_point([F(3)], F(2))
    assert coordinate(p, 0) == 3
    assert coordinate(p, 1) == 2
    assert coordinate(p, 99) == 2
    with pytest.raises(ValueError):
        coordinate(p, -1)


def test_points_must_stay_inside_the_open_box():
    with pytest.raises(ValueError):
        seq_point([F(10)], F(0))
    with pytest.raises(ValueError):
        seq_point([], F(-10))
    seq_point([F(-9), F(9)], F(0))  # strictly inside: fine


def test_replace_coordinate_extends_and_recanonicalizes():
    p = seq_point([], F(0))
    q = replace_coordinate(p, 2, F(5))
    assert q.prefix == (F(0), F(0), F(5))
    assert replace_coordinate(p, 2, F(0)) == p


# ---------------------------------------------------------------------------
# the infimum relation
# ---------------------------------------------------------------------------

def test_inf_utility_is_the_exact_coordinate_infimum():
    assert inf_utility(seq_point([F(3), F(1, 3)], F(2))) == F(1, 3)
    assert inf_utility(seq_point([], F(5, 2))) == F(5, 2)


def test_compare_orders_by_infimum():
    a = seq_point([F(1)], F(3))
    b = seq_point([F(3)], F(1))
    assert seq_compare(a, b) is Comparison.INDIFF  # both infima equal 1
    assert seq_compare(seq_point([], F(2)), b) is Comparison.SUCC
    assert seq_compare(b, seq_point([], F(2))) is Comparison.PREC


def test_mixture_is_coordinatewise_and_exact():
    a = seq_point([F(1)], F(3))
    b = seq_point([F(0)], F(1))
    m = seq_mixture(a, b, F(1, 3))
    assert coordinate(m, 0) == F(1, 3)
    assert coordinate(m, 5) == F(1, 3) * 3 + F(2, 3) * 1


_coords = st.lists(st.fractions(min_value=-9, max_value=9), max_size=4)
_tail = st.fractions(min_value=-9, max_value=9)


@given(ap=_coords, at=_tail, bp=_coords, bt=_tail,
       lam=st.fractions(min_value=0, max_value=1))
@settings(max_examples=80, deadline=None)
def test_mixtures_never_fall_below_both_infima(ap, at, bp, bt, lam):
    a = seq_point(ap, at)
    b = seq_point(bp, bt)
    m = seq_mixture(a, b, lam)
    assert inf_utility(m) >= min(inf_utility(a), inf_utility(b))


# ---------------------------------------------------------------------------
# product-topology convergence
# ---------------------------------------------------------------------------

def test_growing_prefix_of_ones_converges_to_the_constant_one():
    fam = lambda n: seq_point([F(1)] * n, F(0))
    report = converges_to(fam, seq_point([], F(1)), coord_budget=8)
    assert report.converges
    assert report.coordinates[2] == (2, True, 3)  # coordinate 2 stabilizes at n=3


def test_exact_convergence_rejects_merely_approaching_families():
    fam = lambda n: seq_point([F(1, n)], F(0))
    limit = seq_point([], F(0))
    assert not converges_to(fam, limit)
    assert converges_to(fam, limit, tol=F(1, 64))


def test_convergence_budget_must_be_positive():
    with pytest.raises(ValueError):
        converges_to(lambda n: seq_point([], F(0)), seq_point([], F(0)),
                     coord_budget=0)


# ---------------------------------------------------------------------------
# the pinned battery and its profile
# ---------------------------------------------------------------------------

def test_fixture_checks_match_the_pinned_pattern():
    checks = seq_fixture_checks()
    assert {k: v.kind.value for k, v in checks.items()} == SEQ_EXPECTED
    assert SEQ_FIXTURE_NAME == "seqspace"


def test_continuity_failure_carries_a_replayable_transcript():
    checks = seq_fixture_checks()
    v = checks["continuity"]
    assert v.kind is VerdictKind.VIOLATED
    assert isinstance(v.witness, SeqWitness)
    assert v.replay(None)
    tampered = SeqWitness(
        comparisons=((seq_point([], F(1)), seq_point([], F(0)), Comparison.PREC),),
    )
    assert not tampered.replay(None)


def test_fixture_checks_are_deterministic():
    one = {k: v.to_dict() for k, v in seq_fixture_checks().items()}
    two = {k: v.to_dict() for k, v in seq_fixture_checks().items()}
    assert one == two


def test_profile_declares_an_infinite_dimensional_interior_model():
    p = seq_profile()
    assert not p.finite_dimensional
    assert p.dimension == 0
    assert p.order_dense and p.order_bounded and p.interior
    assert not p.strong_order_bounded
