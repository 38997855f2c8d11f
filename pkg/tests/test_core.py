"""Core vocabulary: comparisons, oracles, exact scalars, domains, grids."""
from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from relation_lab.core import (
    AssumptionProfile,
    Comparison,
    Domain,
    QSqrt2,
    compare,
    fixture,
    fixture_names,
    mixture,
    oracle_from_utility,
    sample_grid,
)

# ---------------------------------------------------------------------------
# comparisons and oracles
# ---------------------------------------------------------------------------

def test_comparison_vocabulary():
    assert [c.value for c in Comparison] == ["succ", "prec", "indiff", "incomp"]


def test_utility_oracle_orders_by_value():
    o = oracle_from_utility("sum", 2, lambda p: p[0] + p[1])
    assert compare(o, (1.0, 0.0), (0.0, 0.0)) is Comparison.SUCC
    assert compare(o, (0.0, 0.0), (1.0, 0.0)) is Comparison.PREC
    assert compare(o, (1.0, 0.0), (0.0, 1.0)) is Comparison.INDIFF


def test_utility_oracle_indifference_is_exact_value_equality():
    o = oracle_from_utility("sum", 1, lambda p: p[0])
    assert compare(o, (0.5,), (0.5 + 1e-15,)) is Comparison.PREC


def test_compare_rejects_dimension_mismatch():
    o = oracle_from_utility("sum", 2, lambda p: p[0] + p[1])
    with pytest.raises(ValueError):
        compare(o, (1.0,), (0.0, 1.0))


def test_oracle_is_callable_like_a_relation():
    o = oracle_from_utility("sum", 1, lambda p: p[0])
    assert o((2.0,), (1.0,)) is Comparison.SUCC


# ---------------------------------------------------------------------------
# mixtures
# ---------------------------------------------------------------------------

def test_mixture_endpoints_are_exact():
    a, b = (1.0, 4.0), (0.0, 8.0)
    assert mixture(a, b, 1.0) == a
    assert mixture(a, b, 0.0) == b


def test_mixture_weights_toward_first_argument():
    assert mixture((1.0, 4.0), (0.0, 8.0), 0.25) == (0.25, 7.0)


def test_mixture_preserves_shared_coordinates_exactly():
    a, b = (0.1, 7.3), (0.9, 7.3)
    assert mixture(a, b, 1 / 3)[1] == 7.3


def test_mixture_is_exact_over_rationals():
    a = (Fraction(1), Fraction(2, 7))
    b = (Fraction(0), Fraction(5, 7))
    assert mixture(a, b, Fraction(1, 3)) == (Fraction(1, 3), Fraction(4, 7))


@given(
    lam=st.fractions(min_value=0, max_value=1),
    ax=st.fractions(min_value=-5, max_value=5),
    bx=st.fractions(min_value=-5, max_value=5),
)
@settings(max_examples=60, deadline=None)
def test_mixture_of_rationals_stays_in_segment(lam, ax, bx):
    (m,) = mixture((ax,), (bx,), lam)
    assert min(ax, bx) <= m <= max(ax, bx)
    assert m == lam * ax + (1 - lam) * bx


# ---------------------------------------------------------------------------
# exact quadratic scalars
# ---------------------------------------------------------------------------

_frac = st.fractions(min_value=-9, max_value=9)
_q = st.builds(QSqrt2, _frac, _frac)


def test_sqrt2_squares_to_two():
    root = QSqrt2(0, 1)
    assert root * root == QSqrt2(2, 0)
    assert not root.is_rational
    assert QSqrt2(Fraction(3, 4), 0).is_rational


@given(x=_q, y=_q, z=_q)
@settings(max_examples=150, deadline=None)
def test_field_ring_laws(x, y, z):
    assert x + y == y + x
    assert x * y == y * x
    assert (x + y) + z == x + (y + z)
    assert (x * y) * z == x * (y * z)
    assert x * (y + z) == x * y + x * z
    assert x + QSqrt2(0, 0) == x
    assert x * QSqrt2(1, 0) == x
    assert x + (-x) == QSqrt2(0, 0)


@given(x=_q)
@settings(max_examples=80, deadline=None)
def test_multiplicative_inverse(x):
    if x == QSqrt2(0, 0):
        with pytest.raises(ZeroDivisionError):
            x.inverse()
    else:
        assert x * x.inverse() == QSqrt2(1, 0)
        assert (QSqrt2(1, 0) / x) == x.inverse()


@given(x=_q, y=_q)
@settings(max_examples=120, deadline=None)
def test_order_is_total_and_translation_invariant(x, y):
    assert (x < y) + (x == y) + (y < x) == 1
    if x < y:
        assert x + QSqrt2(1, 1) < y + QSqrt2(1, 1)
        assert float(x) <= float(y)


def test_conjugation_and_sign():
    q = QSqrt2(3, -1)
    assert q.conj() == QSqrt2(3, 1)
    assert q.sign() == 1
    assert QSqrt2(1, -1).sign() == -1  # 1 - sqrt(2) < 0
    assert QSqrt2(0, 0).sign() == 0
    assert QSqrt2.from_scalar(Fraction(7, 2)) == QSqrt2(Fraction(7, 2), 0)
    assert q ** 3 == q * q * q


# ---------------------------------------------------------------------------
# domains
# ---------------------------------------------------------------------------

def test_domain_membership_with_halfspace():
    d = Domain(box=((0.0, 2.0), (0.0, 2.0)), halfspaces=(((1.0, 1.0), 3.0),))
    assert d.dimension == 2
    assert d.is_convex
    assert d.contains((1.0, 1.0))
    assert d.contains((1.5, 1.5))  # on the halfspace boundary
    assert not d.contains((2.0, 2.0))
    assert not d.contains((-0.1, 0.0))


def test_domain_line_range_reports_binding_constraints():
    d = Domain(box=((0.0, 2.0), (0.0, 2.0)), halfspaces=(((1.0, 1.0), 3.0),))
    r = d.line_range((0.5, 0.5), (1.0, 0.0))
    assert (r.t_lo, r.t_hi) == (-0.5, 1.5)
    assert (r.lo_kind, r.hi_kind) == ("true", "true")
    assert not r.open_ends


def test_open_domain_excludes_its_faces():
    d = Domain(box=((0.0, 1.0),), interior_only=True)
    assert not d.contains((0.0,))
    assert d.contains((0.5,))
    assert d.line_range((0.5,), (1.0,)).open_ends


# ---------------------------------------------------------------------------
# sample grids
# ---------------------------------------------------------------------------

def test_sample_grid_small_interval():
    pts = sample_grid(Domain(box=((0.0, 1.0),)), 0.5, 0)
    assert pts == [(0.0,), (0.5,), (1.0,)]


def test_sample_grid_caps_two_dimensional_lattices():
    pts = sample_grid(Domain(box=((-10.0, -10.0 + 20.0), (-10.0, 10.0))), 1e-3, 0)
    assert len(pts) == 33 * 33
    assert pts[0] == (-10.0, -10.0) and pts[-1] == (10.0, 10.0)
    step = 20.0 / 32  # dyadic pitch: every lattice coordinate is exact
    for p in pts[:50]:
        for c in p:
            k = (c + 10.0) / step
            assert k == int(k)


def test_sample_grid_respects_requested_pitch():
    pts = sample_grid(Domain(box=((0.0, 2.0), (0.0, 2.0))), 0.25, 0)
    assert len(pts) == 81
    assert (1.25, 0.75) in pts


def test_sample_grid_is_deterministic():
    d = Domain(box=((0.0, 2.0), (0.0, 2.0)))
    assert sample_grid(d, 0.25, 7) == sample_grid(d, 0.25, 7)


# ---------------------------------------------------------------------------
# structural profiles and the fixture registry
# ---------------------------------------------------------------------------

def test_profile_defaults_are_permissive_base_hypotheses():
    p = AssumptionProfile()
    assert p.complete and p.transitive and p.convex_domain
    assert not p.order_dense and not p.interior


def test_strong_bounds_require_plain_bounds():
    with pytest.raises(ValueError):
        AssumptionProfile(strong_order_bounded=True, order_bounded=False)


def test_fixture_registry_is_sorted_and_complete():
    names = fixture_names()
    assert names == sorted(names)
    assert len(names) == 14
    assert {"linear_sum", "gp2", "sqrt2_gap", "sin_reciprocal"} <= set(names)


def test_fixture_lookup():
    f = fixture("linear_sum")
    assert f.name == "linear_sum"
    assert f.domain.dimension == 2
    assert f.profile.order_dense
    with pytest.raises(KeyError):
        fixture("no_such_relation")
