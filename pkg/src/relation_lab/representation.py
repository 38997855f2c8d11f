"""Constructive monotone utility representation by diagonal bisection.

``solve_indifference_on_segment`` finds a point on a segment indifferent to
a target by pure bisection over the mixture parameter.
``wold_utility_value`` turns that into a utility value: the parameter t* of
the indifference point on the domain diagonal.  ``build_utility_table``
materializes the construction over the sample lattice, and
``verify_representation`` replays ordinal agreement between table values
and the oracle on seeded pairs.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Optional, Union

from .checkers import CheckConfig, SolvGap
from .core import (
    Comparison,
    ComparisonOracle,
    Domain,
    Point,
    compare,
    mixture,
    sample_grid,
)


class IncompletenessError(RuntimeError):
    """The oracle declared a pair incomparable mid-construction."""

    def __init__(self, a: Point, b: Point) -> None:
        super().__init__(f"incomparable pair encountered: {a!r} vs {b!r}")
        self.pair = (a, b)


class RepresentationFailure(RuntimeError):
    """The diagonal provably misses the indifference class of a point."""

    def __init__(self, x: Point, gap: SolvGap) -> None:
        super().__init__(
            f"no indifference point for {x!r} on the diagonal: the bisection "
            f"bracket {gap.bracket} collapsed with both ends strict")
        self.x = x
        self.gap = gap


def _json_value(v) -> object:
    if isinstance(v, (int, float)):
        return v
    return str(v)


def _json_point(p: Point) -> list:
    return [_json_value(c) for c in p]


@dataclass(frozen=True)
class IndiffCertificate:
    """A certified indifference point on a segment.

    ``point`` = mixture(a, b, ``lam``) compared INDIFF to ``x``; the
    ``sandwich`` pair (p⁻, p⁺) satisfies p⁺ ≿ x ≿ p⁻ within the bisection
    tolerance (for an indifferent point both entries are the point itself).
    ``comparisons`` is the full oracle transcript and must replay exactly.
    """

    point: Point
    lam: float
    sandwich: tuple
    x: Point
    iterations: int
    oracle_calls: int
    comparisons: tuple

    def replay(self, oracle: ComparisonOracle) -> bool:
        return all(compare(oracle, a, b) is r for (a, b, r) in self.comparisons)

    def to_dict(self) -> dict:
        return {
            "point": _json_point(self.point),
            "lam": self.lam,
            "sandwich": [_json_point(p) for p in self.sandwich],
            "x": _json_point(self.x),
            "iterations": self.iterations,
            "oracle_calls": self.oracle_calls,
            "comparisons": [
                [_json_point(a), _json_point(b), r.value]
                for (a, b, r) in self.comparisons
            ],
        }


def solve_indifference_on_segment(
        oracle: ComparisonOracle, x: Point, a: Point, b: Point,
        cfg: Optional[CheckConfig] = None) -> Union[IndiffCertificate, SolvGap]:
    """Find p = mixture(a, b, λ) with p ∼ x by bisection over λ ∈ [0, 1].

    The endpoints must weakly sandwich the target (a ≿ x ≿ b or the
    reverse); two strict endpoints on the same side raise ValueError.  An
    endpoint indifferent to x certifies immediately (λ = 1 at a, λ = 0 at
    b).  Otherwise the strict bracket is halved until some mixture is
    indifferent (certificate) or the bracket collapses to adjacent floats
    with both ends still strict — then the float segment contains no
    indifference point of x and a SolvGap with the final bracket is
    returned.  An incomparable answer raises IncompletenessError.
    """
    cfg = cfg or CheckConfig()
    calls = 0
    transcript: list = []

    def cmp_at(p: Point) -> Comparison:
        nonlocal calls
        calls += 1
        r = compare(oracle, p, x)
        if r is Comparison.INCOMP:
            raise IncompletenessError(p, x)
        transcript.append((p, x, r))
        return r

    def certificate(p: Point, lam: float, iterations: int) -> IndiffCertificate:
        return IndiffCertificate(point=p, lam=lam, sandwich=(p, p), x=x,
                                 iterations=iterations, oracle_calls=calls,
                                 comparisons=tuple(transcript))

    pa = mixture(a, b, 1.0)
    pb = mixture(a, b, 0.0)
    ra = cmp_at(pa)
    if ra is Comparison.INDIFF:
        return certificate(pa, 1.0, 0)
    rb = cmp_at(pb)
    if rb is Comparison.INDIFF:
        return certificate(pb, 0.0, 0)
    if ra is rb:
        side = "above" if ra is Comparison.SUCC else "below"
        raise ValueError(
            f"segment endpoints do not sandwich the target: both ends are "
            f"strictly {side} {x!r}")
    hi_lam = 1.0 if ra is Comparison.SUCC else 0.0
    lo_lam = 1.0 - hi_lam
    iterations = 0
    while iterations < cfg.bisect_max_iter:
        mid = 0.5 * (hi_lam + lo_lam)
        if mid == hi_lam or mid == lo_lam:
            break  # adjacent floats: no parameter left to probe
        iterations += 1
        p = mixture(a, b, mid)
        r = cmp_at(p)
        if r is Comparison.INDIFF:
            return certificate(p, mid, iterations)
        if r is Comparison.SUCC:
            hi_lam = mid
        else:
            lo_lam = mid
    bracket = (min(lo_lam, hi_lam), max(lo_lam, hi_lam))
    return SolvGap(comparisons=tuple(transcript), x=x, coordinate="lambda",
                   rest=(), bracket=bracket)


def _box_corners(domain: Domain) -> tuple:
    lo_pt = tuple(float(lo) for lo, _ in domain.box)
    hi_pt = tuple(float(hi) for _, hi in domain.box)
    return lo_pt, hi_pt


def wold_utility_value(oracle: ComparisonOracle, domain: Domain, x: Point,
                       cfg: Optional[CheckConfig] = None) -> float:
    """Utility of x as the diagonal parameter t* with diag(t*) ∼ x.

    diag(t) = lo + t·(hi − lo) runs between the box corners; the returned
    value is the bisection parameter of the certified indifference point,
    so it depends on the oracle's order only — any strictly increasing
    re-utilization of the same order yields the same t*.  Raises ValueError
    when the diagonal does not weakly sandwich x and RepresentationFailure
    when the bisection certifies a gap instead of an indifference point.
    """
    cfg = cfg or CheckConfig()
    lo_pt, hi_pt = _box_corners(domain)
    if lo_pt == hi_pt:
        raise ValueError("degenerate domain box: the diagonal has no length")
    r_hi = compare(oracle, hi_pt, x)
    r_lo = compare(oracle, lo_pt, x)
    if Comparison.INCOMP in (r_hi, r_lo):
        bad = hi_pt if r_hi is Comparison.INCOMP else lo_pt
        raise IncompletenessError(bad, x)
    if r_hi is Comparison.PREC or r_lo is Comparison.SUCC:
        raise ValueError(
            f"diagonal does not sandwich {x!r}: top corner compares "
            f"{r_hi.value}, bottom corner compares {r_lo.value}")
    out = solve_indifference_on_segment(oracle, x, hi_pt, lo_pt, cfg)
    if isinstance(out, SolvGap):
        raise RepresentationFailure(x, out)
    return out.lam


@dataclass
class UtilityTable:
    """Diagonal-parameter values over a grid, with per-cell failures kept.

    ``values`` maps grid points to t* ∈ [0, 1]; ``failures`` maps points
    the construction could not value to a SolvGap or a reason string.
    """

    points: tuple
    values: dict
    failures: dict
    diagonal: tuple
    tolerance: float
    pitch: float

    @property
    def complete(self) -> bool:
        return not self.failures

    def to_csv(self) -> str:
        """Rows ``x1,...,xn,t`` in lexicographic point order."""
        if not self.complete:
            raise ValueError(
                f"utility table has {len(self.failures)} failed cells; "
                "only complete tables export to CSV")
        n = len(self.diagonal[0])
        lines = [",".join([f"x{i + 1}" for i in range(n)] + ["t"])]
        for p in sorted(self.points):
            lines.append(",".join([repr(float(c)) for c in p]
                                  + [repr(self.values[p])]))
        return "\n".join(lines) + "\n"

    def to_dict(self) -> dict:
        return {
            "diagonal": [_json_point(p) for p in self.diagonal],
            "tolerance": self.tolerance,
            "pitch": self.pitch,
            "cells": len(self.points),
            "values": [
                [_json_point(p), self.values[p]]
                for p in sorted(self.values)
            ],
            "failures": [
                [_json_point(p),
                 f.to_dict() if isinstance(f, SolvGap) else str(f)]
                for p, f in sorted(self.failures.items())
            ],
        }


def build_utility_table(oracle: ComparisonOracle, domain: Domain,
                        cfg: Optional[CheckConfig] = None) -> UtilityTable:
    """Wold values over the resolution lattice of the domain.

    Per-cell failures (diagonal range errors, certified gaps, incomparable
    answers) are recorded in the table instead of aborting the build.
    """
    cfg = cfg or CheckConfig()
    pts = tuple(sample_grid(domain, cfg.resolution, cfg.seed))
    values: dict = {}
    failures: dict = {}
    for p in pts:
        try:
            values[p] = wold_utility_value(oracle, domain, p, cfg)
        except RepresentationFailure as exc:
            failures[p] = exc.gap
        except (ValueError, IncompletenessError) as exc:
            failures[p] = str(exc)
    lo_pt, hi_pt = _box_corners(domain)
    return UtilityTable(points=pts, values=values, failures=failures,
                        diagonal=(lo_pt, hi_pt), tolerance=cfg.bisect_tol,
                        pitch=cfg.resolution)


@dataclass(frozen=True)
class AgreementReport:
    """Ordinal agreement between a utility table and its oracle."""

    pairs: int
    agreements: int
    worst: Optional[tuple]  # (a, b, t_a, t_b, predicted, actual)

    @property
    def agreement(self) -> float:
        return 1.0 if self.pairs == 0 else self.agreements / self.pairs

    def to_dict(self) -> dict:
        out: dict = {
            "pairs": self.pairs,
            "agreements": self.agreements,
            "agreement": self.agreement,
        }
        if self.worst is not None:
            a, b, t_a, t_b, predicted, actual = self.worst
            out["worst"] = {
                "a": _json_point(a),
                "b": _json_point(b),
                "t_a": t_a,
                "t_b": t_b,
                "predicted": predicted.value,
                "actual": actual.value,
            }
        return out


def verify_representation(oracle: ComparisonOracle, table: UtilityTable,
                          pair_budget: int, seed: int) -> AgreementReport:
    """Compare table-order with oracle-order on seeded grid pairs.

    The table predicts indifference when |t(a) − t(b)| ≤ tolerance and the
    strict order by the sign of the difference otherwise.  Reports the
    agreement fraction and the disagreeing pair with the largest value gap
    (the most confidently wrong prediction).
    """
    if not table.complete:
        raise ValueError(
            f"utility table has {len(table.failures)} failed cells; "
            "verification requires a complete table")
    if pair_budget < 1:
        raise ValueError("pair budget must be positive")
    rng = random.Random(f"{seed}:verify")
    pts = sorted(table.points)
    agreements = 0
    worst: Optional[tuple] = None
    for _ in range(pair_budget):
        a = rng.choice(pts)
        b = rng.choice(pts)
        dt = table.values[a] - table.values[b]
        if abs(dt) <= table.tolerance:
            predicted = Comparison.INDIFF
        elif dt > 0:
            predicted = Comparison.SUCC
        else:
            predicted = Comparison.PREC
        actual = compare(oracle, a, b)
        if predicted is actual:
            agreements += 1
        elif worst is None or abs(dt) > abs(worst[2] - worst[3]):
            worst = (a, b, table.values[a], table.values[b], predicted, actual)
    return AgreementReport(pairs=pair_budget, agreements=agreements,
                           worst=worst)
