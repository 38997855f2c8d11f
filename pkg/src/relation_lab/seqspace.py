"""Desk-scale model of an infinite product space via eventually-constant
sequences.

A ``SeqPoint`` stores a finite prefix and a constant tail, so every
coordinate, infimum, and mixture in the infimum-utility relation evaluates
exactly in rational arithmetic, and coordinatewise (product-topology)
convergence is decidable.  ``seq_fixture_checks`` reproduces the behaviour
of the infimum relation on this space: continuity fails with an explicit
approaching family, while separate continuity, mixture continuity, and
restricted solvability hold.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Optional, Union

from .checkers import (
    CONTINUITY,
    MIXTURE,
    RESTRICTED,
    SEPARATE,
    CheckConfig,
    Verdict,
    VerdictKind,
    Witness,
)
from .core import AssumptionProfile, Comparison

Scalar = Union[int, float, Fraction]

_BOX_LO = Fraction(-10)
_BOX_HI = Fraction(10)

SEQ_FIXTURE_NAME = "seqspace"

# Pinned verdict pattern for the infimum relation, keyed like the point-space
# checkers so the corpus runner can compare it alongside the catalogue.
SEQ_EXPECTED = {
    CONTINUITY: "violated",
    SEPARATE: "holds",
    MIXTURE: "holds",
    RESTRICTED: "holds",
}


def seq_profile() -> AssumptionProfile:
    """Structural hypotheses of the infimum relation on the sequence box.

    The relation is a weakly monotone, order-dense weak order on a convex
    open box, but the space is infinite-dimensional, so every implication
    gate that needs a finite coordinate count stays off.
    """
    return AssumptionProfile(
        complete=True, transitive=True, weakly_monotone=True,
        monotone_coordinate_count=0, order_dense=True,
        convex_upper_sections=True, order_bounded=True,
        strong_order_bounded=False, interior=True, convex_domain=True,
        finite_dimensional=False, dimension=0)


def _frac(x: Scalar) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, float):
        return Fraction(x)
    raise TypeError(f"not a scalar: {x!r}")


@dataclass(frozen=True)
class SeqPoint:
    """A sequence with finitely many exceptional entries before a constant
    tail: xᵢ = prefix[i] for i < len(prefix), xᵢ = tail beyond.

    The stored form is canonical — trailing prefix entries equal to the
    tail are trimmed — so equal sequences compare equal as values.
    """

    prefix: tuple
    tail: Fraction

    def __repr__(self) -> str:
        entries = ", ".join(str(c) for c in self.prefix)
        sep = ", " if entries else ""
        return f"SeqPoint(({entries}){sep}tail={self.tail})"


def seq_point(prefix=(), tail: Scalar = 0) -> SeqPoint:
    """Canonical SeqPoint with all entries exact and inside the open box."""
    t = _frac(tail)
    entries = [_frac(c) for c in prefix]
    for c in entries + [t]:
        if not (_BOX_LO < c < _BOX_HI):
            raise ValueError(f"coordinate {c} outside the open box "
                             f"({_BOX_LO}, {_BOX_HI})")
    while entries and entries[-1] == t:
        entries.pop()
    return SeqPoint(prefix=tuple(entries), tail=t)


def coordinate(p: SeqPoint, i: int) -> Fraction:
    """The i-th coordinate (0-based), exact."""
    if i < 0:
        raise ValueError("coordinate index must be nonnegative")
    if i < len(p.prefix):
        return p.prefix[i]
    return p.tail


def inf_utility(p: SeqPoint) -> Fraction:
    """Infimum of the coordinates — attained for eventually-constant
    sequences, hence an exact minimum."""
    out = p.tail
    for c in p.prefix:
        if c < out:
            out = c
    return out


def seq_mixture(a: SeqPoint, b: SeqPoint, lam: Scalar) -> SeqPoint:
    """Coordinatewise mixture λ·a + (1−λ)·b, exact."""
    t = _frac(lam)
    n = max(len(a.prefix), len(b.prefix))
    entries = [t * coordinate(a, i) + (1 - t) * coordinate(b, i)
               for i in range(n)]
    return seq_point(entries, t * a.tail + (1 - t) * b.tail)


def seq_compare(a: SeqPoint, b: SeqPoint) -> Comparison:
    """Order by infimum utility, exactly."""
    ua, ub = inf_utility(a), inf_utility(b)
    if ua == ub:
        return Comparison.INDIFF
    return Comparison.SUCC if ua > ub else Comparison.PREC


def replace_coordinate(p: SeqPoint, i: int, c: Scalar) -> SeqPoint:
    """The point p with coordinate i set to c (exact, canonical)."""
    if i < 0:
        raise ValueError("coordinate index must be nonnegative")
    n = max(len(p.prefix), i + 1)
    entries = [coordinate(p, j) for j in range(n)]
    entries[i] = _frac(c)
    return seq_point(entries, p.tail)


def _rest_infimum(p: SeqPoint, i: int) -> Fraction:
    """Infimum over all coordinates except the i-th."""
    out = p.tail
    n = max(len(p.prefix), i + 1)
    for j in range(n):
        if j != i and coordinate(p, j) < out:
            out = coordinate(p, j)
    return out


@dataclass(frozen=True)
class ConvergenceReport:
    """Per-coordinate verdicts of product-topology convergence."""

    converges: bool
    coordinates: tuple  # of (index, ok, stabilization_n or None)
    horizon: int

    def __bool__(self) -> bool:
        return self.converges


def converges_to(family: Callable[[int], SeqPoint], limit: SeqPoint,
                 coord_budget: int = 64, tol: Scalar = 0) -> ConvergenceReport:
    """Does family(n) → limit coordinatewise?

    For each tested coordinate the family must agree with the limit within
    ``tol`` from some index on and stay there through the probe horizon —
    decidable here because each coordinate of an eventually-constant family
    is itself eventually constant.
    """
    if coord_budget < 1:
        raise ValueError("coordinate budget must be positive")
    t = _frac(tol)
    horizon = coord_budget + 8
    pts = [family(n) for n in range(1, horizon + 1)]
    rows = []
    ok_all = True
    for i in range(coord_budget):
        want = coordinate(limit, i)
        stable_n: Optional[int] = None
        for n in range(horizon, 0, -1):
            if abs(coordinate(pts[n - 1], i) - want) <= t:
                stable_n = n
            else:
                break
        ok = stable_n is not None
        ok_all = ok_all and ok
        rows.append((i, ok, stable_n))
    return ConvergenceReport(converges=ok_all, coordinates=tuple(rows),
                             horizon=horizon)


@dataclass(frozen=True)
class SeqWitness(Witness):
    """Replayable transcript over SeqPoints; recomputed by exact compare."""

    note: str = ""

    def replay(self, oracle=None) -> bool:  # oracle ignored: model is fixed
        return all(seq_compare(a, b) is r for (a, b, r) in self.comparisons)

    def _extra_json(self) -> dict:
        return {"note": self.note} if self.note else {}


def _two_tower(n: int) -> SeqPoint:
    """The n-th member of the approaching family: n twos, then zeros."""
    return seq_point([2] * n, 0)


def _sample_points(rng: random.Random, count: int) -> list:
    """Deterministic spread of SeqPoints on a quarter-integer lattice."""
    out = [
        seq_point([], 1),
        seq_point([], 2),
        seq_point([2, 2], 0),
        seq_point([-1, 3], 2),
        seq_point([5], -5),
    ]
    while len(out) < count:
        k = rng.randrange(1, 4)
        prefix = [Fraction(rng.randrange(-36, 37), 4) for _ in range(k)]
        tail = Fraction(rng.randrange(-36, 37), 4)
        out.append(seq_point(prefix, tail))
    return out


def _holds(axiom: str, cfg: CheckConfig) -> Verdict:
    return Verdict(axiom, VerdictKind.HOLDS, resolution=cfg.resolution)


def _check_seq_continuity(cfg: CheckConfig, budget: int = 50) -> Verdict:
    """The lower weak section of the constant-1 point is not closed.

    Every member of the approaching family (n twos, then zeros) has
    infimum 0 and lies weakly below the constant-1 point, the family
    converges coordinatewise to the constant-2 point, yet that limit lies
    strictly above — a closure failure in the product topology.
    """
    x = seq_point([], 1)
    y = seq_point([], 2)
    comps = []
    for n in range(1, budget + 1):
        r = seq_compare(x, _two_tower(n))
        if r not in (Comparison.SUCC, Comparison.INDIFF):
            return _holds(CONTINUITY, cfg)
    comps = [(x, _two_tower(n), seq_compare(x, _two_tower(n)))
             for n in range(1, budget + 1)]
    limit_cmp = seq_compare(y, x)
    if limit_cmp is not Comparison.SUCC:
        return _holds(CONTINUITY, cfg)
    comps.append((y, x, limit_cmp))
    if not converges_to(_two_tower, y, coord_budget=budget):
        return _holds(CONTINUITY, cfg)
    witness = SeqWitness(
        comparisons=tuple(comps),
        note=("members of the lower weak section of the constant-1 point "
              "converge coordinatewise to the constant-2 point, which lies "
              "strictly above"))
    return Verdict(CONTINUITY, VerdictKind.VIOLATED,
                   resolution=cfg.resolution, witness=witness)


def _closure_flip_scan(values, member, res: Fraction, depth: int):
    """Exact closure probe at every membership flip of a scalar section.

    ``values`` is an increasing grid; ``member(v)`` decides weak
    membership.  At each flip the non-member side is probed by a geometric
    chain; a genuine witness needs the whole chain inside the section with
    the limit strictly outside.  Returns the offending (limit, chain) or
    None.
    """
    flags = [member(v) for v in values]
    for j in range(len(values) - 1):
        if flags[j] == flags[j + 1]:
            continue
        limit = values[j + 1] if flags[j] else values[j]
        toward = values[j] if flags[j] else values[j + 1]
        sgn = 1 if toward > limit else -1
        chain = []
        good = True
        for k in range(depth + 1):
            v = limit + sgn * res * Fraction(1, 2 ** k)
            if not member(v):
                good = False
                break
            chain.append(v)
        if good and not member(limit):
            return limit, chain
    return None


def _check_seq_separate(cfg: CheckConfig, samples: list) -> Verdict:
    """Sections along coordinate lines: min(c, rest-inf) is continuous
    piecewise-linear in c, so every flip chain must die out."""
    res = _frac(cfg.resolution)
    grid = [_BOX_LO + Fraction(k, 16) * (_BOX_HI - _BOX_LO)
            for k in range(1, 16)]
    for x in samples[:cfg.sample_budget]:
        for i in (0, 1, 3):
            for z in samples[:4]:
                v = inf_utility(z)

                def member(c, i=i, x=x, v=v):
                    return inf_utility(replace_coordinate(x, i, c)) >= v

                hit = _closure_flip_scan(grid, member, res, cfg.refine_depth)
                if hit is not None:
                    limit, chain = hit
                    p = replace_coordinate(x, i, limit)
                    comps = [(p, z, seq_compare(p, z))]
                    comps += [(replace_coordinate(x, i, c), z,
                               seq_compare(replace_coordinate(x, i, c), z))
                              for c in chain[:8]]
                    w = SeqWitness(comparisons=tuple(comps),
                                   note=f"coordinate-{i} section not closed")
                    return Verdict(SEPARATE, VerdictKind.VIOLATED,
                                   resolution=cfg.resolution, witness=w)
    return _holds(SEPARATE, cfg)


def _check_seq_mixture(cfg: CheckConfig, samples: list,
                       rng: random.Random) -> Verdict:
    """λ-sections of sampled mixture segments; the infimum of linear
    coordinate paths is concave in λ, so weak upper sections are closed
    intervals and every flip chain must die out."""
    res = _frac(cfg.resolution)
    grid = [Fraction(k, 32) for k in range(33)]
    for _ in range(cfg.sample_budget):
        x = rng.choice(samples)
        y = rng.choice(samples)
        z = rng.choice(samples)
        if x == y:
            continue
        uz = inf_utility(z)
        for sign in (1, -1):
            def member(lam, x=x, y=y, uz=uz, sign=sign):
                if not (0 <= lam <= 1):
                    return None
                u = inf_utility(seq_mixture(x, y, lam))
                return u >= uz if sign > 0 else u <= uz

            def bounded_member(lam, member=member):
                m = member(lam)
                return bool(m) if m is not None else False

            hit = _closure_flip_scan(grid, bounded_member, res,
                                     cfg.refine_depth)
            if hit is not None:
                limit, chain = hit
                if not (0 <= limit <= 1):
                    continue
                p = seq_mixture(x, y, limit)
                comps = [(p, z, seq_compare(p, z))]
                comps += [(seq_mixture(x, y, lam), z,
                           seq_compare(seq_mixture(x, y, lam), z))
                          for lam in chain[:8]]
                w = SeqWitness(comparisons=tuple(comps),
                               note="mixture λ-section not closed")
                return Verdict(MIXTURE, VerdictKind.VIOLATED,
                               resolution=cfg.resolution, witness=w)
    return _holds(MIXTURE, cfg)


def _check_seq_restricted(cfg: CheckConfig, samples: list,
                          rng: random.Random) -> Verdict:
    """Exact restricted solvability along coordinate lines.

    Whenever endpoints on a coordinate line weakly sandwich a target, the
    equation min(c, rest-inf) = target-inf has the exact solution c =
    target-inf (the sandwich forces rest-inf ≥ target-inf), which the scan
    verifies; a sandwich without a solution would be the violation."""
    for _ in range(cfg.sample_budget):
        x = rng.choice(samples)
        z = rng.choice(samples)
        i = rng.choice((0, 1, 3))
        a = _BOX_HI - Fraction(1, 4)
        b = _BOX_LO + Fraction(1, 4)
        pa = replace_coordinate(x, i, a)
        pb = replace_coordinate(x, i, b)
        ra = seq_compare(pa, z)
        rb = seq_compare(pb, z)
        if ra is Comparison.PREC or rb is Comparison.SUCC:
            continue  # not a sandwich
        v = inf_utility(z)
        if not (b <= v <= a):
            continue
        c = v
        pc = replace_coordinate(x, i, c)
        if seq_compare(pc, z) is not Comparison.INDIFF:
            w = SeqWitness(
                comparisons=((pa, z, ra), (pb, z, rb),
                             (pc, z, seq_compare(pc, z))),
                note=f"no solution on coordinate {i} despite sandwich")
            return Verdict(RESTRICTED, VerdictKind.VIOLATED,
                           resolution=cfg.resolution, witness=w)
    return _holds(RESTRICTED, cfg)


def seq_fixture_checks(cfg: Optional[CheckConfig] = None) -> dict:
    """Exact axiom battery for the infimum relation on sequence space.

    Returns verdicts keyed like the point-space checkers: continuity is
    violated (with a replayable approaching-family witness), while separate
    continuity, mixture continuity, and restricted solvability hold.
    """
    cfg = cfg or CheckConfig()
    rng = random.Random(f"{cfg.seed}:seqspace")
    samples = _sample_points(rng, max(8, cfg.sample_budget))
    return {
        CONTINUITY: _check_seq_continuity(cfg),
        SEPARATE: _check_seq_separate(cfg, samples),
        MIXTURE: _check_seq_mixture(cfg, samples, rng),
        RESTRICTED: _check_seq_restricted(cfg, samples, rng),
    }
