"""Falsification-based axiom checkers.

Every checker probes a comparison oracle over a domain at a stated
resolution and returns a resolution-stamped verdict:

- ``Holds(resolution)`` — no counterexample found at this resolution.  The
  axioms quantify over topologies, so this is falsification, not proof.
- ``Violated(witness)`` — a counterexample whose every recorded comparison
  replays exactly against the oracle.
- ``Inapplicable(reason)`` — the axiom's quantifier ranges over an empty or
  undefined collection (e.g. mixtures on a non-convex domain).

Sections and closure: for a complete relation, the strict section
{y : y ≻ x} is open exactly when the complementary weak section
{y : x ≿ y} is closed, so probing closure of both weak sections (upper and
lower) fully covers continuity, including the openness half.

Indifference search policy: a scan finds an exact indifference, or a strict
sign change that bisection drives to an exact indifference, or the bracket
exhausts the tolerance.  An exhausted bracket alone never certifies a gap —
the fixture's exact-knowledge hook is consulted, and only a certified
"no solution exists on this line" yields a gap witness.  The Archimedean
checker is the exception: per its contract, an exhausted search (grid,
geometric refinement, window hooks, side hooks) is itself the violation.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from enum import Enum
from typing import Any, Callable, Optional, Sequence

from .core import (
    CheckHints,
    Comparison,
    ComparisonOracle,
    Domain,
    OracleHooks,
    Point,
    QSqrt2,
    compare,
    lerp,
    mixture,
    sample_grid,
)

# axiom identifiers (shared with the harness enum values)
CONTINUITY = "continuity"
WOLD = "wold"
WEAK_WOLD = "weak_wold"
MIXTURE = "mixture"
ARCHIMEDEAN = "archimedean"
SEPARATE = "separate"
RESTRICTED = "restricted_solv"
UNRESTRICTED = "unrestricted_solv"
STRONGER_RS = "stronger_rs"


@dataclass(frozen=True)
class CheckConfig:
    """Knobs shared by all checkers; resolution is both grid and λ pitch."""

    resolution: float = 1e-3
    refine_depth: int = 40
    bisect_tol: float = 1e-12
    bisect_max_iter: int = 200
    sample_budget: int = 12
    line_scan_cap: int = 257
    seed: int = 0

    def __post_init__(self) -> None:
        if self.resolution <= 0:
            raise ValueError("resolution must be positive")
        if self.refine_depth < 8:
            raise ValueError("refine_depth must be at least 8")
        if self.bisect_tol <= 0:
            raise ValueError("bisect_tol must be positive")
        if self.bisect_max_iter < 1 or self.sample_budget < 1:
            raise ValueError("iteration and sample budgets must be positive")
        if self.line_scan_cap < 33:
            raise ValueError("line_scan_cap must be at least 33")


class VerdictKind(Enum):
    HOLDS = "holds"
    VIOLATED = "violated"
    INAPPLICABLE = "inapplicable"


# ---------------------------------------------------------------------------
# witnesses
# ---------------------------------------------------------------------------

def _json_scalar(x: Any):
    if isinstance(x, float):
        return x
    if isinstance(x, int):
        return x
    return str(x)


def _json_point(p: Any):
    if isinstance(p, tuple):
        return [_json_scalar(c) for c in p]
    return _json_scalar(p)


@dataclass(frozen=True)
class Witness:
    """Base: a transcript of oracle comparisons that must replay exactly."""

    comparisons: tuple  # of (a, b, Comparison)

    def replay(self, oracle: ComparisonOracle) -> bool:
        return all(compare(oracle, a, b) is r for (a, b, r) in self.comparisons)

    def kind(self) -> str:
        return type(self).__name__

    def _extra_json(self) -> dict:
        return {}

    def to_dict(self) -> dict:
        out = {"type": self.kind()}
        out.update(self._extra_json())
        out["comparisons"] = [
            [_json_point(a), _json_point(b), r.value]
            for (a, b, r) in self.comparisons
        ]
        return out


@dataclass(frozen=True)
class ClosureWitness(Witness):
    """A weak section that fails to be closed: members approach a non-member.

    ``approach`` lists ≥ refine_depth points on ``side`` of x converging to
    ``limit``, which is strictly on the other side.  For mixture-continuity
    the probe lives in λ-space: ``lambdas`` records the parameters and
    ``triple`` the (x, y, z) whose mixture segment was scanned.
    """

    x: Point
    limit: Point
    side: str
    approach: tuple
    space: str = "point"
    lambdas: tuple = ()
    triple: Optional[tuple] = None

    def _extra_json(self) -> dict:
        out = {
            "x": _json_point(self.x),
            "limit": _json_point(self.limit),
            "side": self.side,
            "approach": [_json_point(p) for p in self.approach],
            "space": self.space,
        }
        if self.lambdas:
            out["lambdas"] = list(self.lambdas)
        if self.triple is not None:
            out["triple"] = [_json_point(p) for p in self.triple]
        return out


@dataclass(frozen=True)
class OpennessWitness(Witness):
    """A strict section that fails to be open: intruders in shrinking balls.

    Never produced by the checkers themselves — for complete relations the
    closure probe of the complementary weak section subsumes it — but part
    of the witness vocabulary and replayable like the rest.
    """

    x: Point
    y: Point
    intruders: tuple

    def _extra_json(self) -> dict:
        return {
            "x": _json_point(self.x),
            "y": _json_point(self.y),
            "intruders": [_json_point(p) for p in self.intruders],
        }


@dataclass(frozen=True)
class SolvGap(Witness):
    """A solvability gap: the indifference class of x misses a line."""

    x: Point
    coordinate: Any  # 1-based index, or tuple of indices for lockstep moves
    rest: tuple
    bracket: tuple

    def _extra_json(self) -> dict:
        return {
            "x": _json_point(self.x),
            "coordinate": self.coordinate if not isinstance(self.coordinate, tuple)
            else list(self.coordinate),
            "rest": [_json_scalar(c) for c in self.rest],
            "bracket": [_json_scalar(c) for c in self.bracket],
        }


@dataclass(frozen=True)
class LineMiss(Witness):
    """Weak Wold failure: the segment from x to y misses z's class."""

    x: Point
    z: Point
    y: Point
    lambdas: tuple

    def _extra_json(self) -> dict:
        return {
            "x": _json_point(self.x),
            "z": _json_point(self.z),
            "y": _json_point(self.y),
            "lambdas": list(self.lambdas),
        }


@dataclass(frozen=True)
class CurveMiss(Witness):
    """Wold failure: a family arc from x to y misses z's class."""

    x: Point
    z: Point
    y: Point
    curve_id: str
    ts: tuple

    def _extra_json(self) -> dict:
        return {
            "x": _json_point(self.x),
            "z": _json_point(self.z),
            "y": _json_point(self.y),
            "curve_id": self.curve_id,
            "ts": list(self.ts),
        }


@dataclass(frozen=True)
class ArchScan(Witness):
    """Archimedean failure: one side's search exhausted every budget."""

    x: Point
    y: Point
    z: Point
    failed_side: str  # "lambda" or "delta"
    lambda_grid: tuple
    delta_grid: tuple

    def _extra_json(self) -> dict:
        return {
            "x": _json_point(self.x),
            "y": _json_point(self.y),
            "z": _json_point(self.z),
            "failed_side": self.failed_side,
            "lambda_grid": list(self.lambda_grid),
            "delta_grid": list(self.delta_grid),
        }


@dataclass(frozen=True)
class DenseGap(Witness):
    """Order-density failure: no probed point lies strictly between x ≻ y."""

    x: Point
    y: Point
    probes: tuple

    def _extra_json(self) -> dict:
        return {
            "x": _json_point(self.x),
            "y": _json_point(self.y),
            "probes": [_json_point(p) for p in self.probes],
        }


@dataclass(frozen=True)
class BasicFail(Witness):
    """Failure of a basic relational property on a concrete tuple."""

    property: str
    points: tuple

    def _extra_json(self) -> dict:
        return {
            "property": self.property,
            "points": [_json_point(p) for p in self.points],
        }


@dataclass(frozen=True)
class Verdict:
    axiom: str
    kind: VerdictKind
    resolution: Optional[float] = None
    witness: Optional[Witness] = None
    reason: str = ""

    def replay(self, oracle: ComparisonOracle) -> bool:
        if self.witness is None:
            return True
        return self.witness.replay(oracle)

    def to_dict(self) -> dict:
        out = {"axiom": self.axiom, "kind": self.kind.value}
        if self.resolution is not None:
            out["resolution"] = self.resolution
        if self.witness is not None:
            out["witness"] = self.witness.to_dict()
        if self.reason:
            out["reason"] = self.reason
        return out


def _holds(axiom: str, cfg: CheckConfig) -> Verdict:
    return Verdict(axiom, VerdictKind.HOLDS, resolution=cfg.resolution)


def _violated(axiom: str, cfg: CheckConfig, witness: Witness) -> Verdict:
    return Verdict(axiom, VerdictKind.VIOLATED, resolution=cfg.resolution,
                   witness=witness)


def _inapplicable(axiom: str, reason: str) -> Verdict:
    return Verdict(axiom, VerdictKind.INAPPLICABLE, reason=reason)


# ---------------------------------------------------------------------------
# shared machinery
# ---------------------------------------------------------------------------

class _IncompFound(Exception):
    def __init__(self, a: Point, b: Point) -> None:
        super().__init__("incomparable pair encountered")
        self.a = a
        self.b = b


def _cmp(oracle: ComparisonOracle, a: Point, b: Point,
         log: Optional[list] = None) -> Comparison:
    r = compare(oracle, a, b)
    if r is Comparison.INCOMP:
        raise _IncompFound(a, b)
    if log is not None:
        log.append((a, b, r))
    return r


def _incomp_verdict(axiom: str, cfg: CheckConfig, exc: _IncompFound) -> Verdict:
    w = BasicFail(comparisons=((exc.a, exc.b, Comparison.INCOMP),),
                  property="complete", points=(exc.a, exc.b))
    return _violated(axiom, cfg, w)


def _hints(oracle: ComparisonOracle) -> CheckHints:
    return oracle.hints if oracle.hints is not None else CheckHints()


def _hooks(oracle: ComparisonOracle) -> OracleHooks:
    return oracle.hooks if oracle.hooks is not None else OracleHooks()


def _scan_count(cfg: CheckConfig, span: float = 1.0) -> int:
    # Snapped to 2**k + 1 so scan parameters are exact binary floats; a
    # boundary crossing that lands exactly on a scan point then evaluates
    # exactly instead of one ulp off.
    if span <= 0:
        return 1
    raw = int(span / cfg.resolution + 1e-9) + 1
    raw = max(33, min(1025, raw))
    snapped = 33
    while snapped < raw:
        snapped = (snapped - 1) * 2 + 1
    return snapped


def _grid(lo: float, hi: float, count: int) -> list:
    if count <= 1 or hi == lo:
        return [lo]
    step = (hi - lo) / (count - 1)
    return [lo + k * step for k in range(count - 1)] + [hi]


def _rng(cfg: CheckConfig, oracle: ComparisonOracle, tag: str) -> random.Random:
    return random.Random(f"{cfg.seed}:{tag}:{oracle.name}")


def _spread_indices(n: int, k: int) -> list:
    """k well-spread indices over range(n), deterministic."""
    if n <= 0:
        return []
    if k >= n:
        return list(range(n))
    if k == 1:
        return [n // 2]
    return sorted({round(i * (n - 1) / (k - 1)) for i in range(k)})


def _anchor_points(samples: list, budget: int) -> list:
    return [samples[i] for i in _spread_indices(len(samples), budget)]


def _weakly_on(side: str, r: Comparison) -> bool:
    """Membership of the weak section: p ≿ x ("upper") or p ≼ x ("lower")."""
    if side == "upper":
        return r in (Comparison.SUCC, Comparison.INDIFF)
    return r in (Comparison.PREC, Comparison.INDIFF)


def _strictly_opposite(side: str, r: Comparison) -> bool:
    return r is (Comparison.PREC if side == "upper" else Comparison.SUCC)


def _weak_side_tag(side: str) -> str:
    return "succ_eq" if side == "upper" else "prec_eq"


# ---------------------------------------------------------------------------
# closure probing
# ---------------------------------------------------------------------------

def section_closure_probe(oracle: ComparisonOracle, domain: Domain, x: Point,
                          limit: Point, direction: Sequence[float], side: str,
                          cfg: CheckConfig,
                          window_member: Optional[Callable] = None,
                          ) -> Optional[ClosureWitness]:
    """Probe whether the weak section on ``side`` of x is closed at ``limit``.

    Builds pₖ = limit + resolution·2⁻ᵏ·direction for k = 0..refine_depth.
    A witness requires every pₖ (or a window substitute supplied by the
    oracle's window hook, for oscillating member sets) to lie on ``side``
    of x while the limit itself is strictly on the other side.
    """
    if side not in ("upper", "lower"):
        raise ValueError("side must be 'upper' or 'lower'")
    if not domain.contains(limit):
        return None
    res = cfg.resolution
    first = tuple(float(c) + res * float(d) for c, d in zip(limit, direction))
    if not domain.contains(first):
        return None
    comps: list = []
    limit_cmp = _cmp(oracle, limit, x, comps)
    if not _strictly_opposite(side, limit_cmp):
        return None
    hook = window_member
    offset = tuple(res * float(d) for d in direction)
    approach = []
    for k in range(cfg.refine_depth + 1):
        scale = 0.5 ** k
        p = tuple(float(c) + scale * o for c, o in zip(limit, offset))
        if p == tuple(float(c) for c in limit):
            return None  # float exhaustion: cannot distinguish from the limit
        member = False
        if domain.contains(p):
            r = _cmp(oracle, p, x)
            if _weakly_on(side, r):
                comps.append((p, x, r))
                approach.append(p)
                member = True
        if not member:
            if hook is None:
                return None
            s = hook(limit, offset, scale / 2.0, scale, x, _weak_side_tag(side))
            if s is None:
                return None
            q = tuple(float(c) + float(s) * o for c, o in zip(limit, offset))
            if not domain.contains(q):
                return None
            r = _cmp(oracle, q, x)
            if not _weakly_on(side, r):
                return None
            comps.append((q, x, r))
            approach.append(q)
    if len(approach) < cfg.refine_depth:
        return None
    return ClosureWitness(comparisons=tuple(comps), x=x, limit=limit,
                          side=side, approach=tuple(approach))


def _line_flip_candidates(oracle: ComparisonOracle, domain: Domain, x: Point,
                          base: Point, direction: Sequence[float],
                          cfg: CheckConfig) -> list:
    """Candidate (limit, toward-member unit direction, side) triples.

    Scans the full line through ``base`` along ``direction``; every
    membership flip of a weak section of x, and every non-member endpoint
    adjacent to members, nominates the non-member point as a closure limit.
    """
    rng_range = domain.line_range(base, direction)
    if rng_range is None:
        return []
    t_lo, t_hi = rng_range.t_lo, rng_range.t_hi
    if not (t_lo < t_hi):
        return []
    count = min(cfg.line_scan_cap, _scan_count(cfg, (t_hi - t_lo)))
    if count % 2 == 1:
        # An odd number of divisions keeps interior scan points off the
        # dyadic value levels of lattice anchors; a power-of-two ladder on a
        # wall-to-wall span lands exactly on those levels with one-ulp float
        # noise, minting fake closure limits one ulp past a closed section.
        count += 1
    ts = _grid(t_lo, t_hi, count)
    pts = [tuple(float(b) + t * float(d) for b, d in zip(base, direction))
           for t in ts]
    flat = [(t, p) for t, p in zip(ts, pts) if domain.contains(p)]
    if len(flat) < 2:
        return []
    rs = [_cmp(oracle, p, x) for _, p in flat]
    out = []
    for side in ("upper", "lower"):
        members = [_weakly_on(side, r) for r in rs]
        strict_opp = [_strictly_opposite(side, r) for r in rs]
        for j in range(len(flat) - 1):
            a_member, b_member = members[j], members[j + 1]
            if a_member == b_member:
                continue
            if a_member and strict_opp[j + 1]:
                limit, member_pt = flat[j + 1][1], flat[j][1]
            elif b_member and strict_opp[j]:
                limit, member_pt = flat[j][1], flat[j + 1][1]
            else:
                continue
            delta = tuple(m - l for m, l in zip(member_pt, limit))
            norm = max(abs(c) for c in delta)
            if norm == 0:
                continue
            length = sum(c * c for c in delta) ** 0.5
            unit = tuple(c / length for c in delta)
            out.append((limit, unit, side))
    return out


def _continuity_engine(oracle: ComparisonOracle, domain: Domain,
                       cfg: CheckConfig, axiom: str,
                       directions_for: Callable[[int], list],
                       hinted: list) -> Verdict:
    """Shared engine for full and separate continuity."""
    window = _hooks(oracle).window_member
    try:
        for x, limit, direction, side in hinted:
            w = section_closure_probe(oracle, domain, x, limit, direction,
                                      side, cfg, window_member=window)
            if w is not None:
                return _violated(axiom, cfg, w)
        samples = sample_grid(domain, cfg.resolution, cfg.seed)
        n = domain.dimension
        anchors = _anchor_points(samples, min(6, cfg.sample_budget))
        bases = _anchor_points(samples, min(4, max(2, cfg.sample_budget // 2)))
        probes_left = 200
        for x in anchors:
            for direction in directions_for(n):
                for base in bases:
                    cands = _line_flip_candidates(oracle, domain, x, base,
                                                  direction, cfg)
                    for limit, unit, side in cands:
                        if probes_left <= 0:
                            break
                        probes_left -= 1
                        w = section_closure_probe(oracle, domain, x, limit,
                                                  unit, side, cfg,
                                                  window_member=window)
                        if w is not None:
                            return _violated(axiom, cfg, w)
    except _IncompFound as exc:
        return _incomp_verdict(axiom, cfg, exc)
    return _holds(axiom, cfg)


def _direction_bundle(n: int, cfg: CheckConfig, oracle: ComparisonOracle) -> list:
    dirs = []
    for i in range(n):
        e = [0.0] * n
        e[i] = 1.0
        dirs.append(tuple(e))
    if n > 1:
        d = (1.0 / n ** 0.5)
        dirs.append(tuple([d] * n))
    rng = _rng(cfg, oracle, "directions")
    for _ in range(2):
        v = [rng.uniform(-1.0, 1.0) for _ in range(n)]
        norm = sum(c * c for c in v) ** 0.5
        if norm > 1e-9:
            dirs.append(tuple(c / norm for c in v))
    for d in _hints(oracle).directions:
        dirs.append(tuple(float(c) for c in d))
    return dirs


def check_continuity(oracle: ComparisonOracle, domain: Domain,
                     cfg: CheckConfig) -> Verdict:
    """Closed weak sections in the full domain topology.

    Probes closure of upper and lower weak sections along a direction
    bundle (axes, main diagonal, seeded directions, hint directions); for a
    complete relation this also covers openness of the strict sections.
    """
    hinted = list(_hints(oracle).continuity)

    def dirs(n: int) -> list:
        return _direction_bundle(n, cfg, oracle)

    return _continuity_engine(oracle, domain, cfg, CONTINUITY, dirs, hinted)


def check_separate_continuity(oracle: ComparisonOracle, domain: Domain,
                              cfg: CheckConfig) -> Verdict:
    """Closed traces of weak sections on coordinate-parallel lines.

    For anchors x anywhere in the domain, the intersection of each weak
    section of x with every line parallel to a coordinate axis must be
    closed in that line; anchors need not lie on the probed line.  On 1-D
    domains this coincides with full continuity.
    """
    n = domain.dimension
    hinted = []
    for x, i, rest, limit, side in _hints(oracle).separate:
        for sgn in (1.0, -1.0):
            d = tuple(sgn if j == i else 0.0 for j in range(n))
            hinted.append((x, limit, d, side))

    def dirs(dim: int) -> list:
        return [tuple(1.0 if j == i else 0.0 for j in range(dim))
                for i in range(dim)]

    return _continuity_engine(oracle, domain, cfg, SEPARATE, dirs, hinted)


def check_mixture_continuity(oracle: ComparisonOracle, domain: Domain,
                             cfg: CheckConfig) -> Verdict:
    """Closedness of {λ : xλy ≿ z} and its dual for sampled triples."""
    axiom = MIXTURE
    if not domain.is_convex:
        return _inapplicable(axiom, "mixtures leave a non-convex domain")
    window = _hooks(oracle).window_member
    try:
        for hint in _hints(oracle).mixture:
            if len(hint) == 3:
                x, y, z = hint
                w = _mixture_probe_triple(oracle, domain, x, y, z, cfg, window)
            else:
                x, y, z, side, lam_star, sgn = hint
                w = _mixture_chain(oracle, domain, x, y, z, side,
                                   float(lam_star), float(sgn), cfg, window)
            if w is not None:
                return _violated(axiom, cfg, w)
        samples = sample_grid(domain, cfg.resolution, cfg.seed)
        rng = _rng(cfg, oracle, "mixture")
        for _ in range(cfg.sample_budget):
            x = rng.choice(samples)
            y = rng.choice(samples)
            z = rng.choice(samples)
            if x == y:
                continue
            w = _mixture_probe_triple(oracle, domain, x, y, z, cfg, window)
            if w is not None:
                return _violated(axiom, cfg, w)
    except _IncompFound as exc:
        return _incomp_verdict(axiom, cfg, exc)
    return _holds(axiom, cfg)


def _mixture_probe_triple(oracle, domain, x, y, z, cfg, window):
    ts = _grid(0.0, 1.0, _scan_count(cfg))
    rs = [_cmp(oracle, mixture(x, y, t), z) for t in ts]
    for side in ("upper", "lower"):
        members = [_weakly_on(side, r) for r in rs]
        for j in range(len(ts) - 1):
            if members[j] == members[j + 1]:
                continue
            if members[j] and _strictly_opposite(side, rs[j + 1]):
                lam_star, sgn = ts[j + 1], -1.0
            elif members[j + 1] and _strictly_opposite(side, rs[j]):
                lam_star, sgn = ts[j], 1.0
            else:
                continue
            w = _mixture_chain(oracle, domain, x, y, z, side, lam_star, sgn,
                               cfg, window)
            if w is not None:
                return w
    return None


def _mixture_chain(oracle, domain, x, y, z, side, lam_star, sgn, cfg, window):
    """Geometric λ-chain toward lam_star from the member side."""
    res = cfg.resolution
    limit_pt = mixture(x, y, lam_star)
    if not domain.contains(limit_pt):
        return None
    comps: list = []
    limit_cmp = _cmp(oracle, limit_pt, z, comps)
    if not _strictly_opposite(side, limit_cmp):
        return None
    origin = limit_pt
    offset = tuple(res * sgn * (float(a) - float(b)) for a, b in zip(x, y))
    approach = []
    lambdas = []
    for k in range(cfg.refine_depth + 1):
        scale = 0.5 ** k
        lam = lam_star + sgn * res * scale
        if not 0.0 <= lam <= 1.0:
            return None
        p = mixture(x, y, lam)
        if p == limit_pt:
            return None
        member = False
        if domain.contains(p):
            r = _cmp(oracle, p, z)
            if _weakly_on(side, r):
                comps.append((p, z, r))
                approach.append(p)
                lambdas.append(lam)
                member = True
        if not member:
            if window is None:
                return None
            s = window(origin, offset, scale / 2.0, scale, z,
                       _weak_side_tag(side))
            if s is None:
                return None
            q = tuple(float(c) + float(s) * o for c, o in zip(origin, offset))
            if not domain.contains(q):
                return None
            r = _cmp(oracle, q, z)
            if not _weakly_on(side, r):
                return None
            comps.append((q, z, r))
            approach.append(q)
            lambdas.append(lam_star + sgn * res * float(s))
    if len(approach) < cfg.refine_depth:
        return None
    return ClosureWitness(comparisons=tuple(comps), x=z, limit=limit_pt,
                          side=side, approach=tuple(approach), space="lambda",
                          lambdas=tuple(lambdas), triple=(x, y, z))


# ---------------------------------------------------------------------------
# Archimedean
# ---------------------------------------------------------------------------

def check_archimedean(oracle: ComparisonOracle, domain: Domain,
                      cfg: CheckConfig) -> Verdict:
    """Search for the strict mixtures the Archimedean axiom requires.

    For each sampled x ≻ y and companion z: find λ ∈ (0,1) with xλz ≻ y
    and δ ∈ (0,1) with x ≻ yδz — by grid, then geometric refinement into
    both ends of the parameter interval (with window hooks), then the
    side-existence hook.  A side whose whole search budget fails is the
    violation.
    """
    axiom = ARCHIMEDEAN
    if not domain.is_convex:
        return _inapplicable(axiom, "mixtures leave a non-convex domain")
    hooks = _hooks(oracle)
    try:
        triples = []
        for x, y, z in _hints(oracle).archimedean:
            if _cmp(oracle, x, y) is Comparison.SUCC:
                triples.append((x, y, z))
        samples = sample_grid(domain, cfg.resolution, cfg.seed)
        rng = _rng(cfg, oracle, "arch")
        found_strict = bool(triples)
        attempts = 0
        while len(triples) < cfg.sample_budget and attempts < 200:
            attempts += 1
            x = rng.choice(samples)
            y = rng.choice(samples)
            if _cmp(oracle, x, y) is not Comparison.SUCC:
                continue
            found_strict = True
            z = rng.choice(samples)
            triples.append((x, y, z))
        if not found_strict:
            return _inapplicable(axiom, "no strict pair found at this resolution")
        for x, y, z in triples:
            ok_l, grid_l = _arch_side(oracle, domain, x, z, y, "succ",
                                      cfg, hooks)
            if not ok_l:
                ok_d, grid_d = _arch_side(oracle, domain, z, y, x, "prec",
                                          cfg, hooks, probe_only=True)
                w = _arch_witness(oracle, x, y, z, "lambda", grid_l, grid_d)
                return _violated(axiom, cfg, w)
            ok_d, grid_d = _arch_side(oracle, domain, z, y, x, "prec",
                                      cfg, hooks)
            if not ok_d:
                w = _arch_witness(oracle, x, y, z, "delta", grid_l, grid_d)
                return _violated(axiom, cfg, w)
    except _IncompFound as exc:
        return _incomp_verdict(axiom, cfg, exc)
    return _holds(axiom, cfg)


def _arch_side(oracle, domain, seg_a, seg_b, target, want, cfg, hooks,
               probe_only=False):
    """Does the open segment (seg_a → seg_b) contain a point `want`-of target?

    The segment is s ↦ seg_a + s·(seg_b − seg_a), s ∈ (0,1).  After the
    grid, geometric refinement pushes into both ends of the interval: the
    sought strict point often hides arbitrarily close to an endpoint.
    Returns (found, probed_params).
    """
    probed = []
    want_cmp = Comparison.SUCC if want == "succ" else Comparison.PREC
    count = min(cfg.line_scan_cap, _scan_count(cfg))
    ts = _grid(0.0, 1.0, count)[1:-1]
    offset = tuple(float(b) - float(a) for a, b in zip(seg_a, seg_b))
    origin = tuple(float(a) for a in seg_a)

    def point_at(s: float):
        return tuple(o + s * d for o, d in zip(origin, offset))

    for s in ts:
        probed.append(s)
        p = point_at(s)
        if domain.contains(p) and _cmp(oracle, p, target) is want_cmp:
            return True, probed
        if probe_only and len(probed) >= 8:
            return False, probed
    for corner in (0.0, 1.0):
        for k in range(1, cfg.refine_depth + 1):
            scale = 0.5 ** k
            s = scale if corner == 0.0 else 1.0 - scale
            if not 0.0 < s < 1.0:
                break
            probed.append(s)
            p = point_at(s)
            if domain.contains(p) and _cmp(oracle, p, target) is want_cmp:
                return True, probed
            if hooks.window_member is not None:
                if corner == 0.0:
                    s_lo, s_hi = scale / 2.0, scale
                else:
                    s_lo, s_hi = 1.0 - scale, 1.0 - scale / 2.0
                w = hooks.window_member(origin, offset, s_lo, s_hi,
                                        target, want)
                if w is not None:
                    q = point_at(float(w))
                    if domain.contains(q) and \
                            _cmp(oracle, q, target) is want_cmp:
                        return True, probed
    if hooks.side_on_segment is not None:
        status, s = hooks.side_on_segment(seg_a, seg_b, target, want)
        if status == "found":
            return True, probed
        if status == "none":
            return False, probed
    return False, probed


def _arch_witness(oracle, x, y, z, failed_side, grid_l, grid_d):
    comps = []
    comps.append((x, y, _cmp(oracle, x, y)))
    for s in grid_l[:16] + grid_l[-8:]:
        lam = 1.0 - s
        p = mixture(x, z, lam)
        comps.append((p, y, _cmp(oracle, p, y)))
    for s in grid_d[:16] + grid_d[-8:]:
        p = mixture(y, z, s)
        comps.append((x, p, _cmp(oracle, x, p)))
    return ArchScan(comparisons=tuple(comps), x=x, y=y, z=z,
                    failed_side=failed_side,
                    lambda_grid=tuple(round(1.0 - s, 15) for s in grid_l[:64]),
                    delta_grid=tuple(grid_d[:64]))


# ---------------------------------------------------------------------------
# segment indifference engine (weak Wold / Wold / solvability)
# ---------------------------------------------------------------------------

def _segment_class_search(oracle, a, b, target, cfg, hooks,
                          points_of: Optional[Callable] = None,
                          hook_solver: Optional[Callable] = None):
    """Search the segment a→b (t ∈ [0,1]) for a point ∼ target.

    Returns one of ("indiff", t), ("resolved", t_or_None),
    ("miss", (ts, comps)), ("one_side", (side, ts, comps)).
    "miss" means a hook certified that no real solution exists.
    """
    pts = points_of if points_of is not None else (lambda t: lerp(a, b, t))
    ts = _grid(0.0, 1.0, min(cfg.line_scan_cap, _scan_count(cfg)))
    comps = []
    rs = []
    for t in ts:
        r = _cmp(oracle, pts(t), target)
        rs.append(r)
        if r is Comparison.INDIFF:
            return "indiff", t
    brackets = [(ts[j], ts[j + 1]) for j in range(len(ts) - 1)
                if rs[j] is not rs[j + 1]]
    evidence_idx = _spread_indices(len(ts), 33)
    comps = [(pts(ts[j]), target, rs[j]) for j in evidence_idx]
    if not brackets:
        side = "succ" if rs[0] is Comparison.SUCC else "prec"
        return "one_side", (side, ts, comps)
    for t_lo, t_hi in brackets:
        lo, hi = t_lo, t_hi
        r_lo = rs[ts.index(t_lo)]
        for _ in range(cfg.bisect_max_iter):
            if hi - lo <= cfg.bisect_tol:
                break
            mid = 0.5 * (lo + hi)
            r = _cmp(oracle, pts(mid), target)
            if r is Comparison.INDIFF:
                return "indiff", mid
            if r is r_lo:
                lo = mid
            else:
                hi = mid
    solver = hook_solver
    if solver is None and hooks.solve_on_segment is not None and points_of is None:
        solver = lambda: hooks.solve_on_segment(a, b, target)
    if solver is not None:
        status, t = solver()
        if status == "none":
            return "miss", (ts, comps)
        if status == "found":
            return "resolved", t
    return "resolved", None


def _order_density(oracle, domain, cfg, samples):
    """Shared density routine: None if no gap, else a DenseGap witness."""
    hooks = _hooks(oracle)
    rng = _rng(cfg, oracle, "density")
    pairs = list(_hints(oracle).density)
    attempts = 0
    while len(pairs) < 2 * cfg.sample_budget and attempts < 300:
        attempts += 1
        x = rng.choice(samples)
        y = rng.choice(samples)
        if x != y:
            pairs.append((x, y))
    probe_pool = _anchor_points(samples, 128)
    checked = 0
    for x, y in pairs:
        r = _cmp(oracle, x, y)
        if r is Comparison.PREC:
            x, y, r = y, x, Comparison.SUCC
        if r is not Comparison.SUCC:
            continue
        checked += 1
        if checked > 2 * cfg.sample_budget:
            break
        comps = [(x, y, Comparison.SUCC)]
        probes = []
        found = False
        mid_candidates = []
        if all(isinstance(c, float) for c in x + y):
            mid_candidates.append(tuple(0.5 * (cx + cy) for cx, cy in zip(x, y)))
        for w in mid_candidates + probe_pool:
            if w == x or w == y or not domain.contains(w):
                continue
            r1 = _cmp(oracle, x, w)
            r2 = _cmp(oracle, w, y)
            if r1 is Comparison.SUCC and r2 is Comparison.SUCC:
                found = True
                break
            probes.append(w)
            comps.append((x, w, r1))
            comps.append((w, y, r2))
        if found:
            continue
        if hooks.find_between is not None:
            w = hooks.find_between(x, y)
            if w is not None and w != "unknown" and domain.contains(w):
                r1 = _cmp(oracle, x, w)
                r2 = _cmp(oracle, w, y)
                if r1 is Comparison.SUCC and r2 is Comparison.SUCC:
                    continue
        return DenseGap(comparisons=tuple(comps[:67]), x=x, y=y,
                        probes=tuple(probes[:32]))
    return None


def check_weak_wold(oracle: ComparisonOracle, domain: Domain,
                    cfg: CheckConfig) -> Verdict:
    """Order density plus: segments between x ≻ z ≻ y meet z's class."""
    axiom = WEAK_WOLD
    if not domain.is_convex:
        return _inapplicable(axiom, "mixtures leave a non-convex domain")
    hooks = _hooks(oracle)
    try:
        samples = sample_grid(domain, cfg.resolution, cfg.seed)
        gap = _order_density(oracle, domain, cfg, samples)
        if gap is not None:
            return _violated(axiom, cfg, gap)
        for x, z, y in _triple_stream(oracle, samples, cfg):
            status, info = _segment_class_search(oracle, x, y, z, cfg, hooks)
            if status == "miss":
                ts, comps = info
                return _violated(axiom, cfg, LineMiss(
                    comparisons=tuple(comps), x=x, z=z, y=y,
                    lambdas=tuple(ts[j] for j in _spread_indices(len(ts), 33))))
    except _IncompFound as exc:
        return _incomp_verdict(axiom, cfg, exc)
    return _holds(axiom, cfg)


def _triple_stream(oracle, samples, cfg):
    """Hinted then sampled triples x ≻ z ≻ y, deterministically."""
    seen = 0
    for x, z, y in _hints(oracle).weak_wold:
        if _cmp(oracle, x, z) is Comparison.SUCC and \
                _cmp(oracle, z, y) is Comparison.SUCC:
            seen += 1
            yield x, z, y
    rng = _rng(cfg, oracle, "triples")
    attempts = 0
    while seen < cfg.sample_budget and attempts < 300:
        attempts += 1
        x = rng.choice(samples)
        z = rng.choice(samples)
        y = rng.choice(samples)
        if _cmp(oracle, x, z) is Comparison.SUCC and \
                _cmp(oracle, z, y) is Comparison.SUCC:
            seen += 1
            yield x, z, y


@dataclass(frozen=True)
class CurveFamily:
    """Arc suppliers for the Wold checker.

    ``builders`` maps curve ids to callables (x, y, rng) → arc or None,
    where an arc is a callable t ∈ [0,1] → Point with arc(0)=x, arc(1)=y.
    """

    builders: tuple  # of (curve_id, builder)

    @staticmethod
    def default() -> "CurveFamily":
        return CurveFamily(builders=(
            ("segment", _build_segment_arc),
            ("bezier", _build_bezier_arc),
            ("staircase", _build_staircase_arc),
        ))


def _build_segment_arc(x, y, rng, domain):
    return lambda t: lerp(x, y, t)


def _build_bezier_arc(x, y, rng, domain):
    mid = tuple(0.5 * (float(a) + float(b)) for a, b in zip(x, y))
    lo = [float(b[0]) for b in domain.box]
    hi = [float(b[1]) for b in domain.box]
    center = tuple(0.5 * (l + h) for l, h in zip(lo, hi))
    blend = rng.uniform(0.25, 0.75)
    control = tuple((1.0 - blend) * m + blend * c for m, c in zip(mid, center))
    if not domain.contains(control):
        return None

    def arc(t: float):
        s = 1.0 - t
        return tuple(s * s * float(a) + 2.0 * s * t * c + t * t * float(b)
                     for a, c, b in zip(x, control, y))

    return arc


def _staircase_corners(x, y):
    corners = [tuple(float(c) for c in x)]
    cur = list(corners[0])
    for i in range(len(x)):
        cur[i] = float(y[i])
        corners.append(tuple(cur))
    return corners


def _build_staircase_arc(x, y, rng, domain):
    corners = _staircase_corners(x, y)
    if any(not domain.contains(c) for c in corners):
        return None
    n_legs = len(corners) - 1

    def arc(t: float):
        if t >= 1.0:
            return corners[-1]
        scaled = t * n_legs
        leg = int(scaled)
        frac = scaled - leg
        a, b = corners[leg], corners[leg + 1]
        return tuple(ca + frac * (cb - ca) for ca, cb in zip(a, b))

    return arc


def check_wold(oracle: ComparisonOracle, domain: Domain,
               curves: Optional[CurveFamily], cfg: CheckConfig) -> Verdict:
    """Order density plus: every family arc between x ≻ z ≻ y meets z's class."""
    axiom = WOLD
    if not domain.is_convex:
        return _inapplicable(axiom, "mixtures leave a non-convex domain")
    family = curves if curves is not None else CurveFamily.default()
    hooks = _hooks(oracle)
    rng = _rng(cfg, oracle, "wold")
    hint_arcs = list(_hints(oracle).arcs)
    try:
        samples = sample_grid(domain, cfg.resolution, cfg.seed)
        gap = _order_density(oracle, domain, cfg, samples)
        if gap is not None:
            return _violated(axiom, cfg, gap)
        for x, z, y in _triple_stream(oracle, samples, cfg):
            arcs = []
            for curve_id, builder in family.builders:
                arc = builder(x, y, rng, domain)
                if arc is not None:
                    arcs.append((curve_id, arc))
            for curve_id, arc in hint_arcs:
                probe_ts = _grid(0.0, 1.0, 33)
                if any(not domain.contains(arc(t)) for t in probe_ts):
                    raise ValueError(
                        f"hint arc {curve_id!r} leaves the domain")
                arcs.append((curve_id, arc))
            for curve_id, arc in arcs:
                solver = _arc_hook_solver(hooks, curve_id, x, y, z)
                status, info = _segment_class_search(
                    oracle, x, y, z, cfg, hooks, points_of=arc,
                    hook_solver=solver)
                if status == "miss":
                    ts, comps = info
                    return _violated(axiom, cfg, CurveMiss(
                        comparisons=tuple(comps), x=x, z=z, y=y,
                        curve_id=curve_id,
                        ts=tuple(ts[j] for j in _spread_indices(len(ts), 33))))
    except _IncompFound as exc:
        return _incomp_verdict(axiom, cfg, exc)
    return _holds(axiom, cfg)


def _arc_hook_solver(hooks, curve_id, x, y, z):
    """Exact-resolution strategy per arc kind.

    Straight segments ask the segment hook directly; staircases decompose
    into straight legs (a miss needs every leg certified empty); other arc
    kinds have no exact protocol and resolve as satisfied-at-resolution.
    """
    if hooks.solve_on_segment is None:
        return None
    if curve_id == "segment":
        return lambda: hooks.solve_on_segment(x, y, z)
    if curve_id == "staircase":
        corners = _staircase_corners(x, y)

        def solve():
            any_unknown = False
            for a, b in zip(corners, corners[1:]):
                status, t = hooks.solve_on_segment(a, b, z)
                if status == "found":
                    return "found", t
                if status != "none":
                    any_unknown = True
            return ("unknown", None) if any_unknown else ("none", None)

        return solve
    return lambda: ("unknown", None)


# ---------------------------------------------------------------------------
# solvability
# ---------------------------------------------------------------------------

def _line_point(i: int, rest: tuple, c) -> Point:
    p = list(rest)
    p.insert(i, c)
    return tuple(p)


def _lockstep_point(idx: tuple, base: Point, c) -> Point:
    p = list(base)
    for i in idx:
        p[i] = c
    return tuple(p)


def _exact_line_solve(oracle, make_point, a, b, x, cfg, hooks, seg_ends):
    """Exact-arithmetic variant: scan and halve with Fractions/QSqrt2."""
    a_e = a if isinstance(a, (QSqrt2, Fraction, int)) else Fraction(a)
    b_e = b if isinstance(b, (QSqrt2, Fraction, int)) else Fraction(b)
    span = b_e - a_e
    cs = [a_e + span * Fraction(k, 32) for k in range(33)]
    rs = []
    for c in cs:
        r = _cmp(oracle, make_point(c), x)
        if r is Comparison.INDIFF:
            return "indiff", c
        rs.append(r)
    brackets = [(cs[j], cs[j + 1]) for j in range(32) if rs[j] is not rs[j + 1]]
    for lo, hi in brackets:
        r_lo = _cmp(oracle, make_point(lo), x)
        for _ in range(cfg.bisect_max_iter):
            mid = (lo + hi) / 2
            r = _cmp(oracle, make_point(mid), x)
            if r is Comparison.INDIFF:
                return "indiff", mid
            if r is r_lo:
                lo = mid
            else:
                hi = mid
    if hooks.solve_on_segment is not None:
        status, t = hooks.solve_on_segment(seg_ends[0], seg_ends[1], x)
        if status == "none":
            return "miss", None
        if status == "found":
            return "indiff", t
    return "resolved", None


def _solvability_engine(oracle, domain, cfg, axiom, instances,
                        *, require_sandwich):
    """Common engine for restricted/unrestricted/lockstep solvability.

    ``instances`` yields (x, coordinate_label, rest_for_witness, make_point,
    a, b, seg_ends, exact).  Returns the first SolvGap verdict, or Holds.
    """
    hooks = _hooks(oracle)
    solved = 0
    for (x, label, rest, make_point, a, b, seg_ends, exact) in instances:
        pa, pb = make_point(a), make_point(b)
        if not (domain.contains(pa) and domain.contains(pb)):
            continue
        ra = _cmp(oracle, pa, x)
        rb = _cmp(oracle, pb, x)
        if ra is Comparison.INDIFF or rb is Comparison.INDIFF:
            solved += 1
            continue
        sandwiched = (ra is Comparison.SUCC and rb is Comparison.PREC) or \
                     (ra is Comparison.PREC and rb is Comparison.SUCC)
        if require_sandwich and not sandwiched:
            continue  # vacuous sample, not counted
        if pa == pb:
            # degenerate line: a single visible point, strictly one-sided
            side = "succ" if ra is Comparison.SUCC else "prec"
            verdict = _one_side_outcome(
                oracle, domain, cfg, axiom, x, label, rest, make_point,
                float(a), float(b), [0.0, 1.0], [(pa, x, ra)], hooks,
                seg_ends)
            if verdict is not None:
                return verdict
            continue
        if exact:
            status, c = _exact_line_solve(oracle, make_point, a, b, x, cfg,
                                          hooks, seg_ends)
            if status == "miss":
                w = SolvGap(comparisons=((pa, x, ra), (pb, x, rb)),
                            x=x, coordinate=label, rest=rest, bracket=(a, b))
                return _violated(axiom, cfg, w)
            solved += 1
            continue
        fa = float(a)
        fb = float(b)
        status, info = _segment_class_search(
            oracle, pa, pb, x, cfg, hooks,
            points_of=lambda t: make_point(fa + t * (fb - fa)),
            hook_solver=(lambda: hooks.solve_on_segment(seg_ends[0],
                                                        seg_ends[1], x))
            if hooks.solve_on_segment is not None else None)
        if status in ("indiff", "resolved"):
            solved += 1
            continue
        if status == "miss":
            ts, comps = info
            w = SolvGap(comparisons=tuple(comps[:40]) + ((pa, x, ra), (pb, x, rb)),
                        x=x, coordinate=label, rest=rest, bracket=(a, b))
            return _violated(axiom, cfg, w)
        # one-sided line (only reachable without the sandwich requirement)
        side, ts, comps = info
        verdict = _one_side_outcome(oracle, domain, cfg, axiom, x, label, rest,
                                    make_point, fa, fb, ts, comps, hooks,
                                    seg_ends)
        if verdict is not None:
            return verdict
    return _holds(axiom, cfg)


def _one_side_outcome(oracle, domain, cfg, axiom, x, label, rest, make_point,
                      fa, fb, ts, comps, hooks, seg_ends):
    """Decide a line that lies strictly on one side of the target.

    The exact hook is consulted first: "found" means a solution sits
    between scan points, so the line is solved.  A gap is then certified
    only when both line ends are conclusive: an end is conclusive if the
    values are flat there (mutually indifferent probes) or the end is
    genuine domain structure rather than a clip bound.  Otherwise the
    sample is skipped — on a clipped line with values still moving the
    solution may simply lie beyond the clip, and even a hook-certified
    empty visible segment says nothing about the rest of the line.
    """
    if hooks.solve_on_segment is not None:
        status, t = hooks.solve_on_segment(seg_ends[0], seg_ends[1], x)
        if status == "found":
            return None

    def end_flat(end_ts) -> bool:
        pts = [make_point(t0) for t0 in end_ts]
        pts = [p for p in pts if domain.contains(p)]
        if len(pts) < 2:
            return True
        return all(_cmp(oracle, pts[0], p) is Comparison.INDIFF
                   for p in pts[1:])

    k = min(5, len(ts))
    lo_conclusive = end_flat([fa + t * (fb - fa) for t in ts[:k]])
    hi_conclusive = end_flat([fa + t * (fb - fa) for t in ts[-k:]])
    lo_kind, hi_kind = getattr(make_point, "end_kinds", ("true", "true"))
    lo_conclusive = lo_conclusive or lo_kind != "clip"
    hi_conclusive = hi_conclusive or hi_kind != "clip"
    if lo_conclusive and hi_conclusive:
        w = SolvGap(comparisons=tuple(comps[:40]), x=x, coordinate=label,
                    rest=rest, bracket=(fa, fb))
        return _violated(axiom, cfg, w)
    return None


def _coordinate_instances(oracle, domain, cfg, coordinates, hint_field,
                          *, need_bracket):
    """Yield solvability instances: hints first, then seeded samples."""
    n = domain.dimension
    if coordinates is None:
        idx = list(range(n))
    else:
        idx = [i - 1 for i in coordinates]
        for i in idx:
            if not 0 <= i < n:
                raise ValueError("coordinate index out of range")
    hints = getattr(_hints(oracle), hint_field)
    exact_oracle = oracle.exact

    def make_make_point(i0, rest, kinds):
        def mp(c):
            return _line_point(i0, rest, c)
        mp.end_kinds = kinds  # type: ignore[attr-defined]
        return mp

    for hint in hints:
        if need_bracket:
            x, i0, rest, a, b = hint
        else:
            x, i0, rest = hint[:3]
            rng_range = domain.coordinate_interval(i0, rest)
            if rng_range is None:
                continue
            a, b = rng_range.t_lo, rng_range.t_hi
        if i0 not in idx:
            continue
        rng_range = domain.coordinate_interval(i0, rest)
        kinds = ("true", "true") if rng_range is None else \
            (rng_range.lo_kind, rng_range.hi_kind)
        if isinstance(a, float) and domain.interior_only and not need_bracket:
            a, b = _shrink_open(a, b, cfg)
        yield (x, i0 + 1, tuple(rest), make_make_point(i0, rest, kinds),
               a, b, (_line_point(i0, rest, a), _line_point(i0, rest, b)),
               exact_oracle)
    samples = sample_grid(domain, cfg.resolution, cfg.seed)
    rng = _rng(cfg, oracle, hint_field)
    produced = 0
    attempts = 0
    while produced < cfg.sample_budget and attempts < 200:
        attempts += 1
        x = rng.choice(samples)
        base = rng.choice(samples)
        i0 = idx[attempts % len(idx)]
        rest = tuple(c for j, c in enumerate(base) if j != i0)
        rng_range = domain.coordinate_interval(i0, rest)
        if rng_range is None or not (rng_range.t_lo < rng_range.t_hi):
            continue
        a, b = rng_range.t_lo, rng_range.t_hi
        if domain.interior_only:
            a, b = _shrink_open(a, b, cfg)
        kinds = (rng_range.lo_kind, rng_range.hi_kind)
        produced += 1
        yield (x, i0 + 1, rest, make_make_point(i0, rest, kinds), a, b,
               (_line_point(i0, rest, a), _line_point(i0, rest, b)),
               exact_oracle and all(isinstance(c, float) for c in x + rest))


def _shrink_open(a: float, b: float, cfg: CheckConfig):
    """Pull endpoints of an open interval inward by a hair.

    The pad only exists to keep scan points strictly inside the open box;
    anything larger would hide solution regions hugging the boundary.
    """
    pad = (b - a) * 1e-9
    return a + pad, b - pad


def check_restricted_solvability(oracle: ComparisonOracle, domain: Domain,
                                 cfg: CheckConfig,
                                 coordinates: Optional[Sequence[int]] = None,
                                 ) -> Verdict:
    """Solvability on coordinate lines under a weak sandwich precondition.

    For sampled (x, i, y₋ᵢ, aᵢ, bᵢ) with (aᵢ,y₋ᵢ) ≿ x ≿ (bᵢ,y₋ᵢ): scan and
    bisect for cᵢ with (cᵢ,y₋ᵢ) ∼ x.  A gap needs certification (exact
    oracle or exact-knowledge hook); unsandwiched samples are vacuous.
    ``coordinates`` restricts the checked lines (1-based indices).
    """
    axiom = RESTRICTED
    try:
        instances = _coordinate_instances(oracle, domain, cfg, coordinates,
                                          "restricted", need_bracket=True)
        return _solvability_engine(oracle, domain, cfg, axiom, instances,
                                   require_sandwich=True)
    except _IncompFound as exc:
        return _incomp_verdict(axiom, cfg, exc)


def check_unrestricted_solvability(oracle: ComparisonOracle, domain: Domain,
                                   cfg: CheckConfig,
                                   coordinates: Optional[Sequence[int]] = None,
                                   ) -> Verdict:
    """Solvability on full coordinate lines, no sandwich precondition."""
    axiom = UNRESTRICTED
    try:
        instances = _coordinate_instances(oracle, domain, cfg, coordinates,
                                          "unrestricted", need_bracket=False)
        return _solvability_engine(oracle, domain, cfg, axiom, instances,
                                   require_sandwich=False)
    except _IncompFound as exc:
        return _incomp_verdict(axiom, cfg, exc)


def check_stronger_rs(oracle: ComparisonOracle, domain: Domain,
                      coordinate_set: Sequence[int], cfg: CheckConfig,
                      ) -> Verdict:
    """Restricted solvability moving a coordinate block in lockstep.

    ``coordinate_set`` (1-based) is the block A; sampled instances compare
    c_A-modified points against a target with the usual sandwich rule.
    """
    axiom = STRONGER_RS
    n = domain.dimension
    idx = tuple(sorted(i - 1 for i in coordinate_set))
    if not idx:
        raise ValueError("coordinate set must be nonempty")
    if len(idx) >= n:
        raise ValueError("coordinate set must not cover every coordinate")
    if any(not 0 <= i < n for i in idx):
        raise ValueError("coordinate index out of range")
    label = tuple(i + 1 for i in idx)

    def instances():
        direction = [1.0 if i in idx else 0.0 for i in range(n)]
        for hint in _hints(oracle).stronger:
            x, base, a, b = hint
            mp = _lockstep_make_point(idx, base, domain, direction)
            yield (x, label, tuple(base), mp, a, b,
                   (mp(a), mp(b)), oracle.exact)
        samples = sample_grid(domain, cfg.resolution, cfg.seed)
        rng = _rng(cfg, oracle, "stronger")
        produced = 0
        attempts = 0
        while produced < cfg.sample_budget and attempts < 200:
            attempts += 1
            x = rng.choice(samples)
            base = rng.choice(samples)
            zeroed = list(base)
            for i in idx:
                zeroed[i] = 0.0
            rng_range = domain.line_range(tuple(zeroed), direction)
            if rng_range is None or not (rng_range.t_lo < rng_range.t_hi):
                continue
            a, b = rng_range.t_lo, rng_range.t_hi
            if domain.interior_only:
                a, b = _shrink_open(a, b, cfg)
            mp = _lockstep_make_point(idx, base, domain, direction)
            produced += 1
            yield (x, label, tuple(base), mp, a, b, (mp(a), mp(b)),
                   oracle.exact)

    try:
        return _solvability_engine(oracle, domain, cfg, axiom, instances(),
                                   require_sandwich=True)
    except _IncompFound as exc:
        return _incomp_verdict(axiom, cfg, exc)


def _lockstep_make_point(idx, base, domain, direction):
    rng_range = domain.line_range(
        tuple(0.0 if i in idx else float(c) for i, c in enumerate(base)),
        direction)
    kinds = ("true", "true") if rng_range is None else \
        (rng_range.lo_kind, rng_range.hi_kind)

    def mp(c):
        return _lockstep_point(idx, base, c)
    mp.end_kinds = kinds  # type: ignore[attr-defined]
    return mp


# ---------------------------------------------------------------------------
# basic relational properties
# ---------------------------------------------------------------------------

def check_basic(oracle: ComparisonOracle, domain: Domain,
                cfg: CheckConfig) -> dict:
    """Probe completeness, transitivity, weak monotonicity, order density,
    and convexity of upper sections on seeded samples.

    Returns a map property-name → Verdict.
    """
    samples = sample_grid(domain, cfg.resolution, cfg.seed)
    hints = _hints(oracle)
    out: dict = {}
    cache: dict = {}

    def cmp_raw(a: Point, b: Point) -> Comparison:
        key = (a, b)
        if key not in cache:
            cache[key] = compare(oracle, a, b)
        return cache[key]

    rng = _rng(cfg, oracle, "basic")
    budget_pts = _anchor_points(samples, max(4, cfg.sample_budget))
    extra_pairs = [(rng.choice(samples), rng.choice(samples))
                   for _ in range(3 * cfg.sample_budget)]

    # completeness and antisymmetry of the comparison itself
    complete_w = None
    for a, b in [(p, q) for p in budget_pts for q in budget_pts] + extra_pairs:
        r = cmp_raw(a, b)
        if r is Comparison.INCOMP:
            complete_w = BasicFail(comparisons=((a, b, r),),
                                   property="complete", points=(a, b))
            break
    out["complete"] = _basic_verdict("complete", complete_w, cfg)

    # transitivity: weak(u,v) ∧ weak(v,w) forbids w ≻ u
    trans_w = None
    triple_pts = _anchor_points(samples, max(4, min(7, cfg.sample_budget)))
    triples = [(u, v, w) for u in triple_pts for v in triple_pts
               for w in triple_pts]
    triples += [(rng.choice(samples), rng.choice(samples), rng.choice(samples))
                for _ in range(4 * cfg.sample_budget)]
    for u, v, w in triples:
        if trans_w is not None:
            break
        ruv, rvw = cmp_raw(u, v), cmp_raw(v, w)
        if ruv.weakly_above() and rvw.weakly_above():
            ruw = cmp_raw(u, w)
            if ruw is Comparison.PREC:
                trans_w = BasicFail(
                    comparisons=((u, v, ruv), (v, w, rvw), (u, w, ruw)),
                    property="transitive", points=(u, v, w))
    out["transitive"] = _basic_verdict("transitive", trans_w, cfg)

    # weak monotonicity: x ≥ y coordinatewise forbids y ≻ x
    mono_w = None
    mono_pairs = list(hints.monotone)
    for p in budget_pts:
        for q in samples[:: max(1, len(samples) // (4 * cfg.sample_budget))]:
            fp = tuple(float(c) for c in p)
            fq = tuple(float(c) for c in q)
            if fp != fq and all(a >= b for a, b in zip(fp, fq)):
                mono_pairs.append((p, q))
    for x, y in mono_pairs[: 8 * cfg.sample_budget]:
        r = cmp_raw(x, y)
        if r is Comparison.PREC:
            mono_w = BasicFail(comparisons=((x, y, r),),
                               property="weakly_monotone", points=(x, y))
            break
        if r is Comparison.INCOMP:
            mono_w = BasicFail(comparisons=((x, y, r),),
                               property="complete", points=(x, y))
            break
    out["weakly_monotone"] = _basic_verdict("weakly_monotone", mono_w, cfg)

    # order density
    try:
        gap = _order_density(oracle, domain, cfg, samples)
    except _IncompFound as exc:
        gap = BasicFail(comparisons=((exc.a, exc.b, Comparison.INCOMP),),
                        property="complete", points=(exc.a, exc.b))
    out["order_dense"] = _basic_verdict("order_dense", gap, cfg)

    # convex upper sections: members a, b ≿ x; dyadic mixtures must not drop
    convex_w = None
    probes = list(hints.convex)
    for x in budget_pts[: cfg.sample_budget // 2 + 1]:
        members = [p for p in budget_pts
                   if cmp_raw(p, x).weakly_above()][:4]
        for ia in range(len(members)):
            for ib in range(ia + 1, len(members)):
                probes.append((members[ia], members[ib], x))
    if domain.is_convex:
        for a, b, x in probes[: 6 * cfg.sample_budget]:
            if convex_w is not None:
                break
            ra, rb = cmp_raw(a, x), cmp_raw(b, x)
            if not (ra.weakly_above() and rb.weakly_above()):
                continue
            for lam in (0.25, 0.5, 0.75):
                m = mixture(a, b, lam)
                if not domain.contains(m):
                    continue
                rm = cmp_raw(m, x)
                if rm is Comparison.PREC:
                    convex_w = BasicFail(
                        comparisons=((a, x, ra), (b, x, rb), (m, x, rm)),
                        property="convex_upper", points=(a, b, m, x))
                    break
    out["convex_upper"] = _basic_verdict("convex_upper", convex_w, cfg)
    return out


def _basic_verdict(name: str, witness, cfg: CheckConfig) -> Verdict:
    if witness is None:
        return _holds(name, cfg)
    return _violated(name, cfg, witness)
