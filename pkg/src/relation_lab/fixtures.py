"""Catalogue of concrete relations with pinned expected checker verdicts.

Each builder returns a :class:`~relation_lab.core.Fixture`: a comparison
oracle over a clipped domain, exact-knowledge hooks answering the checkers'
segment questions about the real relation (not about Float64 artefacts),
deterministic probe hints, an honest structural profile, and the expected
verdict table that the corpus harness pins.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Callable, Optional, Sequence

from .checkers import (
    ARCHIMEDEAN,
    CONTINUITY,
    MIXTURE,
    RESTRICTED,
    SEPARATE,
    STRONGER_RS,
    UNRESTRICTED,
    WEAK_WOLD,
    WOLD,
)
from .core import (
    CheckHints,
    Domain,
    Fixture,
    OracleHooks,
    Point,
    QSqrt2,
    AssumptionProfile,
    oracle_from_utility,
)

HOLDS = "holds"
VIOLATED = "violated"
INAPPLICABLE = "inapplicable"

_DIAG = 0.7071067811865476           # float(1/sqrt(2))
_SIN_PEAK = 0.6366197723675814       # float(2/pi); sin(1/.) == 1.0 exactly
_SIN_PEAK_SMALL = 0.12732395447351627  # float(2/(5*pi)); sin(1/.) == 1.0 exactly
_TAU = 2.0 * math.pi


def _expected(cont, wold, ww, mix, arch, sep, rs, us, srs=None) -> dict:
    out = {
        CONTINUITY: cont,
        WOLD: wold,
        WEAK_WOLD: ww,
        MIXTURE: mix,
        ARCHIMEDEAN: arch,
        SEPARATE: sep,
        RESTRICTED: rs,
        UNRESTRICTED: us,
    }
    if srs is not None:
        out[STRONGER_RS] = srs
    return out


def _basic(complete, transitive, mono, dense, convex) -> dict:
    return {
        "complete": complete,
        "transitive": transitive,
        "weakly_monotone": mono,
        "order_dense": dense,
        "convex_upper": convex,
    }


_ALL_BASIC_HOLD = _basic(HOLDS, HOLDS, HOLDS, HOLDS, HOLDS)


# ---------------------------------------------------------------------------
# exact scalar/segment helpers (hooks answer in the real model, so they work
# on lossless Fraction images of the float points the engines hand them)
# ---------------------------------------------------------------------------

def _fr(x) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


def _segment_hit_t(a: Point, b: Point, target: Point) -> Optional[Fraction]:
    """Exact t with a + t(b-a) == target, or None if the target is off-line."""
    t: Optional[Fraction] = None
    degenerate_match = True
    for ac, bc, xc in zip(a, b, target):
        av, dv, xv = _fr(ac), _fr(bc) - _fr(ac), _fr(xc)
        if dv == 0:
            if av != xv:
                return None
            continue
        degenerate_match = False
        ti = (xv - av) / dv
        if t is None:
            t = ti
        elif t != ti:
            return None
    if t is None:
        return Fraction(0) if degenerate_match else None
    return t


def _perfect_sqrt(d: Fraction) -> Optional[Fraction]:
    """Exact square root of a nonnegative rational, if it is rational."""
    if d < 0:
        return None
    rn = math.isqrt(d.numerator)
    rd = math.isqrt(d.denominator)
    if rn * rn == d.numerator and rd * rd == d.denominator:
        return Fraction(rn, rd)
    return None


def _sqrt_vs(d: Fraction, q: Fraction) -> int:
    """Exact sign of sqrt(d) - q for rational d >= 0, q."""
    if q < 0:
        return 1 if d > 0 or q < 0 else 0
    diff = d - q * q
    return (diff > 0) - (diff < 0)


def _root_vs_bound(branch: int, a2: Fraction, b: Fraction, disc: Fraction,
                   bound: Fraction) -> int:
    """Exact sign of ((-b + branch*sqrt(disc)) / a2) - bound, a2 = 2A != 0."""
    # root - bound = (-b + branch*sqrt(disc) - a2*bound) / a2
    q = a2 * bound + b
    if branch > 0:
        s = _sqrt_vs(disc, q)          # sign of sqrt(disc) - q
    else:
        # sign of -sqrt(disc) - q == -(sign of sqrt(disc) + q)
        if q > 0:
            s = -1 if disc >= 0 else 0
        elif q == 0:
            s = -1 if disc > 0 else 0
        else:
            s = -_sqrt_vs(disc, -q)
    return s if a2 > 0 else -s


def _quad_roots_in(A: Fraction, B: Fraction, C: Fraction,
                   lo: Fraction, hi: Fraction,
                   accept: Optional[Callable[[Fraction], bool]] = None) -> bool:
    """Exactly decide whether A t^2 + B t + C = 0 has a root in [lo, hi].

    ``accept`` may veto *rational* roots (used to discard a removable zero
    at a known parameter); irrational roots bypass it, which is sound for
    the callers because their vetoed parameters are always rational.
    """
    if A == 0:
        if B == 0:
            return False
        r = -C / B
        if not lo <= r <= hi:
            return False
        return accept(r) if accept is not None else True
    disc = B * B - 4 * A * C
    if disc < 0:
        return False
    root = _perfect_sqrt(disc)
    if root is not None:
        for r in ((-B + root) / (2 * A), (-B - root) / (2 * A)):
            if lo <= r <= hi and (accept is None or accept(r)):
                return True
        return False
    a2 = 2 * A
    for branch in (1, -1):
        if (_root_vs_bound(branch, a2, B, disc, lo) >= 0
                and _root_vs_bound(branch, a2, B, disc, hi) <= 0):
            return True
    return False


def _quad_pos_on_open(A: Fraction, B: Fraction, C: Fraction,
                      lo: Fraction, hi: Fraction) -> bool:
    """Exactly decide whether A t^2 + B t + C > 0 somewhere on (lo, hi)."""
    if lo >= hi:
        return False
    if A == 0 and B == 0:
        return C > 0
    # sup over the closure is attained at an endpoint or the vertex; the
    # open interval attains values arbitrarily close, and a quadratic with
    # positive sup on the closure is positive on a subinterval.
    candidates = [lo, hi]
    if A != 0:
        vtx = -B / (2 * A)
        if lo < vtx < hi:
            candidates.append(vtx)
    best = max(A * t * t + B * t + C for t in candidates)
    if best > 0:
        return True
    return False


def _first_window_match(candidates: Sequence[float], origin: Point,
                        offset: Point, x: Point, side: str,
                        value_of: Callable[[Point], object]) -> Optional[float]:
    """First candidate parameter whose point verifiably lies on ``side`` of x.

    The point is recomputed with the same arithmetic the engines use, so a
    returned parameter replays bit-for-bit.
    """
    vx = value_of(x)
    for s in candidates:
        q = tuple(float(c) + float(s) * float(o) for c, o in zip(origin, offset))
        vq = value_of(q)
        if side == "succ_eq":
            ok = vq >= vx
        elif side == "prec_eq":
            ok = vq <= vx
        elif side == "succ":
            ok = vq > vx
        else:
            ok = vq < vx
        if ok:
            return float(s)
    return None


def _reciprocal_window(o: float, d: float, s_lo: float, s_hi: float) -> list:
    """Candidate parameters where sin(1/c), c = o + s*d, is at a float-exact
    extreme, for s in the open window (s_lo, s_hi)."""
    out: list = []
    c_a, c_b = o + d * s_lo, o + d * s_hi
    c_lo, c_hi = (c_a, c_b) if c_a <= c_b else (c_b, c_a)
    c_lo = max(c_lo, 1e-300)
    if c_hi <= c_lo or d == 0.0:
        return out
    th_lo, th_hi = 1.0 / c_hi, 1.0 / c_lo
    for phase in (0.5 * math.pi, 1.5 * math.pi):
        k0 = math.floor((th_lo - phase) / _TAU)
        for k in range(k0, k0 + 6):
            th = phase + _TAU * k
            if th <= th_lo or th >= th_hi:
                continue
            s = (1.0 / th - o) / d
            if s_lo < s < s_hi:
                out.append(s)
    s0 = (0.0 - o) / d
    if s_lo < s0 < s_hi:
        out.append(s0)
    return out


def _sin_interval_status(c_lo: float, c_hi: float, v: float) -> str:
    """Does sin(1/c) = v have a real solution with c in [c_lo, c_hi], c > 0?

    Returns "found"/"none"/"unknown"; "none" only on exact grounds (no
    positive abscissa, or v outside the range of sin).
    """
    if not -1.0 <= v <= 1.0:
        return "none"
    lo, hi = max(c_lo, 0.0), c_hi
    if hi <= 0.0 or hi < lo:
        return "none"
    if lo == 0.0:
        return "found"  # phases accumulate toward zero
    th_lo, th_hi = 1.0 / hi, 1.0 / lo
    if th_hi - th_lo >= _TAU:
        return "found"
    base = math.asin(v)
    for phase in (base, math.pi - base):
        k0 = math.floor((th_lo - phase) / _TAU)
        for k in (k0, k0 + 1, k0 + 2):
            th = phase + _TAU * k
            margin = 1e-7 * max(1.0, abs(th))
            if th_lo + margin < th < th_hi - margin:
                return "found"
    return "unknown"


def _sin_between_core(v: float, f_hi: float, f_lo: float, c_cap: float,
                      value_at: Callable[[float], float]) -> Optional[float]:
    """An abscissa c in (0, c_cap] whose sin(1/c) lies strictly in
    (f_lo, f_hi), aiming at target value v."""
    base = math.asin(max(-1.0, min(1.0, v)))
    cands = []
    for phase in (base, math.pi - base):
        for k in range(0, 4):
            th = phase + _TAU * k
            if th > 0.0:
                cands.append(1.0 / th)
    for c in cands:
        if 0.0 < c <= c_cap and f_lo < value_at(c) < f_hi:
            return c
    for c in cands:
        w = c
        for _ in range(4):
            w = math.nextafter(w, 0.0)
            if 0.0 < w <= c_cap and f_lo < value_at(w) < f_hi:
                return w
    return None


# ---------------------------------------------------------------------------
# gp2: f(x) = x1*x2 / (x1^2 + x2^2), f(0,0) = 0
# ---------------------------------------------------------------------------

def _gp2_value(p: Point) -> float:
    x1, x2 = float(p[0]), float(p[1])
    d = x1 * x1 + x2 * x2
    return 0.0 if d == 0.0 else x1 * x2 / d


def _gp2_value_exact(p: Point) -> Fraction:
    x1, x2 = _fr(p[0]), _fr(p[1])
    d = x1 * x1 + x2 * x2
    return Fraction(0) if d == 0 else x1 * x2 / d


def _gp2_seg_poly(a: Point, b: Point, v: Fraction):
    """Coefficients of N(t) - v*D(t) on the segment a + t(b-a), where the
    real relation's value is N/D = p1*p2 / (p1^2 + p2^2) off the origin."""
    a1, a2 = _fr(a[0]), _fr(a[1])
    d1, d2 = _fr(b[0]) - a1, _fr(b[1]) - a2
    A = d1 * d2 - v * (d1 * d1 + d2 * d2)
    B = a1 * d2 + a2 * d1 - 2 * v * (a1 * d1 + a2 * d2)
    C = a1 * a2 - v * (a1 * a1 + a2 * a2)
    return A, B, C


def _gp2_origin_t(a: Point, b: Point) -> Optional[Fraction]:
    return _segment_hit_t(a, b, (0, 0))


def _gp2_solve(a: Point, b: Point, x: Point):
    v = _gp2_value_exact(x)
    t0 = _gp2_origin_t(a, b)
    A, B, C = _gp2_seg_poly(a, b, v)
    if A == 0 and B == 0 and C == 0:
        # the value is constantly v off the origin along this line
        if v == 0:
            return ("found", 0.5)  # a zero target matches everywhere
        if a == b:
            # single point: the origin is the only mismatch
            return ("found", 0.5) if t0 is None else ("none", None)
        if t0 is not None and 0 <= t0 <= 1:
            pick = Fraction(3, 4) if t0 <= Fraction(1, 2) else Fraction(1, 4)
            return ("found", float(pick))
        return ("found", 0.5)

    def accept(r: Fraction) -> bool:
        if t0 is not None and r == t0:
            return v == 0  # the origin only solves value-0 targets
        return True

    if _quad_roots_in(A, B, C, Fraction(0), Fraction(1), accept):
        return ("found", 0.5)
    if t0 is not None and 0 <= t0 <= 1 and v == 0:
        return ("found", float(t0))
    return ("none", None)


def _gp2_side(a: Point, b: Point, x: Point, side: str):
    v = _gp2_value_exact(x)
    t0 = _gp2_origin_t(a, b)
    sgn = 1 if side == "succ" else -1
    A, B, C = _gp2_seg_poly(a, b, v)
    if _quad_pos_on_open(sgn * A, sgn * B, sgn * C,
                         Fraction(0), Fraction(1)):
        return ("found", 0.5)
    if t0 is not None and 0 < t0 < 1:
        if (side == "succ" and v < 0) or (side == "prec" and v > 0):
            return ("found", float(t0))  # the origin's value 0 qualifies
    return ("none", None)


def _gp2_between(x: Point, y: Point) -> Optional[Point]:
    fx, fy = _gp2_value(x), _gp2_value(y)
    if not fx > fy:
        return None
    v = 0.5 * (fx + fy)
    d1 = tuple(0.5 * (float(xc) + float(yc)) for xc, yc in zip(x, y))
    if fy < _gp2_value(d1) < fx:
        return d1
    # f(r cos(th), r sin(th)) = sin(2 th)/2 for any radius r > 0
    if -0.5 < v < 0.5:
        th = 0.5 * math.asin(2.0 * v)
        for r in (1.0, 2.0, 3.0, 0.5, 3.9):
            w = (r * math.cos(th), r * math.sin(th))
            if all(-4.0 <= c <= 4.0 for c in w) and fy < _gp2_value(w) < fx:
                return w
    return None


def _gp2_fixture() -> Fixture:
    hooks = OracleHooks(solve_on_segment=_gp2_solve,
                        side_on_segment=_gp2_side,
                        find_between=_gp2_between)
    hints = CheckHints(
        continuity=(((3.0, 1.0), (0.0, 0.0), (_DIAG, _DIAG), "upper"),),
        mixture=(((1.0, 1.0), (0.0, 0.0), (3.0, 1.0), "upper", 0.0, 1.0),),
        weak_wold=(((1.0, 1.0), (3.0, 1.0), (0.0, 0.0)),),
        archimedean=(((1.0, 1.0), (0.0, 0.0), (1.0, 1.0)),),
        unrestricted=(((1.0, 1.0), 0, (0.0,)),),
        convex=(((1.0, 1.0), (-1.0, -1.0), (3.0, 1.0)),),
        monotone=(((2.0, 1.0), (1.0, 1.0)),),
    )
    oracle = oracle_from_utility("gp2", 2, _gp2_value, hooks=hooks, hints=hints)
    domain = Domain(box=((-4.0, 4.0), (-4.0, 4.0)),
                    clipped_lo=(True, True), clipped_hi=(True, True))
    profile = AssumptionProfile(
        weakly_monotone=False, monotone_coordinate_count=0,
        order_dense=True, convex_upper_sections=False, order_bounded=True,
        interior=True, dimension=2)
    return Fixture(
        name="gp2", oracle=oracle, domain=domain, profile=profile,
        expected=_expected(VIOLATED, VIOLATED, VIOLATED, VIOLATED, VIOLATED,
                           HOLDS, HOLDS, VIOLATED, srs=HOLDS),
        expected_basic=_basic(HOLDS, HOLDS, VIOLATED, HOLDS, VIOLATED),
        stronger_rs_set=(1,),
        notes="ratio utility, discontinuous along the diagonal at the origin")


# ---------------------------------------------------------------------------
# affine utilities (linear_sum, projection)
# ---------------------------------------------------------------------------

def _affine_hooks(coeffs: Sequence[int]) -> OracleHooks:
    cs = tuple(Fraction(c) for c in coeffs)

    def val(p: Point) -> Fraction:
        return sum(c * _fr(pc) for c, pc in zip(cs, p))

    def solve(a: Point, b: Point, x: Point):
        v, va, vb = val(x), val(a), val(b)
        if va == vb:
            return ("found", 0.5) if v == va else ("none", None)
        t = (v - va) / (vb - va)
        return ("found", float(t)) if 0 <= t <= 1 else ("none", None)

    def side(a: Point, b: Point, x: Point, want: str):
        v, va, vb = val(x), val(a), val(b)
        lo, hi = (va, vb) if va <= vb else (vb, va)
        if va == vb:
            ok = va > v if want == "succ" else va < v
        elif want == "succ":
            ok = hi > v
        else:
            ok = lo < v
        return ("found", 0.5) if ok else ("none", None)

    return OracleHooks(solve_on_segment=solve, side_on_segment=side)


def _linear_sum_fixture() -> Fixture:
    hooks = _affine_hooks((1, 1))
    oracle = oracle_from_utility(
        "linear_sum", 2, lambda p: float(p[0]) + float(p[1]), hooks=hooks)
    domain = Domain(box=((-10.0, 10.0), (-10.0, 10.0)),
                    clipped_lo=(True, True), clipped_hi=(True, True))
    profile = AssumptionProfile(
        monotone_coordinate_count=2, order_dense=True,
        convex_upper_sections=True, order_bounded=True, interior=True,
        dimension=2)
    return Fixture(
        name="linear_sum", oracle=oracle, domain=domain, profile=profile,
        expected=_expected(HOLDS, HOLDS, HOLDS, HOLDS, HOLDS, HOLDS, HOLDS,
                           HOLDS, srs=HOLDS),
        expected_basic=_ALL_BASIC_HOLD,
        stronger_rs_set=(1,),
        notes="coordinate-sum utility; every checker should pass")


def _projection_fixture() -> Fixture:
    hooks = _affine_hooks((0, 1))
    hints = CheckHints(unrestricted=(((2.0, 2.0), 0, (1.0,)),))
    oracle = oracle_from_utility(
        "projection", 2, lambda p: float(p[1]), hooks=hooks, hints=hints)
    domain = Domain(box=((-10.0, 10.0), (-10.0, 10.0)),
                    clipped_lo=(True, True), clipped_hi=(True, True))
    profile = AssumptionProfile(
        monotone_coordinate_count=2, order_dense=True,
        convex_upper_sections=True, order_bounded=True, interior=True,
        dimension=2)
    return Fixture(
        name="projection", oracle=oracle, domain=domain, profile=profile,
        expected=_expected(HOLDS, HOLDS, HOLDS, HOLDS, HOLDS, HOLDS, HOLDS,
                           VIOLATED, srs=HOLDS),
        expected_basic=_ALL_BASIC_HOLD,
        stronger_rs_set=(1,),
        notes="second-coordinate projection; lines along the first "
              "coordinate never move the value")


# ---------------------------------------------------------------------------
# lex: lexicographic order on (x1, x2)
# ---------------------------------------------------------------------------

def _lex_key(p: Point) -> tuple:
    return (float(p[0]), float(p[1]))


def _lex_solve(a: Point, b: Point, x: Point):
    t = _segment_hit_t(a, b, x)
    if t is not None and 0 <= t <= 1:
        return ("found", float(t))
    return ("none", None)


def _lex_side(a: Point, b: Point, x: Point, want: str):
    a1, a2 = _fr(a[0]), _fr(a[1])
    d1, d2 = _fr(b[0]) - a1, _fr(b[1]) - a2
    x1, x2 = _fr(x[0]), _fr(x[1])
    better = (lambda u, w: u > w) if want == "succ" else (lambda u, w: u < w)
    extreme = max if want == "succ" else min
    if d1 != 0:
        if better(extreme(a1, a1 + d1), x1):
            return ("found", 0.5)
        t0 = (x1 - a1) / d1
        if 0 < t0 < 1 and better(a2 + t0 * d2, x2):
            return ("found", float(t0))
        return ("none", None)
    if better(a1, x1):
        return ("found", 0.5)
    if a1 != x1:
        return ("none", None)
    if d2 == 0:
        return ("found", 0.5) if better(a2, x2) else ("none", None)
    if better(extreme(a2, a2 + d2), x2):
        return ("found", 0.5)
    return ("none", None)


def _lex_between(x: Point, y: Point) -> Optional[Point]:
    kx, ky = _lex_key(x), _lex_key(y)
    if not kx > ky:
        return None
    cands = []
    if kx[0] > ky[0]:
        cands.append((0.5 * (kx[0] + ky[0]), 0.0))
        cands.append((ky[0], min(10.0, 0.5 * (ky[1] + 10.0))))
        cands.append((kx[0], max(-10.0, 0.5 * (kx[1] - 10.0))))
    else:
        cands.append((kx[0], 0.5 * (kx[1] + ky[1])))
    for w in cands:
        if all(-10.0 <= c <= 10.0 for c in w) and ky < _lex_key(w) < kx:
            return w
    return None


def _lex_fixture() -> Fixture:
    third = 1.0 / 3.0
    hooks = OracleHooks(solve_on_segment=_lex_solve,
                        side_on_segment=_lex_side,
                        find_between=_lex_between)
    hints = CheckHints(
        continuity=(((0.0, 0.0), (0.0, -1.0), (1.0, 0.0), "upper"),),
        separate=(((0.0, 0.0), 0, (-1.0,), (0.0, -1.0), "upper"),),
        mixture=(((1.0, 0.0), (-1.0, 0.0), (0.0, 1.0), "upper", 0.5, 1.0),),
        weak_wold=(((0.5, 1.0), (third, 0.0), (0.0, 1.0)),),
        archimedean=(((0.0, 0.0), (0.0, -1.0), (1.0, 0.0)),),
        restricted=(((third, 0.0), 0, (1.0,), 0.5, 0.0),),
        unrestricted=(((0.5, 0.0), 0, (1.0,)),),
        stronger=(((0.0, 0.0), (0.0, 1.0), -10.0, 10.0),),
    )
    oracle = oracle_from_utility("lex", 2, _lex_key, hooks=hooks, hints=hints)
    domain = Domain(box=((-10.0, 10.0), (-10.0, 10.0)),
                    clipped_lo=(True, True), clipped_hi=(True, True))
    profile = AssumptionProfile(
        monotone_coordinate_count=2, order_dense=True,
        convex_upper_sections=True, order_bounded=True, interior=True,
        dimension=2)
    return Fixture(
        name="lex", oracle=oracle, domain=domain, profile=profile,
        expected=_expected(VIOLATED, VIOLATED, VIOLATED, VIOLATED, VIOLATED,
                           VIOLATED, VIOLATED, VIOLATED, srs=VIOLATED),
        expected_basic=_ALL_BASIC_HOLD,
        stronger_rs_set=(1,),
        notes="lexicographic preference; order-dense yet fails every "
              "continuity and solvability notion")


# ---------------------------------------------------------------------------
# step utilities with a jump across the line x1 + x2 = 1
# ---------------------------------------------------------------------------

def _step_jump_value(p: Point) -> float:
    if (float(p[0]), float(p[1])) == (1.0, 0.0):
        return 0.5
    return 0.4 if float(p[0]) + float(p[1]) <= 1.0 else 0.6


def _step_jump_class(p: Point) -> Fraction:
    if (float(p[0]), float(p[1])) == (1.0, 0.0):
        return Fraction(1, 2)
    s = float(p[0]) + float(p[1])
    return Fraction(2, 5) if s <= 1.0 else Fraction(3, 5)


def _step_jump_attainable(a: Point, b: Point, open_seg: bool) -> set:
    """Exact set of real class values on the (open) segment a..b.

    A degenerate pair is treated as the single point it denotes; a
    nondegenerate open segment attains the middle class 1/2 only when the
    special point (1,0) has a strictly interior parameter.
    """
    a1, a2 = _fr(a[0]), _fr(a[1])
    s0 = a1 + a2
    s1 = _fr(b[0]) + _fr(b[1]) - s0
    t_sp = _segment_hit_t(a, b, (1, 0))
    vals: set = set()

    def in_range(t: Fraction) -> bool:
        return (0 < t < 1) if open_seg else (0 <= t <= 1)

    if s1 == 0:
        base = Fraction(2, 5) if s0 <= 1 else Fraction(3, 5)
        if a == b:
            vals.add(Fraction(1, 2) if t_sp is not None else base)
            return vals
        vals.add(base)
        if t_sp is not None and in_range(t_sp):
            vals.add(Fraction(1, 2))
        return vals
    lo_s, hi_s = (s0, s0 + s1) if s1 > 0 else (s0 + s1, s0)
    t1 = (Fraction(1) - s0) / s1
    if lo_s < 1:
        vals.add(Fraction(2, 5))
    if hi_s > 1:
        vals.add(Fraction(3, 5))
    if in_range(t1):
        if t_sp is not None and t_sp == t1:
            vals.add(Fraction(1, 2))
        else:
            vals.add(Fraction(2, 5))
    return vals


def _step_jump_solve(a: Point, b: Point, x: Point):
    v = _step_jump_class(x)
    hit = v in _step_jump_attainable(a, b, False)
    return ("found", 0.5) if hit else ("none", None)


def _step_jump_side(a: Point, b: Point, x: Point, want: str):
    v = _step_jump_class(x)
    vals = _step_jump_attainable(a, b, True)
    ok = any(w > v for w in vals) if want == "succ" else any(w < v for w in vals)
    return ("found", 0.5) if ok else ("none", None)


def _step_jump_between(x: Point, y: Point) -> Optional[Point]:
    vx, vy = _step_jump_class(x), _step_jump_class(y)
    if vx == Fraction(3, 5) and vy == Fraction(2, 5):
        return (1.0, 0.0)
    return None


def _step_jump_fixture() -> Fixture:
    hooks = OracleHooks(solve_on_segment=_step_jump_solve,
                        side_on_segment=_step_jump_side,
                        find_between=_step_jump_between)
    hints = CheckHints(
        continuity=(((1.5, 0.5), (0.5, 0.5), (_DIAG, _DIAG), "upper"),),
        separate=(((1.5, 0.5), 0, (0.5,), (0.5, 0.5), "upper"),),
        mixture=(((0.9, 0.9), (0.1, 0.1), (1.5, 0.5), "upper", 0.5, 1.0),),
        archimedean=(((0.6, 0.5), (1.0, 0.0), (0.6, 0.5)),),
        restricted=(((1.0, 0.0), 0, (0.5,), 2.0, 0.0),),
        unrestricted=(((1.0, 0.0), 0, (0.5,)),),
        stronger=(((1.0, 0.0), (0.0, 1.0), 0.0, 2.0),),
        density=(((1.0, 0.0), (0.2, 0.2)),),
    )
    oracle = oracle_from_utility("step_jump", 2, _step_jump_value,
                                 hooks=hooks, hints=hints)
    domain = Domain(box=((0.0, 2.0), (0.0, 2.0)))
    profile = AssumptionProfile(
        monotone_coordinate_count=2, order_dense=False,
        convex_upper_sections=True, order_bounded=True, interior=False,
        dimension=2)
    return Fixture(
        name="step_jump", oracle=oracle, domain=domain, profile=profile,
        expected=_expected(VIOLATED, VIOLATED, VIOLATED, VIOLATED, VIOLATED,
                           VIOLATED, VIOLATED, VIOLATED, srs=VIOLATED),
        expected_basic=_basic(HOLDS, HOLDS, HOLDS, VIOLATED, HOLDS),
        stronger_rs_set=(1,),
        notes="two-level step with a single middle-value point at (1,0)")


def _step_bounded_class(p: Point) -> Fraction:
    s = float(p[0]) + float(p[1])
    if s < 1.0:
        return Fraction(0)
    if s == 1.0:
        return Fraction(4, 5)
    return Fraction(1)


def _step_bounded_attainable(a: Point, b: Point, open_seg: bool) -> set:
    a1, a2 = _fr(a[0]), _fr(a[1])
    s0 = a1 + a2
    s1 = _fr(b[0]) + _fr(b[1]) - s0
    vals: set = set()
    one = Fraction(1)
    if s1 == 0:
        vals.add(Fraction(0) if s0 < 1 else
                 (Fraction(4, 5) if s0 == 1 else Fraction(1)))
        return vals
    lo_s, hi_s = (s0, s0 + s1) if s1 > 0 else (s0 + s1, s0)
    t1 = (one - s0) / s1
    if open_seg:
        if lo_s < 1:
            vals.add(Fraction(0))
        if hi_s > 1:
            vals.add(Fraction(1))
        if 0 < t1 < 1:
            vals.add(Fraction(4, 5))
    else:
        if lo_s < 1:
            vals.add(Fraction(0))
        if hi_s > 1:
            vals.add(Fraction(1))
        if 0 <= t1 <= 1:
            vals.add(Fraction(4, 5))
    return vals


def _step_bounded_solve(a: Point, b: Point, x: Point):
    v = _step_bounded_class(x)
    hit = v in _step_bounded_attainable(a, b, False)
    return ("found", 0.5) if hit else ("none", None)


def _step_bounded_side(a: Point, b: Point, x: Point, want: str):
    v = _step_bounded_class(x)
    vals = _step_bounded_attainable(a, b, True)
    ok = any(w > v for w in vals) if want == "succ" else any(w < v for w in vals)
    return ("found", 0.5) if ok else ("none", None)


def _step_bounded_between(x: Point, y: Point) -> Optional[Point]:
    if _step_bounded_class(x) == 1 and _step_bounded_class(y) == 0:
        return (0.5, 0.5)
    return None


def _step_bounded_fixture() -> Fixture:
    hooks = OracleHooks(solve_on_segment=_step_bounded_solve,
                        side_on_segment=_step_bounded_side,
                        find_between=_step_bounded_between)
    hints = CheckHints(
        continuity=(((0.6, 0.6), (0.5, 0.5), (_DIAG, _DIAG), "upper"),),
        separate=(((0.6, 0.6), 0, (0.5,), (0.5, 0.5), "upper"),),
        # The mixture segment spans almost the whole axis so the value margin
        # above the threshold stays past the half-ulp of 1.0 through the
        # deepest chain step at either supported resolution; narrower
        # segments land the last step on a round-half-even tie.
        mixture=(((0.99, 0.01), (0.99, 0.99), (0.99, 0.5), "upper", 1.0, -1.0),),
        archimedean=(((0.6, 0.5), (0.6, 0.4), (0.6, 0.5)),),
        density=(((0.6, 0.6), (0.5, 0.5)),),
    )
    oracle = oracle_from_utility(
        "step_bounded", 2,
        lambda p: float(_step_bounded_class(p)), hooks=hooks, hints=hints)
    domain = Domain(box=((0.0, 1.0), (0.0, 1.0)), interior_only=True)
    profile = AssumptionProfile(
        monotone_coordinate_count=2, order_dense=False,
        convex_upper_sections=True, order_bounded=True,
        strong_order_bounded=True, interior=True, dimension=2)
    return Fixture(
        name="step_bounded", oracle=oracle, domain=domain, profile=profile,
        expected=_expected(VIOLATED, VIOLATED, VIOLATED, VIOLATED, VIOLATED,
                           VIOLATED, HOLDS, HOLDS, srs=HOLDS),
        expected_basic=_basic(HOLDS, HOLDS, HOLDS, VIOLATED, HOLDS),
        stronger_rs_set=(1,),
        notes="three-level step on the open unit box; solvable despite "
              "failing every continuity notion")


# ---------------------------------------------------------------------------
# sin_reciprocal: 1-D, u(x) = sin(1/x) for x > 0, u(0) = 1
# ---------------------------------------------------------------------------

def _sin_value(p: Point) -> float:
    c = float(p[0])
    return 1.0 if c == 0.0 else math.sin(1.0 / c)


def _sin_solve(a: Point, b: Point, x: Point):
    v = _sin_value(x)
    c_lo, c_hi = sorted((float(a[0]), float(b[0])))
    if c_lo <= float(x[0]) <= c_hi:
        return ("found", 0.5)
    status = _sin_interval_status(c_lo, c_hi, v)
    return (status, 0.5 if status == "found" else None)


def _sin_side(a: Point, b: Point, x: Point, want: str):
    v = _sin_value(x)
    lo, hi = sorted((float(a[0]), float(b[0])))
    if lo == hi:
        vv = _sin_value((lo,))
        ok = vv > v if want == "succ" else vv < v
        return ("found", 0.5) if ok else ("none", None)
    # open segment: abscissae fill (lo, hi), all positive unless lo == 0,
    # in which case they are still positive (0 is an excluded endpoint)
    th_hi = 1.0 / lo if lo > 0.0 else float("inf")
    th_lo = 1.0 / hi
    if th_hi - th_lo >= _TAU:
        sup, inf = 1.0, -1.0
    else:
        vals = [math.sin(th_lo), math.sin(th_hi)]
        for phase in (0.5 * math.pi, 1.5 * math.pi):
            k0 = math.floor((th_lo - phase) / _TAU)
            for k in (k0, k0 + 1, k0 + 2):
                th = phase + _TAU * k
                if th_lo < th < th_hi:
                    vals.append(math.sin(th))
        sup, inf = max(vals), min(vals)
    # the open interval attains values arbitrarily close to sup/inf, so a
    # clear margin decides either way; borderline stays unknown
    margin = 1e-9
    bound = sup if want == "succ" else inf
    if (bound > v + margin) if want == "succ" else (bound < v - margin):
        return ("found", 0.5)
    if (bound < v - margin) if want == "succ" else (bound > v + margin):
        return ("none", None)
    return ("unknown", None)


def _sin_between(x: Point, y: Point) -> Optional[Point]:
    fx, fy = _sin_value(x), _sin_value(y)
    if not fx > fy:
        return None
    c = _sin_between_core(0.5 * (fx + fy), fx, fy, 4.0,
                          lambda cc: math.sin(1.0 / cc))
    return None if c is None else (c,)


def _sin_window(origin: Point, offset: Point, s_lo: float, s_hi: float,
                x: Point, side: str):
    cands = _reciprocal_window(float(origin[0]), float(offset[0]), s_lo, s_hi)
    return _first_window_match(cands, origin, offset, x, side, _sin_value)


def _sin_fixture() -> Fixture:
    hooks = OracleHooks(solve_on_segment=_sin_solve,
                        side_on_segment=_sin_side,
                        find_between=_sin_between,
                        window_member=_sin_window)
    hints = CheckHints(
        continuity=(((2.0,), (0.0,), (1.0,), "lower"),),
        separate=(((2.0,), 0, (), (0.0,), "lower"),),
        mixture=(((2.0,), (0.0,), (2.0,), "lower", 0.0, 1.0),),
        convex=(((_SIN_PEAK,), (_SIN_PEAK_SMALL,), (2.0,)),),
        monotone=(((4.0,), (2.0,)),),
    )
    oracle = oracle_from_utility("sin_reciprocal", 1, _sin_value,
                                 hooks=hooks, hints=hints)
    domain = Domain(box=((0.0, 4.0),), clipped_lo=(False,), clipped_hi=(True,))
    profile = AssumptionProfile(
        weakly_monotone=False, monotone_coordinate_count=0,
        order_dense=True, convex_upper_sections=False, order_bounded=True,
        interior=False, dimension=1)
    return Fixture(
        name="sin_reciprocal", oracle=oracle, domain=domain, profile=profile,
        expected=_expected(VIOLATED, HOLDS, HOLDS, VIOLATED, HOLDS, VIOLATED,
                           HOLDS, HOLDS),
        expected_basic=_basic(HOLDS, HOLDS, VIOLATED, HOLDS, VIOLATED),
        notes="topologist's-sine utility on a half-open interval; "
              "1-D, so separate and mixture continuity collapse into "
              "full continuity")


# ---------------------------------------------------------------------------
# rational_line: sin(1/x2) ranks above-the-line points; min(x1,1) on the line
# ---------------------------------------------------------------------------

def _rline_key(p: Point) -> tuple:
    x1, x2 = float(p[0]), float(p[1])
    if x2 > 0.0:
        return (math.sin(1.0 / x2), 0)
    return (min(x1, 1.0), 1)


def _rline_solve(a: Point, b: Point, x: Point):
    vx = _rline_key(x)
    a1, a2 = _fr(a[0]), _fr(a[1])
    d1, d2 = _fr(b[0]) - a1, _fr(b[1]) - a2
    if vx[1] == 1:
        # a rational-kind target can only match on the x2 == 0 slice
        r = Fraction(vx[0])
        if d2 == 0:
            if a2 != 0:
                return ("none", None)
            p_lo, p_hi = (a1, a1 + d1) if d1 >= 0 else (a1 + d1, a1)
            if r == 1:
                ok = p_hi >= 1
            elif r < 1:
                ok = p_lo <= r <= p_hi
            else:
                ok = False
            return ("found", 0.5) if ok else ("none", None)
        t0 = -a2 / d2
        if 0 <= t0 <= 1:
            p1 = a1 + t0 * d1
            if (r == 1 and p1 >= 1) or (r < 1 and p1 == r):
                return ("found", float(t0))
        return ("none", None)
    # sin-kind target: need a positive-x2 point with the matching value
    lo2, hi2 = (a2, a2 + d2) if d2 >= 0 else (a2 + d2, a2)
    status = _sin_interval_status(float(lo2), float(hi2), vx[0])
    return (status, 0.5 if status == "found" else None)


def _rline_between(x: Point, y: Point) -> Optional[Point]:
    vx, vy = _rline_key(x), _rline_key(y)
    if not vx > vy:
        return None
    if vx[1] == 0 and vy[1] == 0:
        c = _sin_between_core(0.5 * (vx[0] + vy[0]), vx[0], vy[0], 4.0,
                              lambda cc: math.sin(1.0 / cc))
        if c is not None:
            w = (0.0, c)
            if vy < _rline_key(w) < vx:
                return w
        return None
    if vx[1] == 1 and vy[1] == 1:
        w = (0.5 * (vx[0] + vy[0]), 0.0)
        if vy < _rline_key(w) < vx:
            return w
        return None
    if vx[1] == 1:
        # rational above sin: try a line point first, then a sin point
        q = 0.5 * (max(vy[0], -1.0) + min(vx[0], 1.0))
        w = (q, 0.0)
        if 0.0 <= q <= 4.0 and vy < _rline_key(w) < vx:
            return w
        c = _sin_between_core(0.5 * (vx[0] + vy[0]), 1.0, vy[0], 4.0,
                              lambda cc: math.sin(1.0 / cc))
        if c is not None:
            w = (0.0, c)
            if vy < _rline_key(w) < vx:
                return w
        return None
    # sin above rational
    c = _sin_between_core(0.5 * (vx[0] + vy[0]), vx[0], vy[0], 4.0,
                          lambda cc: math.sin(1.0 / cc))
    if c is not None:
        w = (0.0, c)
        if vy < _rline_key(w) < vx:
            return w
    q = 0.5 * (vy[0] + min(vx[0], 1.0))
    w = (q, 0.0)
    if 0.0 <= q <= 4.0 and vy < _rline_key(w) < vx:
        return w
    return None


def _rline_window(origin: Point, offset: Point, s_lo: float, s_hi: float,
                  x: Point, side: str):
    cands = _reciprocal_window(float(origin[1]), float(offset[1]), s_lo, s_hi)
    return _first_window_match(cands, origin, offset, x, side, _rline_key)


def _rational_line_fixture() -> Fixture:
    hooks = OracleHooks(solve_on_segment=_rline_solve,
                        find_between=_rline_between,
                        window_member=_rline_window)
    hints = CheckHints(
        continuity=(((0.0, 2.0), (0.6, 0.0), (0.0, 1.0), "lower"),),
        separate=(((0.0, 2.0), 1, (0.6,), (0.6, 0.0), "lower"),),
        mixture=(((0.6, 2.0), (0.6, 0.0), (0.0, 2.0), "lower", 0.0, 1.0),),
        weak_wold=(((1.0, 0.0), (0.0, 2.0), (0.0, 0.0)),),
        restricted=(((0.0, 2.0), 0, (0.0,), 0.0, 1.0),),
        unrestricted=(((0.0, 2.0), 0, (0.0,)),),
        stronger=(((0.0, 2.0), (0.0, 0.0), 0.0, 1.0),),
        convex=(((0.0, _SIN_PEAK), (0.0, _SIN_PEAK_SMALL), (0.0, 2.0)),),
        monotone=(((0.0, 1.0), (0.0, 0.5)),),
    )
    oracle = oracle_from_utility("rational_line", 2, _rline_key,
                                 hooks=hooks, hints=hints)
    domain = Domain(box=((0.0, 4.0), (0.0, 4.0)),
                    clipped_lo=(False, False), clipped_hi=(True, True))
    profile = AssumptionProfile(
        weakly_monotone=False, monotone_coordinate_count=1,
        order_dense=True, convex_upper_sections=False, order_bounded=True,
        interior=False, dimension=2)
    return Fixture(
        name="rational_line", oracle=oracle, domain=domain, profile=profile,
        expected=_expected(VIOLATED, VIOLATED, VIOLATED, VIOLATED, HOLDS,
                           VIOLATED, VIOLATED, VIOLATED, srs=VIOLATED),
        expected_basic=_basic(HOLDS, HOLDS, VIOLATED, HOLDS, VIOLATED),
        stronger_rs_set=(1,),
        notes="oscillating ranks above the boundary line; on-line values "
              "never meet them, so solvability certifies gaps")


# ---------------------------------------------------------------------------
# sqrt2_gap: u = x1 + x2 in QSqrt2; the second coordinate is rational-only
# ---------------------------------------------------------------------------

def _sqrt2_value(p: Point) -> QSqrt2:
    return QSqrt2.from_scalar(p[0]) + QSqrt2.from_scalar(p[1])


def _sqrt2_solve(a: Point, b: Point, x: Point):
    v, va, vb = _sqrt2_value(x), _sqrt2_value(a), _sqrt2_value(b)
    if va == vb:
        return ("found", 0.5) if v == va else ("none", None)
    t = (v - va) / (vb - va)
    if t.sign() < 0 or (1 - t).sign() < 0:
        return ("none", None)
    # the indifferent point must keep the rational-only second axis rational
    a2, b2 = QSqrt2.from_scalar(a[1]), QSqrt2.from_scalar(b[1])
    if not (a2 + t * (b2 - a2)).is_rational:
        return ("none", None)
    return ("found", t)


def _sqrt2_fixture() -> Fixture:
    hooks = OracleHooks(solve_on_segment=_sqrt2_solve)
    root2 = QSqrt2(0, 1)
    zero = Fraction(0)
    hints = CheckHints(
        restricted=(((root2, zero), 1, (zero,), zero, Fraction(2)),
                    ((root2, zero), 0, (zero,), zero, Fraction(2))),
        unrestricted=(((root2, zero), 1, (zero,)),),
    )
    oracle = oracle_from_utility("sqrt2_gap", 2, _sqrt2_value, exact=True,
                                 hooks=hooks, hints=hints)
    domain = Domain(box=((Fraction(-10), Fraction(10)),
                         (Fraction(-10), Fraction(10))),
                    clipped_lo=(True, True), clipped_hi=(True, True),
                    coordinate_fields=("real", "rational"))
    profile = AssumptionProfile(
        monotone_coordinate_count=2, order_dense=True,
        convex_upper_sections=True, order_bounded=True, interior=True,
        convex_domain=False, dimension=2)
    return Fixture(
        name="sqrt2_gap", oracle=oracle, domain=domain, profile=profile,
        expected=_expected(HOLDS, INAPPLICABLE, INAPPLICABLE, INAPPLICABLE,
                           INAPPLICABLE, HOLDS, VIOLATED, VIOLATED),
        expected_basic=_ALL_BASIC_HOLD,
        notes="exact-field sum utility; the rational-only second axis "
              "cannot solve to an irrational target")


# ---------------------------------------------------------------------------
# diagonal_jump / wedge_jump: jumps on degenerate polyhedral domains
# ---------------------------------------------------------------------------

def _diag_value(p: Point) -> float:
    return 1.0 if float(p[0]) > 0.0 else 0.0


def _first_coord_range(a: Point, b: Point):
    a1 = _fr(a[0])
    d1 = _fr(b[0]) - a1
    return (a1, a1 + d1) if d1 >= 0 else (a1 + d1, a1)


def _diag_solve(a: Point, b: Point, x: Point):
    v = Fraction(1) if float(x[0]) > 0.0 else Fraction(0)
    lo, hi = _first_coord_range(a, b)
    if v == 1:
        ok = hi > 0
    else:
        ok = lo <= 0
    return ("found", 0.5) if ok else ("none", None)


def _diag_side(a: Point, b: Point, x: Point, want: str):
    v = Fraction(1) if float(x[0]) > 0.0 else Fraction(0)
    lo, hi = _first_coord_range(a, b)
    if lo == hi:
        w = Fraction(1) if lo > 0 else Fraction(0)
        ok = w > v if want == "succ" else w < v
        return ("found", 0.5) if ok else ("none", None)
    # open segment: first coordinates fill (lo, hi)
    if want == "succ":
        ok = v == 0 and hi > 0
    else:
        ok = v == 1 and lo < 0
    return ("found", 0.5) if ok else ("none", None)


def _diag_between(x: Point, y: Point) -> Optional[Point]:
    return None  # two-valued relation: nothing lies strictly between


def _diagonal_jump_fixture() -> Fixture:
    hooks = OracleHooks(solve_on_segment=_diag_solve,
                        side_on_segment=_diag_side,
                        find_between=_diag_between)
    hints = CheckHints(
        continuity=(((0.5, 0.5), (0.0, 0.0), (_DIAG, _DIAG), "upper"),),
        mixture=(((0.5, 0.5), (-0.5, -0.5), (0.5, 0.5), "upper", 0.5, 1.0),),
        archimedean=(((0.5, 0.5), (0.0, 0.0), (0.5, 0.5)),),
        unrestricted=(((0.5, 0.5), 0, (-0.5,)),),
        density=(((0.5, 0.5), (-0.5, -0.5)),),
    )
    oracle = oracle_from_utility("diagonal_jump", 2, _diag_value,
                                 hooks=hooks, hints=hints)
    domain = Domain(box=((-1.0, 1.0), (-1.0, 1.0)),
                    halfspaces=(((1.0, -1.0), 0.0), ((-1.0, 1.0), 0.0)))
    profile = AssumptionProfile(
        monotone_coordinate_count=2, order_dense=False,
        convex_upper_sections=True, order_bounded=True, interior=False,
        dimension=2)
    return Fixture(
        name="diagonal_jump", oracle=oracle, domain=domain, profile=profile,
        expected=_expected(VIOLATED, VIOLATED, VIOLATED, VIOLATED, VIOLATED,
                           HOLDS, HOLDS, VIOLATED),
        expected_basic=_basic(HOLDS, HOLDS, HOLDS, VIOLATED, HOLDS),
        notes="indicator of the open half-line on the diagonal segment; "
              "coordinate lines meet the domain in single points")


def _wedge_value(p: Point) -> float:
    return 0.0 if (float(p[0]), float(p[1])) == (0.0, 0.0) else 1.0


def _wedge_solve(a: Point, b: Point, x: Point):
    v = Fraction(0) if (float(x[0]), float(x[1])) == (0.0, 0.0) else Fraction(1)
    t0 = _segment_hit_t(a, b, (0, 0))
    if v == 0:
        ok = t0 is not None and 0 <= t0 <= 1
        return ("found", float(t0)) if ok else ("none", None)
    if a == b:
        ok = t0 is None
    else:
        ok = True  # a nondegenerate segment contains a nonzero point
    return ("found", 0.5) if ok else ("none", None)


def _wedge_side(a: Point, b: Point, x: Point, want: str):
    v = Fraction(0) if (float(x[0]), float(x[1])) == (0.0, 0.0) else Fraction(1)
    t0 = _segment_hit_t(a, b, (0, 0))
    if want == "succ":
        if v == 1:
            return ("none", None)
        if a == b:
            ok = t0 is None
        else:
            ok = True
        return ("found", 0.5) if ok else ("none", None)
    if v == 0:
        return ("none", None)
    ok = t0 is not None and 0 < t0 < 1
    return ("found", float(t0)) if ok else ("none", None)


def _wedge_between(x: Point, y: Point) -> Optional[Point]:
    return None


def _wedge_jump_fixture() -> Fixture:
    hooks = OracleHooks(solve_on_segment=_wedge_solve,
                        side_on_segment=_wedge_side,
                        find_between=_wedge_between)
    hints = CheckHints(
        continuity=(((0.5, 0.5), (0.0, 0.0), (_DIAG, _DIAG), "upper"),),
        mixture=(((0.5, 0.5), (0.0, 0.0), (0.5, 0.5), "upper", 0.0, 1.0),),
        archimedean=(((0.5, 0.5), (0.0, 0.0), (0.5, 0.5)),),
        unrestricted=(((0.0, 0.0), 0, (0.5,)),),
        density=(((0.5, 0.5), (0.0, 0.0)),),
    )
    oracle = oracle_from_utility("wedge_jump", 2, _wedge_value,
                                 hooks=hooks, hints=hints)
    domain = Domain(box=((0.0, 1.0), (0.0, 1.0)),
                    halfspaces=(((-2.0, 1.0), 0.0), ((0.5, -1.0), 0.0)))
    profile = AssumptionProfile(
        monotone_coordinate_count=2, order_dense=False,
        convex_upper_sections=True, order_bounded=True, interior=False,
        dimension=2)
    return Fixture(
        name="wedge_jump", oracle=oracle, domain=domain, profile=profile,
        expected=_expected(VIOLATED, VIOLATED, VIOLATED, VIOLATED, VIOLATED,
                           HOLDS, HOLDS, VIOLATED),
        expected_basic=_basic(HOLDS, HOLDS, HOLDS, VIOLATED, HOLDS),
        notes="isolated bottom point at the wedge apex; every other point "
              "sits strictly above it")


# ---------------------------------------------------------------------------
# min_util / max_util / sum_util on [0,2]^2
# ---------------------------------------------------------------------------

def _minmax_hooks(use_min: bool) -> OracleHooks:
    pick = min if use_min else max

    def val(p: Point) -> Fraction:
        return pick(_fr(p[0]), _fr(p[1]))

    def coords(a: Point, b: Point):
        a1, a2 = _fr(a[0]), _fr(a[1])
        return (a1, _fr(b[0]) - a1), (a2, _fr(b[1]) - a2)

    def off_line_ok(c0: Fraction, sl: Fraction, v: Fraction) -> bool:
        # can the non-binding line stay on the harmless side of v somewhere?
        vals = (c0, c0 + sl)
        return max(vals) >= v if use_min else min(vals) <= v

    def solve(a: Point, b: Point, x: Point):
        v = val(x)
        (c1, s1), (c2, s2) = coords(a, b)
        for (c, s), (oc, os) in (((c1, s1), (c2, s2)), ((c2, s2), (c1, s1))):
            if s == 0:
                if c == v and off_line_ok(oc, os, v):
                    return ("found", 0.5)
                continue
            t = (v - c) / s
            if 0 <= t <= 1:
                other = oc + t * os
                if (use_min and other >= v) or (not use_min and other <= v):
                    return ("found", float(t))
        return ("none", None)

    def side(a: Point, b: Point, x: Point, want: str):
        v = val(x)
        (c1, s1), (c2, s2) = coords(a, b)
        # extremes of the piecewise-affine value over the closed segment
        # sit at the endpoints or the kink; the open segment approaches
        # them, so a strict comparison against v decides exactly
        cand = [pick(c1, c2), pick(c1 + s1, c2 + s2)]
        if s1 != s2:
            tk = (c2 - c1) / (s1 - s2)
            if 0 < tk < 1:
                cand.append(c1 + tk * s1)
        ok = max(cand) > v if want == "succ" else min(cand) < v
        return ("found", 0.5) if ok else ("none", None)

    def between(x: Point, y: Point) -> Optional[Point]:
        vx, vy = val(x), val(y)
        if not vx > vy:
            return None
        m = (vx + vy) / 2
        mf = float(m)
        w = (mf, mf)
        if 0.0 <= mf <= 2.0 and vy < pick(_fr(w[0]), _fr(w[1])) < vx:
            return w
        return None

    return OracleHooks(solve_on_segment=solve, side_on_segment=side,
                       find_between=between)


def _sum_sq_value(p: Point) -> float:
    x1, x2 = float(p[0]), float(p[1])
    return x1 * x1 + x2 * x2


def _sum_sq_hooks() -> OracleHooks:
    def val(p: Point) -> Fraction:
        x1, x2 = _fr(p[0]), _fr(p[1])
        return x1 * x1 + x2 * x2

    def poly(a: Point, b: Point, v: Fraction):
        a1, a2 = _fr(a[0]), _fr(a[1])
        d1, d2 = _fr(b[0]) - a1, _fr(b[1]) - a2
        A = d1 * d1 + d2 * d2
        B = 2 * (a1 * d1 + a2 * d2)
        C = a1 * a1 + a2 * a2 - v
        return A, B, C

    def solve(a: Point, b: Point, x: Point):
        A, B, C = poly(a, b, val(x))
        if A == 0:
            return ("found", 0.5) if C == 0 else ("none", None)
        if _quad_roots_in(A, B, C, Fraction(0), Fraction(1)):
            return ("found", 0.5)
        return ("none", None)

    def side(a: Point, b: Point, x: Point, want: str):
        v = val(x)
        A, B, C = poly(a, b, v)
        sgn = 1 if want == "succ" else -1
        if _quad_pos_on_open(sgn * A, sgn * B, sgn * C,
                             Fraction(0), Fraction(1)):
            return ("found", 0.5)
        return ("none", None)

    def between(x: Point, y: Point) -> Optional[Point]:
        vx, vy = val(x), val(y)
        if not vx > vy:
            return None
        t = math.sqrt(float((vx + vy) / 2) / 2.0)
        w = (t, t)
        if 0.0 <= t <= 2.0 and vy < val(w) < vx:
            return w
        return None

    return OracleHooks(solve_on_segment=solve, side_on_segment=side,
                       find_between=between)


def _square_domain() -> Domain:
    return Domain(box=((0.0, 2.0), (0.0, 2.0)))


def _grid_profile(convex_upper: bool) -> AssumptionProfile:
    return AssumptionProfile(
        monotone_coordinate_count=2, order_dense=True,
        convex_upper_sections=convex_upper, order_bounded=True,
        interior=True, dimension=2)


def _min_util_fixture() -> Fixture:
    hints = CheckHints(unrestricted=(((2.0, 2.0), 0, (1.0,)),))
    oracle = oracle_from_utility(
        "min_util", 2, lambda p: min(float(p[0]), float(p[1])),
        hooks=_minmax_hooks(True), hints=hints)
    return Fixture(
        name="min_util", oracle=oracle, domain=_square_domain(),
        profile=_grid_profile(True),
        expected=_expected(HOLDS, HOLDS, HOLDS, HOLDS, HOLDS, HOLDS, HOLDS,
                           VIOLATED, srs=HOLDS),
        expected_basic=_ALL_BASIC_HOLD,
        stronger_rs_set=(1,),
        notes="Leontief-style minimum; lines cannot raise the value past "
              "the fixed coordinate")


def _max_util_fixture() -> Fixture:
    hints = CheckHints(
        unrestricted=(((0.0, 0.0), 0, (1.0,)),),
        convex=(((2.0, 0.0), (0.0, 2.0), (1.5, 0.0)),),
    )
    oracle = oracle_from_utility(
        "max_util", 2, lambda p: max(float(p[0]), float(p[1])),
        hooks=_minmax_hooks(False), hints=hints)
    return Fixture(
        name="max_util", oracle=oracle, domain=_square_domain(),
        profile=_grid_profile(False),
        expected=_expected(HOLDS, HOLDS, HOLDS, HOLDS, HOLDS, HOLDS, HOLDS,
                           VIOLATED, srs=HOLDS),
        expected_basic=_basic(HOLDS, HOLDS, HOLDS, HOLDS, VIOLATED),
        stronger_rs_set=(1,),
        notes="maximum utility; upper sections are unions of slabs, not "
              "convex")


def _sum_util_fixture() -> Fixture:
    hints = CheckHints(
        unrestricted=(((0.0, 0.0), 0, (1.0,)),),
        convex=(((2.0, 0.0), (0.0, 2.0), (1.9, 0.0)),),
    )
    oracle = oracle_from_utility("sum_util", 2, _sum_sq_value,
                                 hooks=_sum_sq_hooks(), hints=hints)
    return Fixture(
        name="sum_util", oracle=oracle, domain=_square_domain(),
        profile=_grid_profile(False),
        expected=_expected(HOLDS, HOLDS, HOLDS, HOLDS, HOLDS, HOLDS, HOLDS,
                           VIOLATED, srs=HOLDS),
        expected_basic=_basic(HOLDS, HOLDS, HOLDS, HOLDS, VIOLATED),
        stronger_rs_set=(1,),
        notes="sum of squares; circular indifference classes around the "
              "origin corner")


# ---------------------------------------------------------------------------
# catalogue
# ---------------------------------------------------------------------------

def catalogue() -> dict:
    """Builders for every named fixture, keyed by catalogue name."""
    return {
        "gp2": _gp2_fixture,
        "linear_sum": _linear_sum_fixture,
        "lex": _lex_fixture,
        "step_jump": _step_jump_fixture,
        "projection": _projection_fixture,
        "step_bounded": _step_bounded_fixture,
        "sin_reciprocal": _sin_fixture,
        "rational_line": _rational_line_fixture,
        "sqrt2_gap": _sqrt2_fixture,
        "diagonal_jump": _diagonal_jump_fixture,
        "wedge_jump": _wedge_jump_fixture,
        "min_util": _min_util_fixture,
        "max_util": _max_util_fixture,
        "sum_util": _sum_util_fixture,
    }
