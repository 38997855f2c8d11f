"""Domains, points, exact scalars, comparison oracles, and fixture access.

Points are tuples of scalars.  A scalar is either a Float64 ``float`` or an
exact element of the field ℚ(√2) (:class:`QSqrt2`); exact scalars exist for
the irrational-gap relations, where "the indifference value is irrational"
must be a theorem of the arithmetic rather than a tolerance judgement.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from functools import lru_cache, total_ordering
from typing import Any, Callable, Optional, Sequence, Union


class Comparison(Enum):
    """Outcome of comparing two points: a ≻ b, a ≺ b, a ∼ b, or a ⋈ b."""

    SUCC = "succ"
    PREC = "prec"
    INDIFF = "indiff"
    INCOMP = "incomp"

    def converse(self) -> "Comparison":
        if self is Comparison.SUCC:
            return Comparison.PREC
        if self is Comparison.PREC:
            return Comparison.SUCC
        return self

    def weakly_above(self) -> bool:
        """True for ≻ or ∼ (first argument weakly preferred)."""
        return self in (Comparison.SUCC, Comparison.INDIFF)

    def weakly_below(self) -> bool:
        return self in (Comparison.PREC, Comparison.INDIFF)


@total_ordering
class QSqrt2:
    """Exact element a + b·√2 of ℚ(√2) with rational a, b.

    Field arithmetic is closed and exact; equality and order are decidable
    (order via the exact sign of a + b√2, comparing a² against 2b² when the
    parts disagree in sign).  Floats mix in exactly: every Float64 value is a
    binary rational and is converted via ``Fraction(value)``.
    """

    __slots__ = ("a", "b")

    def __init__(self, a: Union[int, float, Fraction] = 0,
                 b: Union[int, float, Fraction] = 0) -> None:
        object.__setattr__(self, "a", Fraction(a))
        object.__setattr__(self, "b", Fraction(b))

    def __setattr__(self, name: str, value: Any) -> None:
        raise AttributeError("QSqrt2 is immutable")

    # -- coercion ---------------------------------------------------------
    @classmethod
    def from_scalar(cls, x: "ScalarLike") -> "QSqrt2":
        if isinstance(x, QSqrt2):
            return x
        return cls(Fraction(x))

    @property
    def is_rational(self) -> bool:
        return self.b == 0

    # -- ring/field operations -------------------------------------------
    def _coerce(self, other: Any) -> Optional["QSqrt2"]:
        if isinstance(other, QSqrt2):
            return other
        if isinstance(other, (int, Fraction, float)):
            return QSqrt2(Fraction(other))
        return None

    def __add__(self, other: Any) -> "QSqrt2":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QSqrt2(self.a + o.a, self.b + o.b)

    __radd__ = __add__

    def __sub__(self, other: Any) -> "QSqrt2":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QSqrt2(self.a - o.a, self.b - o.b)

    def __rsub__(self, other: Any) -> "QSqrt2":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other: Any) -> "QSqrt2":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QSqrt2(self.a * o.a + 2 * self.b * o.b,
                      self.a * o.b + self.b * o.a)

    __rmul__ = __mul__

    def inverse(self) -> "QSqrt2":
        d = self.a * self.a - 2 * self.b * self.b
        if d == 0:
            raise ZeroDivisionError("division by zero in QSqrt2")
        return QSqrt2(self.a / d, -self.b / d)

    def __truediv__(self, other: Any) -> "QSqrt2":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other: Any) -> "QSqrt2":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __neg__(self) -> "QSqrt2":
        return QSqrt2(-self.a, -self.b)

    def __pos__(self) -> "QSqrt2":
        return self

    def __abs__(self) -> "QSqrt2":
        return -self if self.sign() < 0 else self

    def __pow__(self, n: int) -> "QSqrt2":
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inverse() ** (-n)
        out = QSqrt2(1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def conj(self) -> "QSqrt2":
        """Galois conjugate a − b·√2."""
        return QSqrt2(self.a, -self.b)

    # -- order -------------------------------------------------------------
    def sign(self) -> int:
        """Exact sign of the real number a + b·√2."""
        if self.a == 0 and self.b == 0:
            return 0
        if self.a >= 0 and self.b >= 0:
            return 1
        if self.a <= 0 and self.b <= 0:
            return -1
        # parts of opposite sign: compare a² with 2b²
        if self.a > 0:
            return 1 if self.a * self.a > 2 * self.b * self.b else -1
        return -1 if self.a * self.a > 2 * self.b * self.b else 1

    def __eq__(self, other: Any) -> bool:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.a == o.a and self.b == o.b

    def __lt__(self, other: Any) -> bool:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return (self - o).sign() < 0

    def __hash__(self) -> int:
        if self.b == 0:
            return hash(self.a)
        return hash((self.a, self.b))

    def __float__(self) -> float:
        return float(self.a) + float(self.b) * 1.4142135623730951

    def __repr__(self) -> str:
        return f"QSqrt2({self.a!r}, {self.b!r})"

    def __str__(self) -> str:
        if self.b == 0:
            return str(self.a)
        return f"{self.a}+{self.b}*sqrt(2)"


ScalarLike = Union[float, int, Fraction, QSqrt2]
Point = tuple  # tuple of scalars


def scalar_float(x: ScalarLike) -> float:
    return float(x)


def _exact(x: ScalarLike) -> QSqrt2:
    return QSqrt2.from_scalar(x)


def _is_float(x: Any) -> bool:
    return isinstance(x, float)


def _le(x: ScalarLike, y: ScalarLike) -> bool:
    if _is_float(x) and _is_float(y):
        return x <= y
    return not (_exact(x) > _exact(y))


def _lt(x: ScalarLike, y: ScalarLike) -> bool:
    if _is_float(x) and _is_float(y):
        return x < y
    return _exact(x) < _exact(y)


# ---------------------------------------------------------------------------
# domains
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class LineRange:
    """Parameter interval [t_lo, t_hi] of a line p + t·d inside a domain.

    ``lo_kind``/``hi_kind`` say which kind of constraint binds at each end:
    "true" for genuine domain structure (half-space or an unclipped box
    bound), "clip" for an artificial box bound introduced when clipping an
    unbounded model domain.  ``open_ends`` is true when the domain is
    interior-only, i.e. neither endpoint itself belongs to the domain.
    """

    t_lo: float
    t_hi: float
    lo_kind: str
    hi_kind: str
    open_ends: bool


@dataclass(frozen=True)
class Domain:
    """A polyhedron: a box intersected with half-spaces a·x ≤ c.

    ``interior_only`` switches membership to strict inequalities.
    ``clipped_lo``/``clipped_hi`` mark box bounds that exist only to clip an
    unbounded model domain to something scannable; checkers treat such ends
    as inconclusive rather than as genuine boundary structure.
    ``coordinate_fields`` restricts coordinates to a subfield ("real" or
    "rational"); any rational coordinate makes the domain non-convex as a
    subset of ℝⁿ, which disables mixture-based probing.
    """

    box: tuple
    halfspaces: tuple = ()
    interior_only: bool = False
    clipped_lo: Optional[tuple] = None
    clipped_hi: Optional[tuple] = None
    coordinate_fields: Optional[tuple] = None

    def __post_init__(self) -> None:
        n = len(self.box)
        if n < 1:
            raise ValueError("domain dimension must be >= 1")
        for lo, hi in self.box:
            if not _le(lo, hi):
                raise ValueError("box bound lo > hi")
        if self.clipped_lo is None:
            object.__setattr__(self, "clipped_lo", (False,) * n)
        if self.clipped_hi is None:
            object.__setattr__(self, "clipped_hi", (False,) * n)
        if self.coordinate_fields is None:
            object.__setattr__(self, "coordinate_fields", ("real",) * n)
        for fld in self.coordinate_fields:
            if fld not in ("real", "rational"):
                raise ValueError(f"unknown coordinate field {fld!r}")

    @property
    def dimension(self) -> int:
        return len(self.box)

    @property
    def is_convex(self) -> bool:
        """Convex as a subset of ℝⁿ (false once a coordinate is rational-only)."""
        return all(f == "real" for f in self.coordinate_fields)

    def contains(self, p: Point, strict: Optional[bool] = None) -> bool:
        if len(p) != self.dimension:
            raise ValueError(
                f"point dimension {len(p)} != domain dimension {self.dimension}")
        use_strict = self.interior_only if strict is None else strict
        for x, (lo, hi) in zip(p, self.box):
            if use_strict:
                if not (_lt(lo, x) and _lt(x, hi)):
                    return False
            else:
                if not (_le(lo, x) and _le(x, hi)):
                    return False
        for coeffs, bound in self.halfspaces:
            s = _dot(coeffs, p)
            if use_strict:
                if not _lt(s, bound):
                    return False
            else:
                if not _le(s, bound):
                    return False
        for x, fld in zip(p, self.coordinate_fields):
            if fld == "rational":
                if isinstance(x, QSqrt2) and not x.is_rational:
                    return False
        return True

    def line_range(self, p: Sequence[float], d: Sequence[float]) -> Optional[LineRange]:
        """Parameter range of {p + t·d} ∩ (closed) domain, or None if empty."""
        t_lo, t_hi = float("-inf"), float("inf")
        lo_kind = hi_kind = "true"
        for i in range(self.dimension):
            di = float(d[i])
            pi = float(p[i])
            lo = float(self.box[i][0])
            hi = float(self.box[i][1])
            if di == 0.0:
                if not (lo <= pi <= hi):
                    return None
                continue
            t_at_lo = (lo - pi) / di
            t_at_hi = (hi - pi) / di
            if di > 0:
                lo_t, lo_k = t_at_lo, ("clip" if self.clipped_lo[i] else "true")
                hi_t, hi_k = t_at_hi, ("clip" if self.clipped_hi[i] else "true")
            else:
                lo_t, lo_k = t_at_hi, ("clip" if self.clipped_hi[i] else "true")
                hi_t, hi_k = t_at_lo, ("clip" if self.clipped_lo[i] else "true")
            if lo_t > t_lo:
                t_lo, lo_kind = lo_t, lo_k
            if hi_t < t_hi:
                t_hi, hi_kind = hi_t, hi_k
        for coeffs, bound in self.halfspaces:
            coef = sum(float(c) * float(di) for c, di in zip(coeffs, d))
            s0 = sum(float(c) * float(pi) for c, pi in zip(coeffs, p))
            if coef == 0.0:
                if s0 > float(bound):
                    return None
                continue
            t_star = (float(bound) - s0) / coef
            if coef > 0:
                if t_star < t_hi:
                    t_hi, hi_kind = t_star, "true"
            else:
                if t_star > t_lo:
                    t_lo, lo_kind = t_star, "true"
        if t_lo > t_hi:
            return None
        return LineRange(t_lo, t_hi, lo_kind, hi_kind, self.interior_only)

    def coordinate_interval(self, i: int, rest: Sequence[float]) -> Optional[LineRange]:
        """Range of coordinate i on the line fixing the other coordinates to rest.

        ``rest`` lists the other coordinates in ascending index order.  The
        returned parameter t IS the value of coordinate i.
        """
        if not 0 <= i < self.dimension:
            raise ValueError("coordinate index out of range")
        p = list(rest)
        p.insert(i, 0.0)
        d = [0.0] * self.dimension
        d[i] = 1.0
        return self.line_range(p, d)


def _dot(coeffs: Sequence[ScalarLike], p: Point):
    if all(_is_float(c) or isinstance(c, int) for c in coeffs) and \
            all(_is_float(x) for x in p):
        return sum(float(c) * x for c, x in zip(coeffs, p))
    out = QSqrt2(0)
    for c, x in zip(coeffs, p):
        out = out + _exact(c) * _exact(x)
    return out


def contains(domain: Domain, p: Point) -> bool:
    """Membership in the polyhedron (strict when the domain is interior-only)."""
    return domain.contains(p)


# ---------------------------------------------------------------------------
# mixtures
# ---------------------------------------------------------------------------

def mixture(a: Point, b: Point, lam: ScalarLike) -> Point:
    """Convex combination λ·a + (1−λ)·b, coordinatewise.

    Equal coordinates pass through unchanged (so mixing preserves shared
    coordinates bit-for-bit).  The combination is exact whenever λ and the
    coordinates are exact scalars; an exact λ with float coordinates also
    takes the exact path, since floats convert to rationals losslessly.
    """
    if len(a) != len(b):
        raise ValueError("mixture of points with different dimensions")
    all_float = _is_float(lam) and all(_is_float(x) for x in a) and \
        all(_is_float(x) for x in b)
    if all_float:
        if not 0.0 <= lam <= 1.0:
            raise ValueError(f"mixture weight {lam} outside [0,1]")
        return tuple(x if x == y else lam * x + (1.0 - lam) * y
                     for x, y in zip(a, b))
    lam_f = Fraction(lam) if not isinstance(lam, Fraction) else lam
    if not 0 <= lam_f <= 1:
        raise ValueError(f"mixture weight {lam} outside [0,1]")
    out = []
    for x, y in zip(a, b):
        if (isinstance(x, QSqrt2) and x == y) or (not isinstance(x, QSqrt2) and x == y):
            out.append(x)
            continue
        xe = x if isinstance(x, (QSqrt2, Fraction, int)) else Fraction(x)
        ye = y if isinstance(y, (QSqrt2, Fraction, int)) else Fraction(y)
        out.append(xe * lam_f + ye * (1 - lam_f))
    return tuple(out)


def lerp(a: Point, b: Point, t: ScalarLike) -> Point:
    """Segment point a + t·(b−a), i.e. mixture(b, a, t): t=0 → a, t=1 → b."""
    return mixture(b, a, t)


# ---------------------------------------------------------------------------
# oracles
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class OracleHooks:
    """Optional exact-knowledge callbacks attached to a fixture's oracle.

    The checkers' search engines are generic; these hooks let a fixture
    answer the questions the engines cannot decide numerically:

    - ``solve_on_segment(a, b, x)`` → ("found", t) / ("none", None) /
      ("unknown", None): does a point of the segment a + t(b−a), t ∈ [0,1],
      satisfy ∼ x (as a fact about the real relation, not about Float64)?
    - ``side_on_segment(a, b, x, side)`` → same statuses: does a point of
      the OPEN segment, t ∈ (0,1), satisfy ≻ x ("succ") / ≺ x ("prec")?
    - ``find_between(x, y)`` → Point or None or "unknown": a point strictly
      between x ≻ y, for order-density probing.
    - ``window_member(origin, offset, s_lo, s_hi, x, side)`` → s or None:
      a parameter s ∈ (s_lo, s_hi) with origin + s·offset on the given side
      of x ("succ_eq"/"prec_eq" weak, "succ"/"prec" strict); used by closure
      chains and Archimedean refinement on oscillating relations where a
      fixed lattice misses the member set.
    """

    solve_on_segment: Optional[Callable] = None
    side_on_segment: Optional[Callable] = None
    find_between: Optional[Callable] = None
    window_member: Optional[Callable] = None


@dataclass(frozen=True)
class CheckHints:
    """Deterministic probe suggestions bundled with a fixture.

    Checkers try hinted configurations first, then seeded generic sampling.
    Hints carry points known (by construction of the relation) to exhibit a
    property failure, so corpus verdicts do not depend on a lucky lattice.
    """

    # (x, limit, unit direction, "upper"/"lower"): closure probes for
    # weak sections {y : y ≿ x} ("upper") / {y : x ≿ y} ("lower").
    continuity: tuple = ()
    # (x, line coordinate i, rest, limit, side) for separate continuity.
    separate: tuple = ()
    # (x, y, z[, side, limit_lambda, member_sign]) mixture-closure probes.
    mixture: tuple = ()
    # (x, z, y) with x ≻ z ≻ y for segment/curve scans.
    weak_wold: tuple = ()
    # (x, y, z) with x ≻ y for the Archimedean search.
    archimedean: tuple = ()
    # (x, i, rest, a_i, b_i) solvability instances (i is 0-based here).
    restricted: tuple = ()
    unrestricted: tuple = ()
    # (x, base, c_lo, c_hi) lockstep instances for StrongerRS.
    stronger: tuple = ()
    # (x, y) strict pairs for order-density probing.
    density: tuple = ()
    # (a, b, x) convex-upper-section probes: a, b ≿ x.
    convex: tuple = ()
    # pairs (x, y) with x ≥ y coordinatewise for weak monotonicity probing.
    monotone: tuple = ()
    # extra unit directions for continuity probing.
    directions: tuple = ()
    # parametric arcs (callables t ∈ [0,1] → Point) for the Wold checker.
    arcs: tuple = ()


@dataclass(frozen=True)
class ComparisonOracle:
    """A pure deterministic comparison map with metadata.

    ``utility`` (optional) exposes the inducing utility value for hooks and
    tests; ``compare`` never consults it directly.
    """

    name: str
    dimension: int
    fn: Callable[[Point, Point], Comparison]
    exact: bool = False
    utility: Optional[Callable[[Point], Any]] = None
    hooks: Optional[OracleHooks] = None
    hints: Optional[CheckHints] = None

    def __call__(self, a: Point, b: Point) -> Comparison:
        return compare(self, a, b)


def compare(oracle: ComparisonOracle, a: Point, b: Point) -> Comparison:
    """Compare two points through the oracle, validating dimensions."""
    if len(a) != oracle.dimension or len(b) != oracle.dimension:
        raise ValueError(
            f"compare: points of dimension {len(a)}/{len(b)} against "
            f"oracle of dimension {oracle.dimension}")
    result = oracle.fn(a, b)
    if not isinstance(result, Comparison):
        raise TypeError(f"oracle {oracle.name} returned {result!r}")
    return result


def oracle_from_utility(name: str, dimension: int,
                        u: Callable[[Point], Any],
                        *, exact: bool = False,
                        hooks: Optional[OracleHooks] = None,
                        hints: Optional[CheckHints] = None,
                        key: Optional[Callable[[Any], Any]] = None) -> ComparisonOracle:
    """Build a complete oracle comparing utility values.

    Indifference is exact equality of values — never an ε-band, which would
    destroy transitivity.  ``key`` maps a value to a totally ordered proxy
    when the values themselves are not directly comparable.
    """

    def fn(a: Point, b: Point) -> Comparison:
        va, vb = u(a), u(b)
        ka = key(va) if key is not None else va
        kb = key(vb) if key is not None else vb
        if ka == kb:
            return Comparison.INDIFF
        return Comparison.SUCC if ka > kb else Comparison.PREC

    return ComparisonOracle(name=name, dimension=dimension, fn=fn,
                            exact=exact, utility=u, hooks=hooks, hints=hints)


# ---------------------------------------------------------------------------
# sampling
# ---------------------------------------------------------------------------

_TOTAL_GRID_BUDGET = 2048


def _axis_cap(n: int) -> int:
    # Caps are 2**k + 1 so a capped axis splits into a power-of-two number
    # of divisions.  Boxes with dyadic spans then get lattice coordinates
    # that are exact binary floats, and value ties between lattice points
    # are exact instead of drifting by an ulp.
    if n == 1:
        return 2049
    if n == 2:
        return 33
    if n == 3:
        return 9
    return max(3, int(_TOTAL_GRID_BUDGET ** (1.0 / n)))


def sample_grid(domain: Domain, resolution: float, seed: int,
                jitter: int = 0) -> list:
    """Deterministic point sample: pitch lattice ∩ domain, plus jitter.

    The lattice has pitch ``resolution`` per axis unless that would exceed
    the per-axis cap (the full product is kept near 2048 points), in which
    case the pitch is enlarged uniformly along that axis.  ``jitter`` extra
    seeded uniform interior samples are appended (default none, so the
    small-lattice examples are exactly the lattice).
    """
    if resolution <= 0:
        raise ValueError("resolution must be positive")
    n = domain.dimension
    axes = []
    for i in range(n):
        lo = float(domain.box[i][0])
        hi = float(domain.box[i][1])
        span = hi - lo
        if span < 0:
            raise ValueError("empty box axis")
        if span == 0:
            axes.append([lo])
            continue
        full = int(span / resolution + 1e-9) + 1
        count = min(full, _axis_cap(n))
        if count < 2:
            count = 2
        if count == full:
            values = [lo + k * resolution for k in range(count - 1)] + [hi]
        else:
            pitch = span / (count - 1)
            values = [lo + k * pitch for k in range(count - 1)] + [hi]
        axes.append(values)

    out = []

    def rec(i: int, prefix: list) -> None:
        if i == n:
            p = tuple(prefix)
            if domain.contains(p):
                out.append(p)
            return
        for v in axes[i]:
            prefix.append(v)
            rec(i + 1, prefix)
            prefix.pop()

    rec(0, [])
    if jitter > 0:
        rng = random.Random(f"{seed}:grid:{domain.dimension}")
        tries = 0
        added = 0
        while added < jitter and tries < 100 * jitter:
            tries += 1
            p = tuple(float(domain.box[i][0]) +
                      rng.random() * (float(domain.box[i][1]) - float(domain.box[i][0]))
                      for i in range(n))
            if domain.contains(p):
                out.append(p)
                added += 1
    if not out:
        raise ValueError("sample_grid: empty domain")
    return out


# ---------------------------------------------------------------------------
# profiles and fixtures
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class AssumptionProfile:
    """Structural hypotheses a relation/domain pair claims to satisfy.

    These gate implication edges; they are claims, not verified facts —
    the basic checker probes the verifiable ones independently.
    """

    complete: bool = True
    transitive: bool = True
    weakly_monotone: bool = True
    monotone_coordinate_count: int = 0
    order_dense: bool = False
    convex_upper_sections: bool = False
    order_bounded: bool = False
    strong_order_bounded: bool = False
    interior: bool = False
    convex_domain: bool = True
    finite_dimensional: bool = True
    dimension: int = 0

    def __post_init__(self) -> None:
        if self.strong_order_bounded and not self.order_bounded:
            raise ValueError("strong order-boundedness implies order-boundedness")


@dataclass(frozen=True)
class Fixture:
    """A concrete relation with its domain, profile, and expected verdicts."""

    name: str
    oracle: ComparisonOracle
    domain: Domain
    profile: AssumptionProfile
    expected: dict
    expected_basic: dict = field(default_factory=dict)
    stronger_rs_set: Optional[tuple] = None
    notes: str = ""


@lru_cache(maxsize=None)
def fixture(name: str) -> Fixture:
    """Look up a catalogue fixture by name."""
    from . import fixtures as _fixtures
    builders = _fixtures.catalogue()
    if name not in builders:
        raise KeyError(
            f"unknown fixture {name!r}; valid names: {', '.join(sorted(builders))}")
    return builders[name]()


def fixture_names() -> list:
    from . import fixtures as _fixtures
    return sorted(_fixtures.catalogue())
