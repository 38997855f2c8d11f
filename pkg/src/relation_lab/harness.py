"""Implication edges between axiom verdicts, fixture batteries, and the
corpus runner that pins the whole catalogue to its expected verdicts.

An edge is a one-way claim: "for a relation whose profile passes the guard,
if the source axiom holds then the target axiom holds".  Equivalence groups
are emitted as directed edges in both directions, so the consistency sweep
needs a single rule — a source that holds above a target that is violated
is a contradiction.  The corpus runner batteries every catalogue fixture
plus the sequence-space model, compares verdicts with the pinned tables,
sweeps edge consistency, replays every violation witness, and tabulates
which fixtures show that the reverse of each base arrow fails.
"""

from __future__ import annotations

import enum
import json
import time
from dataclasses import dataclass, field
from typing import Callable, Dict, List, Optional, Sequence, Tuple, Union

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
    CheckConfig,
    Verdict,
    VerdictKind,
    check_archimedean,
    check_basic,
    check_continuity,
    check_mixture_continuity,
    check_restricted_solvability,
    check_separate_continuity,
    check_stronger_rs,
    check_unrestricted_solvability,
    check_weak_wold,
    check_wold,
)
from .core import AssumptionProfile, ComparisonOracle, Fixture, fixture, fixture_names
from .seqspace import SEQ_EXPECTED, SEQ_FIXTURE_NAME, seq_fixture_checks, seq_profile


class Axiom(enum.Enum):
    """Closed enumeration of the checkable axioms, valued by checker key."""

    Continuity = CONTINUITY
    Wold = WOLD
    WeakWold = WEAK_WOLD
    Mixture = MIXTURE
    Archimedean = ARCHIMEDEAN
    Separate = SEPARATE
    RestrictedSolv = RESTRICTED
    UnrestrictedSolv = UNRESTRICTED
    StrongerRS = STRONGER_RS


# ---------------------------------------------------------------------------
# guards
# ---------------------------------------------------------------------------

def guard_base(profile: AssumptionProfile) -> bool:
    """Complete transitive relation on a convex domain."""
    return bool(profile.complete and profile.transitive and profile.convex_domain)


def guard_near_monotone_interior(profile: AssumptionProfile) -> bool:
    """All but at most one coordinate strictly monotone, verdicts taken on
    the interior of a bounded convex finite-dimensional domain."""
    n = profile.dimension
    return bool(
        guard_base(profile)
        and profile.finite_dimensional
        and n >= 1
        and profile.monotone_coordinate_count >= n - 1
        and profile.interior
        and profile.order_bounded)


def guard_dense_interior_clique(profile: AssumptionProfile) -> bool:
    """Weakly monotone order-dense bounded relation on the interior of a
    convex finite-dimensional domain: all continuity notions coincide."""
    return bool(
        guard_base(profile)
        and profile.finite_dimensional
        and profile.weakly_monotone
        and profile.order_dense
        and profile.order_bounded
        and profile.interior)


def guard_strong_bounds(profile: AssumptionProfile) -> bool:
    """Weakly monotone order-dense relation with attained order bounds on a
    convex domain of any dimension."""
    return bool(
        profile.complete
        and profile.transitive
        and profile.convex_domain
        and profile.weakly_monotone
        and profile.order_dense
        and profile.strong_order_bounded)


# ---------------------------------------------------------------------------
# edges
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ImplicationEdge:
    """A one-way implication between axiom verdicts, active when ``guard``
    accepts the relation's assumption profile."""

    from_axiom: Axiom
    to_axiom: Axiom
    guard: Callable[[AssumptionProfile], bool]
    provenance: str

    def to_dict(self) -> dict:
        return {
            "from": self.from_axiom.value,
            "to": self.to_axiom.value,
            "guard": self.guard.__name__,
            "provenance": self.provenance,
        }


_BASE_ARROWS: Tuple[Tuple[Axiom, Axiom], ...] = (
    (Axiom.Continuity, Axiom.Wold),
    (Axiom.Wold, Axiom.WeakWold),
    (Axiom.WeakWold, Axiom.RestrictedSolv),
    (Axiom.WeakWold, Axiom.Archimedean),
    (Axiom.Continuity, Axiom.Mixture),
    (Axiom.Mixture, Axiom.Separate),
    (Axiom.Mixture, Axiom.WeakWold),
    (Axiom.Mixture, Axiom.Archimedean),
    (Axiom.Separate, Axiom.RestrictedSolv),
    (Axiom.UnrestrictedSolv, Axiom.RestrictedSolv),
)

_CLIQUE: Tuple[Axiom, ...] = (
    Axiom.Continuity,
    Axiom.Wold,
    Axiom.WeakWold,
    Axiom.Mixture,
    Axiom.Archimedean,
    Axiom.Separate,
    Axiom.RestrictedSolv,
)

_STRONG_TRIPLE: Tuple[Axiom, ...] = (
    Axiom.WeakWold,
    Axiom.Mixture,
    Axiom.Archimedean,
)

# Every catalogue fixture that satisfies the segment-only solvability notion
# also satisfies the full curve-family version, so the arrow from the curve
# version to the segment version is the one base arrow without a converse
# witness in the corpus; coverage is asserted for the other nine.
_CONVERSE_REQUIRED: Tuple[Tuple[Axiom, Axiom], ...] = tuple(
    (a, b) for (a, b) in _BASE_ARROWS if (a, b) != (Axiom.Wold, Axiom.WeakWold))


def implication_edges(profile: AssumptionProfile) -> List[ImplicationEdge]:
    """Implication edges whose guards accept ``profile``.

    Equivalence groups contribute directed edges both ways; when a group
    re-derives a base arrow the earlier emission wins, so each (from, to)
    pair appears once.  No edge targets the unrestricted-solvability axiom.
    """
    edges: List[ImplicationEdge] = []
    seen = set()

    def add(frm: Axiom, to: Axiom, guard, provenance: str) -> None:
        if (frm, to) not in seen:
            seen.add((frm, to))
            edges.append(ImplicationEdge(frm, to, guard, provenance))

    if guard_base(profile):
        for frm, to in _BASE_ARROWS:
            add(frm, to, guard_base, "base")
    if guard_near_monotone_interior(profile):
        add(Axiom.Separate, Axiom.Continuity,
            guard_near_monotone_interior, "near_monotone_interior")
        add(Axiom.Continuity, Axiom.Separate,
            guard_near_monotone_interior, "near_monotone_interior")
    if guard_dense_interior_clique(profile):
        for frm in _CLIQUE:
            for to in _CLIQUE:
                if frm is not to:
                    add(frm, to, guard_dense_interior_clique,
                        "dense_interior_clique")
    if guard_strong_bounds(profile):
        for frm in _STRONG_TRIPLE:
            for to in _STRONG_TRIPLE:
                if frm is not to:
                    add(frm, to, guard_strong_bounds, "strong_bounds")
        add(Axiom.Separate, Axiom.RestrictedSolv,
            guard_strong_bounds, "strong_bounds")
        add(Axiom.RestrictedSolv, Axiom.Separate,
            guard_strong_bounds, "strong_bounds")
    return edges


# ---------------------------------------------------------------------------
# batteries
# ---------------------------------------------------------------------------

@dataclass
class BatteryReport:
    """Battery outcome for one fixture: a verdict per axiom plus the basic
    relational properties, with the configuration that produced them."""

    fixture: str
    verdicts: Dict[str, Verdict]
    basic: Dict[str, Verdict]
    resolution: float
    seed: int
    timing_ms: float = 0.0
    errors: Dict[str, str] = field(default_factory=dict)

    def kinds(self) -> Dict[str, str]:
        return {k: v.kind.value for k, v in self.verdicts.items()}

    def to_dict(self, include_timing: bool = True) -> dict:
        out = {
            "fixture": self.fixture,
            "resolution": self.resolution,
            "seed": self.seed,
            "verdicts": {k: self.verdicts[k].to_dict()
                         for k in sorted(self.verdicts)},
            "basic": {k: self.basic[k].to_dict() for k in sorted(self.basic)},
        }
        if self.errors:
            out["errors"] = dict(sorted(self.errors.items()))
        if include_timing:
            out["timing_ms"] = self.timing_ms
        return out


_CHECKS: Tuple[Tuple[str, Callable[[Fixture, CheckConfig], Verdict]], ...] = (
    (CONTINUITY, lambda f, cfg: check_continuity(f.oracle, f.domain, cfg)),
    (WOLD, lambda f, cfg: check_wold(f.oracle, f.domain, None, cfg)),
    (WEAK_WOLD, lambda f, cfg: check_weak_wold(f.oracle, f.domain, cfg)),
    (MIXTURE, lambda f, cfg: check_mixture_continuity(f.oracle, f.domain, cfg)),
    (ARCHIMEDEAN, lambda f, cfg: check_archimedean(f.oracle, f.domain, cfg)),
    (SEPARATE, lambda f, cfg: check_separate_continuity(f.oracle, f.domain, cfg)),
    (RESTRICTED,
     lambda f, cfg: check_restricted_solvability(f.oracle, f.domain, cfg)),
    (UNRESTRICTED,
     lambda f, cfg: check_unrestricted_solvability(f.oracle, f.domain, cfg)),
)


def run_battery(fix: Union[Fixture, str],
                cfg: Optional[CheckConfig] = None) -> BatteryReport:
    """Run every applicable checker on a fixture.

    The lockstep-solvability check runs only when the fixture configures a
    coordinate block.  A checker that raises is recorded under ``errors``
    for its axiom instead of aborting the battery.
    """
    if isinstance(fix, str):
        fix = fixture(fix)
    cfg = cfg or CheckConfig()
    start = time.perf_counter()
    verdicts: Dict[str, Verdict] = {}
    errors: Dict[str, str] = {}
    for axiom, run in _CHECKS:
        try:
            verdicts[axiom] = run(fix, cfg)
        except Exception as exc:  # recorded per axiom, not fatal
            errors[axiom] = f"{type(exc).__name__}: {exc}"
    if fix.stronger_rs_set is not None:
        try:
            verdicts[STRONGER_RS] = check_stronger_rs(
                fix.oracle, fix.domain, fix.stronger_rs_set, cfg)
        except Exception as exc:
            errors[STRONGER_RS] = f"{type(exc).__name__}: {exc}"
    try:
        basic = check_basic(fix.oracle, fix.domain, cfg)
    except Exception as exc:
        basic = {}
        errors["basic"] = f"{type(exc).__name__}: {exc}"
    timing_ms = (time.perf_counter() - start) * 1000.0
    return BatteryReport(fixture=fix.name, verdicts=verdicts, basic=basic,
                         resolution=cfg.resolution, seed=cfg.seed,
                         timing_ms=timing_ms, errors=errors)


def _run_seq_battery(cfg: CheckConfig) -> BatteryReport:
    start = time.perf_counter()
    verdicts = dict(seq_fixture_checks(cfg))
    timing_ms = (time.perf_counter() - start) * 1000.0
    return BatteryReport(fixture=SEQ_FIXTURE_NAME, verdicts=verdicts, basic={},
                         resolution=cfg.resolution, seed=cfg.seed,
                         timing_ms=timing_ms)


# ---------------------------------------------------------------------------
# consistency
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Inconsistency:
    """An active edge whose source verdict holds while its target verdict is
    violated."""

    from_axiom: Axiom
    to_axiom: Axiom
    provenance: str

    def __str__(self) -> str:
        return (f"{self.from_axiom.value} holds but {self.to_axiom.value} "
                f"is violated ({self.provenance} edge)")

    def to_dict(self) -> dict:
        return {
            "from": self.from_axiom.value,
            "to": self.to_axiom.value,
            "provenance": self.provenance,
        }


def _verdict_kinds(report) -> Dict[str, VerdictKind]:
    """Normalize a report to a map from checker key to verdict kind.

    Accepts a BatteryReport or any mapping whose keys are Axiom members or
    checker key strings and whose values are Verdicts, VerdictKinds, or kind
    strings.
    """
    if isinstance(report, BatteryReport):
        return {k: v.kind for k, v in report.verdicts.items()}
    out: Dict[str, VerdictKind] = {}
    for key, value in dict(report).items():
        name = key.value if isinstance(key, Axiom) else str(key)
        if isinstance(value, Verdict):
            out[name] = value.kind
        elif isinstance(value, VerdictKind):
            out[name] = value
        else:
            out[name] = VerdictKind(str(value))
    return out


def check_consistency(report,
                      edges: Sequence[ImplicationEdge]) -> List[Inconsistency]:
    """Flag every edge whose source verdict holds while its target verdict
    is violated.

    Equivalence groups appear as directed edges both ways, so any
    holds/violated mix inside a group is flagged through those edges.
    Axioms missing from the report, and inapplicable verdicts, never flag.
    """
    kinds = _verdict_kinds(report)
    out: List[Inconsistency] = []
    for edge in edges:
        src = kinds.get(edge.from_axiom.value)
        dst = kinds.get(edge.to_axiom.value)
        if src is VerdictKind.HOLDS and dst is VerdictKind.VIOLATED:
            out.append(Inconsistency(edge.from_axiom, edge.to_axiom,
                                     edge.provenance))
    return out


# ---------------------------------------------------------------------------
# corpus
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ConverseEntry:
    """Corpus evidence that an arrow's reverse direction fails: fixtures
    where the target axiom holds while the source axiom is violated."""

    from_axiom: Axiom
    to_axiom: Axiom
    witnesses: Tuple[str, ...]
    required: bool

    @property
    def covered(self) -> bool:
        return bool(self.witnesses)

    def to_dict(self) -> dict:
        return {
            "from": self.from_axiom.value,
            "to": self.to_axiom.value,
            "witnesses": list(self.witnesses),
            "required": self.required,
            "covered": self.covered,
        }


@dataclass
class CorpusReport:
    """Outcome of a full corpus run: batteries, expectation mismatches,
    implication-consistency flags, witness-replay tallies, and the
    converse-coverage table for the base arrows."""

    resolution: float
    seed: int
    batteries: Dict[str, BatteryReport]
    mismatches: List[Tuple[str, str, str, str]]
    inconsistencies: Dict[str, List[Inconsistency]]
    replay_total: int
    replay_passed: int
    replay_failures: List[Tuple[str, str]]
    converse: List[ConverseEntry]
    timing_ms: float = 0.0

    @property
    def converse_gaps(self) -> List[ConverseEntry]:
        return [e for e in self.converse if e.required and not e.covered]

    @property
    def ok(self) -> bool:
        return (not self.mismatches
                and not self.inconsistencies
                and self.replay_passed == self.replay_total
                and not self.converse_gaps)

    def to_dict(self, include_timing: bool = False) -> dict:
        out = {
            "resolution": self.resolution,
            "seed": self.seed,
            "batteries": {
                name: rep.to_dict(include_timing=include_timing)
                for name, rep in sorted(self.batteries.items())
            },
            "mismatches": [list(row) for row in self.mismatches],
            "inconsistencies": {
                name: [flag.to_dict() for flag in flags]
                for name, flags in sorted(self.inconsistencies.items())
            },
            "replay": {
                "total": self.replay_total,
                "passed": self.replay_passed,
                "failures": [list(row) for row in self.replay_failures],
            },
            "converse": [entry.to_dict() for entry in self.converse],
            "ok": self.ok,
        }
        if include_timing:
            out["timing_ms"] = self.timing_ms
        return out

    def to_json(self, include_timing: bool = False, indent: int = 2) -> str:
        return json.dumps(self.to_dict(include_timing=include_timing),
                          sort_keys=True, indent=indent)

    def to_text(self) -> str:
        """Human-readable pass/fail table, one line per (fixture, check)."""
        wrong = {(f, k): (got, want) for (f, k, got, want) in self.mismatches}
        lines = [f"corpus at resolution {self.resolution:g}, seed {self.seed}"]
        for name, rep in sorted(self.batteries.items()):
            lines.append(f"{name}:")
            for key in sorted(rep.verdicts):
                got = rep.verdicts[key].kind.value
                mark = "pass"
                if (name, key) in wrong:
                    mark = f"FAIL (expected {wrong[(name, key)][1]})"
                lines.append(f"  {key:<18} {got:<13} {mark}")
            for prop in sorted(rep.basic):
                got = rep.basic[prop].kind.value
                key = "basic:" + prop
                mark = "pass"
                if (name, key) in wrong:
                    mark = f"FAIL (expected {wrong[(name, key)][1]})"
                lines.append(f"  {key:<18} {got:<13} {mark}")
            for key in sorted(rep.errors):
                lines.append(f"  {key:<18} ERROR: {rep.errors[key]}")
            for flag in self.inconsistencies.get(name, []):
                lines.append(f"  inconsistency: {flag}")
        lines.append(f"replay: {self.replay_passed}/{self.replay_total} "
                     "violation witnesses replay exactly")
        lines.append("converse coverage (target holds, source violated):")
        for entry in self.converse:
            arrow = f"{entry.from_axiom.value} -> {entry.to_axiom.value}"
            if entry.witnesses:
                shown = ", ".join(entry.witnesses)
            elif entry.required:
                shown = "MISSING"
            else:
                shown = "(none in corpus; not required)"
            lines.append(f"  {arrow:<34} {shown}")
        lines.append(f"RESULT: {'PASS' if self.ok else 'FAIL'}")
        return "\n".join(lines)


def run_corpus(cfg: Optional[CheckConfig] = None) -> CorpusReport:
    """Battery every catalogue fixture plus the sequence-space model and
    audit the results.

    The report compares each battery against the fixture's pinned verdicts,
    runs the consistency sweep with the edges active for the fixture's
    profile, replays every violation witness against its oracle, and
    tabulates converse coverage for the base arrows over the whole corpus.
    """
    cfg = cfg or CheckConfig()
    start = time.perf_counter()

    batteries: Dict[str, BatteryReport] = {}
    profiles: Dict[str, AssumptionProfile] = {}
    expected: Dict[str, Dict[str, str]] = {}
    expected_basic: Dict[str, Dict[str, str]] = {}
    oracles: Dict[str, Optional[ComparisonOracle]] = {}

    for name in fixture_names():
        fix = fixture(name)
        batteries[name] = run_battery(fix, cfg)
        profiles[name] = fix.profile
        expected[name] = dict(fix.expected)
        expected_basic[name] = dict(fix.expected_basic)
        oracles[name] = fix.oracle

    batteries[SEQ_FIXTURE_NAME] = _run_seq_battery(cfg)
    profiles[SEQ_FIXTURE_NAME] = seq_profile()
    expected[SEQ_FIXTURE_NAME] = dict(SEQ_EXPECTED)
    expected_basic[SEQ_FIXTURE_NAME] = {}
    oracles[SEQ_FIXTURE_NAME] = None

    mismatches: List[Tuple[str, str, str, str]] = []
    inconsistencies: Dict[str, List[Inconsistency]] = {}
    replay_total = 0
    replay_passed = 0
    replay_failures: List[Tuple[str, str]] = []

    for name in sorted(batteries):
        rep = batteries[name]
        for key in sorted(expected[name]):
            want = expected[name][key]
            verdict = rep.verdicts.get(key)
            got = verdict.kind.value if verdict is not None else "error"
            if got != want:
                mismatches.append((name, key, got, want))
        for prop in sorted(expected_basic[name]):
            want = expected_basic[name][prop]
            verdict = rep.basic.get(prop)
            got = verdict.kind.value if verdict is not None else "error"
            if got != want:
                mismatches.append((name, "basic:" + prop, got, want))

        flags = check_consistency(rep, implication_edges(profiles[name]))
        if flags:
            inconsistencies[name] = flags

        oracle = oracles[name]
        for key in sorted(rep.verdicts):
            verdict = rep.verdicts[key]
            if verdict.kind is VerdictKind.VIOLATED:
                replay_total += 1
                if verdict.replay(oracle):
                    replay_passed += 1
                else:
                    replay_failures.append((name, key))
        for prop in sorted(rep.basic):
            verdict = rep.basic[prop]
            if verdict.kind is VerdictKind.VIOLATED:
                replay_total += 1
                if verdict.replay(oracle):
                    replay_passed += 1
                else:
                    replay_failures.append((name, "basic:" + prop))

    kinds = {name: _verdict_kinds(rep) for name, rep in batteries.items()}
    required = set(_CONVERSE_REQUIRED)
    converse: List[ConverseEntry] = []
    for frm, to in _BASE_ARROWS:
        witnesses = tuple(
            name for name in sorted(batteries)
            if kinds[name].get(frm.value) is VerdictKind.VIOLATED
            and kinds[name].get(to.value) is VerdictKind.HOLDS)
        converse.append(ConverseEntry(frm, to, witnesses,
                                      required=(frm, to) in required))

    timing_ms = (time.perf_counter() - start) * 1000.0
    return CorpusReport(resolution=cfg.resolution, seed=cfg.seed,
                        batteries=batteries, mismatches=mismatches,
                        inconsistencies=inconsistencies,
                        replay_total=replay_total, replay_passed=replay_passed,
                        replay_failures=replay_failures, converse=converse,
                        timing_ms=timing_ms)
