"""Command-line front end.

Subcommands: ``check`` runs chosen axiom checkers on one relation,
``corpus`` runs the full fixture corpus and audits it, ``represent``
exports a utility table as CSV, ``curve`` traces one indifference class
along grid lines as a CSV polyline, and ``implications`` prints the
implication edges active for an assumption profile.  Relations come either
from the fixture catalogue (``--fixture``) or from an expression over
x1..xn (``--expr`` with ``--dim`` and ``--box``).

Exit status: 0 on success, 1 when a corpus expectation or run fails,
2 on usage errors.  Reports are byte-deterministic for identical argv
unless ``--timing`` opts into wall-clock fields.
"""

from __future__ import annotations

import argparse
import dataclasses
import json
import sys
import time
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

from . import __version__
from . import expr as expr_mod
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
    Witness,
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
from .core import (
    AssumptionProfile,
    ComparisonOracle,
    Domain,
    Fixture,
    fixture,
    fixture_names,
    mixture,
    oracle_from_utility,
)
from .harness import implication_edges, run_corpus
from .representation import (
    IncompletenessError,
    build_utility_table,
    solve_indifference_on_segment,
)

_CORE_AXIOMS: Tuple[str, ...] = (
    CONTINUITY, WOLD, WEAK_WOLD, MIXTURE, ARCHIMEDEAN, SEPARATE,
    RESTRICTED, UNRESTRICTED,
)
_AXIOM_CHOICES: Tuple[str, ...] = _CORE_AXIOMS + (STRONGER_RS, "basic")


# ---------------------------------------------------------------------------
# run specification
# ---------------------------------------------------------------------------

@dataclass
class RunSpec:
    """Echoable record of one CLI invocation after argument resolution."""

    subcommand: str
    fixture: Optional[str] = None
    expr: Optional[str] = None
    dim: Optional[int] = None
    box: Optional[tuple] = None
    halfspaces: tuple = ()
    axioms: tuple = ()
    resolution: float = 1e-3
    seed: int = 0
    budget: Optional[int] = None
    pitch: Optional[float] = None
    point: Optional[tuple] = None
    stronger_set: Optional[tuple] = None
    format: str = "json"
    out: Optional[str] = None
    timing: bool = False

    def to_dict(self) -> dict:
        out = dataclasses.asdict(self)
        out["box"] = [list(b) for b in self.box] if self.box else None
        out["halfspaces"] = [[list(c), b] for c, b in self.halfspaces]
        out["axioms"] = list(self.axioms)
        out["point"] = list(self.point) if self.point else None
        out["stronger_set"] = (list(self.stronger_set)
                               if self.stronger_set else None)
        return out


# ---------------------------------------------------------------------------
# argument parsing helpers
# ---------------------------------------------------------------------------

def _parse_box(text: str, dim: int) -> tuple:
    pairs = []
    for part in text.split(";"):
        bits = part.split(",")
        if len(bits) != 2:
            raise ValueError(f"box axis {part!r} is not LO,HI")
        lo, hi = float(bits[0]), float(bits[1])
        if not lo < hi:
            raise ValueError(f"box axis {part!r} has lo >= hi")
        pairs.append((lo, hi))
    if len(pairs) == 1:
        pairs = pairs * dim
    if len(pairs) != dim:
        raise ValueError(f"box lists {len(pairs)} axes for dimension {dim}")
    return tuple(pairs)


def _parse_halfspace(text: str, dim: int) -> tuple:
    bits = [float(b) for b in text.split(",")]
    if len(bits) != dim + 1:
        raise ValueError(
            f"half-space needs {dim} coefficients plus a bound, got {len(bits)}")
    return tuple(bits[:dim]), bits[dim]


def _parse_floats(text: str, dim: int, what: str) -> tuple:
    bits = [float(b) for b in text.split(",")]
    if len(bits) != dim:
        raise ValueError(f"{what} has {len(bits)} coordinates, expected {dim}")
    return tuple(bits)


def _parse_coord_set(text: str) -> tuple:
    coords = tuple(int(b) for b in text.split(","))
    if not coords or any(c < 1 for c in coords):
        raise ValueError("coordinate set must list 1-based indices")
    return coords


def _add_common(sub: argparse.ArgumentParser, *, relation: bool) -> None:
    if relation:
        sub.add_argument("--fixture", choices=fixture_names(),
                         help="catalogue fixture name")
        sub.add_argument("--expr", help="utility expression over x1..xn")
        sub.add_argument("--dim", type=int, help="dimension for --expr")
        sub.add_argument("--box", help="domain box LO,HI[;LO,HI...]")
        sub.add_argument("--halfspace", action="append", default=[],
                         help="extra constraint a1,...,an,c meaning a·x <= c")
    sub.add_argument("--resolution", type=float, default=1e-3)
    sub.add_argument("--seed", type=int, default=0)
    sub.add_argument("--budget", type=int, default=None,
                     help="sample budget override")
    sub.add_argument("--format", choices=("json", "text"), default="json")
    sub.add_argument("--out", default=None, help="write the report here")
    sub.add_argument("--timing", action="store_true",
                     help="include wall-clock timing (breaks byte determinism)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="relation-lab",
        description="Falsification checkers, utility representations, and "
                    "the implication harness for preference relations.")
    parser.add_argument("--version", action="version", version=__version__)
    subs = parser.add_subparsers(dest="subcommand", required=True)

    p_check = subs.add_parser("check", help="run axiom checkers on a relation")
    _add_common(p_check, relation=True)
    p_check.add_argument("--axiom", action="append", default=[],
                         choices=_AXIOM_CHOICES,
                         help="axiom to check (repeatable; default: all)")
    p_check.add_argument("--stronger-set",
                         help="1-based coordinate block for stronger_rs")

    p_corpus = subs.add_parser("corpus", help="run the full fixture corpus")
    _add_common(p_corpus, relation=False)

    p_repr = subs.add_parser("represent",
                             help="build a utility table and export CSV")
    _add_common(p_repr, relation=True)
    p_repr.add_argument("--pitch", type=float, default=None,
                        help="lattice pitch (default: --resolution)")

    p_curve = subs.add_parser("curve",
                              help="trace an indifference class as CSV")
    _add_common(p_curve, relation=True)
    p_curve.add_argument("--pitch", type=float, default=None,
                         help="sweep pitch (default: --resolution)")
    p_curve.add_argument("--point", required=True,
                         help="anchor point x1,...,xn of the traced class")

    p_impl = subs.add_parser("implications",
                             help="print edges active for a profile")
    _add_common(p_impl, relation=True)
    return parser


# ---------------------------------------------------------------------------
# relation resolution
# ---------------------------------------------------------------------------

def _resolve_relation(spec: RunSpec, parser: argparse.ArgumentParser,
                      ) -> Tuple[ComparisonOracle, Domain, AssumptionProfile,
                                 Optional[Fixture]]:
    if (spec.fixture is None) == (spec.expr is None):
        parser.error("exactly one of --fixture and --expr is required")
    if spec.fixture is not None:
        fix = fixture(spec.fixture)
        return fix.oracle, fix.domain, fix.profile, fix
    if spec.dim is None or spec.box is None:
        parser.error("--expr needs --dim and --box")
    try:
        ast = expr_mod.parse(spec.expr, spec.dim)
    except expr_mod.ExprSyntaxError as exc:
        print(f"expression error: {exc}", file=sys.stderr)
        raise SystemExit(2)
    dim = spec.dim

    def u(p):
        return expr_mod.eval(ast, p)

    oracle = oracle_from_utility(f"expr({spec.expr})", dim, u)
    domain = Domain(box=spec.box, halfspaces=spec.halfspaces)
    profile = AssumptionProfile(dimension=dim)
    return oracle, domain, profile, None


# ---------------------------------------------------------------------------
# report plumbing
# ---------------------------------------------------------------------------

def _witness_json(witness: Witness) -> dict:
    """Schema form of a witness: type, touched points, and the comparison
    transcript as {a, b, result} objects, plus the witness-specific fields."""
    raw = witness.to_dict()
    triples = raw.pop("comparisons", [])
    points: List[object] = []
    seen = set()
    for a, b, _ in triples:
        for pt in (a, b):
            key = json.dumps(pt)
            if key not in seen:
                seen.add(key)
                points.append(pt)
    raw["points"] = points
    raw["comparisons"] = [{"a": a, "b": b, "result": r} for a, b, r in triples]
    return raw


def _verdict_json(verdict: Verdict) -> dict:
    out = {"axiom": verdict.axiom, "kind": verdict.kind.value}
    if verdict.resolution is not None:
        out["resolution"] = verdict.resolution
    if verdict.witness is not None:
        out["witness"] = _witness_json(verdict.witness)
    if verdict.reason:
        out["reason"] = verdict.reason
    return out


def _envelope(spec: RunSpec, payload: dict, started: float) -> dict:
    doc = {"tool_version": __version__, "spec": spec.to_dict()}
    doc.update(payload)
    doc["timing_ms"] = ((time.perf_counter() - started) * 1000.0
                        if spec.timing else None)
    return doc


def _emit(text: str, out_path: Optional[str]) -> None:
    if not text.endswith("\n"):
        text += "\n"
    if out_path:
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _dump(doc: dict) -> str:
    return json.dumps(doc, sort_keys=True, indent=2)


def _config(spec: RunSpec, resolution: Optional[float] = None) -> CheckConfig:
    kwargs = {"resolution": resolution or spec.resolution, "seed": spec.seed}
    if spec.budget is not None:
        kwargs["sample_budget"] = spec.budget
    return CheckConfig(**kwargs)


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------

def _cmd_check(spec: RunSpec, parser: argparse.ArgumentParser) -> int:
    started = time.perf_counter()
    oracle, domain, _profile, fix = _resolve_relation(spec, parser)
    cfg = _config(spec)
    stronger_set = spec.stronger_set
    if stronger_set is None and fix is not None:
        stronger_set = fix.stronger_rs_set

    axioms = list(spec.axioms)
    if not axioms:
        axioms = list(_CORE_AXIOMS) + (["stronger_rs"] if stronger_set else [])
        axioms.append("basic")
    if "stronger_rs" in axioms and not stronger_set:
        parser.error("stronger_rs needs --stronger-set (or a fixture that "
                     "configures one)")

    runners = {
        CONTINUITY: lambda: check_continuity(oracle, domain, cfg),
        WOLD: lambda: check_wold(oracle, domain, None, cfg),
        WEAK_WOLD: lambda: check_weak_wold(oracle, domain, cfg),
        MIXTURE: lambda: check_mixture_continuity(oracle, domain, cfg),
        ARCHIMEDEAN: lambda: check_archimedean(oracle, domain, cfg),
        SEPARATE: lambda: check_separate_continuity(oracle, domain, cfg),
        RESTRICTED: lambda: check_restricted_solvability(oracle, domain, cfg),
        UNRESTRICTED:
            lambda: check_unrestricted_solvability(oracle, domain, cfg),
        STRONGER_RS:
            lambda: check_stronger_rs(oracle, domain, stronger_set, cfg),
    }

    verdicts: List[dict] = []
    plain: Dict[str, Verdict] = {}
    basic_json: Dict[str, dict] = {}
    failed = False
    for key in axioms:
        if key == "basic":
            try:
                basic = check_basic(oracle, domain, cfg)
                basic_json = {k: _verdict_json(v)
                              for k, v in sorted(basic.items())}
            except Exception as exc:
                basic_json = {"error": f"{type(exc).__name__}: {exc}"}
                failed = True
            continue
        try:
            verdict = runners[key]()
            plain[key] = verdict
            verdicts.append(_verdict_json(verdict))
        except Exception as exc:
            verdicts.append({"axiom": key,
                             "error": f"{type(exc).__name__}: {exc}"})
            failed = True

    if spec.format == "json":
        doc = _envelope(spec, {"verdicts": verdicts, "basic": basic_json},
                        started)
        _emit(_dump(doc), spec.out)
    else:
        name = spec.fixture or f"expr({spec.expr})"
        lines = [f"check {name} at resolution {cfg.resolution:g}, "
                 f"seed {cfg.seed}"]
        for entry in verdicts:
            if "error" in entry:
                lines.append(f"  {entry['axiom']:<18} ERROR: {entry['error']}")
                continue
            verdict = plain[entry["axiom"]]
            extra = ""
            if verdict.witness is not None:
                extra = f"  [{verdict.witness.kind()}]"
            elif verdict.reason:
                extra = f"  ({verdict.reason})"
            lines.append(
                f"  {verdict.axiom:<18} {verdict.kind.value}{extra}")
        for prop, entry in basic_json.items():
            lines.append(f"  basic:{prop:<12} {entry.get('kind', entry)}")
        _emit("\n".join(lines), spec.out)
    return 1 if failed else 0


def _cmd_corpus(spec: RunSpec) -> int:
    started = time.perf_counter()
    report = run_corpus(_config(spec))
    if spec.format == "json":
        payload = {"corpus": report.to_dict(include_timing=spec.timing)}
        _emit(_dump(_envelope(spec, payload, started)), spec.out)
    else:
        _emit(report.to_text(), spec.out)
    return 0 if report.ok else 1


def _cmd_represent(spec: RunSpec, parser: argparse.ArgumentParser) -> int:
    started = time.perf_counter()
    oracle, domain, _profile, _fix = _resolve_relation(spec, parser)
    cfg = _config(spec, resolution=spec.pitch)
    try:
        table = build_utility_table(oracle, domain, cfg)
    except (ValueError, IncompletenessError) as exc:
        print(f"representation failed: {exc}", file=sys.stderr)
        return 1
    if not table.complete:
        cells = sorted(table.failures)
        shown = ", ".join(repr(c) for c in cells[:5])
        print(f"representation incomplete: {len(cells)} cell(s) have no "
              f"diagonal solution, e.g. {shown}", file=sys.stderr)
        return 1
    if spec.format == "json":
        _emit(_dump(_envelope(spec, {"table": table.to_dict()}, started)),
              spec.out)
    else:
        _emit(table.to_csv(), spec.out)
    return 0


def _cmd_curve(spec: RunSpec, parser: argparse.ArgumentParser) -> int:
    oracle, domain, _profile, _fix = _resolve_relation(spec, parser)
    n = domain.dimension
    if n < 2:
        parser.error("curve tracing needs a domain of dimension >= 2")
    anchor = spec.point
    pitch = spec.pitch or spec.resolution
    cfg = _config(spec)

    axes: List[List[float]] = []
    total = 1
    for i in range(n - 1):
        lo, hi = (float(domain.box[i][0]), float(domain.box[i][1]))
        count = int(round((hi - lo) / pitch)) + 1
        axes.append([lo + k * pitch for k in range(count)])
        total *= count
        if total > 100_000:
            parser.error("sweep lattice exceeds 100000 lines; "
                         "raise --pitch")

    direction = tuple(0.0 if i < n - 1 else 1.0 for i in range(n))
    rows: List[tuple] = []
    skipped = 0
    hooks = oracle.hooks

    def trace_line(top: tuple, bot: tuple) -> Optional[tuple]:
        # An exact-knowledge hook answers first: "found" pins the crossing
        # exactly and "none" certifies the class misses this line entirely.
        if hooks is not None and hooks.solve_on_segment is not None:
            status, t = hooks.solve_on_segment(top, bot, anchor)
            if status == "found":
                return tuple(
                    a if a == b else float(a) + t * (float(b) - float(a))
                    for a, b in zip(top, bot))
            if status == "none":
                return None
        found = solve_indifference_on_segment(oracle, anchor, top, bot, cfg)
        if isinstance(found, Witness):
            # Bisection exhausted Float64 between two adjacent parameters
            # with the strict relation flipping across them; the midpoint
            # locates the class boundary to one ulp, which is the best a
            # polyline at this pitch can carry.
            lo, hi = found.bracket
            return mixture(top, bot, 0.5 * (lo + hi))
        return found.point

    def sweep(prefix: List[float], depth: int) -> None:
        nonlocal skipped
        if depth == n - 1:
            base = tuple(prefix) + (0.0,)
            span = domain.line_range(base, direction)
            if span is None:
                skipped += 1
                return
            t_lo, t_hi = span.t_lo, span.t_hi
            if span.open_ends:
                t_lo += pitch / 2
                t_hi -= pitch / 2
            if not t_lo < t_hi:
                skipped += 1
                return
            top = tuple(prefix) + (t_hi,)
            bot = tuple(prefix) + (t_lo,)
            try:
                row = trace_line(top, bot)
            except (ValueError, IncompletenessError, ArithmeticError):
                row = None
            if row is None:
                skipped += 1
            else:
                rows.append(row)
            return
        for value in axes[depth]:
            sweep(prefix + [value], depth + 1)

    sweep([], 0)

    if spec.format == "json":
        started = time.perf_counter()
        payload = {"curve": {
            "anchor": list(anchor),
            "pitch": pitch,
            "rows": [[float(c) for c in row] for row in rows],
            "skipped_lines": skipped,
        }}
        _emit(_dump(_envelope(spec, payload, started)), spec.out)
    else:
        header = ",".join(f"x{i + 1}" for i in range(n))
        lines = [header] + [",".join(repr(float(c)) for c in row)
                            for row in rows]
        _emit("\n".join(lines), spec.out)
    return 0


def _cmd_implications(spec: RunSpec, parser: argparse.ArgumentParser) -> int:
    started = time.perf_counter()
    if spec.expr is not None or spec.fixture is not None:
        _oracle, _domain, profile, _fix = _resolve_relation(spec, parser)
    else:
        profile = AssumptionProfile()
    edges = implication_edges(profile)
    if spec.format == "json":
        payload = {
            "profile": dataclasses.asdict(profile),
            "edges": [e.to_dict() for e in edges],
        }
        _emit(_dump(_envelope(spec, payload, started)), spec.out)
    else:
        lines = [f"{len(edges)} active edge(s)"]
        for e in edges:
            lines.append(f"  {e.from_axiom.value:>18} -> "
                         f"{e.to_axiom.value:<18} [{e.provenance}]")
        _emit("\n".join(lines), spec.out)
    return 0


# ---------------------------------------------------------------------------
# entry point
# ---------------------------------------------------------------------------

def _build_spec(args: argparse.Namespace,
                parser: argparse.ArgumentParser) -> RunSpec:
    spec = RunSpec(subcommand=args.subcommand)
    spec.resolution = args.resolution
    spec.seed = args.seed
    spec.budget = args.budget
    spec.format = args.format
    spec.out = args.out
    spec.timing = args.timing
    spec.fixture = getattr(args, "fixture", None)
    spec.expr = getattr(args, "expr", None)
    spec.dim = getattr(args, "dim", None)
    spec.pitch = getattr(args, "pitch", None)
    spec.axioms = tuple(getattr(args, "axiom", []) or [])
    try:
        if spec.expr is not None:
            if spec.dim is None:
                parser.error("--expr needs --dim")
            if getattr(args, "box", None):
                spec.box = _parse_box(args.box, spec.dim)
            spec.halfspaces = tuple(
                _parse_halfspace(h, spec.dim)
                for h in getattr(args, "halfspace", []))
        if getattr(args, "point", None):
            dim = spec.dim
            if dim is None and spec.fixture:
                dim = fixture(spec.fixture).domain.dimension
            if dim is None:
                parser.error("--point needs --fixture or --dim")
            spec.point = _parse_floats(args.point, dim, "--point")
        if getattr(args, "stronger_set", None):
            spec.stronger_set = _parse_coord_set(args.stronger_set)
    except ValueError as exc:
        parser.error(str(exc))
    return spec


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    spec = _build_spec(args, parser)
    if spec.subcommand == "check":
        return _cmd_check(spec, parser)
    if spec.subcommand == "corpus":
        return _cmd_corpus(spec)
    if spec.subcommand == "represent":
        return _cmd_represent(spec, parser)
    if spec.subcommand == "curve":
        return _cmd_curve(spec, parser)
    if spec.subcommand == "implications":
        return _cmd_implications(spec, parser)
    parser.error(f"unknown subcommand {spec.subcommand!r}")
    return 2


if __name__ == "__main__":
    sys.exit(main())
