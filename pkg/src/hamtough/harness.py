"""Sweep planning, per-instance verification, and JSONL result records.

A sweep walks a graph family (exhaustive, random, rejection-sampled tough, or
a graph6 corpus file), applies optional filter gates, runs one verification
target per instance, and tallies verdicts:

- PASS            hypotheses held and the claimed conclusion checked out
- NOT_APPLICABLE  a hypothesis failed, nothing to conclude
- COUNTEREXAMPLE  hypotheses held but the conclusion failed
- ERROR           the instance hit a resource cap or timeout

Seeded sweeps are deterministic end to end: records differ between repeated
runs only in their timestamp and runtime fields.  COUNTEREXAMPLE records are
always retained in memory and carry enough detail to replay the single
instance with ``replay_record``.
"""

from __future__ import annotations

import json
import random
import time
from dataclasses import dataclass, field
from datetime import datetime, timezone
from fractions import Fraction
from typing import Callable, Iterable, Iterator

from .closure import (
    COUNTEREXAMPLE,
    NOT_APPLICABLE,
    PASS,
    t_closure,
    verify_corollary,
    verify_single_edge_lemma,
    verify_t_closure_lemma,
)
from .degrees import (
    DegreeProfile,
    assemble_cycle_via_clique,
    predicate_pt,
    universal_cliques,
)
from .graphs import (
    Graph,
    all_labeled_graphs,
    encode_graph6,
    parse_graph6,
    random_graph,
    sample_t_tough_graph,
)
from .hamilton import (
    ClaimViolation,
    apply_rotation,
    compute_proof_sets,
    find_hamiltonian_cycle,
    find_path_with_nonadjacent_ends,
    find_segment_gap,
    proof_set_identity_failures,
    scan_rotations,
)
from .limits import InstanceTimeout, InstanceTooLarge
from .toughness import is_t_tough, toughness

__all__ = [
    "COUNTEREXAMPLE",
    "ERROR",
    "NOT_APPLICABLE",
    "PASS",
    "CorpusFile",
    "ExhaustiveLabeled",
    "ExperimentRecord",
    "Explicit",
    "RandomGraphs",
    "SweepPlan",
    "SweepSummary",
    "TightnessFinding",
    "TightnessReport",
    "ToughSampled",
    "check_closure_instance",
    "check_rotation_instance",
    "check_single_edge_instance",
    "check_theorem6_instance",
    "filter_connected",
    "filter_min_degree",
    "filter_predicate_pt",
    "filter_toughness_at_least",
    "finding_records",
    "iter_family",
    "read_records",
    "replay_record",
    "run_rotation_properties",
    "run_single_edge_sweep",
    "run_tightness_search",
    "run_verify_closure",
    "run_verify_theorem6",
    "verify_finding",
    "write_records",
]

ERROR = "ERROR"

RECORD_SCHEMA = 1


def _jsonable(value):
    """Coerce detail payloads to plain JSON types, deterministically."""
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, (frozenset, set)):
        return sorted(_jsonable(v) for v in value)
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    if isinstance(value, dict):
        return {str(k): _jsonable(v) for k, v in value.items()}
    if isinstance(value, Graph):
        return encode_graph6(value)
    return value


@dataclass(frozen=True)
class ExperimentRecord:
    """One verdict for one instance, serializable as a JSONL line."""

    experiment_id: str
    instance: str
    parameters: dict
    verdict: str
    detail: dict
    runtime_ms: int
    timestamp: str
    schema: int = RECORD_SCHEMA

    def to_json(self) -> str:
        return json.dumps(
            {
                "schema": self.schema,
                "experiment_id": self.experiment_id,
                "timestamp": self.timestamp,
                "instance": self.instance,
                "parameters": _jsonable(self.parameters),
                "verdict": self.verdict,
                "detail": _jsonable(self.detail),
                "runtime_ms": self.runtime_ms,
            },
            sort_keys=True,
        )

    @classmethod
    def from_json(cls, line: str) -> "ExperimentRecord":
        raw = json.loads(line)
        return cls(
            experiment_id=raw["experiment_id"],
            instance=raw["instance"],
            parameters=raw["parameters"],
            verdict=raw["verdict"],
            detail=raw["detail"],
            runtime_ms=raw["runtime_ms"],
            timestamp=raw["timestamp"],
            schema=raw.get("schema", RECORD_SCHEMA),
        )


def write_records(records: Iterable[ExperimentRecord], path: str) -> int:
    count = 0
    with open(path, "w", encoding="ascii") as fh:
        for rec in records:
            fh.write(rec.to_json())
            fh.write("\n")
            count += 1
    return count


def read_records(path: str) -> list[ExperimentRecord]:
    out = []
    with open(path, "r", encoding="ascii") as fh:
        for line in fh:
            if line.strip():
                out.append(ExperimentRecord.from_json(line))
    return out


# -- graph families ----------------------------------------------------------


@dataclass(frozen=True)
class ExhaustiveLabeled:
    """All 2^C(n,2) labeled graphs on n vertices."""

    n: int

    def label(self) -> str:
        return f"exhaustive(n={self.n})"


@dataclass(frozen=True)
class RandomGraphs:
    """Seeded G(n, p) draws, cycling through ``n_values``."""

    n_values: tuple[int, ...]
    p: Fraction
    count: int
    seed: int

    def label(self) -> str:
        ns = ",".join(map(str, self.n_values))
        return f"random(n={ns},p={self.p},count={self.count},seed={self.seed})"


@dataclass(frozen=True)
class ToughSampled:
    """Rejection-sampled graphs with verified toughness at least t."""

    n_values: tuple[int, ...]
    t: Fraction
    count: int
    seed: int
    max_trials: int = 400

    def label(self) -> str:
        ns = ",".join(map(str, self.n_values))
        return f"tough(n={ns},t={self.t},count={self.count},seed={self.seed})"


@dataclass(frozen=True)
class CorpusFile:
    """graph6 lines from a file, one graph per line."""

    path: str

    def label(self) -> str:
        return f"corpus({self.path})"


@dataclass(frozen=True)
class Explicit:
    """An in-memory tuple of graphs, e.g. parsed from stdin."""

    graphs: tuple[Graph, ...]

    def label(self) -> str:
        return f"explicit(count={len(self.graphs)})"


Family = ExhaustiveLabeled | RandomGraphs | ToughSampled | CorpusFile | Explicit


def iter_family(family: Family) -> Iterator[Graph]:
    if isinstance(family, ExhaustiveLabeled):
        yield from all_labeled_graphs(family.n)
    elif isinstance(family, RandomGraphs):
        rng = random.Random(family.seed)
        for i in range(family.count):
            n = family.n_values[i % len(family.n_values)]
            yield random_graph(n, family.p, rng.getrandbits(32))
    elif isinstance(family, ToughSampled):
        rng = random.Random(family.seed)
        produced = 0
        attempts = 0
        while produced < family.count:
            attempts += 1
            if attempts > 40 * family.count:
                raise RuntimeError(
                    f"could not sample {family.count} graphs with toughness "
                    f">= {family.t}; got {produced}"
                )
            n = family.n_values[produced % len(family.n_values)]
            sample = sample_t_tough_graph(
                n, family.t, family.max_trials, rng.getrandbits(32)
            )
            if sample.graph is not None:
                produced += 1
                yield sample.graph
    elif isinstance(family, CorpusFile):
        with open(family.path, "r", encoding="ascii") as fh:
            for lineno, line in enumerate(fh, start=1):
                if not line.strip():
                    continue
                try:
                    yield parse_graph6(line)
                except ValueError as exc:
                    raise ValueError(f"{family.path}:{lineno}: {exc}") from exc
    elif isinstance(family, Explicit):
        yield from family.graphs
    else:
        raise TypeError(f"unknown family {family!r}")


Filter = tuple[str, Callable[[Graph], bool]]


def filter_toughness_at_least(t) -> Filter:
    bound = Fraction(t)
    return (f"toughness>={bound}", lambda g: bool(is_t_tough(g, bound)))


def filter_predicate_pt(t: int) -> Filter:
    return (
        f"P({t})",
        lambda g: predicate_pt(DegreeProfile.from_graph(g), t)[0],
    )


def filter_min_degree(d: int) -> Filter:
    return (f"min_degree>={d}", lambda g: min(g.degrees()) >= d)


def filter_connected() -> Filter:
    return ("connected", lambda g: g.is_connected())


@dataclass(frozen=True)
class SweepPlan:
    """What to run over: a family, optional filter gates, and a target name."""

    family: Family
    filters: tuple[Filter, ...] = ()
    target: str = ""

    def label(self) -> str:
        return self.target or self.family.label()


@dataclass
class SweepSummary:
    """Verdict tallies for one sweep.  processed == sum of the four counts."""

    target: str
    parameters: dict
    processed: int = 0
    counts: dict = field(
        default_factory=lambda: {PASS: 0, NOT_APPLICABLE: 0, COUNTEREXAMPLE: 0, ERROR: 0}
    )
    filtered_out: dict = field(default_factory=dict)
    records: list = field(default_factory=list)
    extras: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return self.counts[COUNTEREXAMPLE] == 0 and self.counts[ERROR] == 0

    @property
    def counterexamples(self) -> list[ExperimentRecord]:
        return [r for r in self.records if r.verdict == COUNTEREXAMPLE]

    def format(self) -> str:
        lines = [
            f"target: {self.target}",
            f"processed: {self.processed}",
            "verdicts: "
            + ", ".join(f"{k}={v}" for k, v in self.counts.items()),
        ]
        if self.filtered_out:
            lines.append(
                "filtered out: "
                + ", ".join(f"{k}={v}" for k, v in self.filtered_out.items())
            )
        for key, val in self.extras.items():
            lines.append(f"{key}: {val}")
        return "\n".join(lines)


# -- per-instance checks -----------------------------------------------------


def check_closure_instance(
    g: Graph, t: int, max_n: int | None = None, deadline: float | None = None
) -> tuple[str, dict]:
    """Equivalence of Hamiltonicity under the t-relaxed closure, gated by regime.

    t = 0 is the classical statement and holds unconditionally; t = 1 is
    checked under a 2-toughness gate; t >= 2 under the (3t - 1)/2-toughness
    gate of the general statement.
    """
    if t == 0:
        res = t_closure(g, 0)
        if res.unchanged:
            return PASS, {"edges_added": 0, "skipped_solve": True}
        base = find_hamiltonian_cycle(g, max_n=max_n, deadline=deadline)
        top = find_hamiltonian_cycle(res.closed, max_n=max_n, deadline=deadline)
        detail = {
            "edges_added": len(res.trace),
            "g_hamiltonian": base.is_hamiltonian,
            "closure_hamiltonian": top.is_hamiltonian,
        }
        verdict = PASS if base.is_hamiltonian == top.is_hamiltonian else COUNTEREXAMPLE
        return verdict, detail
    if t == 1:
        gate = is_t_tough(g, 2, max_n=max_n, deadline=deadline)
        if not gate:
            return NOT_APPLICABLE, {
                "failed_gate": "toughness>=2",
                "violating_cutset": sorted(gate.violating_cutset),
            }
        res = t_closure(g, 1)
        if res.unchanged:
            return PASS, {"edges_added": 0, "skipped_solve": True}
        base = find_hamiltonian_cycle(g, max_n=max_n, deadline=deadline)
        top = find_hamiltonian_cycle(res.closed, max_n=max_n, deadline=deadline)
        detail = {
            "edges_added": len(res.trace),
            "g_hamiltonian": base.is_hamiltonian,
            "closure_hamiltonian": top.is_hamiltonian,
        }
        verdict = PASS if base.is_hamiltonian == top.is_hamiltonian else COUNTEREXAMPLE
        return verdict, detail
    lv = verify_t_closure_lemma(g, t, max_n=max_n, deadline=deadline)
    detail = dict(lv.detail)
    detail["hypotheses"] = {name: ok for name, ok in lv.hypotheses}
    return lv.verdict, detail


def check_theorem6_instance(
    g: Graph, max_n: int | None = None, deadline: float | None = None
) -> tuple[str, dict]:
    """4-tough graphs passing the shifted degree condition P(4) are Hamiltonian.

    Reports both the exhaustive-solver outcome and whether the constructive
    route (3-relaxed closure, then threading components through its universal
    clique) produced a cycle on its own.
    """
    if g.n < 3:
        return NOT_APPLICABLE, {"failed_gate": "n>=3"}
    gate_t = is_t_tough(g, 4, max_n=max_n, deadline=deadline)
    if not gate_t:
        return NOT_APPLICABLE, {
            "failed_gate": "toughness>=4",
            "violating_cutset": sorted(gate_t.violating_cutset),
        }
    ok_pt, witness = predicate_pt(DegreeProfile.from_graph(g), 4)
    if not ok_pt:
        return NOT_APPLICABLE, {"failed_gate": "P(4)", "violating_index": witness}
    cert = find_hamiltonian_cycle(g, max_n=max_n, deadline=deadline)
    closed = t_closure(g, 3).closed
    report = universal_cliques(closed, max_deficiency=1)
    assembly = assemble_cycle_via_clique(closed, report.omega)
    detail = {
        "solver_hamiltonian": cert.is_hamiltonian,
        "solver_nodes": cert.nodes_explored,
        "constructive_route": assembly.succeeded,
        "closure_universal_vertices": len(report.omega),
    }
    if not assembly.succeeded:
        detail["constructive_route_blocked"] = assembly.reason
    if not cert.is_hamiltonian:
        return COUNTEREXAMPLE, detail
    return PASS, detail


def check_rotation_instance(
    g: Graph, max_n: int | None = None, deadline: float | None = None
) -> tuple[str, dict]:
    """Cross-check the rotation patterns against the exhaustive solver.

    On a graph with a spanning path between nonadjacent endpoints:

    - if the solver proves non-Hamiltonicity, no pattern may be present, and
      every rotation-ready pair must expose a gap position (with its forced
      flanking edges when unique);
    - if the solver finds a cycle, every pattern found must convert into a
      valid cycle via apply_rotation;
    - the position-set counting identities must hold either way.
    """
    if g.n < 3:
        return NOT_APPLICABLE, {"skip": "n<3"}
    if not g.is_connected():
        return NOT_APPLICABLE, {"skip": "disconnected"}
    cert = find_hamiltonian_cycle(g, max_n=max_n, deadline=deadline)
    path = find_path_with_nonadjacent_ends(g, max_n=max_n, deadline=deadline)
    if path is None:
        return NOT_APPLICABLE, {
            "skip": "no spanning path with nonadjacent endpoints",
            "hamiltonian": cert.is_hamiltonian,
        }
    detail: dict = {"hamiltonian": cert.is_hamiltonian, "path": list(path.order)}
    configs = scan_rotations(g, path)
    detail["patterns"] = len(configs)
    try:
        if cert.is_hamiltonian:
            for cfg in configs:
                apply_rotation(g, path, cfg)
        else:
            if configs:
                detail["offending_patterns"] = [
                    (c.kind, c.i, c.j) for c in configs
                ]
                return COUNTEREXAMPLE, detail
            order = path.order
            n = len(order)
            y_hits = [a for a in range(2, n) if g.has_edge(order[a - 1], order[-1])]
            x_hits = [b for b in range(2, n) if g.has_edge(order[b - 1], order[0])]
            gaps = 0
            for a in y_hits:
                for b in x_hits:
                    if a < b:
                        find_segment_gap(g, path, a, b)
                        gaps += 1
            detail["gap_pairs_checked"] = gaps
    except ClaimViolation as exc:
        detail["violation"] = str(exc)
        detail["violation_context"] = _jsonable(exc.context)
        return COUNTEREXAMPLE, detail
    ps = compute_proof_sets(g, path)
    failures = proof_set_identity_failures(g, path, ps)
    if failures:
        detail["identity_failures"] = failures
        return COUNTEREXAMPLE, detail
    return PASS, detail


def check_single_edge_instance(
    g: Graph,
    variant: str,
    epsilon=None,
    t: int | None = None,
    t_prime=None,
    strict_equality: bool = True,
    max_n: int | None = None,
    deadline: float | None = None,
) -> tuple[str, dict]:
    """Run one single-edge lemma over every nonadjacent pair of the graph.

    The instance verdict is COUNTEREXAMPLE when any pair is, PASS when at
    least one pair passed and none failed, NOT_APPLICABLE otherwise.
    """
    pair_counts = {PASS: 0, NOT_APPLICABLE: 0}
    for x in range(g.n - 1):
        for y in range(x + 1, g.n):
            if g.has_edge(x, y):
                continue
            if variant == "corollary":
                lv = verify_corollary(g, x, y, t_prime, max_n=max_n, deadline=deadline)
            else:
                lv = verify_single_edge_lemma(
                    g,
                    x,
                    y,
                    variant,
                    epsilon=epsilon,
                    t=t,
                    strict_equality=strict_equality,
                    max_n=max_n,
                    deadline=deadline,
                )
            if lv.verdict == COUNTEREXAMPLE:
                return COUNTEREXAMPLE, {
                    "pair": [x, y],
                    "hypotheses": {name: ok for name, ok in lv.hypotheses},
                    **_jsonable(dict(lv.detail)),
                }
            pair_counts[lv.verdict] += 1
    if pair_counts[PASS]:
        return PASS, {"pairs_passed": pair_counts[PASS],
                      "pairs_not_applicable": pair_counts[NOT_APPLICABLE]}
    return NOT_APPLICABLE, {"pairs_not_applicable": pair_counts[NOT_APPLICABLE]}


# -- sweep driver ------------------------------------------------------------


def _now() -> str:
    return datetime.now(timezone.utc).isoformat(timespec="seconds")


def _run_sweep(
    plan: SweepPlan,
    check: Callable[[Graph, float | None], tuple[str, dict]],
    parameters: dict,
    timeout_s: float | None = 30.0,
    record_all: bool = False,
    jsonl_path: str | None = None,
    tally: Callable[[str, dict, dict], None] | None = None,
) -> SweepSummary:
    summary = SweepSummary(target=plan.label(), parameters=parameters)
    for name, _ in plan.filters:
        summary.filtered_out[name] = 0
    sink = open(jsonl_path, "w", encoding="ascii") if jsonl_path else None
    try:
        index = 0
        for g in iter_family(plan.family):
            gated = False
            for name, pred in plan.filters:
                if not pred(g):
                    summary.filtered_out[name] += 1
                    gated = True
                    break
            if gated:
                continue
            started = time.perf_counter()
            deadline = (
                time.monotonic() + timeout_s if timeout_s is not None else None
            )
            try:
                verdict, detail = check(g, deadline)
            except (InstanceTimeout, InstanceTooLarge) as exc:
                verdict, detail = ERROR, {"error": str(exc)}
            runtime_ms = int((time.perf_counter() - started) * 1000)
            summary.processed += 1
            summary.counts[verdict] += 1
            if tally is not None:
                tally(verdict, detail, summary.extras)
            keep = record_all or verdict in (COUNTEREXAMPLE, ERROR)
            if keep or sink:
                rec = ExperimentRecord(
                    experiment_id=f"{plan.label()}#{index:06d}",
                    instance=encode_graph6(g),
                    parameters=parameters,
                    verdict=verdict,
                    detail=_jsonable(detail),
                    runtime_ms=runtime_ms,
                    timestamp=_now(),
                )
                if keep:
                    summary.records.append(rec)
                if sink:
                    sink.write(rec.to_json())
                    sink.write("\n")
            index += 1
    finally:
        if sink:
            sink.close()
    return summary


def run_verify_closure(
    plan: SweepPlan,
    t: int,
    timeout_s: float | None = 30.0,
    record_all: bool = False,
    jsonl_path: str | None = None,
) -> SweepSummary:
    """Closure-equivalence sweep at offset t over a plan's instances."""
    parameters = {"target": "closure", "t": t}
    return _run_sweep(
        plan,
        lambda g, deadline: check_closure_instance(g, t, deadline=deadline),
        parameters,
        timeout_s=timeout_s,
        record_all=record_all,
        jsonl_path=jsonl_path,
    )


def run_verify_theorem6(
    plan: SweepPlan,
    timeout_s: float | None = 30.0,
    record_all: bool = False,
    jsonl_path: str | None = None,
) -> SweepSummary:
    """Toughness-4 plus P(4) Hamiltonicity sweep, with constructive-route stats."""
    parameters = {"target": "theorem6"}

    def tally(verdict: str, detail: dict, extras: dict) -> None:
        if verdict in (PASS, COUNTEREXAMPLE):
            key = "constructive_route_successes"
            extras[key] = extras.get(key, 0) + bool(detail.get("constructive_route"))

    return _run_sweep(
        plan,
        lambda g, deadline: check_theorem6_instance(g, deadline=deadline),
        parameters,
        timeout_s=timeout_s,
        record_all=record_all,
        jsonl_path=jsonl_path,
        tally=tally,
    )


def run_rotation_properties(
    plan: SweepPlan,
    timeout_s: float | None = 30.0,
    record_all: bool = False,
    jsonl_path: str | None = None,
) -> SweepSummary:
    """Rotation-pattern dichotomy and counting-identity sweep."""
    parameters = {"target": "rotations"}

    def tally(verdict: str, detail: dict, extras: dict) -> None:
        if verdict == PASS:
            if detail.get("hamiltonian"):
                extras["hamiltonian_paths_checked"] = (
                    extras.get("hamiltonian_paths_checked", 0) + 1
                )
                extras["patterns_applied"] = (
                    extras.get("patterns_applied", 0) + detail.get("patterns", 0)
                )
            else:
                extras["non_hamiltonian_paths_checked"] = (
                    extras.get("non_hamiltonian_paths_checked", 0) + 1
                )
                extras["gap_pairs_checked"] = (
                    extras.get("gap_pairs_checked", 0)
                    + detail.get("gap_pairs_checked", 0)
                )

    return _run_sweep(
        plan,
        lambda g, deadline: check_rotation_instance(g, deadline=deadline),
        parameters,
        timeout_s=timeout_s,
        record_all=record_all,
        jsonl_path=jsonl_path,
        tally=tally,
    )


def run_single_edge_sweep(
    plan: SweepPlan,
    variant: str,
    epsilon=None,
    t: int | None = None,
    t_prime=None,
    timeout_s: float | None = 30.0,
    record_all: bool = False,
    jsonl_path: str | None = None,
) -> SweepSummary:
    """Single-edge lemma sweep; each instance aggregates all nonadjacent pairs."""
    parameters: dict = {"target": variant}
    if epsilon is not None:
        parameters["epsilon"] = str(Fraction(epsilon))
    if t is not None:
        parameters["t"] = t
    if t_prime is not None:
        parameters["t_prime"] = str(Fraction(t_prime))
    return _run_sweep(
        plan,
        lambda g, deadline: check_single_edge_instance(
            g,
            variant,
            epsilon=epsilon,
            t=t,
            t_prime=t_prime,
            deadline=deadline,
        ),
        parameters,
        timeout_s=timeout_s,
        record_all=record_all,
        jsonl_path=jsonl_path,
    )


def replay_record(record: ExperimentRecord) -> tuple[str, dict]:
    """Re-run the verification a record describes; returns (verdict, detail).

    The record's graph6 instance plus its parameters fully determine the
    outcome, so a stored verdict must reproduce exactly.
    """
    g = parse_graph6(record.instance)
    params = record.parameters
    target = params.get("target")
    if target == "closure":
        verdict, detail = check_closure_instance(g, int(params["t"]))
    elif target == "theorem6":
        verdict, detail = check_theorem6_instance(g)
    elif target == "rotations":
        verdict, detail = check_rotation_instance(g)
    elif target in ("L7", "L8", "L9", "corollary"):
        verdict, detail = check_single_edge_instance(
            g,
            target,
            epsilon=Fraction(params["epsilon"]) if "epsilon" in params else None,
            t=int(params["t"]) if "t" in params else None,
            t_prime=Fraction(params["t_prime"]) if "t_prime" in params else None,
        )
    elif target == "tightness":
        finding = TightnessFinding(
            graph6=record.instance,
            x=int(params["x"]),
            y=int(params["y"]),
            n=int(params["n"]),
            degree_sum=int(params["degree_sum"]),
            toughness_value=Fraction(params["toughness"]),
        )
        checks = verify_finding(finding, int(params["t"]))
        hit_bound = finding.toughness_value >= Fraction(3 * int(params["t"]) - 1, 2)
        verdict = COUNTEREXAMPLE if (hit_bound or not all(checks.values())) else PASS
        detail = dict(checks)
    else:
        raise ValueError(f"record has unknown target {target!r}")
    return verdict, _jsonable(detail)


# -- tightness search --------------------------------------------------------


@dataclass(frozen=True)
class TightnessFinding:
    """A non-Hamiltonian graph where one high-degree-sum pair flips the verdict.

    Such graphs bound how far the degree threshold of the single-edge
    statements can be relaxed: the pair satisfies d(x) + d(y) >= n - t and
    adding xy creates a Hamiltonian cycle, so only the toughness hypothesis
    separates this instance from a refutation.
    """

    graph6: str
    x: int
    y: int
    n: int
    degree_sum: int
    toughness_value: Fraction


@dataclass
class TightnessReport:
    """Ranked boundary examples from a randomized search."""

    t: int
    budget: int
    seed: int
    n_values: tuple[int, ...]
    examined: int = 0
    non_hamiltonian: int = 0
    findings_total: int = 0
    findings: list[TightnessFinding] = field(default_factory=list)
    max_toughness: Fraction | None = None
    contradiction: bool = False

    def format(self) -> str:
        lines = [
            f"tightness search: t={self.t} budget={self.budget} seed={self.seed}",
            f"examined: {self.examined} (non-Hamiltonian: {self.non_hamiltonian})",
            f"findings: {self.findings_total}"
            + (f", max toughness {self.max_toughness}" if self.findings_total else ""),
        ]
        bound = Fraction(3 * self.t - 1, 2)
        if self.contradiction:
            lines.append(
                f"CONTRADICTION: a finding reaches toughness >= {bound}"
            )
        else:
            lines.append(f"all findings stay below toughness {bound}")
        for f in self.findings[:10]:
            lines.append(
                f"  {f.graph6}  n={f.n} pair=({f.x},{f.y}) "
                f"dsum={f.degree_sum} toughness={f.toughness_value}"
            )
        return "\n".join(lines)


def run_tightness_search(
    t: int,
    budget: int,
    seed: int,
    n_values: tuple[int, ...] = (6, 7, 8, 9, 10),
    p_values: tuple[Fraction, ...] = (
        Fraction(1, 4),
        Fraction(2, 5),
        Fraction(1, 2),
        Fraction(3, 5),
    ),
    keep: int = 50,
    timeout_s: float | None = 30.0,
) -> TightnessReport:
    """Hunt for non-Hamiltonian graphs that a single eligible edge repairs.

    Draws random graphs, keeps the non-Hamiltonian ones, and scans their
    nonadjacent pairs in descending degree-sum order for one whose addition
    makes the graph Hamiltonian while d(x) + d(y) >= n - t.  Every finding's
    toughness is computed exactly; any finding at or above (3t - 1)/2 would
    contradict the closure statement and flips the contradiction flag.
    """
    if not isinstance(t, int) or t < 0:
        raise ValueError("tightness offset t must be a nonnegative integer")
    rng = random.Random(seed)
    report = TightnessReport(t=t, budget=budget, seed=seed, n_values=tuple(n_values))
    bound = Fraction(3 * t - 1, 2)
    for i in range(budget):
        n = n_values[i % len(n_values)]
        p = p_values[rng.randrange(len(p_values))]
        g = random_graph(n, p, rng.getrandbits(32))
        report.examined += 1
        deadline = time.monotonic() + timeout_s if timeout_s is not None else None
        try:
            if n < 3 or find_hamiltonian_cycle(g, deadline=deadline).is_hamiltonian:
                continue
            report.non_hamiltonian += 1
            degs = g.degrees()
            pairs = sorted(
                (
                    (x, y)
                    for x in range(n - 1)
                    for y in range(x + 1, n)
                    if not g.has_edge(x, y) and degs[x] + degs[y] >= n - t
                ),
                key=lambda xy: (-(degs[xy[0]] + degs[xy[1]]), xy),
            )
            hit = None
            for x, y in pairs:
                if find_hamiltonian_cycle(
                    g.add_edge(x, y), deadline=deadline
                ).is_hamiltonian:
                    hit = (x, y)
                    break
            if hit is None:
                continue
            x, y = hit
            tough = toughness(g, deadline=deadline)
            report.findings_total += 1
            finding = TightnessFinding(
                graph6=encode_graph6(g),
                x=x,
                y=y,
                n=n,
                degree_sum=degs[x] + degs[y],
                toughness_value=tough.value,
            )
            if tough.value >= bound:
                report.contradiction = True
            if report.max_toughness is None or tough.value > report.max_toughness:
                report.max_toughness = tough.value
            report.findings.append(finding)
        except (InstanceTimeout, InstanceTooLarge):
            continue
    report.findings.sort(key=lambda f: (-f.toughness_value, f.graph6))
    del report.findings[keep:]
    return report


def verify_finding(finding: TightnessFinding, t: int) -> dict[str, bool]:
    """Independently re-check the properties that define a finding at offset t."""
    g = parse_graph6(finding.graph6)
    x, y = finding.x, finding.y
    return {
        "pair_nonadjacent": not g.has_edge(x, y),
        "degree_sum_recorded": g.degree(x) + g.degree(y) == finding.degree_sum,
        "degree_sum_reaches_threshold": g.degree(x) + g.degree(y) >= g.n - t,
        "graph_not_hamiltonian": not find_hamiltonian_cycle(g).is_hamiltonian,
        "augmented_hamiltonian": find_hamiltonian_cycle(
            g.add_edge(x, y)
        ).is_hamiltonian,
        "toughness_recorded": toughness(g).value == finding.toughness_value,
    }


def finding_records(report: TightnessReport) -> list[ExperimentRecord]:
    """Findings as replayable records (verdict PASS unless contradictory)."""
    out = []
    bound = Fraction(3 * report.t - 1, 2)
    for i, f in enumerate(report.findings):
        verdict = COUNTEREXAMPLE if f.toughness_value >= bound else PASS
        out.append(
            ExperimentRecord(
                experiment_id=f"tightness[t={report.t}]#{i:06d}",
                instance=f.graph6,
                parameters={
                    "target": "tightness",
                    "t": report.t,
                    "x": f.x,
                    "y": f.y,
                    "n": f.n,
                    "degree_sum": f.degree_sum,
                    "toughness": str(f.toughness_value),
                },
                verdict=verdict,
                detail={"toughness": str(f.toughness_value)},
                runtime_ms=0,
                timestamp=_now(),
            )
        )
    return out
