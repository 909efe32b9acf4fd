import json
import random
from fractions import Fraction

import pytest

from hamtough import (
    COUNTEREXAMPLE,
    ERROR,
    NOT_APPLICABLE,
    PASS,
    CorpusFile,
    ExhaustiveLabeled,
    ExperimentRecord,
    Explicit,
    Graph,
    RandomGraphs,
    SweepPlan,
    ToughSampled,
    check_closure_instance,
    check_rotation_instance,
    check_single_edge_instance,
    check_theorem6_instance,
    complete_graph,
    cycle_graph,
    encode_graph6,
    filter_connected,
    filter_min_degree,
    filter_predicate_pt,
    filter_toughness_at_least,
    finding_records,
    iter_family,
    path_graph,
    read_records,
    replay_record,
    run_rotation_properties,
    run_single_edge_sweep,
    run_tightness_search,
    run_verify_closure,
    run_verify_theorem6,
    verify_finding,
    write_records,
)
from test_closure import complete_minus_matching


def flower_snark(k: int) -> Graph:
    """Non-Hamiltonian cubic graph whose refutation takes thousands of nodes."""
    a = lambda i: 4 * i
    b = lambda i: 4 * i + 1
    c = lambda i: 4 * i + 2
    d = lambda i: 4 * i + 3
    edges = []
    for i in range(k):
        j = (i + 1) % k
        edges += [(a(i), b(i)), (a(i), c(i)), (a(i), d(i)), (b(i), b(j))]
        edges += [(c(i), c(j)), (d(i), d(j))] if j else [(c(i), d(0)), (d(i), c(0))]
    return Graph(4 * k, edges)


def cycle_power(n: int, k: int) -> Graph:
    edges = []
    for i in range(n):
        for d in range(1, k + 1):
            edges.append((i, (i + d) % n))
    return Graph(n, edges)


class TestFamilies:
    def test_random_family_deterministic(self):
        fam = RandomGraphs(n_values=(6, 8), p=Fraction(1, 2), count=20, seed=9)
        first = [encode_graph6(g) for g in iter_family(fam)]
        second = [encode_graph6(g) for g in iter_family(fam)]
        assert first == second and len(first) == 20
        assert {g.n for g in iter_family(fam)} == {6, 8}

    def test_tough_family_deterministic_and_verified(self):
        fam = ToughSampled(n_values=(10, 12), t=Fraction(2), count=6, seed=4)
        first = [encode_graph6(g) for g in iter_family(fam)]
        assert first == [encode_graph6(g) for g in iter_family(fam)]
        assert len(first) == 6

    def test_tough_family_impossible_target(self):
        fam = ToughSampled(
            n_values=(4,), t=Fraction(5, 2), count=1, seed=0, max_trials=5
        )
        with pytest.raises(RuntimeError):
            list(iter_family(fam))

    def test_exhaustive_count(self):
        assert sum(1 for _ in iter_family(ExhaustiveLabeled(3))) == 8

    def test_corpus_file(self, tmp_path):
        path = tmp_path / "graphs.g6"
        path.write_text("Dhc\n\nD~{\n")
        got = list(iter_family(CorpusFile(str(path))))
        assert [g.n for g in got] == [5, 5]

    def test_corpus_file_reports_line(self, tmp_path):
        path = tmp_path / "bad.g6"
        path.write_text("Dhc\n!!!\n")
        with pytest.raises(ValueError, match=r"bad\.g6:2:"):
            list(iter_family(CorpusFile(str(path))))

    def test_unknown_family(self):
        with pytest.raises(TypeError):
            list(iter_family("not a family"))


class TestRecords:
    def test_json_round_trip(self):
        rec = ExperimentRecord(
            experiment_id="demo#000001",
            instance="Dhc",
            parameters={"target": "closure", "t": 0},
            verdict=PASS,
            detail={"edges_added": 0, "ratio": Fraction(3, 2)},
            runtime_ms=12,
            timestamp="2024-01-01T00:00:00+00:00",
        )
        line = rec.to_json()
        # canonical key order and JSON-safe values
        assert json.loads(line)["detail"]["ratio"] == "3/2"
        back = ExperimentRecord.from_json(line)
        assert back.instance == rec.instance
        assert back.verdict == rec.verdict
        assert back.schema == rec.schema

    def test_write_read_round_trip(self, tmp_path):
        plan = SweepPlan(family=ExhaustiveLabeled(4), target="closure-demo")
        summary = run_verify_closure(plan, t=0, record_all=True)
        path = tmp_path / "out.jsonl"
        assert write_records(summary.records, str(path)) == summary.processed
        back = read_records(str(path))
        assert [r.to_json() for r in back] == [r.to_json() for r in summary.records]

    def test_jsonl_sink_keeps_everything(self, tmp_path):
        path = tmp_path / "sink.jsonl"
        plan = SweepPlan(family=ExhaustiveLabeled(4))
        summary = run_verify_closure(plan, t=0, jsonl_path=str(path))
        assert summary.processed == 64
        assert len(read_records(str(path))) == 64
        # without record_all only problem records stay in memory
        assert summary.records == []


class TestSweepAccounting:
    def test_counts_conserve_with_filters(self):
        plan = SweepPlan(
            family=ExhaustiveLabeled(4),
            filters=(filter_connected(), filter_min_degree(2)),
        )
        summary = run_verify_closure(plan, t=0)
        assert summary.processed == sum(summary.counts.values())
        assert summary.processed + sum(summary.filtered_out.values()) == 64
        assert summary.ok

    def test_toughness_and_pt_filters(self):
        plan = SweepPlan(
            family=ExhaustiveLabeled(5),
            filters=(filter_toughness_at_least(1), filter_predicate_pt(0)),
        )
        summary = run_verify_closure(plan, t=0)
        assert summary.processed > 0
        assert summary.filtered_out["toughness>=1"] > 0
        assert summary.ok

    def test_format_mentions_counts(self):
        plan = SweepPlan(family=ExhaustiveLabeled(4), target="fmt-demo")
        summary = run_verify_closure(plan, t=0)
        text = summary.format()
        assert "fmt-demo" in text and "processed" in text and "PASS" in text


class TestInstanceChecks:
    def test_closure_t0_unchanged_skips_solver(self):
        verdict, detail = check_closure_instance(cycle_graph(5), 0)
        assert verdict == PASS and detail["skipped_solve"]

    def test_closure_t0_solves_when_edges_added(self):
        g = Graph(5, [(i, j) for i in range(5) for j in range(i + 1, 5)
                      if (i, j) != (0, 1)])
        verdict, detail = check_closure_instance(g, 0)
        assert verdict == PASS
        assert detail["edges_added"] == 1
        assert detail["g_hamiltonian"] and detail["closure_hamiltonian"]

    def test_closure_t1_gate(self):
        verdict, detail = check_closure_instance(cycle_graph(6), 1)
        assert verdict == NOT_APPLICABLE
        assert detail["failed_gate"] == "toughness>=2"
        assert len(detail["violating_cutset"]) < 2 * (6 - len(detail["violating_cutset"]))

    def test_closure_t2_delegates_to_lemma(self):
        verdict, detail = check_closure_instance(complete_minus_matching(4), 2)
        assert verdict == PASS
        assert detail["hypotheses"][f"toughness>={Fraction(5, 2)}"]
        verdict, _ = check_closure_instance(complete_minus_matching(3), 2)
        assert verdict == NOT_APPLICABLE

    def test_theorem6_pass_on_complete(self):
        verdict, detail = check_theorem6_instance(complete_graph(9))
        assert verdict == PASS
        assert detail["solver_hamiltonian"] and detail["constructive_route"]

    def test_theorem6_toughness_gate(self):
        verdict, detail = check_theorem6_instance(cycle_graph(6))
        assert verdict == NOT_APPLICABLE
        assert detail["failed_gate"] == "toughness>=4"
        assert detail["violating_cutset"]

    def test_theorem6_degree_gate(self):
        # 4th power of a 17-cycle: 4-tough yet all degrees are 8, so the
        # shifted condition fails at i = 8
        verdict, detail = check_theorem6_instance(cycle_power(17, 4))
        assert verdict == NOT_APPLICABLE
        assert detail == {"failed_gate": "P(4)", "violating_index": 8}

    def test_theorem6_small(self):
        assert check_theorem6_instance(Graph(2, [(0, 1)]))[0] == NOT_APPLICABLE

    def test_rotation_skips(self):
        assert check_rotation_instance(Graph(2, [(0, 1)]))[0] == NOT_APPLICABLE
        assert check_rotation_instance(Graph(4, [(0, 1)]))[1]["skip"] == "disconnected"
        # every spanning path of a cycle has adjacent endpoints
        v, d = check_rotation_instance(cycle_graph(6))
        assert v == NOT_APPLICABLE and "spanning path" in d["skip"]

    def test_rotation_non_hamiltonian_pass(self):
        g = Graph(5, [(0, 2), (0, 3), (1, 2), (1, 3), (4, 2), (4, 3)])
        verdict, detail = check_rotation_instance(g)
        assert verdict == PASS
        assert not detail["hamiltonian"]

    def test_single_edge_aggregation(self):
        verdict, detail = check_single_edge_instance(
            complete_minus_matching(4), "L7"
        )
        assert verdict == PASS
        assert detail == {"pairs_passed": 4, "pairs_not_applicable": 0}
        verdict, detail = check_single_edge_instance(cycle_graph(6), "L7")
        assert verdict == NOT_APPLICABLE
        assert detail["pairs_not_applicable"] == 9

    def test_single_edge_corollary(self):
        verdict, _ = check_single_edge_instance(
            complete_minus_matching(4), "corollary", t_prime=Fraction(5, 2)
        )
        assert verdict == PASS


class TestErrorHandling:
    def test_timeout_becomes_error_verdict(self):
        plan = SweepPlan(family=Explicit((flower_snark(5),)), target="slow")
        summary = run_rotation_properties(plan, timeout_s=1e-6)
        assert summary.counts[ERROR] == 1
        assert not summary.ok
        [rec] = summary.records
        assert rec.verdict == ERROR and "timed out" in rec.detail["error"]

    def test_oversize_becomes_error_verdict(self):
        plan = SweepPlan(family=Explicit((complete_graph(34),)), target="big")
        summary = run_rotation_properties(plan, timeout_s=None)
        assert summary.counts[ERROR] == 1
        [rec] = summary.records
        assert "34" in rec.detail["error"]


class TestReplay:
    def test_replay_reproduces_sweeps(self, tmp_path):
        graphs = tuple(
            g for g in iter_family(RandomGraphs((5, 6, 7), Fraction(1, 2), 30, 17))
        )
        plan = SweepPlan(family=Explicit(graphs), target="replay-demo")
        for summary in (
            run_verify_closure(plan, t=0, record_all=True),
            run_rotation_properties(plan, record_all=True),
            run_verify_theorem6(plan, record_all=True),
        ):
            assert summary.processed == 30
            for rec in summary.records:
                verdict, detail = replay_record(rec)
                assert verdict == rec.verdict
                assert detail == rec.detail

    def test_replay_single_edge(self):
        plan = SweepPlan(
            family=Explicit((complete_minus_matching(4), cycle_graph(6))),
            target="l8-demo",
        )
        summary = run_single_edge_sweep(
            plan, "L8", epsilon=Fraction(1, 2), record_all=True
        )
        for rec in summary.records:
            verdict, detail = replay_record(rec)
            assert (verdict, detail) == (rec.verdict, rec.detail)

    def test_replay_unknown_target(self):
        rec = ExperimentRecord(
            experiment_id="x",
            instance="Dhc",
            parameters={"target": "nonsense"},
            verdict=PASS,
            detail={},
            runtime_ms=0,
            timestamp="",
        )
        with pytest.raises(ValueError):
            replay_record(rec)


class TestTightnessSearch:
    def test_small_search_is_consistent(self):
        report = run_tightness_search(2, budget=150, seed=7, n_values=(6, 7, 8))
        assert report.examined == 150
        assert report.non_hamiltonian <= report.examined
        assert len(report.findings) <= 50
        assert not report.contradiction
        toughs = [f.toughness_value for f in report.findings]
        assert toughs == sorted(toughs, reverse=True)
        if report.findings:
            assert report.max_toughness == toughs[0]
            assert report.max_toughness < Fraction(5, 2)
        for f in report.findings:
            assert all(verify_finding(f, 2).values())

    def test_search_deterministic(self):
        a = run_tightness_search(2, budget=80, seed=3)
        b = run_tightness_search(2, budget=80, seed=3)
        assert [f.graph6 for f in a.findings] == [f.graph6 for f in b.findings]

    def test_finding_records_replay(self, tmp_path):
        report = run_tightness_search(2, budget=120, seed=11)
        records = finding_records(report)
        assert records, "expected at least one boundary example"
        path = tmp_path / "findings.jsonl"
        write_records(records, str(path))
        for rec in read_records(str(path)):
            verdict, checks = replay_record(rec)
            assert verdict == rec.verdict == PASS
            assert all(checks.values())

    def test_report_format(self):
        report = run_tightness_search(2, budget=60, seed=1)
        text = report.format()
        assert "t=2" in text and "findings" in text
        assert "below toughness 5/2" in text

    def test_rejects_bad_t(self):
        with pytest.raises(ValueError):
            run_tightness_search(-1, budget=5, seed=0)
