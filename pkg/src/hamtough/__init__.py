"""Exact toughness, degree closures, and Hamiltonicity verification kernels.

Everything here is exhaustive and exact on small graphs: rational toughness
with witness cutsets, relaxed degree closures with traces, an exhaustive
Hamiltonian cycle/path solver, rotation-pattern checks along spanning paths,
and a sweep harness that records verdicts as replayable JSONL.
"""

from .closure import (
    COUNTEREXAMPLE,
    NOT_APPLICABLE,
    PASS,
    ClosureResult,
    LemmaVerdict,
    bc_closure,
    closure_order_invariance,
    closure_with_order,
    t_closure,
    verify_corollary,
    verify_single_edge_lemma,
    verify_t_closure_lemma,
)
from .degrees import (
    CliqueAssembly,
    DegreeProfile,
    UniversalCliqueReport,
    assemble_cycle_via_clique,
    chvatal_condition,
    closed_neighborhood_edge_rule,
    degree_majorizes,
    predicate_pt,
    universal_cliques,
)
from .graphs import (
    Graph,
    Graph6Error,
    ToughSample,
    all_labeled_graphs,
    complete_bipartite_graph,
    complete_graph,
    components,
    cycle_graph,
    degree_sequence,
    disjoint_union,
    empty_graph,
    encode_graph6,
    parse_graph6,
    path_graph,
    petersen_graph,
    random_graph,
    sample_t_tough_graph,
    star_graph,
)
from .hamilton import (
    ROTATION_KINDS,
    ClaimViolation,
    HamCycle,
    HamiltonicityCertificate,
    HamPath,
    ProofSets,
    RotationConfig,
    apply_rotation,
    compute_proof_sets,
    find_hamiltonian_cycle,
    find_hamiltonian_path,
    find_path_with_nonadjacent_ends,
    find_segment_gap,
    find_spanning_path,
    is_valid_cycle,
    is_valid_path,
    proof_set_identity_failures,
    scan_rotations,
)
from .harness import (
    ERROR,
    CorpusFile,
    ExhaustiveLabeled,
    ExperimentRecord,
    Explicit,
    RandomGraphs,
    SweepPlan,
    SweepSummary,
    TightnessFinding,
    TightnessReport,
    ToughSampled,
    check_closure_instance,
    check_rotation_instance,
    check_single_edge_instance,
    check_theorem6_instance,
    filter_connected,
    filter_min_degree,
    filter_predicate_pt,
    filter_toughness_at_least,
    finding_records,
    iter_family,
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
from .limits import InstanceTimeout, InstanceTooLarge
from .toughness import INFINITE, ToughnessCheck, ToughnessReport, is_t_tough, toughness

__version__ = "0.1.0"

__all__ = [
    "COUNTEREXAMPLE",
    "ERROR",
    "INFINITE",
    "NOT_APPLICABLE",
    "PASS",
    "ROTATION_KINDS",
    "ClaimViolation",
    "CliqueAssembly",
    "ClosureResult",
    "CorpusFile",
    "DegreeProfile",
    "ExhaustiveLabeled",
    "ExperimentRecord",
    "Explicit",
    "Graph",
    "Graph6Error",
    "HamCycle",
    "HamPath",
    "HamiltonicityCertificate",
    "InstanceTimeout",
    "InstanceTooLarge",
    "LemmaVerdict",
    "ProofSets",
    "RandomGraphs",
    "RotationConfig",
    "SweepPlan",
    "SweepSummary",
    "TightnessFinding",
    "TightnessReport",
    "ToughSample",
    "ToughSampled",
    "ToughnessCheck",
    "ToughnessReport",
    "UniversalCliqueReport",
    "all_labeled_graphs",
    "apply_rotation",
    "assemble_cycle_via_clique",
    "bc_closure",
    "check_closure_instance",
    "check_rotation_instance",
    "check_single_edge_instance",
    "check_theorem6_instance",
    "chvatal_condition",
    "closed_neighborhood_edge_rule",
    "closure_order_invariance",
    "closure_with_order",
    "complete_bipartite_graph",
    "complete_graph",
    "components",
    "compute_proof_sets",
    "cycle_graph",
    "degree_majorizes",
    "degree_sequence",
    "disjoint_union",
    "empty_graph",
    "encode_graph6",
    "find_hamiltonian_cycle",
    "find_hamiltonian_path",
    "find_path_with_nonadjacent_ends",
    "find_segment_gap",
    "find_spanning_path",
    "filter_connected",
    "filter_min_degree",
    "filter_predicate_pt",
    "filter_toughness_at_least",
    "finding_records",
    "is_t_tough",
    "is_valid_cycle",
    "is_valid_path",
    "iter_family",
    "parse_graph6",
    "path_graph",
    "petersen_graph",
    "predicate_pt",
    "proof_set_identity_failures",
    "random_graph",
    "read_records",
    "replay_record",
    "run_rotation_properties",
    "run_single_edge_sweep",
    "run_tightness_search",
    "run_verify_closure",
    "run_verify_theorem6",
    "sample_t_tough_graph",
    "scan_rotations",
    "star_graph",
    "t_closure",
    "toughness",
    "universal_cliques",
    "verify_corollary",
    "verify_finding",
    "verify_single_edge_lemma",
    "verify_t_closure_lemma",
    "write_records",
]
