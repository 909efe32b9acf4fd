"""Degree-sum closures and the lemma verifiers built on them.

The classical closure repeatedly joins nonadjacent vertex pairs whose degree
sum reaches n; the t-relaxed variant lowers the threshold to n - t.  The
closed graph is independent of the order in which eligible pairs are joined,
and ``closure_order_invariance`` rechecks that on demand.

The verifiers turn the closure statements into executable checks.  Each
returns a LemmaVerdict: every hypothesis clause is evaluated separately, the
conclusion is tested with the exhaustive solver, and the verdict is

- PASS            all hypotheses hold and the conclusion holds,
- NOT_APPLICABLE  some hypothesis fails (the conclusion says nothing),
- COUNTEREXAMPLE  all hypotheses hold and the conclusion fails.

A COUNTEREXAMPLE from any verifier on a valid input would be publishable
news, so the detail payload always carries enough to replay the instance.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping

from .graphs import Graph
from .hamilton import find_hamiltonian_cycle
from .toughness import is_t_tough

__all__ = [
    "PASS",
    "NOT_APPLICABLE",
    "COUNTEREXAMPLE",
    "ClosureResult",
    "LemmaVerdict",
    "bc_closure",
    "closure_order_invariance",
    "closure_with_order",
    "t_closure",
    "verify_corollary",
    "verify_single_edge_lemma",
    "verify_t_closure_lemma",
]

PASS = "PASS"
NOT_APPLICABLE = "NOT_APPLICABLE"
COUNTEREXAMPLE = "COUNTEREXAMPLE"


@dataclass(frozen=True)
class ClosureResult:
    """Closed graph plus the additions that produced it.

    ``trace`` lists (u, v, degree_sum) in addition order, with the degree sum
    measured in the graph state at the moment the edge went in.
    """

    closed: Graph
    trace: tuple[tuple[int, int, int], ...]

    @property
    def unchanged(self) -> bool:
        return not self.trace


def t_closure(g: Graph, t: int) -> ClosureResult:
    """Join nonadjacent pairs with degree sum >= n - t until none remain.

    Eligible pairs are taken smallest-first (lexicographic), which pins the
    trace down; the fixed point itself does not depend on that choice.
    """
    if g.n < 3:
        raise ValueError("closure needs at least 3 vertices")
    if not isinstance(t, int) or t < 0:
        raise ValueError("closure offset t must be a nonnegative integer")
    n = g.n
    threshold = n - t
    masks = list(g._adj)
    deg = [m.bit_count() for m in masks]
    trace: list[tuple[int, int, int]] = []
    while True:
        hit = None
        for u in range(n - 1):
            du = deg[u]
            mu = masks[u]
            for v in range(u + 1, n):
                if not ((mu >> v) & 1) and du + deg[v] >= threshold:
                    hit = (u, v)
                    break
            if hit:
                break
        if hit is None:
            break
        u, v = hit
        trace.append((u, v, deg[u] + deg[v]))
        masks[u] |= 1 << v
        masks[v] |= 1 << u
        deg[u] += 1
        deg[v] += 1
    return ClosureResult(Graph._from_masks(n, masks), tuple(trace))


def bc_closure(g: Graph) -> ClosureResult:
    """Classical closure: threshold n, i.e. the t = 0 case."""
    return t_closure(g, 0)


def closure_with_order(g: Graph, t: int, seed: int) -> Graph:
    """Closure with eligible pairs joined in seeded random order.

    Only the addition order varies; used to probe order independence.
    """
    if g.n < 3:
        raise ValueError("closure needs at least 3 vertices")
    if not isinstance(t, int) or t < 0:
        raise ValueError("closure offset t must be a nonnegative integer")
    n = g.n
    threshold = n - t
    rng = random.Random(seed)
    masks = list(g._adj)
    deg = [m.bit_count() for m in masks]
    while True:
        eligible = [
            (u, v)
            for u in range(n - 1)
            for v in range(u + 1, n)
            if not ((masks[u] >> v) & 1) and deg[u] + deg[v] >= threshold
        ]
        if not eligible:
            return Graph._from_masks(n, masks)
        u, v = eligible[rng.randrange(len(eligible))]
        masks[u] |= 1 << v
        masks[v] |= 1 << u
        deg[u] += 1
        deg[v] += 1


def closure_order_invariance(g: Graph, t: int, seeds: list[int]) -> bool:
    """True when every seeded addition order reaches the canonical fixed point."""
    canonical = t_closure(g, t).closed
    return all(closure_with_order(g, t, s) == canonical for s in seeds)


@dataclass(frozen=True)
class LemmaVerdict:
    """Outcome of one lemma check on one instance."""

    lemma: str
    verdict: str
    hypotheses: tuple[tuple[str, bool], ...]
    conclusion_holds: bool
    detail: Mapping[str, object] = field(default_factory=dict)

    @property
    def hypotheses_hold(self) -> bool:
        return all(ok for _, ok in self.hypotheses)


def _verdict(lemma, clauses, conclusion, detail) -> LemmaVerdict:
    if all(ok for _, ok in clauses):
        verdict = PASS if conclusion else COUNTEREXAMPLE
    else:
        verdict = NOT_APPLICABLE
    return LemmaVerdict(lemma, verdict, tuple(clauses), conclusion, detail)


def verify_single_edge_lemma(
    g: Graph,
    x: int,
    y: int,
    variant: str = "L7",
    epsilon=None,
    t: int | None = None,
    strict_equality: bool = True,
    max_n: int | None = None,
    deadline: float | None = None,
) -> LemmaVerdict:
    """Check one single-edge closure statement on a nonadjacent pair (x, y).

    Variants, all concluding that g + xy is Hamiltonian iff g is:

    - L7: g is 2-tough and d(x) + d(y) >= n - 1
    - L8: g is (2 + eps)-tough for some eps > 1/4 and d(x) + d(y) >= n - 2
    - L9: g is (3t - 1)/2-tough for an integer t >= 2 and d(x) + d(y) = n - t
      (>= n - t when strict_equality is False, which probes a stronger reading)

    For L8 the bound eps > 1/4 is a hypothesis clause, not an input
    restriction, so boundary probes at eps = 1/4 run and come back
    NOT_APPLICABLE rather than raising.
    """
    n = g.n
    if n < 3:
        raise ValueError("lemma checks need at least 3 vertices")
    if g.has_edge(x, y) or x == y:
        raise ValueError("x and y must be distinct nonadjacent vertices")
    dsum = g.degree(x) + g.degree(y)
    clauses: list[tuple[str, bool]] = []
    detail: dict[str, object] = {"degree_sum": dsum, "n": n}
    if variant == "L7":
        tough_req = Fraction(2)
        clauses.append((f"degree_sum>={n - 1}", dsum >= n - 1))
    elif variant == "L8":
        if epsilon is None:
            raise ValueError("L8 needs epsilon")
        eps = Fraction(epsilon)
        detail["epsilon"] = str(eps)
        tough_req = 2 + eps
        clauses.append(("epsilon>1/4", eps > Fraction(1, 4)))
        clauses.append((f"degree_sum>={n - 2}", dsum >= n - 2))
    elif variant == "L9":
        if not isinstance(t, int) or t < 2:
            raise ValueError("L9 needs an integer t >= 2")
        tough_req = Fraction(3 * t - 1, 2)
        if strict_equality:
            clauses.append((f"degree_sum=={n - t}", dsum == n - t))
        else:
            clauses.append((f"degree_sum>={n - t}", dsum >= n - t))
    else:
        raise ValueError(f"unknown variant {variant!r}")
    tough = is_t_tough(g, tough_req, max_n=max_n, deadline=deadline)
    clauses.insert(0, (f"toughness>={tough_req}", tough.holds))
    if not tough.holds:
        detail["violating_cutset"] = sorted(tough.violating_cutset)
    base = find_hamiltonian_cycle(g, max_n=max_n, deadline=deadline)
    augmented = find_hamiltonian_cycle(g.add_edge(x, y), max_n=max_n, deadline=deadline)
    detail["g_hamiltonian"] = base.is_hamiltonian
    detail["g_plus_xy_hamiltonian"] = augmented.is_hamiltonian
    detail["solver_nodes"] = base.nodes_explored + augmented.nodes_explored
    conclusion = base.is_hamiltonian == augmented.is_hamiltonian
    return _verdict(variant, clauses, conclusion, detail)


def verify_corollary(
    g: Graph,
    x: int,
    y: int,
    t_prime,
    max_n: int | None = None,
    deadline: float | None = None,
) -> LemmaVerdict:
    """Single-edge check at toughness t' >= 5/2 with threshold n - (2t' + 1)/3.

    This is the L9 statement reparametrized by the toughness itself.
    """
    tp = Fraction(t_prime)
    if tp < Fraction(5, 2):
        raise ValueError("corollary needs toughness parameter at least 5/2")
    n = g.n
    if n < 3:
        raise ValueError("lemma checks need at least 3 vertices")
    if g.has_edge(x, y) or x == y:
        raise ValueError("x and y must be distinct nonadjacent vertices")
    dsum = g.degree(x) + g.degree(y)
    threshold = n - (2 * tp + 1) / 3
    clauses = [
        (f"toughness>={tp}", bool(is_t_tough(g, tp, max_n=max_n, deadline=deadline))),
        (f"degree_sum>={threshold}", Fraction(dsum) >= threshold),
    ]
    base = find_hamiltonian_cycle(g, max_n=max_n, deadline=deadline)
    augmented = find_hamiltonian_cycle(g.add_edge(x, y), max_n=max_n, deadline=deadline)
    detail = {
        "degree_sum": dsum,
        "threshold": str(threshold),
        "g_hamiltonian": base.is_hamiltonian,
        "g_plus_xy_hamiltonian": augmented.is_hamiltonian,
        "solver_nodes": base.nodes_explored + augmented.nodes_explored,
    }
    conclusion = base.is_hamiltonian == augmented.is_hamiltonian
    return _verdict("corollary", clauses, conclusion, detail)


def verify_t_closure_lemma(
    g: Graph,
    t: int,
    max_n: int | None = None,
    deadline: float | None = None,
) -> LemmaVerdict:
    """Check that a (3t - 1)/2-tough graph is Hamiltonian iff its t-closure is."""
    if not isinstance(t, int) or t < 2:
        raise ValueError("t-closure lemma needs an integer t >= 2")
    if g.n < 3:
        raise ValueError("lemma checks need at least 3 vertices")
    tough_req = Fraction(3 * t - 1, 2)
    tough = is_t_tough(g, tough_req, max_n=max_n, deadline=deadline)
    clauses = [(f"toughness>={tough_req}", tough.holds)]
    detail: dict[str, object] = {"t": t}
    if not tough.holds:
        detail["violating_cutset"] = sorted(tough.violating_cutset)
    closed = t_closure(g, t)
    base = find_hamiltonian_cycle(g, max_n=max_n, deadline=deadline)
    top = find_hamiltonian_cycle(closed.closed, max_n=max_n, deadline=deadline)
    detail["edges_added"] = len(closed.trace)
    detail["g_hamiltonian"] = base.is_hamiltonian
    detail["closure_hamiltonian"] = top.is_hamiltonian
    detail["solver_nodes"] = base.nodes_explored + top.nodes_explored
    conclusion = base.is_hamiltonian == top.is_hamiltonian
    return _verdict("L11", clauses, conclusion, detail)
