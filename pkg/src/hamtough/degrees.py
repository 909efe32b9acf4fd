"""Degree-sequence predicates and cycle assembly through universal vertices.

The predicates work on the sorted degree profile d_1 <= ... <= d_n (1-based,
as is conventional for these conditions):

- chvatal_condition: d_i <= i < n/2 implies d_{n-i} >= n - i
- predicate_pt(t):   for i < n/2, d_i <= i implies d_{n-i+t} >= n - i

predicate_pt(0) is exactly the classical condition, and the condition only
gets weaker as t grows.  When the shifted index n - i + t runs past n, the
consequent inspects a degree that does not exist; we treat it as satisfied,
which keeps the monotonicity in t and matches the convention d_j = n - 1 for
j > n used implicitly by the shift.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graphs import Graph, components, degree_sequence
from .hamilton import HamCycle, find_spanning_path, is_valid_cycle

__all__ = [
    "CliqueAssembly",
    "DegreeProfile",
    "UniversalCliqueReport",
    "assemble_cycle_via_clique",
    "chvatal_condition",
    "closed_neighborhood_edge_rule",
    "degree_majorizes",
    "predicate_pt",
    "universal_cliques",
]


@dataclass(frozen=True)
class DegreeProfile:
    """Non-decreasing degree sequence with the vertex order realizing it."""

    seq: tuple[int, ...]
    vertex_order: tuple[int, ...]

    @classmethod
    def from_graph(cls, g: Graph) -> "DegreeProfile":
        seq, order = degree_sequence(g)
        return cls(seq, order)

    @property
    def n(self) -> int:
        return len(self.seq)

    def d(self, i: int) -> int:
        """1-based access: d(1) is the smallest degree."""
        if not (1 <= i <= len(self.seq)):
            raise IndexError(f"degree position {i} outside 1..{len(self.seq)}")
        return self.seq[i - 1]


def chvatal_condition(profile: DegreeProfile) -> tuple[bool, int | None]:
    """Classical Hamiltonicity condition on a degree profile.

    Returns (True, None) when satisfied, else (False, i) for the smallest
    witness index i with d_i <= i < n/2 and d_{n-i} < n - i.
    """
    n = profile.n
    for i in range(1, (n + 1) // 2):
        if profile.d(i) <= i and profile.d(n - i) < n - i:
            return False, i
    return True, None


def predicate_pt(profile: DegreeProfile, t: int) -> tuple[bool, int | None]:
    """Shifted degree condition: d_i <= i (i < n/2) implies d_{n-i+t} >= n - i."""
    if not isinstance(t, int) or t < 0:
        raise ValueError("shift t must be a nonnegative integer")
    n = profile.n
    for i in range(1, (n + 1) // 2):
        if profile.d(i) <= i:
            j = n - i + t
            if j <= n and profile.d(j) < n - i:
                return False, i
    return True, None


def degree_majorizes(a: DegreeProfile, b: DegreeProfile) -> bool:
    """True when a dominates b pointwise on sorted degrees (equal lengths only)."""
    if a.n != b.n:
        raise ValueError("profiles must have the same length")
    return all(da >= db for da, db in zip(a.seq, b.seq))


@dataclass(frozen=True)
class UniversalCliqueReport:
    """Universal vertices of a graph, plus the nested high-degree vertex sets.

    ``omega`` collects the vertices adjacent to everything else; it always
    induces a clique.  ``by_deficiency[a]`` is the set of vertices with degree
    at least n - a, so by_deficiency[1] == omega and the sets grow with a.
    """

    omega: frozenset[int]
    by_deficiency: dict[int, frozenset[int]]


def universal_cliques(g: Graph, max_deficiency: int | None = None) -> UniversalCliqueReport:
    """Collect degree-(n-1) vertices and the vertex sets of small degree deficiency."""
    n = g.n
    degs = g.degrees()
    omega = frozenset(v for v in range(n) if degs[v] == n - 1)
    top = n if max_deficiency is None else max_deficiency
    by_def = {
        a: frozenset(v for v in range(n) if degs[v] >= n - a)
        for a in range(1, top + 1)
    }
    return UniversalCliqueReport(omega, by_def)


def closed_neighborhood_edge_rule(g: Graph) -> bool:
    """Do all nonadjacent pairs have degree sum below n - 3?

    Equivalently: any pair with combined degree at least n - 3 is already an
    edge.  Graphs closed under the 3-relaxed degree closure have this shape,
    and it is what makes the high-degree sets above pairwise adjacent.
    """
    n = g.n
    degs = g.degrees()
    for u in range(n - 1):
        for v in range(u + 1, n):
            if degs[u] + degs[v] >= n - 3 and not g.has_edge(u, v):
                return False
    return True


@dataclass(frozen=True)
class CliqueAssembly:
    """Result of the constructive cycle build; ``reason`` explains a None cycle."""

    cycle: HamCycle | None
    reason: str | None

    @property
    def succeeded(self) -> bool:
        return self.cycle is not None


def assemble_cycle_via_clique(g: Graph, omega: frozenset[int]) -> CliqueAssembly:
    """Build a Hamiltonian cycle threading the components of g - omega.

    ``omega`` must consist of universal vertices (checked).  Each component
    of g - omega needs a spanning path, and there must be enough clique
    vertices to separate the components; otherwise the construction does not
    apply and the reason says which requirement failed.  Components that are
    bare paths or cycles are handled directly; anything else goes through the
    exact path search.

    The cycle visits omega in descending degree-profile position, splicing
    one component path after each of the first len(components) members.
    """
    n = g.n
    for w in omega:
        if not (0 <= w < n):
            raise ValueError(f"vertex {w} outside graph")
        if g.degree(w) != n - 1:
            raise ValueError(f"vertex {w} is not universal")
    if n < 3:
        return CliqueAssembly(None, "graph too small for a cycle")
    comps = components(g, removed=omega)
    if len(comps) > len(omega):
        return CliqueAssembly(
            None,
            f"{len(comps)} components but only {len(omega)} clique vertices",
        )
    paths: list[tuple[int, ...]] = []
    for comp in comps:
        sub, back = g.induced(comp)
        path = _spanning_path_order(sub)
        if path is None:
            return CliqueAssembly(
                None, f"component {sorted(comp)} has no spanning path"
            )
        paths.append(tuple(back[v] for v in path))
    profile = DegreeProfile.from_graph(g)
    position = {v: i for i, v in enumerate(profile.vertex_order)}
    hubs = sorted(omega, key=lambda v: -position[v])
    order: list[int] = []
    for k, path in enumerate(paths):
        order.append(hubs[k])
        order.extend(path)
    order.extend(hubs[len(paths):])
    cycle = tuple(order)
    if not is_valid_cycle(g, cycle):
        raise AssertionError("assembled order is not a cycle; this is a bug")
    return CliqueAssembly(HamCycle(cycle), None)


def _spanning_path_order(sub: Graph) -> tuple[int, ...] | None:
    """Spanning path of a component, walking it directly when degrees stay <= 2."""
    k = sub.n
    if k == 1:
        return (0,)
    degs = sub.degrees()
    if max(degs) <= 2:
        # A connected graph with max degree 2 is a bare path or cycle.
        ends = [v for v in range(k) if degs[v] == 1]
        start = min(ends) if ends else 0
        order = [start]
        seen = {start}
        while len(order) < k:
            step = min(w for w in sub.neighbors(order[-1]) if w not in seen)
            order.append(step)
            seen.add(step)
        return tuple(order)
    p = find_spanning_path(sub)
    return p.order if p is not None else None
