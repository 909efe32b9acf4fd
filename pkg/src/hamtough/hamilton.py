"""Exact Hamiltonian cycle and path search, path rotations, and the
endpoint-neighborhood bookkeeping used to reason about longest paths.

The solver is deterministic backtracking over adjacency bitmasks, extending
by ascending vertex id.  Its pruning is sound, so a NonHamiltonian outcome
means the whole search space was covered: every vertex still to be visited
must be reachable from the current endpoint through unvisited vertices, and
some unvisited vertex must neighbor the anchor for the cycle to close.

Rotation scanning works on a Hamiltonian path v_1 .. v_n with nonadjacent
endpoints x = v_1 and y = v_n.  Four edge patterns each force a Hamiltonian
cycle; ``scan_rotations`` finds every occurrence and ``apply_rotation``
builds the cycle it promises.  Positions are 1-based throughout this
machinery and are converted to vertex ids only when touching the graph.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graphs import Graph
from .limits import (
    DEFAULT_SOLVER_MAX_N,
    InstanceTimeout,
    check_cap,
    expired,
)

__all__ = [
    "ClaimViolation",
    "HamCycle",
    "HamPath",
    "HamiltonicityCertificate",
    "ProofSets",
    "RotationConfig",
    "apply_rotation",
    "compute_proof_sets",
    "find_hamiltonian_cycle",
    "find_hamiltonian_path",
    "find_path_with_nonadjacent_ends",
    "find_segment_gap",
    "find_spanning_path",
    "is_valid_cycle",
    "is_valid_path",
    "proof_set_identity_failures",
    "scan_rotations",
]

ROTATION_KINDS = ("endpoint_swap", "crossing_pair", "nested_pair", "chord_detour_a", "chord_detour_b")


class ClaimViolation(AssertionError):
    """A structural guarantee about non-Hamiltonian paths failed on a witness.

    Carries everything needed to replay the instance.
    """

    def __init__(self, message: str, g: Graph, order: tuple[int, ...], **context):
        super().__init__(message)
        self.graph = g
        self.order = order
        self.context = context


@dataclass(frozen=True)
class HamPath:
    """A spanning path, stored as the visiting order of vertex ids."""

    order: tuple[int, ...]

    @property
    def x(self) -> int:
        return self.order[0]

    @property
    def y(self) -> int:
        return self.order[-1]

    def __len__(self) -> int:
        return len(self.order)


@dataclass(frozen=True)
class HamCycle:
    """A spanning cycle; the closing edge returns from order[-1] to order[0]."""

    order: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.order)


@dataclass(frozen=True)
class HamiltonicityCertificate:
    """Outcome of an exhaustive cycle search.

    ``cycle`` is None only after the backtracking covered every branch, so a
    negative certificate is as trustworthy as a positive one.  The node count
    records how much of the search tree was expanded.
    """

    cycle: HamCycle | None
    nodes_explored: int

    @property
    def is_hamiltonian(self) -> bool:
        return self.cycle is not None


def is_valid_path(g: Graph, order: tuple[int, ...]) -> bool:
    """True when ``order`` visits every vertex once along edges of g."""
    if len(order) != g.n or set(order) != set(range(g.n)):
        return False
    return all(g.has_edge(order[i], order[i + 1]) for i in range(len(order) - 1))


def is_valid_cycle(g: Graph, order: tuple[int, ...]) -> bool:
    if g.n < 3 or not is_valid_path(g, order):
        return False
    return g.has_edge(order[-1], order[0])


def find_hamiltonian_cycle(
    g: Graph, max_n: int | None = None, deadline: float | None = None
) -> HamiltonicityCertificate:
    """Exhaustive search for a Hamiltonian cycle.

    Deterministic: the search is anchored at vertex 0 and extends by
    ascending vertex id, so the first cycle found is always the same.
    Raises InstanceTooLarge above the cap (default 32, see limits).
    """
    n = g.n
    if n < 3:
        raise ValueError("Hamiltonian cycles need at least 3 vertices")
    check_cap(n, max_n, DEFAULT_SOLVER_MAX_N, "cycle search")
    adj = g._adj
    full = (1 << n) - 1
    adj0 = adj[0]
    path = [0] * n
    cand = [0] * (n + 1)
    cand[1] = adj0
    visited = 1
    depth = 1
    nodes = 0
    last = n - 1
    while True:
        m = cand[depth]
        if m == 0:
            depth -= 1
            if depth == 0:
                return HamiltonicityCertificate(None, nodes)
            visited ^= 1 << path[depth]
            continue
        b = m & -m
        cand[depth] = m ^ b
        nodes += 1
        if (nodes & 4095) == 0 and expired(deadline):
            raise InstanceTimeout("cycle search timed out")
        v = b.bit_length() - 1
        if depth == last:
            if adj[v] & 1:
                path[depth] = v
                return HamiltonicityCertificate(HamCycle(tuple(path)), nodes)
            continue
        nv = visited | b
        remaining = full ^ nv
        if adj0 & remaining == 0:
            continue  # nothing left that could close the cycle
        frontier = adj[v] & remaining
        if frontier == 0:
            continue
        comp = frontier
        while frontier:
            nxt = 0
            f = frontier
            while f:
                fb = f & -f
                f ^= fb
                nxt |= adj[fb.bit_length() - 1]
            frontier = nxt & remaining & ~comp
            comp |= frontier
        if comp != remaining:
            continue  # some vertex is unreachable through unvisited territory
        path[depth] = v
        visited = nv
        depth += 1
        cand[depth] = adj[v] & ~visited


def find_hamiltonian_path(
    g: Graph,
    x: int,
    y: int,
    max_n: int | None = None,
    deadline: float | None = None,
) -> HamPath | None:
    """Exhaustive search for a spanning path from x to y.

    Same guarantees as the cycle search: None means no such path exists.
    """
    n = g.n
    if not (0 <= x < n and 0 <= y < n) or x == y:
        raise ValueError("endpoints must be two distinct vertices")
    check_cap(n, max_n, DEFAULT_SOLVER_MAX_N, "path search")
    adj = g._adj
    ybit = 1 << y
    adjy = adj[y]
    # Search a path over V - y from x; the final vertex must neighbor y.
    full = ((1 << n) - 1) ^ ybit
    if n == 2:
        return HamPath((x, y)) if g.has_edge(x, y) else None
    path = [0] * n
    path[0] = x
    path[-1] = y
    cand = [0] * n
    cand[1] = adj[x] & ~ybit
    visited = 1 << x
    depth = 1
    last = n - 2
    nodes = 0
    while True:
        m = cand[depth]
        if m == 0:
            depth -= 1
            if depth == 0:
                return None
            visited ^= 1 << path[depth]
            continue
        b = m & -m
        cand[depth] = m ^ b
        nodes += 1
        if (nodes & 4095) == 0 and expired(deadline):
            raise InstanceTimeout("path search timed out")
        v = b.bit_length() - 1
        if depth == last:
            if adjy & b:
                path[depth] = v
                return HamPath(tuple(path))
            continue
        nv = visited | b
        remaining = full ^ nv
        if adjy & remaining == 0:
            continue  # y would be unreachable at the end
        frontier = adj[v] & remaining
        if frontier == 0:
            continue
        comp = frontier
        while frontier:
            nxt = 0
            f = frontier
            while f:
                fb = f & -f
                f ^= fb
                nxt |= adj[fb.bit_length() - 1]
            frontier = nxt & remaining & ~comp
            comp |= frontier
        if comp != remaining:
            continue
        path[depth] = v
        visited = nv
        depth += 1
        cand[depth] = adj[v] & ~visited & ~ybit


def find_path_with_nonadjacent_ends(
    g: Graph, max_n: int | None = None, deadline: float | None = None
) -> HamPath | None:
    """First spanning path whose endpoints are nonadjacent, in (x, y) lex order."""
    for x in range(g.n - 1):
        for y in range(x + 1, g.n):
            if g.has_edge(x, y):
                continue
            p = find_hamiltonian_path(g, x, y, max_n=max_n, deadline=deadline)
            if p is not None:
                return p
    return None


def find_spanning_path(
    g: Graph, max_n: int | None = None, deadline: float | None = None
) -> HamPath | None:
    """Any spanning path at all (endpoints unrestricted), or None."""
    if g.n == 1:
        return HamPath((0,))
    for x in range(g.n - 1):
        for y in range(x + 1, g.n):
            p = find_hamiltonian_path(g, x, y, max_n=max_n, deadline=deadline)
            if p is not None:
                return p
    return None


# -- rotations ---------------------------------------------------------------


@dataclass(frozen=True)
class RotationConfig:
    """One occurrence of a cycle-forcing edge pattern on a spanning path.

    ``kind`` names the pattern, ``i`` (and ``j`` where applicable) are 1-based
    path positions:

    - endpoint_swap:   v_i x and v_{i-1} y are edges
    - crossing_pair:   v_i v_j, v_{i+1} x, v_{j-1} y are edges (j > i+1)
    - nested_pair:     v_i v_j, v_{i+1} y, v_{j-1} x are edges (j > i+1)
    - chord_detour_a:  v_i v_j, v_{i+1} y, v_{j+1} x are edges (j < n)
    - chord_detour_b:  v_i v_j, v_{i-1} y, v_{j-1} x are edges (i > 1)
    """

    kind: str
    i: int
    j: int | None = None


def _require_rotation_path(g: Graph, p: HamPath) -> None:
    if not is_valid_path(g, p.order):
        raise ValueError("not a spanning path of the graph")
    if g.has_edge(p.x, p.y):
        raise ValueError("path endpoints must be nonadjacent")


def scan_rotations(g: Graph, p: HamPath) -> list[RotationConfig]:
    """All cycle-forcing patterns present on the path, deterministically ordered.

    On a graph the solver certifies non-Hamiltonian this list must come back
    empty; anything found here converts into a cycle via apply_rotation.
    """
    _require_rotation_path(g, p)
    order = p.order
    n = len(order)
    x, y = order[0], order[-1]
    xmask = g._adj[x]
    ymask = g._adj[y]
    # ax[i] / ay[i]: is v_i adjacent to x / y (1-based positions).
    ax = [False] * (n + 2)
    ay = [False] * (n + 2)
    for k, v in enumerate(order):
        ax[k + 1] = bool((xmask >> v) & 1)
        ay[k + 1] = bool((ymask >> v) & 1)
    found: list[RotationConfig] = []
    for i in range(2, n + 1):
        if ax[i] and ay[i - 1]:
            found.append(RotationConfig("endpoint_swap", i))
    pos = {v: k + 1 for k, v in enumerate(order)}
    chords = sorted(
        (pos[u], pos[w]) if pos[u] < pos[w] else (pos[w], pos[u])
        for u, w in g.edges()
    )
    for i, j in chords:
        if j > i + 1:
            if ax[i + 1] and ay[j - 1]:
                found.append(RotationConfig("crossing_pair", i, j))
            if ay[i + 1] and ax[j - 1]:
                found.append(RotationConfig("nested_pair", i, j))
        if j < n and ay[i + 1] and ax[j + 1]:
            found.append(RotationConfig("chord_detour_a", i, j))
        if i > 1 and ay[i - 1] and ax[j - 1]:
            found.append(RotationConfig("chord_detour_b", i, j))
    found.sort(key=lambda c: (ROTATION_KINDS.index(c.kind), c.i, c.j or 0))
    return found


def apply_rotation(g: Graph, p: HamPath, config: RotationConfig) -> HamCycle:
    """Materialize the cycle a rotation pattern guarantees.

    Checks the pattern's edges before rearranging and validates the result,
    so a bogus config raises instead of returning garbage.
    """
    _require_rotation_path(g, p)
    order = p.order
    n = len(order)
    i, j = config.i, config.j

    def vtx(*positions: int) -> list[int]:
        return [order[k - 1] for k in positions]

    def need(u: int, w: int) -> None:
        if not g.has_edge(u, w):
            raise ValueError(
                f"pattern edge between positions is missing for {config.kind}"
            )

    x, y = order[0], order[-1]
    kind = config.kind
    if kind == "endpoint_swap":
        if not (2 <= i <= n):
            raise ValueError("position out of range")
        need(order[i - 1], x)
        need(order[i - 2], y)
        seq = vtx(1, *range(2, i), n, *range(n - 1, i - 1, -1))
    elif kind in ("crossing_pair", "nested_pair"):
        if j is None or not (1 <= i and i + 1 < j <= n):
            raise ValueError("positions out of range")
        need(order[i - 1], order[j - 1])
        if kind == "crossing_pair":
            need(order[i], x)
            need(order[j - 2], y)
            seq = vtx(*range(1, i + 1), *range(j, n + 1), *range(j - 1, i, -1))
        else:
            need(order[i], y)
            need(order[j - 2], x)
            seq = vtx(*range(1, i + 1), *range(j, n + 1), *range(i + 1, j))
    elif kind == "chord_detour_a":
        if j is None or not (1 <= i < j < n):
            raise ValueError("positions out of range")
        need(order[i - 1], order[j - 1])
        need(order[i], y)
        need(order[j], x)
        seq = vtx(*range(1, i + 1), *range(j, i, -1), n, *range(n - 1, j, -1))
    elif kind == "chord_detour_b":
        if j is None or not (1 < i < j <= n):
            raise ValueError("positions out of range")
        need(order[i - 1], order[j - 1])
        need(order[i - 2], y)
        need(order[j - 2], x)
        seq = vtx(*range(1, i), n, *range(n - 1, j - 1, -1), *range(i, j))
    else:
        raise ValueError(f"unknown rotation kind {config.kind!r}")
    cycle = tuple(seq)
    if not is_valid_cycle(g, cycle):
        raise ClaimViolation(
            f"rotation {kind} at ({i}, {j}) did not produce a cycle",
            g,
            order,
            config=config,
            produced=cycle,
        )
    return HamCycle(cycle)


def find_segment_gap(g: Graph, p: HamPath, a: int, b: int) -> int:
    """Locate a position strictly between a and b nonadjacent to both endpoints.

    Preconditions (checked): v_a y and v_b x are edges, a < b, and the path's
    endpoints are nonadjacent.  The caller vouches that g has no Hamiltonian
    cycle; under that promise a gap position must exist, and when it is unique
    its neighbors on the path must see the opposite endpoints.  Violations of
    either consequence raise ClaimViolation carrying the witness.
    """
    _require_rotation_path(g, p)
    order = p.order
    n = len(order)
    if not (1 <= a < b <= n):
        raise ValueError("need path positions a < b")
    x, y = order[0], order[-1]
    if not g.has_edge(order[a - 1], y):
        raise ValueError("v_a must be adjacent to the far endpoint")
    if not g.has_edge(order[b - 1], x):
        raise ValueError("v_b must be adjacent to the near endpoint")
    gaps = [
        s
        for s in range(a + 1, b)
        if not g.has_edge(order[s - 1], x) and not g.has_edge(order[s - 1], y)
    ]
    if not gaps:
        raise ClaimViolation(
            "no endpoint-free position between a rotation-ready pair",
            g,
            order,
            a=a,
            b=b,
        )
    if len(gaps) == 1:
        s = gaps[0]
        if not (g.has_edge(order[s - 2], y) and g.has_edge(order[s], x)):
            raise ClaimViolation(
                "unique gap without the forced flanking edges",
                g,
                order,
                a=a,
                b=b,
                s=s,
            )
    return gaps[0]


# -- endpoint-neighborhood bookkeeping ---------------------------------------


@dataclass(frozen=True)
class ProofSets:
    """Position sets describing how a spanning path meets its endpoints.

    All members are 1-based path positions in 2..n-1 (the interior).  With
    x = v_1, y = v_n:

    - S: positions adjacent to neither endpoint
    - D0: positions adjacent to both
    - D1: consecutive pairs i, i+1 outside D0 with v_i x and v_{i+1} y edges
    - D2: pairs i, i+2 outside D0 whose middle lies in S, with v_i x and
      v_{i+2} y edges
    - S_star: members of S flanked by a y-edge on the left and an x-edge on
      the right
    - S0: middles of D2 pairs
    - S2: members of S with a neighbor position also in S
    - Dx / Dy: members of D0 | D1 | D2 adjacent to x / to y
    - segments: maximal position runs between consecutive landmark pairs,
      returned as (start, end) position pairs
    """

    S: frozenset[int]
    S_star: frozenset[int]
    S0: frozenset[int]
    S2: frozenset[int]
    D0: frozenset[int]
    D1: frozenset[int]
    D2: frozenset[int]
    Dx: frozenset[int]
    Dy: frozenset[int]
    segments: tuple[tuple[int, int], ...]


def compute_proof_sets(g: Graph, p: HamPath, d0_segments: bool = False) -> ProofSets:
    """Classify interior path positions by endpoint adjacency.

    With ``d0_segments`` the segment list is cut at consecutive D0 members
    instead of at Dy/Dx landmark pairs; the default matches the counting
    identities checked by proof_set_identity_failures.
    """
    _require_rotation_path(g, p)
    order = p.order
    n = len(order)
    x, y = order[0], order[-1]
    xmask = g._adj[x]
    ymask = g._adj[y]
    ax = [False] * (n + 2)
    ay = [False] * (n + 2)
    for k, v in enumerate(order):
        ax[k + 1] = bool((xmask >> v) & 1)
        ay[k + 1] = bool((ymask >> v) & 1)
    interior = range(2, n)
    S = frozenset(i for i in interior if not ax[i] and not ay[i])
    D0 = frozenset(i for i in interior if ax[i] and ay[i])
    d1 = set()
    for i in range(2, n - 1):
        if i in D0 or (i + 1) in D0:
            continue
        if ax[i] and ay[i + 1]:
            d1.add(i)
            d1.add(i + 1)
    d2 = set()
    s0 = set()
    for i in range(2, n - 2):
        if i in D0 or (i + 2) in D0 or (i + 1) not in S:
            continue
        if ax[i] and ay[i + 2]:
            d2.add(i)
            d2.add(i + 2)
            s0.add(i + 1)
    S_star = frozenset(i for i in S if ay[i - 1] and ax[i + 1])
    S2 = frozenset(i for i in S if (i - 1) in S or (i + 1) in S)
    D = D0 | d1 | d2
    Dx = frozenset(i for i in D if ax[i])
    Dy = frozenset(i for i in D if ay[i])
    if d0_segments:
        landmarks = sorted(D0)
        cuts = list(zip(landmarks, landmarks[1:]))
    else:
        landmarks = sorted(Dx | Dy)
        cuts = [
            (u, w)
            for u, w in zip(landmarks, landmarks[1:])
            if u in Dy and w in Dx
        ]
    return ProofSets(
        S=S,
        S_star=S_star,
        S0=frozenset(s0),
        S2=S2,
        D0=D0,
        D1=frozenset(d1),
        D2=frozenset(d2),
        Dx=Dx,
        Dy=Dy,
        segments=tuple(cuts),
    )


def proof_set_identity_failures(g: Graph, p: HamPath, ps: ProofSets) -> list[str]:
    """Check the counting identities tying the position sets together.

    Returns human-readable descriptions of any failures; empty means all
    identities hold.  They are consequences of the definitions, so a failure
    indicates a broken classification rather than an unusual graph.
    """
    n = g.n
    failures = []
    dsum = g.degree(p.x) + g.degree(p.y)
    if dsum != n - len(ps.S) + len(ps.D0) - 2:
        failures.append(
            f"degree sum {dsum} != n - |S| + |D0| - 2 = "
            f"{n - len(ps.S) + len(ps.D0) - 2}"
        )
    if len(ps.D2) != 2 * len(ps.S0):
        failures.append(f"|D2| = {len(ps.D2)} != 2|S0| = {2 * len(ps.S0)}")
    if len(ps.Dx) != len(ps.Dy):
        failures.append(f"|Dx| = {len(ps.Dx)} != |Dy| = {len(ps.Dy)}")
    if 2 * len(ps.Dx) != 2 * len(ps.D0) + len(ps.D1) + len(ps.D2):
        failures.append(
            f"|Dx| = {len(ps.Dx)} != |D0| + |D1|/2 + |D2|/2 = "
            f"{len(ps.D0)} + {len(ps.D1)}/2 + {len(ps.D2)}/2"
        )
    expected_segments = len(ps.Dx) - 1 if ps.Dx else 0
    if len(ps.segments) != expected_segments:
        failures.append(
            f"{len(ps.segments)} segments != |Dx| - 1 = {expected_segments}"
        )
    return failures
