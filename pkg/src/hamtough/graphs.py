"""Labeled simple graphs on vertices 0..n-1, graph6 serialization, generators.

Adjacency is stored as one bitmask per vertex: bit ``v`` of ``_adj[u]`` is set
iff ``uv`` is an edge.  All enumeration-heavy callers in this package work
directly on these masks; the set-returning accessors are for convenience and
for callers that do not care about speed.

The graph6 codec follows the byte layout used by nauty and friends: a header
encoding n, then the upper triangle of the adjacency matrix in column-major
order (x(0,1), x(0,2), x(1,2), x(0,3), ...), packed big-endian six bits per
byte, each byte offset by 63.  Unused padding bits in the final byte must be
zero.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Iterator

__all__ = [
    "Graph",
    "Graph6Error",
    "ToughSample",
    "all_labeled_graphs",
    "complete_bipartite_graph",
    "complete_graph",
    "components",
    "cycle_graph",
    "degree_sequence",
    "disjoint_union",
    "empty_graph",
    "encode_graph6",
    "parse_graph6",
    "path_graph",
    "petersen_graph",
    "random_graph",
    "sample_t_tough_graph",
    "star_graph",
]

_G6_MAX_N = 68719476735  # largest n the three-part graph6 header can carry


class Graph6Error(ValueError):
    """Malformed graph6 input.  ``offset`` is the byte position of the fault."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte offset {offset})")
        self.offset = offset


class Graph:
    """Immutable simple undirected graph on vertices 0..n-1.

    No loops, no multi-edges, no isolated-vertex restrictions.  Instances
    compare and hash by value, so they can key sets and dicts.
    """

    __slots__ = ("n", "_adj")

    n: int
    _adj: tuple[int, ...]

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 1:
            raise ValueError("a graph needs at least one vertex")
        adj = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
            if u == v:
                raise ValueError(f"loop at vertex {u} is not allowed")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        self.n = n
        self._adj = tuple(adj)

    @classmethod
    def _from_masks(cls, n: int, masks: Iterable[int]) -> "Graph":
        # Trusted fast path for internal generators; skips edge validation.
        g = cls.__new__(cls)
        g.n = n
        g._adj = tuple(masks)
        return g

    @classmethod
    def from_neighbor_sets(cls, neighbor_sets: Iterable[Iterable[int]]) -> "Graph":
        """Build from per-vertex neighbor sets, validating symmetry."""
        sets = [frozenset(s) for s in neighbor_sets]
        n = len(sets)
        if n < 1:
            raise ValueError("a graph needs at least one vertex")
        masks = [0] * n
        for u, s in enumerate(sets):
            for v in s:
                if not (0 <= v < n):
                    raise ValueError(f"neighbor {v} of vertex {u} outside 0..{n - 1}")
                if v == u:
                    raise ValueError(f"loop at vertex {u} is not allowed")
                masks[u] |= 1 << v
        for u in range(n):
            for v in range(u + 1, n):
                if ((masks[u] >> v) & 1) != ((masks[v] >> u) & 1):
                    raise ValueError(f"asymmetric adjacency between {u} and {v}")
        return cls._from_masks(n, masks)

    # -- accessors ---------------------------------------------------------

    def has_edge(self, u: int, v: int) -> bool:
        return bool((self._adj[u] >> v) & 1)

    def degree(self, v: int) -> int:
        return self._adj[v].bit_count()

    def degrees(self) -> tuple[int, ...]:
        return tuple(m.bit_count() for m in self._adj)

    def neighbors(self, v: int) -> frozenset[int]:
        return frozenset(_bits(self._adj[v]))

    def neighbor_mask(self, v: int) -> int:
        return self._adj[v]

    def edges(self) -> list[tuple[int, int]]:
        out = []
        for u in range(self.n):
            m = self._adj[u] >> (u + 1)
            v = u + 1
            while m:
                if m & 1:
                    out.append((u, v))
                m >>= 1
                v += 1
        return out

    @property
    def edge_count(self) -> int:
        return sum(m.bit_count() for m in self._adj) // 2

    def is_complete(self) -> bool:
        full = (1 << self.n) - 1
        return all(self._adj[v] == full ^ (1 << v) for v in range(self.n))

    def is_connected(self) -> bool:
        full = (1 << self.n) - 1
        return _count_components_masks(self._adj, full) == 1

    # -- derived graphs ----------------------------------------------------

    def add_edge(self, u: int, v: int) -> "Graph":
        """New graph with edge uv added (no-op copy if already present)."""
        if not (0 <= u < self.n and 0 <= v < self.n) or u == v:
            raise ValueError(f"cannot add edge ({u}, {v})")
        masks = list(self._adj)
        masks[u] |= 1 << v
        masks[v] |= 1 << u
        return Graph._from_masks(self.n, masks)

    def add_edges(self, pairs: Iterable[tuple[int, int]]) -> "Graph":
        g = self
        for u, v in pairs:
            g = g.add_edge(u, v)
        return g

    def induced(self, vertices: Iterable[int]) -> tuple["Graph", tuple[int, ...]]:
        """Induced subgraph on ``vertices``; also returns new-index -> old-id map."""
        keep = sorted(set(vertices))
        if not keep:
            raise ValueError("induced subgraph needs at least one vertex")
        if keep[0] < 0 or keep[-1] >= self.n:
            raise ValueError("vertex outside graph")
        index = {v: i for i, v in enumerate(keep)}
        masks = [0] * len(keep)
        for i, v in enumerate(keep):
            m = self._adj[v]
            for w in keep:
                if (m >> w) & 1:
                    masks[i] |= 1 << index[w]
        return Graph._from_masks(len(keep), masks), tuple(keep)

    # -- value semantics ----------------------------------------------------

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Graph) and self.n == other.n and self._adj == other._adj
        )

    def __hash__(self) -> int:
        return hash((self.n, self._adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.edge_count})"


def _bits(mask: int) -> Iterator[int]:
    while mask:
        b = mask & -mask
        mask ^= b
        yield b.bit_length() - 1


def _count_components_masks(adj: tuple[int, ...], alive: int) -> int:
    """Number of connected components induced on the ``alive`` vertex mask."""
    count = 0
    rem = alive
    while rem:
        count += 1
        comp = rem & -rem
        frontier = comp
        while frontier:
            nxt = 0
            f = frontier
            while f:
                b = f & -f
                f ^= b
                nxt |= adj[b.bit_length() - 1]
            frontier = nxt & rem & ~comp
            comp |= frontier
        rem ^= comp
    return count


def _component_masks(adj: tuple[int, ...], alive: int) -> list[int]:
    out = []
    rem = alive
    while rem:
        comp = rem & -rem
        frontier = comp
        while frontier:
            nxt = 0
            f = frontier
            while f:
                b = f & -f
                f ^= b
                nxt |= adj[b.bit_length() - 1]
            frontier = nxt & rem & ~comp
            comp |= frontier
        rem ^= comp
        out.append(comp)
    return out


def components(g: Graph, removed: Iterable[int] = ()) -> list[frozenset[int]]:
    """Connected components of g minus ``removed``, ordered by smallest member.

    The returned sets partition the surviving vertices; the list is empty only
    when ``removed`` covers the whole graph.
    """
    rm = 0
    for v in removed:
        if not (0 <= v < g.n):
            raise ValueError(f"removed vertex {v} outside graph")
        rm |= 1 << v
    alive = ((1 << g.n) - 1) & ~rm
    return [frozenset(_bits(c)) for c in _component_masks(g._adj, alive)]


def degree_sequence(g: Graph) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Sorted degree sequence plus the vertex order realizing it.

    Returns ``(seq, order)`` with ``seq`` non-decreasing and ``order[i]`` the
    vertex at sorted position i.  Ties are broken by ascending vertex id, so
    the order is deterministic.
    """
    order = sorted(range(g.n), key=lambda v: (g._adj[v].bit_count(), v))
    return tuple(g._adj[v].bit_count() for v in order), tuple(order)


# -- graph6 ----------------------------------------------------------------


def _g6_encode_n(n: int) -> str:
    if n <= 62:
        return chr(n + 63)
    if n <= 258047:
        return "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    return "~~" + "".join(chr(((n >> s) & 63) + 63) for s in (30, 24, 18, 12, 6, 0))


def _g6_parse_n(s: str) -> tuple[int, int]:
    """Decode the size header; returns (n, bytes consumed)."""

    def val(k: int) -> int:
        c = ord(s[k]) - 63
        if not (0 <= c <= 63):
            raise Graph6Error(f"byte {s[k]!r} outside graph6 alphabet", k)
        return c

    c0 = val(0)
    if c0 < 63:
        return c0, 1
    if len(s) < 2:
        raise Graph6Error("truncated size header", len(s))
    if ord(s[1]) - 63 < 63:
        if len(s) < 4:
            raise Graph6Error("truncated size header", len(s))
        return (val(1) << 12) | (val(2) << 6) | val(3), 4
    if len(s) < 8:
        raise Graph6Error("truncated size header", len(s))
    n = 0
    for k in range(2, 8):
        n = (n << 6) | val(k)
    return n, 8


def encode_graph6(g: Graph) -> str:
    """Serialize to canonical graph6 (no trailing newline)."""
    n = g.n
    if n > _G6_MAX_N:
        raise ValueError(f"graph6 cannot encode {n} vertices")
    out = [_g6_encode_n(n)]
    acc = 0
    nbits = 0
    adj = g._adj
    for j in range(1, n):
        col = adj[j]
        for i in range(j):
            acc = (acc << 1) | ((col >> i) & 1)
            nbits += 1
            if nbits == 6:
                out.append(chr(acc + 63))
                acc = 0
                nbits = 0
    if nbits:
        out.append(chr((acc << (6 - nbits)) + 63))
    return "".join(out)


def parse_graph6(line: str) -> Graph:
    """Decode one graph6 line.

    Accepts the optional ``>>graph6<<`` prefix and a trailing newline; any
    other deviation (bad alphabet, short or long edge field, nonzero padding)
    raises Graph6Error with the offending byte offset.
    """
    s = line
    if s.startswith(">>graph6<<"):
        s = s[10:]
    while s and s[-1] in "\r\n":
        s = s[:-1]
    if not s:
        raise Graph6Error("empty graph6 string", 0)
    n, pos = _g6_parse_n(s)
    if n == 0:
        raise Graph6Error("zero-vertex graph is not supported", 0)
    if n > _G6_MAX_N:
        raise Graph6Error(f"declared size {n} exceeds graph6 limit", 0)
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    if len(s) - pos < nbytes:
        raise Graph6Error(
            f"truncated edge field: need {nbytes} bytes, have {len(s) - pos}", len(s)
        )
    if len(s) - pos > nbytes:
        raise Graph6Error("trailing garbage after edge field", pos + nbytes)
    masks = [0] * n
    i, j = 0, 1
    done = 0
    for k in range(nbytes):
        c = ord(s[pos + k]) - 63
        if not (0 <= c <= 63):
            raise Graph6Error(f"byte {s[pos + k]!r} outside graph6 alphabet", pos + k)
        for shift in range(5, -1, -1):
            if done >= nbits:
                if (c >> shift) & 1:
                    raise Graph6Error("nonzero padding bits", pos + k)
                continue
            if (c >> shift) & 1:
                masks[i] |= 1 << j
                masks[j] |= 1 << i
            done += 1
            i += 1
            if i == j:
                i = 0
                j += 1
    return Graph._from_masks(n, masks)


# -- generators --------------------------------------------------------------


def empty_graph(n: int) -> Graph:
    return Graph(n)


def complete_graph(n: int) -> Graph:
    full = (1 << n) - 1
    return Graph._from_masks(n, [full ^ (1 << v) for v in range(n)])


def path_graph(n: int) -> Graph:
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def star_graph(leaves: int) -> Graph:
    """Star with center 0 and the given number of leaves."""
    return Graph(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def complete_bipartite_graph(a: int, b: int) -> Graph:
    return Graph(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def petersen_graph() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    spokes = [(i, 5 + i) for i in range(5)]
    return Graph(10, outer + inner + spokes)


def disjoint_union(g: Graph, h: Graph) -> Graph:
    masks = list(g._adj) + [m << g.n for m in h._adj]
    return Graph._from_masks(g.n + h.n, masks)


def all_labeled_graphs(n: int) -> Iterator[Graph]:
    """Every labeled graph on n vertices, in edge-mask order.

    Edge bit k corresponds to the k-th pair in combinations(range(n), 2), so
    the sequence is deterministic.  There are 2^C(n,2) graphs; keep n small.
    """
    pairs = list(combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        adj = [0] * n
        m = mask
        while m:
            b = m & -m
            m ^= b
            u, v = pairs[b.bit_length() - 1]
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        yield Graph._from_masks(n, adj)


def random_graph(n: int, p, seed: int) -> Graph:
    """Erdos-Renyi G(n, p) with one uniform draw per vertex pair.

    Pairs are visited in lexicographic order, so the result is a pure
    function of (n, p, seed).
    """
    prob = Fraction(p)
    if not (0 <= prob <= 1):
        raise ValueError(f"edge probability {p} outside [0, 1]")
    if n < 1:
        raise ValueError("a graph needs at least one vertex")
    rng = random.Random(seed)
    masks = [0] * n
    for i in range(n - 1):
        for j in range(i + 1, n):
            if rng.random() < prob:
                masks[i] |= 1 << j
                masks[j] |= 1 << i
    return Graph._from_masks(n, masks)


@dataclass(frozen=True)
class ToughSample:
    """Outcome of rejection sampling: the graph found (or None) and trials spent."""

    graph: Graph | None
    trials: int


def sample_t_tough_graph(
    n: int, t, max_trials: int, seed: int, max_n: int | None = None
) -> ToughSample:
    """Rejection-sample a graph on n vertices with toughness at least t.

    Draws come from G(n, p) with p swept upward from 1/2 across the trial
    budget, since higher toughness needs denser graphs.  A draw is accepted
    when the cheap necessary condition (every degree at least 2t, so that no
    neighborhood is a violating cut) holds and the exact check confirms it.
    The degree gate also rejects complete graphs that are only vacuously
    t-tough, e.g. K_4 can never be accepted for t = 5/2.
    """
    from .toughness import is_t_tough  # deferred: toughness imports this module

    target = Fraction(t)
    if target < 0:
        raise ValueError("toughness target must be nonnegative")
    if n < 1:
        raise ValueError("a graph needs at least one vertex")
    if max_trials < 1:
        raise ValueError("need at least one trial")
    rng = random.Random(seed)
    for trial in range(max_trials):
        p = Fraction(1, 2) + Fraction(trial, 2 * max_trials)
        g = random_graph(n, p, rng.getrandbits(32))
        if any(m.bit_count() < 2 * target for m in g._adj):
            continue
        if is_t_tough(g, target, max_n=max_n):
            return ToughSample(g, trial + 1)
    return ToughSample(None, max_trials)
