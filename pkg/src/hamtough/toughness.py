"""Exact graph toughness by exhaustive cut-set enumeration.

The toughness of a non-complete graph G is the minimum of |C| / c(G - C)
over all cut-sets C, where c counts connected components.  Complete graphs
have no cut-set and get the Infinite marker; disconnected graphs have
toughness 0, witnessed by the empty cut.

Pruning soundness.  Candidate cuts are enumerated by increasing size k.
Removing k vertices leaves n - k, so any cut of size k has ratio at least
k / (n - k); that bound is increasing in k, so once it reaches the best
ratio found, no larger cut can improve on it and enumeration stops.  The
minimum itself is never approximated.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .graphs import Graph, _count_components_masks
from .limits import (
    DEFAULT_TOUGHNESS_MAX_N,
    InstanceTimeout,
    check_cap,
    expired,
)

__all__ = [
    "INFINITE",
    "ToughnessCheck",
    "ToughnessReport",
    "is_t_tough",
    "toughness",
]


class _InfiniteToughness:
    """Order-top marker for graphs with no cut-set.  Compares above every number."""

    __slots__ = ()

    def __repr__(self) -> str:
        return "Infinite"

    def __lt__(self, other) -> bool:
        return False

    def __le__(self, other) -> bool:
        return isinstance(other, _InfiniteToughness)

    def __gt__(self, other) -> bool:
        return not isinstance(other, _InfiniteToughness)

    def __ge__(self, other) -> bool:
        return True


INFINITE = _InfiniteToughness()


@dataclass(frozen=True)
class ToughnessReport:
    """Exact toughness value plus a cut-set attaining it.

    ``witness`` is None exactly when the value is Infinite; a disconnected
    graph reports value 0 with the empty cut as witness.
    """

    value: Fraction | _InfiniteToughness
    witness: frozenset[int] | None

    @property
    def is_infinite(self) -> bool:
        return isinstance(self.value, _InfiniteToughness)

    def at_least(self, t) -> bool:
        return self.value >= Fraction(t)


@dataclass(frozen=True)
class ToughnessCheck:
    """Result of a single t-toughness test; falsy when a violating cut exists."""

    holds: bool
    violating_cutset: frozenset[int] | None

    def __bool__(self) -> bool:
        return self.holds


def toughness(
    g: Graph, max_n: int | None = None, deadline: float | None = None
) -> ToughnessReport:
    """Exact toughness with a minimizing cut-set.

    Ties are resolved toward the smallest cut, then lexicographically, so the
    witness is deterministic.  Raises InstanceTooLarge above the size cap
    (default 24, overridable via max_n or TOUGH_CLOSURE_MAX_N).
    """
    n = g.n
    check_cap(n, max_n, DEFAULT_TOUGHNESS_MAX_N, "toughness")
    if g.is_complete():
        return ToughnessReport(INFINITE, None)
    adj = g._adj
    full = (1 << n) - 1
    if _count_components_masks(adj, full) > 1:
        return ToughnessReport(Fraction(0), frozenset())
    best: Fraction | None = None
    best_cut: tuple[int, ...] = ()
    steps = 0
    for k in range(1, n - 1):
        # Any size-k cut has ratio >= k/(n-k); increasing in k, so this is final.
        if best is not None and Fraction(k, n - k) >= best:
            break
        for cut in combinations(range(n), k):
            steps += 1
            if (steps & 2047) == 0 and expired(deadline):
                raise InstanceTimeout("toughness enumeration timed out")
            mask = 0
            for v in cut:
                mask |= 1 << v
            c = _count_components_masks(adj, full ^ mask)
            if c >= 2:
                ratio = Fraction(k, c)
                if best is None or ratio < best:
                    best = ratio
                    best_cut = cut
    assert best is not None  # connected non-complete graphs always have a cut-set
    return ToughnessReport(best, frozenset(best_cut))


def is_t_tough(
    g: Graph, t, max_n: int | None = None, deadline: float | None = None
) -> ToughnessCheck:
    """Decide t * c(G - C) <= |C| for every cut-set C.

    Cheaper than computing toughness when the answer is no: vertex
    neighborhoods are tried first (a vertex of degree below 2t with a
    non-dominating neighborhood always yields a violation), then candidate
    cuts small enough to violate are swept exhaustively.
    """
    t = Fraction(t)
    if t < 0:
        raise ValueError("toughness threshold must be nonnegative")
    n = g.n
    check_cap(n, max_n, DEFAULT_TOUGHNESS_MAX_N, "toughness check")
    if t == 0:
        return ToughnessCheck(True, None)
    if g.is_complete():
        return ToughnessCheck(True, None)
    adj = g._adj
    full = (1 << n) - 1
    if _count_components_masks(adj, full) > 1:
        return ToughnessCheck(False, frozenset())
    for v in range(n):
        cmask = adj[v]
        c = _count_components_masks(adj, full ^ cmask)
        if c >= 2 and t * c > cmask.bit_count():
            return ToughnessCheck(False, g.neighbors(v))
    # A violating cut needs t * c > k with c <= n - k, hence k < t*n/(t+1).
    k_limit = t * n / (t + 1)
    steps = 0
    for mask in range(1, full):
        k = mask.bit_count()
        if k >= k_limit:
            continue
        steps += 1
        if (steps & 2047) == 0 and expired(deadline):
            raise InstanceTimeout("toughness check timed out")
        c = _count_components_masks(adj, full ^ mask)
        if c >= 2 and t * c > k:
            return ToughnessCheck(False, frozenset(_mask_bits(mask)))
    return ToughnessCheck(True, None)


def _mask_bits(mask: int) -> list[int]:
    out = []
    while mask:
        b = mask & -mask
        mask ^= b
        out.append(b.bit_length() - 1)
    return out
