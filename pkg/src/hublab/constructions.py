"""Explicit hypercube labelings: subset HHL, canonical-from-order, half-split HL.

Bit convention: internally bit 0 is the least significant bit. The "first"
half of an id means its most significant floor(d/2) bits, the "last" half
the remaining ceil(d/2) least significant bits.
"""
from __future__ import annotations

import random
from typing import Optional, Sequence

from .graph import (
    BudgetError,
    Graph,
    MAX_HYPERCUBE_DIM,
    hypercube,
    induced_subcube,
    popcount,
)
from .labeling import Labeling


class VertexOrder:
    """Importance order on hypercube vertices, least to most important.

    rank(v) in [1..n]; higher rank = more important.
    """

    def __init__(self, vertices_low_to_high: Sequence[int]):
        seq = list(vertices_low_to_high)
        n = len(seq)
        if sorted(seq) != list(range(n)):
            raise ValueError("order must be a bijection on 0..n-1")
        self.sequence = tuple(seq)
        self._rank = [0] * n
        for r, v in enumerate(seq, start=1):
            self._rank[v] = r

    @property
    def n(self) -> int:
        return len(self.sequence)

    def rank(self, v: int) -> int:
        return self._rank[v]

    @classmethod
    def reverse_id(cls, d: int) -> "VertexOrder":
        """Importance decreasing in vertex id; yields the subset labeling."""
        n = 1 << d
        return cls(list(range(n - 1, -1, -1)))

    @classmethod
    def random(cls, d: int, seed: int) -> "VertexOrder":
        rng = random.Random(seed)
        seq = list(range(1 << d))
        rng.shuffle(seq)
        return cls(seq)


def _check_dim(d: int) -> None:
    if d < 0:
        raise ValueError("dimension must be nonnegative")
    if d > MAX_HYPERCUBE_DIM:
        raise BudgetError(f"dimension {d} exceeds budget {MAX_HYPERCUBE_DIM}")


def _cube_fingerprint(d: int):
    return hypercube(d).fingerprint()


def subset_hhl(d: int, graph: Optional[Graph] = None) -> Labeling:
    """L(v) = all ids that are bit-subsets of v; hierarchical, size 3^d."""
    _check_dim(d)
    n = 1 << d
    labels = []
    for v in range(n):
        pv = popcount(v)
        hubs = []
        sub = v
        while True:
            hubs.append((sub, pv - popcount(sub)))
            if sub == 0:
                break
            sub = (sub - 1) & v
        hubs.sort()
        labels.append(hubs)
    fp = graph.fingerprint() if graph is not None else _cube_fingerprint(d)
    return Labeling(labels, fingerprint=fp)


def canonical_labeling(
    d: int, order: VertexOrder, graph: Optional[Graph] = None
) -> Labeling:
    """w is a hub of v iff w is the most important vertex of the subcube
    spanned by v and w. Hierarchical and minimal for the given order."""
    _check_dim(d)
    n = 1 << d
    if order.n != n:
        raise ValueError(f"order covers {order.n} vertices, hypercube has {n}")
    rank = order._rank
    labels = []
    for v in range(n):
        hubs = []
        for w in range(n):
            free = v ^ w
            # argmax rank over members of the subcube spanned by v and w
            best = w
            best_rank = rank[w]
            sub = free
            while sub:
                u = v ^ sub
                if rank[u] > best_rank:
                    best = u
                    best_rank = rank[u]
                sub = (sub - 1) & free
            if rank[v] > best_rank:
                best = v
            if best == w:
                hubs.append((w, popcount(free)))
        labels.append(hubs)
    fp = graph.fingerprint() if graph is not None else _cube_fingerprint(d)
    return Labeling(labels, fingerprint=fp)


def halfsplit_sizes(d: int) -> tuple[int, int]:
    """(deduplicated total, two-family formula total) for the half-split HL."""
    lo, hi = d // 2, d - d // 2
    n = 1 << d
    return n * ((1 << hi) + (1 << lo) - 1), n * ((1 << hi) + (1 << lo))


def halfsplit_hl(d: int, graph: Optional[Graph] = None) -> Labeling:
    """L(v) = ids sharing v's first floor(d/2) bits, plus ids sharing v's
    last ceil(d/2) bits. Valid HL, non-hierarchical for d >= 1.

    Hubs are stored deduplicated (v belongs to both families); the
    two-family size formula remains an upper bound, see halfsplit_sizes.
    """
    _check_dim(d)
    n = 1 << d
    last_len = d - d // 2  # number of low (last) bits fixed by family B
    low_mask = (1 << last_len) - 1
    labels = []
    for v in range(n):
        head = v & ~low_mask
        tail = v & low_mask
        hubs = {head | t for t in range(1 << last_len)}
        hubs.update((h << last_len) | tail for h in range(1 << (d - last_len)))
        labels.append(sorted((w, popcount(v ^ w)) for w in hubs))
    fp = graph.fingerprint() if graph is not None else _cube_fingerprint(d)
    return Labeling(labels, fingerprint=fp)


def halfsplit_common_hub(d: int, s: int, t: int) -> int:
    """The on-path common hub (first half of t, last half of s)."""
    last_len = d - d // 2
    low_mask = (1 << last_len) - 1
    return (t & ~low_mask) | (s & low_mask)
