"""Brute-force ground truth at toy scale.

`brute_optimal_hl` certifies the exact minimum hub labeling size of a graph
with at most 6 vertices by branch and bound over hub-membership decisions.
`brute_optimal_hhl_hypercube` certifies the minimum hierarchical labeling
size of a tiny hypercube by enumerating all vertex orders and taking the
canonical labeling of each (canonical labelings are minimal for their
order, so the search over orders covers all hierarchical optima).
"""
from __future__ import annotations

import time
from dataclasses import dataclass
from itertools import permutations
from typing import Optional

from .constructions import VertexOrder, canonical_labeling
from .graph import Graph, bfs_distances, hypercube
from .labeling import Labeling, total_size

MAX_BRUTE_HL_N = 6
MAX_BRUTE_HHL_D = 3

ORACLE_VERSION = "bb-1"


@dataclass
class OracleResult:
    size: int
    labeling: Optional[Labeling]
    nodes_explored: int
    elapsed: float
    oracle_version: str = ORACLE_VERSION


def brute_optimal_hl(g: Graph, self_pairs: bool = True) -> OracleResult:
    """Exact minimum labeling size by branch and bound.

    State is the set of chosen (hub, vertex) memberships; branching picks
    the uncovered pair with the fewest on-path hub options and tries each
    option, cheapest membership increment first. The incumbent starts from
    the greedy labeling, so the search only has to certify optimality.
    """
    n = g.n
    if n > MAX_BRUTE_HL_N:
        raise ValueError(f"brute-force HL search capped at n <= {MAX_BRUTE_HL_N}")
    t0 = time.monotonic()
    if n == 0:
        return OracleResult(0, Labeling([], fingerprint=g.fingerprint()), 0, 0.0)
    if not g.is_connected():
        raise ValueError("cover is impossible for a disconnected graph")
    dist = [bfs_distances(g, s) for s in range(n)]

    pairs = []
    for i in range(n):
        for j in range(i, n):
            if i == j and not self_pairs:
                continue
            opts = [v for v in range(n) if dist[i][v] + dist[v][j] == dist[i][j]]
            pairs.append(((i, j), opts))
    # fail-first: branch on pairs with the fewest covering options
    pairs.sort(key=lambda pr: (len(pr[1]), pr[0]))

    from .greedy import greedy_hl

    seed = greedy_hl(g)
    incumbent_size = total_size(seed)
    incumbent = {(h, v) for v in range(n) for h, _ in seed.labels[v]}

    chosen: set = set()
    nodes = 0

    def lower_bound(idx: int, cost: int) -> int:
        # each remaining uncovered self-pair forces its own membership
        extra = 0
        for (i, j), _ in pairs[idx:]:
            if i == j and (i, i) not in chosen:
                extra += 1
        return cost + extra

    def covered(i: int, j: int) -> bool:
        return any(
            (v, i) in chosen and (v, j) in chosen
            for v in range(n)
            if dist[i][v] + dist[v][j] == dist[i][j]
        )

    def search(idx: int, cost: int) -> None:
        nonlocal nodes, incumbent_size, incumbent
        nodes += 1
        while idx < len(pairs) and covered(*pairs[idx][0]):
            idx += 1
        if idx == len(pairs):
            if cost < incumbent_size:
                incumbent_size = cost
                incumbent = set(chosen)
            return
        if lower_bound(idx, cost) >= incumbent_size:
            return
        (i, j), opts = pairs[idx]
        branches = []
        for v in opts:
            add = [(v, i), (v, j)] if i != j else [(v, i)]
            add = [a for a in add if a not in chosen]
            branches.append((len(add), v, add))
        branches.sort()
        for inc, _, add in branches:
            for a in add:
                chosen.add(a)
            search(idx + 1, cost + inc)
            for a in add:
                chosen.discard(a)

    search(0, 0)
    labels = [[] for _ in range(n)]
    for h, v in sorted(incumbent):
        labels[v].append((h, dist[v][h]))
    witness = Labeling(
        [sorted(l) for l in labels], fingerprint=g.fingerprint()
    )
    return OracleResult(
        size=incumbent_size,
        labeling=witness,
        nodes_explored=nodes,
        elapsed=time.monotonic() - t0,
    )


def brute_optimal_hhl_hypercube(d: int) -> OracleResult:
    """Minimum canonical-labeling size over all vertex orders of the
    d-dimensional hypercube (d <= 3: at most 8! orders)."""
    if not 0 <= d <= MAX_BRUTE_HHL_D:
        raise ValueError(f"order enumeration capped at d <= {MAX_BRUTE_HHL_D}")
    t0 = time.monotonic()
    n = 1 << d
    # members of every spanned subcube, precomputed per (v, free-mask)
    members = {}
    for free in range(n):
        sub = free
        lst = []
        while True:
            lst.append(sub)
            if sub == 0:
                break
            sub = (sub - 1) & free
        members[free] = lst
    best_size = None
    best_order = None
    explored = 0
    for perm in permutations(range(n)):
        explored += 1
        rank = [0] * n
        for r, v in enumerate(perm, start=1):
            rank[v] = r
        size = 0
        for v in range(n):
            for w in range(n):
                free = v ^ w
                rw = rank[w]
                if all(rank[v ^ s] <= rw for s in members[free]):
                    size += 1
        if best_size is None or size < best_size:
            best_size = size
            best_order = perm
    witness = canonical_labeling(d, VertexOrder(list(best_order)))
    return OracleResult(
        size=best_size,
        labeling=witness,
        nodes_explored=explored,
        elapsed=time.monotonic() - t0,
    )
