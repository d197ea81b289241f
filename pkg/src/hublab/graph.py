"""Undirected unit-length graphs, hypercube generation, and hypercube helpers."""
from __future__ import annotations

import hashlib
import random
from dataclasses import dataclass
from math import inf
from typing import Iterable, Iterator, Optional

MAX_HYPERCUBE_DIM = 20

INFINITY = inf


class BudgetError(ValueError):
    """Requested instance exceeds the configured size budget."""


class GraphFormatError(ValueError):
    """Malformed graph file."""


def popcount(x: int) -> int:
    return x.bit_count()


class Graph:
    """Simple undirected graph over dense integer vertex ids.

    Immutable after construction. `is_hypercube` is set to the dimension d
    when the graph is a d-dimensional hypercube with the standard bit-flip
    vertex ids; distance queries then avoid BFS (Hamming distance).
    """

    __slots__ = ("n", "edges", "adj", "is_hypercube", "_fingerprint")

    def __init__(
        self,
        n: int,
        edges: Iterable[tuple[int, int]],
        is_hypercube: Optional[int] = None,
    ):
        self.n = n
        seen = set()
        norm = []
        adj: list[list[int]] = [[] for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphFormatError(f"edge ({u},{v}) out of range for n={n}")
            if u == v:
                raise GraphFormatError(f"self-loop at vertex {u}")
            e = (u, v) if u < v else (v, u)
            if e in seen:
                raise GraphFormatError(f"duplicate edge {e}")
            seen.add(e)
            norm.append(e)
            adj[u].append(v)
            adj[v].append(u)
        norm.sort()
        self.edges = tuple(norm)
        self.adj = tuple(tuple(sorted(a)) for a in adj)
        if is_hypercube is not None:
            d = is_hypercube
            if n != 1 << d:
                raise GraphFormatError(f"hypercube d={d} needs 2^{d} vertices, got {n}")
            expected_m = d * (1 << (d - 1)) if d > 0 else 0
            if len(self.edges) != expected_m:
                raise GraphFormatError(f"hypercube d={d} has wrong edge count")
            for u, v in self.edges:
                if popcount(u ^ v) != 1:
                    raise GraphFormatError(f"edge ({u},{v}) is not a bit flip")
        self.is_hypercube = is_hypercube
        self._fingerprint = None

    @property
    def m(self) -> int:
        return len(self.edges)

    def fingerprint(self) -> tuple[int, int, str]:
        """(n, m, hash) triple binding labelings to this graph."""
        if self._fingerprint is None:
            h = hashlib.sha256()
            h.update(f"{self.n} {self.m}".encode())
            for u, v in self.edges:
                h.update(f" {u},{v}".encode())
            self._fingerprint = (self.n, self.m, h.hexdigest()[:16])
        return self._fingerprint

    def distance(self, u: int, v: int) -> float:
        """Exact distance; arithmetic on hypercubes, BFS otherwise."""
        if self.is_hypercube is not None:
            return popcount(u ^ v)
        return bfs_distances(self, u)[v]

    def is_connected(self) -> bool:
        if self.n == 0:
            return True
        return all(x != INFINITY for x in bfs_distances(self, 0))


def hypercube(d: int) -> Graph:
    """d-dimensional hypercube: ids 0..2^d-1, edges between ids differing in one bit."""
    if d < 0:
        raise ValueError("dimension must be nonnegative")
    if d > MAX_HYPERCUBE_DIM:
        raise BudgetError(f"hypercube dimension {d} exceeds budget {MAX_HYPERCUBE_DIM}")
    n = 1 << d
    edges = []
    for v in range(n):
        for b in range(d):
            w = v ^ (1 << b)
            if w > v:
                edges.append((v, w))
    return Graph(n, edges, is_hypercube=d)


def bfs_distances(g: Graph, source: int) -> list:
    """Unweighted shortest-path distances from source; INFINITY when unreachable."""
    if not (0 <= source < g.n):
        raise ValueError(f"invalid source {source}")
    dist = [INFINITY] * g.n
    dist[source] = 0
    frontier = [source]
    d = 0
    while frontier:
        d += 1
        nxt = []
        for u in frontier:
            for w in g.adj[u]:
                if dist[w] == INFINITY:
                    dist[w] = d
                    nxt.append(w)
        frontier = nxt
    return dist


@dataclass(frozen=True)
class SubcubeDescriptor:
    """Subcube of vertices agreeing with `anchor` outside `free_mask`.

    Membership: u is in the subcube iff (u ^ anchor) & ~free_mask == 0.
    """

    anchor: int
    free_mask: int

    def __contains__(self, u: int) -> bool:
        return (u ^ self.anchor) & ~self.free_mask == 0

    def size(self) -> int:
        return 1 << popcount(self.free_mask)

    def members(self) -> Iterator[int]:
        """All member ids (2^popcount(free_mask) of them)."""
        base = self.anchor & ~self.free_mask
        m = self.free_mask
        sub = m
        while True:
            yield base | sub
            if sub == 0:
                return
            sub = (sub - 1) & m


def induced_subcube(v: int, w: int) -> SubcubeDescriptor:
    """Subcube spanned by v and w: exactly the vertices on shortest v-w paths."""
    return SubcubeDescriptor(anchor=v, free_mask=v ^ w)


@dataclass(frozen=True)
class HypercubeAutomorphism:
    """XOR translation composed with a coordinate permutation.

    phi(u) permutes the bits of u (bit b of u lands on bit bit_perm[b]) and
    then XORs with xor_mask. Distance-preserving bijection of the hypercube.
    """

    dim: int
    xor_mask: int
    bit_perm: tuple[int, ...]

    def __call__(self, u: int) -> int:
        r = 0
        for b in range(self.dim):
            if (u >> b) & 1:
                r |= 1 << self.bit_perm[b]
        return r ^ self.xor_mask

    def as_table(self) -> list[int]:
        return [self(u) for u in range(1 << self.dim)]


def random_automorphism(d: int, seed: int) -> HypercubeAutomorphism:
    """Uniformly random hypercube automorphism of the translation+permutation kind."""
    rng = random.Random(seed)
    p = rng.randrange(1 << d) if d > 0 else 0
    perm = list(range(d))
    rng.shuffle(perm)
    return HypercubeAutomorphism(dim=d, xor_mask=p, bit_perm=tuple(perm))


# --- text format: line `n m`, then m lines `u v`; `#` comments ignored ---

def save_graph(g: Graph, path: str) -> None:
    with open(path, "w") as f:
        f.write(serialize_graph(g))


def serialize_graph(g: Graph) -> str:
    lines = []
    if g.is_hypercube is not None:
        lines.append(f"# hypercube d={g.is_hypercube}")
    lines.append(f"{g.n} {g.m}")
    lines.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"


def parse_graph(text: str) -> Graph:
    hypercube_d = None
    header = None
    edges = []
    m_expected = 0
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            parts = line[1:].split()
            if parts and parts[0] == "hypercube":
                for p in parts[1:]:
                    if p.startswith("d="):
                        hypercube_d = int(p[2:])
            continue
        parts = line.split()
        if header is None:
            if len(parts) != 2:
                raise GraphFormatError(f"line {lineno}: expected 'n m' header")
            header = (int(parts[0]), int(parts[1]))
            m_expected = header[1]
            continue
        if len(parts) != 2:
            raise GraphFormatError(f"line {lineno}: expected 'u v'")
        edges.append((int(parts[0]), int(parts[1])))
    if header is None:
        raise GraphFormatError("missing 'n m' header")
    if len(edges) != m_expected:
        raise GraphFormatError(f"header declares {m_expected} edges, found {len(edges)}")
    return Graph(header[0], edges, is_hypercube=hypercube_d)


def load_graph(path: str) -> Graph:
    with open(path) as f:
        return parse_graph(f.read())
