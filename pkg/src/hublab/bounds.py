"""Hypercube hub-labeling bound machinery.

Exact-rational tables of pair counts N_k, per-distance dual weights y*_k,
psi(k) = N_k * y*_k, the disjoint-pair graphs behind them, LP builders for
the covering primal, the path-packing dual, and the distance-symmetric
("regular") LP, plus log-space asymptotics that recover the 2.5 growth
constant. Floats appear only in the log-space helpers; everything else is
fractions.Fraction.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import comb
from typing import Optional

from .graph import Graph, bfs_distances, popcount
from .lp import GEQ, LEQ, RationalLP

MAX_REGULAR_D = 4
MAX_DUAL_D = 3
MAX_PRIMAL_D = 2
MAX_PRIMAL_D_FORCED = 3


def pair_count(d: int, k: int) -> Fraction:
    """Number of unordered vertex pairs at Hamming distance k.

    Distance 0 counts each vertex paired with itself: N_0 = 2^d. For k >= 1
    the ordered count 2^d * C(d,k) is halved.
    """
    _check_k(d, k)
    if k == 0:
        return Fraction(1 << d)
    return Fraction((1 << d) * comb(d, k), 2)


def _check_k(d: int, k: int) -> None:
    if not 0 <= k <= d:
        raise ValueError(f"k={k} out of range for d={d}")


def component_density(d: int, k: int, i: int) -> Fraction:
    """Density (edges/vertices) of the disjoint-pair component on set sizes
    i and k-i: C(d,i)*C(d-i,k-i) / (C(d,i) + C(d,k-i)).

    The same expression covers both the bipartite (i != k-i) and the
    one-sided regular (i == k/2) component.
    """
    _check_k(d, k)
    if not 0 <= i <= k // 2:
        raise ValueError(f"i={i} out of range for k={k}")
    return Fraction(comb(d, i) * comb(d - i, k - i), comb(d, i) + comb(d, k - i))


def densest_component(d: int, k: int) -> tuple[int, Fraction]:
    """(i*, density) of the densest component; i* = floor(k/2).

    Verified by direct scan over all i. k = 0 is the lone self-pair
    component (one vertex, one loop): density 1.
    """
    _check_k(d, k)
    if k == 0:
        return 0, Fraction(1)
    best_i = k // 2
    best = component_density(d, k, best_i)
    for i in range(k // 2 + 1):
        assert component_density(d, k, i) <= best
    return best_i, best


def y_star(d: int, k: int) -> Fraction:
    """Maximum feasible per-distance dual weight for distance class k.

    1 for k = 0; otherwise the inverse density of the densest disjoint-pair
    component: 2/C(d-i,i) for k = 2i, and
    (C(d,i)+C(d,i+1)) / (C(d,i)*C(d-i,i+1)) for k = 2i+1.
    """
    _check_k(d, k)
    if k == 0:
        return Fraction(1)
    if k % 2 == 0:
        i = k // 2
        return Fraction(2, comb(d - i, i))
    i = k // 2
    return Fraction(comb(d, i) + comb(d, i + 1), comb(d, i) * comb(d - i, i + 1))


def psi(d: int, k: int) -> Fraction:
    """psi(k) = N_k * y*_k; max over k drives the label-size growth rate."""
    return pair_count(d, k) * y_star(d, k)


def psi_argmax(d: int) -> tuple[int, Fraction]:
    """Exact scan over k = 0..d; smallest maximizing k on ties."""
    best_k = 0
    best = psi(d, 0)
    for k in range(1, d + 1):
        p = psi(d, k)
        if p > best:
            best_k, best = k, p
    return best_k, best


def entropy(alpha: float) -> float:
    """Shannon entropy H(alpha) in bits."""
    if alpha in (0.0, 1.0):
        return 0.0
    return -alpha * math.log2(alpha) - (1 - alpha) * math.log2(1 - alpha)


def log2_comb(n: int, m: int) -> float:
    if m < 0 or m > n:
        return -math.inf
    return (
        math.lgamma(n + 1) - math.lgamma(m + 1) - math.lgamma(n - m + 1)
    ) / math.log(2)


def psi_log2(d: int, k: int) -> float:
    """log2 psi(k) via log-gamma; usable far beyond exact-table scale."""
    _check_k(d, k)
    if k == 0:
        return float(d)
    n_k = d + log2_comb(d, k) - 1.0
    if k % 2 == 0:
        i = k // 2
        ys = 1.0 - log2_comb(d - i, i)
    else:
        i = k // 2
        # C(d,i) + C(d,i+1) = C(d,i) * (1 + (d-i)/(i+1)); stays in log space
        ys = math.log2(1 + Fraction(d - i, i + 1)) - log2_comb(d - i, i + 1)
    return n_k + ys


def psi_argmax_log(d: int) -> tuple[int, float]:
    """Argmax of psi in log space, for dimensions where exact scans are slow."""
    best_k, best = 0, psi_log2(d, 0)
    for k in range(1, d + 1):
        p = psi_log2(d, k)
        if p > best:
            best_k, best = k, p
    return best_k, best


def lemma_manip_check(s: Fraction, t: Fraction, alpha: Fraction, beta: Fraction) -> bool:
    """Predicate alpha*t + s/beta >= t + s for 0 <= s <= t, alpha >= beta >= 1."""
    s, t, alpha, beta = Fraction(s), Fraction(t), Fraction(alpha), Fraction(beta)
    if not (0 <= s <= t):
        raise ValueError("need 0 <= s <= t")
    if not (alpha >= beta >= 1):
        raise ValueError("need alpha >= beta >= 1")
    return alpha * t + s / beta >= t + s


def middle_expression(d: int, k: int, x: int) -> Fraction:
    """(C(d,x) + C(d,k-x)) / (C(d,x)*C(d-x,k-x)): inverse component density
    as a function of the split point x."""
    return Fraction(comb(d, x) + comb(d, k - x), comb(d, x) * comb(d - x, k - x))


# --- disjoint-pair graphs and their brute-force densest subgraph ---

def disjoint_pair_edges(d: int, k: int) -> list[tuple[int, int]]:
    """Edges of the distance-k pair graph through the all-zeros vertex:
    {i, j} with i & j == 0 and popcount(i | j) == k. k = 0 gives the single
    self-loop (0, 0)."""
    _check_k(d, k)
    n = 1 << d
    if k == 0:
        return [(0, 0)]
    edges = []
    for i in range(n):
        pi = popcount(i)
        if pi > k:
            continue
        rest = ((n - 1) ^ i)
        # enumerate j disjoint from i with popcount k - pi, j > i for i > 0
        for j in _submasks_of_size(rest, k - pi):
            if i < j:
                edges.append((i, j))
    return edges


def _submasks_of_size(mask: int, size: int):
    bits = [b for b in range(mask.bit_length()) if (mask >> b) & 1]
    if size > len(bits):
        return
    for combo in combinations(bits, size):
        v = 0
        for b in combo:
            v |= 1 << b
        yield v


def brute_densest_subgraph(d: int, k: int) -> Fraction:
    """Max density over all nonempty vertex subsets of the distance-k pair
    graph, by exhaustive enumeration per connected component.

    A self-loop counts as one edge and contributes degree one. Components
    must have at most 24 vertices (covers every k at d <= 4).
    """
    edges = disjoint_pair_edges(d, k)
    if k == 0:
        return Fraction(1)
    # split into components of the pair graph
    adj: dict = {}
    for a, b in edges:
        adj.setdefault(a, set()).add(b)
        adj.setdefault(b, set()).add(a)
    seen = set()
    best = Fraction(0)
    for start in sorted(adj):
        if start in seen:
            continue
        comp = []
        stack = [start]
        seen.add(start)
        while stack:
            u = stack.pop()
            comp.append(u)
            for w in adj[u]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        if len(comp) > 24:
            raise ValueError(f"component of {len(comp)} vertices too large to enumerate")
        comp.sort()
        index = {v: i for i, v in enumerate(comp)}
        comp_edges = [
            (index[a], index[b]) for a, b in edges if a in index and b in index
        ]
        for subset in range(1, 1 << len(comp)):
            cnt = 0
            for a, b in comp_edges:
                if (subset >> a) & 1 and (subset >> b) & 1:
                    cnt += 1
            if cnt:
                dens = Fraction(cnt, subset.bit_count())
                if dens > best:
                    best = dens
    return best


# --- LP builders for the covering primal, packing dual, and regular LP ---

def _on_path(v: int, i: int, j: int) -> bool:
    # v lies on a shortest i-j path in the hypercube
    return (v ^ i) & (v ^ j) == 0


def _dedup_rows(rows: list, row_names: list) -> tuple[list, list]:
    """Keep one copy per coefficient vector (tightest rhs); drop rows
    dominated by another row with componentwise-larger coefficients and
    smaller-or-equal rhs. Preserves the feasible set of a <=-constrained,
    nonnegative-variable program."""
    best: dict = {}
    for (coeffs, rel, rhs), name in zip(rows, row_names):
        key = tuple(coeffs)
        if key not in best or rhs < best[key][0]:
            best[key] = (rhs, rel, name)
    items = [(list(k), rel, rhs, name) for k, (rhs, rel, name) in best.items()]
    if len(items) > 600:
        # Pareto pruning is quadratic; key dedup alone is enough above this
        items.sort(key=lambda r: r[3])
        return [(c, rel, rhs) for c, rel, rhs, _ in items], [n for _, _, _, n in items]
    kept = []
    for a in items:
        # coefficient vectors are distinct after key dedup, so domination by
        # (componentwise >= coeffs, <= rhs) is strict and never mutual
        dominated = any(
            b is not a and b[2] <= a[2] and all(cb >= ca for cb, ca in zip(b[0], a[0]))
            for b in items
        )
        if not dominated:
            kept.append(a)
    kept.sort(key=lambda r: r[3])
    return [(c, rel, rhs) for c, rel, rhs, _ in kept], [n for _, _, _, n in kept]


def build_regular_lp(d: int, self_pairs: bool = True) -> RationalLP:
    """Distance-symmetric packing LP: maximize sum_k N_k*y_k subject to, for
    every vertex subset S, sum over pairs within S on a shortest path
    through the all-zeros vertex of y_dist <= |S|.

    Constraints are materialized for all 2^(2^d) subsets and then
    deduplicated; identical coefficient vectors keep the smallest |S|.
    """
    if not 0 <= d <= MAX_REGULAR_D:
        raise ValueError(f"regular LP materialization capped at d <= {MAX_REGULAR_D}")
    n = 1 << d
    ks = list(range(0 if self_pairs else 1, d + 1))
    kpos = {k: idx for idx, k in enumerate(ks)}
    pairs = []  # (bitmask over vertices, k)
    for k in range(1, d + 1):
        for i, j in disjoint_pair_edges(d, k):
            pairs.append(((1 << i) | (1 << j), k))
    if self_pairs:
        pairs.append((1, 0))  # the self-pair at the all-zeros vertex
    rows = []
    names = []
    for S in range(1, 1 << n):
        coeffs = [Fraction(0)] * len(ks)
        for pm, k in pairs:
            if S & pm == pm:
                coeffs[kpos[k]] += 1
        rows.append((coeffs, LEQ, Fraction(S.bit_count())))
        names.append(f"S={S:#x}")
    rows, names = _dedup_rows(rows, names)
    return RationalLP(
        sense="max",
        objective=[pair_count(d, k) for k in ks],
        rows=rows,
        var_names=[f"y~{k}" for k in ks],
        row_names=names,
        name=f"regular-lp-d{d}",
    )


def _all_pairs(n: int, self_pairs: bool) -> list[tuple[int, int]]:
    ps = [(i, j) for i in range(n) for j in range(i + 1, n)]
    if self_pairs:
        ps = [(i, i) for i in range(n)] + ps
        ps.sort()
    return ps


def build_dual_lp(d: int, self_pairs: bool = True) -> RationalLP:
    """Path-packing dual: one variable per unordered vertex pair, one
    constraint per (vertex v, subset S): pairs within S with v on a
    shortest path between them carry total weight at most |S|."""
    if not 0 <= d <= MAX_DUAL_D:
        raise ValueError(f"dual LP materialization capped at d <= {MAX_DUAL_D}")
    n = 1 << d
    pairs = _all_pairs(n, self_pairs)
    pidx = {p: idx for idx, p in enumerate(pairs)}
    covered = {}  # v -> [(pairmask, pair index)]
    for v in range(n):
        lst = []
        for i, j in pairs:
            if _on_path(v, i, j):
                lst.append(((1 << i) | (1 << j), pidx[(i, j)]))
        covered[v] = lst
    rows = []
    names = []
    for v in range(n):
        lst = covered[v]
        for S in range(1, 1 << n):
            coeffs = [Fraction(0)] * len(pairs)
            any_set = False
            for pm, idx in lst:
                if S & pm == pm:
                    coeffs[idx] = Fraction(1)
                    any_set = True
            if any_set:
                rows.append((coeffs, LEQ, Fraction(S.bit_count())))
                names.append(f"v={v},S={S:#x}")
    rows, names = _dedup_rows(rows, names)
    return RationalLP(
        sense="max",
        objective=[Fraction(1)] * len(pairs),
        rows=rows,
        var_names=[f"y[{i},{j}]" for i, j in pairs],
        row_names=names,
        name=f"dual-lp-d{d}",
    )


def build_primal_lp(d: int, self_pairs: bool = True, allow_large: bool = False) -> RationalLP:
    """Fractional covering LP: variables x[v,S] >= 0, constraint per pair
    {i,j}: sum over S containing both and v on a shortest i-j path of
    x[v,S] >= 1; minimize sum |S|*x[v,S]."""
    cap = MAX_PRIMAL_D_FORCED if allow_large else MAX_PRIMAL_D
    if not 0 <= d <= cap:
        raise ValueError(
            f"primal LP materialization capped at d <= {cap}"
            + ("" if allow_large else " (pass allow_large=True up to 3)")
        )
    n = 1 << d
    return _primal_lp_generic(
        n,
        _on_path,
        self_pairs=self_pairs,
        name=f"primal-lp-d{d}",
    )


def build_primal_lp_graph(g: Graph, self_pairs: bool = True) -> RationalLP:
    """Covering LP for an arbitrary tiny graph (n <= 4), with the on-path
    test taken from BFS distances."""
    if g.n > 4:
        raise ValueError("general-graph primal LP capped at n <= 4")
    dist = [bfs_distances(g, s) for s in range(g.n)]

    def on_path(v, i, j):
        return dist[i][v] + dist[v][j] == dist[i][j]

    return _primal_lp_generic(g.n, on_path, self_pairs=self_pairs, name=f"primal-lp-n{g.n}")


def _primal_lp_generic(n, on_path, self_pairs, name) -> RationalLP:
    pairs = _all_pairs(n, self_pairs)
    variables = []  # (v, S)
    for v in range(n):
        for S in range(1, 1 << n):
            variables.append((v, S))
    vidx = {vs: i for i, vs in enumerate(variables)}
    rows = []
    names = []
    for i, j in pairs:
        coeffs = [Fraction(0)] * len(variables)
        pm = (1 << i) | (1 << j)
        for v in range(n):
            if not on_path(v, i, j):
                continue
            for S in range(1, 1 << n):
                if S & pm == pm:
                    coeffs[vidx[(v, S)]] = Fraction(1)
        rows.append((coeffs, GEQ, Fraction(1)))
        names.append(f"pair[{i},{j}]")
    return RationalLP(
        sense="min",
        objective=[Fraction(S.bit_count()) for _, S in variables],
        rows=rows,
        var_names=[f"x[{v},{S:#x}]" for v, S in variables],
        row_names=names,
        name=name,
    )


# --- reports ---

@dataclass
class BoundReport:
    d: int
    table: list  # (k, N_k, y_star, psi) rows, exact rationals
    argmax_k: int
    max_psi: Fraction
    ropt: Optional[Fraction] = None
    lopt: Optional[Fraction] = None
    opt: Optional[int] = None
    sandwiches: Optional[list] = None  # provenance strings

    def __post_init__(self):
        for _, nk, ys, ps in self.table:
            assert ps == nk * ys


def bound_report(
    d: int,
    with_lp: bool = False,
    with_oracle: bool = False,
    self_pairs: bool = True,
) -> BoundReport:
    """Exact psi table plus optional LP optima and oracle sandwiches."""
    table = [(k, pair_count(d, k), y_star(d, k), psi(d, k)) for k in range(d + 1)]
    k_star, max_psi = psi_argmax(d)
    ropt = lopt = opt = None
    sandwiches = []
    if with_lp:
        from .lp import solve

        if d <= MAX_REGULAR_D:
            ropt = solve(build_regular_lp(d, self_pairs=self_pairs)).value
            sandwiches.append(
                f"max_k psi(k) = {max_psi} <= ROPT = {ropt} <= "
                f"(d+1)*max_k psi(k) = {(d + 1) * max_psi}"
            )
            assert max_psi <= ropt <= (d + 1) * max_psi
        # pair-packing solve at d=3 takes minutes in exact rationals; only
        # report it where it is cheap (the builder itself still allows d=3)
        if d <= MAX_PRIMAL_D:
            lopt = solve(build_dual_lp(d, self_pairs=self_pairs)).value
            sandwiches.append(f"LOPT = {lopt} (path-packing dual optimum)")
    if with_oracle and d <= 2:
        from .graph import hypercube
        from .oracle import brute_optimal_hl

        opt = brute_optimal_hl(hypercube(d), self_pairs=self_pairs).size
        if lopt is not None:
            sandwiches.append(
                f"ceil(LOPT) = {-(-lopt.numerator // lopt.denominator)} <= "
                f"OPT = {opt} <= 3^d = {3 ** d}"
            )
    return BoundReport(
        d=d,
        table=table,
        argmax_k=k_star,
        max_psi=max_psi,
        ropt=ropt,
        lopt=lopt,
        opt=opt,
        sandwiches=sandwiches or None,
    )
