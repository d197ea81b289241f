import math
import random
from fractions import Fraction
from math import comb

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hublab import bounds as B
from hublab.graph import hypercube, popcount
from hublab.lp import solve

F = Fraction


def test_pair_count_examples():
    assert [B.pair_count(2, k) for k in range(3)] == [4, 4, 2]
    assert B.pair_count(3, 2) == 12


@pytest.mark.parametrize("d", range(7))
def test_pair_count_matches_enumeration(d):
    n = 1 << d
    counts = [0] * (d + 1)
    for i in range(n):
        for j in range(i, n):
            counts[popcount(i ^ j)] += 1
    for k in range(d + 1):
        assert B.pair_count(d, k) == counts[k]
    assert sum(counts) == n * (n + 1) // 2


def test_pair_count_sum_identity():
    for d in range(15):
        total = sum(B.pair_count(d, k) for k in range(d + 1))
        n = 1 << d
        assert total == F(n * (n + 1), 2)


def test_pair_count_range_check():
    with pytest.raises(ValueError):
        B.pair_count(3, 4)


def test_component_density_examples():
    assert B.component_density(4, 3, 1) == F(6, 5)
    assert B.component_density(4, 3, 0) == F(4, 5)
    assert B.component_density(2, 2, 1) == F(1, 2)


def test_densest_component_examples():
    assert B.densest_component(4, 3) == (1, F(6, 5))
    assert B.densest_component(6, 4)[0] == 2
    assert B.densest_component(5, 0) == (0, F(1))


def test_y_star_examples():
    assert B.y_star(2, 1) == F(3, 2)
    assert B.y_star(2, 2) == 2
    for d in range(1, 20):
        assert B.y_star(d, 0) == 1


def test_y_star_inverse_of_density():
    for d in range(1, 8):
        for k in range(1, d + 1):
            assert B.y_star(d, k) == 1 / B.densest_component(d, k)[1]


@pytest.mark.parametrize("d", range(1, 5))
def test_y_star_equals_inverse_brute_densest(d):
    for k in range(1, d + 1):
        assert B.y_star(d, k) == 1 / B.brute_densest_subgraph(d, k)


def test_brute_densest_examples():
    assert B.brute_densest_subgraph(4, 3) == F(6, 5)
    assert B.brute_densest_subgraph(2, 2) == F(1, 2)
    assert B.brute_densest_subgraph(3, 0) == 1


def test_brute_densest_equals_max_component_density():
    for d in range(1, 5):
        for k in range(1, d + 1):
            brute = B.brute_densest_subgraph(d, k)
            best = max(B.component_density(d, k, i) for i in range(k // 2 + 1))
            assert brute == best


def test_disjoint_pair_edges_structure():
    for d in range(1, 5):
        for k in range(d + 1):
            for i, j in B.disjoint_pair_edges(d, k):
                assert i & j == 0
                assert popcount(i | j) == k


@pytest.mark.parametrize("d", range(1, 5))
def test_regular_subgraph_density_lemma_sampled(d):
    # random induced subgraphs never exceed their component's density
    rng = random.Random(d)
    for k in range(1, d + 1):
        edges = B.disjoint_pair_edges(d, k)
        for i in range(k // 2 + 1):
            members = sorted(
                {a for a, b in edges if popcount(a) in (i, k - i)}
                | {b for a, b in edges if popcount(b) in (i, k - i)}
            )
            members = [m for m in members if popcount(m) in (i, k - i)]
            if not members:
                continue
            dens = B.component_density(d, k, i)
            for _ in range(100):
                size = rng.randrange(1, len(members) + 1)
                sub = set(rng.sample(members, size))
                cnt = sum(1 for a, b in edges if a in sub and b in sub)
                assert F(cnt, len(sub)) <= dens


def test_psi_table_d2():
    assert [B.psi(2, k) for k in range(3)] == [4, 6, 4]
    assert B.psi_argmax(2) == (1, 6)


def test_psi_argmax_d0():
    assert B.psi_argmax(0) == (0, 1)


def test_psi_ratio_identities_exact():
    for d in range(31):
        for i in range(d // 2 + 1):
            if 2 * i + 1 <= d:
                assert B.psi(d, 2 * i + 1) / B.psi(d, 2 * i) == F(d + 1, 4 * i + 2)
            if 2 * i + 2 <= d:
                assert B.psi(d, 2 * i + 2) / B.psi(d, 2 * i) == F(d - i, 4 * i + 2)


def test_psi_ratio_example_d7():
    assert B.psi(7, 2) / B.psi(7, 0) == F(7, 2)
    assert B.psi(2, 1) / B.psi(2, 0) == F(3, 2)


def test_psi_argmax_ratio_converges():
    for d in (500, 1000, 2000):
        k, _ = B.psi_argmax(d)
        assert abs(k / d - 0.4) < 0.02


def test_psi_log2_agrees_with_exact():
    for d in range(1, 51):
        for k in range(d + 1):
            exact = math.log2(B.psi(d, k))
            assert abs(B.psi_log2(d, k) - exact) < 1e-9


def test_psi_log2_large_d():
    k, v = B.psi_argmax_log(200_000)
    assert abs(k / 200_000 - 0.4) < 0.01
    assert abs(v / 200_000 - math.log2(2.5)) < 0.01


def test_entropy_constant():
    assert abs(1 + B.entropy(0.4) - 0.8 * B.entropy(0.25) - math.log2(2.5)) < 1e-12


def test_middle_lemma_exhaustive():
    for d in range(31):
        for k in range(d + 1):
            vals = [B.middle_expression(d, k, x) for x in range(k + 1)]
            lo = min(vals)
            assert vals[k // 2] == lo
            assert vals[(k + 1) // 2] == lo
            assert vals[k // 2] == vals[(k + 1) // 2]


def test_middle_binomial_identity():
    for d in range(31):
        for k in range(d + 1):
            for x in range(k + 1):
                assert comb(d, x) * comb(d - x, k - x) == comb(d, k - x) * comb(
                    d - k + x, x
                )


def test_lemma_manip_boundaries():
    assert B.lemma_manip_check(1, 1, 1, 1)
    assert B.lemma_manip_check(0, 5, 2, 1)
    with pytest.raises(ValueError):
        B.lemma_manip_check(2, 1, 2, 1)
    with pytest.raises(ValueError):
        B.lemma_manip_check(0, 1, 1, 2)


@given(
    st.fractions(min_value=0, max_value=100),
    st.fractions(min_value=0, max_value=100),
    st.fractions(min_value=1, max_value=50),
    st.fractions(min_value=1, max_value=50),
)
@settings(max_examples=500, deadline=None)
def test_lemma_manip_property(a, b, c, e):
    s, t = min(a, b), max(a, b)
    beta, alpha = min(c, e), max(c, e)
    assert B.lemma_manip_check(s, t, alpha, beta)


def test_regular_lp_known_feasible_point_d2():
    lp = B.build_regular_lp(2)
    # single-class point y~1 = 3/2 (others 0) is feasible with value 6
    point = []
    for name in lp.var_names:
        point.append(F(3, 2) if name == "y~1" else F(0))
    for coeffs, rel, rhs in lp.rows:
        assert sum(c * x for c, x in zip(coeffs, point)) <= rhs
    value = sum(c * x for c, x in zip(lp.objective, point))
    assert value == 6
    assert solve(lp).value >= 6


@pytest.mark.parametrize("d", [1, 2])
def test_ropt_equals_lopt(d):
    ropt = solve(B.build_regular_lp(d)).value
    lopt = solve(B.build_dual_lp(d)).value
    assert ropt == lopt


@pytest.mark.parametrize("d", [0, 1, 2, 3])
def test_ropt_sandwich(d):
    ropt = solve(B.build_regular_lp(d)).value
    _, mx = B.psi_argmax(d)
    assert mx <= ropt <= (d + 1) * mx


def test_dual_symmetrization_stays_feasible_d2():
    d = 2
    dual = B.build_dual_lp(d)
    sol = solve(dual)
    # average the optimal pair weights per distance class
    per_k = [F(0)] * (d + 1)
    for name, val in sol.assignment.items():
        i, j = map(int, name[2:-1].split(","))
        per_k[popcount(i ^ j)] += val
    y_tilde = [per_k[k] / B.pair_count(d, k) for k in range(d + 1)]
    reg = B.build_regular_lp(d)
    for coeffs, rel, rhs in reg.rows:
        assert sum(c * x for c, x in zip(coeffs, y_tilde)) <= rhs
    assert sum(
        c * x for c, x in zip(reg.objective, y_tilde)
    ) == sol.value


def test_self_pairs_flag_changes_programs():
    with_self = solve(B.build_dual_lp(1, self_pairs=True)).value
    without = solve(B.build_dual_lp(1, self_pairs=False)).value
    assert with_self == 3 and without == 2


def test_lp_builder_caps():
    with pytest.raises(ValueError):
        B.build_regular_lp(5)
    with pytest.raises(ValueError):
        B.build_dual_lp(4)
    with pytest.raises(ValueError):
        B.build_primal_lp(3)
    B.build_primal_lp(3, allow_large=True)  # permitted behind the flag


def test_bound_report_consistency():
    rep = B.bound_report(2, with_lp=True, with_oracle=True)
    assert rep.argmax_k == 1 and rep.max_psi == 6
    assert rep.ropt == 8 and rep.lopt == 8 and rep.opt == 9
    assert rep.sandwiches


def test_primal_lp_graph_matches_hypercube_builder():
    g = hypercube(2)
    a = solve(B.build_primal_lp(2)).value
    b = solve(B.build_primal_lp_graph(g)).value
    assert a == b == 8
