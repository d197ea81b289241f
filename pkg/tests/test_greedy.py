import math
from fractions import Fraction

import pytest

from hublab.bounds import build_dual_lp, build_primal_lp_graph
from hublab.graph import Graph, hypercube
from hublab.greedy import coverage_progress, greedy_hl, greedy_run
from hublab.labeling import total_size, verify_cover
from hublab.lp import solve

from conftest import random_connected_graph


def test_single_vertex():
    run = greedy_run(Graph(1, []))
    assert total_size(run.labeling) == 1
    assert coverage_progress(run) == [(1, 0, 1)]


def test_path3(path3):
    lab = greedy_hl(path3)
    assert verify_cover(path3, lab).valid
    assert total_size(lab) <= 5


def test_hypercube2_size_window():
    g = hypercube(2)
    lab = greedy_hl(g)
    assert verify_cover(g, lab).valid
    # lower bound ceil(max_k N_k y*_k) = 6; upper bound subset HHL size 9;
    # the certified brute-force optimum for this graph is 9
    assert 6 <= total_size(lab) <= 9
    assert total_size(lab) == 9


def test_progress_monotone():
    g = hypercube(3)
    run = greedy_run(g)
    prog = coverage_progress(run)
    uncovered = [u for _, u, _ in prog]
    assert all(a > b for a, b in zip(uncovered, uncovered[1:]))
    assert prog[-1][1] == 0
    n = g.n
    first_covered = run.steps[0].covered
    assert prog[0][1] == n * (n + 1) // 2 - first_covered


def test_determinism():
    g = random_connected_graph(20, 15, seed=5)
    assert greedy_hl(g) == greedy_hl(g)


def test_disconnected_rejected():
    with pytest.raises(ValueError):
        greedy_hl(Graph(3, [(0, 1)]))


@pytest.mark.parametrize("seed", range(6))
def test_valid_on_random_graphs(seed):
    g = random_connected_graph(10 + 7 * seed, 3 * seed + 2, seed=seed)
    lab = greedy_hl(g)
    assert verify_cover(g, lab).valid


@pytest.mark.parametrize("d", range(5))
def test_valid_on_hypercubes(d):
    g = hypercube(d)
    lab = greedy_hl(g)
    assert verify_cover(g, lab).valid


def test_greedy_at_least_lp_lower_bound():
    for d in (1, 2):
        g = hypercube(d)
        lopt = solve(build_dual_lp(d)).value
        size = total_size(greedy_hl(g))
        assert size >= math.ceil(lopt)


def test_greedy_within_log_factor_of_lopt(path3):
    for g in (path3, hypercube(1), hypercube(2)):
        if g.n <= 4:
            lopt = solve(build_primal_lp_graph(g)).value
        else:
            continue
        size = total_size(greedy_hl(g))
        pairs = g.n * (g.n + 1) / 2
        assert size <= (1 + math.log(pairs)) * lopt


def test_fixture_graphs(star5, cycle6):
    for g in (star5, cycle6):
        lab = greedy_hl(g)
        assert verify_cover(g, lab).valid


def test_self_pairs_force_self_hubs():
    g = hypercube(2)
    lab = greedy_hl(g)
    for v in range(g.n):
        assert (v, 0) in lab.labels[v]
