import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from _recurrences import pendant_trial, twin_trial
from dhecc.builders import PENDANT, clique, cycle, fig5_family, fig5_labels, path, random_dh, star
from dhecc.ecc_exact import (
    all_eccentricities,
    backward_phase1,
    eccentricities_from_sequence,
    forward_weight_pass,
    weighted_ecc_bruteforce,
)
from dhecc.errors import DisconnectedGraph, NotDistanceHereditary
from dhecc.graph import Graph, all_pairs_ecc_oracle
from dhecc.pruning import build_pruning_sequence, find_central_vertex


def test_weighted_ecc_small():
    assert weighted_ecc_bruteforce(path(2), [0, 0], 0) == 1
    assert weighted_ecc_bruteforce(path(3), [1, 0, 0], 2) == 3


def test_small_graphs():
    assert all_eccentricities(Graph(1, [[]])).ecc.tolist() == [0]
    assert all_eccentricities(path(2)).ecc.tolist() == [1, 1]
    assert all_eccentricities(path(3)).ecc.tolist() == [2, 1, 2]
    assert all_eccentricities(clique(5)).ecc.tolist() == [1] * 5


def test_errors():
    with pytest.raises(NotDistanceHereditary):
        all_eccentricities(cycle(5))
    with pytest.raises(DisconnectedGraph):
        all_eccentricities(Graph.from_edges(4, [(0, 1), (2, 3)]))


@pytest.mark.parametrize("ell", range(3, 9))
def test_fig5_family(ell):
    t = all_eccentricities(fig5_family(ell), shadow=ell <= 4)
    lab = fig5_labels(ell)
    assert (t.rad, t.diam) == (3, 4)
    assert all(t.ecc[v] == 3 for v in lab["u"] + lab["v"])
    assert all(t.ecc[v] == 4 for v in lab["x"] + lab["y"])


def test_forward_pass_fig5_weights():
    g = fig5_family(3)
    root = find_central_vertex(g)
    seq = build_pruning_sequence(g, root)
    fp = forward_weight_pass(g, seq)
    lab = fig5_labels(3)
    leaves = set(lab["x"] + lab["y"])
    # the leading run of leaf removals raises each attached u_i / v_i to 1
    k = 0
    while k < len(seq.steps) and seq.steps[k].vertex in leaves and seq.steps[k].layer >= 2:
        k += 1
    assert k > 0
    p = fp.weights_at(k, g.n)
    for s in seq.steps[:k]:
        assert p[s.partner] == 1
    assert all(p[v] == 0 for v in leaves)
    # no weight ever exceeds rad - layer = 3 - 1
    assert max(fp.p_z) <= 2


def test_forward_pass_star_and_path():
    g = path(3)
    fp = forward_weight_pass(g, build_pruning_sequence(g, 1))
    assert fp.steps[0].kind == PENDANT
    assert fp.p_z == [0, 0, 0]  # both leaves are iteration-1 steps
    g = star(3)
    fp = forward_weight_pass(g, build_pruning_sequence(g, 1))
    assert fp.p_z[0] == 1  # leaves 2, 3 pruned towards the center first


def test_weight_bound_rad_minus_layer():
    for seed in range(40):
        g, _ = random_dh(80, seed, (0.5, 0.25, 0.25))
        t = all_pairs_ecc_oracle(g)
        seq = build_pruning_sequence(g, find_central_vertex(g))
        fp = forward_weight_pass(g, seq)
        p = [0] * g.n
        for d in fp.deltas:
            if d is not None:
                v, old, new = d
                assert new >= old
                p[v] = new
                assert p[v] <= t.rad - int(seq.layer[v])


def test_phase1_star_example():
    # center 0 with leaves 1, 2, 3; leaf 1 carries weight 2
    g = star(3)
    ph = backward_phase1(g, [0, 1, 2, 3], [0, 2, 0, 0])
    assert ph.we == {0: 3, 1: 2, 2: 4, 3: 4}
    ph = backward_phase1(path(2), [0, 1], [0, 0])
    assert ph.we == {0: 1, 1: 1}


def test_phase2_sibling_regression():
    # two layer-2 pendants on the same layer-1 partner: each sees the other
    g, _ = random_dh(29, 49, (0.2, 0.1, 0.7))
    seq = build_pruning_sequence(g, find_central_vertex(g))
    ecc = eccentricities_from_sequence(g, seq, shadow=True)
    assert np.array_equal(ecc, all_pairs_ecc_oracle(g).ecc)


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 90), st.integers(0, 10**6), st.sampled_from([
    (0.4, 0.3, 0.3), (0.1, 0.45, 0.45), (0.2, 0.1, 0.7), (0.8, 0.1, 0.1), (0.2, 0.7, 0.1),
]))
def test_shadow_mode_matches_oracle(n, seed, weights):
    g, _ = random_dh(n, seed, weights)
    assert all_eccentricities(g, shadow=True) == all_pairs_ecc_oracle(g)


def test_non_central_root_still_exact_for_ecc_of_table():
    # the algorithm is only claimed for a central root; check it is used
    g, _ = random_dh(60, 2)
    t = all_pairs_ecc_oracle(g)
    root = find_central_vertex(g)
    assert t.ecc[root] == t.rad
    assert all_eccentricities(g, root=root) == t


def test_twin_recurrence_trials():
    rng = np.random.default_rng(101)
    for _ in range(300):
        assert twin_trial(rng) is None


def test_pendant_recurrence_trials():
    rng = np.random.default_rng(202)
    applied = 0
    for _ in range(300):
        msg, used = pendant_trial(rng)
        assert msg is None
        applied += used
    assert applied > 100
