import numpy as np
import pytest

from dhecc.builders import cycle, fig5_family, fig5_labels, path, random_dh
from dhecc.errors import DisconnectedGraph
from dhecc.extremal import (
    bounds_audit,
    duality_audit,
    ecc_bounds_from_pair,
    furthest,
    mutually_distant_pair,
    structural_audit,
)
from dhecc.graph import Graph, all_pairs_ecc_oracle, bfs, distance_matrix


def test_furthest_smallest_id():
    assert furthest(np.array([0, 2, 1, 2])) == 1


def test_path_endpoints():
    p = mutually_distant_pair(path(4), 1)
    assert {p.x, p.y} == {0, 3} and p.dist == 3


def test_fig5_pair():
    lab = fig5_labels(3)
    p = mutually_distant_pair(fig5_family(3), lab["x"][0])
    assert p.dist == 4 and p.sweeps <= 5
    assert bfs(fig5_family(3), p.x)[p.y] == 4


def test_c4_antipodal():
    p = mutually_distant_pair(cycle(4), 0)
    assert p.dist == 2 and bfs(cycle(4), p.x)[p.y] == 2


def test_pair_is_mutually_distant():
    for seed in range(30):
        g, _ = random_dh(70, seed)
        p = mutually_distant_pair(g, seed % g.n)
        assert p.dx.max() == p.dist == p.dy.max()


def test_disconnected_rejected():
    with pytest.raises(DisconnectedGraph):
        mutually_distant_pair(Graph.from_edges(3, [(0, 1)]))


def test_bounds_cases():
    # path(5): pair (0, 4) at even distance 4
    g = path(5)
    p = mutually_distant_pair(g, 0)
    b = ecc_bounds_from_pair(g, p)
    assert b.lower.tolist() == [4, 3, 2, 3, 4]
    # |d(x,u) - d(y,u)| >= 2 pins the value; equal distances allow +2
    assert b.upper.tolist() == [4, 3, 4, 3, 4]
    b = ecc_bounds_from_pair(g, p, center=[2])
    assert b.upper[2] == 3
    # odd pair distance: at most +1
    g = path(4)
    b = ecc_bounds_from_pair(g, mutually_distant_pair(g, 0))
    assert (b.slack() <= 1).all()


def test_bounds_contain_exact_values():
    for seed in range(40):
        g, _ = random_dh(1 + 3 * seed, seed)
        t = all_pairs_ecc_oracle(g)
        b = ecc_bounds_from_pair(g, mutually_distant_pair(g, 0))
        assert ((b.lower <= t.ecc) & (t.ecc <= b.upper)).all()
        assert bounds_audit(g, t.ecc, start=seed % g.n) == []


def test_duality_trees_and_fig5():
    for seed in range(15):
        g, _ = random_dh(40, seed, (1.0, 0.0, 0.0))
        p = mutually_distant_pair(g, 0)
        assert all(duality_audit(g, p, u).holds for u in range(g.n))
    g = fig5_family(4)
    p = mutually_distant_pair(g, 0)
    assert all(duality_audit(g, p, u).holds for u in range(g.n))


def test_structural_audit():
    rng = np.random.default_rng(3)
    for seed in range(20):
        g, _ = random_dh(50, seed)
        assert structural_audit(g, distance_matrix(g), rng) == []
    # C6 is not DH: consecutive slices are not joined
    assert structural_audit(cycle(6), distance_matrix(cycle(6)), rng, pairs=30)
