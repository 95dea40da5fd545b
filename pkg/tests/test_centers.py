import numpy as np
import pytest

from dhecc.builders import (
    clique,
    cycle,
    embed_as_center,
    fig5_family,
    path,
    random_cograph,
    random_dh,
    random_diam3_center_input,
    star,
)
from dhecc.centers import (
    COGRAPH,
    DIAM3_SPECIAL,
    INVALID,
    center_and_ck,
    center_distance_audit,
    center_of,
    center_structure_audit,
    classify_center,
    find_unimodality_break,
    helly_audit,
    induced_p4,
    is_cograph,
    p4_bruteforce,
    unimodality_audit,
)
from dhecc.graph import Graph, all_pairs_ecc_oracle, distance_matrix


def test_path5_center_and_c1():
    c, c1 = center_and_ck(path(5), 1)
    assert c == [2] and c1 == [1, 2, 3]
    assert center_of(path(4)) == [1, 2]


def test_cograph_basics():
    assert all(is_cograph(clique(k)) for k in range(1, 7))
    assert is_cograph(cycle(4)) and is_cograph(star(4))
    assert not is_cograph(path(4))
    a, b, c, d = induced_p4(path(4))
    assert {(a, b), (b, c), (c, d)} <= set(path(4).edges()) | {(y, x) for x, y in path(4).edges()}
    assert is_cograph(Graph.from_edges(4, [(0, 1), (2, 3)]))


def test_p4_matches_bruteforce():
    rng = np.random.default_rng(4)
    for _ in range(300):
        n = int(rng.integers(1, 9))
        edges = [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < rng.uniform(0.2, 0.8)]
        h = Graph.from_edges(n, edges)
        assert (induced_p4(h) is not None) == p4_bruteforce(h)


def test_classify_examples():
    assert classify_center(path(5)).classification == COGRAPH
    assert classify_center(fig5_family(3)).classification == COGRAPH
    for seed in range(10):
        h = random_cograph(1 + seed, seed)
        if not is_cograph(h):
            continue
        g = embed_as_center(h, "cograph")
        rep = classify_center(g)
        assert rep.classification == COGRAPH and rep.center == list(range(h.n))


def test_classify_diam3_special():
    for seed in range(10):
        h = random_diam3_center_input(6 + seed, seed)
        rep = classify_center(embed_as_center(h, "diam3"))
        assert rep.classification == DIAM3_SPECIAL
        assert rep.h_diam == 3 and rep.h_center_rad == 2
        assert rep.to_dict()["h"]["diam"] == 3


def test_classify_invalid_on_non_dh_graph():
    # a long cycle plus a pendant per vertex: the center is the whole cycle,
    # which contains induced P4s but has diameter > 3
    n = 10
    edges = [(i, (i + 1) % n) for i in range(n)] + [(i, n + i) for i in range(n)]
    g = Graph.from_edges(2 * n, [tuple(sorted(e)) for e in edges])
    rep = classify_center(g, all_pairs_ecc_oracle(g))
    assert rep.classification == INVALID and rep.witness


def test_unimodality_on_random_dh():
    for seed in range(30):
        g, _ = random_dh(5 + 3 * seed, seed)
        rep = unimodality_audit(g, all_pairs_ecc_oracle(g))
        assert rep.holds
        for v, e, dc in rep.breaks:
            assert dc == 2


def test_unimodality_break_exists():
    hit = find_unimodality_break(range(200), (5, 60))
    assert hit is not None
    seed, n, g, rep = hit
    t = all_pairs_ecc_oracle(g)
    assert rep.breaks and rep.holds and t.diam == 2 * t.rad


def test_center_audits_on_random_dh():
    for seed in range(25):
        g, _ = random_dh(10 + 4 * seed, seed, [(0.4, 0.3, 0.3), (0.1, 0.45, 0.45)][seed % 2])
        d = distance_matrix(g)
        for rep in (center_distance_audit(g, d), center_structure_audit(g, d), helly_audit(g, d)):
            assert rep.holds, (seed, rep.name, rep.violations[:3])


def test_audits_count_checked_statements():
    for k in (5, 6, 7, 9):
        assert center_distance_audit(cycle(k)).checked > 0
