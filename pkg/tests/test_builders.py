import pytest

from dhecc.builders import (
    FALSE_TWIN,
    PENDANT,
    TRUE_TWIN,
    ConstructionStep,
    apply_steps,
    build_named,
    clique,
    cycle,
    diam3_center_shape,
    domino,
    embed_as_center,
    fig5_family,
    fig5_labels,
    gem,
    house,
    path,
    random_cograph,
    random_dh,
    random_diam3_center_input,
)
from dhecc.centers import is_cograph
from dhecc.errors import BadParameter, InvalidCenterShape
from dhecc.graph import Graph, all_pairs_ecc_oracle, bfs, four_point_check, is_connected, layering_check
from dhecc.pruning import is_distance_hereditary


def test_named_sizes():
    assert (house().n, house().m) == (5, 6)
    assert (gem().n, gem().m) == (5, 7)
    assert (domino().n, domino().m) == (6, 7)
    assert build_named("cycle(6)") == cycle(6)
    assert build_named("clique(4)").m == 6
    assert build_named(" path(3) ") == path(3)


def test_named_errors():
    for bad in ("cycle(2)", "fig5_family(1)", "path(0)", "pentagon", "cycle(x)"):
        with pytest.raises(BadParameter):
            build_named(bad)


def test_fig5_structure():
    g = fig5_family(3)
    lab = fig5_labels(3)
    assert g.n == 12
    u, v, x, y = lab["u"], lab["v"], lab["x"], lab["y"]
    for i in range(3):
        assert g.adj[x[i]] == (u[i],) and g.adj[y[i]] == (v[i],)
        for j in range(3):
            assert g.has_edge(u[i], v[j]) == (i != j)
    assert bfs(g, x[0])[y[0]] == 4


def test_cycles_dh_status():
    assert is_distance_hereditary(cycle(4))
    assert not is_distance_hereditary(cycle(5))


def test_random_dh_small_and_deterministic():
    g, steps = random_dh(1, 0)
    assert g.n == 1 and steps == [ConstructionStep(0, None, None)]
    for seed in range(20):
        g, steps = random_dh(2, seed)
        assert g == path(2)
        assert steps[1].kind == PENDANT or steps[1].kind == TRUE_TWIN
    a, _ = random_dh(80, 42)
    b, _ = random_dh(80, 42)
    assert a == b
    assert random_dh(80, 43)[0] != a


def test_random_dh_bad_weights():
    with pytest.raises(BadParameter):
        random_dh(5, 0, (0.5, 0.5, 0.5))
    with pytest.raises(BadParameter):
        random_dh(0, 0)


def test_random_dh_replays_and_is_dh():
    for seed in range(30):
        g, steps = random_dh(60, seed)
        assert apply_steps(steps) == g
        assert is_connected(g)
        assert is_distance_hereditary(g)
    g, _ = random_dh(200, 5)
    assert is_distance_hereditary(g)


def test_random_dh_passes_all_checks():
    for seed in range(10):
        g, _ = random_dh(20, seed)
        assert four_point_check(g).holds
        assert all(layering_check(g, r).holds for r in range(g.n))


def test_apply_steps_kinds():
    steps = [
        ConstructionStep(0, None, None),
        ConstructionStep(1, PENDANT, 0),
        ConstructionStep(2, TRUE_TWIN, 1),
        ConstructionStep(3, FALSE_TWIN, 0),
    ]
    g = apply_steps(steps)
    assert g.edges() == [(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)]
    with pytest.raises(BadParameter):
        apply_steps([ConstructionStep(1, None, None)])


def test_random_cograph_is_p4_free():
    for seed in range(30):
        assert is_cograph(random_cograph(1 + seed % 15, seed))


def test_embed_cograph_k2():
    g = embed_as_center(clique(2), "cograph")
    t = all_pairs_ecc_oracle(g)
    assert g.n == 6 and (t.rad, t.diam) == (2, 4)
    assert list(t.center) == [0, 1]
    assert not g.has_edge(2, 3)  # x and y are not adjacent


def test_embed_cograph_k1():
    g = embed_as_center(Graph(1, [[]]), "cograph")
    assert list(all_pairs_ecc_oracle(g).center) == [0]


def test_embed_rejects_bad_inputs():
    with pytest.raises(InvalidCenterShape):
        embed_as_center(path(4), "cograph")
    with pytest.raises(InvalidCenterShape):
        embed_as_center(path(4), "diam3")
    with pytest.raises(BadParameter):
        embed_as_center(path(2), "other")


def test_diam3_input_generator():
    for seed in range(25):
        h = random_diam3_center_input(6 + seed, seed)
        ok, why = diam3_center_shape(h)
        assert ok, why
        g = embed_as_center(h, "diam3")
        assert is_distance_hereditary(g)
        assert list(all_pairs_ecc_oracle(g).center) == list(range(h.n))
    with pytest.raises(BadParameter):
        random_diam3_center_input(5, 0)


def test_fig7_demo():
    g = build_named("fig7_cograph_embed_demo")
    assert list(all_pairs_ecc_oracle(g).center) == [0, 1, 2, 3]
