"""Named graphs, a seeded random DH generator and the center-embedding constructions.

The random generator uses ``numpy.random.default_rng(seed)`` (PCG64).  For
each new vertex ``t = 1..n-1`` it draws, in this order, one anchor
``rng.integers(t)`` and one kind ``rng.choice(3, p=kind_weights)`` with kinds
ordered (pendant, true twin, false twin).  Outputs are bit-exact per
(n, seed, kind_weights) for a given numpy version.
"""
from __future__ import annotations

import re
from dataclasses import dataclass

import numpy as np

from .errors import BadParameter, InvalidCenterShape
from .graph import Graph

PENDANT = "pendant"
TRUE_TWIN = "true-twin"
FALSE_TWIN = "false-twin"
KINDS = (PENDANT, TRUE_TWIN, FALSE_TWIN)
DEFAULT_KIND_WEIGHTS = (0.4, 0.3, 0.3)


@dataclass(frozen=True)
class ConstructionStep:
    new_vertex: int
    kind: str | None
    anchor: int | None


def path(k: int) -> Graph:
    if k < 1:
        raise BadParameter("path needs k >= 1")
    return Graph.from_edges(k, [(i, i + 1) for i in range(k - 1)])


def cycle(k: int) -> Graph:
    if k < 3:
        raise BadParameter("cycle needs k >= 3")
    return Graph.from_edges(k, [(i, (i + 1) % k) for i in range(k)])


def clique(k: int) -> Graph:
    if k < 1:
        raise BadParameter("clique needs k >= 1")
    return Graph.from_edges(k, [(i, j) for i in range(k) for j in range(i + 1, k)])


def star(leaves: int) -> Graph:
    return Graph.from_edges(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def house() -> Graph:
    # square 0-1-2-3 with roof vertex 4 on the edge 0-1
    return Graph.from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 4), (1, 4)])


def gem() -> Graph:
    # path 0-1-2-3 plus a vertex 4 universal to it
    return Graph.from_edges(5, [(0, 1), (1, 2), (2, 3), (4, 0), (4, 1), (4, 2), (4, 3)])


def domino() -> Graph:
    # two squares sharing the edge 1-4
    return Graph.from_edges(
        6, [(0, 1), (1, 2), (2, 5), (5, 4), (4, 3), (3, 0), (1, 4)]
    )


def fig5_labels(ell: int) -> dict[str, list[int]]:
    """Vertex ids of the clique-pendant family: u_i = i, v_i = ell+i, x_i = 2ell+i, y_i = 3ell+i."""
    return {
        "u": list(range(ell)),
        "v": list(range(ell, 2 * ell)),
        "x": list(range(2 * ell, 3 * ell)),
        "y": list(range(3 * ell, 4 * ell)),
    }


def fig5_family(ell: int) -> Graph:
    """Two ell-cliques u, v with u_i ~ v_j for i != j, plus pendants x_i on u_i and y_i on v_i."""
    if ell < 2:
        raise BadParameter("fig5_family needs ell >= 2")
    lab = fig5_labels(ell)
    u, v, x, y = lab["u"], lab["v"], lab["x"], lab["y"]
    edges = []
    for i in range(ell):
        for j in range(i + 1, ell):
            edges.append((u[i], u[j]))
            edges.append((v[i], v[j]))
        for j in range(ell):
            if i != j:
                edges.append((u[i], v[j]))
        edges.append((u[i], x[i]))
        edges.append((v[i], y[i]))
    return Graph.from_edges(4 * ell, edges)


def fig7_cograph_embed_demo() -> Graph:
    """Cograph embedding applied to the 4-cycle (a P4-free graph)."""
    return embed_as_center(cycle(4), "cograph")


_NAMED = {"house": house, "gem": gem, "domino": domino, "fig7_cograph_embed_demo": fig7_cograph_embed_demo}
_PARAM = {"cycle": cycle, "path": path, "clique": clique, "fig5_family": fig5_family, "star": star}


def build_named(name: str) -> Graph:
    """Build a graph from a name such as ``house``, ``cycle(6)`` or ``fig5_family(3)``."""
    name = name.strip()
    if name in _NAMED:
        return _NAMED[name]()
    match = re.fullmatch(r"(\w+)\((\d+)\)", name)
    if match and match.group(1) in _PARAM:
        return _PARAM[match.group(1)](int(match.group(2)))
    raise BadParameter(f"unknown graph name {name!r}")


def apply_steps(steps: list[ConstructionStep]) -> Graph:
    """Replay a construction sequence starting from a single vertex."""
    nbrs: list[set[int]] = []
    for step in steps:
        if step.new_vertex != len(nbrs):
            raise BadParameter("construction steps must add vertices 0, 1, 2, ... in order")
        new: set[int] = set()
        if step.anchor is not None:
            a = step.anchor
            if step.kind == PENDANT:
                new = {a}
            elif step.kind == TRUE_TWIN:
                new = set(nbrs[a]) | {a}
            elif step.kind == FALSE_TWIN:
                new = set(nbrs[a])
            else:
                raise BadParameter(f"unknown step kind {step.kind!r}")
        nbrs.append(new)
        for u in new:
            nbrs[u].add(step.new_vertex)
    return Graph.from_adjsets(nbrs)


def random_dh(
    n: int, seed: int, kind_weights=DEFAULT_KIND_WEIGHTS
) -> tuple[Graph, list[ConstructionStep]]:
    """Random connected DH graph grown from K1 by pendant / twin additions."""
    if n < 1:
        raise BadParameter("n must be >= 1")
    w = np.asarray(kind_weights, dtype=float)
    if w.shape != (3,) or (w < 0).any() or not np.isclose(w.sum(), 1.0):
        raise BadParameter("kind_weights must be three non-negative numbers summing to 1")
    rng = np.random.default_rng(seed)
    steps = [ConstructionStep(0, None, None)]
    nbrs: list[set[int]] = [set()]
    for t in range(1, n):
        anchor = int(rng.integers(t))
        kind = KINDS[int(rng.choice(3, p=w))]
        # a false twin of an isolated vertex would disconnect the graph
        if kind == FALSE_TWIN and not nbrs[anchor]:
            kind = PENDANT
        if kind == PENDANT:
            new = {anchor}
        elif kind == TRUE_TWIN:
            new = nbrs[anchor] | {anchor}
        else:
            new = set(nbrs[anchor])
        nbrs.append(new)
        for u in new:
            nbrs[u].add(t)
        steps.append(ConstructionStep(t, kind, anchor))
    return Graph.from_adjsets(nbrs), steps


def random_cograph(n: int, seed: int) -> Graph:
    """Random (possibly disconnected) cograph from a random union/join tree."""
    if n < 1:
        raise BadParameter("n must be >= 1")
    rng = np.random.default_rng(seed)

    def build(vertices):
        if len(vertices) == 1:
            return []
        cut = int(rng.integers(1, len(vertices)))
        left, right = vertices[:cut], vertices[cut:]
        edges = build(left) + build(right)
        if rng.random() < 0.5:
            edges += [(a, b) for a in left for b in right]
        return edges

    order = [int(v) for v in rng.permutation(n)]
    return Graph.from_edges(n, build(order))


# 4-cycle 0-1-5-2 with vertex 3 on the opposite pair {1, 2} and vertex 4 on
# {0, 5}: the smallest graph of diameter 3 whose center (the 4-cycle) is a
# connected cograph of radius 2
_DIAM3_BASE = [(0, 1), (0, 2), (0, 4), (1, 3), (1, 5), (2, 3), (2, 5), (4, 5)]


def random_diam3_center_input(n: int, seed: int) -> Graph:
    """Random valid input for the ``diam3`` branch of :func:`embed_as_center`.

    Grows the 6-vertex base by random true / false twins.  Twins copy the
    distances of their anchor, so the diameter, the center's shape and its
    radius are all preserved.
    """
    if n < 6:
        raise BadParameter("need n >= 6")
    rng = np.random.default_rng(seed)
    nbrs: list[set[int]] = [set() for _ in range(6)]
    for a, b in _DIAM3_BASE:
        nbrs[a].add(b)
        nbrs[b].add(a)
    for t in range(6, n):
        anchor = int(rng.integers(t))
        new = nbrs[anchor] | {anchor} if rng.random() < 0.5 else set(nbrs[anchor])
        nbrs.append(new)
        for u in new:
            nbrs[u].add(t)
    return Graph.from_adjsets(nbrs)


def embed_as_center(h: Graph, branch: str = "cograph") -> Graph:
    """Extend ``h`` to a DH graph whose center is exactly V(h).

    ``cograph``: add non-adjacent vertices x, y universal to h, with pendants
    x*, y*.  ``diam3``: add one pendant to every vertex of C(h).
    New vertices get ids after those of h.
    """
    from .centers import center_of, is_cograph

    n = h.n
    if branch == "cograph":
        if n < 1 or not is_cograph(h):
            raise InvalidCenterShape("cograph branch needs a non-empty P4-free graph")
        x, y, xs, ys = n, n + 1, n + 2, n + 3
        edges = h.edges()
        edges += [(x, v) for v in range(n)] + [(y, v) for v in range(n)]
        edges += [(x, xs), (y, ys)]
        return Graph.from_edges(n + 4, edges)
    if branch == "diam3":
        ok, reason = diam3_center_shape(h)
        if not ok:
            raise InvalidCenterShape(reason)
        ch = center_of(h)
        edges = h.edges() + [(c, n + i) for i, c in enumerate(ch)]
        return Graph.from_edges(n + len(ch), edges)
    raise BadParameter(f"unknown branch {branch!r}")


def diam3_center_shape(h: Graph) -> tuple[bool, str]:
    """Whether h is connected DH, diam(h) = 3 and C(h) is a connected cograph of radius 2."""
    from .centers import center_of, is_cograph
    from .graph import all_pairs_ecc_oracle, is_connected
    from .pruning import is_distance_hereditary

    if h.n == 0 or not is_connected(h):
        return False, "h must be connected"
    if not is_distance_hereditary(h):
        return False, "h must be distance-hereditary"
    table = all_pairs_ecc_oracle(h)
    if table.diam != 3:
        return False, f"diam(h) = {table.diam}, need 3"
    ch, _ = h.induced(center_of(h, table))
    if not is_connected(ch) or not is_cograph(ch):
        return False, "C(h) must be a connected cograph"
    if all_pairs_ecc_oracle(ch).rad != 2:
        return False, "rad(C(h)) must be 2"
    return True, ""
