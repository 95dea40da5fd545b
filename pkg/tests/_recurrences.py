"""Randomised checks of the twin and pendant weighted-eccentricity recurrences.

Both sides are evaluated independently: the recurrence uses values on the
smaller graph, the reference is a full weighted eccentricity per vertex
computed from a scipy distance matrix.
"""
import numpy as np

from dhecc.builders import random_dh
from dhecc.ecc_exact import weighted_ecc_bruteforce
from dhecc.graph import distance_matrix

TWIN_HEAVY = (0.2, 0.4, 0.4)


def _wecc(g, p):
    return (distance_matrix(g) + np.asarray(p)[None, :]).max(axis=1)


def _pick_graph(rng):
    n = int(rng.integers(3, 31))
    g, _ = random_dh(n, int(rng.integers(2**31 - 1)), TWIN_HEAVY)
    p = rng.integers(0, 4, size=n)
    return g, p


def twin_trial(rng) -> str | None:
    """One twin-recurrence trial; returns a failure message or None."""
    while True:
        g, p = _pick_graph(rng)
        adj = [set(a) for a in g.adj]
        x = int(rng.integers(g.n))
        ys = [y for y in range(g.n) if y != x and (adj[x] - {y} == adj[y] - {x})]
        if ys:
            break
    y = ys[int(rng.integers(len(ys)))]
    if p[x] > p[y]:
        x, y = y, x
    d = 1 if y in adj[x] else 2
    e = _wecc(g, p)
    sub, old = g.induced(v for v in range(g.n) if v != x)
    e_sub = dict(zip(old, _wecc(sub, p[old]).tolist()))
    for v in old:
        if v != y and e_sub[v] != e[v]:
            return f"twin: e'({v})={e_sub[v]} != e({v})={e[v]}"
    if e[y] != max(p[x] + d, e_sub[y]):
        return f"twin: e(y)={e[y]} != max(p(x)+d, e'(y))"
    if e[x] != max(p[y] + d, e[y]):
        return f"twin: e(x)={e[x]} != max(p(y)+d, e(y))"
    # the single-BFS oracle agrees with the matrix version
    if weighted_ecc_bruteforce(g, p, x) != e[x]:
        return "weighted_ecc_bruteforce disagrees with the matrix oracle"
    return None


def pendant_trial(rng) -> tuple[str | None, bool]:
    """One pendant-recurrence trial; returns (failure or None, whether the
    F(y) - {x} condition held so the recurrence for x was checked)."""
    while True:
        g, p = _pick_graph(rng)
        leaves = [v for v in range(g.n) if len(g.adj[v]) == 1]
        if leaves:
            break
    x = leaves[int(rng.integers(len(leaves)))]
    (y,) = g.adj[x]
    e = _wecc(g, p)
    sub, old = g.induced(v for v in range(g.n) if v != x)
    p2 = p.copy()
    p2[y] = max(1 + p[x], p[y])
    e_sub = dict(zip(old, _wecc(sub, p2[old]).tolist()))
    for v in old:
        if e_sub[v] != e[v]:
            return f"pendant: e'({v})={e_sub[v]} != e({v})={e[v]}", False
    dy = distance_matrix(g)[y]
    others = [u for u in range(g.n) if u != x and dy[u] + p[u] == e[y]]
    if not others:
        return None, False
    if e[x] != max(p[x], e_sub[y] + 1):
        return f"pendant: e(x)={e[x]} != max(p(x), e'(y)+1)", True
    return None, True
