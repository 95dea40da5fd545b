"""All eccentricities of a distance-hereditary graph from one layered pruning sequence.

A forward pass along the sequence pushes weights onto the partners of pruned
pendants.  The weighted eccentricities are then solved on the small residual
graph left after the deeper layers are gone (root plus layer 1), extended
to the trailing layer-2 pendants, and finally propagated back along the
sequence with the twin and pendant recurrences.  With all weights zero on
the full graph the weighted eccentricity is the ordinary one.
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .builders import PENDANT, TRUE_TWIN
from .graph import EccTable, Graph, bfs, require_connected
from .pruning import PruningSequence, build_pruning_sequence, find_central_vertex


class ShadowMismatch(AssertionError):
    pass


def weighted_ecc_bruteforce(g: Graph, p, v: int) -> int:
    """max over u of d(v, u) + p(u), by one BFS."""
    dist = bfs(g, v)
    return int((dist + np.asarray(p, dtype=np.int64)).max())


@dataclass(frozen=True)
class OrientedStep:
    """A pruning step on physical vertices, with both weights just before it."""

    vertex: int
    partner: int
    kind: str
    layer: int
    p_vertex: int
    p_partner: int


@dataclass
class ForwardPass:
    steps: list[OrientedStep]
    root: int
    marker_y: int
    marker_z: int
    p_z: list[int]
    # (vertex, old weight, new weight) per step, None when nothing changed
    deltas: list[tuple[int, int, int] | None] = field(repr=False)
    swaps: int = 0
    # layer-2 pendants of iteration 2 pruned after a step-(c) twin of that
    # iteration; their pendant recurrence is checked for ties (see phase 3)
    guarded: frozenset = frozenset()

    def weights_at(self, i: int, n: int) -> list[int]:
        """Weights p_i immediately before step ``i`` (0-based)."""
        p = [0] * n
        for d in self.deltas[:i]:
            if d is not None:
                p[d[0]] = d[2]
        return p


def forward_weight_pass(g: Graph, seq: PruningSequence) -> ForwardPass:
    """Push pendant weights forward along ``seq`` up to the start of iteration 1.

    A twin step whose pruned vertex is heavier than its partner swaps the two
    roles for the rest of the sequence; twins are interchangeable in the
    residual graph so the swap keeps every later step valid.
    """
    n = g.n
    p = [0] * n
    phys = list(range(n))
    out, deltas = [], []
    swaps = 0
    z = seq.marker_z
    for s in seq.steps:
        x, y = phys[s.vertex], phys[s.partner]
        delta = None
        if s.kind == PENDANT:
            rec = OrientedStep(x, y, s.kind, s.layer, p[x], p[y])
            if s.index < z and p[x] + 1 > p[y]:
                delta = (y, p[y], p[x] + 1)
                p[y] = p[x] + 1
        else:
            if p[x] > p[y]:
                phys[s.vertex], phys[s.partner] = y, x
                x, y = y, x
                swaps += 1
            rec = OrientedStep(x, y, s.kind, s.layer, p[x], p[y])
        out.append(rec)
        deltas.append(delta)
    p_z = [0] * n
    for d in deltas[:z]:
        if d is not None:
            p_z[d[0]] = d[2]
    guarded = set()
    start2 = seq.iteration_starts.get(2)
    if start2 is not None:
        seen_c = False
        for i in range(start2, seq.marker_y):
            s = seq.steps[i]
            seen_c = seen_c or s.phase == "c"
            if seen_c and s.kind == PENDANT and s.layer == 2:
                guarded.add(i)
    return ForwardPass(out, phys[seq.root], seq.marker_y, z, p_z, deltas, swaps, frozenset(guarded))


@dataclass
class Phase1Result:
    members: list[int]
    we: dict[int, int]
    best_nbr: dict[int, int]
    best_non: dict[int, int | None]


def backward_phase1(g: Graph, members, p_z) -> Phase1Result:
    """Weighted eccentricities on the residual graph of diameter <= 2.

    ``members`` are the vertices of that residual graph (the root and the
    layer-1 vertices still present); ``p_z`` is indexed by original ids.
    """
    members = sorted(members)
    inside = set(members)
    top = max((p_z[v] for v in members), default=0)
    buckets: list[list[int]] = [[] for _ in range(top + 1)]
    for v in members:
        buckets[p_z[v]].append(v)
    v_star = [v for w in range(top, -1, -1) for v in buckets[w]]
    adjsets = g.adjsets
    we, best_nbr, best_non = {}, {}, {}
    for v in members:
        nbr_w = max((p_z[u] for u in g.adj[v] if u in inside), default=None)
        non_w = None
        for u in v_star:
            if u != v and u not in adjsets[v]:
                non_w = p_z[u]
                break
        best_nbr[v], best_non[v] = nbr_w, non_w
        val = p_z[v]
        if nbr_w is not None:
            val = max(val, 1 + nbr_w)
        if non_w is not None:
            val = max(val, 2 + non_w)
        we[v] = val
    return Phase1Result(members, we, best_nbr, best_non)


def backward_phase2(fp: ForwardPass, ph1: Phase1Result, we: dict[int, int]) -> None:
    """Values for the trailing layer-2 pendants ``steps[y:z]`` (in place on ``we``).

    The partner term uses the partner's weight before any of these pendants,
    raised by 1 + the heaviest *other* pendant on the same partner; the
    partner's weight at the moment of pruning misses later siblings.
    """
    span = range(fp.marker_y, fp.marker_z)
    base: dict[int, int] = {}
    top2: dict[int, list[tuple[int, int]]] = {}
    for i in span:
        s = fp.steps[i]
        if s.kind != PENDANT or s.layer != 2 or s.partner not in ph1.we:
            raise AssertionError(f"step {i} is not a layer-2 pendant into layer 1")
        base.setdefault(s.partner, s.p_partner)
        best = top2.setdefault(s.partner, [])
        best.append((s.p_vertex, i))
        best.sort(reverse=True)
        del best[2:]
    for i in span:
        s = fp.steps[i]
        partner_w = base[s.partner]
        others = [w for w, j in top2[s.partner] if j != i]
        if others:
            partner_w = max(partner_w, others[0] + 1)
        terms = [s.p_vertex, partner_w + 1]
        if ph1.best_nbr[s.partner] is not None:
            terms.append(ph1.best_nbr[s.partner] + 2)
        if ph1.best_non[s.partner] is not None:
            terms.append(ph1.best_non[s.partner] + 3)
        we[s.vertex] = max(terms)


def backward_phase3(g: Graph, fp: ForwardPass, we: dict[int, int]) -> int:
    """Walk ``steps[:y]`` backwards applying the twin / pendant recurrences.

    Returns how many guarded pendants needed the BFS fallback.
    """
    fallbacks = 0
    alive = None
    for i in range(fp.marker_y - 1, -1, -1):
        if i in fp.guarded and _pendant_tie(fp.steps[i], we):
            if alive is None:
                alive = _alive_after(fp, i)
            _pendant_by_bfs(g, fp, i, alive, we)
            fallbacks += 1
        else:
            backward_phase3_step(fp.steps[i], we)
        if alive is not None:
            alive.add(fp.steps[i].vertex)
    return fallbacks


def _pendant_tie(s: OrientedStep, we) -> bool:
    # The recurrence max(p(x), e'(y) + 1) needs some vertex other than x to
    # realise the weighted eccentricity of y.  That is certain unless the
    # raised weight of y is the only candidate for e'(y).
    raised = s.p_vertex + 1
    return s.p_partner < raised and we[s.partner] == raised


def _alive_after(fp: ForwardPass, i: int) -> set[int]:
    gone = {s.vertex for s in fp.steps[: i + 1]}
    n = len(fp.steps) + 1
    return {v for v in range(n) if v not in gone}


def _pendant_by_bfs(g: Graph, fp: ForwardPass, i: int, alive: set[int], we) -> None:
    s = fp.steps[i]
    sub, old = g.induced(alive)
    p = fp.weights_at(i, g.n)
    e_partner = weighted_ecc_bruteforce(sub, [p[v] for v in old], old.index(s.partner))
    we[s.vertex] = max(s.p_vertex, e_partner + 1)


def _shadow_check(g, fp, ph1, we, stage, i=None, alive=None, p=None, check=None):
    sub, old = g.induced(alive)
    pos = {v: k for k, v in enumerate(old)}
    pw = [p[v] for v in old]
    for v in check:
        want = weighted_ecc_bruteforce(sub, pw, pos[v])
        if we[v] != want:
            where = stage if i is None else f"{stage} step {i}"
            raise ShadowMismatch(f"{where}: vertex {v} has {we[v]}, brute force {want}")


def eccentricities_from_sequence(g: Graph, seq: PruningSequence, shadow: bool = False) -> np.ndarray:
    fp = forward_weight_pass(g, seq)
    removed_before_z = {s.vertex for s in fp.steps[: fp.marker_z]}
    members = [v for v in range(g.n) if v not in removed_before_z]
    ph1 = backward_phase1(g, members, fp.p_z)
    we = dict(ph1.we)
    if shadow:
        _shadow_check(g, fp, ph1, we, "phase 1", alive=members, p=fp.p_z, check=members)
    backward_phase2(fp, ph1, we)
    if shadow:
        alive = members + [fp.steps[i].vertex for i in range(fp.marker_y, fp.marker_z)]
        p_y = fp.weights_at(fp.marker_y, g.n)
        _shadow_check(g, fp, ph1, we, "phase 2", alive=alive, p=p_y, check=alive)
        alive = set(alive)
        for i in range(fp.marker_y - 1, -1, -1):
            s = fp.steps[i]
            if i in fp.guarded and _pendant_tie(s, we):
                _pendant_by_bfs(g, fp, i, alive, we)
            else:
                backward_phase3_step(s, we)
            alive.add(s.vertex)
            _shadow_check(
                g, fp, ph1, we, "phase 3", i=i, alive=alive,
                p=fp.weights_at(i, g.n), check=(s.vertex, s.partner),
            )
        _shadow_check(g, fp, ph1, we, "final", alive=range(g.n), p=[0] * g.n, check=range(g.n))
    else:
        backward_phase3(g, fp, we)
    return np.array([we[v] for v in range(g.n)], dtype=np.int64)


def backward_phase3_step(s: OrientedStep, we: dict[int, int]) -> None:
    x, y = s.vertex, s.partner
    if s.kind == PENDANT:
        we[x] = max(s.p_vertex, we[y] + 1)
    else:
        d = 1 if s.kind == TRUE_TWIN else 2
        we[y] = max(s.p_vertex + d, we[y])
        we[x] = max(s.p_partner + d, we[y])


def all_eccentricities(g: Graph, shadow: bool = False, root: int | None = None) -> EccTable:
    """Exact eccentricities of a connected DH graph.

    Raises NotDistanceHereditary or DisconnectedGraph.  ``shadow`` re-checks
    every computed weighted eccentricity against a BFS on the matching
    residual graph (slow; for testing).
    """
    require_connected(g)
    if g.n == 1:
        return EccTable.from_ecc([0])
    if g.n == 2:
        return EccTable.from_ecc([1, 1])
    if root is None:
        root = find_central_vertex(g, check=False)
    seq = build_pruning_sequence(g, root)
    return EccTable.from_ecc(eccentricities_from_sequence(g, seq, shadow=shadow))
