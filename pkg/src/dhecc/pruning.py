"""Layered pruning sequences and distance-hereditary recognition.

The sequence is built by peeling the BFS layers of a root from the deepest
one upwards.  Iteration ``k`` applies, each exhaustively and in this order:

(a) remove a vertex of layer k that is a twin of another vertex of layer k in
    the same component of the subgraph induced by layer k;
(b) remove a vertex of layer k pendant to a vertex of layer k-1;
(c) remove a vertex of layer k-1 that is a twin of another vertex of layer k-1,
    both adjacent to a common vertex of layer k;
(d) as (b).

Twins are always twins of the current residual graph.  If layer k is still
non-empty after (d) the four steps are re-run; a round without progress
means the graph is not distance-hereditary.
"""
from __future__ import annotations

import heapq
import random
from dataclasses import dataclass, field

import numpy as np

from .builders import FALSE_TWIN, PENDANT, TRUE_TWIN
from .errors import DisconnectedGraph, NotDistanceHereditary, OutOfRange
from .graph import Graph, bfs, require_connected


@dataclass(frozen=True)
class PruningStep:
    vertex: int
    kind: str
    partner: int
    layer: int
    phase: str
    index: int


@dataclass
class PruningSequence:
    """Elimination order ``steps`` followed by the surviving ``root``.

    ``marker_y`` and ``marker_z`` are 0-based positions in ``steps``:
    ``steps[marker_z:]`` is iteration 1 (layer 1 into the root) and
    ``steps[marker_y:marker_z]`` are the trailing layer-2 pendants of
    iteration 2.
    """

    steps: list[PruningStep]
    root: int
    n: int
    marker_y: int
    marker_z: int
    layer: np.ndarray = field(repr=False)
    rescans: int = 0
    iteration_starts: dict[int, int] = field(default_factory=dict)

    @property
    def order(self) -> list[int]:
        return [s.vertex for s in self.steps] + [self.root]

    def dump(self) -> str:
        """Line-oriented text: ``i vertex kind partner layer phase`` (1-based i)."""
        lines = [f"{s.index + 1} {s.vertex} {s.kind} {s.partner} {s.layer} {s.phase}" for s in self.steps]
        lines.append(f"{self.n} {self.root} root - 0 -")
        return "\n".join(lines) + "\n"


def replay(seq: PruningSequence) -> Graph:
    """Rebuild the graph by undoing the eliminations from the root outwards."""
    nbrs: list[set[int]] = [set() for _ in range(seq.n)]
    for s in reversed(seq.steps):
        if s.kind == PENDANT:
            new = {s.partner}
        elif s.kind == TRUE_TWIN:
            new = nbrs[s.partner] | {s.partner}
        else:
            new = set(nbrs[s.partner])
        nbrs[s.vertex] = new
        for u in new:
            nbrs[u].add(s.vertex)
    return Graph.from_adjsets(nbrs)


class _Pruner:
    def __init__(self, g: Graph, root: int):
        self.g = g
        self.root = root
        self.dist = bfs(g, root)
        if (self.dist == g.n).any():
            raise DisconnectedGraph("graph is not connected")
        self.layer_of = self.dist.tolist()
        self.nb = [set(a) for a in g.adj]
        rnd = random.Random(0x5EED)
        self.r = [rnd.getrandbits(64) for _ in range(g.n)]
        self.h = [sum(self.r[u] for u in a) for a in g.adj]
        self.alive = [True] * g.n
        self.steps: list[PruningStep] = []
        self.rescans = 0

    # -- elimination -----------------------------------------------------

    def _remove(self, x, kind, partner, phase, on_neighbor=None):
        self.steps.append(
            PruningStep(x, kind, partner, self.layer_of[x], phase, len(self.steps))
        )
        self.alive[x] = False
        rx = self.r[x]
        for u in self.nb[x]:
            self.nb[u].discard(x)
            if on_neighbor is not None:
                on_neighbor(u, rx)
            else:
                self.h[u] -= rx
        self.nb[x] = set()

    def _pendants(self, layer_set, k, phase):
        removed = 0
        for x in sorted(layer_set):
            if len(self.nb[x]) == 1:
                (y,) = self.nb[x]
                if self.layer_of[y] == k - 1:
                    layer_set.discard(x)
                    self._remove(x, PENDANT, y, phase)
                    removed += 1
        return removed

    def _twins(self, cands, phase, open_ok, on_removed=None):
        """Exhaustively remove twins among ``cands`` (smallest eligible id first).

        ``open_ok(x)`` decides whether false twins x, y are eligible;
        true twins always are.
        """
        nb, h, r = self.nb, self.h, self.r
        buckets: dict[tuple, set[int]] = {}

        def keys(x):
            return (("o", h[x]), ("c", h[x] + r[x]))

        def add(x):
            for key in keys(x):
                b = buckets.setdefault(key, set())
                b.add(x)
                if len(b) >= 2:
                    heapq.heappush(heap, x)
                    if len(b) == 2:
                        heapq.heappush(heap, min(b - {x}))

        def drop(x):
            for key in keys(x):
                b = buckets.get(key)
                if b is not None:
                    b.discard(x)
                    if not b:
                        del buckets[key]

        heap: list[int] = []
        for x in sorted(cands):
            add(x)

        def on_neighbor(u, rx):
            if u in cands:
                drop(u)
                h[u] -= rx
                add(u)
            else:
                h[u] -= rx

        removed = 0
        while heap:
            x = heapq.heappop(heap)
            if x not in cands:
                continue
            partner = kind = None
            for y in buckets.get(("c", h[x] + r[x]), ()):
                if y != x and y in nb[x] and len(nb[x]) == len(nb[y]) and all(u == y or u in nb[y] for u in nb[x]):
                    partner, kind = y, TRUE_TWIN
                    break
            if partner is None and open_ok(x):
                for y in buckets.get(("o", h[x]), ()):
                    if y != x and nb[x] == nb[y]:
                        partner, kind = y, FALSE_TWIN
                        break
            if partner is None:
                continue
            drop(x)
            cands.discard(x)
            if on_removed is not None:
                on_removed(x)
            self._remove(x, kind, partner, phase, on_neighbor)
            removed += 1
        return removed

    # -- iterations ------------------------------------------------------

    def run(self) -> PruningSequence:
        g, dist = self.g, self.layer_of
        depth = max(dist) if g.n else 0
        layers = [set() for _ in range(depth + 1)]
        for v in range(g.n):
            layers[dist[v]].add(v)
        z = None
        iteration_start = {}
        for k in range(depth, 0, -1):
            iteration_start[k] = len(self.steps)
            lk, lk1 = layers[k], layers[k - 1]
            first = True
            while lk:
                if not first:
                    self.rescans += 1
                first = False
                progress = 0
                # (a) twins inside layer k, same component of <L_k>
                inner = {x: sum(1 for u in self.nb[x] if dist[u] == k) for x in lk}

                def dec_inner(x, inner=inner, k=k):
                    for u in self.nb[x]:
                        if dist[u] == k:
                            inner[u] -= 1

                progress += self._twins(lk, "a", lambda x: inner[x] > 0, dec_inner)
                # (b) pendants into layer k-1
                progress += self._pendants(lk, k, "b")
                # (c) twins inside layer k-1 sharing a neighbour in layer k
                cands = {x for x in lk1 if any(dist[u] == k for u in self.nb[x])}
                progress += self._twins(cands, "c", lambda x: True)
                lk1 -= {x for x in lk1 if not self.alive[x]}
                # (d) pendants into layer k-1
                progress += self._pendants(lk, k, "d")
                if lk and not progress:
                    raise NotDistanceHereditary(
                        f"pruning stalls in layer {k} with {len(lk)} vertices left"
                    )
            if k == 1:
                z = iteration_start[1]
        if z is None:
            z = len(self.steps)
        y = z
        if depth >= 2:
            start2 = iteration_start[2]
            while y > start2:
                s = self.steps[y - 1]
                if s.kind == PENDANT and s.layer == 2 and dist[s.partner] == 1:
                    y -= 1
                else:
                    break
        return PruningSequence(
            steps=self.steps,
            root=self.root,
            n=g.n,
            marker_y=y,
            marker_z=z,
            layer=self.dist,
            rescans=self.rescans,
            iteration_starts=iteration_start,
        )


def build_pruning_sequence(g: Graph, root: int) -> PruningSequence:
    """Layered pruning sequence of ``g`` towards ``root``.

    Raises NotDistanceHereditary when no pendant/twin rule applies to a
    non-empty layer.
    """
    if not 0 <= root < g.n:
        raise OutOfRange(f"root {root} not in 0..{g.n - 1}")
    return _Pruner(g, root).run()


def is_distance_hereditary(g: Graph) -> bool:
    require_connected(g)
    try:
        build_pruning_sequence(g, 0)
    except NotDistanceHereditary:
        return False
    return True


def find_central_vertex(g: Graph, check: bool = True) -> int:
    """A vertex of minimum eccentricity, verified exactly.

    Starts from the interval bounds of a mutually distant pair, then BFS from
    the open candidate with the smallest bounds and from a vertex furthest
    from it, tightening all bounds, until no lower bound undercuts the best
    exact eccentricity seen.
    """
    from .extremal import ecc_bounds_from_pair, mutually_distant_pair

    require_connected(g)
    if check and not is_distance_hereditary(g):
        raise NotDistanceHereditary("find_central_vertex needs a DH graph")
    if g.n <= 2:
        return 0
    bounds = ecc_bounds_from_pair(g, mutually_distant_pair(g, 0))
    lower, upper = bounds.lower.copy(), bounds.upper.copy()
    idx = np.arange(g.n)

    def absorb(src):
        dist = bfs(g, src)
        ecc = int(dist.max())
        np.maximum(lower, dist, out=lower)
        np.maximum(lower, ecc - dist, out=lower)
        np.minimum(upper, dist + ecc, out=upper)
        lower[src] = upper[src] = ecc
        return dist, ecc

    while True:
        exact = lower == upper
        if exact.any():
            best_v = int(idx[exact][np.argmin(lower[exact])])
            best_e = int(lower[best_v])
        else:
            best_v, best_e = -1, g.n + 1
        open_ = ~exact & (lower < best_e)
        if not open_.any():
            return best_v
        cand = idx[open_]
        c = int(cand[np.lexsort((cand, upper[cand], lower[cand]))[0]])
        dist, ecc = absorb(c)
        far = int(np.flatnonzero(dist == ecc)[0])
        if lower[far] != upper[far]:
            absorb(far)
