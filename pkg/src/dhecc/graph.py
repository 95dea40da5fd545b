"""Graph representation, BFS machinery and brute-force distance oracles.

Vertices are dense integers ``0..n-1``.  Distance rows are plain ``int64``
arrays in which the value ``n`` marks an unreachable vertex.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import shortest_path

from .errors import DisconnectedGraph, DuplicateEdge, OutOfRange, SelfLoop


class Graph:
    """Immutable simple undirected graph stored as sorted adjacency tuples."""

    __slots__ = ("n", "adj", "m", "_csr", "_adjsets")

    def __init__(self, n: int, adj: Sequence[Sequence[int]]):
        self.n = n
        self.adj = tuple(tuple(a) for a in adj)
        self.m = sum(len(a) for a in self.adj) // 2
        self._csr = None
        self._adjsets = None

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        nbrs: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise OutOfRange(f"edge ({u}, {v}) outside 0..{n - 1}")
            if u == v:
                raise SelfLoop(f"self-loop at vertex {u}")
            if v in nbrs[u]:
                raise DuplicateEdge(f"duplicate edge ({u}, {v})")
            nbrs[u].add(v)
            nbrs[v].add(u)
        return cls(n, [sorted(s) for s in nbrs])

    @classmethod
    def from_adjsets(cls, adjsets: Sequence[Iterable[int]]) -> "Graph":
        """Trusted constructor: ``adjsets`` must already be symmetric and loop-free."""
        return cls(len(adjsets), [sorted(s) for s in adjsets])

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in self.adj[u] if u < v]

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adjsets[u]

    @property
    def adjsets(self) -> tuple[frozenset, ...]:
        if self._adjsets is None:
            self._adjsets = tuple(frozenset(a) for a in self.adj)
        return self._adjsets

    @property
    def csr(self) -> tuple[np.ndarray, np.ndarray]:
        """(indptr, indices) of the adjacency structure."""
        if self._csr is None:
            deg = np.fromiter((len(a) for a in self.adj), dtype=np.int64, count=self.n)
            indptr = np.zeros(self.n + 1, dtype=np.int64)
            np.cumsum(deg, out=indptr[1:])
            indices = np.fromiter(
                itertools.chain.from_iterable(self.adj), dtype=np.int64, count=int(indptr[-1])
            )
            self._csr = (indptr, indices)
        return self._csr

    def induced(self, vertices: Iterable[int]) -> tuple["Graph", list[int]]:
        """Induced subgraph, relabelled densely; returns it with the old ids."""
        old = sorted(set(vertices))
        new_id = {v: i for i, v in enumerate(old)}
        adj = [[new_id[u] for u in self.adj[v] if u in new_id] for v in old]
        return Graph(len(old), adj), old

    def __eq__(self, other):
        return isinstance(other, Graph) and self.n == other.n and self.adj == other.adj

    def __hash__(self):
        return hash((self.n, self.adj))

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.m})"


def bfs(g: Graph, source: int) -> np.ndarray:
    """Distances from ``source``; unreachable vertices get the sentinel ``g.n``."""
    if not 0 <= source < g.n:
        raise OutOfRange(f"source {source} not in 0..{g.n - 1}")
    return bfs_from_set(g, [source])


def bfs_from_set(g: Graph, sources) -> np.ndarray:
    """Distance from each vertex to the nearest of ``sources`` (sentinel ``g.n``)."""
    indptr, indices = g.csr
    dist = np.full(g.n, g.n, dtype=np.int64)
    frontier = np.unique(np.asarray(list(sources), dtype=np.int64))
    if frontier.size and (frontier.min() < 0 or frontier.max() >= g.n):
        raise OutOfRange(f"sources outside 0..{g.n - 1}")
    dist[frontier] = 0
    level = 0
    while frontier.size:
        level += 1
        starts = indptr[frontier]
        lengths = indptr[frontier + 1] - starts
        total = int(lengths.sum())
        if total == 0:
            break
        offsets = np.repeat(starts - np.cumsum(lengths) + lengths, lengths)
        nbrs = indices[offsets + np.arange(total)]
        nbrs = nbrs[dist[nbrs] == g.n]
        frontier = np.unique(nbrs)
        dist[frontier] = level
    return dist


def adjacency_matrix(g: Graph) -> np.ndarray:
    """Dense boolean adjacency matrix (for small-graph audits)."""
    a = np.zeros((g.n, g.n), dtype=bool)
    indptr, indices = g.csr
    rows = np.repeat(np.arange(g.n), np.diff(indptr))
    a[rows, indices] = True
    return a


def is_connected(g: Graph) -> bool:
    return g.n <= 1 or bool((bfs(g, 0) < g.n).all())


def require_connected(g: Graph) -> None:
    if g.n == 0:
        raise DisconnectedGraph("empty graph")
    if not is_connected(g):
        raise DisconnectedGraph("graph is not connected")


def _scipy_rows(g: Graph, sources) -> np.ndarray:
    indptr, indices = g.csr
    mat = csr_matrix((np.ones(indices.size), indices, indptr), shape=(g.n, g.n))
    # the CSR arrays are already symmetric, so the directed search is exact
    # and skips scipy's per-call symmetrisation
    rows = shortest_path(mat, method="D", directed=True, unweighted=True, indices=sources)
    rows = np.atleast_2d(rows)
    out = np.where(np.isinf(rows), g.n, rows)
    return out.astype(np.int64)


def distance_matrix(g: Graph) -> np.ndarray:
    """All-pairs distances (n x n), sentinel ``n`` for unreachable pairs.

    Uses scipy's csgraph BFS, independent of :func:`bfs`.
    """
    if g.n == 0:
        return np.zeros((0, 0), dtype=np.int64)
    return _scipy_rows(g, np.arange(g.n))


@dataclass
class EccTable:
    ecc: np.ndarray
    rad: int
    diam: int
    center: tuple[int, ...] = field(default=())
    diametral: tuple[int, ...] = field(default=())

    @classmethod
    def from_ecc(cls, ecc) -> "EccTable":
        ecc = np.asarray(ecc, dtype=np.int64)
        rad, diam = int(ecc.min()), int(ecc.max())
        return cls(
            ecc=ecc,
            rad=rad,
            diam=diam,
            center=tuple(int(v) for v in np.flatnonzero(ecc == rad)),
            diametral=tuple(int(v) for v in np.flatnonzero(ecc == diam)),
        )

    def __eq__(self, other):
        return (
            isinstance(other, EccTable)
            and np.array_equal(self.ecc, other.ecc)
            and (self.rad, self.diam, self.center, self.diametral)
            == (other.rad, other.diam, other.center, other.diametral)
        )

    def to_dict(self) -> dict:
        return {
            "n": int(self.ecc.size),
            "rad": self.rad,
            "diam": self.diam,
            "center": list(self.center),
            "diametral": list(self.diametral),
            "ecc": [int(e) for e in self.ecc],
        }


def all_pairs_ecc_oracle(g: Graph, chunk: int = 256) -> EccTable:
    """Eccentricities from one BFS per vertex (row chunks keep memory bounded)."""
    if g.n == 0:
        raise DisconnectedGraph("empty graph")
    ecc = np.empty(g.n, dtype=np.int64)
    for lo in range(0, g.n, chunk):
        rows = _scipy_rows(g, np.arange(lo, min(lo + chunk, g.n)))
        if (rows == g.n).any():
            raise DisconnectedGraph("graph is not connected")
        ecc[lo:lo + rows.shape[0]] = rows.max(axis=1)
    return EccTable.from_ecc(ecc)


def interval_slice(g: Graph, x: int, y: int, k: int, dx=None, dy=None) -> set[int]:
    """Vertices on shortest x-y paths at distance exactly ``k`` from x."""
    dx = bfs(g, x) if dx is None else dx
    dy = bfs(g, y) if dy is None else dy
    d = int(dx[y])
    if d >= g.n:
        raise DisconnectedGraph(f"{x} and {y} are in different components")
    if not 0 <= k <= d:
        raise OutOfRange(f"slice index {k} outside 0..{d}")
    return {int(v) for v in np.flatnonzero((dx == k) & (dx + dy == d))}


@dataclass
class CheckReport:
    holds: bool
    witness: tuple | None = None


def four_point_check(g: Graph, dist: np.ndarray | None = None) -> CheckReport:
    """4-point condition over all quadruples; returns the first violating one."""
    dist = distance_matrix(g) if dist is None else dist
    if g.n < 4:
        return CheckReport(True)
    quads = np.array(list(itertools.combinations(range(g.n), 4)), dtype=np.int64)
    for lo in range(0, len(quads), 200_000):
        q = quads[lo:lo + 200_000]
        u, v, w, x = q.T
        sums = np.sort(
            np.stack([dist[u, v] + dist[w, x], dist[u, w] + dist[v, x], dist[u, x] + dist[w, v]], axis=1),
            axis=1,
        )
        ok = (sums[:, 1] == sums[:, 2]) | ((sums[:, 0] == sums[:, 1]) & (sums[:, 2] - sums[:, 1] <= 2))
        bad = np.flatnonzero(~ok)
        if bad.size:
            return CheckReport(False, tuple(int(a) for a in q[bad[0]]))
    return CheckReport(True)


def layering_check(g: Graph, root: int) -> CheckReport:
    """Down-neighbourhood condition for the BFS layering from ``root``.

    Witness on failure is ``(k, v, u)``: two vertices of layer k joined outside
    the first k-1 layers but with different neighbours in layer k-1.
    """
    dist = bfs(g, root)
    if (dist == g.n).any():
        raise DisconnectedGraph("graph is not connected")
    depth = int(dist.max())
    layers = [[] for _ in range(depth + 1)]
    for v in range(g.n):
        layers[dist[v]].append(v)

    parent = list(range(g.n))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for k in range(depth, 0, -1):
        for v in layers[k]:
            for u in g.adj[v]:
                if dist[u] >= k:
                    ru, rv = find(u), find(v)
                    if ru != rv:
                        parent[ru] = rv
        seen: dict[int, tuple[int, frozenset]] = {}
        for v in layers[k]:
            down = frozenset(u for u in g.adj[v] if dist[u] == k - 1)
            r = find(v)
            if r in seen:
                other, other_down = seen[r]
                if other_down != down:
                    return CheckReport(False, (k, other, v))
            else:
                seen[r] = (v, down)
    return CheckReport(True)


def slices_joined_check(g: Graph, x: int, y: int, dx=None, dy=None) -> bool:
    dx = bfs(g, x) if dx is None else dx
    dy = bfs(g, y) if dy is None else dy
    d = int(dx[y])
    on = dx + dy == d
    slices = [np.flatnonzero(on & (dx == k)) for k in range(d + 1)]
    adjsets = g.adjsets
    for k in range(d):
        nxt = set(int(u) for u in slices[k + 1])
        for v in slices[k]:
            if not nxt <= adjsets[int(v)]:
                return False
    return True
