"""Mutually distant pairs from repeated BFS sweeps and eccentricity intervals."""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .graph import Graph, bfs, require_connected


@dataclass
class MutuallyDistantPair:
    x: int
    y: int
    dist: int
    sweeps: int
    dx: np.ndarray = field(repr=False)
    dy: np.ndarray = field(repr=False)
    trace: list[int] = field(default_factory=list)


@dataclass
class EccBounds:
    lower: np.ndarray
    upper: np.ndarray
    pair: MutuallyDistantPair

    def slack(self) -> np.ndarray:
        return self.upper - self.lower

    def to_dict(self) -> dict:
        return {
            "pair": {"x": self.pair.x, "y": self.pair.y, "dist": self.pair.dist, "sweeps": self.pair.sweeps},
            "lower": [int(v) for v in self.lower],
            "upper": [int(v) for v in self.upper],
        }


def furthest(dist: np.ndarray) -> int:
    """Smallest-id vertex at maximum distance."""
    return int(np.flatnonzero(dist == dist.max())[0])


def mutually_distant_pair(g: Graph, start: int = 0) -> MutuallyDistantPair:
    """Follow furthest vertices from ``start`` until the distance stops growing.

    On DH graphs this needs at most five BFS runs; on other graphs it still
    terminates because the distance is bounded by the diameter.
    """
    require_connected(g)
    trace = [start]
    rows = [bfs(g, start)]
    prev_d = -1
    while True:
        cur = rows[-1]
        nxt = furthest(cur)
        d = int(cur[nxt])
        if d == prev_d:
            # trace[-2] is furthest from trace[-1] and vice versa
            x, y = trace[-2], trace[-1]
            return MutuallyDistantPair(x, y, d, len(rows), rows[-2], rows[-1], trace)
        prev_d = d
        trace.append(nxt)
        rows.append(bfs(g, nxt))


def ecc_bounds_from_pair(g: Graph, pair: MutuallyDistantPair, center=None) -> EccBounds:
    """Per-vertex [lower, upper] from the distances to a mutually distant pair.

    Upper bound adds 0 when the two distances differ by >= 2, 1 when they
    differ by exactly 1 or the pair distance is odd, and 2 otherwise.  If a
    known ``center`` is given its vertices get at most +1.
    """
    a, b = pair.dx, pair.dy
    lower = np.maximum(a, b)
    gap = np.abs(a - b)
    add = np.where(gap >= 2, 0, np.where((gap == 1) | (pair.dist % 2 == 1), 1, 2))
    if center is not None:
        idx = np.asarray(list(center), dtype=np.int64)
        add[idx] = np.minimum(add[idx], 1)
    return EccBounds(lower=lower, upper=lower + add, pair=pair)


@dataclass
class DualityReport:
    u: int
    v: int
    violations: list[str]

    @property
    def holds(self) -> bool:
        return not self.violations


def duality_audit(g: Graph, pair: MutuallyDistantPair, u: int, du=None) -> DualityReport:
    """Check both sandwich inequalities for ``u`` and its furthest vertex.

    ``v`` is the smallest-id vertex furthest from ``u``.  When either upper
    bound is attained with +2, the forced equalities are checked too.
    """
    du = bfs(g, u) if du is None else du
    v = furthest(du)
    eu = int(du[v])
    x, y, dxy = pair.x, pair.y, pair.dist
    bad = []

    alpha, beta = int(du[x]), int(du[y])
    hi = max(max(alpha, beta), min(alpha, beta) + 2)
    if not max(alpha, beta) <= eu <= hi:
        bad.append(f"e(u)={eu} outside [{max(alpha, beta)}, {hi}] from d(u,x)={alpha}, d(u,y)={beta}")
    if eu == max(alpha, beta) + 2:
        if not (alpha == beta == eu - 2 and pair.dx[v] == pair.dy[v] == dxy):
            bad.append("e(u) attains max+2 without alpha=beta=e(u)-2 and d(v,x)=d(v,y)=d(x,y)")

    alpha2, beta2 = int(pair.dx[v]), int(pair.dy[v])
    hi2 = max(max(alpha2, beta2), min(alpha2, beta2) + 2)
    if not max(alpha2, beta2) <= dxy <= hi2:
        bad.append(f"d(x,y)={dxy} outside [{max(alpha2, beta2)}, {hi2}] from d(v,x)={alpha2}, d(v,y)={beta2}")
    if dxy == max(alpha2, beta2) + 2:
        if not (alpha2 == beta2 == dxy - 2 and du[x] == du[y] == eu):
            bad.append("d(x,y) attains max+2 without alpha=beta=d(x,y)-2 and d(u,x)=d(u,y)=d(u,v)")
    return DualityReport(u, v, bad)


def bounds_audit(g: Graph, ecc: np.ndarray, start: int = 0, dist: np.ndarray | None = None) -> list[str]:
    """Interval containment, exactness of the |d(x,u) - d(y,u)| >= 2 case,
    the five-sweep limit, e >= diam - 2 for the first furthest vertex, and
    the duality inequalities at every vertex."""
    ecc = np.asarray(ecc)
    diam = int(ecc.max())
    pair = mutually_distant_pair(g, start)
    b = ecc_bounds_from_pair(g, pair)
    bad = []
    if pair.sweeps > 5:
        bad.append(f"mutually distant pair needed {pair.sweeps} BFS sweeps")
    if len(pair.trace) > 1 and ecc[pair.trace[1]] < diam - 2:
        bad.append(f"first furthest vertex {pair.trace[1]} has e={int(ecc[pair.trace[1]])} < diam-2")
    out = np.flatnonzero((ecc < b.lower) | (ecc > b.upper))
    if out.size:
        u = int(out[0])
        bad.append(f"e({u})={int(ecc[u])} outside [{int(b.lower[u])}, {int(b.upper[u])}]")
    wide = np.abs(pair.dx - pair.dy) >= 2
    inexact = np.flatnonzero(wide & (ecc != b.lower))
    if inexact.size:
        bad.append(f"|d(x,u)-d(y,u)| >= 2 but e({int(inexact[0])}) != max distance")
    for u in range(g.n):
        rep = duality_audit(g, pair, u, None if dist is None else dist[u])
        bad.extend(f"u={u}: {msg}" for msg in rep.violations)
    return bad


def structural_audit(g: Graph, dist: np.ndarray, rng: np.random.Generator, pairs: int = 20) -> list[str]:
    """diam >= 2rad - 2, e(u) >= max(2rad - 3, diam - 2) for furthest vertices, and
    consecutive interval slices joined for ``pairs`` random vertex pairs."""
    from .graph import slices_joined_check

    ecc = dist.max(axis=1)
    rad, diam = int(ecc.min()), int(ecc.max())
    bad = []
    if diam < 2 * rad - 2:
        bad.append(f"diam={diam} < 2rad-2={2 * rad - 2}")
    peripheral = (dist == ecc[:, None]).any(axis=0)
    low = np.flatnonzero(peripheral & (ecc < 2 * rad - 3))
    if low.size:
        bad.append(f"furthest vertex {int(low[0])} has e={int(ecc[low[0]])} < 2rad-3")
    low = np.flatnonzero(peripheral & (ecc < diam - 2))
    if low.size:
        bad.append(f"furthest vertex {int(low[0])} has e={int(ecc[low[0]])} < diam-2")
    for _ in range(pairs if g.n > 1 else 0):
        x, y = (int(v) for v in rng.integers(g.n, size=2))
        if not slices_joined_check(g, x, y, dist[x], dist[y]):
            bad.append(f"slices of I({x},{y}) not joined")
    return bad
