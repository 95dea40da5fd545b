"""Centers, the sets C^k(G), the center classification and the eccentricity/center audits.

Audits work on a dense distance matrix and are meant for desk-scale graphs
(a few hundred vertices).  Each returns a report whose ``violations`` list
is empty when every checked statement holds.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field

import numpy as np

from .graph import (
    EccTable,
    Graph,
    adjacency_matrix,
    all_pairs_ecc_oracle,
    bfs_from_set,
    distance_matrix,
    is_connected,
)

COGRAPH = "cograph"
DIAM3_SPECIAL = "diam3-special"
INVALID = "invalid"


def _table(g: Graph, table: EccTable | None) -> EccTable:
    if table is not None:
        return table
    from .ecc_exact import all_eccentricities

    return all_eccentricities(g)


def center_of(g: Graph, table: EccTable | None = None) -> list[int]:
    return list(_table(g, table).center)


def center_and_ck(g: Graph, k: int, table: EccTable | None = None) -> tuple[list[int], list[int]]:
    """(C(G), C^k(G)) where C^k(G) = {v : e(v) <= rad + k}."""
    t = _table(g, table)
    ck = [int(v) for v in np.flatnonzero(t.ecc <= t.rad + k)]
    return list(t.center), ck


def induced_p4(h: Graph) -> tuple[int, int, int, int] | None:
    """An induced path a-b-c-d, or None.

    Every induced P4 has a middle edge bc with a in N(b) - N[c] and
    d in N(c) - N[b] non-adjacent, so scanning the (oriented) edges finds
    one if any exists.  The scan is one boolean matrix product.
    """
    if h.m < 3:
        return None
    adj = adjacency_matrix(h)
    b, c = np.nonzero(adj)
    rows = np.arange(b.size)
    left = adj[b] & ~adj[c]
    left[rows, c] = False
    right = adj[c] & ~adj[b]
    right[rows, b] = False
    non = ~adj
    np.fill_diagonal(non, False)
    hits = ((left.astype(np.float32) @ non.astype(np.float32)) * right).any(axis=1)
    idx = np.flatnonzero(hits)
    if not idx.size:
        return None
    i = int(idx[0])
    for a in np.flatnonzero(left[i]):
        d = np.flatnonzero(right[i] & non[a])
        if d.size:
            return (int(a), int(b[i]), int(c[i]), int(d[0]))
    raise AssertionError("unreachable")


def is_cograph(h: Graph) -> bool:
    """True iff ``h`` has no induced P4 (disconnected graphs allowed)."""
    return induced_p4(h) is None


@dataclass
class CenterReport:
    center: list[int]
    c1: list[int]
    classification: str
    h_diam: int | None = None
    h_connected: bool | None = None
    h_center: list[int] | None = None
    h_center_connected: bool | None = None
    h_center_cograph: bool | None = None
    h_center_rad: int | None = None
    witness: str | None = None
    unimodality_breaks: list[tuple[int, int, int]] = field(default_factory=list)
    unimodality_violations: list[tuple[int, int, int]] = field(default_factory=list)

    def to_dict(self) -> dict:
        out = {
            "center": sorted(self.center),
            "c1": sorted(self.c1),
            "classification": self.classification,
            "unimodality_breaks": [list(t) for t in self.unimodality_breaks],
            "unimodality_violations": [list(t) for t in self.unimodality_violations],
        }
        if self.classification != COGRAPH:
            out["h"] = {
                "diam": self.h_diam,
                "connected": self.h_connected,
                "center": sorted(self.h_center or []),
                "center_connected": self.h_center_connected,
                "center_cograph": self.h_center_cograph,
                "center_rad": self.h_center_rad,
            }
        if self.witness is not None:
            out["witness"] = self.witness
        return out


def classify_center(g: Graph, table: EccTable | None = None) -> CenterReport:
    """Classify the subgraph H induced by C(G).

    Either H is a cograph, or H is connected with diameter 3 and C(H) is a
    connected cograph of radius 2.  Anything else is reported as invalid
    with a reason; that never happens on DH inputs.
    """
    t = _table(g, table)
    center, c1 = center_and_ck(g, 1, t)
    h, _ = g.induced(center)
    uni = unimodality_audit(g, t)
    rep = CenterReport(
        center, c1, COGRAPH,
        unimodality_breaks=uni.breaks, unimodality_violations=uni.violations,
    )
    p4 = induced_p4(h)
    if p4 is None:
        return rep
    rep.h_connected = is_connected(h)
    if not rep.h_connected:
        rep.classification = INVALID
        rep.witness = f"C(G) has an induced P4 {[center[i] for i in p4]} but is disconnected"
        return rep
    ht = all_pairs_ecc_oracle(h)
    rep.h_diam = ht.diam
    ch, _ = h.induced(ht.center)
    rep.h_center = [center[i] for i in ht.center]
    rep.h_center_connected = is_connected(ch)
    rep.h_center_cograph = is_cograph(ch)
    rep.h_center_rad = all_pairs_ecc_oracle(ch).rad if rep.h_center_connected else None
    if ht.diam != 3:
        rep.classification, rep.witness = INVALID, f"diam(H) = {ht.diam}, expected 3"
    elif not (rep.h_center_connected and rep.h_center_cograph and rep.h_center_rad == 2):
        rep.classification, rep.witness = INVALID, "C(H) is not a connected cograph of radius 2"
    else:
        rep.classification = DIAM3_SPECIAL
    return rep


@dataclass
class UnimodalityReport:
    # (v, e(v), d(v, C)) for non-central v without a neighbour of smaller eccentricity
    breaks: list[tuple[int, int, int]]
    # the subset of ``breaks`` where e(v) = rad+1, diam = 2rad, d(v, C) = 2 fails
    violations: list[tuple[int, int, int]]

    @property
    def holds(self) -> bool:
        return not self.violations


def unimodality_audit(g: Graph, table: EccTable | None = None) -> UnimodalityReport:
    t = _table(g, table)
    ecc = t.ecc
    d_c = bfs_from_set(g, t.center)
    breaks, bad = [], []
    for v in range(g.n):
        e = int(ecc[v])
        if e == t.rad:
            continue
        if any(ecc[u] < e for u in g.adj[v]):
            continue
        rec = (v, e, int(d_c[v]))
        breaks.append(rec)
        if not (e == t.rad + 1 and t.diam == 2 * t.rad and d_c[v] == 2):
            bad.append(rec)
    return UnimodalityReport(breaks, bad)


@dataclass
class AuditReport:
    name: str
    violations: list[str] = field(default_factory=list)
    checked: int = 0

    @property
    def holds(self) -> bool:
        return not self.violations

    def fail(self, msg: str) -> None:
        self.violations.append(msg)

    def to_dict(self) -> dict:
        return {"name": self.name, "holds": self.holds, "checked": self.checked, "violations": self.violations}


def _dense(g: Graph, dist):
    dist = distance_matrix(g) if dist is None else dist
    return dist, EccTable.from_ecc(dist.max(axis=1))


def center_distance_audit(g: Graph, dist: np.ndarray | None = None) -> AuditReport:
    """Eccentricity versus distance to the center.

    Checks d(v,C)+rad-1 <= e(v) <= d(v,C)+rad; e(v) = d(v,C)+rad everywhere
    when diam < 2rad; e(v) = d(v,C^1)+rad+1 off the center; d(v,C) <= 2
    when e(v) = rad+1; and the eccentricity profile along every shortest
    path from v to a nearest central vertex.  A vertex lies on such a path
    at position i exactly when it is in the slice S_i(v', v), so the
    profiles are checked slice by slice instead of path by path.
    """
    dist, t = _dense(g, dist)
    rep = AuditReport("center-distance")
    ecc, r = t.ecc, t.rad
    center = np.asarray(t.center)
    c1 = np.flatnonzero(ecc <= r + 1)
    d_c = dist[:, center].min(axis=1)
    d_c1 = dist[:, c1].min(axis=1)
    for v in range(g.n):
        e, dv = int(ecc[v]), int(d_c[v])
        rep.checked += 1
        if not dv + r - 1 <= e <= dv + r:
            rep.fail(f"v={v}: e={e} outside [{dv + r - 1}, {dv + r}]")
        if t.diam < 2 * r and e != dv + r:
            rep.fail(f"v={v}: diam < 2rad but e={e} != d(v,C)+rad={dv + r}")
        if dv > 0 and e != int(d_c1[v]) + r + 1:
            rep.fail(f"v={v}: e={e} != d(v,C1)+rad+1={int(d_c1[v]) + r + 1}")
        if e == r + 1 and dv > 2:
            rep.fail(f"v={v}: e=rad+1 but d(v,C)={dv}")
        if dv == 0:
            continue
        upper = e == dv + r
        for vp in center[dist[v, center] == dv]:
            for i in range(dv + 1):
                slice_ = np.flatnonzero((dist[vp] == i) & (dist[v] == dv - i))
                if upper:
                    want = i + r
                elif i == 0:
                    want = r
                elif i <= 2:
                    want = r + 1
                else:
                    want = i - 1 + r
                bad = slice_[ecc[slice_] != want]
                if bad.size:
                    prof = "a" if upper else "b"
                    rep.fail(
                        f"v={v}, v'={int(vp)}: profile ({prof}) wants e={want} at position {i}, "
                        f"vertex {int(bad[0])} has {int(ecc[bad[0]])}"
                    )
    return rep


def _universal(adj, ws, s) -> bool:
    return not len(ws) or not len(s) or bool(adj[np.ix_(ws, s)].all())


def _within_one(adj, targets, s) -> bool:
    """Every vertex of ``targets`` is in ``s`` or adjacent to a vertex of ``s``."""
    if not len(targets):
        return True
    if not len(s):
        return False
    in_s = np.isin(targets, s)
    return bool((in_s | adj[np.ix_(targets, s)].any(axis=1)).all())


def diametral_pairs(dist: np.ndarray, diam: int, limit: int | None = None) -> list[tuple[int, int]]:
    xs, ys = np.nonzero(np.triu(dist == diam, 1))
    pairs = list(zip(xs.tolist(), ys.tolist()))
    return pairs if limit is None else pairs[:limit]


def center_structure_audit(g: Graph, dist: np.ndarray | None = None, pair_limit: int | None = 200) -> AuditReport:
    """Center structure for the three possible values of diam - 2rad.

    gap 0: C(G) lies in the middle slice S of every diametral pair, the two
    neighbouring slices are universal to S, S and C(G) are cographs, and
    C^1(G) is within distance 1 of S.
    gap -1: C(G) is within distance 1 of every joined edge ab of the two
    middle slices, both slices meet C(G), and C(G) is a cograph.
    gap -2: the slices at rad-2 from either end are central, the middle
    slice meets C(G), and C(G) is within distance 1 of S cap C(G).
    """
    dist, t = _dense(g, dist)
    rep = AuditReport("center-structure")
    r, gap = t.rad, t.diam - 2 * t.rad
    if not -2 <= gap <= 0:
        rep.fail(f"diam - 2rad = {gap} outside [-2, 0]")
        return rep
    adj = adjacency_matrix(g)
    closed = adj | np.eye(g.n, dtype=bool)
    center = np.asarray(t.center)
    c1 = np.flatnonzero(t.ecc <= r + 1)
    if gap > -2 and not is_cograph(g.induced(t.center)[0]):
        rep.fail("C(G) is not a cograph although diam >= 2rad - 1")
    for x, y in diametral_pairs(dist, t.diam, pair_limit):
        rep.checked += 1
        dx, dy = dist[x], dist[y]
        on = dx + dy == t.diam
        tag = f"pair ({x},{y})"
        if gap == 0:
            s = np.flatnonzero(on & (dx == r))
            if not np.isin(center, s).all():
                rep.fail(f"{tag}: C(G) not inside S_rad")
            nbr = np.flatnonzero(on & ((dx == r - 1) | (dx == r + 1)))
            if not _universal(adj, nbr, s):
                rep.fail(f"{tag}: slices rad+-1 not universal to S_rad")
            if not is_cograph(g.induced(s.tolist())[0]):
                rep.fail(f"{tag}: S_rad is not a cograph")
            if not _within_one(adj, c1, s):
                rep.fail(f"{tag}: C1(G) not within distance 1 of S_rad")
        elif gap == -1:
            a = np.flatnonzero(on & (dx == r - 1))
            b = np.flatnonzero(on & (dy == r - 1))
            if not (np.isin(a, center).any() and np.isin(b, center).any()):
                rep.fail(f"{tag}: a middle slice misses C(G)")
            ai, bi = np.nonzero(adj[np.ix_(a, b)])
            covered = closed[np.ix_(a[ai], center)] | closed[np.ix_(b[bi], center)]
            miss = np.flatnonzero(~covered.all(axis=1))
            if miss.size:
                k = miss[0]
                rep.fail(f"{tag}: C(G) not within 1 of edge ({a[ai[k]]},{b[bi[k]]})")
        else:
            a = np.flatnonzero(on & (dx == r - 2))
            b = np.flatnonzero(on & (dy == r - 2))
            s = np.flatnonzero(on & (dx == r - 1))
            sc = s[np.isin(s, center)]
            if not np.isin(np.concatenate([a, b]), center).all():
                rep.fail(f"{tag}: slices at rad-2 not central")
            if not sc.size:
                rep.fail(f"{tag}: middle slice misses C(G)")
            elif not _within_one(adj, center, sc):
                rep.fail(f"{tag}: C(G) not within 1 of S cap C(G)")
    return rep


def helly_audit(
    g: Graph, dist: np.ndarray | None = None, max_size: int = 6, limit: int = 2000
) -> AuditReport:
    """When diam = 2rad - 2: every set M of central vertices at pairwise
    distance 2 (|M| <= max_size) has a common central neighbour.

    Sets are enumerated in lexicographic order up to ``limit`` per graph.
    Graphs with another gap are skipped (checked = 0).
    """
    dist, t = _dense(g, dist)
    rep = AuditReport("helly-centers")
    if t.diam != 2 * t.rad - 2:
        return rep
    adj = adjacency_matrix(g)
    center = list(t.center)
    cadj = adj[np.ix_(center, center)]
    two = {c: [d for d in center if d > c and dist[c, d] == 2] for c in center}

    def grow(m):
        if rep.checked >= limit:
            return
        if len(m) >= 2:
            rep.checked += 1
            idx = [center.index(v) for v in m]
            if not cadj[:, idx].all(axis=1).any():
                rep.fail(f"M={m}: no central vertex universal to M")
        if len(m) == max_size:
            return
        for d in two[m[-1]]:
            if all(dist[u, d] == 2 for u in m[:-1]):
                grow(m + [d])

    for c in center:
        grow([c])
    return rep


def find_unimodality_break(seeds, n_range=(5, 60), kind_weights=None):
    """First seed in ``seeds`` whose random DH graph has a unimodality break.

    Returns (seed, n, graph, report) or None.
    """
    from .builders import DEFAULT_KIND_WEIGHTS, random_dh

    weights = DEFAULT_KIND_WEIGHTS if kind_weights is None else kind_weights
    lo, hi = n_range
    for seed in seeds:
        n = lo + seed % (hi - lo + 1)
        g, _ = random_dh(n, seed, weights)
        rep = unimodality_audit(g, all_pairs_ecc_oracle(g))
        if rep.breaks:
            return seed, n, g, rep
    return None


def p4_bruteforce(h: Graph) -> bool:
    """Quadruple scan for an induced P4 (reference for :func:`induced_p4`)."""
    adj = h.adjsets
    for quad in itertools.combinations(range(h.n), 4):
        edges = sum(1 for a, b in itertools.combinations(quad, 2) if b in adj[a])
        if edges != 3:
            continue
        degs = sorted(sum(1 for b in quad if b != a and b in adj[a]) for a in quad)
        if degs == [1, 1, 2, 2]:
            return True
    return False
