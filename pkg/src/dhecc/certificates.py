"""Lower and upper eccentricity certificates.

For a vertex set L the lower estimate is e_L(v) = max over x in L of d(v, x);
for a set U with known eccentricities the upper estimate is
e^U(v) = min over x in U of d(v, x) + e(x).  L is a radius certificate when
e_L(v) >= rad for every v, U is a diameter certificate when e^U(v) <= diam
for every v, and U is a tight upper certificate when e^U equals e.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import BadParameter, EmptyCertificate
from .graph import EccTable, Graph, bfs, distance_matrix

LOWER, UPPER, RADIUS, DIAMETER, TIGHT_UPPER = "lower", "upper", "radius", "diameter", "tight-upper"


@dataclass
class CertificateReport:
    kind: str
    cert_set: list[int]
    values: np.ndarray
    passed: bool
    witness: int | None = None

    @property
    def verdict(self) -> str:
        return "pass" if self.passed else "fail"

    def to_dict(self) -> dict:
        return {
            "kind": self.kind,
            "cert_set": sorted(self.cert_set),
            "values": [int(v) for v in self.values],
            "verdict": self.verdict,
            "witness": self.witness,
        }


def _members(g: Graph, s) -> list[int]:
    s = sorted({int(v) for v in s})
    if not s:
        raise EmptyCertificate("certificate set is empty")
    return s


def eval_lower(g: Graph, L) -> np.ndarray:
    """e_L(v) for every v, one BFS per element of L."""
    out = np.zeros(g.n, dtype=np.int64)
    for x in _members(g, L):
        np.maximum(out, bfs(g, x), out=out)
    return out


def eval_upper(g: Graph, U, ecc_u) -> np.ndarray:
    """e^U(v) for every v; ``ecc_u`` maps each x in U to e(x) (dict or full array)."""
    out = np.full(g.n, np.iinfo(np.int64).max, dtype=np.int64)
    for x in _members(g, U):
        np.minimum(out, bfs(g, x) + int(ecc_u[x]), out=out)
    return out


def _first(mask: np.ndarray) -> int | None:
    idx = np.flatnonzero(mask)
    return int(idx[0]) if idx.size else None


def _exact(g: Graph, table: EccTable | None) -> EccTable:
    if table is not None:
        return table
    from .ecc_exact import all_eccentricities

    return all_eccentricities(g)


def verify_radius_certificate(g: Graph, L, table: EccTable | None = None) -> CertificateReport:
    t = _exact(g, table)
    vals = eval_lower(g, L)
    w = _first(vals < t.rad)
    return CertificateReport(RADIUS, _members(g, L), vals, w is None, w)


def verify_diameter_certificate(g: Graph, U, table: EccTable | None = None) -> CertificateReport:
    t = _exact(g, table)
    vals = eval_upper(g, U, t.ecc)
    w = _first(vals > t.diam)
    return CertificateReport(DIAMETER, _members(g, U), vals, w is None, w)


def verify_tight_upper(g: Graph, U, table: EccTable | None = None) -> CertificateReport:
    t = _exact(g, table)
    vals = eval_upper(g, U, t.ecc)
    w = _first(vals != t.ecc)
    return CertificateReport(TIGHT_UPPER, _members(g, U), vals, w is None, w)


def verify_sandwich(g: Graph, S, table: EccTable | None = None) -> tuple[CertificateReport, CertificateReport]:
    """e_S <= e <= e^S; holds for every connected graph and every S."""
    t = _exact(g, table)
    lo, hi = eval_lower(g, S), eval_upper(g, S, t.ecc)
    wl, wh = _first(lo > t.ecc), _first(hi < t.ecc)
    members = _members(g, S)
    return (
        CertificateReport(LOWER, members, lo, wl is None, wl),
        CertificateReport(UPPER, members, hi, wh is None, wh),
    )


def diametral_set(table: EccTable) -> list[int]:
    return list(table.diametral)


def certify(g: Graph, table: EccTable | None = None) -> dict[str, CertificateReport]:
    """D(G) as radius certificate, C(G) as diameter certificate, C^1(G) as tight upper."""
    t = _exact(g, table)
    c1 = [int(v) for v in np.flatnonzero(t.ecc <= t.rad + 1)]
    return {
        RADIUS: verify_radius_certificate(g, t.diametral, t),
        DIAMETER: verify_diameter_certificate(g, t.center, t),
        TIGHT_UPPER: verify_tight_upper(g, c1, t),
    }


def furthest_path_audit(g: Graph, dist: np.ndarray | None = None) -> list[str]:
    """For v outside C(G) and u in F(v): some w in I(v,u) cap C^1(G) has u in F(w).

    When diam < 2rad the same holds with C(G), for every v.  Returns the
    violations (empty when both statements hold).
    """
    dist = distance_matrix(g) if dist is None else dist
    ecc = dist.max(axis=1)
    rad, diam = int(ecc.min()), int(ecc.max())
    central = ecc == rad
    near = ecc <= rad + 1
    bad = []
    for v in range(g.n):
        for u in np.flatnonzero(dist[v] == ecc[v]):
            between = dist[v] + dist[u] == dist[v, u]
            sees_u = dist[:, u] == ecc
            if not central[v] and not (between & near & sees_u).any():
                bad.append(f"v={v}, u={int(u)}: no w in I(v,u) cap C1 with u in F(w)")
            if diam < 2 * rad and not (between & central & sees_u).any():
                bad.append(f"v={v}, u={int(u)}: no w in I(v,u) cap C with u in F(w)")
    return bad


@dataclass
class CounterexampleSearch:
    graph: Graph | None
    seed: int
    trials: int
    rad: int | None = None
    diam: int | None = None
    e_lower_min: int | None = None
    e_upper_max: int | None = None


def _chord_graph(rng, min_n: int, max_n: int) -> Graph:
    # a random spanning tree with one to three extra edges
    n = int(rng.integers(min_n, max_n + 1))
    edges = {(int(rng.integers(i)), i) for i in range(1, n)}
    for _ in range(int(rng.integers(1, 4))):
        a, b = sorted(int(v) for v in rng.choice(n, 2, replace=False))
        edges.add((a, b))
    return Graph.from_edges(n, sorted(edges))


def _ear_graph(rng, spine: int) -> Graph:
    # a path on ``spine`` vertices plus one to three ears (new paths of
    # length 1..5 between two existing vertices)
    edges = {(i, i + 1) for i in range(spine - 1)}
    n = spine
    for _ in range(int(rng.integers(1, 4))):
        length = int(rng.integers(1, 6))
        a, b = (int(v) for v in rng.choice(n, 2, replace=False))
        prev = a
        for _ in range(length - 1):
            edges.add((prev, n))
            prev, n = n, n + 1
        edges.add((prev, b))
    return Graph.from_edges(n, sorted({tuple(sorted(e)) for e in edges}))


def _target_signature(t, lo, hi) -> bool:
    # one central vertex, two diametral vertices, everything else at ecc 5,
    # e_D(center) = 3 and e^C reaching 8
    c = t.center[0]
    return (
        (t.diam, t.rad) == (6, 4) and len(t.center) == 1 and len(t.diametral) == 2
        and int((t.ecc == 5).sum()) == len(t.ecc) - 3
        and int(lo[c]) == 3 and int(hi.max()) == 8
    )


def search_certificate_counterexample(
    max_n: int = 12, seed: int = 0, trials: int = 200_000, want: tuple[int, int] | None = None,
    min_n: int = 5, family: str = "chords", first_trial: int = 0, exact: bool = False,
) -> CounterexampleSearch:
    """Seeded search for a connected graph where D(G) is not a radius
    certificate and C(G) is not a diameter certificate.

    ``want`` = (diam, rad) restricts the search to that signature.  Two
    families are sampled: ``"chords"`` (random spanning tree plus a few
    extra edges) and ``"ears"`` (a 7-vertex path plus a few ears, which
    keeps the diameter near 6).  Trial ``k`` draws from its own generator
    seeded with ``(seed, k)``, so a hit can be replayed directly with
    ``first_trial=k, trials=1``.  ``exact`` additionally demands the
    single-center / two-periphery shape with e_D(center) = 3 and
    max e^C = 8 (implies want = (6, 4)).
    """
    from .graph import all_pairs_ecc_oracle

    if family not in ("chords", "ears"):
        raise BadParameter(f"unknown family {family!r}")
    if exact:
        want = (6, 4)
    for trial in range(first_trial, first_trial + trials):
        rng = np.random.default_rng([seed, trial])
        g = _chord_graph(rng, min_n, max_n) if family == "chords" else _ear_graph(rng, 7)
        if g.n > max_n:
            continue
        t = all_pairs_ecc_oracle(g)
        if want is not None and (t.diam, t.rad) != want:
            continue
        lo = eval_lower(g, t.diametral)
        hi = eval_upper(g, t.center, t.ecc)
        if exact and not _target_signature(t, lo, hi):
            continue
        if lo.min() < t.rad and hi.max() > t.diam:
            return CounterexampleSearch(g, seed, trial + 1, t.rad, t.diam, int(lo.min()), int(hi.max()))
    return CounterexampleSearch(None, seed, first_trial + trials)
