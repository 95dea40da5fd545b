"""Seeded corpus of random DH graphs and the per-graph invariant sweep."""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .builders import random_dh
from .graph import EccTable, Graph, all_pairs_ecc_oracle, distance_matrix

# kind-weight mixes cycled through the corpus: default, pendant-heavy,
# twin-heavy, false-twin-heavy
WEIGHT_MIXES = (
    (0.4, 0.3, 0.3),
    (0.7, 0.15, 0.15),
    (0.1, 0.45, 0.45),
    (0.2, 0.1, 0.7),
)


@dataclass(frozen=True)
class Instance:
    index: int
    n: int
    seed: int
    weights: tuple[float, float, float]

    def build(self) -> Graph:
        return random_dh(self.n, self.seed, self.weights)[0]

    def to_dict(self) -> dict:
        return {"index": self.index, "n": self.n, "seed": self.seed, "weights": list(self.weights)}


def corpus(count: int = 500, seed: int = 0, n_min: int = 1, n_max: int = 200) -> list[Instance]:
    """``count`` instance descriptors; sizes and per-graph seeds drawn from ``seed``."""
    rng = np.random.default_rng(seed)
    sizes = rng.integers(n_min, n_max + 1, size=count)
    seeds = rng.integers(0, 2**31 - 1, size=count)
    return [
        Instance(i, int(sizes[i]), int(seeds[i]), WEIGHT_MIXES[i % len(WEIGHT_MIXES)])
        for i in range(count)
    ]


@dataclass
class GraphAudit:
    n: int
    results: dict[str, list[str]] = field(default_factory=dict)
    classification: str | None = None
    unimodality_breaks: int = 0

    @property
    def holds(self) -> bool:
        return not any(self.results.values())

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "holds": self.holds,
            "classification": self.classification,
            "unimodality_breaks": self.unimodality_breaks,
            "violations": {k: v for k, v in sorted(self.results.items())},
        }


def audit_graph(g: Graph, seed: int = 0) -> GraphAudit:
    """Every invariant check on one connected DH graph, against the BFS oracle."""
    from .centers import (
        INVALID,
        center_distance_audit,
        center_structure_audit,
        classify_center,
        helly_audit,
    )
    from .certificates import certify, furthest_path_audit
    from .ecc_exact import all_eccentricities
    from .extremal import bounds_audit, structural_audit

    dist = distance_matrix(g)
    oracle = EccTable.from_ecc(dist.max(axis=1))
    out = GraphAudit(g.n)
    r = out.results
    fast = all_eccentricities(g)
    r["ecc-vs-oracle"] = [] if fast == oracle else ["ecc differs from the BFS oracle"]
    rep = classify_center(g, oracle)
    out.classification = rep.classification
    out.unimodality_breaks = len(rep.unimodality_breaks)
    r["classification"] = [rep.witness or "invalid"] if rep.classification == INVALID else []
    r["unimodality"] = [f"v={v}, e={e}, d(v,C)={d}" for v, e, d in rep.unimodality_violations]
    r["center-distance"] = center_distance_audit(g, dist).violations
    r["center-structure"] = center_structure_audit(g, dist).violations
    r["helly-centers"] = helly_audit(g, dist).violations
    r["bounds"] = bounds_audit(g, oracle.ecc, dist=dist)
    r["structural"] = structural_audit(g, dist, np.random.default_rng(seed))
    certs = certify(g, oracle)
    r["certificates"] = [
        f"{kind} certificate fails at vertex {c.witness}" for kind, c in sorted(certs.items()) if not c.passed
    ]
    r["furthest-path"] = furthest_path_audit(g, dist)
    return out


def oracle_table(g: Graph) -> EccTable:
    return all_pairs_ecc_oracle(g)
