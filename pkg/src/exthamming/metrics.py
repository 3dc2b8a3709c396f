"""Breadth-first distances, diameter and distance-regularity testing."""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Optional

import numpy as np

from exthamming.errors import BudgetError
from exthamming.graphcore import Graph

MAX_DR_VERTICES = 4096


@dataclass(frozen=True)
class DistancePartition:
    source: int
    cells: tuple[tuple[int, ...], ...]

    @property
    def eccentricity(self) -> int:
        return len(self.cells) - 1

    @property
    def sizes(self) -> list[int]:
        return [len(c) for c in self.cells]


def _gather(g: Graph, frontier: np.ndarray) -> np.ndarray:
    """Concatenated neighbor lists of ``frontier``."""
    starts = g.offsets[frontier]
    lens = g.offsets[frontier + 1] - starts
    total = int(lens.sum())
    if total == 0:
        return np.zeros(0, dtype=np.int64)
    shift = np.repeat(starts - np.concatenate([[0], np.cumsum(lens)[:-1]]), lens)
    return g.neighbors[np.arange(total) + shift]


def distances_from(g: Graph, source: int) -> np.ndarray:
    """Distance array from ``source``; unreachable vertices get -1."""
    if not 0 <= source < g.vertex_count:
        raise ValueError(f"source {source} outside [0, {g.vertex_count})")
    dist = np.full(g.vertex_count, -1, dtype=np.int64)
    dist[source] = 0
    frontier = np.array([source], dtype=np.int64)
    r = 0
    while frontier.size:
        r += 1
        nb = _gather(g, frontier)
        nb = np.unique(nb[dist[nb] < 0])
        dist[nb] = r
        frontier = nb
    return dist


def bfs(g: Graph, source: int) -> DistancePartition:
    dist = distances_from(g, source)
    reached = dist[dist >= 0]
    ecc = int(reached.max())
    order = np.argsort(dist, kind="stable")
    order = order[dist[order] >= 0]
    bounds = np.searchsorted(dist[order], np.arange(ecc + 2))
    cells = tuple(tuple(order[bounds[r] : bounds[r + 1]].tolist()) for r in range(ecc + 1))
    return DistancePartition(source, cells)


def eccentricity(g: Graph, source: int) -> int:
    dist = distances_from(g, source)
    if np.any(dist < 0):
        missing = int(np.argmax(dist < 0))
        raise ValueError(f"graph is disconnected: vertex {missing} unreachable from {source}")
    return int(dist.max())


def diameter(g: Graph, all_pairs: bool = False) -> int:
    """Exact diameter.

    Vertex-transitive graphs need a single BFS since every vertex has the
    same eccentricity; ``all_pairs`` forces the full sweep.
    """
    if g.vertex_count == 0:
        raise ValueError("empty graph has no diameter")
    if g.vertex_transitive and not all_pairs:
        return eccentricity(g, 0)
    return max(eccentricity(g, v) for v in range(g.vertex_count))


@dataclass(frozen=True)
class DRWitness:
    """Vertices v1, v2 both at distance r from u with different counts ``kind``."""

    u: int
    v1: int
    v2: int
    r: int
    kind: str  # "b" counts neighbors at distance r+1, "c" at distance r-1
    count1: int
    count2: int
    other_source: Optional[int] = None  # set when count1 was observed from another source

    def to_json(self) -> dict:
        return dict(self.__dict__)


@dataclass(frozen=True)
class DRReport:
    is_dr: bool
    intersection_array: Optional[tuple[tuple[int, ...], tuple[int, ...]]] = None
    witness: Optional[DRWitness] = None
    sampled: bool = False
    sources_checked: int = 0
    reason: str = ""

    def to_json(self) -> dict:
        arr = None
        if self.intersection_array is not None:
            arr = {"b": list(self.intersection_array[0]), "c": list(self.intersection_array[1])}
        return {
            "is_dr": self.is_dr,
            "intersection_array": arr,
            "witness": self.witness.to_json() if self.witness else None,
            "sampled": self.sampled,
            "sources_checked": self.sources_checked,
            "reason": self.reason,
        }


def layer_counts(g: Graph, dist: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Per vertex w: neighbors one step closer to / farther from the source."""
    src_dist = np.repeat(dist, g.degrees())
    nb_dist = dist[g.neighbors]
    starts = g.offsets[:-1]
    closer = np.add.reduceat((nb_dist == src_dist - 1).astype(np.int64), starts)
    farther = np.add.reduceat((nb_dist == src_dist + 1).astype(np.int64), starts)
    return closer, farther


def distance_regularity_check(g: Graph, sample: Optional[int] = None, seed: int = 0) -> DRReport:
    """Test whether every b_r and c_r depends only on r.

    Sources are scanned in ascending order.  Within a source, each layer's
    counts are compared with those of the layer's smallest vertex and the
    first disagreement is returned as the witness; afterwards the per-layer
    values must match those of the first source.  Graphs above MAX_DR_VERTICES need
    ``sample`` (number of random sources) and yield a "sampled" report.
    """
    V = g.vertex_count
    deg = g.degrees()
    if V == 0:
        raise ValueError("empty graph")
    if np.any(deg != deg[0]):
        irregular = int(np.argmax(deg != deg[0]))
        return DRReport(False, reason=f"not regular: deg(0)={deg[0]}, deg({irregular})={deg[irregular]}",
                        witness=DRWitness(0, 0, irregular, 0, "degree", int(deg[0]), int(deg[irregular])))
    if np.any(deg == 0) and V > 1:
        raise ValueError("graph is disconnected")
    sampled = False
    if V > MAX_DR_VERTICES:
        if sample is None:
            raise BudgetError(
                f"distance-regularity check limited to {MAX_DR_VERTICES} vertices; pass sample=..."
            )
        sources = sorted(random.Random(seed).sample(range(V), min(sample, V)))
        sampled = True
    else:
        sources = range(V)

    reference: Optional[dict[int, tuple[int, int]]] = None
    first_source = None
    count = 0
    for u in sources:
        count += 1
        dist = distances_from(g, u)
        if np.any(dist < 0):
            raise ValueError(f"graph is disconnected: vertex {int(np.argmax(dist < 0))} unreachable")
        closer, farther = layer_counts(g, dist)
        layers: dict[int, tuple[int, int]] = {}
        for r in range(int(dist.max()) + 1):
            layer = np.flatnonzero(dist == r)
            v1 = int(layer[0])
            for kind, counts in (("c", closer), ("b", farther)):
                bad = np.flatnonzero(counts[layer] != counts[v1])
                if bad.size:
                    v2 = int(layer[bad[0]])
                    return DRReport(
                        False,
                        witness=DRWitness(u, v1, v2, r, kind, int(counts[v1]), int(counts[v2])),
                        sampled=sampled, sources_checked=count,
                        reason=f"intersection number {kind}_{r} is not constant",
                    )
            layers[r] = (int(closer[v1]), int(farther[v1]))
        if reference is None:
            reference, first_source = layers, u
        elif layers != reference:
            r = min(r for r in set(layers) | set(reference) if layers.get(r) != reference.get(r))
            mine, theirs = layers.get(r, (-1, -1)), reference.get(r, (-1, -1))
            kind = "c" if mine[0] != theirs[0] else "b"
            idx = 0 if kind == "c" else 1
            return DRReport(
                False,
                witness=DRWitness(u, _first_at_distance(dist, r), _first_at_distance(dist, r), r,
                                  kind, theirs[idx], mine[idx], other_source=first_source),
                sampled=sampled, sources_checked=count,
                reason=f"{kind}_{r} differs between sources {first_source} and {u}",
            )
    d = max(reference)
    b_arr = tuple(reference[r][1] for r in range(d))
    c_arr = tuple(reference[r][0] for r in range(1, d + 1))
    return DRReport(True, intersection_array=(b_arr, c_arr), sampled=sampled,
                    sources_checked=count)


def _first_at_distance(dist: np.ndarray, r: int) -> int:
    hits = np.flatnonzero(dist == r)
    return int(hits[0]) if hits.size else -1
