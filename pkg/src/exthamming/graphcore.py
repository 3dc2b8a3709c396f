"""Immutable simple undirected graphs in CSR form.

Vertices of product-style graphs are tuples over {0, ..., m-1} encoded in
base m with the first coordinate as the most significant digit, so the
coordinatewise complement of a tuple is the index map v -> m^n - 1 - v.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass, field
from typing import Optional, Sequence

import numpy as np

from exthamming.errors import GuardrailError

MAX_VERTICES = 1 << 26
WARN_VERTICES = 1 << 25
INDEX_LIMIT = 1 << 62


def check_vertex_budget(count: int) -> None:
    if count > MAX_VERTICES:
        raise GuardrailError(
            f"refusing to build a graph with {count} vertices (limit {MAX_VERTICES})"
        )
    if count >= WARN_VERTICES:
        warnings.warn(f"building a graph with {count} vertices", ResourceWarning, stacklevel=3)


def encode_vertex(coords: Sequence[int], m: int) -> int:
    """Encode a tuple over {0..m-1} as a base-m integer, first coordinate highest."""
    if m < 1:
        raise ValueError(f"alphabet size must be positive, got {m}")
    if len(coords) < 1:
        raise ValueError("tuple must have at least one coordinate")
    if m ** len(coords) > INDEX_LIMIT:
        raise OverflowError(f"{m}^{len(coords)} vertices do not fit the index width")
    index = 0
    for c in coords:
        if not 0 <= c < m:
            raise ValueError(f"coordinate {c} outside [0, {m})")
        index = index * m + int(c)
    return index


def decode_vertex(v: int, n: int, m: int) -> tuple[int, ...]:
    if n < 1 or m < 1:
        raise ValueError(f"invalid shape n={n}, m={m}")
    if not 0 <= v < m**n:
        raise ValueError(f"vertex {v} outside [0, {m ** n})")
    digits = [0] * n
    for k in range(n - 1, -1, -1):
        v, digits[k] = divmod(v, m)
    return tuple(digits)


def _frozen(a: np.ndarray) -> np.ndarray:
    a = np.ascontiguousarray(a)
    a.setflags(write=False)
    return a


@dataclass(frozen=True, eq=False)
class Graph:
    """Simple undirected graph with sorted CSR neighbor lists.

    ``offsets`` has ``vertex_count + 1`` entries; the neighbors of ``v`` are
    ``neighbors[offsets[v]:offsets[v + 1]]`` in strictly ascending order.
    """

    vertex_count: int
    offsets: np.ndarray
    neighbors: np.ndarray
    family: Optional[str] = None
    degree: Optional[int] = None
    vertex_transitive: bool = False
    _edge_cache: dict = field(default_factory=dict, repr=False)

    # -- constructors -------------------------------------------------

    @classmethod
    def from_neighbor_matrix(cls, rows: np.ndarray, **meta) -> Graph:
        """Build a regular graph from a (V, d) array of neighbor indices."""
        rows = np.sort(np.asarray(rows, dtype=np.int64), axis=1)
        count, d = rows.shape
        offsets = np.arange(count + 1, dtype=np.int64) * d
        g = cls(count, _frozen(offsets), _frozen(rows.reshape(-1)), degree=d, **meta)
        g.validate()
        return g

    @classmethod
    def from_edges(cls, vertex_count: int, us, vs, **meta) -> Graph:
        """Build from an undirected edge list; each edge must appear once."""
        us = np.asarray(us, dtype=np.int64)
        vs = np.asarray(vs, dtype=np.int64)
        if us.shape != vs.shape:
            raise ValueError("edge endpoint arrays differ in length")
        if us.size and (min(us.min(), vs.min()) < 0 or max(us.max(), vs.max()) >= vertex_count):
            raise ValueError("edge endpoint out of range")
        src = np.concatenate([us, vs])
        dst = np.concatenate([vs, us])
        order = np.lexsort((dst, src))
        src, dst = src[order], dst[order]
        offsets = np.zeros(vertex_count + 1, dtype=np.int64)
        np.cumsum(np.bincount(src, minlength=vertex_count), out=offsets[1:])
        deg = np.diff(offsets)
        degree = int(deg[0]) if vertex_count and np.all(deg == deg[0]) else None
        meta.setdefault("degree", degree)
        g = cls(vertex_count, _frozen(offsets), _frozen(dst), **meta)
        g.validate()
        return g

    # -- queries ------------------------------------------------------

    def neighbors_of(self, v: int) -> np.ndarray:
        return self.neighbors[self.offsets[v] : self.offsets[v + 1]]

    def degrees(self) -> np.ndarray:
        return np.diff(self.offsets)

    @property
    def edge_count(self) -> int:
        return int(self.neighbors.size // 2)

    def edges(self) -> np.ndarray:
        """(E, 2) array of edges ``u < v`` sorted lexicographically."""
        if "edges" not in self._edge_cache:
            src = np.repeat(np.arange(self.vertex_count, dtype=np.int64), self.degrees())
            keep = src < self.neighbors
            e = np.column_stack([src[keep], self.neighbors[keep]])
            self._edge_cache["edges"] = _frozen(e)
        return self._edge_cache["edges"]

    def edge_keys(self) -> np.ndarray:
        """Sorted int64 keys ``u * V + v`` for the edges ``u < v``."""
        e = self.edges()
        return e[:, 0] * self.vertex_count + e[:, 1]

    def has_edge(self, u: int, v: int) -> bool:
        row = self.neighbors_of(u)
        i = np.searchsorted(row, v)
        return bool(i < row.size and row[i] == v)

    def same_edges(self, other: Graph) -> bool:
        return self.vertex_count == other.vertex_count and np.array_equal(
            self.offsets, other.offsets
        ) and np.array_equal(self.neighbors, other.neighbors)

    def to_dense(self, dtype=np.int64) -> np.ndarray:
        if self.vertex_count > 8192:
            raise GuardrailError("dense adjacency limited to 8192 vertices")
        a = np.zeros((self.vertex_count, self.vertex_count), dtype=dtype)
        src = np.repeat(np.arange(self.vertex_count), self.degrees())
        a[src, self.neighbors] = 1
        return a

    def to_scipy(self):
        from scipy.sparse import csr_matrix

        data = np.ones(self.neighbors.size, dtype=np.int64)
        return csr_matrix(
            (data, self.neighbors, self.offsets), shape=(self.vertex_count, self.vertex_count)
        )

    def adjacency_lists(self) -> dict[int, list[int]]:
        return {v: self.neighbors_of(v).tolist() for v in range(self.vertex_count)}

    # -- audit --------------------------------------------------------

    def validate(self) -> None:
        """Structural audit: sorted simple rows, symmetry, declared regularity."""
        V = self.vertex_count
        off, nb = self.offsets, self.neighbors
        if off.shape != (V + 1,) or off[0] != 0 or off[-1] != nb.size:
            raise ValueError("malformed offsets")
        deg = np.diff(off)
        if np.any(deg < 0):
            raise ValueError("offsets not monotone")
        if nb.size == 0:
            return
        if nb.min() < 0 or nb.max() >= V:
            raise ValueError("neighbor index out of range")
        src = np.repeat(np.arange(V, dtype=np.int64), deg)
        if np.any(src == nb):
            raise ValueError(f"self-loop at vertex {int(src[np.argmax(src == nb)])}")
        same_row = src[1:] == src[:-1]
        if np.any(same_row & (nb[1:] <= nb[:-1])):
            raise ValueError("neighbor lists must be strictly ascending")
        fwd = src * V + nb
        back = np.sort(nb * V + src)
        if not np.array_equal(fwd, back):
            raise ValueError("adjacency is not symmetric")
        if self.degree is not None and np.any(deg != self.degree):
            raise ValueError(f"graph declared {self.degree}-regular but is not")


def complete_graph(m: int) -> Graph:
    if m < 1:
        raise ValueError(f"complete graph needs m >= 1, got {m}")
    if m == 1:
        return Graph(1, _frozen(np.zeros(2, dtype=np.int64)), _frozen(np.zeros(0, dtype=np.int64)),
                     family="K", degree=0, vertex_transitive=True)
    v = np.arange(m, dtype=np.int64)
    others = (v[:, None] + np.arange(1, m, dtype=np.int64)[None, :]) % m
    return Graph.from_neighbor_matrix(others, family="K", vertex_transitive=True)


def cartesian_product(g: Graph, h: Graph) -> Graph:
    """Cartesian product; vertex (u, v) is encoded as ``u * |V(h)| + v``."""
    ng, nh = g.vertex_count, h.vertex_count
    total = ng * nh
    if total > INDEX_LIMIT:
        raise OverflowError("product vertex count overflows the index width")
    check_vertex_budget(total)
    eg, eh = g.edges(), h.edges()
    ug = np.arange(ng, dtype=np.int64)[:, None]
    vh = np.arange(nh, dtype=np.int64)[:, None]
    # copies of h inside each g-vertex, then copies of g for each h-vertex
    us = np.concatenate([(ug * nh + eh[None, :, 0]).ravel(), (eg[None, :, 0] * nh + vh).ravel()])
    vs = np.concatenate([(ug * nh + eh[None, :, 1]).ravel(), (eg[None, :, 1] * nh + vh).ravel()])
    degree = g.degree + h.degree if g.degree is not None and h.degree is not None else None
    return Graph.from_edges(
        total, us, vs, degree=degree,
        vertex_transitive=g.vertex_transitive and h.vertex_transitive,
    )
