"""Cayley graphs over F_2^k and the Cayley presentation of EH(n, 2^n).

Group elements of F_2^(n^2) are laid out as n contiguous n-bit blocks, block
1 most significant, mirroring the base-2^n vertex encoding.  The vertex map
Phi then applies phi blockwise.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np

from exthamming.families import Family, GraphSpec
from exthamming.gf2group import phi_table
from exthamming.graphcore import Graph, check_vertex_budget

MAX_GROUP_BITS = 26


@dataclass(frozen=True)
class ConnectionSet:
    """Sorted, distinct, nonzero elements of F_2^k."""

    k: int
    elements: tuple[int, ...]

    def __post_init__(self) -> None:
        els = tuple(int(x) for x in self.elements)
        object.__setattr__(self, "elements", els)
        if not 1 <= self.k <= 63:
            raise ValueError(f"group dimension must be in [1, 63], got {self.k}")
        if any(b <= a for a, b in zip(els, els[1:])):
            raise ValueError("connection set must be sorted and distinct")
        if els and els[0] == 0:
            raise ValueError("connection set may not contain the identity")
        if els and els[-1] >= (1 << self.k):
            raise ValueError(f"element {els[-1]} does not fit in {self.k} bits")
        if not self.is_inverse_closed():
            raise ValueError("connection set is not inverse-closed")

    @classmethod
    def of(cls, k: int, elements) -> ConnectionSet:
        return cls(k, tuple(sorted(set(int(x) for x in elements))))

    def __len__(self) -> int:
        return len(self.elements)

    @staticmethod
    def inverse(x: int) -> int:
        # x + x = 0 in F_2^k
        return x

    def is_inverse_closed(self) -> bool:
        members = set(self.elements)
        return all(self.inverse(x) in members and x ^ self.inverse(x) == 0 for x in members)

    def __contains__(self, x: int) -> bool:
        return int(x) in set(self.elements)


def _block_singletons(n: int, b: int) -> list[int]:
    """Elements of F_2^(n*b) with exactly one nonzero b-bit block."""
    return [g << (b * (n - 1 - i)) for i in range(n) for g in range(1, 1 << b)]


def connection_set_eh(n: int) -> ConnectionSet:
    """S = {g e_i : g != 0} plus the all-blocks-equal-to-1 element."""
    if n < 2:
        raise ValueError(f"extended Hamming connection set requires n >= 2, got {n}")
    all_ones = sum(1 << (n * (n - 1 - i)) for i in range(n))
    return ConnectionSet.of(n * n, _block_singletons(n, n) + [all_ones])


def connection_set_hypercube(n: int) -> ConnectionSet:
    return ConnectionSet.of(n, [1 << i for i in range(n)])


def connection_set_folded(n: int) -> ConnectionSet:
    return ConnectionSet.of(n, [1 << i for i in range(n)] + [(1 << n) - 1])


def connection_set_hamming(n: int, bits: int) -> ConnectionSet:
    """H(n, 2^bits) as a Cayley graph on F_2^(n*bits)."""
    return ConnectionSet.of(n * bits, _block_singletons(n, bits))


def cayley_presentation(spec: GraphSpec) -> Optional[ConnectionSet]:
    """Connection set over F_2^k for a family instance, if it has one."""
    if spec.family is Family.HYPERCUBE:
        return connection_set_hypercube(spec.n)
    if spec.family is Family.FOLDED_HYPERCUBE:
        return connection_set_folded(spec.n)
    if spec.family is Family.EXTENDED_HAMMING:
        return connection_set_eh(spec.n)
    bits = spec.m.bit_length() - 1
    if spec.m == 1 << bits:
        return connection_set_hamming(spec.n, bits)
    return None


def cayley_graph(k: int, s: ConnectionSet) -> Graph:
    if s.k != k:
        raise ValueError(f"connection set lives in F_2^{s.k}, not F_2^{k}")
    if k > MAX_GROUP_BITS:
        raise ValueError(f"Cayley graphs limited to k <= {MAX_GROUP_BITS}, got {k}")
    check_vertex_budget(1 << k)
    v = np.arange(1 << k, dtype=np.int64)[:, None]
    rows = v ^ np.asarray(s.elements, dtype=np.int64)[None, :]
    return Graph.from_neighbor_matrix(rows, family="cayley", vertex_transitive=True)


@dataclass(frozen=True, eq=False)
class VertexMap:
    """Bijection between vertex index spaces, ``forward[u]`` is the image of u."""

    forward: np.ndarray
    n: int
    m: int

    def __post_init__(self) -> None:
        fwd = np.asarray(self.forward, dtype=np.int64)
        if fwd.ndim != 1:
            raise ValueError("vertex map must be one-dimensional")
        if not np.array_equal(np.sort(fwd), np.arange(fwd.size)):
            raise ValueError("vertex map is not a permutation")
        fwd = fwd.copy()
        fwd.setflags(write=False)
        object.__setattr__(self, "forward", fwd)

    def __len__(self) -> int:
        return int(self.forward.size)

    def __call__(self, u: int) -> int:
        return int(self.forward[u])

    def with_transposition(self, a: int, b: int) -> VertexMap:
        fwd = self.forward.copy()
        fwd[[a, b]] = fwd[[b, a]]
        return VertexMap(fwd, self.n, self.m)


def build_phi_map(n: int) -> VertexMap:
    """Phi(u_1..u_n) = phi(u_1)..phi(u_n) as an n^2-bit index."""
    if n < 2 or n * n > MAX_GROUP_BITS:
        raise ValueError(f"phi map requires 2 <= n and n^2 <= {MAX_GROUP_BITS}, got n={n}")
    m = 1 << n
    table = np.asarray(phi_table(n), dtype=np.int64)
    v = np.arange(m**n, dtype=np.int64)
    out = np.zeros_like(v)
    # base-2^n digits are exactly n-bit blocks, so Phi substitutes each block
    for block in range(n):
        shift = n * block
        out |= table[(v >> shift) & (m - 1)] << shift
    return VertexMap(out, n, m)


@dataclass(frozen=True)
class IsoReport:
    ok: bool
    edges_checked: int
    edge_count_source: int
    edge_count_target: int
    witness: Optional[tuple[int, int]] = None
    message: str = ""

    def to_json(self) -> dict:
        return {
            "ok": self.ok,
            "edges_checked": self.edges_checked,
            "edge_count_source": self.edge_count_source,
            "edge_count_target": self.edge_count_target,
            "witness": list(self.witness) if self.witness is not None else None,
            "message": self.message,
        }


def verify_isomorphism(g1: Graph, g2: Graph, vmap: VertexMap) -> IsoReport:
    """Check that ``vmap`` sends every edge of g1 to an edge of g2.

    For a bijection between graphs with equal edge counts this is enough for
    an isomorphism.
    """
    if not g1.vertex_count == g2.vertex_count == len(vmap):
        raise ValueError(
            f"size mismatch: {g1.vertex_count}, {g2.vertex_count}, map {len(vmap)}"
        )
    e1, e2 = g1.edge_count, g2.edge_count
    edges = g1.edges()
    a = vmap.forward[edges[:, 0]]
    b = vmap.forward[edges[:, 1]]
    keys = np.minimum(a, b) * g2.vertex_count + np.maximum(a, b)
    target = g2.edge_keys()
    pos = np.clip(np.searchsorted(target, keys), 0, max(target.size - 1, 0))
    hit = target[pos] == keys if target.size else np.zeros(keys.size, dtype=bool)
    if not hit.all():
        first = int(np.argmin(hit))
        u, v = (int(x) for x in edges[first])
        return IsoReport(False, first + 1, e1, e2, (u, v),
                         f"edge {{{u},{v}}} maps to non-edge {{{int(a[first])},{int(b[first])}}}")
    if e1 != e2:
        return IsoReport(False, int(edges.shape[0]), e1, e2, None,
                         f"edge counts differ: {e1} vs {e2}")
    return IsoReport(True, int(edges.shape[0]), e1, e2, None, "all edges preserved")
