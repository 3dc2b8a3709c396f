"""Constructors for Q_n, FQ_n, H(n, m) and EH(n, 2^n)."""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from exthamming.errors import GuardrailError
from exthamming.graphcore import Graph, check_vertex_budget


class Family(str, enum.Enum):
    HYPERCUBE = "q"
    FOLDED_HYPERCUBE = "fq"
    HAMMING = "h"
    EXTENDED_HAMMING = "eh"


@dataclass(frozen=True)
class GraphSpec:
    """Family tag plus parameters; ``m`` is forced to 2 for Q/FQ and 2^n for EH."""

    family: Family
    n: int
    m: int = 0

    def __post_init__(self) -> None:
        family = Family(self.family)
        object.__setattr__(self, "family", family)
        if not isinstance(self.n, int) or self.n < 1:
            raise ValueError(f"n must be a positive integer, got {self.n!r}")
        if family in (Family.HYPERCUBE, Family.FOLDED_HYPERCUBE):
            forced = 2
        elif family is Family.EXTENDED_HAMMING:
            forced = 1 << self.n
        else:
            forced = None
        if forced is not None:
            if self.m not in (0, forced):
                raise ValueError(f"family {family.value} requires m = {forced}, got {self.m}")
            object.__setattr__(self, "m", forced)
        elif self.m == 0:
            object.__setattr__(self, "m", 1 << self.n)
        if family is Family.FOLDED_HYPERCUBE and self.n < 2:
            raise ValueError("folded hypercube requires n >= 2 (complement edge of K_2 is already an edge)")
        if family is Family.EXTENDED_HAMMING and self.n < 2:
            raise ValueError("extended Hamming graph requires n >= 2 (complement edge of K_2 is already an edge)")
        if family is Family.HAMMING and self.m < 2:
            raise ValueError(f"Hamming graph requires m >= 2, got {self.m}")

    @property
    def vertex_count(self) -> int:
        return self.m**self.n

    @property
    def degree(self) -> int:
        base = self.n * (self.m - 1)
        if self.family in (Family.FOLDED_HYPERCUBE, Family.EXTENDED_HAMMING):
            return base + 1
        return base

    def to_json(self) -> dict:
        return {"family": self.family.value, "n": self.n, "m": self.m}


def _check_n(n: int, lo: int, hi: int, what: str) -> None:
    if not isinstance(n, int) or not lo <= n <= hi:
        raise ValueError(f"{what} requires {lo} <= n <= {hi}, got {n!r}")


def _hypercube_rows(n: int) -> np.ndarray:
    v = np.arange(1 << n, dtype=np.int64)[:, None]
    return v ^ (np.int64(1) << np.arange(n, dtype=np.int64))[None, :]


def hypercube(n: int) -> Graph:
    _check_n(n, 1, 26, "hypercube")
    return Graph.from_neighbor_matrix(_hypercube_rows(n), family="q", vertex_transitive=True)


def folded_hypercube(n: int) -> Graph:
    if isinstance(n, int) and n < 2:
        raise ValueError("folded hypercube requires n >= 2 (complement edge of K_2 is already an edge)")
    _check_n(n, 2, 26, "folded hypercube")
    rows = _hypercube_rows(n)
    full = (1 << n) - 1
    comp = (np.arange(1 << n, dtype=np.int64) ^ full)[:, None]
    return Graph.from_neighbor_matrix(np.hstack([rows, comp]), family="fq", vertex_transitive=True)


def _hamming_rows(n: int, m: int) -> np.ndarray:
    count = m**n
    check_vertex_budget(count)
    v = np.arange(count, dtype=np.int64)
    cols = []
    for k in range(n):
        weight = m ** (n - 1 - k)
        digit = (v // weight) % m
        for shift in range(1, m):
            new_digit = (digit + shift) % m
            cols.append(v + (new_digit - digit) * weight)
    return np.column_stack(cols)


def hamming(n: int, m: int) -> Graph:
    if not isinstance(n, int) or n < 1:
        raise ValueError(f"Hamming graph requires n >= 1, got {n!r}")
    if not isinstance(m, int) or m < 2:
        raise ValueError(f"Hamming graph requires m >= 2, got {m!r}")
    if m**n > (1 << 26):
        raise GuardrailError(f"H({n},{m}) has {m ** n} vertices, above the 2^26 limit")
    return Graph.from_neighbor_matrix(_hamming_rows(n, m), family="h", vertex_transitive=True)


def complement_vertex(v: int, n: int) -> int:
    """Coordinatewise complement u -> u^c of a vertex of EH(n, 2^n)."""
    top = (1 << n) ** n
    if not 0 <= v < top:
        raise ValueError(f"vertex {v} outside [0, {top})")
    return top - 1 - v


def extended_hamming(n: int) -> Graph:
    if isinstance(n, int) and n < 2:
        raise ValueError("extended Hamming graph requires n >= 2 (complement edge of K_2 is already an edge)")
    if not isinstance(n, int) or n > 5:
        raise GuardrailError(f"extended Hamming graph limited to n <= 5, got {n!r}")
    m = 1 << n
    rows = _hamming_rows(n, m)
    comp = (m**n - 1 - np.arange(m**n, dtype=np.int64))[:, None]
    return Graph.from_neighbor_matrix(np.hstack([rows, comp]), family="eh", vertex_transitive=True)


def build(spec: GraphSpec) -> Graph:
    if spec.family is Family.HYPERCUBE:
        return hypercube(spec.n)
    if spec.family is Family.FOLDED_HYPERCUBE:
        return folded_hypercube(spec.n)
    if spec.family is Family.HAMMING:
        return hamming(spec.n, spec.m)
    return extended_hamming(spec.n)


def expected_diameter(spec: GraphSpec) -> int:
    """Known diameter of each family (ceil(n/2) for the folded cube)."""
    if spec.family is Family.FOLDED_HYPERCUBE:
        return (spec.n + 1) // 2
    return spec.n


def expected_distance_regular(spec: GraphSpec) -> bool:
    return spec.family is not Family.EXTENDED_HAMMING
