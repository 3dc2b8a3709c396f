"""Independent verification engines for closed-form spectra.

* character sums over F_2^k (needs only the connection set),
* closed-walk counts tr(A^k) on the constructed graph,
* eigenvalue multiplicities |V| - rank(A - lambda I) over random primes.

None of them uses floating point.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence

import numpy as np

from exthamming.cayley import ConnectionSet, cayley_presentation
from exthamming.errors import BudgetError
from exthamming.families import GraphSpec, build
from exthamming.graphcore import Graph
from exthamming.spectra import Spectrum, spectrum_for

MAX_CHARACTER_BITS = 20
DEFAULT_MOMENT_BUDGET = 10**10
MAX_RANK_VERTICES = 4096
_INT64_SAFE = 1 << 62


@dataclass(frozen=True)
class Check:
    name: str
    passed: bool
    details: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        return {"name": self.name, "pass": self.passed, "details": self.details}


@dataclass
class VerificationReport:
    checks: list[Check] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)
    witnesses: Optional[dict] = None

    @property
    def overall(self) -> bool:
        return all(c.passed for c in self.checks)

    def add(self, name: str, passed: bool, **details) -> Check:
        check = Check(name, bool(passed), details)
        self.checks.append(check)
        return check

    def failures(self) -> list[Check]:
        return [c for c in self.checks if not c.passed]

    def to_json(self) -> dict:
        return {
            "overall": self.overall,
            "checks": [c.to_json() for c in self.checks],
            "notes": list(self.notes),
            "witnesses": self.witnesses,
        }


# -- character sums -----------------------------------------------------


def character_spectrum(k: int, s: ConnectionSet) -> Spectrum:
    """Spectrum of Cay(F_2^k, S) from the character sums sum_s (-1)^<a, s>."""
    if s.k != k:
        raise ValueError(f"connection set lives in F_2^{s.k}, not F_2^{k}")
    if k > MAX_CHARACTER_BITS:
        raise BudgetError(f"character oracle limited to k <= {MAX_CHARACTER_BITS}, got {k}")
    a = np.arange(1 << k, dtype=np.uint64)
    sums = np.zeros(a.size, dtype=np.int64)
    for x in s.elements:
        odd = np.bitwise_count(a & np.uint64(x)) & 1
        sums += 1 - 2 * odd.astype(np.int64)
    values, counts = np.unique(sums, return_counts=True)
    return Spectrum.from_pairs(zip(values.tolist(), counts.tolist()))


# -- closed walks -------------------------------------------------------


def moment_work(g: Graph, kmax: int) -> int:
    """Work estimate |V| * d^(kmax - 1) used for the moment budget."""
    d = int(g.degrees().max()) if g.vertex_count else 0
    return g.vertex_count * max(d, 1) ** (kmax - 1)


def feasible_kmax(g: Graph, budget: int) -> int:
    k = 1
    while moment_work(g, k + 1) <= budget and k < 64:
        k += 1
    return k


def walk_moments(g: Graph, kmax: int, budget: int = DEFAULT_MOMENT_BUDGET,
                 block: int = 1024) -> list[int]:
    """Exact [tr(A^2), ..., tr(A^kmax)] by counting closed walks.

    For each source v the walk-count vectors x_j = A^j e_v are propagated
    along the neighbor lists up to j = ceil(kmax / 2) and
    (A^k)_vv = <x_floor(k/2), x_ceil(k/2)>.
    """
    if kmax < 2:
        raise ValueError(f"kmax must be >= 2, got {kmax}")
    work = moment_work(g, kmax)
    if work > budget:
        raise BudgetError(
            f"walk moments to k={kmax} need ~{work:.3g} steps (budget {budget:.3g}); "
            f"feasible kmax is {feasible_kmax(g, budget)}"
        )
    V = g.vertex_count
    d = int(g.degrees().max()) if V else 0
    half = (kmax + 1) // 2
    totals = [0] * (kmax + 1)
    if V == 0:
        return totals[2:]
    if d**kmax >= _INT64_SAFE:
        return _walk_moments_bigint(g, kmax)
    A = g.to_scipy()
    for start in range(0, V, block):
        rows = A[start : min(start + block, V)]
        xs = [None, rows]
        for _ in range(2, half + 1):
            xs.append(xs[-1] @ A)
        for k in range(2, kmax + 1):
            a, b = k // 2, k - k // 2
            if a == 0:
                continue
            # each row sum is (A^k)_vv <= d^k; accumulate across rows in Python ints
            diag = np.asarray(xs[a].multiply(xs[b]).sum(axis=1, dtype=np.int64)).ravel()
            totals[k] += sum(int(x) for x in diag)
    return totals[2:]


def _walk_moments_bigint(g: Graph, kmax: int) -> list[int]:
    V = g.vertex_count
    deg = g.degrees()
    starts = g.offsets[:-1]
    totals = [0] * (kmax + 1)
    for v in range(V):
        x = np.zeros(V, dtype=object)
        x[v] = 1
        xs = [x]
        for _ in range((kmax + 1) // 2):
            gathered = xs[-1][g.neighbors]
            nxt = np.zeros(V, dtype=object)
            nz = deg > 0
            nxt[nz] = np.add.reduceat(gathered, starts[nz])
            xs.append(nxt)
        for k in range(2, kmax + 1):
            totals[k] += int(np.dot(xs[k // 2], xs[k - k // 2]))
    return totals[2:]


def check_moments(spec: Spectrum, moments: Sequence[int], start: int = 2) -> VerificationReport:
    """Compare sum lambda^k m(lambda) with tr(A^k) for each supplied k."""
    report = VerificationReport()
    for offset, observed in enumerate(moments):
        k = start + offset
        predicted = spec.moment(k)
        report.add(f"moment_k{k}", predicted == observed,
                   k=k, predicted=str(predicted), observed=str(observed))
    return report


# -- modular rank -------------------------------------------------------


def random_primes(count: int, seed: int = 0, bits: int = 62) -> list[int]:
    """Distinct primes just below 2^bits, chosen reproducibly from ``seed``."""
    import flint

    rng = random.Random(seed)
    primes: list[int] = []
    while len(primes) < count:
        candidate = (1 << bits) - rng.randrange(1, 1 << 40)
        candidate |= 1
        while not flint.fmpz(candidate).is_prime():
            candidate -= 2
        if candidate not in primes:
            primes.append(candidate)
    return primes


def rank_mod_p(matrix: np.ndarray, p: int) -> int:
    """Rank of an integer matrix over GF(p) by Gaussian elimination."""
    import flint

    rows, cols = matrix.shape
    flat = [int(x) % p for x in np.asarray(matrix).ravel()]
    return int(flint.nmod_mat(rows, cols, flat, p).rank())


@dataclass(frozen=True)
class RankCertificate:
    eigenvalue: int
    vertex_count: int
    primes: tuple[int, ...]
    ranks: tuple[int, ...]

    @property
    def multiplicity(self) -> int:
        return self.vertex_count - max(self.ranks)

    @property
    def certified(self) -> bool:
        return len(self.primes) >= 3 and len(set(self.ranks)) == 1


def rank_certificate(g: Graph, eigenvalue: int, primes: Iterable[int]) -> RankCertificate:
    V = g.vertex_count
    if V > MAX_RANK_VERTICES:
        raise BudgetError(f"rank oracle limited to {MAX_RANK_VERTICES} vertices, got {V}")
    M = g.to_dense() - int(eigenvalue) * np.eye(V, dtype=np.int64)
    primes = tuple(primes)
    return RankCertificate(int(eigenvalue), V, primes, tuple(rank_mod_p(M, p) for p in primes))


def multiplicity_by_rank(g: Graph, eigenvalue: int, n_primes: int = 3, seed: int = 0) -> int:
    """|V| - rank(A - lambda I), rank maximised over ``n_primes`` random primes.

    Rank over GF(p) never exceeds the rational rank, so the result is an
    upper bound on the true multiplicity; agreement across primes makes
    equality overwhelmingly likely.
    """
    cert = rank_certificate(g, eigenvalue, random_primes(n_primes, seed))
    return cert.multiplicity


# -- orchestration ------------------------------------------------------

ALL_ORACLES = ("character", "moments", "rank")


def verify_family_spectrum(
    spec: GraphSpec,
    oracles: Iterable[str] = ALL_ORACLES,
    kmax: int = 6,
    seed: int = 0,
    moment_budget: int = DEFAULT_MOMENT_BUDGET,
    claimed: Optional[Spectrum] = None,
) -> VerificationReport:
    """Check the closed-form spectrum of ``spec`` with the selected oracles.

    ``claimed`` overrides the closed form (used to inject corrupted spectra).
    Oracles that cannot run within their budget are skipped with a note.
    """
    oracles = tuple(oracles)
    unknown = set(oracles) - set(ALL_ORACLES)
    if unknown:
        raise ValueError(f"unknown oracles: {sorted(unknown)}")
    closed = claimed if claimed is not None else spectrum_for(spec)
    report = VerificationReport()
    report.add("total_multiplicity", closed.total_multiplicity == spec.vertex_count,
               claimed=str(closed.total_multiplicity), vertices=str(spec.vertex_count))
    report.add("top_eigenvalue_is_degree",
               bool(closed.entries) and closed.entries[0] == (spec.degree, 1),
               top=closed.entries[0][0] if closed.entries else None, degree=spec.degree)

    if "character" in oracles:
        s = cayley_presentation(spec)
        if s is None:
            report.notes.append("character: family instance has no F_2^k Cayley presentation")
        elif s.k > MAX_CHARACTER_BITS:
            report.notes.append(f"character: skipped, budget (k={s.k} > {MAX_CHARACTER_BITS})")
        else:
            oracle = character_spectrum(s.k, s)
            ok = oracle == closed
            report.add("character_spectrum", ok, k=s.k, oracle=oracle.to_json()["eigenvalues"])
            if not ok:
                report.witnesses = {"character": _diff(closed, oracle)}

    graph: Optional[Graph] = None
    if "moments" in oracles or "rank" in oracles:
        graph = build(spec)

    if "moments" in oracles:
        k_use = min(kmax, feasible_kmax(graph, moment_budget))
        if k_use < 2:
            report.notes.append("moments: skipped, budget")
        else:
            if k_use < kmax:
                report.notes.append(f"moments: kmax reduced from {kmax} to {k_use} by budget")
            observed = walk_moments(graph, k_use, budget=moment_budget)
            sub = check_moments(closed, observed)
            report.checks.extend(sub.checks)

    if "rank" in oracles:
        if graph.vertex_count > MAX_RANK_VERTICES:
            report.notes.append(
                f"rank: skipped, budget ({graph.vertex_count} > {MAX_RANK_VERTICES} vertices)"
            )
        else:
            primes = random_primes(3, seed)
            certified_total = 0
            for value, mult in closed.entries:
                cert = rank_certificate(graph, value, primes)
                certified_total += cert.multiplicity
                report.add(f"rank_multiplicity[{value}]",
                           cert.multiplicity == mult and cert.certified,
                           eigenvalue=value, claimed=str(mult), observed=str(cert.multiplicity),
                           ranks=list(cert.ranks))
            report.add("rank_multiplicities_sum", certified_total == graph.vertex_count,
                       total=str(certified_total), vertices=graph.vertex_count)
    return report


def _diff(claimed: Spectrum, oracle: Spectrum) -> dict:
    a, b = claimed.as_dict(), oracle.as_dict()
    keys = sorted(set(a) | set(b), reverse=True)
    return {str(k): [str(a.get(k, 0)), str(b.get(k, 0))] for k in keys if a.get(k, 0) != b.get(k, 0)}
