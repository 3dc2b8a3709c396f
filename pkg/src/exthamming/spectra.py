"""Closed-form adjacency spectra of Q_n, FQ_n, H(n, 2^n) and EH(n, 2^n).

Multiplicities are Python ints, so the formulas work far past the sizes at
which graphs can be built explicitly.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from math import comb
from typing import Iterable, Mapping, Optional

from exthamming.families import Family, GraphSpec


@dataclass(frozen=True)
class Spectrum:
    """Distinct integer eigenvalues with multiplicities, sorted descending.

    ``sources`` optionally records, per eigenvalue, which formula indices
    produced it (relevant when distinct indices collide after merging).
    """

    entries: tuple[tuple[int, int], ...]
    sources: Optional[Mapping[int, tuple]] = field(default=None, compare=False)

    def __post_init__(self) -> None:
        entries = tuple((int(v), int(m)) for v, m in self.entries)
        object.__setattr__(self, "entries", entries)
        for (a, _), (b, _) in zip(entries, entries[1:]):
            if b >= a:
                raise ValueError("eigenvalues must be strictly descending")
        if any(m < 1 for _, m in entries):
            raise ValueError("multiplicities must be positive")

    @classmethod
    def from_pairs(cls, pairs: Iterable[tuple[int, int]], labels: Optional[Iterable] = None) -> Spectrum:
        """Merge (eigenvalue, multiplicity) pairs, dropping zero multiplicities."""
        tally: dict[int, int] = defaultdict(int)
        origin: dict[int, list] = defaultdict(list)
        pairs = list(pairs)
        labels = list(labels) if labels is not None else [None] * len(pairs)
        for (value, mult), label in zip(pairs, labels):
            if mult < 0:
                raise ValueError(f"negative multiplicity {mult} for eigenvalue {value}")
            if mult == 0:
                continue
            tally[int(value)] += int(mult)
            if label is not None:
                origin[int(value)].append(label)
        entries = tuple(sorted(tally.items(), reverse=True))
        sources = {v: tuple(origin[v]) for v in tally} if origin else None
        return cls(entries, sources)

    @classmethod
    def from_dict(cls, mults: Mapping[int, int]) -> Spectrum:
        return cls.from_pairs(mults.items())

    def as_dict(self) -> dict[int, int]:
        return dict(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def __len__(self) -> int:
        return len(self.entries)

    @property
    def eigenvalues(self) -> list[int]:
        return [v for v, _ in self.entries]

    @property
    def total_multiplicity(self) -> int:
        return sum(m for _, m in self.entries)

    def moment(self, k: int) -> int:
        """Sum of lambda^k * m(lambda), i.e. tr(A^k)."""
        return sum(v**k * m for v, m in self.entries)

    def to_json(self) -> dict:
        return {"eigenvalues": [{"value": v, "multiplicity": str(m)} for v, m in self.entries]}

    def __str__(self) -> str:
        return "{" + ", ".join(f"{v}^{m}" for v, m in self.entries) + "}"


def spectrum_hypercube(n: int) -> Spectrum:
    if n < 1:
        raise ValueError(f"hypercube spectrum requires n >= 1, got {n}")
    return Spectrum.from_pairs(((n - 2 * i, comb(n, i)) for i in range(n + 1)), labels=range(n + 1))


def spectrum_folded_hypercube(n: int) -> Spectrum:
    """theta_i = (n - 2i) + (-1)^i with multiplicity C(n, i), equal thetas merged.

    ``sources`` maps each eigenvalue to the indices i that produced it.
    """
    if n < 2:
        raise ValueError(f"folded hypercube spectrum requires n >= 2, got {n}")
    pairs = [(n - 2 * i + (-1) ** i, comb(n, i)) for i in range(n + 1)]
    return Spectrum.from_pairs(pairs, labels=range(n + 1))


def hamming_eigenvalue(n: int, i: int) -> int:
    """Eigenvalue 2^n (n - i) - n of H(n, 2^n)."""
    return (1 << n) * (n - i) - n


def spectrum_hamming(n: int) -> Spectrum:
    if n < 1:
        raise ValueError(f"Hamming spectrum requires n >= 1, got {n}")
    q = 1 << n
    pairs = [(hamming_eigenvalue(n, i), comb(n, i) * (q - 1) ** i) for i in range(n + 1)]
    return Spectrum.from_pairs(pairs, labels=range(n + 1))


@dataclass(frozen=True)
class FineRow:
    i: int
    t: int
    theta: int
    multiplicity: int

    def to_json(self) -> dict:
        return {"i": self.i, "t": self.t, "theta": self.theta, "multiplicity": str(self.multiplicity)}


@dataclass(frozen=True)
class FineSpectrumEH:
    """Rows (i, t) of the EH(n, 2^n) spectrum before merging equal eigenvalues."""

    n: int
    rows: tuple[FineRow, ...]

    @property
    def total_multiplicity(self) -> int:
        return sum(r.multiplicity for r in self.rows)

    def to_json(self) -> dict:
        return {"rows": [r.to_json() for r in self.rows]}


def eh_fine_multiplicity(n: int, i: int, t: int) -> int:
    half = 1 << (n - 1)
    return comb(n, i) * comb(i, t) * half**t * (half - 1) ** (i - t)


def spectrum_extended_hamming_fine(n: int) -> FineSpectrumEH:
    """All rows theta(i, t) = lambda_i + (-1)^t, 0 <= t <= i <= n.

    Of the i coordinates carrying a nontrivial K_{2^n} eigenvector, t lie in
    the (-1)-eigenspace of the complement permutation.
    """
    if n < 2:
        raise ValueError(f"extended Hamming spectrum requires n >= 2, got {n}")
    rows = tuple(
        FineRow(i, t, hamming_eigenvalue(n, i) + (-1) ** t, eh_fine_multiplicity(n, i, t))
        for i in range(n + 1)
        for t in range(i + 1)
    )
    return FineSpectrumEH(n, rows)


def eh_signed_multiplicity(n: int, i: int, sign: int) -> int:
    """Closed form C(n,i)((2^n-1)^i + sign (-1)^i)/2 for eigenvalue lambda_i + sign."""
    q = 1 << n
    num = (q - 1) ** i + sign * (-1) ** i
    return comb(n, i) * num // 2


def aggregate_eh(fine: FineSpectrumEH) -> Spectrum:
    """Merge fine rows by eigenvalue.

    Each merged eigenvalue must come from a single i: lambda_i + 1 equal to
    lambda_j - 1 would need 2^n (j - i) = 2, impossible for n >= 2.
    """
    offenders = defaultdict(set)
    for r in fine.rows:
        offenders[r.theta].add(r.i)
    clash = {theta: sorted(ii) for theta, ii in offenders.items() if len(ii) > 1}
    if clash:
        raise ValueError(f"eigenvalue collision across Hamming levels: {clash}")
    return Spectrum.from_pairs(
        ((r.theta, r.multiplicity) for r in fine.rows), labels=((r.i, r.t) for r in fine.rows)
    )


def krawtchouk_diag(n: int, i: int, q: int) -> int:
    """Top-degree Krawtchouk value sum_j (-1)^j (q-1)^(n-j) C(i,j) C(n-i,n-j).

    Only the j = i term survives, giving (-1)^i (q-1)^(n-i); both forms are
    evaluated and must agree.
    """
    if not (isinstance(n, int) and isinstance(i, int) and isinstance(q, int)):
        raise TypeError("n, i and q must be integers")
    if n < 0 or not 0 <= i <= n:
        raise ValueError(f"need 0 <= i <= n, got n={n}, i={i}")
    if q < 2:
        raise ValueError(f"need q >= 2, got {q}")
    literal = sum(
        (-1) ** j * (q - 1) ** (n - j) * comb(i, j) * comb(n - i, n - j) for j in range(n + 1)
    )
    closed = (-1) ** i * (q - 1) ** (n - i)
    if literal != closed:
        raise ArithmeticError(f"Krawtchouk sum {literal} != closed form {closed} at n={n}, i={i}, q={q}")
    return literal


def spectrum_for(spec: GraphSpec) -> Spectrum:
    """Closed-form spectrum of a family instance."""
    if spec.family is Family.HYPERCUBE:
        return spectrum_hypercube(spec.n)
    if spec.family is Family.FOLDED_HYPERCUBE:
        return spectrum_folded_hypercube(spec.n)
    if spec.family is Family.EXTENDED_HAMMING:
        return aggregate_eh(spectrum_extended_hamming_fine(spec.n))
    if spec.m == 1 << spec.n:
        return spectrum_hamming(spec.n)
    raise ValueError(f"no closed-form spectrum for H({spec.n},{spec.m}); only m = 2^n is covered")
