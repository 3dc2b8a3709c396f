"""Acceptance criteria, one test each; every test prints a PASS/FAIL line."""

import time
from contextlib import contextmanager
from math import comb

import numpy as np
import pytest

from exthamming import (
    GraphSpec,
    extended_hamming,
    folded_hypercube,
    hamming,
    hypercube,
)
from exthamming.cayley import (
    ConnectionSet,
    build_phi_map,
    cayley_graph,
    connection_set_eh,
    connection_set_folded,
    connection_set_hamming,
    connection_set_hypercube,
    verify_isomorphism,
)
from exthamming.metrics import diameter, distance_regularity_check
from exthamming.oracle import (
    character_spectrum,
    check_moments,
    multiplicity_by_rank,
    verify_family_spectrum,
    walk_moments,
)
from exthamming.spectra import (
    Spectrum,
    aggregate_eh,
    krawtchouk_diag,
    spectrum_extended_hamming_fine,
    spectrum_folded_hypercube,
    spectrum_hamming,
    spectrum_hypercube,
)


@pytest.fixture
def criterion(capsys):
    @contextmanager
    def run(label, limit=None):
        start = time.perf_counter()
        ok = False
        try:
            yield
            elapsed = time.perf_counter() - start
            ok = limit is None or elapsed < limit
            assert ok, f"{label} took {elapsed:.2f}s, limit {limit}s"
        finally:
            elapsed = time.perf_counter() - start
            with capsys.disabled():
                bound = f" (limit {limit}s)" if limit else ""
                print(f"\n[{'PASS' if ok else 'FAIL'}] {label}: {elapsed:.2f}s{bound}")

    return run


def S(d):
    return Spectrum.from_dict(d)


def test_c01_hypercube_spectra(criterion):
    with criterion("C1 hypercube spectra vs character oracle, 1<=n<=16", limit=5):
        for n in range(1, 17):
            assert spectrum_hypercube(n) == character_spectrum(n, connection_set_hypercube(n))


def test_c02_folded_hypercube_spectra(criterion):
    with criterion("C2 folded hypercube spectra vs character oracle, 2<=n<=16", limit=5):
        for n in range(2, 17):
            assert spectrum_folded_hypercube(n) == character_spectrum(n, connection_set_folded(n))
        assert spectrum_folded_hypercube(3) == S({4: 1, 0: 6, -4: 1})
        assert spectrum_folded_hypercube(2) == S({3: 1, -1: 3})


def test_c03_hamming_spectrum(criterion):
    with criterion("C3 Hamming H(n,2^n) spectrum, character + rank", limit=5):
        h2, h3 = spectrum_hamming(2), spectrum_hamming(3)
        assert h2 == S({6: 1, 2: 6, -2: 9})
        assert h3 == S({21: 1, 13: 21, 5: 147, -3: 343})
        assert h2 == character_spectrum(4, connection_set_hamming(2, 2))
        assert h3 == character_spectrum(9, connection_set_hamming(3, 3))
        g = hamming(2, 4)
        for value, mult in h2.entries:
            assert multiplicity_by_rank(g, value) == mult


def test_c04_extended_hamming_spectrum(criterion):
    with criterion("C4 extended Hamming spectrum vs character oracle, n=2,3,4", limit=10):
        for n in (2, 3, 4):
            closed = aggregate_eh(spectrum_extended_hamming_fine(n))
            assert closed == character_spectrum(n * n, connection_set_eh(n))
        for n in range(2, 9):
            assert spectrum_extended_hamming_fine(n).total_multiplicity == 2 ** (n * n)
        for n in range(2, 11):
            fine = spectrum_extended_hamming_fine(n)
            agg = aggregate_eh(fine).as_dict()
            for i in range(n + 1):
                lam = 2**n * (n - i) - n
                plus = comb(n, i) * ((2**n - 1) ** i + (-1) ** i) // 2
                minus = comb(n, i) * ((2**n - 1) ** i - (-1) ** i) // 2
                assert agg.get(lam + 1, 0) == plus
                assert agg.get(lam - 1, 0) == minus


def test_c05_moment_identities(criterion):
    instances = (
        [(spectrum_hypercube(n), hypercube(n)) for n in range(1, 11)]
        + [(spectrum_folded_hypercube(n), folded_hypercube(n)) for n in range(2, 11)]
        + [(spectrum_hamming(2), hamming(2, 4)), (spectrum_hamming(3), hamming(3, 8))]
        + [(aggregate_eh(spectrum_extended_hamming_fine(n)), extended_hamming(n)) for n in (2, 3)]
    )
    with criterion(f"C5 trace moments k=2..6 on {len(instances)} instances", limit=60):
        for spec, g in instances:
            report = check_moments(spec, walk_moments(g, 6))
            assert report.overall, [c.details for c in report.failures()]
            assert len(report.checks) == 5


def test_c06_diameter(criterion):
    with criterion("C6 diameter of EH(n,2^n) is n, n=2,3,4", limit=30):
        for n in (2, 3, 4):
            g = extended_hamming(n)
            assert g.vertex_transitive
            assert diameter(g) == n
        for n in (2, 3):
            assert diameter(extended_hamming(n), all_pairs=True) == n


def _recount(g, u, v, target):
    """Neighbors of v at distance ``target`` from u, from a plain-Python BFS."""
    from collections import deque

    adj = g.adjacency_lists()
    dist = {u: 0}
    queue = deque([u])
    while queue:
        x = queue.popleft()
        for y in adj[x]:
            if y not in dist:
                dist[y] = dist[x] + 1
                queue.append(y)
    return sum(1 for w in adj[v] if dist[w] == target)


def test_c07_distance_regularity(criterion):
    with criterion("C7 drcheck rejects EH(2),EH(3); accepts Q_n<=8, H(2,4), H(3,8)", limit=60):
        for n in (2, 3):
            g = extended_hamming(n)
            r = distance_regularity_check(g)
            assert not r.is_dr
            w = r.witness
            target = w.r + 1 if w.kind == "b" else w.r - 1
            c1, c2 = _recount(g, w.u, w.v1, target), _recount(g, w.u, w.v2, target)
            assert (c1, c2) == (w.count1, w.count2)
            assert c1 != c2
        for n in range(1, 9):
            assert distance_regularity_check(hypercube(n)).is_dr
        assert distance_regularity_check(hamming(2, 4)).is_dr
        assert distance_regularity_check(hamming(3, 8)).is_dr
        assert distance_regularity_check(hypercube(3)).intersection_array == ((3, 2, 1), (1, 2, 3))


def test_c08_cayley_isomorphism(criterion):
    with criterion("C8 Phi: EH(n,2^n) ~ Cay(F_2^(n^2), S), n=2,3", limit=10):
        for n in range(2, 6):
            s = connection_set_eh(n)
            assert len(s) == n * (2**n - 1) + 1
            assert 0 not in s
            assert s.is_inverse_closed()
        for n, edges in ((2, 56), (3, 5632)):
            report = verify_isomorphism(
                extended_hamming(n), cayley_graph(n * n, connection_set_eh(n)), build_phi_map(n)
            )
            assert report.ok and report.edges_checked == edges


def test_c09_krawtchouk(criterion):
    with criterion("C9 Krawtchouk diagonal", limit=1):
        for n in range(0, 65):
            for i in range(n + 1):
                assert krawtchouk_diag(n, i, 2) == (-1) ** i
        rng = np.random.default_rng(2024)
        for _ in range(300):
            n = int(rng.integers(0, 65))
            i = int(rng.integers(0, n + 1))
            q = int(rng.integers(2, 17))
            # krawtchouk_diag raises if the literal sum and closed form disagree
            assert krawtchouk_diag(n, i, q) == (-1) ** i * (q - 1) ** (n - i)


ORACLE_CHECKS = ("character", "moment", "rank")


def _oracle_failed(report):
    return any(c.name.startswith(ORACLE_CHECKS) for c in report.failures())


def _mutations():
    """(label, detector) pairs; each detector returns True when an oracle catches the mutation."""
    out = []
    eh2_spec = GraphSpec("eh", 2)
    eh2_closed = aggregate_eh(spectrum_extended_hamming_fine(2))
    for idx, (value, mult) in enumerate(eh2_closed.entries):
        entries = list(eh2_closed.entries)
        entries[idx] = (value, mult + 1)
        out.append((f"EH(2) multiplicity of {value} +1",
                    lambda e=tuple(entries): _oracle_failed(verify_family_spectrum(eh2_spec, claimed=Spectrum(e)))))
    q3_closed = spectrum_hypercube(3)
    for idx, (value, mult) in enumerate(q3_closed.entries):
        entries = list(q3_closed.entries)
        entries[idx] = (value, mult + 1)
        out.append((f"Q3 multiplicity of {value} +1 (moments only)",
                    lambda e=tuple(entries): _oracle_failed(verify_family_spectrum(
                        GraphSpec("q", 3), oracles=["moments"], claimed=Spectrum(e)))))
    h2_closed = spectrum_hamming(2)
    for idx, (value, mult) in enumerate(h2_closed.entries):
        pairs = list(h2_closed.entries)
        pairs[idx] = (value + 1, mult)
        out.append((f"H(2,4) eigenvalue {value} -> {value + 1} (rank only)",
                    lambda p=tuple(pairs): _oracle_failed(verify_family_spectrum(
                        GraphSpec("h", 2), oracles=["rank"], claimed=Spectrum.from_pairs(p)))))
    s = connection_set_eh(2)
    eh2 = extended_hamming(2)
    phi2 = build_phi_map(2)
    spare = [x for x in range(1, 16) if x not in s]
    for idx, x in enumerate(s.elements):
        mutated = ConnectionSet.of(4, [y for y in s.elements if y != x] + [spare[idx % len(spare)]])

        def caught(mutated=mutated):
            char_bad = character_spectrum(4, mutated) != eh2_closed
            iso_bad = not verify_isomorphism(eh2, cayley_graph(4, mutated), phi2).ok
            return char_bad or iso_bad

        out.append((f"S element {x:04b} -> {spare[idx % len(spare)]:04b}", caught))
    cay2 = cayley_graph(4, s)
    for a, b in ((0, 1), (0, 15), (3, 12), (5, 6), (7, 9)):
        out.append((f"Phi entries {a}<->{b} swapped",
                    lambda a=a, b=b: not verify_isomorphism(eh2, cay2, phi2.with_transposition(a, b)).ok))
    return out


def test_c10_mutation_sensitivity(criterion):
    mutations = _mutations()
    with criterion(f"C10 mutation sensitivity ({len(mutations)} mutations)"):
        assert len(mutations) >= 20
        missed = [label for label, detect in mutations if not detect()]
        assert not missed, f"undetected mutations: {missed}"
