import numpy as np
import pytest

from exthamming import extended_hamming, folded_hypercube, hamming, hypercube
from exthamming.cayley import (
    ConnectionSet,
    build_phi_map,
    cayley_graph,
    connection_set_eh,
    connection_set_folded,
    connection_set_hamming,
    connection_set_hypercube,
    verify_isomorphism,
    VertexMap,
)


def test_connection_set_examples():
    s2 = connection_set_eh(2)
    assert len(s2) == 7
    assert 0b0101 in s2
    s3 = connection_set_eh(3)
    assert len(s3) == 22 and 0 not in s3
    assert list(s3.elements) == sorted(set(s3.elements))
    with pytest.raises(ValueError):
        connection_set_eh(1)


@pytest.mark.parametrize("n", range(2, 8))
def test_connection_set_structure(n):
    s = connection_set_eh(n)
    assert len(s) == n * ((1 << n) - 1) + 1
    assert s.is_inverse_closed()
    mask = (1 << n) - 1
    blocks = lambda x: [(x >> (n * j)) & mask for j in range(n)]
    singles = [x for x in s.elements if sum(b != 0 for b in blocks(x)) == 1]
    assert len(singles) == n * mask
    (rest,) = set(s.elements) - set(singles)
    assert blocks(rest) == [1] * n


def test_connection_set_validation():
    with pytest.raises(ValueError):
        ConnectionSet(3, (0, 1))
    with pytest.raises(ValueError):
        ConnectionSet(3, (2, 1))
    with pytest.raises(ValueError):
        ConnectionSet(3, (8,))


@pytest.mark.parametrize("n", [2, 3, 5])
def test_cayley_presentations_of_cubes(n):
    assert cayley_graph(n, connection_set_hypercube(n)).same_edges(hypercube(n))
    assert cayley_graph(n, connection_set_folded(n)).same_edges(folded_hypercube(n))


def test_cayley_hamming_binary_alphabet():
    # blocks are raw bit patterns, so this is H(2,4) up to identity labelling
    assert cayley_graph(4, connection_set_hamming(2, 2)).same_edges(hamming(2, 4))


def test_cayley_eh2_regular():
    g = cayley_graph(4, connection_set_eh(2))
    assert g.vertex_count == 16 and np.all(g.degrees() == 7)
    with pytest.raises(ValueError):
        cayley_graph(5, connection_set_eh(2))


def test_phi_map_examples():
    m2 = build_phi_map(2)
    assert m2(0) == 0
    assert m2(15) == 0b0101
    for n in (2, 3):
        f = build_phi_map(n).forward
        assert np.array_equal(np.sort(f), np.arange(f.size))
    with pytest.raises(ValueError):
        VertexMap(np.array([0, 0, 1]), 1, 3)


@pytest.mark.parametrize("n,edges", [(2, 56), (3, 5632)])
def test_phi_is_isomorphism(n, edges):
    eh = extended_hamming(n)
    cay = cayley_graph(n * n, connection_set_eh(n))
    report = verify_isomorphism(eh, cay, build_phi_map(n))
    assert report.ok, report.message
    assert report.edges_checked == edges


def test_identity_map(h24):
    ident = VertexMap(np.arange(16), 2, 4)
    assert verify_isomorphism(h24, h24, ident).ok


def test_transposition_breaks_phi(eh2):
    cay = cayley_graph(4, connection_set_eh(2))
    broken = build_phi_map(2).with_transposition(0, 1)
    report = verify_isomorphism(eh2, cay, broken)
    assert not report.ok
    u, v = report.witness
    assert eh2.has_edge(u, v)
    assert not cay.has_edge(broken(u), broken(v))


def test_edge_count_mismatch(eh2, h24):
    report = verify_isomorphism(h24, eh2, VertexMap(np.arange(16), 2, 4))
    assert not report.ok and report.witness is None


def test_size_mismatch(eh2, q3):
    with pytest.raises(ValueError):
        verify_isomorphism(eh2, q3, build_phi_map(2))
