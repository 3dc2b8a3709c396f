import pytest

from exthamming import extended_hamming, hamming, hypercube, folded_hypercube


@pytest.fixture(scope="session")
def eh2():
    return extended_hamming(2)


@pytest.fixture(scope="session")
def eh3():
    return extended_hamming(3)


@pytest.fixture(scope="session")
def h24():
    return hamming(2, 4)


@pytest.fixture(scope="session")
def h38():
    return hamming(3, 8)


@pytest.fixture(scope="session")
def q3():
    return hypercube(3)


@pytest.fixture(scope="session")
def fq3():
    return folded_hypercube(3)
