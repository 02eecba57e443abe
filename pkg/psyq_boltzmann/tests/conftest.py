import pytest

from psyq_boltzmann.algebra import alexander_psyquandle, parse_psyquandle_matrix, promote_biquandle
from psyq_boltzmann.config import data_path
from psyq_boltzmann.weights import parse_weight_pair


def load_psyquandle(name):
    return parse_psyquandle_matrix(data_path(name).read_text())


def load_weights(name, order=None):
    return parse_weight_pair(data_path(name).read_text(), order=order)


def dihedral3():
    n = 3
    return promote_biquandle(
        [[(2 * y - x) % n for y in range(n)] for x in range(n)],
        [[x for _ in range(n)] for x in range(n)],
    )


@pytest.fixture
def alex5():
    return alexander_psyquandle(5, 3, 2, 4, 1)


@pytest.fixture
def w42():
    return load_weights("w42.wgt")


@pytest.fixture
def block3():
    return load_psyquandle("block3.psy")


@pytest.fixture
def ex52():
    return load_psyquandle("ex52.psy"), load_weights("ex52.wgt")


@pytest.fixture
def ex53():
    return load_psyquandle("ex53.psy"), load_weights("ex53.wgt")


@pytest.fixture
def ex54():
    return load_psyquandle("ex54.psy"), load_weights("ex54.wgt")


@pytest.fixture
def trivial2():
    return load_psyquandle("trivial2.psy")
