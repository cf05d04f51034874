import json

import pytest

from toric.graver import graver_basis
from toric.groebner import groebner_fan
from toric.ideals import MonomialIdeal
from toric.intlinalg import GaleLattice

RUNNING_ROWS = ((2, 0), (0, 1), (-2, 1), (-2, 0))

# The four monomial L-graded ideals of the running lattice, in fan order.
RUNNING_IDEALS = [
    MonomialIdeal.of([(0, 1, 1, 0), (2, 0, 0, 0)], 4),
    MonomialIdeal.of([(0, 1, 1, 0), (2, 1, 0, 0), (0, 0, 2, 2)], 4),
    MonomialIdeal.of([(0, 1, 1, 0), (2, 2, 0, 0), (0, 0, 1, 2)], 4),
    MonomialIdeal.of([(0, 1, 1, 0), (0, 0, 0, 2)], 4),
]


@pytest.fixture
def running():
    return GaleLattice(RUNNING_ROWS, name="running")


@pytest.fixture
def identity():
    return GaleLattice(((1, 0), (0, 1)), name="identity")


@pytest.fixture
def double():
    return GaleLattice(((2, 0), (0, 2)), name="double")


@pytest.fixture
def cyclic():
    return GaleLattice(((1, 0), (0, 1), (-1, -1)), name="cyclic")


@pytest.fixture
def running_graver(running):
    return graver_basis(running)


@pytest.fixture
def running_fan(running, running_graver):
    return groebner_fan(running, running_graver)


@pytest.fixture
def running_ideals():
    return list(RUNNING_IDEALS)


@pytest.fixture
def gale_file(tmp_path):
    def write(basis, name=None):
        path = tmp_path / f"{name or 'lattice'}.json"
        payload = {"basis": basis}
        if name:
            payload["name"] = name
        path.write_text(json.dumps(payload))
        return str(path)
    return write
