import pytest

from parser import GaleParser
from toric.errors import InvalidInput


def test_parse_input_normalizes_and_keeps_name(gale_file):
    lattice, log = GaleParser.parse_input(gale_file([[0, 0], [1, 0], [2, 0], [0, 1]], "merged"))
    assert lattice.name == "merged"
    assert lattice.rows == ((1, 0), (0, 1))
    assert log.dropped_zero == (0,)
    assert log.n_original == 4


@pytest.mark.parametrize("text", ['{"basis": [[1, 0], [0, true]]}', '{"basis": [[1, 0.5], [0, 1]]}', "[1, 2"])
def test_parse_text_rejects_malformed_documents(text):
    with pytest.raises(InvalidInput):
        GaleParser.parse_text(text)
