import json

import numpy as np
import pytest

from sectorial_means.errors import ParseError
from sectorial_means.matrixio import dump_matrix, load_matrix, matrix_from_dict


def test_round_trip_is_lossless():
    rng = np.random.default_rng(0)
    a = rng.standard_normal((4, 4)) * 1e3 + 1j * rng.standard_normal((4, 4)) * 1e-7
    b = load_matrix(dump_matrix(a))
    assert np.array_equal(a, b)


def test_imaginary_part_optional():
    a = load_matrix(json.dumps({"n": 2, "re": [[1, 2], [3, 4]]}))
    assert np.array_equal(a.imag, np.zeros((2, 2)))


def test_reads_from_path(tmp_path):
    path = tmp_path / "m.json"
    path.write_text(json.dumps({"n": 1, "re": [[2.5]], "im": [[0.5]]}))
    a = load_matrix(str(path))
    assert a[0, 0] == 2.5 + 0.5j


@pytest.mark.parametrize(
    "data",
    [
        "not json",
        '{"re": [[1]]}',
        '{"n": 2, "re": [[1]]}',
        '{"n": 1, "re": [[1]], "im": [[1, 2]]}',
        '{"n": 0, "re": []}',
        '{"n": 1, "re": [["x"]]}',
        "[1, 2]",
    ],
)
def test_malformed_inputs_raise_parse_error(data):
    with pytest.raises(ParseError):
        load_matrix(data)


def test_non_finite_rejected():
    with pytest.raises(ParseError):
        matrix_from_dict({"n": 1, "re": [[float("nan")]]})


def test_missing_file():
    with pytest.raises(ParseError):
        load_matrix("/nonexistent/path.json")
