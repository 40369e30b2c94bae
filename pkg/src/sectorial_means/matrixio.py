"""Matrix JSON serialization.

The wire format is ``{"n": <int>, "re": [[...]], "im": [[...]]}`` with
row-major n x n arrays of floats; "im" may be omitted and defaults to zeros.
Floats are emitted with shortest round-trip precision, so write/read is
lossless for doubles.
"""

import json

import numpy as np

from .errors import ParseError
from .linalg import as_matrix

__all__ = ["matrix_to_dict", "matrix_from_dict", "dump_matrix", "load_matrix"]


def matrix_to_dict(a):
    a = as_matrix(a)
    return {
        "n": int(a.shape[0]),
        "re": a.real.tolist(),
        "im": a.imag.tolist(),
    }


def _as_real_block(data, n, key):
    arr = np.asarray(data, dtype=np.float64)
    if arr.shape != (n, n):
        raise ParseError(f'"{key}" must be an {n}x{n} array, got shape {arr.shape}')
    return arr


def matrix_from_dict(data):
    if not isinstance(data, dict):
        raise ParseError("matrix JSON must be an object")
    try:
        n = int(data["n"])
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError('matrix JSON needs an integer "n"') from exc
    if n < 1:
        raise ParseError('"n" must be positive')
    if "re" not in data:
        raise ParseError('matrix JSON needs a real part "re"')
    try:
        re = _as_real_block(data["re"], n, "re")
        im = _as_real_block(data["im"], n, "im") if "im" in data else np.zeros((n, n))
    except ParseError:
        raise
    except (TypeError, ValueError) as exc:
        raise ParseError(f"malformed matrix entries: {exc}") from exc
    try:
        return as_matrix(re + 1j * im)
    except ValueError as exc:
        raise ParseError(str(exc)) from exc


def dump_matrix(a, fp=None):
    """Serialize to JSON text (or write to ``fp`` when given)."""
    text = json.dumps(matrix_to_dict(a), indent=2)
    if fp is None:
        return text
    fp.write(text)
    fp.write("\n")
    return None


def load_matrix(source):
    """Read a matrix from JSON text, a file object, or a path."""
    if hasattr(source, "read"):
        text = source.read()
    elif isinstance(source, str) and source.lstrip().startswith("{"):
        text = source
    else:
        try:
            with open(source, "r", encoding="utf-8") as fh:
                text = fh.read()
        except OSError as exc:
            raise ParseError(f"cannot read {source}: {exc}") from exc
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc}") from exc
    return matrix_from_dict(data)
