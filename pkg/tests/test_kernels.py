"""Parity and anti-confluence behavior of the recurrence kernels."""

import numpy as np
import pytest

from sectorial_means import _kernels_py
from sectorial_means.backend import backend_name
from sectorial_means.linalg import ETA, SEP_TOL, _separated_divisors, principal_power

try:
    from sectorial_means import _core
except ImportError:
    _core = None

needs_compiled = pytest.mark.skipif(_core is None, reason="compiled kernel not built")


def _random_triangular(rng, n):
    t = np.triu(rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n)))
    t += np.diag(2.0 + rng.uniform(0.0, 3.0, n) + 1j * rng.uniform(-0.5, 0.5, n))
    return np.ascontiguousarray(t)


def test_backend_is_known():
    assert backend_name() in ("compiled", "python")


@needs_compiled
@pytest.mark.parametrize("n", [1, 2, 3, 5, 8])
def test_backends_agree(n):
    rng = np.random.default_rng(n)
    for _ in range(20):
        t = _random_triangular(rng, n)
        d = t.diagonal().copy()
        args = (t, np.ascontiguousarray(d**0.5), np.ascontiguousarray(d))
        a = _kernels_py.parlett_fill(*args)
        b = _core.parlett_fill(*args)
        scale = max(1.0, np.abs(a).max())
        assert np.abs(a - b).max() <= 1e-10 * scale


@needs_compiled
def test_backends_agree_under_separation():
    t = np.triu(np.full((4, 4), 0.3 + 0.1j)) + np.eye(4)
    d = t.diagonal().copy()
    div, perturbed, _ = _separated_divisors(d, 1.0)
    args = (
        np.ascontiguousarray(t),
        np.ascontiguousarray(d**0.5),
        np.ascontiguousarray(div),
    )
    assert perturbed
    a = _kernels_py.parlett_fill(*args)
    b = _core.parlett_fill(*args)
    assert np.abs(a - b).max() <= 1e-12


class TestSeparatedDivisors:
    def test_well_separated_untouched(self):
        d = np.array([1.0, 2.0, 3.0], dtype=complex)
        div, perturbed, shift = _separated_divisors(d, 1.0)
        assert not perturbed and shift == 0.0
        assert np.array_equal(div, d)

    def test_duplicates_spread(self):
        d = np.ones(5, dtype=complex)
        norm = 1.0
        div, perturbed, shift = _separated_divisors(d, norm)
        assert perturbed and shift > 0.0
        gaps = [abs(div[i] - div[j]) for i in range(5) for j in range(i + 1, 5)]
        assert min(gaps) >= ETA * norm * (1.0 - 1e-12)

    def test_detection_threshold_scales_with_norm(self):
        d = np.array([1.0, 1.0 + 0.5 * SEP_TOL], dtype=complex)
        _, perturbed, _ = _separated_divisors(d, 1.0)
        assert perturbed
        _, perturbed, _ = _separated_divisors(d * 1e4, 1e4)
        assert perturbed


class TestPerturbationDiagnostics:
    def test_identity_reports_perturbation_with_exact_result(self):
        f, info = principal_power(np.eye(5, dtype=complex), 0.37, return_info=True)
        assert info.perturbed
        assert info.max_shift > 0.0
        # function values come from the unperturbed spectrum, so the result
        # stays exact for degenerate normal inputs
        assert np.abs(f - np.eye(5)).max() <= 1e-14

    def test_generic_input_not_perturbed(self):
        rng = np.random.default_rng(1)
        z = rng.standard_normal((6, 6)) + 1j * rng.standard_normal((6, 6))
        a = z @ z.conj().T + 6 * np.eye(6)
        _, info = principal_power(a, 0.5, return_info=True)
        assert not info.perturbed
        assert info.max_shift == 0.0

    def test_scalar_matrix_power_accuracy_under_perturbation(self):
        a = 2.25 * np.eye(4, dtype=complex)
        f, info = principal_power(a, 0.5, return_info=True)
        assert info.perturbed
        assert np.abs(f - 1.5 * np.eye(4)).max() <= 1e-12
