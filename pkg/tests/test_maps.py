import numpy as np
import pytest

from sectorial_means.errors import DimensionMismatch
from sectorial_means.linalg import herm_part, inv, loewner_cmp, spectral_norm
from sectorial_means.maps import (
    PULM_KINDS,
    IsometryCompression,
    Pinching,
    TraceMap,
    UnitaryAverage,
    random_pulm,
)
from sectorial_means.means import geometric_mean, harmonic_mean


def random_psd(rng, n):
    z = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
    return z @ z.conj().T


def all_maps(rng, n, compress=False):
    return [random_pulm(n, kind, rng, compress=compress) for kind in PULM_KINDS]


class TestConstruction:
    def test_trace_map_example(self):
        phi = TraceMap(dim=2)
        np.testing.assert_allclose(phi(np.diag([1.0, 3.0])), 2.0 * np.eye(2))

    def test_pinching_example(self):
        phi = Pinching(block_sizes=(1, 1))
        got = phi(np.array([[1.0, 5.0], [5.0, 2.0]]))
        np.testing.assert_allclose(got, np.diag([1.0, 2.0]))

    def test_isometry_orthonormal_columns(self):
        rng = np.random.default_rng(0)
        phi = random_pulm(3, "isometry", rng, compress=True)
        k = phi.output_dim
        gram = phi.isometry.conj().T @ phi.isometry
        assert spectral_norm(gram - np.eye(k)) <= 1e-12

    def test_isometry_rejects_bad_columns(self):
        with pytest.raises(ValueError):
            IsometryCompression(isometry=np.ones((3, 2), dtype=complex))

    def test_unknown_kind(self):
        with pytest.raises(ValueError):
            random_pulm(2, "nope", np.random.default_rng(0))

    def test_dimension_guard(self):
        phi = TraceMap(dim=3)
        with pytest.raises(DimensionMismatch):
            phi(np.eye(2))


class TestAxioms:
    @pytest.mark.parametrize("n", [1, 2, 4, 6])
    def test_unital(self, n):
        rng = np.random.default_rng(n)
        for phi in all_maps(rng, n, compress=True):
            out = phi(np.eye(n))
            assert spectral_norm(out - np.eye(phi.output_dim)) <= 1e-11

    @pytest.mark.parametrize("kind", PULM_KINDS)
    def test_positive_on_psd_samples(self, kind):
        rng = np.random.default_rng(hash(kind) % 2**32)
        phi = random_pulm(4, kind, rng, compress=True)
        for _ in range(50):
            h = random_psd(rng, 4)
            out = phi(h)
            assert np.linalg.eigvalsh(herm_part(out))[0] >= -1e-10 * max(
                1.0, spectral_norm(h)
            )

    @pytest.mark.parametrize("n", [2, 5])
    def test_linear(self, n):
        rng = np.random.default_rng(100 + n)
        a = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
        b = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
        for phi in all_maps(rng, n):
            for c in (2.5, -1.0 + 0.5j):
                lhs = phi(c * a + b)
                rhs = c * phi(a) + phi(b)
                assert spectral_norm(lhs - rhs) <= 1e-11 * max(1.0, spectral_norm(rhs))


class TestMapMeanInequalities:
    def test_choi(self):
        rng = np.random.default_rng(7)
        a = random_psd(rng, 4) + np.eye(4)
        for phi in all_maps(rng, 4):
            assert loewner_cmp(inv(phi(a)), phi(inv(a))).leq

    def test_kantorovich_with_bounds(self):
        rng = np.random.default_rng(8)
        h, k = 1.0, 4.0
        d = rng.uniform(h, k, 4)
        d[0], d[1] = h, k
        u, _ = np.linalg.qr(rng.standard_normal((4, 4)) + 1j * rng.standard_normal((4, 4)))
        a = herm_part((u * d) @ u.conj().T)
        const = (k + h) ** 2 / (4 * k * h)
        for phi in all_maps(rng, 4):
            assert loewner_cmp(phi(inv(a)), const * inv(phi(a))).leq

    def test_ando_for_geometric_and_harmonic(self):
        rng = np.random.default_rng(9)
        a = random_psd(rng, 3) + np.eye(3)
        b = random_psd(rng, 3) + np.eye(3)
        for phi in all_maps(rng, 3):
            gm = geometric_mean(a, b, 0.3)
            assert loewner_cmp(phi(gm), geometric_mean(phi(a), phi(b), 0.3)).leq
            hm = harmonic_mean([a, b], [0.7, 0.3])
            assert loewner_cmp(phi(hm), harmonic_mean([phi(a), phi(b)], [0.7, 0.3])).leq

    def test_compression_can_reduce_dimension(self):
        rng = np.random.default_rng(10)
        found = set()
        for i in range(40):
            phi = random_pulm(3, "isometry", rng, compress=True)
            found.add(phi.output_dim)
        assert found >= {1, 2, 3}


class TestUnitaryAverage:
    def test_single_unitary_is_conjugation(self):
        rng = np.random.default_rng(11)
        u, _ = np.linalg.qr(rng.standard_normal((3, 3)) + 1j * rng.standard_normal((3, 3)))
        phi = UnitaryAverage(weights=np.array([1.0]), unitaries=(u,))
        a = random_psd(rng, 3)
        np.testing.assert_allclose(phi(a), u.conj().T @ a @ u)
