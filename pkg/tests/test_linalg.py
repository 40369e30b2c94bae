import math

import numpy as np
import pytest
import scipy.linalg
from hypothesis import given, settings
from hypothesis import strategies as st

from sectorial_means.errors import (
    DimensionMismatch,
    NotAccretive,
    NotHermitian,
    SingularMatrix,
    SpectrumOnCut,
)
from sectorial_means.linalg import (
    DEFAULT_TOL,
    ToleranceConfig,
    eig_hermitian,
    herm_part,
    inv,
    loewner_cmp,
    principal_power,
    principal_sqrt,
    schur,
    sectorial_angle,
    shifted_sector_angle,
    skew_part,
    spectral_norm,
)

I2 = np.eye(2, dtype=complex)


def random_pd(rng, n, shift=None):
    z = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
    return z @ z.conj().T + (shift or n) * np.eye(n)


def random_accretive(rng, n, tan_alpha=0.8):
    re = random_pd(rng, n)
    s = herm_part(rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n)))
    s /= max(1.0, spectral_norm(s))
    w, v = np.linalg.eigh(re)
    rh = (v * np.sqrt(w)) @ v.conj().T
    return rh @ (np.eye(n) + 1j * tan_alpha * s) @ rh


dims = st.sampled_from([1, 2, 3, 5, 8])
seeds = st.integers(min_value=0, max_value=2**32 - 1)


class TestCartesian:
    def test_identity_fixed_point(self):
        np.testing.assert_allclose(herm_part(I2), I2)

    def test_scalar_real_part(self):
        np.testing.assert_allclose(herm_part((1 + 1j) * I2), I2)

    def test_hand_computed_2x2(self):
        a = np.array([[1.0, 2.0 + 1.0j], [-1.0j, 3.0]])
        expected = np.array([[1.0, 1.0 + 1.0j], [1.0 - 1.0j, 3.0]])
        np.testing.assert_allclose(herm_part(a), expected)

    @given(seeds, dims)
    @settings(max_examples=25, deadline=None)
    def test_decomposition_reconstructs(self, seed, n):
        rng = np.random.default_rng(seed)
        a = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
        re, im = herm_part(a), skew_part(a)
        np.testing.assert_allclose(re + 1j * im, a, atol=1e-14)
        # both parts exactly Hermitian
        assert np.array_equal(re, re.conj().T)
        assert np.array_equal(im, im.conj().T)


class TestInv:
    def test_scalar_multiple(self):
        np.testing.assert_allclose(inv(2 * I2), 0.5 * I2)

    def test_closed_form_2x2(self):
        a = np.array([[1.0, 1.0], [0.0, 1.0]], dtype=complex)
        np.testing.assert_allclose(inv(a), np.array([[1.0, -1.0], [0.0, 1.0]]))

    def test_singular_raises(self):
        with pytest.raises(SingularMatrix):
            inv(np.zeros((3, 3)))

    @given(seeds, dims)
    @settings(max_examples=25, deadline=None)
    def test_residual(self, seed, n):
        rng = np.random.default_rng(seed)
        a = random_accretive(rng, n)
        resid = spectral_norm(a @ inv(a) - np.eye(n))
        kappa = spectral_norm(a) * spectral_norm(inv(a))
        assert resid <= n * DEFAULT_TOL.rtol * kappa


class TestEigHermitian:
    def test_identity(self):
        w, v = eig_hermitian(np.eye(3))
        np.testing.assert_allclose(w, np.ones(3))
        np.testing.assert_allclose(v @ v.conj().T, np.eye(3), atol=1e-12)

    def test_diagonal_sorted_ascending(self):
        w, _ = eig_hermitian(np.diag([3.0, 1.0]))
        np.testing.assert_allclose(w, [1.0, 3.0])

    def test_swap_matrix(self):
        w, _ = eig_hermitian(np.array([[0.0, 1.0], [1.0, 0.0]]))
        np.testing.assert_allclose(w, [-1.0, 1.0])

    def test_rejects_non_hermitian(self):
        with pytest.raises(NotHermitian):
            eig_hermitian(np.array([[0.0, 1.0], [0.0, 0.0]]))

    @given(seeds, dims)
    @settings(max_examples=25, deadline=None)
    def test_residual(self, seed, n):
        rng = np.random.default_rng(seed)
        h = herm_part(rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n)))
        w, v = eig_hermitian(h)
        assert spectral_norm(h @ v - v @ np.diag(w)) <= n * DEFAULT_TOL.rtol * max(
            1.0, spectral_norm(h)
        )


class TestSchur:
    def test_diagonal_input(self):
        q, t = schur(np.diag([2.0, 3.0]).astype(complex))
        np.testing.assert_allclose(sorted(np.diag(t).real), [2.0, 3.0])

    def test_hermitian_gives_diagonal_t(self):
        rng = np.random.default_rng(0)
        h = herm_part(rng.standard_normal((4, 4)) + 1j * rng.standard_normal((4, 4)))
        _, t = schur(h)
        off = t - np.diag(np.diag(t))
        assert spectral_norm(off) <= 1e-12 * max(1.0, spectral_norm(h))

    def test_triangular_input(self):
        a = np.array([[1.0, 1.0], [0.0, 2.0]], dtype=complex)
        _, t = schur(a)
        np.testing.assert_allclose(sorted(np.diag(t).real), [1.0, 2.0])

    @given(seeds, dims)
    @settings(max_examples=25, deadline=None)
    def test_factorization_contract(self, seed, n):
        rng = np.random.default_rng(seed)
        a = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
        q, t = schur(a)
        norm = max(1.0, spectral_norm(a))
        assert spectral_norm(a - q @ t @ q.conj().T) <= n * DEFAULT_TOL.rtol * norm
        assert spectral_norm(q.conj().T @ q - np.eye(n)) <= n * DEFAULT_TOL.rtol
        assert spectral_norm(np.tril(t, -1)) <= DEFAULT_TOL.atol * norm


class TestPrincipalPower:
    def test_identity_any_exponent(self):
        np.testing.assert_allclose(principal_power(np.eye(4), 0.37), np.eye(4), atol=1e-13)

    def test_diagonal(self):
        np.testing.assert_allclose(
            principal_power(np.diag([4.0, 9.0]).astype(complex), 0.5),
            np.diag([2.0, 3.0]),
            atol=1e-13,
        )

    def test_scalar_principal_branch(self):
        got = principal_power(np.array([[1.0 + 1.0j]]), 0.5)[0, 0]
        expected = 2**0.25 * np.exp(1j * math.pi / 8)
        assert abs(got - expected) <= 1e-14

    def test_exponent_one_is_identity_map(self):
        rng = np.random.default_rng(5)
        a = random_accretive(rng, 5)
        assert spectral_norm(principal_power(a, 1.0) - a) <= 1e-12 * spectral_norm(a)

    def test_negative_axis_rejected(self):
        with pytest.raises(SpectrumOnCut):
            principal_sqrt(-np.eye(2))

    def test_hermitian_pd_result_hermitian_pd(self):
        rng = np.random.default_rng(11)
        a = random_pd(rng, 6)
        r = principal_power(a, 0.7)
        assert spectral_norm(r - herm_part(r)) <= 1e-12 * spectral_norm(r)
        assert np.linalg.eigvalsh(herm_part(r))[0] > 0

    @given(seeds, dims, st.sampled_from([0.5, 1.0 / 3.0, 0.75]))
    @settings(max_examples=30, deadline=None)
    def test_round_trip(self, seed, n, p):
        rng = np.random.default_rng(seed)
        a = random_accretive(rng, n)
        back = principal_power(principal_power(a, p), 1.0 / p)
        assert spectral_norm(back - a) <= 100 * n * DEFAULT_TOL.rtol * spectral_norm(a)

    @given(seeds, dims)
    @settings(max_examples=25, deadline=None)
    def test_commutes_with_unitary_conjugation(self, seed, n):
        rng = np.random.default_rng(seed)
        a = random_accretive(rng, n)
        z = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
        q, _ = np.linalg.qr(z)
        lhs = principal_power(q.conj().T @ a @ q, 0.4)
        rhs = q.conj().T @ principal_power(a, 0.4) @ q
        assert spectral_norm(lhs - rhs) <= 100 * n * DEFAULT_TOL.rtol * spectral_norm(a)


class TestPrincipalSqrt:
    def test_scalar_multiple(self):
        np.testing.assert_allclose(principal_sqrt(4 * np.eye(3)), 2 * np.eye(3), atol=1e-13)

    def test_scalar_oracle(self):
        got = principal_sqrt(np.array([[1.0 + 1.0j]]))[0, 0]
        assert abs(got - 2**0.25 * np.exp(1j * math.pi / 8)) <= 1e-14

    @given(seeds, dims)
    @settings(max_examples=25, deadline=None)
    def test_square_residual(self, seed, n):
        rng = np.random.default_rng(seed)
        a = random_accretive(rng, n)
        s = principal_sqrt(a)
        assert spectral_norm(s @ s - a) <= n * DEFAULT_TOL.rtol * spectral_norm(a) * 10


class TestLoewner:
    def test_strictly_below(self):
        v = loewner_cmp(I2, 2 * I2)
        assert v.leq and abs(v.margin - 1.0) <= 1e-12

    def test_strictly_above(self):
        v = loewner_cmp(2 * I2, I2)
        assert not v.leq and abs(v.margin + 1.0) <= 1e-12

    def test_incomparable_pair(self):
        v = loewner_cmp(np.diag([1.0, 3.0]), np.diag([2.0, 2.0]))
        assert not v.leq and abs(v.margin + 1.0) <= 1e-12

    def test_dimension_mismatch(self):
        with pytest.raises(DimensionMismatch):
            loewner_cmp(np.eye(2), np.eye(3))

    def test_skew_difference_blocks_verdict(self):
        a = np.zeros((2, 2), dtype=complex)
        b = np.array([[1.0, 1.0j], [-1.0j, 1.0]]) + np.array([[0.0, 0.5], [-0.5, 0.0]])
        assert not loewner_cmp(a, b).leq

    @given(seeds, dims)
    @settings(max_examples=25, deadline=None)
    def test_partial_order_on_hermitian_samples(self, seed, n):
        rng = np.random.default_rng(seed)
        x = herm_part(rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n)))
        gap1 = random_pd(rng, n, shift=0.5)
        gap2 = random_pd(rng, n, shift=0.5)
        y = x + gap1
        z = y + gap2
        assert loewner_cmp(x, x).leq  # reflexive
        assert loewner_cmp(x, y).leq and not loewner_cmp(y, x).leq  # antisymmetric
        assert loewner_cmp(x, z).leq  # transitive along the chain


class TestSectorialAngle:
    def test_pd_has_zero_angle(self):
        rng = np.random.default_rng(3)
        cert = sectorial_angle(random_pd(rng, 4))
        assert cert.alpha <= 1e-8
        assert cert.accretivity_margin > 0

    def test_quarter_pi_two_by_two(self):
        a = I2 + 1j * np.array([[0.0, 1.0], [1.0, 0.0]])
        cert = sectorial_angle(a)
        # oracle: generalized eigenproblem Im A v = t Re A v
        tans = scipy.linalg.eigh(skew_part(a), herm_part(a), eigvals_only=True)
        assert abs(cert.alpha - math.atan(np.abs(tans).max())) <= 1e-12
        assert abs(cert.alpha - math.pi / 4) <= 1e-12

    def test_scalar_rotation(self):
        cert = sectorial_angle((1 + 1j) * I2)
        assert abs(cert.alpha - math.pi / 4) <= 1e-12

    @pytest.mark.parametrize("theta", [0.1, 0.6, 1.2])
    def test_rotated_pd(self, theta):
        rng = np.random.default_rng(9)
        a = np.exp(1j * theta) * random_pd(rng, 3)
        assert abs(sectorial_angle(a).alpha - theta) <= 1e-9

    def test_not_accretive(self):
        with pytest.raises(NotAccretive):
            sectorial_angle(-np.eye(2))

    @given(seeds, dims)
    @settings(max_examples=25, deadline=None)
    def test_inverse_bounds_from_certificate(self, seed, n):
        rng = np.random.default_rng(seed)
        a = random_accretive(rng, n)
        cert = sectorial_angle(a)
        sec2 = 1.0 / math.cos(cert.alpha) ** 2
        re_inv = herm_part(inv(a))
        inv_re = inv(herm_part(a))
        assert loewner_cmp(re_inv, inv_re).leq
        assert loewner_cmp(inv_re, sec2 * re_inv).leq


class TestShiftedSectorAngle:
    def test_formula_plug_in(self):
        assert abs(shifted_sector_angle(math.pi / 4, 1.0) - math.atan(0.5)) <= 1e-15

    def test_zero_angle(self):
        assert shifted_sector_angle(0.0, 5.0) == 0.0

    def test_zero_shift_is_identity(self):
        assert shifted_sector_angle(0.7, 0.0) == pytest.approx(0.7, abs=1e-15)

    def test_monotone_in_shift(self):
        angles = [shifted_sector_angle(1.0, mu) for mu in (0.0, 0.5, 1.0, 10.0, 100.0)]
        assert all(x > y for x, y in zip(angles, angles[1:]))
        assert shifted_sector_angle(1.0, math.inf) == 0.0

    def test_rejects_bad_angle(self):
        with pytest.raises(ValueError):
            shifted_sector_angle(math.pi / 2, 1.0)


class TestToleranceConfig:
    def test_defaults(self):
        tol = ToleranceConfig()
        assert tol.atol == 1e-10 and tol.rtol == 1e-9 and tol.herm_tol == 1e-9
        assert tol.order_tol == pytest.approx(1.1e-9)

    @pytest.mark.parametrize("bad", [0.0, -1e-3, 1.0, 2.0])
    def test_rejects_out_of_range(self, bad):
        with pytest.raises(ValueError):
            ToleranceConfig(atol=bad)
