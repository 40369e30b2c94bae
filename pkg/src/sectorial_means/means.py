"""Means of accretive and positive definite matrix tuples.

Implements the weighted arithmetic and harmonic means, the binary weighted
geometric mean, the shift-parametrized resolvent average, and the
shift-parametrized arithmetic#harmonic mean (geometric mean of the shifted
arithmetic and harmonic means), together with the Riccati-type solver and
residuals that characterize them.

The shift parameter mu is a float; ``math.inf`` and ``-math.inf`` are the
explicit infinite cases (they select the arithmetic and harmonic mean
directly, never through a large finite surrogate).

Results for tuples of positive definite inputs are symmetrized before
return; the discarded skew part is checked against the Hermitian tolerance
so that algorithmic defects surface instead of being hidden.
"""

import math

import numpy as np

from .errors import (
    DimensionMismatch,
    InvalidMu,
    InvalidWeights,
    NotAccretive,
    NotHermitian,
)
from .linalg import (
    DEFAULT_TOL,
    as_matrix,
    herm_part,
    inv,
    principal_power,
    schur,
    spectral_norm,
    _check_cut,
    _separated_divisors,
)
from .backend import parlett_fill

__all__ = [
    "check_weights",
    "arithmetic_mean",
    "harmonic_mean",
    "geometric_mean",
    "resolvent_average",
    "ah_mean",
    "resolvent_rep_function",
    "drury_solve",
    "drury_residual",
    "ah_riccati_residual",
]


def check_weights(weights, m=None, tol=None):
    """Validate a weight vector: entries in [0, 1], summing to one."""
    tol = tol or DEFAULT_TOL
    w = np.asarray(weights, dtype=np.float64)
    if w.ndim != 1 or w.size < 1:
        raise InvalidWeights(f"weights must be a nonempty 1-d vector, got shape {w.shape}")
    if m is not None and w.size != m:
        raise DimensionMismatch(f"{w.size} weights for {m} matrices")
    if np.any(w < -tol.atol) or np.any(w > 1.0 + tol.atol):
        raise InvalidWeights("weights must lie in [0, 1]")
    if abs(float(w.sum()) - 1.0) > tol.atol:
        raise InvalidWeights(f"weights must sum to 1, got {w.sum()!r}")
    return w


def _as_tuple(mats):
    items = [as_matrix(m) for m in mats]
    if not items:
        raise InvalidWeights("matrix tuple must not be empty")
    n = items[0].shape[0]
    for m in items[1:]:
        if m.shape[0] != n:
            raise DimensionMismatch("matrix tuple entries differ in dimension")
    return items, n


def _classify(items, tol):
    """Accretivity margins plus whether every input is Hermitian PD."""
    all_pd = True
    for a in items:
        scale = max(1.0, spectral_norm(a))
        margin = float(np.linalg.eigvalsh(herm_part(a))[0])
        if margin <= tol.atol * scale:
            raise NotAccretive(f"not accretive: lambda_min(Re A) = {margin:.6g}")
        skew_norm = spectral_norm(a - herm_part(a))
        if skew_norm > tol.herm_tol * scale:
            all_pd = False
    return all_pd


def _finalize(out, pd_inputs, tol):
    """Symmetrize a mean of PD inputs, guarding the discarded skew part."""
    if not pd_inputs:
        return out
    h = herm_part(out)
    skew_norm = spectral_norm(out - h)
    if skew_norm > tol.herm_tol * max(1.0, spectral_norm(h)):
        raise NotHermitian(
            f"mean of PD inputs has skew part {skew_norm:.3e}; algorithmic defect"
        )
    return h


def arithmetic_mean(mats, weights, tol=None):
    """Weighted arithmetic mean sum_i w_i A_i."""
    tol = tol or DEFAULT_TOL
    items, n = _as_tuple(mats)
    w = check_weights(weights, len(items), tol)
    out = np.zeros((n, n), dtype=np.complex128)
    for wi, a in zip(w, items):
        out += wi * a
    return out


def harmonic_mean(mats, weights, tol=None):
    """Weighted harmonic mean (sum_i w_i A_i^{-1})^{-1} of accretive inputs."""
    tol = tol or DEFAULT_TOL
    items, n = _as_tuple(mats)
    w = check_weights(weights, len(items), tol)
    pd = _classify(items, tol)
    acc = np.zeros((n, n), dtype=np.complex128)
    for wi, a in zip(w, items):
        acc += wi * inv(a, tol)
    return _finalize(inv(acc, tol), pd, tol)


def geometric_mean(a, b, lam, tol=None):
    """Weighted geometric mean A^{1/2} (A^{-1/2} B A^{-1/2})^lam A^{1/2}.

    Both inputs must be accretive.  The endpoint weights return the
    corresponding input directly.  For Hermitian PD inputs the result is
    symmetrized; in general it is accretive (guarded).
    """
    tol = tol or DEFAULT_TOL
    a = as_matrix(a)
    b = as_matrix(b)
    if a.shape != b.shape:
        raise DimensionMismatch("geometric mean needs equally sized matrices")
    lam = float(lam)
    if not (0.0 <= lam <= 1.0):
        raise ValueError(f"weight must lie in [0, 1], got {lam}")
    pd = _classify([a, b], tol)
    if lam == 0.0:
        return a.copy()
    if lam == 1.0:
        return b.copy()
    sqrt_a, isqrt_a = _power_pair(a, tol)
    inner = isqrt_a @ b @ isqrt_a
    if pd:
        inner = herm_part(inner)
    mid = principal_power(inner, lam, tol=tol)
    out = sqrt_a @ mid @ sqrt_a
    out = _finalize(out, pd, tol)
    scale = max(1.0, spectral_norm(out))
    margin = float(np.linalg.eigvalsh(herm_part(out))[0])
    if margin < -tol.order_tol * scale:
        raise NotAccretive(f"geometric mean lost accretivity: margin {margin:.3e}")
    return out


def _power_pair(a, tol):
    """A^{1/2} and A^{-1/2} from a single Schur factorization."""
    n = a.shape[0]
    if n == 1:
        z = complex(a[0, 0])
        _check_cut([z], tol.atol * max(1.0, abs(z)))
        r = z**0.5
        one = np.array([[r]], dtype=np.complex128)
        return one, np.array([[1.0 / r]], dtype=np.complex128)
    q, t = schur(a)
    d = t.diagonal().copy()
    tnorm = spectral_norm(t)
    _check_cut(d, tol.atol * max(1.0, tnorm))
    div, _, _ = _separated_divisors(d, tnorm)
    t = np.ascontiguousarray(t)
    div = np.ascontiguousarray(div)
    qh = q.conj().T
    f_pos = parlett_fill(t, np.ascontiguousarray(d**0.5), div)
    f_neg = parlett_fill(t, np.ascontiguousarray(d**-0.5), div)
    return q @ f_pos @ qh, q @ f_neg @ qh


def _check_mu(mu, allow_negative):
    mu = float(mu)
    if math.isnan(mu):
        raise InvalidMu("mu must not be NaN")
    if not allow_negative and (mu < 0.0 or mu == -math.inf):
        raise InvalidMu(f"the resolvent average needs mu >= 0 or +inf, got {mu}")
    return mu


def resolvent_average(mats, weights, mu, tol=None):
    """Resolvent average (sum_i w_i (A_i + mu I)^{-1})^{-1} - mu I.

    Defined for accretive inputs and mu >= 0; ``math.inf`` selects the
    arithmetic mean.  At mu = 0 this is the weighted harmonic mean.  The
    result of accretive (non-PD) tuples is returned raw, without
    symmetrization.
    """
    tol = tol or DEFAULT_TOL
    items, n = _as_tuple(mats)
    w = check_weights(weights, len(items), tol)
    mu = _check_mu(mu, allow_negative=False)
    pd = _classify(items, tol)
    if mu == math.inf:
        return arithmetic_mean(items, w, tol)
    eye = np.eye(n, dtype=np.complex128)
    acc = np.zeros((n, n), dtype=np.complex128)
    for wi, a in zip(w, items):
        acc += wi * inv(a + mu * eye, tol)
    out = inv(acc, tol) - mu * eye
    return _finalize(out, pd, tol)


def ah_mean(mats, weights, mu, tol=None):
    """Arithmetic#harmonic mean with shift mu.

    For mu >= 0 this is the geometric mean of the shifted arithmetic and
    shifted harmonic means, minus mu I; negative mu is defined through the
    inversion identity L_mu(A) = L_{-mu}(A^{-1})^{-1}.  ``math.inf`` and
    ``-math.inf`` select the arithmetic and harmonic means.
    """
    tol = tol or DEFAULT_TOL
    items, n = _as_tuple(mats)
    w = check_weights(weights, len(items), tol)
    mu = _check_mu(mu, allow_negative=True)
    pd = _classify(items, tol)
    if mu == math.inf:
        return arithmetic_mean(items, w, tol)
    if mu == -math.inf:
        return harmonic_mean(items, w, tol)
    if mu >= 0.0:
        eye = np.eye(n, dtype=np.complex128)
        shifted = [a + mu * eye for a in items]
        lifted_arith = arithmetic_mean(shifted, w, tol)
        acc = np.zeros((n, n), dtype=np.complex128)
        for wi, s in zip(w, shifted):
            acc += wi * inv(s, tol)
        lifted_harm = inv(acc, tol)
        out = geometric_mean(lifted_arith, lifted_harm, 0.5, tol) - mu * eye
    else:
        flipped = ah_mean([inv(a, tol) for a in items], w, -mu, tol)
        out = inv(flipped, tol)
    return _finalize(out, pd, tol)


def resolvent_rep_function(lam, mu, t):
    """Scalar representing function of the two-variable resolvent average.

    f(t) = (lam (1 + mu)^{-1} + (1 - lam) (t + mu)^{-1})^{-1} - mu, with
    f(1) = 1 and f strictly increasing on t > 0.  ``lam`` is the weight of
    the first (normalized) slot.
    """
    lam = float(lam)
    mu = float(mu)
    t = float(t)
    if not (0.0 < lam < 1.0):
        raise ValueError(f"weight must lie in (0, 1), got {lam}")
    if not mu > 0.0 or math.isinf(mu):
        raise ValueError(f"shift must be finite and positive, got {mu}")
    if not t > 0.0:
        raise ValueError(f"argument must be positive, got {t}")
    return 1.0 / (lam / (1.0 + mu) + (1.0 - lam) / (t + mu)) - mu


def drury_solve(a, b, tol=None):
    """Unique accretive solution X of X A^{-1} X = B, for accretive A, B.

    The solution is the geometric mean of A and B with equal weights.
    """
    return geometric_mean(a, b, 0.5, tol=tol)


def drury_residual(a, b, x, tol=None):
    """Relative residual ||X A^{-1} X - B|| / ||B|| of the quadratic equation."""
    tol = tol or DEFAULT_TOL
    a = as_matrix(a)
    b = as_matrix(b)
    x = as_matrix(x)
    lhs = x @ inv(a, tol) @ x
    return spectral_norm(lhs - b) / max(1.0, spectral_norm(b))


def ah_riccati_residual(mats, weights, mu, x, tol=None):
    """Relative residual of sum_i w_i X (A_i + mu I)^{-1} X = sum_i w_i (A_i + mu I).

    The shifted arithmetic#harmonic mean (plus mu I) solves this equation
    exactly; the residual quantifies how far a candidate X is from doing so.
    """
    tol = tol or DEFAULT_TOL
    items, n = _as_tuple(mats)
    w = check_weights(weights, len(items), tol)
    mu = float(mu)
    if math.isnan(mu) or mu < 0.0 or math.isinf(mu):
        raise InvalidMu(f"the residual is defined for finite mu >= 0, got {mu}")
    x = as_matrix(x)
    if x.shape[0] != n:
        raise DimensionMismatch("candidate solution has wrong dimension")
    _classify(items, tol)
    eye = np.eye(n, dtype=np.complex128)
    lhs = np.zeros((n, n), dtype=np.complex128)
    rhs = np.zeros((n, n), dtype=np.complex128)
    for wi, a in zip(w, items):
        shifted = a + mu * eye
        lhs += wi * (x @ inv(shifted, tol) @ x)
        rhs += wi * shifted
    return spectral_norm(lhs - rhs) / spectral_norm(rhs)
