"""Dense complex linear algebra for accretive-matrix work.

Provides the Cartesian decomposition, certified inverses, Hermitian
eigensolves, the complex Schur form, principal matrix powers, the Loewner
order comparison, and sector-angle certification.  All functions are pure:
they never mutate their arguments and hold no global state.

Matrices are plain ``numpy.ndarray`` values with ``complex128`` entries.
``as_matrix`` is the single entry -point validator (square, finite).
"""

import math
from dataclasses import dataclass

import numpy as np
import scipy.linalg

from .backend import parlett_fill
from .errors import (
    DimensionMismatch,
    NoConvergence,
    NotAccretive,
    NotHermitian,
    SingularMatrix,
    SpectrumOnCut,
)

__all__ = [
    "ToleranceConfig",
    "DEFAULT_TOL",
    "LoewnerVerdict",
    "SectorialCert",
    "PowerInfo",
    "as_matrix",
    "herm_part",
    "skew_part",
    "spectral_norm",
    "inv",
    "eig_hermitian",
    "schur",
    "principal_power",
    "principal_sqrt",
    "loewner_cmp",
    "loewner_leq",
    "accretivity_margin",
    "is_accretive",
    "sectorial_angle",
    "shifted_sector_angle",
]

# Anti-confluence constants for the triangular recurrence: diagonal pairs
# closer than SEP_TOL * ||T|| trigger divisor separation with spacing
# ETA * ||T||.
SEP_TOL = 1e-7
ETA = 1e-8


@dataclass(frozen=True)
class ToleranceConfig:
    """Numerical tolerances shared across the library.

    atol / rtol enter scale-relative comparisons; herm_tol bounds the skew
    part allowed when a Hermitian value is expected.
    """

    atol: float = 1e-10
    rtol: float = 1e-9
    herm_tol: float = 1e-9

    def __post_init__(self):
        for name in ("atol", "rtol", "herm_tol"):
            value = getattr(self, name)
            if not (0.0 < value < 1.0):
                raise ValueError(f"{name} must lie strictly between 0 and 1, got {value}")

    @property
    def order_tol(self):
        return self.atol + self.rtol


DEFAULT_TOL = ToleranceConfig()


@dataclass(frozen=True)
class LoewnerVerdict:
    """Outcome of a Loewner-order comparison X <= Y.

    margin is the smallest eigenvalue of the Hermitian part of Y - X;
    skew_norm is the spectral norm of its skew part.  ``leq`` holds when the
    difference is Hermitian up to tolerance and the margin does not dip
    below the scale-relative order tolerance.
    """

    margin: float
    skew_norm: float
    leq: bool


@dataclass(frozen=True)
class SectorialCert:
    """A matrix together with its certified sector angle.

    alpha is the smallest angle (radians, in [0, pi/2)) such that the
    numerical range lies in the sector |Im z| <= tan(alpha) Re z, and
    accretivity_margin is the smallest eigenvalue of the Hermitian part.
    """

    matrix: np.ndarray
    alpha: float
    accretivity_margin: float


@dataclass(frozen=True)
class PowerInfo:
    """Diagnostics from a principal power evaluation.

    perturbed records whether near-confluent diagonal entries forced a
    divisor separation; max_shift is the largest divisor displacement.
    """

    perturbed: bool
    max_shift: float


def as_matrix(a):
    """Validate and return ``a`` as a square complex128 array."""
    arr = np.asarray(a, dtype=np.complex128)
    if arr.ndim != 2 or arr.shape[0] != arr.shape[1] or arr.shape[0] < 1:
        raise ValueError(f"expected a square matrix, got shape {arr.shape}")
    if not np.all(np.isfinite(arr.view(np.float64))):
        raise ValueError("matrix entries must be finite")
    return arr


def _same_dim(x, y):
    if x.shape != y.shape:
        raise DimensionMismatch(f"dimension mismatch: {x.shape} vs {y.shape}")


def herm_part(a):
    """Hermitian part (A + A*) / 2 of the Cartesian decomposition."""
    a = as_matrix(a)
    return (a + a.conj().T) / 2.0


def skew_part(a):
    """Skew part (A - A*) / (2i); Hermitian by construction."""
    a = as_matrix(a)
    return (a - a.conj().T) / 2.0j


def spectral_norm(a):
    """Largest singular value."""
    return float(np.linalg.norm(np.asarray(a, dtype=np.complex128), 2))


def inv(a, tol=None):
    """Inverse of a certified-nonsingular matrix.

    Raises SingularMatrix when the smallest singular value does not exceed
    atol times the largest one.
    """
    a = as_matrix(a)
    tol = tol or DEFAULT_TOL
    sv = np.linalg.svd(a, compute_uv=False)
    if sv[-1] <= tol.atol * max(sv[0], 1.0):
        raise SingularMatrix(f"smallest singular value {sv[-1]:.3e} below threshold")
    return np.linalg.inv(a)


def eig_hermitian(h, tol=None):
    """Eigendecomposition of a Hermitian matrix.

    Returns eigenvalues in ascending order and a unitary eigenvector matrix.
    The input is symmetrized before solving; a skew part exceeding
    herm_tol * ||H|| raises NotHermitian.
    """
    h = as_matrix(h)
    tol = tol or DEFAULT_TOL
    skew = skew_part(h)
    skew_norm = float(np.abs(np.linalg.eigvalsh(skew)).max())
    if skew_norm > tol.herm_tol * max(1.0, spectral_norm(h)):
        raise NotHermitian(f"skew part norm {skew_norm:.3e} too large")
    w, v = np.linalg.eigh(herm_part(h))
    return w, v


def schur(a):
    """Complex Schur form: returns (Q, T) with A = Q T Q*, T upper triangular."""
    a = as_matrix(a)
    try:
        t, q = scipy.linalg.schur(a, output="complex")
    except scipy.linalg.LinAlgError as exc:  # QR iteration budget exceeded
        raise NoConvergence(str(exc)) from exc
    return q, t


def _check_cut(eigs, cut_tol):
    for z in eigs:
        dist = abs(z.imag) if z.real <= 0.0 else abs(z)
        if dist <= cut_tol:
            raise SpectrumOnCut(f"eigenvalue {z} within {cut_tol:.3e} of the branch cut")


def _separated_divisors(diag, tnorm):
    """Divisor values for the triangular recurrence.

    Returns (div, perturbed, max_shift).  When some diagonal pair is closer
    than SEP_TOL * ||T||, divisors are shifted deterministically in steps of
    ETA * ||T|| until all pairwise gaps reach ETA * ||T||.  Only the
    divisors move; the function values on the diagonal always come from the
    unperturbed spectrum.
    """
    n = diag.shape[0]
    sep = SEP_TOL * tnorm
    confluent = False
    for j in range(1, n):
        for i in range(j):
            if abs(diag[i] - diag[j]) < sep:
                confluent = True
                break
        if confluent:
            break
    if not confluent:
        return diag, False, 0.0
    eta = ETA * tnorm
    div = diag.astype(np.complex128).copy()
    for j in range(1, n):
        for _ in range(4 * n):
            if all(abs(div[j] - div[i]) >= eta for i in range(j)):
                break
            div[j] += eta
    max_shift = float(np.abs(div - diag).max())
    return div, True, max_shift


def principal_power(a, p, tol=None, return_info=False):
    """Principal matrix power A**p, p real.

    Uses the primary matrix function z -> exp(p log z) with the principal
    logarithm: complex Schur form, scalar powers on the diagonal, and the
    recurrence kernel for the strict upper triangle.  The spectrum must stay
    clear of the closed negative real axis (SpectrumOnCut otherwise).

    With ``return_info=True`` also returns a PowerInfo carrying the
    anti-confluence diagnostics.
    """
    a = as_matrix(a)
    tol = tol or DEFAULT_TOL
    p = float(p)
    n = a.shape[0]
    if n == 1:
        z = complex(a[0, 0])
        _check_cut([z], tol.atol * max(1.0, abs(z)))
        out = np.array([[z**p]], dtype=np.complex128)
        return (out, PowerInfo(False, 0.0)) if return_info else out
    q, t = schur(a)
    d = t.diagonal().copy()
    tnorm = spectral_norm(t)
    _check_cut(d, tol.atol * max(1.0, tnorm))
    fdiag = d**p
    div, perturbed, max_shift = _separated_divisors(d, tnorm)
    f = parlett_fill(
        np.ascontiguousarray(t),
        np.ascontiguousarray(fdiag),
        np.ascontiguousarray(div),
    )
    out = q @ f @ q.conj().T
    return (out, PowerInfo(perturbed, max_shift)) if return_info else out


def principal_sqrt(a, tol=None):
    """Principal square root, A**(1/2)."""
    return principal_power(a, 0.5, tol=tol)


def loewner_cmp(x, y, tol=None):
    """Compare X <= Y in the Loewner order, tolerantly.

    The comparison is scale-relative with scale = max(1, ||X||, ||Y||): the
    verdict is ``leq`` when the skew part of Y - X stays below
    herm_tol * scale and the smallest eigenvalue of its Hermitian part stays
    above -(atol + rtol) * scale.
    """
    x = as_matrix(x)
    y = as_matrix(y)
    _same_dim(x, y)
    tol = tol or DEFAULT_TOL
    d = y - x
    margin = float(np.linalg.eigvalsh(herm_part(d))[0])
    skew_norm = float(np.abs(np.linalg.eigvalsh(skew_part(d))).max())
    scale = max(1.0, spectral_norm(x), spectral_norm(y))
    leq = skew_norm <= tol.herm_tol * scale and margin >= -tol.order_tol * scale
    return LoewnerVerdict(margin=margin, skew_norm=skew_norm, leq=leq)


def loewner_leq(x, y, tol=None):
    """Shorthand for ``loewner_cmp(x, y, tol).leq``."""
    return loewner_cmp(x, y, tol=tol).leq


def accretivity_margin(a):
    """Smallest eigenvalue of the Hermitian part."""
    return float(np.linalg.eigvalsh(herm_part(a))[0])


def is_accretive(a, tol=None):
    """Whether the Hermitian part is positive definite beyond atol * ||A||."""
    a = as_matrix(a)
    tol = tol or DEFAULT_TOL
    return accretivity_margin(a) > tol.atol * max(1.0, spectral_norm(a))


def sectorial_angle(a, tol=None):
    """Certify the minimal sector angle of an accretive matrix.

    Returns a SectorialCert with alpha = arctan of the spectral radius of
    (Re A)^{-1/2} (Im A) (Re A)^{-1/2}, the smallest angle whose sector
    contains the numerical range.  Raises NotAccretive when the Hermitian
    part is not positive definite beyond tolerance.
    """
    a = as_matrix(a)
    tol = tol or DEFAULT_TOL
    re = herm_part(a)
    im = skew_part(a)
    w, v = np.linalg.eigh(re)
    margin = float(w[0])
    if margin <= tol.atol * max(1.0, spectral_norm(a)):
        raise NotAccretive(f"not accretive: lambda_min(Re A) = {margin:.3e}")
    rih = (v * (w**-0.5)) @ v.conj().T
    mid = herm_part(rih @ im @ rih)
    rho = float(np.abs(np.linalg.eigvalsh(mid)).max())
    return SectorialCert(matrix=a.copy(), alpha=math.atan(rho), accretivity_margin=margin)


def shifted_sector_angle(alpha, mu):
    """Sector angle of A + mu I given the angle of A.

    Equals arctan(tan(alpha) / (1 + |mu|)); decreasing in |mu| and equal to
    alpha at mu = 0.  Infinite mu yields 0.
    """
    if not (0.0 <= alpha < math.pi / 2):
        raise ValueError(f"alpha must lie in [0, pi/2), got {alpha}")
    if math.isinf(mu):
        return 0.0
    return math.atan(math.tan(alpha) / (1.0 + abs(mu)))
