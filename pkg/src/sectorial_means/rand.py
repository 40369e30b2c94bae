"""Seeded, reproducible random ensembles.

Positive definite matrices with prescribed spectral bounds, sector-certified
accretive matrices, Haar unitaries and isometries, and weight vectors.  All
generators take an explicit ``numpy.random.Generator``; ``check_rng`` derives
independent, order-stable generators from (master seed, label, index) so a
sampling campaign can be re-run or parallelized without changing any draw.
"""

import hashlib
import math
from dataclasses import dataclass

import numpy as np

from .errors import InvalidAngle, InvalidBounds
from .linalg import SectorialCert, herm_part

__all__ = [
    "check_rng",
    "rand_pd",
    "rand_sectorial",
    "rand_unitary",
    "rand_isometry",
    "rand_weights",
    "EnsembleSpec",
]

_MASK64 = (1 << 64) - 1


def check_rng(master_seed, label, index):
    """Independent generator for draw ``index`` of the stream ``label``.

    Mixes the label through a stable hash so streams never collide and never
    depend on execution order.
    """
    word = int.from_bytes(
        hashlib.blake2b(str(label).encode(), digest_size=8).digest(), "little"
    )
    seq = np.random.SeedSequence(
        entropy=int(master_seed) & _MASK64, spawn_key=(word, int(index))
    )
    return np.random.default_rng(seq)


def rand_unitary(n, rng):
    """Haar-distributed unitary via QR of a complex Gaussian matrix."""
    z = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
    q, r = np.linalg.qr(z)
    d = r.diagonal()
    return q * (d / np.abs(d))


def rand_isometry(n, k, rng):
    """First k columns of a Haar unitary; satisfies X* X = I_k."""
    if not (1 <= k <= n):
        raise ValueError(f"need 1 <= k <= n, got k={k}, n={n}")
    return rand_unitary(n, rng)[:, :k]


def rand_pd(n, h, k, rng):
    """Hermitian PD matrix with spectrum in [h, k], both bounds attained.

    Eigenvalues are uniform on [h, k] with the extremes forced for n >= 2,
    conjugated by a Haar unitary.
    """
    if not (0.0 < h < k):
        raise InvalidBounds(f"need 0 < h < k, got h={h}, k={k}")
    d = rng.uniform(h, k, size=n)
    if n >= 2:
        d[0] = h
        d[1] = k
    u = rand_unitary(n, rng)
    return herm_part((u * d) @ u.conj().T)


def rand_sectorial(n, alpha_max, rng):
    """Accretive matrix whose certified sector angle equals ``alpha_max``.

    Built as R^{1/2} (I + i tan(alpha_max) S) R^{1/2} with R PD on [1/2, 2]
    and S Hermitian with spectrum in [-1, 1], extremes attained, so the
    congruence-normalized imaginary part has spectral radius exactly
    tan(alpha_max).
    """
    if not (0.0 <= alpha_max < math.pi / 2):
        raise InvalidAngle(f"angle must lie in [0, pi/2), got {alpha_max}")
    r = rand_pd(n, 0.5, 2.0, rng)
    s = rng.uniform(-1.0, 1.0, size=n)
    if n >= 2:
        s[0] = -1.0
        s[1] = 1.0
    else:
        s[0] = rng.choice([-1.0, 1.0])
    v = rand_unitary(n, rng)
    smat = herm_part((v * s) @ v.conj().T)
    w, q = np.linalg.eigh(r)
    r_half = herm_part((q * np.sqrt(w)) @ q.conj().T)
    eye = np.eye(n, dtype=np.complex128)
    a = r_half @ (eye + 1j * math.tan(alpha_max) * smat) @ r_half
    margin = float(np.linalg.eigvalsh(herm_part(a))[0])
    return SectorialCert(matrix=a, alpha=alpha_max, accretivity_margin=margin)


def rand_weights(m, rng):
    """Convex weight vector of length m from normalized exponential draws.

    For m >= 2, one draw in ten is forced near-degenerate (a weight below
    0.05) to stress the weighted identities.
    """
    if m < 1:
        raise ValueError("need at least one weight")
    w = rng.standard_exponential(m)
    w = w / w.sum()
    if m >= 2 and rng.random() < 0.1:
        i = int(rng.integers(m))
        small = rng.uniform(0.001, 0.05)
        rest = 1.0 - w[i]
        w *= (1.0 - small) / rest
        w[i] = small
    return w / w.sum()


@dataclass(frozen=True)
class EnsembleSpec:
    """A reproducible family of matrix tuples.

    kind is "pd" (spectrum in [h, k]) or "sectorial" (certified angle
    alpha_max).  Identical specs, including the seed, reproduce bit-identical
    sample streams.
    """

    n: int
    m: int
    kind: str
    seed: int
    samples: int
    h: float = 0.5
    k: float = 2.0
    alpha_max: float = 0.0

    def __post_init__(self):
        if self.kind not in ("pd", "sectorial"):
            raise ValueError(f"unknown ensemble kind {self.kind!r}")
        if self.kind == "pd" and not (0.0 < self.h < self.k):
            raise InvalidBounds(f"need 0 < h < k, got h={self.h}, k={self.k}")
        if self.kind == "sectorial" and not (0.0 <= self.alpha_max < math.pi / 2):
            raise InvalidAngle(f"angle must lie in [0, pi/2), got {self.alpha_max}")
        if self.samples < 1 or self.n < 1 or self.m < 1:
            raise ValueError("n, m and samples must be positive")

    def draw(self, index):
        """Matrices of the index-th tuple (order-stable in ``index``)."""
        rng = check_rng(self.seed, f"ensemble:{self.kind}:{self.n}x{self.m}", index)
        if self.kind == "pd":
            return [rand_pd(self.n, self.h, self.k, rng) for _ in range(self.m)]
        return [rand_sectorial(self.n, self.alpha_max, rng).matrix for _ in range(self.m)]

    def to_dict(self):
        return {
            "n": self.n,
            "m": self.m,
            "kind": self.kind,
            "seed": self.seed,
            "samples": self.samples,
            "h": self.h,
            "k": self.k,
            "alpha_max": self.alpha_max,
        }

    @classmethod
    def from_dict(cls, data):
        return cls(**data)
