"""Positive unital linear maps on matrix algebras.

Four families, positive and unital by construction: averages over unitary
conjugations, pinchings to a block-diagonal pattern, compressions by an
isometry (possibly dimension reducing), and the normalized trace map.
Each map is immutable after construction and applied with ``apply`` (or by
calling the map directly).
"""

from dataclasses import dataclass, field

import numpy as np

from .errors import DimensionMismatch
from .linalg import as_matrix
from .rand import rand_isometry, rand_unitary, rand_weights

__all__ = [
    "PositiveUnitalMap",
    "UnitaryAverage",
    "Pinching",
    "IsometryCompression",
    "TraceMap",
    "PULM_KINDS",
    "random_pulm",
]


class PositiveUnitalMap:
    """Base class; subclasses set input_dim/output_dim and _apply."""

    input_dim: int
    output_dim: int

    def apply(self, a):
        a = as_matrix(a)
        if a.shape[0] != self.input_dim:
            raise DimensionMismatch(
                f"map expects dimension {self.input_dim}, got {a.shape[0]}"
            )
        return self._apply(a)

    def __call__(self, a):
        return self.apply(a)

    def apply_tuple(self, mats):
        return [self.apply(a) for a in mats]


@dataclass(frozen=True)
class UnitaryAverage(PositiveUnitalMap):
    """A -> sum_j p_j U_j* A U_j for unitaries U_j and convex weights p_j."""

    weights: np.ndarray
    unitaries: tuple
    input_dim: int = field(init=False)
    output_dim: int = field(init=False)

    def __post_init__(self):
        n = self.unitaries[0].shape[0]
        object.__setattr__(self, "input_dim", n)
        object.__setattr__(self, "output_dim", n)

    def _apply(self, a):
        out = np.zeros_like(a)
        for p, u in zip(self.weights, self.unitaries):
            out += p * (u.conj().T @ a @ u)
        return out


@dataclass(frozen=True)
class Pinching(PositiveUnitalMap):
    """Restriction to the block-diagonal pattern given by ``block_sizes``."""

    block_sizes: tuple
    input_dim: int = field(init=False)
    output_dim: int = field(init=False)

    def __post_init__(self):
        n = int(sum(self.block_sizes))
        if n < 1 or any(b < 1 for b in self.block_sizes):
            raise ValueError("block sizes must be positive")
        object.__setattr__(self, "input_dim", n)
        object.__setattr__(self, "output_dim", n)

    def _apply(self, a):
        out = np.zeros_like(a)
        start = 0
        for b in self.block_sizes:
            stop = start + b
            out[start:stop, start:stop] = a[start:stop, start:stop]
            start = stop
        return out


@dataclass(frozen=True)
class IsometryCompression(PositiveUnitalMap):
    """A -> X* A X for an isometry X (n x k columns, X* X = I_k)."""

    isometry: np.ndarray
    input_dim: int = field(init=False)
    output_dim: int = field(init=False)

    def __post_init__(self):
        n, k = self.isometry.shape
        if not (1 <= k <= n):
            raise ValueError("isometry must have shape (n, k) with 1 <= k <= n")
        gram = self.isometry.conj().T @ self.isometry
        if np.linalg.norm(gram - np.eye(k), 2) > 1e-10:
            raise ValueError("columns are not orthonormal")
        object.__setattr__(self, "input_dim", n)
        object.__setattr__(self, "output_dim", k)

    def _apply(self, a):
        return self.isometry.conj().T @ a @ self.isometry


@dataclass(frozen=True)
class TraceMap(PositiveUnitalMap):
    """A -> (tr A / n) I."""

    dim: int
    input_dim: int = field(init=False)
    output_dim: int = field(init=False)

    def __post_init__(self):
        if self.dim < 1:
            raise ValueError("dimension must be positive")
        object.__setattr__(self, "input_dim", self.dim)
        object.__setattr__(self, "output_dim", self.dim)

    def _apply(self, a):
        return (np.trace(a) / self.dim) * np.eye(self.dim, dtype=np.complex128)


PULM_KINDS = ("unitary_average", "pinching", "isometry", "trace")


def _random_partition(n, rng):
    sizes = []
    left = n
    while left > 0:
        b = int(rng.integers(1, left + 1))
        sizes.append(b)
        left -= b
    return tuple(sizes)


def random_pulm(n, kind, rng, compress=False):
    """Draw a random positive unital map of the requested kind on dimension n.

    ``kind`` is one of PULM_KINDS.  Isometry compressions keep k = n unless
    ``compress`` is set, in which case k is drawn from {1, ..., n}.
    """
    if kind == "unitary_average":
        count = int(rng.integers(2, 5))
        us = tuple(rand_unitary(n, rng) for _ in range(count))
        return UnitaryAverage(weights=rand_weights(count, rng), unitaries=us)
    if kind == "pinching":
        return Pinching(block_sizes=_random_partition(n, rng))
    if kind == "isometry":
        k = int(rng.integers(1, n + 1)) if compress else n
        return IsometryCompression(isometry=rand_isometry(n, k, rng))
    if kind == "trace":
        return TraceMap(dim=n)
    raise ValueError(f"unknown map kind {kind!r}")
