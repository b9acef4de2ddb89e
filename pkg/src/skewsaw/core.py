"""Exact spin-sequence representations and reference evaluation.

A binary sequence of length L is stored as a numpy array of +1/-1 integers.
For odd L the skew-symmetric subspace is parameterized by the first
D = (L + 1) / 2 spins (the "half sequence"); the remaining spins follow by
mirroring with alternating sign.  All indices in this package are 0-based:
half index h corresponds to the (h + 1)-th spin of the written-out sequence.

Everything here is pure and non-incremental; it serves as the ground truth
the fast search kernels are tested against.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

__all__ = [
    "EnergyRecord",
    "as_spins",
    "half_dim",
    "expand_skew",
    "autocorrelation",
    "autocorrelations",
    "sidelobe_array",
    "energy",
    "merit_factor",
]


def as_spins(seq) -> np.ndarray:
    """Validate and convert a sequence of +1/-1 values to an int64 array."""
    arr = np.asarray(seq, dtype=np.int64)
    if arr.ndim != 1 or arr.size < 1:
        raise ValueError("spin sequence must be a non-empty 1-D array")
    if not np.all(np.abs(arr) == 1):
        raise ValueError("spin values must be +1 or -1")
    return arr


def half_dim(length: int) -> int:
    """Number of free spin components D = (L + 1) / 2 for odd length L."""
    if length < 1 or length % 2 == 0:
        raise ValueError(f"skew-symmetric sequences need odd length, got {length}")
    return (length + 1) // 2


def expand_skew(half) -> np.ndarray:
    """Expand D free spins into the full skew-symmetric sequence of length 2D - 1.

    The mirrored part carries alternating signs: the spin at distance i past
    the center equals (-1)^i times the spin at distance i before the center.
    """
    h = as_spins(half)
    d = h.size
    full = np.empty(2 * d - 1, dtype=np.int64)
    full[:d] = h
    if d > 1:
        signs = np.where(np.arange(1, d) % 2 == 1, -1, 1)
        full[d:] = signs * h[d - 2 :: -1]
    return full


def autocorrelation(full, k: int) -> int:
    """Aperiodic autocorrelation C_k = sum_i s_i * s_(i+k) at lag k.

    Requires 0 <= k <= L - 1; C_0 equals L.
    """
    s = as_spins(full)
    if not 0 <= k <= s.size - 1:
        raise ValueError(f"lag {k} out of range for length {s.size}")
    return int(np.dot(s[: s.size - k], s[k:]))


def autocorrelations(full) -> np.ndarray:
    """All lags at once: entry k holds C_k, for k = 0 .. L-1."""
    s = as_spins(full)
    return np.correlate(s, s, mode="full")[s.size - 1 :]


def sidelobe_array(full) -> np.ndarray:
    """Correlation values in reversed layout: entry L-k-1 holds C_k.

    This is the layout the incremental search kernels maintain; the energy is
    the sum of squares of all entries except the one holding C_0.
    """
    return autocorrelations(full)[::-1].copy()


@dataclass(frozen=True)
class EnergyRecord:
    """Energy and merit factor of one sequence.

    F is None only in the degenerate single-spin case (E = 0); otherwise
    F * 2E == L * L holds exactly up to floating-point rounding.
    """

    L: int
    E: int
    F: float | None


def merit_factor(length: int, e: int) -> float | None:
    return length * length / (2.0 * e) if e > 0 else None


def energy(full) -> EnergyRecord:
    """Energy E = sum of squared sidelobes C_k^2 over k >= 1, plus merit factor."""
    c = autocorrelations(full)
    e = int(np.sum(c[1:] * c[1:]))
    return EnergyRecord(L=int(c[0]), E=e, F=merit_factor(int(c[0]), e))
