"""Contiguous self-avoiding walks over the half-sequence space.

A walk starts from a uniformly random pivot and repeatedly moves to the
lowest-energy neighbor not yet visited, tracked through a per-walk
open-addressed set of 64-bit keys (capacity at least twice the pivot
count).  The key of a half sequence is a mixed function of its packed bits;
for D <= 64 the mixing is bijective, so the set is exact there, and beyond
that a key collision can only make the walk skip an unvisited neighbor,
never revisit one.  Walks end after n steps, or earlier at a dead end when
every neighbor is marked visited.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import _kernels
from .codec import pack_half, unpack_half
from .core import EnergyRecord, as_spins, half_dim, merit_factor

__all__ = [
    "WalkConfig",
    "WalkResult",
    "WalkTrace",
    "MAX_EXHAUSTIVE_D",
    "key",
    "half_to_words",
    "words_to_half",
    "run_walk",
    "run_walk_traced",
    "exhaustive_optimum",
]

MAX_EXHAUSTIVE_D = 28

_MASK64 = (1 << 64) - 1


@dataclass(frozen=True)
class WalkConfig:
    """One walk: odd length L, step budget n, and the walk's random seed."""

    L: int
    n: int
    seed: int

    def __post_init__(self):
        if self.L < 3 or self.L % 2 == 0:
            raise ValueError(f"walk length L must be odd and >= 3, got {self.L}")
        if self.n < 1:
            raise ValueError("walk step count n must be >= 1")
        if not 0 <= self.seed <= _MASK64:
            raise ValueError("seed must fit in 64 bits")

    @property
    def D(self) -> int:
        return half_dim(self.L)


@dataclass(frozen=True)
class WalkResult:
    best_E: int
    best_half: np.ndarray
    steps_taken: int
    evals: int  # (D - 1) per step taken
    dead_end: bool


@dataclass(frozen=True)
class WalkTrace:
    """Recorded walk history for verification.

    pivots[t] is the half sequence after t moves (row 0 is the first
    pivot); deltas[t] is the raw neighbor-delta vector evaluated at
    pivots[t].  deltas has one row per move, plus a trailing row when the
    walk died, showing the neighborhood in which no unvisited move existed.
    """

    pivots: np.ndarray
    deltas: np.ndarray


def half_to_words(half) -> np.ndarray:
    """Packed bits of a half sequence as little-endian uint64 words."""
    value = pack_half(half)
    nw = (len(half) + 63) // 64
    return np.array([(value >> (64 * i)) & _MASK64 for i in range(nw)], dtype=np.uint64)


def words_to_half(words, d: int) -> np.ndarray:
    value = 0
    for i, w in enumerate(words):
        value |= int(w) << (64 * i)
    return unpack_half(value, d)


def key(half) -> int:
    """Deterministic 64-bit key of a half sequence (bijective for D <= 64)."""
    return int(_kernels.key_of_words(half_to_words(as_spins(half))))


def _walk(config: WalkConfig, record: bool):
    d = config.D
    nw = (d + 63) // 64
    best_words = np.zeros(nw, dtype=np.uint64)
    if record:
        trace_words = np.zeros((config.n + 1, nw), dtype=np.uint64)
        trace_deltas = np.zeros((config.n, d), dtype=np.int64)
    else:
        trace_words = np.zeros((1, 1), dtype=np.uint64)
        trace_deltas = np.zeros((1, 1), dtype=np.int64)
    best_e, steps, dead = _kernels.saw_walk(
        config.L,
        config.n,
        np.uint64(config.seed),
        best_words,
        trace_words,
        trace_deltas,
        record,
    )
    result = WalkResult(
        best_E=int(best_e),
        best_half=words_to_half(best_words, d),
        steps_taken=int(steps),
        evals=int(steps) * (d - 1),
        dead_end=bool(dead),
    )
    return result, trace_words, trace_deltas


def run_walk(config: WalkConfig) -> WalkResult:
    """Run one self-avoiding walk; deterministic in (L, n, seed)."""
    result, _, _ = _walk(config, record=False)
    return result


def run_walk_traced(config: WalkConfig) -> tuple[WalkResult, WalkTrace]:
    """Like run_walk, but also returns the full pivot and delta history."""
    result, trace_words, trace_deltas = _walk(config, record=True)
    d = config.D
    pivot_rows = result.steps_taken + 1
    delta_rows = result.steps_taken + (1 if result.dead_end else 0)
    pivots = np.empty((pivot_rows, d), dtype=np.int64)
    for t in range(pivot_rows):
        pivots[t] = words_to_half(trace_words[t], d)
    return result, WalkTrace(pivots=pivots, deltas=trace_deltas[:delta_rows].copy())


def exhaustive_optimum(length: int) -> tuple[EnergyRecord, np.ndarray]:
    """Minimum energy and one argmin over the whole half-sequence space.

    Enumerates all 2^D halves, so D = (L+1)/2 is capped at
    MAX_EXHAUSTIVE_D.
    """
    d = half_dim(length)
    if length < 3:
        raise ValueError("need L >= 3")
    if d > MAX_EXHAUSTIVE_D:
        raise ValueError(
            f"L={length} has D={d} free components; exhaustive scan is "
            f"capped at D={MAX_EXHAUSTIVE_D}"
        )
    best_e, best_bits = _kernels.exhaustive_scan(length)
    bits = int(best_bits)
    half = np.array([-1 if (bits >> h) & 1 else 1 for h in range(d)], dtype=np.int64)
    return EnergyRecord(L=length, E=int(best_e), F=merit_factor(length, int(best_e))), half
