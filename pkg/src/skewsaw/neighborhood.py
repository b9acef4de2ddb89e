"""Incremental evaluation of all single-flip neighbors of a pivot.

An `EvalState` bundles a half sequence with its expansion, sidelobe array,
and energy.  `compute_deltas` yields the exact integer energy change of
every neighbor from the sidelobe array alone (no re-expansion, at most
linear work in L per neighbor), and `apply_flip` moves to a neighbor by
updating the sidelobes in place of a copy.  `naive_oracle` rebuilds the
same state by full O(L^2) recomputation and is the independent reference
the incremental path is tested against.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import _kernels
from .core import as_spins, energy, expand_skew, sidelobe_array

__all__ = ["EvalState", "flip", "naive_oracle", "compute_deltas", "apply_flip"]


@dataclass(frozen=True)
class EvalState:
    """A pivot with everything needed to evaluate its neighborhood.

    Invariants: full == expand_skew(half), sidelobes == sidelobe_array(full)
    (entry L-k-1 holds C_k), and E is the sum of squared sidelobes over
    k >= 1.
    """

    half: np.ndarray
    full: np.ndarray
    sidelobes: np.ndarray
    E: int

    @property
    def D(self) -> int:
        return self.half.size

    @property
    def L(self) -> int:
        return self.full.size


def naive_oracle(half) -> EvalState:
    """Build an EvalState by full expansion and O(L^2) evaluation."""
    h = as_spins(half)
    full = expand_skew(h)
    return EvalState(
        half=h,
        full=full,
        sidelobes=sidelobe_array(full),
        E=energy(full).E,
    )


def flip(half, j: int) -> np.ndarray:
    """Negate free component j (0-based) of a half sequence.

    In the expanded sequence this negates position j and, unless j is the
    center component D-1, also the mirror position L-1-j.
    """
    h = as_spins(half)
    if not 0 <= j < h.size:
        raise ValueError(f"flip index {j} out of range for D={h.size}")
    out = h.copy()
    out[j] = -out[j]
    return out


def compute_deltas(state: EvalState) -> np.ndarray:
    """Exact energy differences E(neighbor j) - E(pivot) for all D neighbors.

    Never mutates the state; entry j matches `flip(state.half, j)`.
    """
    c = np.ascontiguousarray(state.sidelobes[::-1])
    deltas = np.empty(state.D, dtype=np.int64)
    _kernels.all_neighbor_deltas(state.full, c, deltas)
    return deltas


def apply_flip(state: EvalState, j: int, deltas: np.ndarray) -> EvalState:
    """State of neighbor j, with sidelobes and energy updated incrementally.

    `deltas` must come from compute_deltas on the same state.
    """
    if not 0 <= j < state.D:
        raise ValueError(f"flip index {j} out of range for D={state.D}")
    full = state.full.copy()
    c = np.ascontiguousarray(state.sidelobes[::-1])
    _kernels.apply_neighbor(full, c, j)
    half = full[: state.D].copy()
    return EvalState(
        half=half,
        full=full,
        sidelobes=c[::-1].copy(),
        E=state.E + int(deltas[j]),
    )
