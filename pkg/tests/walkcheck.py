"""Shared walk-trace verification used by the saw tests and the acceptance suite."""

import numpy as np

from skewsaw.codec import pack_half
from skewsaw.neighborhood import compute_deltas, flip, naive_oracle
from skewsaw.saw import WalkConfig, run_walk_traced


def verify_walk(length: int, seed: int, walk_factor: int = 8):
    """Replay one traced walk against ground truth.

    Checks, step by step: pivots never repeat, recorded deltas equal the
    incremental-evaluation API's deltas, the successor is the lowest-index
    argmin over unvisited neighbors, energies evolve by the chosen delta,
    and the reported best is the minimum over the pivot history.
    """
    d = (length + 1) // 2
    config = WalkConfig(L=length, n=walk_factor * d, seed=seed)
    result, trace = run_walk_traced(config)
    pivots = trace.pivots
    assert pivots.shape[0] == result.steps_taken + 1
    assert result.evals == result.steps_taken * (d - 1)

    packed = [pack_half(p) for p in pivots]
    assert len(set(packed)) == len(packed), "pivot revisited"

    energies = []
    seen = {packed[0]}
    for t in range(result.steps_taken):
        state = naive_oracle(pivots[t])
        energies.append(state.E)
        deltas = trace.deltas[t]
        np.testing.assert_array_equal(deltas, compute_deltas(state))
        candidates = [
            (int(deltas[h]), h)
            for h in range(d)
            if pack_half(flip(pivots[t], h)) not in seen
        ]
        assert candidates, "walk moved with no unvisited neighbor"
        best_delta, best_h = min(candidates)
        assert np.array_equal(pivots[t + 1], flip(pivots[t], best_h))
        seen.add(packed[t + 1])
    energies.append(naive_oracle(pivots[-1]).E)

    assert result.best_E == min(energies)
    assert naive_oracle(result.best_half).E == result.best_E

    if result.dead_end:
        # one extra delta row for the neighborhood where the walk died
        assert trace.deltas.shape[0] == result.steps_taken + 1
        final = pivots[-1]
        for h in range(d):
            assert pack_half(flip(final, h)) in seen
    else:
        assert result.steps_taken == config.n
        assert trace.deltas.shape[0] == result.steps_taken
    return result
