"""Compiled kernels for the self-avoiding walk search.

Everything in this module is numba-jitted and operates on plain numpy
arrays: `s` is the full +1/-1 sequence of odd length L, `c` holds the
autocorrelation C_k at index k (natural order), and packed half sequences
live in little-endian uint64 words whose bit D-1-h stores half component h
(1 meaning -1), matching the hex codec's integer.

Flipping half component h of a skew-symmetric sequence negates the two full
positions h and L-1-h (one position when h is the center).  Such a mirror
pair flip keeps the sequence skew-symmetric, so all odd-lag correlations
stay identically zero; the delta and update loops therefore touch even lags
only.
"""

from __future__ import annotations

import numpy as np
from numba import njit, prange

U1 = np.uint64(1)
GOLDEN = np.uint64(0x9E3779B97F4A7C15)
KEY_SEED = np.uint64(0xA0761D6478BD642F)
_M1 = np.uint64(0xBF58476D1CE4E5B9)
_M2 = np.uint64(0x94D049BB133111EB)
_S30 = np.uint64(30)
_S27 = np.uint64(27)
_S31 = np.uint64(31)
_S63 = np.uint64(63)


@njit(cache=True, inline="always")
def mix64(z):
    # splitmix64 finalizer; a bijection on 64-bit words
    z = (z ^ (z >> _S30)) * _M1
    z = (z ^ (z >> _S27)) * _M2
    return z ^ (z >> _S31)


@njit(cache=True, inline="always")
def _next64(state):
    state = state + GOLDEN
    return state, mix64(state)


@njit(cache=True, inline="always")
def key_of_words(words):
    # Chained mixing; with a single word this is bijective, so the visited
    # set is exact for D <= 64 and collides only across words beyond that.
    h = KEY_SEED
    for i in range(words.shape[0]):
        h = mix64(h ^ words[i])
    return h


@njit(cache=True)
def keys_of_packed(words_matrix, out):
    for i in range(words_matrix.shape[0]):
        out[i] = key_of_words(words_matrix[i])


@njit(cache=True, inline="always")
def expand_in_place(s, d):
    sign = -1
    for i in range(1, d):
        s[d - 1 + i] = sign * s[d - 1 - i]
        sign = -sign


@njit(cache=True, inline="always")
def init_sidelobes(s, c):
    # Full O(L^2) evaluation; returns the energy.
    length = s.shape[0]
    e = np.int64(0)
    for k in range(length):
        acc = np.int64(0)
        for i in range(length - k):
            acc += s[i] * s[i + k]
        c[k] = acc
        if k > 0:
            e += acc * acc
    return e


@njit(cache=True)
def neighbor_delta(s, c, h):
    """Exact energy change from flipping half component h.

    Terms whose two endpoints are both flipped keep their sign, so the
    endpoint pair (p, q) is excluded from the sign-flip sums when the lag
    lines them up.
    """
    length = s.shape[0]
    p = h
    q = length - 1 - h
    sp = s[p]
    acc = np.int64(0)
    if p == q:
        for k in range(2, length, 2):
            d = np.int64(0)
            if p + k < length:
                d -= sp * s[p + k]
            if p - k >= 0:
                d -= s[p - k] * sp
            d += d
            acc += d * (2 * c[k] + d)
    else:
        sq = s[q]
        for k in range(2, length, 2):
            d = np.int64(0)
            pk = p + k
            if pk < length and pk != q:
                d -= sp * s[pk]
            if p - k >= 0:
                d -= s[p - k] * sp
            if q + k < length:
                d -= sq * s[q + k]
            qk = q - k
            if qk >= 0 and qk != p:
                d -= s[qk] * sq
            d += d
            acc += d * (2 * c[k] + d)
    return acc


@njit(cache=True)
def apply_neighbor(s, c, h):
    """Move to neighbor h in place: update even-lag sidelobes, flip the spins."""
    length = s.shape[0]
    p = h
    q = length - 1 - h
    sp = s[p]
    if p == q:
        for k in range(2, length, 2):
            d = np.int64(0)
            if p + k < length:
                d -= sp * s[p + k]
            if p - k >= 0:
                d -= s[p - k] * sp
            c[k] += 2 * d
        s[p] = -sp
    else:
        sq = s[q]
        for k in range(2, length, 2):
            d = np.int64(0)
            pk = p + k
            if pk < length and pk != q:
                d -= sp * s[pk]
            if p - k >= 0:
                d -= s[p - k] * sp
            if q + k < length:
                d -= sq * s[q + k]
            qk = q - k
            if qk >= 0 and qk != p:
                d -= s[qk] * sq
            c[k] += 2 * d
        s[p] = -sp
        s[q] = -sq


@njit(cache=True)
def all_neighbor_deltas(s, c, out):
    d = (s.shape[0] + 1) // 2
    for h in range(d):
        out[h] = neighbor_delta(s, c, h)


@njit(cache=True, inline="always")
def _visited_contains(table, used, maski, key):
    idx = np.int64(key & np.uint64(maski))
    while used[idx] != 0:
        if table[idx] == key:
            return True
        idx = (idx + 1) & maski
    return False


@njit(cache=True, inline="always")
def _visited_add(table, used, maski, key):
    idx = np.int64(key & np.uint64(maski))
    while used[idx] != 0:
        if table[idx] == key:
            return
        idx = (idx + 1) & maski
    table[idx] = key
    used[idx] = 1


@njit(cache=True)
def saw_walk(length, n, seed, best_words, trace_words, trace_deltas, record):
    """One contiguous self-avoiding walk of at most n steps.

    The first pivot is drawn uniformly from the half-sequence space using a
    splitmix64 stream seeded by `seed`.  Each step evaluates all D neighbor
    deltas, moves to the lowest-delta neighbor whose key is not in the
    visited set (ties to the lowest index), and tracks the best energy seen.
    Returns (best_energy, steps_taken, dead_end); `best_words` receives the
    packed best half.  When `record` is set, packed pivots go to
    trace_words[t] and raw delta vectors to trace_deltas[t].
    """
    d = (length + 1) // 2
    nw = best_words.shape[0]

    s = np.empty(length, np.int64)
    state = seed
    for h in range(d):
        state, z = _next64(state)
        s[h] = 1 - 2 * np.int64(z >> _S63)
    expand_in_place(s, d)

    c = np.zeros(length, np.int64)
    e = init_sidelobes(s, c)

    words = np.zeros(nw, np.uint64)
    for h in range(d):
        if s[h] < 0:
            b = d - 1 - h
            words[b >> 6] |= U1 << np.uint64(b & 63)

    cap = 1
    while cap < 2 * (n + 1):
        cap <<= 1
    maski = np.int64(cap - 1)
    table = np.zeros(cap, np.uint64)
    used = np.zeros(cap, np.uint8)
    _visited_add(table, used, maski, key_of_words(words))

    best_e = e
    for w in range(nw):
        best_words[w] = words[w]
    if record:
        for w in range(nw):
            trace_words[0, w] = words[w]

    deltas = np.empty(d, np.int64)
    steps = 0
    dead = False
    for step in range(n):
        for h in range(d):
            deltas[h] = neighbor_delta(s, c, h)
        if record:
            for h in range(d):
                trace_deltas[step, h] = deltas[h]
        best_h = -1
        best_d = np.int64(0)
        best_key = np.uint64(0)
        for h in range(d):
            if best_h >= 0 and deltas[h] >= best_d:
                continue
            b = d - 1 - h
            bit = U1 << np.uint64(b & 63)
            words[b >> 6] ^= bit
            nk = key_of_words(words)
            words[b >> 6] ^= bit
            if not _visited_contains(table, used, maski, nk):
                best_h = h
                best_d = deltas[h]
                best_key = nk
        if best_h < 0:
            dead = True
            break
        apply_neighbor(s, c, best_h)
        e += best_d
        b = d - 1 - best_h
        words[b >> 6] ^= U1 << np.uint64(b & 63)
        _visited_add(table, used, maski, best_key)
        steps += 1
        if record:
            for w in range(nw):
                trace_words[steps, w] = words[w]
        if e < best_e:
            best_e = e
            for w in range(nw):
                best_words[w] = words[w]
    return best_e, steps, dead


@njit(cache=True, parallel=True)
def saw_batch(length, n, seeds, best_e_out, best_words_out, steps_out, dead_out):
    """Independent walks, one per seed, run in parallel; outputs per walk."""
    for i in prange(seeds.shape[0]):
        tw = np.zeros((1, 1), np.uint64)
        td = np.zeros((1, 1), np.int64)
        e, st, dd = saw_walk(length, n, seeds[i], best_words_out[i], tw, td, False)
        best_e_out[i] = e
        steps_out[i] = st
        dead_out[i] = 1 if dd else 0


@njit(cache=True)
def exhaustive_scan(length):
    """Minimum energy over all 2^D half sequences, by Gray-code enumeration.

    Walks the space flipping one component per candidate and reusing the
    incremental update.  Returns (best_energy, best_bits) where bit h of
    best_bits is 1 iff half component h is -1 (an internal bit order,
    unrelated to the codec's packing).
    """
    d = (length + 1) // 2
    s = np.empty(length, np.int64)
    for h in range(d):
        s[h] = 1
    expand_in_place(s, d)
    c = np.zeros(length, np.int64)
    e = init_sidelobes(s, c)

    best_e = e
    best_bits = np.int64(0)
    bits = np.int64(0)
    total = np.int64(1) << d
    for g in range(1, total):
        gg = g
        h = 0
        while gg & 1 == 0:
            gg >>= 1
            h += 1
        e += neighbor_delta(s, c, h)
        apply_neighbor(s, c, h)
        bits ^= np.int64(1) << h
        if e < best_e:
            best_e = e
            best_bits = bits
    return best_e, best_bits
