import numpy as np
import pytest

from skewsaw.core import (
    EnergyRecord,
    as_spins,
    autocorrelation,
    autocorrelations,
    energy,
    expand_skew,
    half_dim,
    merit_factor,
    sidelobe_array,
)


def test_expand_skew_examples():
    assert expand_skew([1, 1, 1]).tolist() == [1, 1, 1, -1, 1]
    assert expand_skew([1]).tolist() == [1]
    assert expand_skew([1, 1]).tolist() == [1, 1, -1]


def test_expand_skew_mirror_identity():
    rng = np.random.default_rng(1)
    for _ in range(50):
        d = int(rng.integers(1, 40))
        half = rng.choice([-1, 1], size=d)
        full = expand_skew(half)
        assert full.size == 2 * d - 1
        assert np.array_equal(full[:d], half)
        for i in range(1, d):
            assert full[d - 1 + i] == (-1) ** i * full[d - 1 - i]


def test_autocorrelation_examples():
    assert autocorrelation([1, 1, 1], 1) == 2
    assert autocorrelation([1, 1, 1, -1, 1], 2) == 1
    rng = np.random.default_rng(2)
    for _ in range(10):
        length = int(rng.integers(1, 30))
        s = rng.choice([-1, 1], size=length)
        assert autocorrelation(s, 0) == length


def test_autocorrelation_lag_range():
    with pytest.raises(ValueError):
        autocorrelation([1, 1, 1], 3)
    with pytest.raises(ValueError):
        autocorrelation([1, 1, 1], -1)


def test_energy_examples():
    rec = energy([1, 1, 1])
    assert (rec.L, rec.E, rec.F) == (3, 5, 0.9)
    rec = energy(expand_skew([1, 1, 1]))
    assert (rec.E, rec.F) == (2, 6.25)


def test_energy_degenerate_single_spin():
    rec = energy([1])
    assert rec == EnergyRecord(L=1, E=0, F=None)
    assert merit_factor(1, 0) is None


def test_energy_merit_factor_identity():
    rng = np.random.default_rng(3)
    for _ in range(50):
        length = int(rng.integers(2, 64))
        s = rng.choice([-1, 1], size=length)
        rec = energy(s)
        assert rec.E >= 1  # C_(L-1) = s_1 * s_L is never 0
        assert abs(rec.F * 2 * rec.E - length * length) <= 1e-9 * length * length


def test_sidelobe_array_layout():
    # entry L-k-1 holds C_k
    assert sidelobe_array([1, 1, 1]).tolist() == [1, 2, 3]
    assert sidelobe_array([1, 1, 1, -1, 1]).tolist() == [1, 0, 1, 0, 5]
    assert autocorrelations([1, 1, 1, -1, 1]).tolist() == [5, 0, 1, 0, 1]


def test_sidelobe_energy_consistency():
    rng = np.random.default_rng(4)
    for _ in range(50):
        length = int(rng.integers(1, 80))
        s = rng.choice([-1, 1], size=length)
        hat = sidelobe_array(s)
        assert hat[-1] == length  # C_0 slot
        assert energy(s).E == int(np.sum(hat[:-1] ** 2))


def test_correlation_bounds_and_parity():
    rng = np.random.default_rng(5)
    for _ in range(50):
        length = int(rng.integers(2, 64))
        s = rng.choice([-1, 1], size=length)
        c = autocorrelations(s)
        for k in range(length):
            assert abs(c[k]) <= length - k
            assert (c[k] - (length - k)) % 2 == 0


def test_energy_invariances():
    rng = np.random.default_rng(6)
    for _ in range(30):
        length = int(rng.integers(2, 64))
        s = rng.choice([-1, 1], size=length)
        e = energy(s).E
        assert energy(-s).E == e
        assert energy(s[::-1]).E == e


def test_skew_sequences_have_zero_odd_lags():
    rng = np.random.default_rng(7)
    for _ in range(60):
        d = int(rng.integers(1, 64))
        full = expand_skew(rng.choice([-1, 1], size=d))
        c = autocorrelations(full)
        assert not np.any(c[1::2])


def test_input_validation():
    with pytest.raises(ValueError):
        as_spins([1, 0, 1])
    with pytest.raises(ValueError):
        as_spins([])
    with pytest.raises(ValueError):
        as_spins([[1, 1], [1, 1]])
    with pytest.raises(ValueError):
        half_dim(4)
    assert half_dim(171) == 86
