import numpy as np
import pytest

from skewsaw.runner import (
    RunConfig,
    SampleSet,
    derive_walk_seed,
    solve,
    target_campaign,
    throughput_report,
)
from skewsaw.saw import WalkConfig, exhaustive_optimum, run_walk


def test_config_validation():
    with pytest.raises(ValueError):
        RunConfig(L=8, max_nses=10)
    with pytest.raises(ValueError):
        RunConfig(L=21)  # no stopping condition
    with pytest.raises(ValueError):
        RunConfig(L=21, walkers=0, max_nses=10)
    with pytest.raises(ValueError):
        RunConfig(L=21, walk_factor=0, max_nses=10)
    with pytest.raises(ValueError):
        RunConfig(L=21, max_nses=0)
    config = RunConfig(L=21, max_nses=10)
    assert config.walkers >= 1  # defaulted to the machine's cores
    assert config.n == 8 * 11


def test_seed_derivation():
    seen = {
        derive_walk_seed(1, batch, walker)
        for batch in range(50)
        for walker in range(50)
    }
    assert len(seen) == 2500
    assert derive_walk_seed(1, 3, 4) == derive_walk_seed(1, 3, 4)
    assert derive_walk_seed(1, 3, 4) != derive_walk_seed(2, 3, 4)


def test_solve_reaches_exhaustive_target():
    optimum = exhaustive_optimum(21)[0].E
    config = RunConfig(L=21, walkers=4, master_seed=7, target_E=optimum, max_nses=10**6)
    record = solve(config)
    assert record.stop_reason == "target_reached"
    assert record.best_E == optimum


def test_single_batch_accounting():
    config = RunConfig(L=21, walkers=3, master_seed=5, max_nses=3 * 88 * 10)
    record = solve(config)
    assert record.batches == 1
    assert record.total_nses == 3 * 88 * 10
    assert record.stop_reason == "nses_exhausted"


def test_solve_deterministic():
    config = RunConfig(L=35, walkers=2, master_seed=11, max_nses=200_000)
    a = solve(config)
    b = solve(config)
    da, db = a.to_json_dict(), b.to_json_dict()
    da.pop("wall_time_s")
    db.pop("wall_time_s")
    assert da == db
    assert np.array_equal(a.best_half, b.best_half)


def test_merit_factor_identity():
    config = RunConfig(L=35, walkers=2, master_seed=11, max_nses=50_000)
    record = solve(config)
    assert abs(record.best_F * 2 * record.best_E - 35 * 35) <= 1e-9 * 35 * 35


def test_best_never_worsens_with_more_budget():
    base = 18 * 88 * 10
    results = [
        solve(RunConfig(L=21, walkers=2, master_seed=3, max_nses=budget)).best_E
        for budget in (base, 2 * base, 4 * base)
    ]
    assert results[0] >= results[1] >= results[2]


def test_parallel_merge_matches_single_walks():
    # the batch result must equal running each derived seed on its own
    config = RunConfig(L=27, walkers=4, master_seed=9, max_nses=4 * 112 * 13 * 3)
    record = solve(config)
    best = None
    for batch in range(record.batches):
        for walker in range(config.walkers):
            seed = derive_walk_seed(config.master_seed, batch, walker)
            res = run_walk(WalkConfig(L=27, n=config.n, seed=seed))
            if best is None or res.best_E < best:
                best = res.best_E
    assert best == record.best_E


def test_target_campaign_deterministic():
    optimum = exhaustive_optimum(15)[0].E
    config = RunConfig(
        L=15, walkers=2, master_seed=4, target_E=optimum, max_nses=100_000
    )
    a = target_campaign(config, 3)
    b = target_campaign(config, 3)
    assert a.nses == b.nses and a.censored == b.censored
    assert a.repetitions == 3
    assert all(x > 0 for x in a.nses)
    assert a.censored_count == 0


def test_target_campaign_unreachable_target_censors_all():
    optimum = exhaustive_optimum(15)[0].E
    config = RunConfig(
        L=15, walkers=2, master_seed=4, target_E=optimum - 1, max_nses=20_000
    )
    samples = target_campaign(config, 3)
    assert samples.censored == [True, True, True]
    assert samples.uncensored == []


def test_target_campaign_requires_target_and_budget():
    with pytest.raises(ValueError):
        target_campaign(RunConfig(L=15, walkers=1, max_nses=100), 2)
    with pytest.raises(ValueError):
        target_campaign(RunConfig(L=15, walkers=1, target_E=0), 2)
    with pytest.raises(ValueError):
        target_campaign(RunConfig(L=15, walkers=1, target_E=0, max_nses=100), 0)


def test_sample_set_csv_round_trip():
    samples = SampleSet(L=15, nses=[100, 250, 75], censored=[False, True, False])
    text = samples.to_csv()
    assert text.splitlines()[0] == "L,repetition,nses,censored"
    assert text.splitlines()[2] == "15,1,250,1"
    again = SampleSet.from_csv(text)
    assert again.L == 15
    assert again.nses == samples.nses
    assert again.censored == samples.censored
    assert again.uncensored == [100, 75]


def test_sample_set_csv_errors_carry_line_numbers():
    with pytest.raises(ValueError, match="line 1"):
        SampleSet.from_csv("bogus,header\n")
    with pytest.raises(ValueError, match="line 3"):
        SampleSet.from_csv("L,repetition,nses,censored\n15,0,10,0\n15,1,x,0\n")
    with pytest.raises(ValueError, match="line 2"):
        SampleSet.from_csv("L,repetition,nses,censored\n15,0,10,7\n")
    with pytest.raises(ValueError, match="line 2"):
        SampleSet.from_csv("L,repetition,nses,censored\n")


def test_throughput_report():
    config = RunConfig(L=21, walkers=2, master_seed=1, max_nses=1)
    with pytest.raises(ValueError):
        throughput_report(config, 0)
    report = throughput_report(config, 0.05)
    assert set(report) == {"L", "walkers", "n", "total_nses", "seconds", "nses_per_second"}
    assert report["L"] == 21 and report["walkers"] == 2 and report["n"] == 88
    assert report["total_nses"] > 0 and report["nses_per_second"] > 0
