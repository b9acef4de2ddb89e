"""Batched parallel walks with deterministic seeding and stopping rules.

A run is a sequence of batches; each batch launches `walkers` independent
walks whose seeds are derived from (master_seed, batch, walker), so results
do not depend on scheduling.  After every batch the walk bests are merged
into the global best (lower energy wins, ties to the earlier batch/walker)
and the stopping conditions are checked in fixed order: target energy
reached, evaluation budget exhausted, wall-clock budget exhausted.

Evaluation counts follow the walk accounting of D-1 neighbor evaluations
per step, summed over the walks of each batch; a full batch contributes
walkers * n * (D-1) unless a walk dead-ends early.
"""

from __future__ import annotations

import csv
import io
import json
import os
import time
from dataclasses import dataclass, field, replace

import numpy as np

from . import _kernels
from .codec import encode
from .core import half_dim, merit_factor
from .saw import words_to_half

__all__ = [
    "RunConfig",
    "RunRecord",
    "SampleSet",
    "derive_walk_seed",
    "solve",
    "target_campaign",
    "throughput_report",
]

_MASK64 = (1 << 64) - 1
_BATCH_STREAM = 0x9E3779B97F4A7C15
_REP_STREAM = 0xD1B54A32D192ED03


def _mix64(z: int) -> int:
    z &= _MASK64
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
    return z ^ (z >> 31)


def derive_walk_seed(master_seed: int, batch: int, walker: int) -> int:
    """Per-walk seed, a strong mix of (master_seed, batch, walker)."""
    h = _mix64(master_seed ^ _BATCH_STREAM)
    h = _mix64(h ^ batch)
    return _mix64(h ^ walker)


def derive_repetition_seed(master_seed: int, repetition: int) -> int:
    h = _mix64(master_seed ^ _REP_STREAM)
    return _mix64(h ^ repetition)


@dataclass(frozen=True)
class RunConfig:
    """Solver configuration; at least one stopping condition is required.

    walkers defaults to the machine's logical core count.  The walk length
    is walk_factor * D steps.
    """

    L: int
    walkers: int | None = None
    walk_factor: int = 8
    master_seed: int = 1
    max_nses: int | None = None
    max_runtime: float | None = None
    target_E: int | None = None

    def __post_init__(self):
        if self.L < 3 or self.L % 2 == 0:
            raise ValueError(f"length must be odd and >= 3, got {self.L}")
        if self.walkers is None:
            object.__setattr__(self, "walkers", os.cpu_count() or 1)
        if self.walkers < 1:
            raise ValueError("walkers must be >= 1")
        if self.walk_factor < 1:
            raise ValueError("walk_factor must be >= 1")
        if not 0 <= self.master_seed <= _MASK64:
            raise ValueError("master_seed must fit in 64 bits")
        if self.max_nses is None and self.max_runtime is None and self.target_E is None:
            raise ValueError("need at least one stopping condition")
        if self.max_nses is not None and self.max_nses < 1:
            raise ValueError("max_nses must be >= 1")
        if self.max_runtime is not None and self.max_runtime <= 0:
            raise ValueError("max_runtime must be > 0")

    @property
    def D(self) -> int:
        return half_dim(self.L)

    @property
    def n(self) -> int:
        return self.walk_factor * self.D


@dataclass(frozen=True)
class RunRecord:
    """Completed run: configuration echo plus the best sequence found."""

    config: RunConfig
    best_E: int
    best_F: float
    best_half: np.ndarray
    best_hex: str
    total_nses: int
    batches: int
    wall_time_s: float
    stop_reason: str

    def to_json_dict(self) -> dict:
        cfg = self.config
        return {
            "L": cfg.L,
            "walkers": cfg.walkers,
            "walk_factor": cfg.walk_factor,
            "master_seed": cfg.master_seed,
            "max_nses": cfg.max_nses,
            "max_runtime_s": cfg.max_runtime,
            "target_E": cfg.target_E,
            "best_E": self.best_E,
            "best_F": self.best_F,
            "best_hex": self.best_hex,
            "total_nses": self.total_nses,
            "batches": self.batches,
            "wall_time_s": self.wall_time_s,
            "stop_reason": self.stop_reason,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), indent=2)


@dataclass
class SampleSet:
    """Evaluations-to-target samples from repeated independent runs.

    nses[i] is the total evaluation count of repetition i; censored[i]
    marks repetitions that exhausted their budget before reaching the
    target (their nses value is the budget consumed, not a hit time).
    """

    L: int
    nses: list[int] = field(default_factory=list)
    censored: list[bool] = field(default_factory=list)

    @property
    def repetitions(self) -> int:
        return len(self.nses)

    @property
    def uncensored(self) -> list[int]:
        return [x for x, c in zip(self.nses, self.censored) if not c]

    @property
    def censored_count(self) -> int:
        return sum(self.censored)

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["L", "repetition", "nses", "censored"])
        for i, (x, c) in enumerate(zip(self.nses, self.censored)):
            writer.writerow([self.L, i, x, int(c)])
        return buf.getvalue()

    @classmethod
    def from_csv(cls, text: str) -> "SampleSet":
        """Parse the CSV emitted by to_csv; errors carry the 1-based line number."""
        rows = list(csv.reader(io.StringIO(text)))
        if not rows or [f.strip() for f in rows[0]] != ["L", "repetition", "nses", "censored"]:
            raise ValueError("line 1: expected header L,repetition,nses,censored")
        length = None
        nses: list[int] = []
        censored: list[bool] = []
        for lineno, row in enumerate(rows[1:], start=2):
            if not row:
                continue
            if len(row) != 4:
                raise ValueError(f"line {lineno}: expected 4 fields, got {len(row)}")
            try:
                l_val = int(row[0])
                n_val = int(row[2])
                c_val = int(row[3])
            except ValueError:
                raise ValueError(f"line {lineno}: non-numeric field in {row!r}") from None
            if length is None:
                length = l_val
            elif l_val != length:
                raise ValueError(f"line {lineno}: mixed lengths {length} and {l_val}")
            if n_val <= 0:
                raise ValueError(f"line {lineno}: nses must be positive")
            if c_val not in (0, 1):
                raise ValueError(f"line {lineno}: censored must be 0 or 1")
            nses.append(n_val)
            censored.append(bool(c_val))
        if length is None:
            raise ValueError("line 2: no data rows")
        return cls(L=length, nses=nses, censored=censored)


class _BatchLoop:
    """Shared batch driver: derived seeds in, merged best and counters out."""

    def __init__(self, config: RunConfig):
        self.config = config
        d = config.D
        self.d = d
        self.per_step = d - 1
        self.nw = (d + 63) // 64
        w = config.walkers
        self.best_e_out = np.empty(w, dtype=np.int64)
        self.best_words_out = np.empty((w, self.nw), dtype=np.uint64)
        self.steps_out = np.empty(w, dtype=np.int64)
        self.dead_out = np.empty(w, dtype=np.uint8)
        self.best_e: int | None = None
        self.best_words: np.ndarray | None = None
        self.total_nses = 0
        self.batches = 0

    def run_batch(self):
        cfg = self.config
        seeds = np.array(
            [
                derive_walk_seed(cfg.master_seed, self.batches, w)
                for w in range(cfg.walkers)
            ],
            dtype=np.uint64,
        )
        _kernels.saw_batch(
            cfg.L,
            cfg.n,
            seeds,
            self.best_e_out,
            self.best_words_out,
            self.steps_out,
            self.dead_out,
        )
        self.batches += 1
        self.total_nses += int(self.steps_out.sum()) * self.per_step
        for w in range(cfg.walkers):
            e = int(self.best_e_out[w])
            if self.best_e is None or e < self.best_e:
                self.best_e = e
                self.best_words = self.best_words_out[w].copy()


def solve(config: RunConfig) -> RunRecord:
    """Run batches until a stopping condition fires; deterministic up to wall time.

    Stop reasons, checked in order after each batch: "target_reached",
    "nses_exhausted", "runtime_exhausted".
    """
    loop = _BatchLoop(config)
    t0 = time.monotonic()
    stop = None
    while stop is None:
        loop.run_batch()
        if config.target_E is not None and loop.best_e <= config.target_E:
            stop = "target_reached"
        elif config.max_nses is not None and loop.total_nses >= config.max_nses:
            stop = "nses_exhausted"
        elif (
            config.max_runtime is not None
            and time.monotonic() - t0 >= config.max_runtime
        ):
            stop = "runtime_exhausted"
    wall = time.monotonic() - t0
    best_half = words_to_half(loop.best_words, config.D)
    return RunRecord(
        config=config,
        best_E=loop.best_e,
        best_F=merit_factor(config.L, loop.best_e),
        best_half=best_half,
        best_hex=encode(best_half),
        total_nses=loop.total_nses,
        batches=loop.batches,
        wall_time_s=wall,
        stop_reason=stop,
    )


def target_campaign(config: RunConfig, repetitions: int) -> SampleSet:
    """Repeated independent solves recording evaluations to first target hit.

    Each repetition runs with its own derived master seed.  Repetitions
    that exhaust their budget before the target are recorded as censored,
    so the configuration must bound each repetition with max_nses or
    max_runtime.
    """
    if config.target_E is None:
        raise ValueError("target_campaign needs config.target_E")
    if repetitions < 1:
        raise ValueError("repetitions must be >= 1")
    if config.max_nses is None and config.max_runtime is None:
        raise ValueError("target_campaign needs a per-repetition budget")
    samples = SampleSet(L=config.L)
    for rep in range(repetitions):
        rep_config = replace(
            config,
            master_seed=derive_repetition_seed(config.master_seed, rep),
        )
        record = solve(rep_config)
        samples.nses.append(record.total_nses)
        samples.censored.append(record.stop_reason != "target_reached")
    return samples


def throughput_report(config: RunConfig, duration: float) -> dict:
    """Measured evaluations per second for the configured walker count.

    Informational only; runs whole batches until `duration` seconds have
    elapsed (at least one batch).
    """
    if duration <= 0:
        raise ValueError("duration must be > 0")
    loop = _BatchLoop(config)
    t0 = time.monotonic()
    while True:
        loop.run_batch()
        elapsed = time.monotonic() - t0
        if elapsed >= duration:
            break
    return {
        "L": config.L,
        "walkers": config.walkers,
        "n": config.n,
        "total_nses": loop.total_nses,
        "seconds": elapsed,
        "nses_per_second": loop.total_nses / elapsed,
    }
