"""Deterministic random-stream plumbing for reproducible multi-run experiments.

Every run owns two independent PCG64 streams spawned from its seed: one for
the evolutionary operators and one for the per-iteration scenario scheduler.
Keeping the scheduler draw out of the operator stream is what makes a
single-scenario schedule replay the exact operator randomness of the
corresponding fixed-scenario variant.
"""

from __future__ import annotations

import numpy as np

RngStream = np.random.Generator


def make_rng(seed: int | np.random.SeedSequence | np.random.Generator) -> RngStream:
    """Return a deterministic generator; generators pass through untouched."""
    if isinstance(seed, np.random.Generator):
        return seed
    return np.random.default_rng(seed)


def split_streams(seed: int, n: int = 2) -> tuple[RngStream, ...]:
    """Spawn `n` independent child streams from one seed."""
    children = np.random.SeedSequence(seed).spawn(n)
    return tuple(np.random.default_rng(child) for child in children)


def derive_run_seed(base_seed: int, variant_id: int, run_index: int) -> int:
    """Mix (base seed, variant, run) into one 64-bit run seed.

    The spawn-key mixing guarantees that adding a variant or extending the run
    count never perturbs the streams of existing (variant, run) cells.
    """
    ss = np.random.SeedSequence(base_seed, spawn_key=(variant_id, run_index))
    return int(ss.generate_state(1, np.uint64)[0])
