"""Seed derivation and per-stream random substreams."""

import hashlib

import numpy as np

# Key space for Paternoster epoch phases, disjoint from stream ids
PHASE_KEY_BASE = 1 << 32


def derive_run_seed(seed: int, point: int, replication: int) -> int:
    """Hash (seed, point, replication) into a 64-bit run seed.

    Adding points or replications never changes the seed of an existing run.
    """
    digest = hashlib.sha256(f"{seed}:{point}:{replication}".encode("ascii")).digest()
    return int.from_bytes(digest[:8], "big")


def stream_rng(run_seed: int, key: int) -> np.random.Generator:
    """Independent generator for one stream (or port phase) of a run."""
    return np.random.default_rng([run_seed, key])


def phase_rng(run_seed: int, switch_index: int) -> np.random.Generator:
    return stream_rng(run_seed, PHASE_KEY_BASE + switch_index)
