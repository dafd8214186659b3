"""Deterministic data generators shared by the test suite and tools.

The long-pair generator mutates a random 10,000-base query into a
reference with a bounded edit rate (substitutions, insertions,
deletions).  Everything derives from explicit seeds so the reference
scores frozen in tests/data/ can be regenerated bit-for-bit.
"""

from __future__ import annotations

import random

LONG_PAIR_COUNT = 20
LONG_PAIR_LENGTH = 10_000
LONG_PAIR_SEEDS = [9000 + k for k in range(LONG_PAIR_COUNT)]

TILING_PARAMS = {"match": 2, "mismatch": -3, "gap_open": -4, "gap_extend": -2}


def random_dna(rng: random.Random, n: int) -> list:
    return [rng.randrange(4) for _ in range(n)]


def mutate(rng: random.Random, seq, sub_rate, ins_rate, del_rate) -> list:
    """Apply point edits; total edit rate is sub+ins+del."""
    out = []
    for base in seq:
        roll = rng.random()
        if roll < del_rate:
            continue
        if roll < del_rate + ins_rate:
            out.append(rng.randrange(4))
            out.append(base)
            continue
        if roll < del_rate + ins_rate + sub_rate:
            out.append((base + 1 + rng.randrange(3)) % 4)
        else:
            out.append(base)
    if not out:
        out.append(rng.randrange(4))
    return out


def long_pair(seed: int, length: int = LONG_PAIR_LENGTH):
    """One simulated long pair with a <=5% edit rate."""
    rng = random.Random(seed)
    query = random_dna(rng, length)
    reference = mutate(rng, query, sub_rate=0.03, ins_rate=0.01, del_rate=0.01)
    return query, reference


def long_pairs():
    return [long_pair(seed) for seed in LONG_PAIR_SEEDS]
