#!/usr/bin/env python3
"""One-time computation of full-matrix global-affine scores for the long
tiling pairs.  Results are frozen into tests/data/tiling_expected.json so
the test suite never has to run 10k x 10k matrices itself.

Needs numpy + numba (development-only dependencies).
"""

import json
import os
import sys
import time

import numpy as np
from numba import njit

sys.path.insert(0, os.path.join(os.path.dirname(__file__), "..", "tests"))
import datagen  # noqa: E402

NEG = -(10**12)


@njit(cache=True)
def gotoh_score(query, reference, match, mismatch, gap_open, gap_extend):
    q_len = query.shape[0]
    r_len = reference.shape[0]
    h_prev = np.empty(r_len + 1, np.int64)
    i_prev = np.empty(r_len + 1, np.int64)
    h_cur = np.empty(r_len + 1, np.int64)
    i_cur = np.empty(r_len + 1, np.int64)
    h_prev[0] = 0
    i_prev[0] = NEG
    for j in range(1, r_len + 1):
        h_prev[j] = gap_open + j * gap_extend
        i_prev[j] = NEG
    for i in range(1, q_len + 1):
        h_cur[0] = gap_open + i * gap_extend
        i_cur[0] = NEG
        d_left = NEG
        qi = query[i - 1]
        for j in range(1, r_len + 1):
            opened = h_prev[j] + gap_open
            extended = i_prev[j]
            ival = (opened if opened >= extended else extended) + gap_extend
            opened = h_cur[j - 1] + gap_open
            dval = (opened if opened >= d_left else d_left) + gap_extend
            sub = match if qi == reference[j - 1] else mismatch
            best = h_prev[j - 1] + sub
            if ival > best:
                best = ival
            if dval > best:
                best = dval
            h_cur[j] = best
            i_cur[j] = ival
            d_left = dval
        h_prev, h_cur = h_cur, h_prev
        i_prev, i_cur = i_cur, i_prev
    return h_prev[r_len]


def main():
    p = datagen.TILING_PARAMS
    rows = []
    for seed in datagen.LONG_PAIR_SEEDS:
        query, reference = datagen.long_pair(seed)
        t0 = time.perf_counter()
        score = int(
            gotoh_score(
                np.asarray(query, np.int8),
                np.asarray(reference, np.int8),
                p["match"],
                p["mismatch"],
                p["gap_open"],
                p["gap_extend"],
            )
        )
        dt = time.perf_counter() - t0
        rows.append(
            {
                "seed": seed,
                "query_length": len(query),
                "reference_length": len(reference),
                "oracle_score": score,
            }
        )
        print(f"seed {seed}: Q={len(query)} R={len(reference)} score={score} ({dt:.1f}s)")

    out = {
        "params": p,
        "tile_size": 256,
        "overlap": 32,
        "pairs": rows,
    }
    path = os.path.join(os.path.dirname(__file__), "..", "tests", "data", "tiling_expected.json")
    with open(path, "w") as fh:
        json.dump(out, fh, indent=1)
    print("wrote", os.path.normpath(path))


if __name__ == "__main__":
    main()
