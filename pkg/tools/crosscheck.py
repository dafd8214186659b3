#!/usr/bin/env python3
"""Development harness: randomized engine/oracle/enumeration agreement sweep.

Not part of the package or test suite; used while developing to flush out
recurrence and scheduling bugs quickly.
"""

import math
import random
import sys

sys.path.insert(0, "src")

from dphls import EngineConfig, ScoringParams, create
from dphls.core.alphabet import SymbolKind
from dphls.core.contract import ScoreKind, Strategy
from dphls.core.scoring import DistanceMetric
from dphls.engine import align_recorded
from dphls.hostcli.verify import close
from dphls.oracle import enumerate_paths, oracle_align


def random_params(rng, kernel_id):
    match = rng.randint(1, 6)
    mismatch = -rng.randint(1, 6)
    gap = -rng.randint(1, 5)
    open_ = -rng.randint(2, 8)
    ext = -rng.randint(1, 4)
    open2 = open_ - rng.randint(1, 6)
    ext2 = max(ext + rng.randint(1, 3), -1)
    if kernel_id in ("1", "3", "6", "7", "11"):
        return ScoringParams(match=match, mismatch=mismatch, linear_gap=gap)
    if kernel_id in ("2", "4", "12"):
        return ScoringParams(match=match, mismatch=mismatch, gap_open=open_, gap_extend=ext)
    if kernel_id in ("5", "13"):
        return ScoringParams(
            match=match, mismatch=mismatch,
            gap_open=open_, gap_extend=ext, gap_open2=open2, gap_extend2=ext2,
        )
    if kernel_id == "8":
        m = tuple(
            tuple(rng.randint(-4, 4) for _ in range(5)) for _ in range(5)
        )
        return ScoringParams(substitution_matrix=m, gap_open=float(open_), gap_extend=float(ext))
    if kernel_id == "9":
        metric = rng.choice([DistanceMetric.MANHATTAN, DistanceMetric.EUCLIDEAN])
        return ScoringParams(distance_metric=metric)
    if kernel_id == "10":
        em = tuple(tuple(-rng.random() * 4 for _ in range(5)) for _ in range(5))
        return ScoringParams(log_mu=-rng.random() * 3 - 0.5, log_lambda=-rng.random() * 2 - 0.2, emission=em)
    if kernel_id == "14":
        return ScoringParams(distance_metric=DistanceMetric.ABS_DIFF)
    if kernel_id == "15":
        m = tuple(tuple(rng.randint(-4, 6) for _ in range(20)) for _ in range(20))
        return ScoringParams(substitution_matrix=m, linear_gap=gap)
    raise KeyError(kernel_id)


def random_sequence(rng, kind, n):
    if kind is SymbolKind.NUCLEOTIDE:
        return [rng.randrange(4) for _ in range(n)]
    if kind is SymbolKind.AMINO_ACID:
        return [rng.randrange(20) for _ in range(n)]
    if kind is SymbolKind.PROFILE_COLUMN:
        cols = []
        for _ in range(n):
            raw = [rng.random() for _ in range(5)]
            s = sum(raw)
            cols.append(tuple(v / s for v in raw))
        return cols
    if kind is SymbolKind.COMPLEX_SAMPLE:
        return [complex(rng.uniform(-4, 4), rng.uniform(-4, 4)) for _ in range(n)]
    if kind is SymbolKind.INT_SAMPLE:
        return [rng.randint(-30, 30) for _ in range(n)]
    raise KeyError(kind)


def make_spec(rng, kernel_id, q_len, r_len):
    params = random_params(rng, kernel_id)
    if kernel_id in ("11", "12", "13"):
        lo = abs(q_len - r_len)
        band = rng.randint(max(1, lo), max(q_len, r_len, lo + 1))
        return create(kernel_id, params, band_width=band)
    return create(kernel_id, params)


def cells_equal(spec, a, b):
    if a is None and b is None:
        return True
    if (a is None) != (b is None):
        return False
    return all(close(x, y, spec.score_kind) for x, y in zip(a, b))


def main():
    rng = random.Random(20240809)
    config = EngineConfig(max_reference_length=80, max_query_length=80, n_pe=5)
    bad = 0
    for kernel_id in [str(k) for k in range(1, 16)]:
        for trial in range(60):
            q_len = rng.randint(1, 20)
            r_len = rng.randint(1, 20)
            spec = make_spec(rng, kernel_id, q_len, r_len)
            query = random_sequence(rng, spec.symbol_kind, q_len)
            reference = random_sequence(rng, spec.symbol_kind, r_len)
            res, cells = align_recorded(spec, config, query, reference)
            ores, matrix = oracle_align(spec, query, reference)
            ok = close(res.score, ores.score, spec.score_kind)
            ok = ok and res.end_coord == ores.end_coord
            ok = ok and res.start_coord == ores.start_coord
            ok = ok and res.moves == ores.moves
            for i in range(q_len):
                for j in range(r_len):
                    if not cells_equal(spec, cells[i][j], matrix.cells[i][j]):
                        ok = False
                        print(f"  cell mismatch k{kernel_id} t{trial} ({i},{j}): {cells[i][j]} vs {matrix.cells[i][j]}")
                        break
                else:
                    continue
                break
            if not ok:
                bad += 1
                print(f"FAIL engine-vs-oracle k{kernel_id} trial {trial} Q={q_len} R={r_len}: "
                      f"score {res.score} vs {ores.score}, end {res.end_coord} vs {ores.end_coord}, "
                      f"start {res.start_coord} vs {ores.start_coord}")
                if res.moves != ores.moves:
                    print("   engine moves:", [m.name for m in res.moves])
                    print("   oracle moves:", [m.name for m in ores.moves])
                continue
            if q_len + r_len <= 12:
                escore = enumerate_paths(spec, query, reference)
                if not close(ores.score, escore, spec.score_kind):
                    bad += 1
                    print(f"FAIL enum k{kernel_id} trial {trial} Q={q_len} R={r_len}: oracle {ores.score} vs enum {escore}  params={spec.params} band={spec.banding}")
                    print("   q:", query)
                    print("   r:", reference)
        print(f"kernel {kernel_id}: done")
    print("total failures:", bad)


if __name__ == "__main__":
    main()
