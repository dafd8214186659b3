"""Re-accumulate an alignment score from a move list.

This is deliberately independent of the per-cell recurrences: it walks the
moves with explicit gap-run accounting per gap model, so it can vouch for
paths the DP produced (and price stitched paths in the tiling driver).

Positions use the result convention: ``start`` is exclusive, each AL_MMI
consumes one query and one reference symbol, AL_INS one query symbol,
AL_DEL one reference symbol.
"""

from __future__ import annotations

import math

from ..core.alphabet import GAP_INDEX, SymbolKind
from ..core.contract import GapModel, KernelSpec, Move
from .common import complex_distance, int_distance, sub_profile


def substitution_score(spec: KernelSpec, q_sym, r_sym):
    """Score one aligned symbol pair under the kernel's parameters."""
    params = spec.params
    if spec.symbol_kind is SymbolKind.PROFILE_COLUMN:
        return sub_profile(q_sym, r_sym, params)
    if params.substitution_matrix is not None:
        return params.substitution_matrix[q_sym][r_sym]
    return params.match if q_sym == r_sym else params.mismatch


def _distance(spec: KernelSpec, q_sym, r_sym):
    metric = spec.params.distance_metric
    if spec.symbol_kind is SymbolKind.COMPLEX_SAMPLE:
        return complex_distance(q_sym, r_sym, metric)
    return int_distance(q_sym, r_sym, metric)


def move_spans(moves) -> tuple[int, int]:
    """(query symbols, reference symbols) a move sequence consumes."""
    dq = sum(1 for m in moves if m in (Move.AL_MMI, Move.AL_INS))
    dr = sum(1 for m in moves if m in (Move.AL_MMI, Move.AL_DEL))
    return dq, dr


def score_path(spec: KernelSpec, query, reference, start, moves):
    """Score of the path described by ``moves`` starting after ``start``.

    Returns -inf for move sequences the pair-HMM topology forbids
    (a gap run directly following the opposite gap run).
    """
    gm = spec.gap_model
    if gm is GapModel.DTW:
        return _score_dtw(spec, query, reference, start, moves)
    if gm is GapModel.PAIR_HMM:
        return _score_pair_hmm(spec, query, reference, start, moves)

    params = spec.params
    i, j = start
    score = 0
    if gm is GapModel.LINEAR:
        gap = params.linear_gap
        for move in moves:
            if move is Move.AL_MMI:
                i += 1
                j += 1
                score += substitution_score(spec, query[i], reference[j])
            elif move is Move.AL_INS:
                i += 1
                score += gap
            elif move is Move.AL_DEL:
                j += 1
                score += gap
        return score

    if gm is GapModel.AFFINE:
        open_ = params.gap_open
        extend = params.gap_extend
        run = None
        for move in moves:
            if move is Move.AL_MMI:
                i += 1
                j += 1
                score += substitution_score(spec, query[i], reference[j])
                run = None
            elif move is Move.AL_INS:
                i += 1
                if run != "I":
                    score += open_
                    run = "I"
                score += extend
            elif move is Move.AL_DEL:
                j += 1
                if run != "D":
                    score += open_
                    run = "D"
                score += extend
        return score

    # Two-piece: a run of length k costs the better of the two lines,
    # so runs are priced when they close.
    o1 = params.gap_open
    e1 = params.gap_extend
    o2 = params.gap_open2
    e2 = params.gap_extend2

    def run_cost(k):
        return max(o1 + k * e1, o2 + k * e2)

    run = None
    run_len = 0
    for move in moves:
        if move is Move.AL_MMI:
            if run is not None:
                score += run_cost(run_len)
                run = None
            i += 1
            j += 1
            score += substitution_score(spec, query[i], reference[j])
        elif move is Move.AL_INS:
            if run != "I":
                if run is not None:
                    score += run_cost(run_len)
                run = "I"
                run_len = 0
            run_len += 1
            i += 1
        elif move is Move.AL_DEL:
            if run != "D":
                if run is not None:
                    score += run_cost(run_len)
                run = "D"
                run_len = 0
            run_len += 1
            j += 1
    if run is not None:
        score += run_cost(run_len)
    return score


def _score_dtw(spec, query, reference, start, moves):
    i, j = start
    score = 0
    for move in moves:
        if move is Move.AL_END:
            break
        if move is Move.AL_MMI:
            i += 1
            j += 1
        elif move is Move.AL_INS:
            i += 1
        else:
            j += 1
        score += _distance(spec, query[i], reference[j])
    return score


def _score_pair_hmm(spec, query, reference, start, moves):
    params = spec.params
    em = params.emission
    mu = params.log_mu
    lam = params.log_lambda
    i, j = start
    score = 0.0
    run = None
    for move in moves:
        if move is Move.AL_MMI:
            i += 1
            j += 1
            score += em[query[i]][reference[j]]
            run = None
        elif move is Move.AL_INS:
            if run == "D":
                return -math.inf  # no D -> I transition in the model
            score += lam if run == "I" else mu
            run = "I"
            i += 1
            if j >= 0:  # boundary gap runs carry no emission terms
                score += em[query[i]][GAP_INDEX]
        elif move is Move.AL_DEL:
            if run == "I":
                return -math.inf
            score += lam if run == "D" else mu
            run = "D"
            j += 1
            if i >= 0:
                score += em[GAP_INDEX][reference[j]]
    return score
