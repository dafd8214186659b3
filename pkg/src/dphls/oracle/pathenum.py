"""Exhaustive path enumeration: a second, independent oracle for tiny inputs.

Walks every monotone lattice path the kernel's model admits, pricing moves
incrementally with explicit gap-run accounting, and returns the optimal
score.  Positions extend the interior grid by -1 on each axis; a position
with a -1 component sits on the virtual boundary.  Which boundary moves
are priced, free or forbidden depends on the traceback strategy, mirroring
each kernel's initialization.
"""

from __future__ import annotations

from ..core.contract import GapModel, KernelSpec, Objective, StartRegion, Strategy
from ..errors import EnumerationSizeExceeded
from ..kernels.pathscore import _distance, substitution_score

ENUM_MAX_TOTAL = 16


def enumerate_paths(spec: KernelSpec, query, reference):
    """Optimal alignment score by brute-force path enumeration."""
    q_len = len(query)
    r_len = len(reference)
    if q_len + r_len > ENUM_MAX_TOTAL:
        raise EnumerationSizeExceeded(
            f"Q+R = {q_len + r_len} exceeds the enumeration bound {ENUM_MAX_TOTAL}"
        )

    params = spec.params
    model = spec.gap_model
    strategy = spec.policy.strategy
    region = spec.policy.start_region
    maximize = spec.policy.objective is Objective.MAXIMIZE
    band = spec.banding

    # Boundary gap moves: priced for costed boundaries, disallowed where
    # the initialization makes starts free (the start set covers those).
    if model in (GapModel.DTW,):
        ins_on_boundary = dels_on_boundary = False
    elif strategy in (Strategy.GLOBAL,) or model is GapModel.PAIR_HMM:
        ins_on_boundary = dels_on_boundary = True
    elif strategy is Strategy.SEMI_GLOBAL or region is StartRegion.LAST_ROW:
        ins_on_boundary = True
        dels_on_boundary = False
    else:
        ins_on_boundary = dels_on_boundary = False

    def in_band(i, j):
        return band is None or abs(i - j) <= band

    if strategy in (Strategy.GLOBAL,) or region is StartRegion.CORNER:
        starts = [(-1, -1)]

        def is_end(i, j):
            return i == q_len - 1 and j == r_len - 1

    elif region is StartRegion.LAST_ROW:
        starts = [(-1, js) for js in range(-1, r_len)]

        def is_end(i, j):
            return i == q_len - 1

    elif region is StartRegion.LAST_ROW_OR_COLUMN:
        starts = [(-1, js) for js in range(-1, r_len)]
        starts += [(is_, -1) for is_ in range(0, q_len)]

        def is_end(i, j):
            return i == q_len - 1 or j == r_len - 1

    else:  # EVERYWHERE
        starts = [
            (i0, j0) for i0 in range(-1, q_len) for j0 in range(-1, r_len)
        ]

        def is_end(i, j):
            return i >= 0 and j >= 0

    if model is GapModel.TWO_PIECE:
        o1, e1 = params.gap_open, params.gap_extend
        o2, e2 = params.gap_open2, params.gap_extend2

        def pending(run, run_len):
            if run is None:
                return 0
            return max(o1 + run_len * e1, o2 + run_len * e2)

    else:

        def pending(run, run_len):
            return 0

    best = [None]

    def consider(score):
        if best[0] is None:
            best[0] = score
        elif maximize:
            if score > best[0]:
                best[0] = score
        elif score < best[0]:
            best[0] = score

    def gap_delta(move_is_ins, i, j, run, run_len):
        """Cost and new run state for a gap move entering (i, j).

        Returns None when the model forbids the transition.
        """
        if model is GapModel.LINEAR:
            return params.linear_gap, ("I" if move_is_ins else "D"), 0
        if model is GapModel.AFFINE:
            tag = "I" if move_is_ins else "D"
            delta = params.gap_extend + (params.gap_open if run != tag else 0)
            return delta, tag, 0
        if model is GapModel.TWO_PIECE:
            tag = "I" if move_is_ins else "D"
            if run == tag:
                return 0, tag, run_len + 1
            return pending(run, run_len), tag, 1
        if model is GapModel.DTW:
            return _distance(spec, query[i], reference[j]), None, 0
        # pair HMM: no direct transition between the two gap states
        tag = "I" if move_is_ins else "D"
        if run is not None and run != tag:
            return None, None, 0
        delta = params.log_lambda if run == tag else params.log_mu
        if move_is_ins:
            if j >= 0:
                delta += params.emission[query[i]][4]
        elif i >= 0:
            delta += params.emission[4][reference[j]]
        return delta, tag, 0

    def walk(i, j, run, run_len, score):
        if is_end(i, j):
            consider(score + pending(run, run_len))
        ni, nj = i + 1, j + 1
        if ni < q_len and nj < r_len and in_band(ni, nj):
            if model is GapModel.DTW:
                delta = _distance(spec, query[ni], reference[nj])
            elif model is GapModel.PAIR_HMM:
                delta = params.emission[query[ni]][reference[nj]]
            else:
                delta = substitution_score(spec, query[ni], reference[nj]) + pending(
                    run, run_len
                )
            walk(ni, nj, None, 0, score + delta)
        if ni < q_len and in_band(ni, j) and (j >= 0 or ins_on_boundary):
            step = gap_delta(True, ni, j, run, run_len)
            if step[0] is not None:
                delta, new_run, new_len = step
                walk(ni, j, new_run, new_len, score + delta)
        if nj < r_len and in_band(i, nj) and (i >= 0 or dels_on_boundary):
            step = gap_delta(False, i, nj, run, run_len)
            if step[0] is not None:
                delta, new_run, new_len = step
                walk(i, nj, new_run, new_len, score + delta)

    for i0, j0 in starts:
        if not in_band(i0, j0):
            continue
        walk(i0, j0, None, 0, 0)

    if strategy in (Strategy.LOCAL, Strategy.OVERLAP) or (
        strategy is Strategy.NONE and region is StartRegion.EVERYWHERE
    ):
        consider(0)  # the empty alignment
    return best[0]
