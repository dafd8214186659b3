"""Start-region semantics shared by the engine and the reference oracle.

The traceback start cell (= alignment end) is the objective-best cell of
the policy's region.  Cell score is the objective-best layer value, which
for the shipped multi-layer kernels is the primary layer whenever it
dominates, and the best of M/I/D for the pair HMM.  Ties break toward the
smallest reference index, then the smallest query index.

Two policies also admit boundary end points that the interior scan cannot
see: a semi-global alignment may consume the whole query against zero
reference symbols (the bottom entry of the virtual left column), and an
overlap alignment may be empty (the virtual origin's score).  Minimizing
kernels get the same candidates; a forbidden sentinel there never wins.
"""

from __future__ import annotations

from .contract import KernelSpec, Objective, StartRegion, Strategy


def primary_score(cells: tuple, maximize: bool):
    return max(cells) if maximize else min(cells)


def better_candidate(score, coord, best_score, best_coord, maximize: bool) -> bool:
    """True if (score, coord) should replace the current best."""
    if best_score is None:
        return True
    if maximize:
        if score > best_score:
            return True
    elif score < best_score:
        return True
    if score != best_score:
        return False
    return (coord[1], coord[0]) < (best_coord[1], best_coord[0])


def region_contains(region: StartRegion, i: int, j: int, q_len: int, r_len: int) -> bool:
    if region is StartRegion.EVERYWHERE:
        return True
    if region is StartRegion.CORNER:
        return i == q_len - 1 and j == r_len - 1
    if region is StartRegion.LAST_ROW:
        return i == q_len - 1
    return i == q_len - 1 or j == r_len - 1


def boundary_candidates(spec: KernelSpec, init_col, origin, q_len):
    """(score, coord, cells) end points on the virtual boundary, if any."""
    maximize = spec.policy.objective is Objective.MAXIMIZE
    out = []
    if spec.policy.strategy is Strategy.OVERLAP:
        out.append((primary_score(origin, maximize), (-1, -1), origin))
    elif spec.policy.start_region is StartRegion.LAST_ROW:
        cells = init_col[q_len - 1]
        out.append((primary_score(cells, maximize), (q_len - 1, -1), cells))
    return out
