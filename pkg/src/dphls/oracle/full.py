"""Naive row-major reference aligner with fully materialized matrices.

Runs the same kernel contract (init, pe_func, tb_transition) as the
engine, but in plain double loops with no chunking; banding is applied by
masking.  Used to validate the engine's wavefront execution cell by cell.
"""

from __future__ import annotations

from dataclasses import dataclass

from ..core.contract import (
    AlignmentResult,
    KernelSpec,
    Move,
    Objective,
    Strategy,
    TbState,
)
from ..core.regions import (
    better_candidate,
    boundary_candidates,
    primary_score,
    region_contains,
)
from ..errors import (
    EmptySequence,
    NonTerminating,
    OracleSizeExceeded,
    TracebackOutOfBounds,
)
from ..kernels.common import apply_band_to_boundary

ORACLE_MAX_LEN = 512


@dataclass
class FullMatrix:
    """Dense (Q x R) cell and pointer matrices; None marks out-of-band."""

    cells: list
    pointers: list
    n_layers: int

    def layer(self, idx: int) -> list:
        return [
            [None if c is None else c[idx] for c in row] for row in self.cells
        ]


def oracle_align(spec: KernelSpec, query, reference):
    """Align with materialized matrices; returns (AlignmentResult, FullMatrix)."""
    q_len = len(query)
    r_len = len(reference)
    if q_len == 0 or r_len == 0:
        raise EmptySequence("oracle needs non-empty sequences")
    if q_len > ORACLE_MAX_LEN or r_len > ORACLE_MAX_LEN:
        raise OracleSizeExceeded(
            f"{q_len}x{r_len} exceeds the oracle bound {ORACLE_MAX_LEN}"
        )

    params = spec.params
    band = spec.banding
    forbidden = spec.forbidden_cell()
    maximize = spec.policy.objective is Objective.MAXIMIZE
    pe_func = spec.pe_func

    init_row, init_col, origin = spec.init(params, r_len, q_len)
    init_row, init_col = apply_band_to_boundary(init_row, init_col, band, forbidden)

    cells = [[None] * r_len for _ in range(q_len)]
    ptrs = [[None] * r_len for _ in range(q_len)]

    for i in range(q_len):
        qi = query[i]
        row_above = cells[i - 1] if i > 0 else None
        row_here = cells[i]
        ptr_row = ptrs[i]
        for j in range(r_len):
            if band is not None and abs(i - j) > band:
                continue
            if row_above is not None:
                up = row_above[j]
                diag = row_above[j - 1] if j > 0 else init_col[i - 1]
            else:
                up = init_row[j]
                diag = init_row[j - 1] if j > 0 else origin
            left = row_here[j - 1] if j > 0 else init_col[i]
            if up is None:
                up = forbidden
            if diag is None:
                diag = forbidden
            if left is None:
                left = forbidden
            cell, ptr = pe_func(up, diag, left, qi, reference[j], params, (i, j))
            row_here[j] = cell
            ptr_row[j] = ptr

    # Pick the alignment end: best of the policy region plus any
    # boundary end points the policy admits.
    region = spec.policy.start_region
    best_score = None
    best_coord = None
    best_cells = None
    for i in range(q_len):
        for j in range(r_len):
            cell = cells[i][j]
            if cell is None or not region_contains(region, i, j, q_len, r_len):
                continue
            s = primary_score(cell, maximize)
            if better_candidate(s, (i, j), best_score, best_coord, maximize):
                best_score, best_coord, best_cells = s, (i, j), cell
    for s, coord, cell in boundary_candidates(spec, init_col, origin, q_len):
        if better_candidate(s, coord, best_score, best_coord, maximize):
            best_score, best_coord, best_cells = s, coord, cell

    matrix = FullMatrix(cells, ptrs, spec.n_layers)
    if spec.policy.strategy is Strategy.NONE:
        result = AlignmentResult(
            score=best_score,
            start_coord=best_coord,
            end_coord=best_coord,
            moves=(),
            layers_at_end=best_cells,
        )
        return result, matrix

    moves, start = _walk(spec, ptrs, best_coord, q_len, r_len)
    result = AlignmentResult(
        score=best_score,
        start_coord=start,
        end_coord=best_coord,
        moves=tuple(moves),
        layers_at_end=best_cells,
    )
    return result, matrix


def _walk(spec, ptrs, start_cell, q_len, r_len):
    """Follow stored pointers from the end cell back to the policy's stop."""
    strategy = spec.policy.strategy
    transition = spec.tb_transition
    i, j = start_cell
    state = TbState.MM
    moves = []
    limit = q_len + r_len + 1
    while True:
        if len(moves) > limit:
            raise NonTerminating(len(moves))
        if strategy is Strategy.GLOBAL:
            if i == -1 and j == -1:
                break
            if i == -1:
                moves.append(Move.AL_DEL)
                j -= 1
                continue
            if j == -1:
                moves.append(Move.AL_INS)
                i -= 1
                continue
        elif strategy is Strategy.SEMI_GLOBAL:
            if i == -1:
                break
            if j == -1:
                moves.append(Move.AL_INS)
                i -= 1
                continue
        else:  # LOCAL, OVERLAP
            if i == -1 or j == -1:
                break
        ptr = ptrs[i][j]
        if ptr is None:
            raise TracebackOutOfBounds((i, j))
        state, move = transition(state, ptr)
        if move is Move.AL_END:
            break
        moves.append(move)
        if move is Move.AL_MMI:
            i -= 1
            j -= 1
        elif move is Move.AL_INS:
            i -= 1
        elif move is Move.AL_DEL:
            j -= 1
    moves.reverse()
    moves.append(Move.AL_END)
    return moves, (i, j)
