"""Wavefront matrix fill: the software analog of the systolic scoring pass.

Rows are processed in chunks of n_pe lanes.  Within a chunk, wavefront w
computes cells (chunk_start + p, w - p) for every active lane p; lane p
reads its up/diagonal inputs from lane p-1's last two wavefronts and its
left input from its own previous wavefront.  Lane 0 reads the preserved
row buffer (the last row of the previous chunk) or, in chunk 0, the
kernel's init row.  The buffer is double-buffered: lane n_pe-1 writes the
next chunk's copy while lane 0 still reads the current one.

Every lane keeps a local best over the cells it computes that fall in the
policy's start region; a reduction over lanes (plus any boundary
candidates the policy admits) yields the traceback start cell.  Chunking
never changes results: cells see exactly the same neighbour values as a
row-major evaluation.
"""

from __future__ import annotations

from dataclasses import dataclass

from ..core.contract import EngineConfig, KernelSpec, Objective, StartRegion, Strategy
from ..core.regions import better_candidate, boundary_candidates, primary_score
from ..errors import EmptySequence, SequenceTooLong
from ..kernels.common import apply_band_to_boundary
from .schedule import ChunkSchedule
from .tbmem import TbMemory


@dataclass
class FillResult:
    schedule: ChunkSchedule
    tbmem: TbMemory | None
    best_score: int | float
    best_coord: tuple
    best_cells: tuple
    corner_cells: tuple | None
    cells: list | None  # dense matrix, only when record_cells was requested


def effective_band(spec: KernelSpec, config: EngineConfig):
    if spec.banding is not None:
        return spec.banding
    return config.band_width if spec.is_banded else None


def fill_matrix(
    spec: KernelSpec,
    config: EngineConfig,
    query,
    reference,
    record_cells: bool = False,
    instrument: bool = False,
) -> FillResult:
    q_len = len(query)
    r_len = len(reference)
    if q_len == 0:
        raise EmptySequence("query is empty")
    if r_len == 0:
        raise EmptySequence("reference is empty")
    if q_len > config.max_query_length:
        raise SequenceTooLong("query", q_len, config.max_query_length)
    if r_len > config.max_reference_length:
        raise SequenceTooLong("reference", r_len, config.max_reference_length)

    params = spec.params
    pe_func = spec.pe_func
    band = effective_band(spec, config)
    forbidden = spec.forbidden_cell()
    maximize = spec.policy.objective is Objective.MAXIMIZE
    region = spec.policy.start_region

    init_row, init_col, origin = spec.init(
        params, config.max_reference_length, config.max_query_length
    )
    init_row = init_row[:r_len]
    init_col = init_col[:q_len]
    init_row, init_col = apply_band_to_boundary(init_row, init_col, band, forbidden)

    schedule = ChunkSchedule(q_len, r_len, config.n_pe)
    need_tb = spec.policy.strategy is not Strategy.NONE
    tbmem = TbMemory(schedule, instrument=instrument) if need_tb else None
    bases = tbmem.bases if tbmem is not None else None

    n_pe = config.n_pe
    cellmat = [[None] * r_len for _ in range(q_len)] if record_cells else None

    # Per-lane local best over the policy region (score, coord, cells).
    best_scores = [None] * n_pe
    best_coords = [None] * n_pe
    best_cells = [None] * n_pe

    region_everywhere = region is StartRegion.EVERYWHERE
    region_last_row = region is StartRegion.LAST_ROW
    region_last_rc = region is StartRegion.LAST_ROW_OR_COLUMN
    last_i = q_len - 1
    last_j = r_len - 1

    corner_cells = None
    preserved = None  # last row of the previous chunk, one entry per column

    for chunk, row_start, row_stop in schedule.chunks():
        rows = row_stop - row_start
        up_boundary = init_row if chunk == 0 else preserved
        next_preserved = [None] * r_len if row_stop < q_len else None
        base = bases[chunk] if bases is not None else 0
        prev1 = [None] * rows  # lane outputs at wavefront w-1
        prev2 = [None] * rows  # lane outputs at wavefront w-2
        write_here = tbmem is not None

        for w in range(r_len + rows - 1):
            cur = [None] * rows
            writes = [] if instrument and write_here else None
            p_lo = w - r_len + 1
            if p_lo < 0:
                p_lo = 0
            p_hi = w if w < rows - 1 else rows - 1
            for p in range(p_lo, p_hi + 1):
                j = w - p
                i = row_start + p
                if band is not None and (i - j > band or j - i > band):
                    continue
                if p == 0:
                    up = up_boundary[j]
                    if j > 0:
                        diag = up_boundary[j - 1]
                    elif i > 0:
                        diag = init_col[i - 1]
                    else:
                        diag = origin
                else:
                    up = prev1[p - 1]
                    if j > 0:
                        diag = prev2[p - 1]
                    else:
                        diag = init_col[i - 1]
                left = prev1[p] if j > 0 else init_col[i]
                if up is None:
                    up = forbidden
                if diag is None:
                    diag = forbidden
                if left is None:
                    left = forbidden

                cells, ptr = pe_func(
                    up, diag, left, query[i], reference[j], params, (i, j)
                )
                cur[p] = cells
                if write_here:
                    tbmem.write(p, base + w, ptr)
                    if writes is not None:
                        writes.append((p, base + w))
                if cellmat is not None:
                    cellmat[i][j] = cells
                if next_preserved is not None and i == row_stop - 1:
                    next_preserved[j] = cells

                if (
                    region_everywhere
                    or (i == last_i and (region_last_row or region_last_rc or j == last_j))
                    or (region_last_rc and j == last_j)
                ):
                    s = primary_score(cells, maximize)
                    if better_candidate(
                        s, (i, j), best_scores[p], best_coords[p], maximize
                    ):
                        best_scores[p] = s
                        best_coords[p] = (i, j)
                        best_cells[p] = cells
                if i == last_i and j == last_j:
                    corner_cells = cells
            if writes is not None:
                tbmem.log_wavefront(chunk, w, writes)
            prev2 = prev1
            prev1 = cur
        preserved = next_preserved

    # Reduce the per-lane bests, then fold in boundary end points.
    red_score = None
    red_coord = None
    red_cells = None
    for p in range(n_pe):
        if best_scores[p] is None:
            continue
        if better_candidate(
            best_scores[p], best_coords[p], red_score, red_coord, maximize
        ):
            red_score = best_scores[p]
            red_coord = best_coords[p]
            red_cells = best_cells[p]
    for s, coord, cells in boundary_candidates(spec, init_col, origin, q_len):
        if better_candidate(s, coord, red_score, red_coord, maximize):
            red_score, red_coord, red_cells = s, coord, cells

    return FillResult(
        schedule=schedule,
        tbmem=tbmem,
        best_score=red_score,
        best_coord=red_coord,
        best_cells=red_cells,
        corner_cells=corner_cells,
        cells=cellmat,
    )
