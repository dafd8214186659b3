"""Long alignments as a chain of overlapping square tiles.

Each tile aligns a tile_size x tile_size window globally; the trailing
overlap of every non-final tile's path is discarded (the margin shields
the stitch point from tile-edge artifacts) and the next tile starts where
the truncated path ended.  The stitched move list is a valid monotone
path over the full pair; its score is re-accumulated move by move.
"""

from __future__ import annotations

from dataclasses import dataclass, replace

from ..core.contract import AlignmentResult, EngineConfig, KernelSpec, Move, Strategy
from ..engine import align
from ..errors import InvalidConfig, TilingStalled
from ..kernels.pathscore import move_spans, score_path


@dataclass(frozen=True)
class TilingPlan:
    tile_size: int = 256
    overlap: int = 32

    def __post_init__(self):
        if not 0 < self.overlap < self.tile_size:
            raise InvalidConfig("need 0 < overlap < tile_size")


def _truncate(moves, overlap):
    """Drop trailing moves until either axis has shed ``overlap`` symbols."""
    dropped_q = dropped_r = 0
    cut = len(moves)
    while cut > 0 and dropped_q < overlap and dropped_r < overlap:
        move = moves[cut - 1]
        if move is Move.AL_MMI:
            dropped_q += 1
            dropped_r += 1
        elif move is Move.AL_INS:
            dropped_q += 1
        else:
            dropped_r += 1
        cut -= 1
    return moves[:cut]


def run_tiled_alignment(
    spec: KernelSpec,
    config: EngineConfig,
    query,
    reference,
    plan: TilingPlan | None = None,
) -> AlignmentResult:
    if plan is None:
        plan = TilingPlan()
    if spec.policy.strategy is not Strategy.GLOBAL:
        raise InvalidConfig("tiling drives global-strategy kernels only")
    if plan.tile_size > max(config.max_reference_length, config.max_query_length):
        raise InvalidConfig("tile_size exceeds the configured maximum lengths")

    t = plan.tile_size
    tile_config = replace(
        config, max_reference_length=t, max_query_length=t, band_width=None
    )
    q_len = len(query)
    r_len = len(reference)
    q0 = r0 = 0
    stitched = []
    layers_at_end = None
    while True:
        wq = min(t, q_len - q0)
        wr = min(t, r_len - r0)
        final = (q0 + wq == q_len) and (r0 + wr == r_len)
        tile = align(spec, tile_config, query[q0 : q0 + wq], reference[r0 : r0 + wr])
        moves = list(tile.moves[:-1])  # drop the tile's AL_END
        if not final:
            moves = _truncate(moves, plan.overlap)
        dq, dr = move_spans(moves)
        if dq == 0 and dr == 0:
            raise TilingStalled(f"tile at ({q0}, {r0}) consumed no symbols")
        stitched.extend(moves)
        q0 += dq
        r0 += dr
        if final:
            layers_at_end = tile.layers_at_end
            break

    score = score_path(spec, query, reference, (-1, -1), stitched)
    return AlignmentResult(
        score=score,
        start_coord=(-1, -1),
        end_coord=(q_len - 1, r_len - 1),
        moves=tuple(stitched) + (Move.AL_END,),
        layers_at_end=layers_at_end,
    )
