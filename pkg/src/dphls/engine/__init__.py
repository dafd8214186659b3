"""Wavefront execution engine: chunked fill, banked traceback, batching."""

from .align import BatchOutcome, align, align_batch, align_recorded
from .fill import FillResult, effective_band, fill_matrix
from .schedule import ChunkSchedule
from .tbmem import TbMemory
from .traceback import traceback

__all__ = [
    "BatchOutcome",
    "align",
    "align_batch",
    "align_recorded",
    "FillResult",
    "effective_band",
    "fill_matrix",
    "ChunkSchedule",
    "TbMemory",
    "traceback",
]
