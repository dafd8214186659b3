"""Host-side drivers: input parsing, batch scheduling, tiling, verification."""

from .batchrun import (
    OUTPUT_HEADER,
    cigar_string,
    encode_records,
    parse_cigar,
    run_batch,
)
from .fastaio import format_fasta, parse_fasta, parse_fasta_text
from .matrixio import (
    format_matrix,
    parse_matrix,
    parse_matrix_text,
    parse_plain_matrix,
    parse_plain_matrix_text,
)
from .runconfig import RunConfig, parse_param_flag
from .signalio import format_signal, parse_signal, parse_signal_text
from .tiling import TilingPlan, run_tiled_alignment
from .verify import DiffReport, close, diff_alignment

__all__ = [
    "OUTPUT_HEADER",
    "cigar_string",
    "encode_records",
    "parse_cigar",
    "run_batch",
    "format_fasta",
    "parse_fasta",
    "parse_fasta_text",
    "format_matrix",
    "parse_matrix",
    "parse_matrix_text",
    "parse_plain_matrix",
    "parse_plain_matrix_text",
    "RunConfig",
    "parse_param_flag",
    "format_signal",
    "parse_signal",
    "parse_signal_text",
    "TilingPlan",
    "run_tiled_alignment",
    "DiffReport",
    "close",
    "diff_alignment",
]
