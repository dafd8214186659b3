"""Independent reference implementations used to validate the engine."""

from .closed import dtw_cost, dtw_matrix, nw_matrix, nw_score, sw_best, sw_matrix
from .full import ORACLE_MAX_LEN, FullMatrix, oracle_align
from .pathenum import ENUM_MAX_TOTAL, enumerate_paths

__all__ = [
    "ORACLE_MAX_LEN",
    "FullMatrix",
    "oracle_align",
    "ENUM_MAX_TOTAL",
    "enumerate_paths",
    "nw_matrix",
    "nw_score",
    "sw_matrix",
    "sw_best",
    "dtw_matrix",
    "dtw_cost",
]
