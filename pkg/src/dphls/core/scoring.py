"""Score representations, saturating arithmetic and scoring parameters.

Two score kinds are supported: saturating signed 32-bit integers (DNA,
protein and profile kernels) and IEEE doubles (time-warping and pair-HMM
kernels, which need log-space range).  Forbidden cells (outside a band,
or gap layers that cannot be entered yet) hold a sentinel chosen with
enough headroom that any bounded chain of penalty additions cannot wrap.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

INT32_MIN = -(2**31)
INT32_MAX = 2**31 - 1

# Quarter of the integer range: adding single gap penalties to a sentinel
# keeps at least 2**16 of headroom above the true minimum before the
# saturating add would ever clamp.
NEG_SENTINEL_I32 = INT32_MIN // 4
POS_SENTINEL_I32 = INT32_MAX // 4

NEG_SENTINEL_F64 = -math.inf
POS_SENTINEL_F64 = math.inf


class ScoreKind(Enum):
    INT32_SAT = "int32"
    FLOAT64 = "float64"


class DistanceMetric(Enum):
    MANHATTAN = "manhattan"
    EUCLIDEAN = "euclidean"
    ABS_DIFF = "absdiff"


def sat_add(x: int, y: int) -> int:
    """Saturating 32-bit add: clamps instead of wrapping."""
    s = x + y
    if s > INT32_MAX:
        return INT32_MAX
    if s < INT32_MIN:
        return INT32_MIN
    return s


def neg_sentinel(kind: ScoreKind):
    return NEG_SENTINEL_I32 if kind is ScoreKind.INT32_SAT else NEG_SENTINEL_F64


def pos_sentinel(kind: ScoreKind):
    return POS_SENTINEL_I32 if kind is ScoreKind.INT32_SAT else POS_SENTINEL_F64


@dataclass(frozen=True)
class ScoringParams:
    """Named scoring values; each kernel reads only the fields it declares.

    ``substitution_matrix`` and ``emission`` are tuples of row tuples so the
    whole object stays immutable and safe to share across workers.
    """

    match: int | float | None = None
    mismatch: int | float | None = None
    linear_gap: int | float | None = None
    gap_open: int | float | None = None
    gap_extend: int | float | None = None
    gap_open2: int | float | None = None
    gap_extend2: int | float | None = None
    log_mu: float | None = None
    log_lambda: float | None = None
    substitution_matrix: tuple | None = None
    emission: tuple | None = None
    distance_metric: DistanceMetric | None = None

    def has(self, name: str) -> bool:
        return getattr(self, name) is not None


def freeze_matrix(rows) -> tuple:
    """Convert a nested sequence into a tuple-of-tuples matrix."""
    return tuple(tuple(row) for row in rows)
