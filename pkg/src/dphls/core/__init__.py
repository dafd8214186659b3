"""Domain types and the kernel-specification contract."""

from .alphabet import (
    AMINO_ACIDS,
    GAP_INDEX,
    NUCLEOTIDES,
    SymbolKind,
    check_profile,
    encode_sequence,
    normalize_profile,
)
from .contract import (
    AlignmentResult,
    EngineConfig,
    GapModel,
    InconsistentLayers,
    InvalidParam,
    KernelSpec,
    MissingParam,
    Move,
    Objective,
    PointerWidthTooSmall,
    StartRegion,
    Strategy,
    TbState,
    TracebackPolicy,
    collect_violations,
    validate_spec,
)
from .scoring import (
    INT32_MAX,
    INT32_MIN,
    NEG_SENTINEL_I32,
    POS_SENTINEL_I32,
    DistanceMetric,
    ScoreKind,
    ScoringParams,
    freeze_matrix,
    neg_sentinel,
    pos_sentinel,
    sat_add,
)

__all__ = [
    "AMINO_ACIDS",
    "GAP_INDEX",
    "NUCLEOTIDES",
    "SymbolKind",
    "check_profile",
    "encode_sequence",
    "normalize_profile",
    "AlignmentResult",
    "EngineConfig",
    "GapModel",
    "InconsistentLayers",
    "InvalidParam",
    "KernelSpec",
    "MissingParam",
    "Move",
    "Objective",
    "PointerWidthTooSmall",
    "StartRegion",
    "Strategy",
    "TbState",
    "TracebackPolicy",
    "collect_violations",
    "validate_spec",
    "INT32_MAX",
    "INT32_MIN",
    "NEG_SENTINEL_I32",
    "POS_SENTINEL_I32",
    "DistanceMetric",
    "ScoreKind",
    "ScoringParams",
    "freeze_matrix",
    "neg_sentinel",
    "pos_sentinel",
    "sat_add",
]
