"""dphls: declarative 2-D dynamic-programming alignment kernels.

Kernels are declared once (alphabet, scoring layers, recurrence,
initialization, traceback FSM, optional banding) and executed either by
the wavefront engine that mirrors a linear systolic array, or by naive
reference oracles used for validation.  A cycle model estimates hardware
latency and throughput for a given parallelism configuration, and the
``dphls`` CLI drives batch alignment, verification, long-sequence tiling
and performance reports.
"""

from . import engine, hostcli, kernels, oracle, perf
from .core import (
    AlignmentResult,
    DistanceMetric,
    EngineConfig,
    KernelSpec,
    Move,
    Objective,
    ScoreKind,
    ScoringParams,
    Strategy,
    SymbolKind,
    TbState,
    TracebackPolicy,
    encode_sequence,
    validate_spec,
)
from .engine import align, align_batch
from .kernels import catalog, create
from .oracle import enumerate_paths, oracle_align

__version__ = "0.1.0"

__all__ = [
    "AlignmentResult",
    "DistanceMetric",
    "EngineConfig",
    "KernelSpec",
    "Move",
    "Objective",
    "ScoreKind",
    "ScoringParams",
    "Strategy",
    "SymbolKind",
    "TbState",
    "TracebackPolicy",
    "encode_sequence",
    "validate_spec",
    "align",
    "align_batch",
    "catalog",
    "create",
    "enumerate_paths",
    "oracle_align",
    "engine",
    "hostcli",
    "kernels",
    "oracle",
    "perf",
    "__version__",
]
