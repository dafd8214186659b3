"""Time-warping kernels: accumulate sample distances, minimize."""

from __future__ import annotations

from ..core.alphabet import SymbolKind
from ..core.contract import (
    GapModel,
    KernelSpec,
    Objective,
    StartRegion,
    Strategy,
    TracebackPolicy,
)
from ..core.scoring import POS_SENTINEL_I32, ScoreKind
from .common import (
    STATES_1,
    complex_distance,
    int_distance,
    linear_transition,
    make_dtw_pe,
    make_init_dtw,
    make_init_sdtw,
)

_PE_COMPLEX = make_dtw_pe(complex_distance)
_PE_INT = make_dtw_pe(int_distance, saturating=True)


def kernel_dtw(params=None) -> KernelSpec:
    """#9: warp two complex-valued signals end to end, minimizing distance.

    distance_metric selects Manhattan (default choice for (re, im) pairs)
    or Euclidean.
    """
    return KernelSpec(
        kernel_id="9",
        name="dtw",
        symbol_kind=SymbolKind.COMPLEX_SAMPLE,
        score_kind=ScoreKind.FLOAT64,
        n_layers=1,
        pointer_width=2,
        state_set=STATES_1,
        required_params=("distance_metric",),
        policy=TracebackPolicy(Strategy.GLOBAL, Objective.MINIMIZE),
        gap_model=GapModel.DTW,
        init=make_init_dtw(float("inf")),
        pe_func=_PE_COMPLEX,
        tb_transition=linear_transition,
        params=params,
    )


def kernel_sdtw(params=None) -> KernelSpec:
    """#14: query signal matched anywhere inside the reference signal.

    Integer samples, absolute-difference cost, free start along the
    reference, result is the bottom-row minimum.  Ships score-only to
    match its device baseline.
    """
    return KernelSpec(
        kernel_id="14",
        name="sdtw",
        symbol_kind=SymbolKind.INT_SAMPLE,
        score_kind=ScoreKind.INT32_SAT,
        n_layers=1,
        pointer_width=2,
        state_set=STATES_1,
        required_params=("distance_metric",),
        policy=TracebackPolicy(
            Strategy.NONE,
            Objective.MINIMIZE,
            start_region=StartRegion.LAST_ROW,
        ),
        gap_model=GapModel.DTW,
        init=make_init_sdtw(POS_SENTINEL_I32),
        pe_func=_PE_INT,
        tb_transition=linear_transition,
        params=params,
    )
