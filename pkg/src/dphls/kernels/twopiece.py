"""Five-layer kernels: two-piece affine gaps.

A gap of length k costs the better of open + k*extend and
open2 + k*extend2; with a steeper short-gap line and a flatter long-gap
line the second piece takes over past the crossover length.
"""

from __future__ import annotations

from ..core.alphabet import SymbolKind
from ..core.contract import GapModel, KernelSpec, Strategy, TracebackPolicy
from ..core.scoring import NEG_SENTINEL_I32, ScoreKind
from .common import (
    STATES_5,
    make_init_twopiece_global,
    make_twopiece_pe,
    sub_match_mismatch,
    twopiece_transition,
)

_TWO_PIECE_PARAMS = (
    "match",
    "mismatch",
    "gap_open",
    "gap_extend",
    "gap_open2",
    "gap_extend2",
)

_PE = make_twopiece_pe(sub_match_mismatch)


def _twopiece_spec(kernel_id, name, **kw):
    return KernelSpec(
        kernel_id=kernel_id,
        name=name,
        symbol_kind=SymbolKind.NUCLEOTIDE,
        score_kind=ScoreKind.INT32_SAT,
        n_layers=5,
        pointer_width=7,
        state_set=STATES_5,
        required_params=_TWO_PIECE_PARAMS,
        policy=TracebackPolicy(Strategy.GLOBAL),
        gap_model=GapModel.TWO_PIECE,
        init=make_init_twopiece_global(NEG_SENTINEL_I32),
        pe_func=_PE,
        tb_transition=twopiece_transition,
        **kw,
    )


def kernel_global_two_piece(params=None) -> KernelSpec:
    """#5: global alignment under a two-piece affine gap cost."""
    return _twopiece_spec("5", "global-two-piece", params=params)


def kernel_banded_global_two_piece(params=None, band_width: int = 16) -> KernelSpec:
    """#13: #5 restricted to a fixed band, traceback included."""
    return _twopiece_spec(
        "13", "banded-global-two-piece", params=params, banding=band_width
    )
