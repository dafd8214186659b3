"""Three-layer kernels: affine gap penalty (gap of length k costs open + k*extend)."""

from __future__ import annotations

from ..core.alphabet import SymbolKind
from ..core.contract import (
    GapModel,
    KernelSpec,
    StartRegion,
    Strategy,
    TracebackPolicy,
)
from ..core.scoring import NEG_SENTINEL_I32, ScoreKind
from .common import (
    STATES_3,
    affine_transition,
    make_affine_pe,
    make_init_affine_global,
    make_init_affine_zero,
    sub_match_mismatch,
)

_AFFINE_PARAMS = ("match", "mismatch", "gap_open", "gap_extend")

_PE_GLOBAL = make_affine_pe(sub_match_mismatch, clamp_zero=False)
_PE_LOCAL = make_affine_pe(sub_match_mismatch, clamp_zero=True)


def _affine_spec(kernel_id, name, policy, pe_func, init, **kw):
    return KernelSpec(
        kernel_id=kernel_id,
        name=name,
        symbol_kind=SymbolKind.NUCLEOTIDE,
        score_kind=ScoreKind.INT32_SAT,
        n_layers=3,
        pointer_width=4,
        state_set=STATES_3,
        required_params=_AFFINE_PARAMS,
        policy=policy,
        gap_model=GapModel.AFFINE,
        init=init,
        pe_func=pe_func,
        tb_transition=affine_transition,
        **kw,
    )


def kernel_global_affine(params=None) -> KernelSpec:
    """#2: global alignment with separate open/extend gap prices."""
    return _affine_spec(
        "2",
        "global-affine",
        TracebackPolicy(Strategy.GLOBAL),
        _PE_GLOBAL,
        make_init_affine_global(NEG_SENTINEL_I32),
        params=params,
    )


def kernel_local_affine(params=None) -> KernelSpec:
    """#4: local alignment with affine gaps; primary layer clamps at zero."""
    return _affine_spec(
        "4",
        "local-affine",
        TracebackPolicy(Strategy.LOCAL),
        _PE_LOCAL,
        make_init_affine_zero(NEG_SENTINEL_I32),
        params=params,
    )


def kernel_banded_local_affine(params=None, band_width: int = 16) -> KernelSpec:
    """#12: banded local-affine scoring; score and coordinates only."""
    return _affine_spec(
        "12",
        "banded-local-affine",
        TracebackPolicy(Strategy.NONE, start_region=StartRegion.EVERYWHERE),
        _PE_LOCAL,
        make_init_affine_zero(NEG_SENTINEL_I32),
        params=params,
        banding=band_width,
    )
