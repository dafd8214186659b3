"""Single-layer kernels: linear gap penalties over coded alphabets."""

from __future__ import annotations

from ..core.alphabet import SymbolKind
from ..core.contract import GapModel, KernelSpec, Strategy, TracebackPolicy
from ..core.scoring import ScoreKind
from .common import (
    STATES_1,
    linear_transition,
    make_init_linear_global,
    make_init_linear_zero,
    make_init_semiglobal,
    make_linear_pe,
    sub_match_mismatch,
    sub_matrix,
)

_MM_PARAMS = ("match", "mismatch", "linear_gap")

_PE_GLOBAL = make_linear_pe(sub_match_mismatch, clamp_zero=False)
_PE_LOCAL = make_linear_pe(sub_match_mismatch, clamp_zero=True)
_PE_PROTEIN = make_linear_pe(sub_matrix, clamp_zero=True)


def _linear_spec(kernel_id, name, policy, pe_func, init, **kw):
    return KernelSpec(
        kernel_id=kernel_id,
        name=name,
        symbol_kind=kw.pop("symbol_kind", SymbolKind.NUCLEOTIDE),
        score_kind=ScoreKind.INT32_SAT,
        n_layers=1,
        pointer_width=2,
        state_set=STATES_1,
        required_params=kw.pop("required_params", _MM_PARAMS),
        policy=policy,
        gap_model=GapModel.LINEAR,
        init=init,
        pe_func=pe_func,
        tb_transition=linear_transition,
        **kw,
    )


def kernel_global_linear(params=None) -> KernelSpec:
    """#1: end-to-end alignment, one gap price, maximize."""
    return _linear_spec(
        "1",
        "global-linear",
        TracebackPolicy(Strategy.GLOBAL),
        _PE_GLOBAL,
        make_init_linear_global(),
        params=params,
    )


def kernel_local_linear(params=None) -> KernelSpec:
    """#3: best positively-scoring subsequence pair; cells clamp at zero."""
    return _linear_spec(
        "3",
        "local-linear",
        TracebackPolicy(Strategy.LOCAL),
        _PE_LOCAL,
        make_init_linear_zero(),
        params=params,
    )


def kernel_overlap(params=None) -> KernelSpec:
    """#6: free ends on both sequences; the best suffix/prefix match wins."""
    return _linear_spec(
        "6",
        "overlap",
        TracebackPolicy(Strategy.OVERLAP),
        _PE_GLOBAL,
        make_init_linear_zero(),
        params=params,
    )


def kernel_semiglobal(params=None) -> KernelSpec:
    """#7: query end-to-end against any stretch of the reference."""
    return _linear_spec(
        "7",
        "semi-global",
        TracebackPolicy(Strategy.SEMI_GLOBAL),
        _PE_GLOBAL,
        make_init_semiglobal(),
        params=params,
    )


def kernel_banded_global_linear(params=None, band_width: int = 16) -> KernelSpec:
    """#11: global-linear restricted to |i - j| <= band_width."""
    return _linear_spec(
        "11",
        "banded-global-linear",
        TracebackPolicy(Strategy.GLOBAL),
        _PE_GLOBAL,
        make_init_linear_global(),
        params=params,
        banding=band_width,
    )


def kernel_protein_local(params=None) -> KernelSpec:
    """#15: local alignment of amino-acid sequences with a 20x20 matrix."""
    return _linear_spec(
        "15",
        "protein-local",
        TracebackPolicy(Strategy.LOCAL),
        _PE_PROTEIN,
        make_init_linear_zero(),
        params=params,
        symbol_kind=SymbolKind.AMINO_ACID,
        required_params=("substitution_matrix", "linear_gap"),
        matrix_k=20,
    )
