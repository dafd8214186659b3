"""Pair-HMM Viterbi scoring in log space (score only, no traceback).

Three layers per cell: M (match emission plus the best diagonal
predecessor), I (query symbol emitted against a gap) and D (reference
symbol against a gap).  Gap layers are entered from M with log_mu and
extended with log_lambda; direct I<->D transitions are not part of the
model.  The reported score is the best of the three layers at the
bottom-right cell.
"""

from __future__ import annotations

from ..core.alphabet import GAP_INDEX, SymbolKind
from ..core.contract import (
    GapModel,
    KernelSpec,
    StartRegion,
    Strategy,
    TracebackPolicy,
)
from ..core.scoring import NEG_SENTINEL_F64, ScoreKind
from .common import STATES_3, affine_transition, make_init_pair_hmm


def _viterbi_pe(up, diag, left, q, r, params, coords):
    em = params.emission
    mu = params.log_mu
    lam = params.log_lambda
    d0 = diag[0]
    d1 = diag[1]
    d2 = diag[2]
    best_diag = d0 if d0 >= d1 else d1
    if d2 > best_diag:
        best_diag = d2
    m_val = em[q][r] + best_diag
    opened = up[0] + mu
    extended = up[1] + lam
    i_val = (opened if opened >= extended else extended) + em[q][GAP_INDEX]
    opened = left[0] + mu
    extended = left[2] + lam
    d_val = (opened if opened >= extended else extended) + em[GAP_INDEX][r]
    return (m_val, i_val, d_val), 0


def kernel_viterbi(params=None) -> KernelSpec:
    """#10: most-likely pair-HMM path score for two DNA sequences."""
    return KernelSpec(
        kernel_id="10",
        name="viterbi",
        symbol_kind=SymbolKind.NUCLEOTIDE,
        score_kind=ScoreKind.FLOAT64,
        n_layers=3,
        pointer_width=4,
        state_set=STATES_3,
        required_params=("log_mu", "log_lambda", "emission"),
        policy=TracebackPolicy(Strategy.NONE, start_region=StartRegion.CORNER),
        gap_model=GapModel.PAIR_HMM,
        init=make_init_pair_hmm(NEG_SENTINEL_F64),
        pe_func=_viterbi_pe,
        tb_transition=affine_transition,
        params=params,
    )
