"""Profile alignment: columns of nucleotide frequencies, sum-of-pairs scoring.

Each symbol is a 5-tuple of frequencies (A, C, G, T, gap).  The
substitution score of two columns is the bilinear form q . M . r over a
5x5 matrix; gap frequencies participate through index 4.  Gap runs between
columns still pay affine open/extend prices.
"""

from __future__ import annotations

from ..core.alphabet import SymbolKind
from ..core.contract import GapModel, KernelSpec, Strategy, TracebackPolicy
from ..core.scoring import NEG_SENTINEL_F64, ScoreKind
from .common import (
    STATES_3,
    affine_transition,
    make_affine_pe,
    make_init_affine_global,
    sub_profile,
)

_PE = make_affine_pe(sub_profile, clamp_zero=False, saturating=False)


def kernel_profile(params=None) -> KernelSpec:
    """#8: global affine alignment of two frequency profiles."""
    return KernelSpec(
        kernel_id="8",
        name="profile",
        symbol_kind=SymbolKind.PROFILE_COLUMN,
        score_kind=ScoreKind.FLOAT64,
        n_layers=3,
        pointer_width=4,
        state_set=STATES_3,
        required_params=("substitution_matrix", "gap_open", "gap_extend"),
        policy=TracebackPolicy(Strategy.GLOBAL),
        gap_model=GapModel.AFFINE,
        init=make_init_affine_global(NEG_SENTINEL_F64),
        pe_func=_PE,
        tb_transition=affine_transition,
        params=params,
        matrix_k=5,
    )
