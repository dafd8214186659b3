"""Shared building blocks for the shipped kernels.

Pointer encodings
-----------------
Linear kernels use 2-bit pointers: DIAG=0, UP=1, LEFT=2, END=3.

Affine kernels pack a 4-bit pointer per cell: the low 2 bits give the
source of the primary layer (0 diag, 1 vertical gap, 2 horizontal gap,
3 stop), bit 2 marks "vertical gap opened here" (came from H rather than
an extension) and bit 3 the same for the horizontal gap.

Two-piece kernels use 7 bits: low 3 bits give the primary-layer source
(0 diag, 1/2 short vertical/horizontal, 3/4 long vertical/horizontal,
5 stop) and bits 3-6 are the four open flags.

Direction naming follows the move contract: a vertical step (up) consumes
a query symbol and is an insertion (AL_INS, state INS); a horizontal step
(left) consumes a reference symbol and is a deletion (AL_DEL, state DEL).

Tie-breaking
------------
Primary-layer candidates are evaluated in a fixed order - horizontal gap
(short then long), diagonal, vertical gap (short then long), zero-stop -
with replacement only on a strict improvement, so the earliest candidate
wins ties.  Gap layers evaluate "open" before "extend", so opening wins
ties.  Minimize-objective kernels use the same order with strictly-less
replacement.
"""

from __future__ import annotations

import math

from ..core.contract import GapModel, Move, TbState
from ..core.scoring import DistanceMetric, sat_add

# Linear pointer codes.
PTR_DIAG = 0
PTR_UP = 1
PTR_LEFT = 2
PTR_END = 3

# Affine pointer layout.
A_SRC_DIAG = 0
A_SRC_UP = 1
A_SRC_LEFT = 2
A_SRC_END = 3
A_FLAG_I_OPEN = 4
A_FLAG_D_OPEN = 8

# Two-piece pointer layout.
T_SRC_DIAG = 0
T_SRC_I1 = 1
T_SRC_D1 = 2
T_SRC_I2 = 3
T_SRC_D2 = 4
T_SRC_END = 5
T_FLAG_I1_OPEN = 8
T_FLAG_D1_OPEN = 16
T_FLAG_I2_OPEN = 32
T_FLAG_D2_OPEN = 64

STATES_1 = frozenset({TbState.MM})
STATES_3 = frozenset({TbState.MM, TbState.INS, TbState.DEL})
STATES_5 = frozenset(TbState)

_MM = TbState.MM
_INS = TbState.INS
_DEL = TbState.DEL
_LINS = TbState.LONG_INS
_LDEL = TbState.LONG_DEL


# --- traceback FSMs ----------------------------------------------------------

def linear_transition(state, ptr):
    """Single-state FSM for 2-bit pointers; unknown codes stop the walk."""
    if ptr == PTR_DIAG:
        return _MM, Move.AL_MMI
    if ptr == PTR_UP:
        return _MM, Move.AL_INS
    if ptr == PTR_LEFT:
        return _MM, Move.AL_DEL
    return _MM, Move.AL_END


def affine_transition(state, ptr):
    if state is _INS:
        return (_MM if ptr & A_FLAG_I_OPEN else _INS), Move.AL_INS
    if state is _DEL:
        return (_MM if ptr & A_FLAG_D_OPEN else _DEL), Move.AL_DEL
    src = ptr & 3
    if src == A_SRC_DIAG:
        return _MM, Move.AL_MMI
    if src == A_SRC_UP:
        return (_MM if ptr & A_FLAG_I_OPEN else _INS), Move.AL_INS
    if src == A_SRC_LEFT:
        return (_MM if ptr & A_FLAG_D_OPEN else _DEL), Move.AL_DEL
    return _MM, Move.AL_END


def twopiece_transition(state, ptr):
    if state is _INS:
        return (_MM if ptr & T_FLAG_I1_OPEN else _INS), Move.AL_INS
    if state is _DEL:
        return (_MM if ptr & T_FLAG_D1_OPEN else _DEL), Move.AL_DEL
    if state is _LINS:
        return (_MM if ptr & T_FLAG_I2_OPEN else _LINS), Move.AL_INS
    if state is _LDEL:
        return (_MM if ptr & T_FLAG_D2_OPEN else _LDEL), Move.AL_DEL
    src = ptr & 7
    if src == T_SRC_DIAG:
        return _MM, Move.AL_MMI
    if src == T_SRC_I1:
        return (_MM if ptr & T_FLAG_I1_OPEN else _INS), Move.AL_INS
    if src == T_SRC_D1:
        return (_MM if ptr & T_FLAG_D1_OPEN else _DEL), Move.AL_DEL
    if src == T_SRC_I2:
        return (_MM if ptr & T_FLAG_I2_OPEN else _LINS), Move.AL_INS
    if src == T_SRC_D2:
        return (_MM if ptr & T_FLAG_D2_OPEN else _LDEL), Move.AL_DEL
    return _MM, Move.AL_END


# --- substitution scores ------------------------------------------------------

def sub_match_mismatch(q, r, params):
    return params.match if q == r else params.mismatch


def sub_matrix(q, r, params):
    return params.substitution_matrix[q][r]


def sub_profile(q, r, params):
    """Sum-of-pairs score: the bilinear form q . M . r over 5-vectors."""
    m = params.substitution_matrix
    s = 0.0
    for a in range(5):
        qa = q[a]
        if qa:
            row = m[a]
            s += qa * (
                row[0] * r[0]
                + row[1] * r[1]
                + row[2] * r[2]
                + row[3] * r[3]
                + row[4] * r[4]
            )
    return s


def complex_distance(q, r, metric):
    dr = q.real - r.real
    di = q.imag - r.imag
    if metric is DistanceMetric.MANHATTAN:
        return abs(dr) + abs(di)
    if metric is DistanceMetric.EUCLIDEAN:
        return math.hypot(dr, di)
    raise ValueError(f"unsupported metric for complex samples: {metric}")


def int_distance(q, r, metric):
    if metric is DistanceMetric.ABS_DIFF:
        return abs(q - r)
    raise ValueError(f"unsupported metric for integer samples: {metric}")


# --- per-cell recurrences ------------------------------------------------------

def make_linear_pe(sub_fn, clamp_zero: bool, saturating: bool = True):
    add = sat_add if saturating else (lambda x, y: x + y)

    def pe_func(up, diag, left, q, r, params, coords):
        gap = params.linear_gap
        best = add(left[0], gap)
        ptr = PTR_LEFT
        cand = add(diag[0], sub_fn(q, r, params))
        if cand > best:
            best = cand
            ptr = PTR_DIAG
        cand = add(up[0], gap)
        if cand > best:
            best = cand
            ptr = PTR_UP
        if clamp_zero and best < 0:
            best = 0
            ptr = PTR_END
        return (best,), ptr

    return pe_func


def make_affine_pe(sub_fn, clamp_zero: bool, saturating: bool = True):
    """Three-layer recurrence (H, I, D) with gap cost open + k*extend."""
    add = sat_add if saturating else (lambda x, y: x + y)

    def pe_func(up, diag, left, q, r, params, coords):
        o = params.gap_open
        e = params.gap_extend
        opened = add(up[0], o)
        if up[1] > opened:
            i_val = add(up[1], e)
            i_flag = 0
        else:
            i_val = add(opened, e)
            i_flag = A_FLAG_I_OPEN
        opened = add(left[0], o)
        if left[2] > opened:
            d_val = add(left[2], e)
            d_flag = 0
        else:
            d_val = add(opened, e)
            d_flag = A_FLAG_D_OPEN
        best = d_val
        src = A_SRC_LEFT
        cand = add(diag[0], sub_fn(q, r, params))
        if cand > best:
            best = cand
            src = A_SRC_DIAG
        if i_val > best:
            best = i_val
            src = A_SRC_UP
        if clamp_zero and best < 0:
            best = 0
            src = A_SRC_END
        return (best, i_val, d_val), src | i_flag | d_flag

    return pe_func


def make_twopiece_pe(sub_fn):
    """Five-layer recurrence: primary plus two (vertical, horizontal) pairs."""

    def pe_func(up, diag, left, q, r, params, coords):
        o1 = params.gap_open
        e1 = params.gap_extend
        o2 = params.gap_open2
        e2 = params.gap_extend2
        h_up = up[0]
        h_left = left[0]

        opened = sat_add(h_up, o1)
        if up[1] > opened:
            i1 = sat_add(up[1], e1)
            flags = 0
        else:
            i1 = sat_add(opened, e1)
            flags = T_FLAG_I1_OPEN
        opened = sat_add(h_up, o2)
        if up[3] > opened:
            i2 = sat_add(up[3], e2)
        else:
            i2 = sat_add(opened, e2)
            flags |= T_FLAG_I2_OPEN
        opened = sat_add(h_left, o1)
        if left[2] > opened:
            d1 = sat_add(left[2], e1)
        else:
            d1 = sat_add(opened, e1)
            flags |= T_FLAG_D1_OPEN
        opened = sat_add(h_left, o2)
        if left[4] > opened:
            d2 = sat_add(left[4], e2)
        else:
            d2 = sat_add(opened, e2)
            flags |= T_FLAG_D2_OPEN

        best = d1
        src = T_SRC_D1
        if d2 > best:
            best = d2
            src = T_SRC_D2
        cand = sat_add(diag[0], sub_fn(q, r, params))
        if cand > best:
            best = cand
            src = T_SRC_DIAG
        if i1 > best:
            best = i1
            src = T_SRC_I1
        if i2 > best:
            best = i2
            src = T_SRC_I2
        return (best, i1, d1, i2, d2), src | flags

    return pe_func


def make_dtw_pe(dist_fn, saturating: bool = False):
    """Minimizing single-layer recurrence: dist(q, r) + min(neighbours)."""
    add = sat_add if saturating else (lambda x, y: x + y)

    def pe_func(up, diag, left, q, r, params, coords):
        best = left[0]
        ptr = PTR_LEFT
        if diag[0] < best:
            best = diag[0]
            ptr = PTR_DIAG
        if up[0] < best:
            best = up[0]
            ptr = PTR_UP
        return (add(best, dist_fn(q, r, params.distance_metric)),), ptr

    return pe_func


# --- boundary (init) builders --------------------------------------------------

def make_init_linear_global():
    def init(params, max_ref_len, max_qry_len):
        g = params.linear_gap
        row = [((j + 1) * g,) for j in range(max_ref_len)]
        col = [((i + 1) * g,) for i in range(max_qry_len)]
        return row, col, (0,)

    return init


def make_init_linear_zero():
    def init(params, max_ref_len, max_qry_len):
        row = [(0,)] * max_ref_len
        col = [(0,)] * max_qry_len
        return row, col, (0,)

    return init


def make_init_semiglobal():
    """Free reference prefix (zero top row), gap-priced query prefix."""

    def init(params, max_ref_len, max_qry_len):
        g = params.linear_gap
        row = [(0,)] * max_ref_len
        col = [((i + 1) * g,) for i in range(max_qry_len)]
        return row, col, (0,)

    return init


def make_init_affine_global(neg):
    def init(params, max_ref_len, max_qry_len):
        o = params.gap_open
        e = params.gap_extend
        row = [(o + (j + 1) * e, neg, neg) for j in range(max_ref_len)]
        col = [(o + (i + 1) * e, neg, neg) for i in range(max_qry_len)]
        return row, col, (0, neg, neg)

    return init


def make_init_affine_zero(neg):
    def init(params, max_ref_len, max_qry_len):
        row = [(0, neg, neg)] * max_ref_len
        col = [(0, neg, neg)] * max_qry_len
        return row, col, (0, neg, neg)

    return init


def make_init_twopiece_global(neg):
    def init(params, max_ref_len, max_qry_len):
        o1 = params.gap_open
        e1 = params.gap_extend
        o2 = params.gap_open2
        e2 = params.gap_extend2

        def bound(k):
            return max(o1 + k * e1, o2 + k * e2)

        row = [(bound(j + 1), neg, neg, neg, neg) for j in range(max_ref_len)]
        col = [(bound(i + 1), neg, neg, neg, neg) for i in range(max_qry_len)]
        return row, col, (0, neg, neg, neg, neg)

    return init


def make_init_dtw(pos):
    """Both edges forbidden: paths must enter at the top-left cell."""

    def init(params, max_ref_len, max_qry_len):
        row = [(pos,)] * max_ref_len
        col = [(pos,)] * max_qry_len
        return row, col, (0,)

    return init


def make_init_sdtw(pos):
    """Free start anywhere in the reference; query edge accumulates."""

    def init(params, max_ref_len, max_qry_len):
        row = [(0,)] * max_ref_len
        col = [(pos,)] * max_qry_len
        return row, col, (0,)

    return init


def make_init_pair_hmm(neg):
    """Boundary gap runs carry transition costs but no emission terms."""

    def init(params, max_ref_len, max_qry_len):
        mu = params.log_mu
        lam = params.log_lambda
        row = [(neg, neg, mu + j * lam) for j in range(max_ref_len)]
        col = [(neg, mu + i * lam, neg) for i in range(max_qry_len)]
        return row, col, (0.0, neg, neg)

    return init


def apply_band_to_boundary(init_row, init_col, band_width, forbidden):
    """Mask boundary entries outside |i - j| <= W.

    The virtual row sits at i = -1, so entry j is in band iff j < W; the
    virtual column likewise.  Used by both execution paths so banded
    kernels never seed values the band would forbid.
    """
    if band_width is None:
        return init_row, init_col
    w = band_width
    row = [init_row[j] if j < w else forbidden for j in range(len(init_row))]
    col = [init_col[i] if i < w else forbidden for i in range(len(init_col))]
    return row, col


GAP_MODEL_STATES = {
    GapModel.LINEAR: STATES_1,
    GapModel.AFFINE: STATES_3,
    GapModel.TWO_PIECE: STATES_5,
    GapModel.DTW: STATES_1,
    GapModel.PAIR_HMM: STATES_3,
}
