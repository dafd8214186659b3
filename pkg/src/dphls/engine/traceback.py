"""Traceback walker: replays stored pointers through the kernel's FSM.

Each step reads the pointer at the current cell, asks the kernel FSM for
(next state, move), emits the move and steps: AL_MMI to (i-1, j-1),
AL_INS to (i-1, j), AL_DEL to (i, j-1).  Boundary handling depends on the
strategy: a global walk continues along the virtual boundary (forced
moves) until the origin, a semi-global walk climbs the left boundary
until the top row, local and overlap walks stop at either boundary.
The emitted sequence is returned in alignment order, AL_END last.
"""

from __future__ import annotations

from ..core.contract import KernelSpec, Move, Strategy, TbState
from ..errors import NonTerminating
from .tbmem import TbMemory


def traceback(
    spec: KernelSpec,
    tbmem: TbMemory,
    start: tuple,
    q_len: int,
    r_len: int,
    start_state: TbState = TbState.MM,
):
    """Walk back from ``start``; returns (moves, end position).

    ``start`` is the alignment's end cell; the returned position is the
    exclusive start coordinate (components may be -1).
    """
    strategy = spec.policy.strategy
    transition = spec.tb_transition
    i, j = start
    state = start_state
    moves = []
    limit = q_len + r_len + 1
    while True:
        if len(moves) > limit:
            raise NonTerminating(len(moves))
        if strategy is Strategy.GLOBAL:
            if i == -1 and j == -1:
                break
            if i == -1:
                moves.append(Move.AL_DEL)
                j -= 1
                continue
            if j == -1:
                moves.append(Move.AL_INS)
                i -= 1
                continue
        elif strategy is Strategy.SEMI_GLOBAL:
            if i == -1:
                break
            if j == -1:
                moves.append(Move.AL_INS)
                i -= 1
                continue
        else:  # LOCAL, OVERLAP
            if i == -1 or j == -1:
                break
        state, move = transition(state, tbmem.read(i, j))
        if move is Move.AL_END:
            break
        moves.append(move)
        if move is Move.AL_MMI:
            i -= 1
            j -= 1
        elif move is Move.AL_INS:
            i -= 1
        elif move is Move.AL_DEL:
            j -= 1
    moves.reverse()
    moves.append(Move.AL_END)
    return moves, (i, j)
