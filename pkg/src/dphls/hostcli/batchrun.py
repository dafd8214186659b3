"""Batch alignment over paired record files, with a TSV result schema.

Record i of the query file pairs with record i of the reference file.
One output row per pair: id_q, id_r, score, start, end, cigar, status.
Coordinates are "row:col" with the exclusive-start convention; failed
pairs report their error class in status with '.' in the value columns.
"""

from __future__ import annotations

import re

from ..core.alphabet import SymbolKind
from ..core.contract import EngineConfig, KernelSpec, Move
from ..engine import align_batch
from ..errors import DphlsError, InvalidConfig

OUTPUT_HEADER = "#id_q\tid_r\tscore\tstart\tend\tcigar\tstatus"

_MOVE_LETTER = {Move.AL_MMI: "M", Move.AL_INS: "I", Move.AL_DEL: "D"}
_LETTER_MOVE = {"M": Move.AL_MMI, "I": Move.AL_INS, "D": Move.AL_DEL}
_CIGAR_TOKEN = re.compile(r"(\d+)([MID])")


def cigar_string(moves) -> str:
    """Run-length encode an alignment path, AL_END excluded."""
    out = []
    run_letter = None
    run_len = 0
    for move in moves:
        if move is Move.AL_END:
            break
        letter = _MOVE_LETTER[move]
        if letter == run_letter:
            run_len += 1
        else:
            if run_letter is not None:
                out.append(f"{run_len}{run_letter}")
            run_letter = letter
            run_len = 1
    if run_letter is not None:
        out.append(f"{run_len}{run_letter}")
    return "".join(out)


def parse_cigar(text: str):
    """Inverse of cigar_string: '4M2I' -> 6 moves (no AL_END)."""
    moves = []
    pos = 0
    for m in _CIGAR_TOKEN.finditer(text):
        if m.start() != pos:
            raise ValueError(f"bad cigar {text!r}")
        pos = m.end()
        moves.extend([_LETTER_MOVE[m.group(2)]] * int(m.group(1)))
    if pos != len(text):
        raise ValueError(f"bad cigar {text!r}")
    return tuple(moves)


def format_score(score) -> str:
    if isinstance(score, bool):  # guard: bool is an int subclass
        raise TypeError("scores are numeric")
    if isinstance(score, int):
        return str(score)
    return repr(score)


def encode_records(records, kind: SymbolKind):
    """Encode (id, text) records; returns list of (id, encoded | error)."""
    from ..core.alphabet import encode_sequence

    out = []
    for rid, seq in records:
        try:
            out.append((rid, encode_sequence(seq, kind), None))
        except DphlsError as exc:
            out.append((rid, None, exc))
    return out


def run_batch(
    specs,
    config: EngineConfig,
    query_records,
    reference_records,
    out_stream,
) -> int:
    """Align positional pairs and write the TSV report; returns row count.

    query_records / reference_records are (id, encoded sequence | None,
    error | None) triples as produced by encode_records (signal inputs
    can be passed pre-encoded with error None).
    """
    if len(query_records) != len(reference_records):
        raise InvalidConfig(
            f"{len(query_records)} query records vs "
            f"{len(reference_records)} reference records"
        )

    pairs = []
    pair_index = []
    rows: list = [None] * len(query_records)
    for idx, ((qid, qseq, qerr), (rid, rseq, rerr)) in enumerate(
        zip(query_records, reference_records)
    ):
        err = qerr or rerr
        if err is not None:
            rows[idx] = _error_row(qid, rid, err)
        else:
            pair_index.append(idx)
            pairs.append((qseq, rseq))

    outcomes = align_batch(specs, config, pairs)
    for outcome, idx in zip(outcomes, pair_index):
        qid = query_records[idx][0]
        rid = reference_records[idx][0]
        if outcome.ok:
            res = outcome.result
            rows[idx] = "\t".join(
                (
                    qid,
                    rid,
                    format_score(res.score),
                    f"{res.start_coord[0]}:{res.start_coord[1]}",
                    f"{res.end_coord[0]}:{res.end_coord[1]}",
                    cigar_string(res.moves),
                    "OK",
                )
            )
        else:
            rows[idx] = _error_row(qid, rid, outcome.error)

    out_stream.write(OUTPUT_HEADER + "\n")
    for row in rows:
        out_stream.write(row + "\n")
    return len(rows)


def _error_row(qid, rid, err) -> str:
    return "\t".join((qid, rid, ".", ".", ".", ".", type(err).__name__))
