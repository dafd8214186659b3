"""Engine-vs-oracle diffing: run both sides on the same inputs and report
the first divergent cell, path element or score ("MATCH" when clean)."""

from __future__ import annotations

from dataclasses import dataclass

from ..core.contract import (
    AlignmentResult,
    EngineConfig,
    KernelSpec,
    ScoreKind,
    Strategy,
    validate_spec,
)
from ..engine.fill import fill_matrix
from ..engine.traceback import traceback
from ..oracle import oracle_align

REL_TOL = 1e-9


def close(a, b, kind: ScoreKind) -> bool:
    if a == b:
        return True
    if kind is ScoreKind.INT32_SAT:
        return False
    return abs(a - b) <= REL_TOL * max(abs(a), abs(b))


@dataclass
class DiffReport:
    ok: bool
    detail: str = ""

    def describe(self) -> str:
        return "MATCH" if self.ok else self.detail


def diff_alignment(
    spec: KernelSpec,
    config: EngineConfig,
    query,
    reference,
    corrupt=None,
) -> DiffReport:
    """Compare every in-band cell, the score and the path.

    ``corrupt`` is a fault-injection hook for validation drills: it
    receives the populated traceback memory before the walk.
    """
    validate_spec(spec, config)
    fill = fill_matrix(spec, config, query, reference, record_cells=True)
    oracle_result, matrix = oracle_align(spec, query, reference)
    kind = spec.score_kind

    for i in range(len(query)):
        for j in range(len(reference)):
            ours = fill.cells[i][j]
            ref = matrix.cells[i][j]
            if ours is None and ref is None:
                continue
            if (ours is None) != (ref is None):
                return DiffReport(
                    False, f"cell ({i},{j}): band disagreement {ours} vs {ref}"
                )
            for layer, (a, b) in enumerate(zip(ours, ref)):
                if not close(a, b, kind):
                    return DiffReport(
                        False,
                        f"cell ({i},{j}) layer {layer}: engine {a} != oracle {b}",
                    )

    if not close(fill.best_score, oracle_result.score, kind):
        return DiffReport(
            False,
            f"score: engine {fill.best_score} != oracle {oracle_result.score}",
        )
    if fill.best_coord != oracle_result.end_coord:
        return DiffReport(
            False,
            f"end cell: engine {fill.best_coord} != oracle {oracle_result.end_coord}",
        )
    if spec.policy.strategy is Strategy.NONE:
        return DiffReport(True)

    if corrupt is not None:
        corrupt(fill.tbmem)
    moves, start = traceback(
        spec, fill.tbmem, fill.best_coord, len(query), len(reference)
    )
    if start != oracle_result.start_coord:
        return DiffReport(
            False,
            f"path start: engine {start} != oracle {oracle_result.start_coord}",
        )
    for k, (a, b) in enumerate(zip(moves, oracle_result.moves)):
        if a is not b:
            return DiffReport(False, f"path element {k}: engine {a} != oracle {b}")
    if len(moves) != len(oracle_result.moves):
        return DiffReport(
            False,
            f"path length: engine {len(moves)} != oracle {len(oracle_result.moves)}",
        )
    return DiffReport(True)


def engine_result_matches(
    spec: KernelSpec, ours: AlignmentResult, reference: AlignmentResult
) -> bool:
    return (
        close(ours.score, reference.score, spec.score_kind)
        and ours.end_coord == reference.end_coord
        and ours.start_coord == reference.start_coord
        and ours.moves == reference.moves
    )
