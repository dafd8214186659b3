"""Alignment entry points: single pair and batches over worker channels."""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

from ..core.contract import (
    AlignmentResult,
    EngineConfig,
    KernelSpec,
    Strategy,
    validate_spec,
)
from ..errors import DphlsError, InvalidConfig
from .fill import fill_matrix
from .traceback import traceback


def _run(spec, config, query, reference, record_cells):
    validate_spec(spec, config)
    fill = fill_matrix(spec, config, query, reference, record_cells=record_cells)
    if fill.best_coord is None:
        raise InvalidConfig("no start cell is reachable (band excludes the region)")
    if spec.policy.strategy is Strategy.NONE:
        result = AlignmentResult(
            score=fill.best_score,
            start_coord=fill.best_coord,
            end_coord=fill.best_coord,
            moves=(),
            layers_at_end=fill.best_cells,
        )
        return result, fill
    # Boundary end points (empty overlap, all-insertion semi-global) are
    # handled by the walker's loop-top rules before any pointer read.
    moves, start = traceback(spec, fill.tbmem, fill.best_coord, len(query), len(reference))
    result = AlignmentResult(
        score=fill.best_score,
        start_coord=start,
        end_coord=fill.best_coord,
        moves=tuple(moves),
        layers_at_end=fill.best_cells,
    )
    return result, fill


def align(spec: KernelSpec, config: EngineConfig, query, reference) -> AlignmentResult:
    """Validate, fill in wavefront order, reduce, then walk the traceback."""
    result, _ = _run(spec, config, query, reference, record_cells=False)
    return result


def align_recorded(spec: KernelSpec, config: EngineConfig, query, reference):
    """As align(), but also returns the dense cell matrix for verification."""
    result, fill = _run(spec, config, query, reference, record_cells=True)
    return result, fill.cells


@dataclass
class BatchOutcome:
    """Per-pair batch result: exactly one of result/error is set."""

    index: int
    result: AlignmentResult | None = None
    error: DphlsError | None = None

    @property
    def ok(self) -> bool:
        return self.error is None


def align_batch(specs, config: EngineConfig, pairs) -> list:
    """Align many pairs; results are positionally matched to inputs.

    ``specs`` is one KernelSpec for all channels or a list of n_k specs
    (channel k runs specs[k]); pair i is dispatched to channel i mod n_k.
    Per-pair errors become BatchOutcome.error without aborting the batch.
    """
    n_k = config.n_k
    if isinstance(specs, KernelSpec):
        channel_specs = [specs] * n_k
    else:
        channel_specs = list(specs)
        if len(channel_specs) != n_k:
            raise InvalidConfig(
                f"got {len(channel_specs)} specs for n_k={n_k} channels"
            )
    for s in channel_specs:
        validate_spec(s, config)

    outcomes: list = [None] * len(pairs)

    def run_channel(k: int) -> None:
        spec = channel_specs[k]
        for idx in range(k, len(pairs), n_k):
            query, reference = pairs[idx]
            try:
                outcomes[idx] = BatchOutcome(
                    idx, result=align(spec, config, query, reference)
                )
            except DphlsError as exc:
                outcomes[idx] = BatchOutcome(idx, error=exc)

    if n_k == 1:
        run_channel(0)
    else:
        with ThreadPoolExecutor(max_workers=n_k) as pool:
            list(pool.map(run_channel, range(n_k)))
    return outcomes
