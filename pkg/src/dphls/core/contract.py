"""The kernel-specification contract and the engine-facing domain types.

A kernel is declared as data plus three behavioural members:

* ``init(params, max_ref_len, max_qry_len)`` builds the virtual boundary of
  the DP matrix: ``init_row[j]`` is the cell directly above interior cell
  (0, j), ``init_col[i]`` the cell directly left of (i, 0), and ``origin``
  the diagonal neighbour of (0, 0).  Each entry is one cell, i.e. a tuple
  of ``n_layers`` scores.
* ``pe_func(up, diag, left, qry_sym, ref_sym, params, coords)`` computes one
  interior cell from its three neighbours, returning the cell's layer tuple
  and a traceback pointer code.  It must be a pure function of its
  arguments; wavefront-order execution relies on that.
* ``tb_transition(state, ptr)`` is the traceback FSM: it maps the current
  state and a stored pointer to the next state and an emitted move.  It
  must be total over state_set x [0, 2**pointer_width).

Interior coordinates are 0-based with query positions as rows and
reference positions as columns.  Alignment coordinates in results use the
same grid extended by -1: ``end_coord`` is the last interior cell of the
alignment (inclusive) and ``start_coord`` the cell just before the first
consumed pair (exclusive), so replaying the move list from start to end
consumes exactly ``end.row - start.row`` query symbols and
``end.col - start.col`` reference symbols.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from enum import Enum
from typing import Callable

from ..errors import InvalidConfig, SpecValidationError
from .alphabet import SymbolKind
from .scoring import (
    DistanceMetric,
    ScoreKind,
    ScoringParams,
    neg_sentinel,
    pos_sentinel,
)


class TbState(Enum):
    MM = "MM"
    INS = "INS"
    DEL = "DEL"
    LONG_INS = "LONG_INS"
    LONG_DEL = "LONG_DEL"


class Move(Enum):
    """Alignment moves: what one traceback step consumes.

    AL_MMI consumes one query and one reference symbol (diagonal), AL_INS
    one query symbol (up), AL_DEL one reference symbol (left), AL_END stops.
    """

    AL_MMI = "M"
    AL_INS = "I"
    AL_DEL = "D"
    AL_END = "E"


class Strategy(Enum):
    GLOBAL = "global"
    LOCAL = "local"
    SEMI_GLOBAL = "semi_global"
    OVERLAP = "overlap"
    NONE = "none"  # score only, traceback skipped


class Objective(Enum):
    MAXIMIZE = "maximize"
    MINIMIZE = "minimize"


class StartRegion(Enum):
    """Where the traceback start cell (= alignment end) is searched."""

    CORNER = "corner"
    LAST_ROW = "last_row"
    LAST_ROW_OR_COLUMN = "last_row_or_column"
    EVERYWHERE = "everywhere"


_DEFAULT_REGION = {
    Strategy.GLOBAL: StartRegion.CORNER,
    Strategy.LOCAL: StartRegion.EVERYWHERE,
    Strategy.SEMI_GLOBAL: StartRegion.LAST_ROW,
    Strategy.OVERLAP: StartRegion.LAST_ROW_OR_COLUMN,
}


@dataclass(frozen=True)
class TracebackPolicy:
    strategy: Strategy
    objective: Objective = Objective.MAXIMIZE
    # Strategy NONE has no implied region, so score-only kernels declare
    # theirs explicitly (e.g. the semi-global DTW reports the bottom-row min).
    start_region: StartRegion | None = None

    def __post_init__(self):
        if self.start_region is None:
            region = _DEFAULT_REGION.get(self.strategy)
            if region is None:
                raise ValueError(
                    "policy with strategy NONE must declare a start_region"
                )
            object.__setattr__(self, "start_region", region)


class GapModel(Enum):
    """Which gap-cost family the kernel's recurrences implement.

    Used by the independent path re-scorer; the engine itself never
    dispatches on it.
    """

    LINEAR = "linear"
    AFFINE = "affine"
    TWO_PIECE = "two_piece"
    DTW = "dtw"
    PAIR_HMM = "pair_hmm"


_STATES_FOR_LAYERS = {
    1: frozenset({TbState.MM}),
    3: frozenset({TbState.MM, TbState.INS, TbState.DEL}),
    5: frozenset(TbState),
}

# Minimum pointer widths per layer count: 2 bits for linear pointers,
# 4 bits for affine (source + two open/extend flags), 7 for two-piece.
_MIN_POINTER_WIDTH = {1: 2, 3: 4, 5: 7}


@dataclass(frozen=True)
class KernelSpec:
    """Complete declaration of one 2-D DP kernel: data plus behaviour."""

    kernel_id: str
    name: str
    symbol_kind: SymbolKind
    score_kind: ScoreKind
    n_layers: int
    pointer_width: int
    state_set: frozenset
    required_params: tuple
    policy: TracebackPolicy
    gap_model: GapModel
    init: Callable
    pe_func: Callable
    tb_transition: Callable
    banding: int | None = None
    params: ScoringParams | None = None
    matrix_k: int | None = None  # expected substitution-matrix size, if any

    def with_params(self, params: ScoringParams) -> "KernelSpec":
        return replace(self, params=params)

    def with_band(self, band_width: int) -> "KernelSpec":
        return replace(self, banding=band_width)

    @property
    def is_banded(self) -> bool:
        return self.banding is not None

    def forbidden_cell(self) -> tuple:
        """Cell value for positions the recurrence must never improve on."""
        if self.policy.objective is Objective.MAXIMIZE:
            v = neg_sentinel(self.score_kind)
        else:
            v = pos_sentinel(self.score_kind)
        return (v,) * self.n_layers


@dataclass(frozen=True)
class EngineConfig:
    """Execution and performance-model parameters.

    ``n_pe`` (lanes per block) affects scheduling and the cycle model only,
    never results.  ``n_b``/``n_k`` describe block/channel parallelism for
    batches and the throughput model.  ``ii``, ``clock_mhz``,
    ``pipeline_depth`` and ``fixed_overhead_cycles`` feed the cycle model.
    """

    n_pe: int = 32
    n_b: int = 1
    n_k: int = 1
    ii: int = 1
    max_reference_length: int = 1024
    max_query_length: int = 1024
    band_width: int | None = None
    clock_mhz: float = 250.0
    pipeline_depth: int = 0
    fixed_overhead_cycles: int = 500

    def __post_init__(self):
        if min(self.n_pe, self.n_b, self.n_k, self.ii) < 1:
            raise InvalidConfig("n_pe, n_b, n_k and ii must all be >= 1")
        if min(self.max_reference_length, self.max_query_length) < 1:
            raise InvalidConfig("maximum sequence lengths must be >= 1")
        if self.band_width is not None:
            if self.band_width < 1:
                raise InvalidConfig("band_width must be positive")
            if self.band_width > max(
                self.max_reference_length, self.max_query_length
            ):
                raise InvalidConfig("band_width exceeds both maximum lengths")
        if self.clock_mhz <= 0:
            raise InvalidConfig("clock_mhz must be positive")
        if self.pipeline_depth < 0 or self.fixed_overhead_cycles < 0:
            raise InvalidConfig("cycle-model offsets must be non-negative")


@dataclass(frozen=True)
class AlignmentResult:
    """Optimal score plus the recovered path.

    ``moves`` is empty for score-only kernels; otherwise it ends with
    exactly one AL_END.  ``layers_at_end`` holds the full layer tuple of
    the end cell.
    """

    score: int | float
    start_coord: tuple
    end_coord: tuple
    moves: tuple
    layers_at_end: tuple

    def query_span(self) -> int:
        return self.end_coord[0] - self.start_coord[0]

    def reference_span(self) -> int:
        return self.end_coord[1] - self.start_coord[1]


# --- validation --------------------------------------------------------------

@dataclass(frozen=True)
class MissingParam:
    name: str

    def __str__(self):
        return f"missing scoring parameter {self.name!r}"


@dataclass(frozen=True)
class InconsistentLayers:
    n_layers: int
    states: frozenset

    def __str__(self):
        names = ",".join(sorted(s.name for s in self.states))
        return f"state set {{{names}}} does not match n_layers={self.n_layers}"


@dataclass(frozen=True)
class PointerWidthTooSmall:
    declared: int
    required: int

    def __str__(self):
        return (
            f"pointer width {self.declared} bits is below the "
            f"{self.required} bits this kernel family needs"
        )


@dataclass(frozen=True)
class InvalidParam:
    name: str
    reason: str

    def __str__(self):
        return f"invalid parameter {self.name!r}: {self.reason}"


def collect_violations(spec: KernelSpec, config: EngineConfig | None = None):
    """Gather every contract violation of a spec (empty list means valid)."""
    violations = []
    expected_states = _STATES_FOR_LAYERS.get(spec.n_layers)
    if expected_states is None or spec.state_set != expected_states:
        violations.append(InconsistentLayers(spec.n_layers, spec.state_set))
    required_width = _MIN_POINTER_WIDTH.get(spec.n_layers, 2)
    if spec.pointer_width < required_width:
        violations.append(PointerWidthTooSmall(spec.pointer_width, required_width))

    params = spec.params
    if params is None:
        violations.extend(MissingParam(n) for n in spec.required_params)
    else:
        for name in spec.required_params:
            if not params.has(name):
                violations.append(MissingParam(name))
        if spec.matrix_k is not None and params.has("substitution_matrix"):
            m = params.substitution_matrix
            k = spec.matrix_k
            if len(m) != k or any(len(row) != k for row in m):
                violations.append(
                    InvalidParam(
                        "substitution_matrix",
                        f"expected a {k}x{k} matrix",
                    )
                )
        if params.has("emission"):
            e = params.emission
            if len(e) != 5 or any(len(row) != 5 for row in e):
                violations.append(InvalidParam("emission", "expected 5x5"))
        if spec.gap_model is GapModel.DTW and params.has("distance_metric"):
            if not isinstance(params.distance_metric, DistanceMetric):
                violations.append(
                    InvalidParam("distance_metric", "not a DistanceMetric")
                )

    if spec.is_banded and config is not None and config.band_width is not None:
        if config.band_width != spec.banding:
            violations.append(
                InvalidParam(
                    "band_width",
                    f"config band {config.band_width} != kernel band {spec.banding}",
                )
            )
    return violations


def validate_spec(spec: KernelSpec, config: EngineConfig | None = None) -> KernelSpec:
    """Return the spec unchanged if consistent, else raise with all violations."""
    violations = collect_violations(spec, config)
    if violations:
        raise SpecValidationError(violations)
    return spec
