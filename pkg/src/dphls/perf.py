"""Analytic and discrete-event cycle model of the systolic execution.

The analytic model bills every chunk at the full hardware loop bounds
(idle lanes in a partial chunk still burn wavefront slots), matching the
discrete-event schedule simulation exactly:

    fill      = ceil(Q / n_pe) * (R + min(n_pe, Q) - 1) * ii + pipeline_depth
    traceback = path_len + 1
    reduction = ceil(log2(n_pe)) + 1
    overhead  = fixed_overhead_cycles (arbiter/host effects, calibratable)

Throughput assumes n_b blocks per channel and n_k channels running fully
parallel: clock_mhz * 1e6 * n_b * n_k / total_cycles.
"""

from __future__ import annotations

import io
import math
from dataclasses import dataclass, replace

from .core.contract import EngineConfig
from .errors import InvalidConfig, TraceSizeExceeded

SIM_MAX_LEN = 1024

CSV_HEADER = "n_pe,n_b,n_k,ii,clock_mhz,fill,tb,total,throughput"


@dataclass(frozen=True)
class CycleReport:
    n_pe: int
    n_b: int
    n_k: int
    ii: int
    clock_mhz: float
    fill_cycles: int
    traceback_cycles: int
    reduction_cycles: int
    overhead_cycles: int

    @property
    def total_cycles(self) -> int:
        return (
            self.fill_cycles
            + self.traceback_cycles
            + self.reduction_cycles
            + self.overhead_cycles
        )

    @property
    def alignments_per_second(self) -> float:
        return self.clock_mhz * 1e6 * self.n_b * self.n_k / self.total_cycles

    def csv_row(self) -> str:
        return (
            f"{self.n_pe},{self.n_b},{self.n_k},{self.ii},{self.clock_mhz:g},"
            f"{self.fill_cycles},{self.traceback_cycles},{self.total_cycles},"
            f"{self.alignments_per_second:.6g}"
        )

    def text(self) -> str:
        return (
            f"config: n_pe={self.n_pe} n_b={self.n_b} n_k={self.n_k} "
            f"ii={self.ii} clock={self.clock_mhz:g} MHz\n"
            f"  fill      {self.fill_cycles:>10} cycles\n"
            f"  traceback {self.traceback_cycles:>10} cycles\n"
            f"  reduction {self.reduction_cycles:>10} cycles\n"
            f"  overhead  {self.overhead_cycles:>10} cycles\n"
            f"  total     {self.total_cycles:>10} cycles\n"
            f"  throughput {self.alignments_per_second:.4g} alignments/s"
        )


def fill_cycles(config: EngineConfig, q_len: int, r_len: int) -> int:
    chunks = -(-q_len // config.n_pe)
    per_chunk = r_len + min(config.n_pe, q_len) - 1
    return chunks * per_chunk * config.ii + config.pipeline_depth


def model_alignment_cycles(
    config: EngineConfig, q_len: int, r_len: int, path_len: int
) -> CycleReport:
    if q_len < 1 or r_len < 1:
        raise InvalidConfig("sequence lengths must be >= 1")
    if not 0 <= path_len <= q_len + r_len:
        raise InvalidConfig("path_len must lie in [0, Q + R]")
    return CycleReport(
        n_pe=config.n_pe,
        n_b=config.n_b,
        n_k=config.n_k,
        ii=config.ii,
        clock_mhz=config.clock_mhz,
        fill_cycles=fill_cycles(config, q_len, r_len),
        traceback_cycles=path_len + 1,
        reduction_cycles=math.ceil(math.log2(config.n_pe)) + 1,
        overhead_cycles=config.fixed_overhead_cycles,
    )


def simulate_schedule(config: EngineConfig, q_len: int, r_len: int):
    """Discrete-event wavefront trace: (cycle, chunk, wavefront, active lanes).

    Chunks run back to back; every chunk spans the full hardware wavefront
    count even when its tail lanes are idle.  Use simulated_fill_cycles()
    to collapse a trace into the fill-cycle total.
    """
    if q_len > SIM_MAX_LEN or r_len > SIM_MAX_LEN:
        raise TraceSizeExceeded(f"{q_len}x{r_len} exceeds {SIM_MAX_LEN}")
    if q_len < 1 or r_len < 1:
        raise InvalidConfig("sequence lengths must be >= 1")
    n_pe = config.n_pe
    chunks = -(-q_len // n_pe)
    per_chunk = r_len + min(n_pe, q_len) - 1
    trace = []
    cycle = 0
    for c in range(chunks):
        rows = min(n_pe, q_len - c * n_pe)
        for w in range(per_chunk):
            lo = max(0, w - r_len + 1)
            hi = min(w, rows - 1)
            active = hi - lo + 1 if hi >= lo else 0
            trace.append((cycle, c, w, active))
            cycle += config.ii
    return trace


def simulated_fill_cycles(trace, config: EngineConfig) -> int:
    return len(trace) * config.ii + config.pipeline_depth


def lane_utilization(trace, config: EngineConfig) -> float:
    """Busy lane-slots over total lane-slots across the whole fill."""
    busy = sum(active for _, _, _, active in trace)
    return busy / (len(trace) * config.n_pe)


def scaling_sweep(
    config: EngineConfig,
    q_len: int,
    r_len: int,
    n_pe_values,
    n_b_values,
    path_len: int | None = None,
):
    """Cycle reports over an (n_pe, n_b) grid, for throughput-scaling plots."""
    if path_len is None:
        path_len = max(q_len, r_len)
    rows = []
    for n_pe in n_pe_values:
        for n_b in n_b_values:
            cfg = replace(config, n_pe=n_pe, n_b=n_b)
            rows.append(model_alignment_cycles(cfg, q_len, r_len, path_len))
    return rows


def sweep_csv(reports) -> str:
    out = io.StringIO()
    out.write(CSV_HEADER + "\n")
    for rep in reports:
        out.write(rep.csv_row() + "\n")
    return out.getvalue()


def fit_overhead_cycles(observations) -> float:
    """One global overhead from measured throughputs.

    Each observation is (config, q_len, r_len, path_len,
    alignments_per_second); the fit averages the per-row implied
    overheads, clamped at zero.
    """
    implied = []
    for config, q_len, r_len, path_len, measured in observations:
        rep = model_alignment_cycles(config, q_len, r_len, path_len)
        cycles_available = config.clock_mhz * 1e6 * config.n_b * config.n_k / measured
        known = rep.fill_cycles + rep.traceback_cycles + rep.reduction_cycles
        implied.append(cycles_available - known)
    fitted = sum(implied) / len(implied)
    return max(fitted, 0.0)
