"""Run configuration: one JSON document, scalar fields overridable by flags.

Schema (all sections optional unless a mode needs them):

    {
      "mode": "batch",
      "kernel": "3",
      "params": {"match": 1, "mismatch": -1, "linear_gap": -1},
      "matrix": "blosum62.mat",
      "emission": "emission.mat",
      "engine": {"n_pe": 32, "n_b": 1, "n_k": 1, "ii": 1,
                 "max_reference_length": 256, "max_query_length": 256},
      "band": 16, "tile": 256, "overlap": 32,
      "query": "q.fa", "reference": "r.fa", "out": "results.tsv"
    }

Referenced files are resolved relative to the config file and must exist
and parse before any alignment starts.
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass, field, fields as dc_fields

from ..core.alphabet import SymbolKind
from ..core.contract import EngineConfig, KernelSpec
from ..core.scoring import DistanceMetric, ScoringParams
from ..errors import InvalidConfig
from ..kernels import BANDED_KERNEL_IDS, create
from .matrixio import parse_matrix, parse_plain_matrix

_ENGINE_KEYS = {f.name for f in dc_fields(EngineConfig)}

_SCALAR_PARAM_KEYS = (
    "match",
    "mismatch",
    "linear_gap",
    "gap_open",
    "gap_extend",
    "gap_open2",
    "gap_extend2",
    "log_mu",
    "log_lambda",
)


@dataclass
class RunConfig:
    mode: str = "align"
    kernel: str = "1"
    param_values: dict = field(default_factory=dict)
    engine_values: dict = field(default_factory=dict)
    matrix_path: str | None = None
    emission_path: str | None = None
    band: int | None = None
    tile: int = 256
    overlap: int = 32
    query_path: str | None = None
    reference_path: str | None = None
    out_path: str | None = None

    @classmethod
    def load(cls, path: str) -> "RunConfig":
        with open(path, "r", encoding="utf-8") as fh:
            doc = json.load(fh)
        base = os.path.dirname(os.path.abspath(path))

        def resolve(p):
            if p is None:
                return None
            return p if os.path.isabs(p) else os.path.join(base, p)

        cfg = cls()
        cfg.mode = doc.get("mode", cfg.mode)
        cfg.kernel = str(doc.get("kernel", cfg.kernel))
        cfg.param_values = dict(doc.get("params", {}))
        engine = dict(doc.get("engine", {}))
        unknown = set(engine) - _ENGINE_KEYS
        if unknown:
            raise InvalidConfig(f"unknown engine keys: {sorted(unknown)}")
        cfg.engine_values = engine
        cfg.matrix_path = resolve(doc.get("matrix"))
        cfg.emission_path = resolve(doc.get("emission"))
        cfg.band = doc.get("band")
        cfg.tile = doc.get("tile", cfg.tile)
        cfg.overlap = doc.get("overlap", cfg.overlap)
        cfg.query_path = resolve(doc.get("query"))
        cfg.reference_path = resolve(doc.get("reference"))
        cfg.out_path = resolve(doc.get("out"))
        return cfg

    def apply_flags(self, args) -> None:
        """Command-line flags win over config-file values."""
        if args.kernel is not None:
            self.kernel = args.kernel
        if args.query is not None:
            self.query_path = args.query
        if args.reference is not None:
            self.reference_path = args.reference
        if args.out is not None:
            self.out_path = args.out
        if args.matrix is not None:
            self.matrix_path = args.matrix
        if args.emission is not None:
            self.emission_path = args.emission
        for key, value in args.params or []:
            self.param_values[key] = value
        for flag, key in (
            ("npe", "n_pe"),
            ("nb", "n_b"),
            ("nk", "n_k"),
            ("ii", "ii"),
            ("max_query", "max_query_length"),
            ("max_reference", "max_reference_length"),
            ("clock", "clock_mhz"),
        ):
            value = getattr(args, flag, None)
            if value is not None:
                self.engine_values[key] = value
        if args.band is not None:
            self.band = args.band
        if args.tile is not None:
            self.tile = args.tile
        if args.overlap is not None:
            self.overlap = args.overlap

    def build_params(self) -> ScoringParams:
        values = {}
        for key in _SCALAR_PARAM_KEYS:
            if key in self.param_values:
                values[key] = self.param_values[key]
        metric = self.param_values.get("distance_metric")
        if metric is not None:
            values["distance_metric"] = (
                metric
                if isinstance(metric, DistanceMetric)
                else DistanceMetric(str(metric).lower())
            )
        if self.matrix_path is not None:
            matrix, _ = parse_matrix(self.matrix_path)
            values["substitution_matrix"] = matrix
        if self.emission_path is not None:
            values["emission"] = parse_plain_matrix(self.emission_path, 5)
        return ScoringParams(**values)

    def build_engine_config(self) -> EngineConfig:
        values = dict(self.engine_values)
        if self.band is not None:
            values["band_width"] = self.band
        return EngineConfig(**values)

    def build_spec(self) -> KernelSpec:
        band = self.band if str(self.kernel).lstrip("#") in BANDED_KERNEL_IDS else None
        return create(self.kernel, params=self.build_params(), band_width=band)


def parse_param_flag(text: str):
    """'key=value' -> (key, int|float|str)."""
    if "=" not in text:
        raise InvalidConfig(f"--params needs key=value, got {text!r}")
    key, raw = text.split("=", 1)
    for conv in (int, float):
        try:
            return key, conv(raw)
        except ValueError:
            continue
    return key, raw


def text_kind(kind: SymbolKind) -> bool:
    return kind in (
        SymbolKind.NUCLEOTIDE,
        SymbolKind.AMBIGUOUS_NUCLEOTIDE,
        SymbolKind.AMINO_ACID,
    )
