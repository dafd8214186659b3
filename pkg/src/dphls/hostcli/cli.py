"""The dphls command line.

    dphls <mode> --kernel <id|name> [--config file.json] --query Q --reference R
          [--params k=v ...] [--npe N --nb N --nk N --band W --tile T --overlap O]
          [--out PATH]

Modes: align (single pair), batch (paired record files), verify
(engine vs oracle), perf (cycle/throughput model), tile (long pairs).
Exit codes: 0 success, 1 usage/config error, 2 input parse error,
3 verification mismatch.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import replace

from .. import perf
from ..core.alphabet import SymbolKind, encode_sequence
from ..engine import align
from ..errors import (
    DphlsError,
    EmptyFile,
    InvalidCharacter,
    MalformedFasta,
    MalformedSample,
    MatrixShapeMismatch,
    SpecValidationError,
    UnknownResidue,
)
from .batchrun import OUTPUT_HEADER, cigar_string, encode_records, format_score, run_batch
from .fastaio import parse_fasta
from .runconfig import RunConfig, parse_param_flag, text_kind
from .signalio import parse_signal
from .tiling import TilingPlan, run_tiled_alignment
from .verify import diff_alignment

_PARSE_ERRORS = (
    MalformedFasta,
    EmptyFile,
    MatrixShapeMismatch,
    UnknownResidue,
    MalformedSample,
    InvalidCharacter,
)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_PARSE = 2
EXIT_MISMATCH = 3


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dphls", description="2-D DP alignment kernels on a wavefront engine"
    )
    sub = parser.add_subparsers(dest="mode", required=True)
    for mode in ("align", "batch", "verify", "perf", "tile"):
        p = sub.add_parser(mode)
        p.add_argument("--kernel", help="kernel id (1..15) or name")
        p.add_argument("--config", help="JSON run configuration")
        p.add_argument("--query", help="query input path")
        p.add_argument("--reference", help="reference input path")
        p.add_argument(
            "--params",
            action="append",
            type=parse_param_flag,
            metavar="K=V",
            help="scoring parameter (repeatable)",
        )
        p.add_argument("--matrix", help="substitution-matrix file")
        p.add_argument("--emission", help="5x5 emission-matrix file")
        p.add_argument("--npe", type=int, help="lanes per block")
        p.add_argument("--nb", type=int, help="blocks per channel")
        p.add_argument("--nk", type=int, help="channels")
        p.add_argument("--ii", type=int, help="initiation interval")
        p.add_argument("--band", type=int, help="band width")
        p.add_argument("--tile", type=int, help="tile size")
        p.add_argument("--overlap", type=int, help="tile overlap")
        p.add_argument("--max-query", type=int, dest="max_query")
        p.add_argument("--max-reference", type=int, dest="max_reference")
        p.add_argument("--clock", type=float, help="clock in MHz")
        p.add_argument("--path-len", type=int, dest="path_len", help="perf: modeled path length")
        p.add_argument("--out", help="output path")
    return parser


def _load_records(path: str, kind: SymbolKind):
    """(id, encoded, error) triples from a FASTA or signal file."""
    if text_kind(kind):
        return encode_records(parse_fasta(path), kind)
    return [("signal", parse_signal(path, kind), None)]


def _single_pair(spec, cfg):
    queries = _load_records(cfg.query_path, spec.symbol_kind)
    references = _load_records(cfg.reference_path, spec.symbol_kind)
    qid, qseq, qerr = queries[0]
    rid, rseq, rerr = references[0]
    if qerr or rerr:
        raise qerr or rerr
    return (qid, qseq), (rid, rseq)


def _emit(text: str, out_path: str | None) -> None:
    if out_path:
        with open(out_path, "w", encoding="ascii") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        cfg = RunConfig.load(args.config) if args.config else RunConfig()
        cfg.mode = args.mode
        cfg.apply_flags(args)
        return _dispatch(args, cfg)
    except SpecValidationError as exc:
        print(f"dphls: invalid kernel spec: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except _PARSE_ERRORS as exc:
        print(f"dphls: input error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except FileNotFoundError as exc:
        print(f"dphls: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except (DphlsError, KeyError, ValueError, TypeError) as exc:
        print(f"dphls: {exc}", file=sys.stderr)
        return EXIT_USAGE


def _dispatch(args, cfg: RunConfig) -> int:
    if cfg.mode == "perf":
        return _mode_perf(args, cfg)
    spec = cfg.build_spec()
    engine_config = cfg.build_engine_config()

    if cfg.mode == "batch":
        queries = _load_records(cfg.query_path, spec.symbol_kind)
        references = _load_records(cfg.reference_path, spec.symbol_kind)
        if cfg.out_path:
            with open(cfg.out_path, "w", encoding="ascii") as fh:
                run_batch(spec, engine_config, queries, references, fh)
        else:
            run_batch(spec, engine_config, queries, references, sys.stdout)
        return EXIT_OK

    if cfg.mode == "verify":
        queries = _load_records(cfg.query_path, spec.symbol_kind)
        references = _load_records(cfg.reference_path, spec.symbol_kind)
        status = EXIT_OK
        lines = []
        for (qid, qseq, qerr), (rid, rseq, rerr) in zip(queries, references):
            if qerr or rerr:
                lines.append(f"{qid}\t{rid}\tSKIP\t{qerr or rerr}")
                continue
            report = diff_alignment(spec, engine_config, qseq, rseq)
            lines.append(f"{qid}\t{rid}\t{report.describe()}")
            if not report.ok:
                status = EXIT_MISMATCH
        _emit("\n".join(lines) + "\n", cfg.out_path)
        return status

    (qid, qseq), (rid, rseq) = _single_pair(cfg.build_spec(), cfg)

    if cfg.mode == "tile":
        plan = TilingPlan(tile_size=cfg.tile, overlap=cfg.overlap)
        result = run_tiled_alignment(spec, engine_config, qseq, rseq, plan)
    else:  # align
        result = align(spec, engine_config, qseq, rseq)
    row = "\t".join(
        (
            qid,
            rid,
            format_score(result.score),
            f"{result.start_coord[0]}:{result.start_coord[1]}",
            f"{result.end_coord[0]}:{result.end_coord[1]}",
            cigar_string(result.moves),
            "OK",
        )
    )
    _emit(OUTPUT_HEADER + "\n" + row + "\n", cfg.out_path)
    return EXIT_OK


def _mode_perf(args, cfg: RunConfig) -> int:
    engine_config = cfg.build_engine_config()
    q_len = engine_config.max_query_length
    r_len = engine_config.max_reference_length
    path_len = args.path_len if args.path_len is not None else max(q_len, r_len)
    report = perf.model_alignment_cycles(engine_config, q_len, r_len, path_len)
    sim = perf.simulate_schedule(engine_config, q_len, r_len)
    sim_fill = perf.simulated_fill_cycles(sim, engine_config)
    text = report.text() + f"\n  simulated fill: {sim_fill} cycles\n"
    sys.stdout.write(text)
    if cfg.out_path:
        with open(cfg.out_path, "w", encoding="ascii") as fh:
            fh.write(perf.CSV_HEADER + "\n" + report.csv_row() + "\n")
    return EXIT_OK


if __name__ == "__main__":
    raise SystemExit(main())
