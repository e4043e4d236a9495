"""Command-line interface.

``tumorscope run`` executes the batch pipeline; ``tumorscope serve`` starts
the HTTP review service. Exit codes: 0 success, 2 input error, 3 atlas
error, 4 output error.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .errors import (
    AtlasError,
    FcmError,
    IoFailure,
    NiftiError,
    PipelineError,
    SliceProcessingError,
)
from .fcm import FcmParams
from .pipeline import PipelineConfig, run_pipeline

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_ATLAS = 3
EXIT_IO = 4


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="tumorscope")
    sub = parser.add_subparsers(dest="command", required=True)

    run = sub.add_parser("run", help="segment a volume and map selected tumors")
    run.add_argument("--input", required=True, type=Path, help="NIfTI-1 .nii volume")
    run.add_argument("--atlas", required=True, type=Path, help="atlas manifest.json")
    run.add_argument("--out", required=True, type=Path, help="output directory")
    run.add_argument("--gap-mm", type=float, default=10.0)
    run.add_argument("--clusters", type=int, default=5)
    run.add_argument("--m", type=float, default=2.0)
    run.add_argument("--epsilon", type=float, default=1e-5)
    run.add_argument("--max-iter", type=int, default=100)
    run.add_argument("--seed", type=int, default=0)
    run.add_argument("--slices", type=str, default=None,
                     help="comma-separated slice indices (default: all)")
    run.add_argument("--select", action="append", default=[], metavar="SLICE:K",
                     help="use cluster K as the tumor on SLICE (repeatable)")
    run.add_argument("--auto-select", action="store_true",
                     help="pick the brightest compact cluster on each slice")
    run.add_argument("--min-overlap", type=int, default=1,
                     help="overlap pixels required to report an area")
    run.add_argument("--workers", type=int, default=4)

    serve = sub.add_parser("serve", help="start the interactive review service")
    serve.add_argument("--atlas", required=True, type=Path)
    serve.add_argument("--gap-mm", type=float, default=10.0)
    serve.add_argument("--host", default="127.0.0.1")
    serve.add_argument("--port", type=int, default=8000)
    serve.add_argument("--static-dir", type=Path, default=None,
                       help="directory with the browser UI bundle to host at /")

    return parser


def _parse_selections(pairs: list[str]) -> dict[int, int]:
    selections = {}
    for pair in pairs:
        try:
            slice_str, k_str = pair.split(":", 1)
            selections[int(slice_str)] = int(k_str)
        except ValueError:
            raise ValueError(f"--select expects SLICE:K, got {pair!r}") from None
    return selections


def _run(args: argparse.Namespace) -> int:
    try:
        slices = None
        if args.slices is not None:
            slices = tuple(int(s) for s in args.slices.split(",") if s.strip())
        cfg = PipelineConfig(
            input_nifti=args.input,
            atlas_manifest=args.atlas,
            output_dir=args.out,
            gap_mm=args.gap_mm,
            fcm=FcmParams(c=args.clusters, m=args.m, epsilon=args.epsilon,
                          max_iter=args.max_iter, seed=args.seed),
            slices=slices,
            selections=_parse_selections(args.select),
            auto_select=args.auto_select,
            min_overlap_pixels=args.min_overlap,
            workers=args.workers,
        )
        results = run_pipeline(cfg)
    except Exception as e:  # noqa: BLE001 - mapped to exit codes below
        code = _exit_code(e)
        if code is None:
            raise
        print(f"error: {e}", file=sys.stderr)
        return code

    n_selected = sum(1 for r in results if r.selected is not None)
    print(f"processed {len(results)} slices, {n_selected} with a selected tumor; "
          f"report at {args.out / 'report.json'}")
    return EXIT_OK


def _exit_code(e: Exception) -> int | None:
    cause = e.cause if isinstance(e, SliceProcessingError) else e
    if isinstance(cause, AtlasError):
        return EXIT_ATLAS
    if isinstance(cause, IoFailure):
        return EXIT_IO
    if isinstance(cause, (NiftiError, FcmError, PipelineError, ValueError)):
        return EXIT_INPUT
    if isinstance(cause, FileNotFoundError):
        return EXIT_INPUT
    if isinstance(cause, OSError):
        return EXIT_IO
    return None


def _serve(args: argparse.Namespace) -> int:
    import uvicorn

    from .service import ServiceConfig, create_app

    try:
        app = create_app(ServiceConfig(
            atlas_manifest=args.atlas,
            gap_mm=args.gap_mm,
            static_dir=args.static_dir,
        ))
    except AtlasError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_ATLAS

    uvicorn.run(app, host=args.host, port=args.port)
    return EXIT_OK


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    if args.command == "run":
        return _run(args)
    return _serve(args)


if __name__ == "__main__":
    sys.exit(main())
