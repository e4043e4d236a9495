"""Batch orchestration: parse, slice, cluster, select, overlap, report.

Each processed slice is normalized, resampled to the 79x95 atlas grid, and
clustered; the resulting candidate masks are written as PNGs. Where a
cluster selection is resolved (explicit or automatic) the overlap step runs
and its hits land in the report. ``report.json`` is byte-stable: identical
inputs and configuration reproduce it exactly.
"""

from __future__ import annotations

import json
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from .atlas import (
    GRID_HEIGHT,
    GRID_WIDTH,
    Atlas,
    Hemisphere,
    OverlapHit,
    load_atlas,
    overlap_detect,
)
from .errors import (
    BadIndex,
    IoFailure,
    NoCandidate,
    SliceProcessingError,
    TumorscopeError,
)
from .fcm import ClusterModel, FcmParams, cluster_mask, fcm, hard_labels
from .imaging import encode_mask_png
from .nifti import Slice, extract_axial_slices, normalize_intensities, parse_nifti, resample_to_grid

COVERAGE_CAP = 0.30


@dataclass(frozen=True)
class PipelineConfig:
    """One batch run: inputs, clustering parameters, selection policy, output."""

    input_nifti: Path
    atlas_manifest: Path
    output_dir: Path
    gap_mm: float = 10.0
    fcm: FcmParams = field(default_factory=FcmParams)
    slices: tuple[int, ...] | None = None       # None processes every slice
    selections: dict[int, int] = field(default_factory=dict)
    auto_select: bool = False
    min_overlap_pixels: int = 1
    workers: int = 4

    def __post_init__(self):
        if not self.gap_mm > 0:
            raise ValueError(f"gap_mm must be > 0, got {self.gap_mm}")
        if self.workers < 1:
            raise ValueError(f"workers must be >= 1, got {self.workers}")


@dataclass(frozen=True)
class SliceResult:
    """Per-slice outcome as it appears in the report."""

    slice_index: int
    centroids: tuple[float, ...]
    iterations: int
    converged: bool
    candidates: tuple[str, ...]
    selected: int | None
    hits: tuple[OverlapHit, ...] | None


def run_pipeline(cfg: PipelineConfig) -> list[SliceResult]:
    """Execute the two-stage flow and write candidates plus ``report.json``.

    Returns the slice results ordered by slice index. Slices are processed
    concurrently up to ``cfg.workers``; ordering and output bytes do not
    depend on scheduling.

    Raises
    ------
    SliceProcessingError
        A per-slice failure, wrapping the typed cause.
    NiftiError, AtlasError, IoFailure, ValueError
        Input, atlas, and output failures outside the per-slice loop.
    """
    raw = cfg.input_nifti.read_bytes()
    volume = parse_nifti(raw)
    slices = extract_axial_slices(volume, cfg.gap_mm)
    atlas = load_atlas(cfg.atlas_manifest)

    if cfg.slices is None:
        chosen = slices
    else:
        for idx in cfg.slices:
            if not 0 <= idx < len(slices):
                raise ValueError(f"slice {idx} outside [0, {len(slices)})")
        chosen = [slices[idx] for idx in sorted(set(cfg.slices))]
    for idx in cfg.selections:
        if idx not in {s.index for s in chosen}:
            raise ValueError(f"selection targets slice {idx}, which is not processed")

    try:
        cfg.output_dir.mkdir(parents=True, exist_ok=True)
    except OSError as e:
        raise IoFailure(f"cannot create {cfg.output_dir}: {e}") from e

    with ThreadPoolExecutor(max_workers=cfg.workers) as pool:
        results = list(pool.map(lambda s: _process_slice(s, cfg, atlas), chosen))

    emit_report(results, cfg.output_dir / "report.json", cfg)
    return results


def _process_slice(s: Slice, cfg: PipelineConfig, atlas: Atlas) -> SliceResult:
    try:
        prepared = resample_to_grid(normalize_intensities(s), GRID_WIDTH, GRID_HEIGHT)
        model = fcm(prepared.pixels.ravel(), cfg.fcm)
        labels = hard_labels(model.membership)
        masks = [cluster_mask(labels, k, GRID_WIDTH, GRID_HEIGHT, cfg.fcm.c)
                 for k in range(cfg.fcm.c)]

        candidates = []
        for k, mask in enumerate(masks):
            name = f"slice{s.index:03d}_cluster{k}.png"
            try:
                (cfg.output_dir / name).write_bytes(encode_mask_png(mask))
            except OSError as e:
                raise IoFailure(f"cannot write {name}: {e}") from e
            candidates.append(name)

        selected = _resolve_selection(s.index, cfg, model, masks)
        hits = None
        if selected is not None:
            if not 0 <= selected < cfg.fcm.c:
                raise BadIndex(f"selected cluster {selected} outside [0, {cfg.fcm.c})")
            report = overlap_detect(masks[selected], atlas, s.index,
                                    min_pixels=cfg.min_overlap_pixels)
            hits = report.hits

        return SliceResult(
            slice_index=s.index,
            centroids=tuple(float(v) for v in model.centroids),
            iterations=model.iterations,
            converged=model.converged,
            candidates=tuple(candidates),
            selected=selected,
            hits=hits,
        )
    except TumorscopeError as e:
        raise SliceProcessingError(s.index, e) from e


def _resolve_selection(index: int, cfg: PipelineConfig, model: ClusterModel,
                       masks: list[np.ndarray]) -> int | None:
    if index in cfg.selections:
        return cfg.selections[index]
    if cfg.auto_select:
        try:
            return auto_select_cluster(model, masks)
        except NoCandidate:
            return None  # slice stays unselected; the run continues
    return None


def auto_select_cluster(model: ClusterModel, masks: list[np.ndarray],
                        coverage_cap: float = COVERAGE_CAP) -> int:
    """Pick the brightest compact cluster: max centroid among clusters whose
    mask covers at most ``coverage_cap`` of the slice. Ties take the lowest
    index.

    Raises
    ------
    NoCandidate
        If every cluster covers more than the cap.
    """
    total = masks[0].size
    best = None
    best_centroid = -np.inf
    for k, mask in enumerate(masks):
        if mask.sum() / total > coverage_cap:
            continue
        centroid = model.centroids[k]
        if centroid > best_centroid:
            best = k
            best_centroid = centroid
    if best is None:
        raise NoCandidate(f"every cluster covers more than {coverage_cap:.0%}")
    return best


def emit_report(results: list[SliceResult], out_path: Path, cfg: PipelineConfig) -> None:
    """Write ``report.json``: stable key order, LF line endings, UTF-8."""
    doc = {
        "input": str(cfg.input_nifti),
        "atlas": str(cfg.atlas_manifest),
        "params": {
            "gap_mm": cfg.gap_mm,
            "clusters": cfg.fcm.c,
            "m": cfg.fcm.m,
            "epsilon": cfg.fcm.epsilon,
            "max_iter": cfg.fcm.max_iter,
            "seed": cfg.fcm.seed,
        },
        "slices": [_slice_dict(r) for r in results],
    }
    text = json.dumps(doc, indent=2) + "\n"
    try:
        Path(out_path).write_bytes(text.encode("utf-8"))
    except OSError as e:
        raise IoFailure(f"cannot write {out_path}: {e}") from e


def _slice_dict(r: SliceResult) -> dict:
    return {
        "index": r.slice_index,
        "centroids": list(r.centroids),
        "iterations": r.iterations,
        "converged": r.converged,
        "candidates": list(r.candidates),
        "selected": r.selected,
        "hits": None if r.hits is None else [
            {
                "hemisphere": h.hemisphere.value,
                "area": h.area_id,
                "name": h.name,
                "pixels": h.pixels,
                "fraction": h.fraction,
            }
            for h in r.hits
        ],
    }


def load_report(path: Path) -> tuple[dict, list[SliceResult]]:
    """Read ``report.json`` back into (header, slice results)."""
    doc = json.loads(Path(path).read_text(encoding="utf-8"))
    header = {k: doc[k] for k in ("input", "atlas", "params")}
    results = []
    for row in doc["slices"]:
        hits = row["hits"]
        results.append(SliceResult(
            slice_index=row["index"],
            centroids=tuple(row["centroids"]),
            iterations=row["iterations"],
            converged=row["converged"],
            candidates=tuple(row["candidates"]),
            selected=row["selected"],
            hits=None if hits is None else tuple(
                OverlapHit(
                    hemisphere=Hemisphere(h["hemisphere"]),
                    area_id=h["area"],
                    name=h["name"],
                    pixels=h["pixels"],
                    fraction=h["fraction"],
                )
                for h in hits
            ),
        ))
    return header, results
