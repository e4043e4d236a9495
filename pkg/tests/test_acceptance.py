"""Acceptance suite: the product-level guarantees, one test per guarantee.

Each test prints one PASS line (visible with ``pytest -s`` or ``-v``) and
checks its property at the stated tolerance. These run on synthetic
phantoms and fixture atlases only; no external data.
"""

import json
import time

import numpy as np
import pytest

from oracles import (
    fcm_reference,
    kmeans_exhaustive,
    kmeans_sse,
    overlap_and,
    partition_of,
)
from tumorscope import errors
from tumorscope.atlas import GRID_SHAPE, load_atlas, overlap_count
from tumorscope.fcm import (
    FcmParams,
    cluster_mask,
    fcm,
    hard_labels,
    init_membership,
    kmeans,
    update_centroids,
    update_membership,
)
from tumorscope.imaging import decode_mask_png
from tumorscope.nifti import extract_axial_slices, normalize_intensities, parse_nifti, resample_to_grid
from tumorscope.phantom import encode_nifti, write_fixture_atlas
from tumorscope.pipeline import PipelineConfig, run_pipeline


def _instances(count=100):
    """Seeded random clustering problems: n <= 500, c in 2..5, m = 2."""
    for seed in range(count):
        rng = np.random.default_rng(seed)
        n = int(rng.integers(20, 501))
        c = int(rng.integers(2, 6))
        data = rng.random(n)
        yield seed, n, c, data


def test_fcm_objective_monotone_descent_100_instances():
    start = time.perf_counter()
    checked = 0
    for seed, n, c, data in _instances(100):
        model = fcm(data, FcmParams(c=c, m=2.0, seed=seed))
        trace = np.asarray(model.objective_trace)
        assert trace.size >= 1
        assert np.all(np.diff(trace) <= 1e-9), f"objective rose (seed {seed})"
        checked += 1
    elapsed = time.perf_counter() - start
    assert checked == 100
    assert elapsed < 10.0, f"took {elapsed:.1f}s"
    print(f"\nPASS monotone descent: 100/100 non-increasing traces in {elapsed:.2f}s")


def test_membership_rows_stochastic_after_every_update():
    worst = 0.0
    for seed, n, c, data in _instances(100):
        w = init_membership(n, c, seed=seed)
        for _ in range(20):
            centroids = update_centroids(data, w, 2.0)
            w = update_membership(data, centroids, 2.0)
            err = np.abs(w.sum(axis=1) - 1.0).max()
            worst = max(worst, err)
            assert err <= 1e-9
    print(f"\nPASS row-stochasticity: worst row-sum error {worst:.2e} <= 1e-9")


def test_fcm_matches_independent_reference():
    datasets = [np.array([0.0, 0.1, 0.9, 1.0])]
    for seed in range(20):
        rng = np.random.default_rng(1000 + seed)
        datasets.append(np.concatenate([
            rng.normal(0.15, 0.04, size=int(rng.integers(5, 15))),
            rng.normal(0.85, 0.04, size=int(rng.integers(5, 15))),
        ]))
    worst = 0.0
    for i, data in enumerate(datasets):
        init = init_membership(data.size, 2, seed=i)
        model = fcm(data, FcmParams(c=2, seed=i), init=init)
        ref_c, ref_w, _ = fcm_reference(data, 2, 2.0, 1e-5, 100, init.tolist())
        diff = max(np.abs(model.centroids - ref_c).max(),
                   np.abs(model.membership - np.asarray(ref_w)).max())
        worst = max(worst, diff)
        assert diff <= 1e-6, f"dataset {i}: reference disagrees by {diff:.2e}"
    print(f"\nPASS fcm oracle equivalence: {len(datasets)} datasets, worst diff {worst:.2e} <= 1e-6")


def test_kmeans_matches_exhaustive_partition_optimum():
    cases = 0
    for seed in range(8):
        rng = np.random.default_rng(2000 + seed)
        n = int(rng.integers(6, 11))
        c = 2 if n < 8 else int(rng.integers(2, 4))
        data = np.round(rng.random(n), 3)
        best_sse, best_labels = kmeans_exhaustive(data, c)
        runs = [kmeans(data, c, seed=s) for s in range(12)]
        sse, labels = min(
            ((kmeans_sse(data, cents, labels), labels) for cents, labels in runs),
            key=lambda t: t[0],
        )
        assert abs(sse - best_sse) <= 1e-9, f"seed {seed}: {sse} vs optimum {best_sse}"
        assert partition_of(labels) == partition_of(best_labels)
        cases += 1
    print(f"\nPASS kmeans exhaustive optimum: {cases} instances, n <= 10")


def test_overlap_rule_equals_pixelwise_and_1000_pairs():
    rng = np.random.default_rng(7)
    for i in range(1000):
        density_a, density_b = rng.uniform(0.05, 0.95, size=2)
        a = rng.random(GRID_SHAPE) < density_a
        b = rng.random(GRID_SHAPE) < density_b
        assert overlap_count(a, b) == overlap_and(a, b), f"pair {i}"
    print("\nPASS overlap rule: 1000/1000 random mask pairs equal pixelwise AND exactly")


def test_structural_invariants(tmp_path):
    # 160 mm axial extent at 10 mm gap: exactly 16 slices
    vol = parse_nifti(encode_nifti(np.zeros((6, 6, 160)), (1.0, 1.0, 1.0)))
    slices = extract_axial_slices(vol, 10.0)
    assert len(slices) == 16

    # atlas validation pins the 79x95 grid ...
    manifest = write_fixture_atlas(tmp_path / "atlas", slice_indices=[0])
    doc = json.loads(manifest.read_text())
    doc["grid"] = [80, 95]
    bad_grid = tmp_path / "bad_grid.json"
    bad_grid.write_text(json.dumps(doc))
    with pytest.raises(errors.BadManifest):
        load_atlas(bad_grid)

    # ... and rejects area ids beyond 47
    doc = json.loads(manifest.read_text())
    doc["entries"][0]["area"] = 48
    bad_area = tmp_path / "bad_area.json"
    bad_area.write_text(json.dumps(doc))
    with pytest.raises(errors.BadAreaId):
        load_atlas(bad_area)

    # c=5 segmentation yields exactly 5 masks that partition the slice
    rng = np.random.default_rng(0)
    pixels = rng.random((95, 79))
    model = fcm(pixels.ravel(), FcmParams(c=5, seed=0))
    labels = hard_labels(model.membership)
    masks = [cluster_mask(labels, k, 79, 95, 5) for k in range(5)]
    assert len(masks) == 5
    coverage = np.stack(masks).sum(axis=0)
    assert np.all(coverage == 1)
    print("\nPASS structural invariants: 16 slices, 79x95 grid enforced, "
          "area ids <= 47 enforced, 5 masks partition the slice")


def test_end_to_end_blob_phantom(phantom_file, atlas_manifest, tmp_path):
    # Pick the tumor cluster the way a reviewer would: segment slice 5 and
    # take the brightest candidate.
    volume = parse_nifti(phantom_file.read_bytes())
    s5 = extract_axial_slices(volume, 10.0)[5]
    prepared = resample_to_grid(normalize_intensities(s5), 79, 95)
    model = fcm(prepared.pixels.ravel(), FcmParams())
    k = int(np.argmax(model.centroids))

    reports = []
    for run in ("a", "b"):
        out = tmp_path / run
        run_pipeline(PipelineConfig(
            input_nifti=phantom_file, atlas_manifest=atlas_manifest,
            output_dir=out, selections={5: k},
        ))
        reports.append((out / "report.json").read_bytes())

    doc = json.loads(reports[0])
    all_hits = [(h["hemisphere"], h["area"])
                for row in doc["slices"] if row["hits"]
                for h in row["hits"]]
    assert all_hits == [("R", 4)], f"expected only (R, 4), got {all_hits}"
    assert reports[0] == reports[1], "reports differ between identical runs"
    print("\nPASS end-to-end: blob phantom reports exactly (Right, 4); "
          "byte-identical across runs")


def test_parser_never_crashes_on_fuzzed_buffers():
    rng = np.random.default_rng(99)
    template = bytearray(encode_nifti(np.zeros((4, 4, 4)), (1.0, 1.0, 1.0)))
    outcomes = {"volume": 0, "typed_error": 0}
    for i in range(10_000):
        if i % 10 < 7:
            size = int(rng.integers(0, 4097))
            buf = rng.integers(0, 256, size=size, dtype=np.uint8).tobytes()
        else:
            # mutate a valid file: harder paths than pure noise reaches
            buf = bytearray(template)
            for _ in range(int(rng.integers(1, 12))):
                buf[int(rng.integers(0, len(buf)))] = int(rng.integers(0, 256))
            buf = bytes(buf[:int(rng.integers(300, len(buf) + 1))])
        try:
            parse_nifti(buf)
            outcomes["volume"] += 1
        except errors.NiftiError:
            outcomes["typed_error"] += 1
        # anything else propagates and fails the test
    assert sum(outcomes.values()) == 10_000
    print(f"\nPASS parser fuzzing: 10000 buffers, {outcomes['typed_error']} typed errors, "
          f"{outcomes['volume']} parsed volumes, 0 crashes")
