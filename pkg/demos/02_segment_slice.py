"""Walkthrough: fuzzy c-means segmentation of one slice.

Shows the two update rules converging, the membership matrix staying
row-stochastic, and how hard labels cut the slice into candidate masks.
A quick k-means run on the same data gives a feel for the difference.
"""

import numpy as np

from tumorscope.fcm import FcmParams, cluster_mask, fcm, hard_labels, kmeans
from tumorscope.nifti import extract_axial_slices, normalize_intensities, parse_nifti, resample_to_grid
from tumorscope.phantom import blob_phantom_nifti


def main():
    vol = parse_nifti(blob_phantom_nifti())
    s = extract_axial_slices(vol, 10.0)[5]
    prepared = resample_to_grid(normalize_intensities(s), 79, 95)
    data = prepared.pixels.ravel()
    print(f"slice 5 resampled to {prepared.width}x{prepared.height}, "
          f"{data.size} pixels")

    params = FcmParams(c=5, m=2.0, epsilon=1e-5, max_iter=100, seed=0)
    model = fcm(data, params)
    print(f"\nconverged: {model.converged} after {model.iterations} iterations")
    print("centroids:", np.round(model.centroids, 4))
    print("objective trace (first/last):",
          f"{model.objective_trace[0]:.4f} -> {model.objective_trace[-1]:.4f}")
    print("row sums all 1:", np.allclose(model.membership.sum(axis=1), 1.0))

    labels = hard_labels(model.membership)
    print("\ncandidate mask sizes:")
    for k in range(params.c):
        mask = cluster_mask(labels, k, 79, 95, params.c)
        share = mask.sum() / mask.size
        marker = "  <- the blob" if model.centroids[k] == model.centroids.max() else ""
        print(f"  cluster {k}: centroid {model.centroids[k]:.3f}, "
              f"{mask.sum():5d} px ({share:5.1%}){marker}")

    cents, klabels = kmeans(data, 5, seed=0)
    print("\nk-means on the same pixels:")
    print("centroids:", np.round(np.sort(cents), 4))
    agree = (labels == klabels).mean()
    print(f"label agreement with fcm hard labels: {agree:.1%} "
          f"(cluster ids are arbitrary, so compare structure, not the raw number)")


if __name__ == "__main__":
    main()
