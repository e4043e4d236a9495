"""Fuzzy c-means clustering of scalar intensities, plus a k-means baseline.

The data is 1-D (pixel intensities), so all distances are ``(x - c)**2``.
Membership matrices are row-stochastic ``(n, c)`` float arrays: ``w[i, j]``
is the degree to which point ``i`` belongs to cluster ``j``.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import BadIndex, EmptyCluster, NonFiniteInput, TooFewPoints


@dataclass(frozen=True)
class FcmParams:
    """Clustering configuration.

    ``c`` is the cluster count, ``m`` the fuzziness exponent (> 1),
    ``epsilon`` the convergence threshold on the maximum absolute membership
    change between iterations, ``max_iter`` the iteration cap, and ``seed``
    the PRNG seed for the initial membership matrix.
    """

    c: int = 5
    m: float = 2.0
    epsilon: float = 1e-5
    max_iter: int = 100
    seed: int = 0

    def __post_init__(self):
        if self.c < 2:
            raise ValueError(f"c must be >= 2, got {self.c}")
        if not self.m > 1:
            raise ValueError(f"m must be > 1, got {self.m}")
        if not self.epsilon > 0:
            raise ValueError(f"epsilon must be > 0, got {self.epsilon}")
        if self.max_iter < 1:
            raise ValueError(f"max_iter must be >= 1, got {self.max_iter}")


@dataclass(frozen=True)
class ClusterModel:
    """Converged clustering result.

    ``objective_trace`` holds the weighted within-cluster squared-distance
    objective after each update round and is non-increasing.
    """

    centroids: np.ndarray
    membership: np.ndarray
    iterations: int
    objective_trace: list[float] = field(repr=False)
    converged: bool = True


def init_membership(n: int, c: int, seed: int) -> np.ndarray:
    """Draw a random row-stochastic ``(n, c)`` membership matrix.

    Rows are sampled from a flat Dirichlet via a seeded PRNG, so identical
    seeds give bit-identical matrices.
    """
    if n < c:
        raise TooFewPoints(f"{n} points for {c} clusters")
    rng = np.random.default_rng(seed)
    return rng.dirichlet(np.ones(c), size=n)


def update_centroids(data: np.ndarray, w: np.ndarray, m: float) -> np.ndarray:
    """Centroid update: each centroid is the w**m weighted mean of the data."""
    wm = w ** m
    weights = wm.sum(axis=0)
    if np.any(weights == 0):
        raise EmptyCluster(f"clusters {np.nonzero(weights == 0)[0].tolist()} have zero weight")
    return (wm * data[:, None]).sum(axis=0) / weights


def update_membership(data: np.ndarray, centroids: np.ndarray, m: float) -> np.ndarray:
    """Membership update from inverse distance ratios.

    ``w[i, j] = 1 / sum_k (d(i, j) / d(i, k)) ** (2 / (m - 1))``. A point at
    zero distance from some centroid gets crisp membership 1 at the first
    (lowest-index) such centroid and 0 elsewhere.
    """
    dist = np.abs(data[:, None] - centroids[None, :])
    exponent = 2.0 / (m - 1.0)
    with np.errstate(divide="ignore", invalid="ignore"):
        ratios = (dist[:, :, None] / dist[:, None, :]) ** exponent
        w = 1.0 / ratios.sum(axis=2)

    singular = dist == 0
    rows = singular.any(axis=1)
    if rows.any():
        w[rows] = 0.0
        w[rows, singular[rows].argmax(axis=1)] = 1.0
    return w


def objective(data: np.ndarray, centroids: np.ndarray, w: np.ndarray, m: float) -> float:
    """Weighted within-cluster squared distance: sum_ij w[i,j]**m * (x_i - c_j)**2."""
    sq = (data[:, None] - centroids[None, :]) ** 2
    return float(((w ** m) * sq).sum())


def fcm(data: np.ndarray, params: FcmParams, init: np.ndarray | None = None) -> ClusterModel:
    """Run fuzzy c-means to convergence.

    Alternates centroid and membership updates from a seeded random initial
    membership matrix, stopping when the maximum absolute membership change
    is at most ``params.epsilon`` or after ``params.max_iter`` rounds.

    Parameters
    ----------
    data : ndarray
        Scalar values, shape ``(n,)``.
    params : FcmParams
    init : ndarray, optional
        Initial ``(n, c)`` membership matrix overriding the seeded draw.

    Raises
    ------
    TooFewPoints, NonFiniteInput, EmptyCluster
    """
    data = np.asarray(data, dtype=np.float64).ravel()
    n = data.size
    if n < params.c:
        raise TooFewPoints(f"{n} points for {params.c} clusters")
    if not np.isfinite(data).all():
        raise NonFiniteInput("data contains NaN or Inf")

    if init is None:
        w = init_membership(n, params.c, params.seed)
    else:
        w = np.asarray(init, dtype=np.float64)
        if w.shape != (n, params.c):
            raise ValueError(f"init shape {w.shape} != {(n, params.c)}")
        if not np.isfinite(w).all():
            raise NonFiniteInput("init membership contains NaN or Inf")

    centroids = np.empty(params.c)
    trace: list[float] = []
    converged = False
    iterations = 0
    for _ in range(params.max_iter):
        centroids = update_centroids(data, w, params.m)
        w_new = update_membership(data, centroids, params.m)
        trace.append(objective(data, centroids, w_new, params.m))
        delta = np.abs(w_new - w).max()
        w = w_new
        iterations += 1
        if delta <= params.epsilon:
            converged = True
            break

    return ClusterModel(
        centroids=centroids,
        membership=w,
        iterations=iterations,
        objective_trace=trace,
        converged=converged,
    )


def hard_labels(w: np.ndarray) -> np.ndarray:
    """Per-row argmax of the membership matrix; ties go to the lowest index."""
    return np.argmax(w, axis=1)


def cluster_mask(labels: np.ndarray, k: int, width: int, height: int,
                 n_clusters: int) -> np.ndarray:
    """Boolean ``(height, width)`` mask of the pixels labeled ``k``.

    The ``n_clusters`` masks of a label map partition the slice.
    """
    if not 0 <= k < n_clusters:
        raise BadIndex(f"cluster {k} outside [0, {n_clusters})")
    labels = np.asarray(labels)
    if labels.size != width * height:
        raise ValueError(f"{labels.size} labels for a {width}x{height} grid")
    return labels.reshape(height, width) == k


def kmeans(data: np.ndarray, c: int, seed: int, max_iter: int = 100
           ) -> tuple[np.ndarray, np.ndarray]:
    """Lloyd's algorithm with seeded Forgy initialization.

    Centroids start at ``c`` distinct data points chosen by a seeded PRNG.
    A cluster left empty after assignment is reseeded to the point farthest
    from its own centroid. Deterministic for a given seed.

    Returns
    -------
    (centroids, labels)
        ``centroids`` shape ``(c,)``, ``labels`` shape ``(n,)``.
    """
    data = np.asarray(data, dtype=np.float64).ravel()
    n = data.size
    if n < c:
        raise TooFewPoints(f"{n} points for {c} clusters")

    rng = np.random.default_rng(seed)
    centroids = data[rng.choice(n, size=c, replace=False)].copy()

    labels = np.zeros(n, dtype=int)
    for _ in range(max_iter):
        dist = np.abs(data[:, None] - centroids[None, :])
        new_labels = np.argmin(dist, axis=1)

        new_centroids = np.empty(c)
        empty = []
        for k in range(c):
            members = data[new_labels == k]
            if members.size == 0:
                empty.append(k)
            else:
                new_centroids[k] = members.mean()
        if empty:
            # Reseed each empty cluster to the point currently farthest from
            # its assigned centroid, excluding points already used.
            own_dist = np.abs(data - centroids[new_labels])
            for k in empty:
                far = int(np.argmax(own_dist))
                new_centroids[k] = data[far]
                own_dist[far] = -1.0

        if np.array_equal(new_labels, labels) and np.array_equal(new_centroids, centroids):
            break
        labels = new_labels
        centroids = new_centroids

    return centroids, labels
