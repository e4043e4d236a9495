"""Tumor segmentation and Brodmann-area mapping for T2 MRI volumes.

The library is organized as small numpy-first modules:

* :mod:`tumorscope.nifti`    -- NIfTI-1 parsing, slice extraction, resampling
* :mod:`tumorscope.fcm`      -- fuzzy c-means clustering (plus a k-means baseline)
* :mod:`tumorscope.atlas`    -- Brodmann atlas loading and mask overlap
* :mod:`tumorscope.pipeline` -- batch run: volume in, JSON report out
* :mod:`tumorscope.service`  -- HTTP review service
"""

from .atlas import (
    GRID_HEIGHT,
    GRID_WIDTH,
    Atlas,
    AtlasEntry,
    Hemisphere,
    OverlapHit,
    OverlapReport,
    load_atlas,
    overlap_count,
    overlap_detect,
)
from .brodmann import anatomical_name
from .errors import (
    AtlasError,
    FcmError,
    NiftiError,
    PipelineError,
    TumorscopeError,
)
from .fcm import (
    ClusterModel,
    FcmParams,
    cluster_mask,
    fcm,
    hard_labels,
    init_membership,
    kmeans,
    objective,
    update_centroids,
    update_membership,
)
from .nifti import (
    Slice,
    Volume,
    extract_axial_slices,
    normalize_intensities,
    parse_nifti,
    resample_to_grid,
)
from .pipeline import (
    PipelineConfig,
    SliceResult,
    auto_select_cluster,
    emit_report,
    load_report,
    run_pipeline,
)
from .service import ServiceConfig, create_app

__version__ = "0.1.0"

__all__ = [
    "Atlas",
    "AtlasEntry",
    "AtlasError",
    "ClusterModel",
    "FcmError",
    "FcmParams",
    "GRID_HEIGHT",
    "GRID_WIDTH",
    "Hemisphere",
    "NiftiError",
    "OverlapHit",
    "OverlapReport",
    "PipelineConfig",
    "PipelineError",
    "ServiceConfig",
    "Slice",
    "SliceResult",
    "TumorscopeError",
    "Volume",
    "anatomical_name",
    "auto_select_cluster",
    "cluster_mask",
    "create_app",
    "emit_report",
    "extract_axial_slices",
    "fcm",
    "hard_labels",
    "init_membership",
    "kmeans",
    "load_atlas",
    "load_report",
    "normalize_intensities",
    "objective",
    "overlap_count",
    "overlap_detect",
    "parse_nifti",
    "resample_to_grid",
    "run_pipeline",
    "update_centroids",
    "update_membership",
    "__version__",
]
