"""Typed errors raised across the package.

Every failure mode surfaces as a subclass of :class:`TumorscopeError`, so
callers (CLI, HTTP service, tests) can branch on the error family without
string matching.
"""


class TumorscopeError(Exception):
    """Base class for all errors raised by this package."""


# --- volume parsing / slicing -------------------------------------------------

class NiftiError(TumorscopeError):
    """Base class for NIfTI-1 parsing and slicing errors."""


class BadMagic(NiftiError):
    """Input bytes are not a NIfTI-1 single-file volume."""


class UnsupportedFormat(NiftiError):
    """Recognized but unsupported variant (detached .hdr/.img pair, NIfTI-2)."""


class UnsupportedDatatype(NiftiError):
    """Header declares a voxel datatype outside the supported set."""


class TruncatedData(NiftiError):
    """Byte payload is shorter than the header dimensions imply."""


class NonFiniteVoxel(NiftiError):
    """Decoded voxel data contains NaN or Inf."""


class BadHeader(NiftiError):
    """Header fields are structurally valid but nonsensical (zero spacing, bad dims)."""


class GapTooSmall(NiftiError):
    """Requested slice gap is finer than the volume's axial spacing."""


# --- clustering ----------------------------------------------------------------

class FcmError(TumorscopeError):
    """Base class for clustering errors."""


class TooFewPoints(FcmError):
    """Fewer data points than clusters."""


class NonFiniteInput(FcmError):
    """Clustering input contains NaN or Inf."""


class EmptyCluster(FcmError):
    """A cluster's membership weights sum to zero, leaving its centroid undefined."""


class BadIndex(FcmError):
    """Cluster index outside [0, c)."""


# --- atlas ----------------------------------------------------------------------

class AtlasError(TumorscopeError):
    """Base class for atlas loading and overlap errors."""


class ManifestMissing(AtlasError):
    """Atlas manifest file does not exist."""


class BadManifest(AtlasError):
    """Manifest is not valid JSON or violates the manifest schema."""


class MaskFileMissing(AtlasError):
    """A mask file referenced by the manifest does not exist."""


class MaskDimensionMismatch(AtlasError):
    """A mask is not on the expected atlas grid."""


class DuplicateKey(AtlasError):
    """Two manifest entries share (slice, hemisphere, area)."""


class BadAreaId(AtlasError):
    """Brodmann area number outside [1, 47]."""


class DimMismatch(AtlasError):
    """Tumor mask is not on the atlas grid."""


# --- pipeline --------------------------------------------------------------------

class PipelineError(TumorscopeError):
    """Base class for orchestration errors."""


class NoCandidate(PipelineError):
    """Automatic cluster selection found no cluster under the coverage cap."""


class IoFailure(PipelineError):
    """Report or mask output could not be written."""


class SliceProcessingError(PipelineError):
    """A per-slice step failed; carries the slice index and the causing error."""

    def __init__(self, slice_index: int, cause: Exception):
        super().__init__(f"slice {slice_index}: {cause}")
        self.slice_index = slice_index
        self.cause = cause
