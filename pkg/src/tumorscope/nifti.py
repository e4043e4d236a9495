"""NIfTI-1 volume parsing, axial slice extraction, and grid resampling.

Only the single-file ``.nii`` flavour of NIfTI-1 is handled: a 348-byte
header, a 4-byte extension flag, then the voxel payload at ``vox_offset``.
Detached ``.hdr``/``.img`` pairs and NIfTI-2 are rejected. Both byte orders
are accepted; the order is detected by reading ``sizeof_hdr`` as 348.
"""

from __future__ import annotations

import struct
from dataclasses import dataclass

import numpy as np

from .errors import (
    BadHeader,
    BadMagic,
    GapTooSmall,
    NonFiniteVoxel,
    TruncatedData,
    UnsupportedDatatype,
    UnsupportedFormat,
)

HEADER_SIZE = 348
MIN_FILE_SIZE = 352  # header + extension flag

# NIfTI-1 datatype codes -> numpy dtype characters (endianness prefixed later).
_DTYPES = {
    2: "u1",     # unsigned char
    4: "i2",     # signed short
    8: "i4",     # signed int
    16: "f4",    # float
    64: "f8",    # double
    256: "i1",   # signed char
    512: "u2",   # unsigned short
}


@dataclass(frozen=True)
class Volume:
    """A 3-D intensity grid with voxel spacing.

    ``data`` has shape ``(nx, ny, nz)`` indexed ``[x, y, z]``; in memory the
    x axis varies fastest, matching the on-disk voxel order.
    """

    dims: tuple[int, int, int]
    spacing: tuple[float, float, float]
    data: np.ndarray
    datatype_code: int


@dataclass(frozen=True)
class Slice:
    """One axial plane. ``pixels`` has shape ``(height, width)``, row-major."""

    index: int
    z_mm: float
    pixels: np.ndarray

    @property
    def width(self) -> int:
        return self.pixels.shape[1]

    @property
    def height(self) -> int:
        return self.pixels.shape[0]


def parse_nifti(raw: bytes) -> Volume:
    """Parse a NIfTI-1 single-file byte sequence into a :class:`Volume`.

    Parameters
    ----------
    raw : bytes
        Full file contents, header included.

    Returns
    -------
    Volume
        Voxel data decoded to float64, with ``scl_slope``/``scl_inter``
        rescaling applied when the slope is finite and nonzero.

    Raises
    ------
    TruncatedData, BadMagic, UnsupportedFormat, UnsupportedDatatype,
    BadHeader, NonFiniteVoxel
    """
    if len(raw) < MIN_FILE_SIZE:
        raise TruncatedData(
            f"need at least {MIN_FILE_SIZE} bytes, got {len(raw)}"
        )

    byte_order = _detect_byte_order(raw)

    magic = raw[344:348]
    if magic == b"ni1\x00":
        raise UnsupportedFormat("detached .hdr/.img pairs are not supported")
    if magic != b"n+1\x00":
        raise BadMagic(f"bad magic bytes {magic!r}")

    dim = struct.unpack_from(byte_order + "8h", raw, 40)
    ndim = dim[0]
    if not 1 <= ndim <= 7:
        raise BadHeader(f"dim[0] = {ndim} outside [1, 7]")
    sizes = [dim[i] if i <= ndim else 1 for i in range(1, 8)]
    if any(s < 1 for s in sizes[:3]):
        raise BadHeader(f"non-positive spatial dims {tuple(sizes[:3])}")
    if any(s != 1 for s in sizes[3:]):
        raise UnsupportedFormat("only 3-D volumes are supported")
    nx, ny, nz = sizes[:3]

    (datatype,) = struct.unpack_from(byte_order + "h", raw, 70)
    if datatype not in _DTYPES:
        raise UnsupportedDatatype(f"datatype code {datatype}")
    dtype = np.dtype(byte_order + _DTYPES[datatype])

    pixdim = struct.unpack_from(byte_order + "8f", raw, 76)
    spacing = pixdim[1:4]
    if not all(np.isfinite(s) and s > 0 for s in spacing):
        raise BadHeader(f"non-positive voxel spacing {spacing}")

    (vox_offset_f,) = struct.unpack_from(byte_order + "f", raw, 108)
    if not np.isfinite(vox_offset_f) or vox_offset_f < MIN_FILE_SIZE:
        raise BadHeader(f"vox_offset {vox_offset_f}")
    vox_offset = int(vox_offset_f)

    n_voxels = nx * ny * nz
    end = vox_offset + n_voxels * dtype.itemsize
    if end > len(raw):
        raise TruncatedData(
            f"dims {(nx, ny, nz)} need {end} bytes, file has {len(raw)}"
        )

    flat = np.frombuffer(raw, dtype=dtype, count=n_voxels, offset=vox_offset)
    data = flat.astype(np.float64).reshape((nx, ny, nz), order="F")

    scl_slope, scl_inter = struct.unpack_from(byte_order + "2f", raw, 112)
    if scl_slope != 0 and np.isfinite(scl_slope) and np.isfinite(scl_inter):
        data = data * scl_slope + scl_inter

    if not np.isfinite(data).all():
        raise NonFiniteVoxel("voxel payload contains NaN or Inf")

    return Volume(
        dims=(nx, ny, nz),
        spacing=(float(spacing[0]), float(spacing[1]), float(spacing[2])),
        data=data,
        datatype_code=int(datatype),
    )


def _detect_byte_order(raw: bytes) -> str:
    """Return '<' or '>' from sizeof_hdr, rejecting non-NIfTI-1 headers."""
    for order in ("<", ">"):
        (sizeof_hdr,) = struct.unpack_from(order + "i", raw, 0)
        if sizeof_hdr == HEADER_SIZE:
            return order
        if sizeof_hdr == 540:  # NIfTI-2 header size
            raise UnsupportedFormat("NIfTI-2 is not supported")
    raise BadMagic("sizeof_hdr is not 348 under either byte order")


def extract_axial_slices(volume: Volume, gap_mm: float) -> list[Slice]:
    """Extract axial slices every ``gap_mm`` millimetres.

    Slices sit at z = 0, gap, 2*gap, ... up to the axial extent
    ``(nz - 1) * z_spacing``; each position maps to the nearest voxel plane
    (ties toward the lower plane). The count is ``floor(extent / gap) + 1``.

    Raises
    ------
    GapTooSmall
        If ``gap_mm`` is finer than the axial voxel spacing.
    """
    dz = volume.spacing[2]
    if gap_mm < dz:
        raise GapTooSmall(f"gap {gap_mm} mm < axial spacing {dz} mm")

    nz = volume.dims[2]
    extent = (nz - 1) * dz
    count = int(np.floor(extent / gap_mm)) + 1

    slices = []
    for i in range(count):
        z = i * gap_mm
        k = int(np.clip(_nearest_index(z / dz), 0, nz - 1))
        pixels = np.ascontiguousarray(volume.data[:, :, k].T)
        slices.append(Slice(index=i, z_mm=z, pixels=pixels))
    return slices


def _nearest_index(x):
    """Nearest integer with exact half-points mapping to the lower index."""
    return np.ceil(np.asarray(x) - 0.5).astype(int)


def normalize_intensities(s: Slice) -> Slice:
    """Min-max rescale pixels to [0, 1]; a constant slice maps to all zeros."""
    lo = s.pixels.min()
    hi = s.pixels.max()
    if hi == lo:
        pixels = np.zeros_like(s.pixels)
    else:
        pixels = (s.pixels - lo) / (hi - lo)
    return Slice(index=s.index, z_mm=s.z_mm, pixels=pixels)


def resample_to_grid(s: Slice, width: int, height: int) -> Slice:
    """Nearest-neighbor resample to ``width`` x ``height``.

    Target pixel centers map back through
    ``src = (dst + 0.5) * src_size / dst_size - 0.5`` and then to the nearest
    source index, ties toward the lower index. At the source dimensions the
    pixels pass through unchanged.
    """
    if (width, height) == (s.width, s.height):
        return Slice(index=s.index, z_mm=s.z_mm, pixels=s.pixels)

    xs = _source_indices(width, s.width)
    ys = _source_indices(height, s.height)
    pixels = np.ascontiguousarray(s.pixels[np.ix_(ys, xs)])
    return Slice(index=s.index, z_mm=s.z_mm, pixels=pixels)


def _source_indices(dst_size: int, src_size: int) -> np.ndarray:
    coords = (np.arange(dst_size) + 0.5) * (src_size / dst_size) - 0.5
    return np.clip(_nearest_index(coords), 0, src_size - 1)
