"""Synthetic phantoms: NIfTI byte encoding, blob volumes, fixture atlases.

Real patient data stays outside this package; demos and tests run on
phantoms built here. The blob phantom carries one bright square lesion on a
known plane, positioned inside the fixture atlas's right-hemisphere area 4
mask, so the expected overlap report is known by construction.
"""

from __future__ import annotations

import json
import struct
from pathlib import Path

import numpy as np

from .atlas import GRID_HEIGHT, GRID_WIDTH
from .imaging import encode_mask_png

_DTYPE_CODES = {"uint8": 2, "int16": 4, "int32": 8, "float32": 16, "float64": 64}

# Fixture geometry, in grid coordinates (x0, x1, y0, y1), end-exclusive.
BA4_RIGHT_RECT = (10, 35, 20, 52)
BA6_RIGHT_RECT = (10, 35, 54, 70)
BA4_LEFT_RECT = (44, 69, 20, 52)
BA17_LEFT_RECT = (48, 72, 58, 82)
BLOB_RECT = (14, 26, 28, 40)  # 12x12, inside BA4_RIGHT_RECT


def encode_nifti(data: np.ndarray, spacing: tuple[float, float, float],
                 dtype: str = "float32", byte_order: str = "<") -> bytes:
    """Serialize an ``(nx, ny, nz)`` array as a NIfTI-1 single-file payload."""
    if dtype not in _DTYPE_CODES:
        raise ValueError(f"unsupported dtype {dtype}")
    data = np.asarray(data)
    if data.ndim != 3:
        raise ValueError(f"expected a 3-D array, got shape {data.shape}")
    nx, ny, nz = data.shape

    np_dtype = np.dtype(byte_order + np.dtype(dtype).str[1:])
    payload = np.asfortranarray(data.astype(np_dtype)).tobytes(order="F")

    header = bytearray(348)
    struct.pack_into(byte_order + "i", header, 0, 348)
    struct.pack_into(byte_order + "8h", header, 40, 3, nx, ny, nz, 1, 1, 1, 1)
    struct.pack_into(byte_order + "h", header, 70, _DTYPE_CODES[dtype])
    struct.pack_into(byte_order + "h", header, 72, np_dtype.itemsize * 8)
    struct.pack_into(byte_order + "8f", header, 76,
                     1.0, spacing[0], spacing[1], spacing[2], 0.0, 0.0, 0.0, 0.0)
    struct.pack_into(byte_order + "f", header, 108, 352.0)
    struct.pack_into(byte_order + "2f", header, 112, 0.0, 0.0)
    header[344:348] = b"n+1\x00"

    return bytes(header) + b"\x00" * 4 + payload


def make_blob_phantom(nz: int = 20, blob_plane: int = 5,
                      background: float = 0.1, blob_value: float = 0.95,
                      ) -> np.ndarray:
    """Build a 79x95xnz volume: textured background plus one bright blob.

    A gentle in-plane ramp keeps every slice non-constant; the blob fills
    ``BLOB_RECT`` on ``blob_plane`` only.
    """
    nx, ny = GRID_WIDTH, GRID_HEIGHT
    xs = np.arange(nx)[:, None, None] / nx
    ys = np.arange(ny)[None, :, None] / ny
    data = background + 0.02 * xs + 0.015 * ys + np.zeros((1, 1, nz))

    x0, x1, y0, y1 = BLOB_RECT
    data[x0:x1, y0:y1, blob_plane] = blob_value
    return data


def blob_phantom_nifti(nz: int = 20, blob_plane: int = 5,
                       spacing: tuple[float, float, float] = (2.0, 2.0, 10.0),
                       ) -> bytes:
    """The blob phantom of :func:`make_blob_phantom`, NIfTI-encoded."""
    return encode_nifti(make_blob_phantom(nz=nz, blob_plane=blob_plane), spacing)


def rect_mask(rect: tuple[int, int, int, int]) -> np.ndarray:
    """Boolean 79x95-grid mask of an (x0, x1, y0, y1) rectangle."""
    x0, x1, y0, y1 = rect
    mask = np.zeros((GRID_HEIGHT, GRID_WIDTH), dtype=bool)
    mask[y0:y1, x0:x1] = True
    return mask


def write_fixture_atlas(dest_dir: str | Path, slice_indices=range(20)) -> Path:
    """Write a synthetic atlas (manifest plus mask PNGs) under ``dest_dir``.

    Each listed slice gets four areas: right 4 and 6, left 4 and 17. The
    right-hemisphere area 4 mask contains ``BLOB_RECT``; the others stay
    clear of it.

    Returns the manifest path.
    """
    dest_dir = Path(dest_dir)
    mask_dir = dest_dir / "masks"
    mask_dir.mkdir(parents=True, exist_ok=True)

    areas = [
        ("R", 4, BA4_RIGHT_RECT),
        ("R", 6, BA6_RIGHT_RECT),
        ("L", 4, BA4_LEFT_RECT),
        ("L", 17, BA17_LEFT_RECT),
    ]

    entries = []
    for s in slice_indices:
        for hemi, area, rect in areas:
            name = f"masks/s{s:03d}_{hemi}_ba{area:02d}.png"
            (dest_dir / name).write_bytes(encode_mask_png(rect_mask(rect)))
            entries.append({"slice": int(s), "hemisphere": hemi,
                            "area": area, "mask": name})

    manifest = {
        "version": 1,
        "grid": [GRID_WIDTH, GRID_HEIGHT],
        "entries": entries,
    }
    manifest_path = dest_dir / "manifest.json"
    manifest_path.write_text(json.dumps(manifest, indent=2) + "\n", encoding="utf-8")
    return manifest_path
