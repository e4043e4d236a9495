"""PNG encoding and decoding for masks and slice renders.

One raster convention everywhere: 8-bit single-channel grayscale, binary
masks stored as 0 (outside) / 255 (inside).
"""

from __future__ import annotations

import io

import numpy as np
from PIL import Image


def encode_mask_png(mask: np.ndarray) -> bytes:
    """Encode a boolean ``(height, width)`` mask as a 0/255 grayscale PNG."""
    img = Image.fromarray(np.where(mask, 255, 0).astype(np.uint8), mode="L")
    buf = io.BytesIO()
    img.save(buf, format="PNG")
    return buf.getvalue()


def decode_mask_png(raw: bytes) -> np.ndarray:
    """Decode a grayscale PNG to a boolean mask; any nonzero pixel is inside."""
    img = Image.open(io.BytesIO(raw)).convert("L")
    return np.asarray(img) > 0


def encode_slice_png(pixels: np.ndarray) -> bytes:
    """Render [0, 1] slice pixels as an 8-bit grayscale PNG."""
    scaled = np.clip(np.round(pixels * 255.0), 0, 255).astype(np.uint8)
    img = Image.fromarray(scaled, mode="L")
    buf = io.BytesIO()
    img.save(buf, format="PNG")
    return buf.getvalue()


def decode_slice_png(raw: bytes) -> np.ndarray:
    """Decode an 8-bit grayscale PNG back to [0, 1] floats."""
    img = Image.open(io.BytesIO(raw)).convert("L")
    return np.asarray(img, dtype=np.float64) / 255.0
