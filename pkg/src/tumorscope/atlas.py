"""Per-slice, per-hemisphere Brodmann-area mask database and overlap detection.

The atlas is a flat directory: a JSON manifest listing
``{slice, hemisphere, area, mask}`` entries plus one 79x95 grayscale PNG per
entry. Stacking the masks present on a slice gives the per-hemisphere
79 x 95 x n block against which a tumor mask is compared.

Overlap uses the matrix-addition rule: tumor and area masks are summed
elementwise and the pixels whose sum exceeds 1 count as overlap.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from enum import Enum
from pathlib import Path

import numpy as np

from .brodmann import AREA_MAX, AREA_MIN, anatomical_name
from .errors import (
    BadAreaId,
    BadManifest,
    DimMismatch,
    DuplicateKey,
    ManifestMissing,
    MaskDimensionMismatch,
    MaskFileMissing,
)
from .imaging import decode_mask_png

GRID_WIDTH = 79
GRID_HEIGHT = 95
GRID_SHAPE = (GRID_HEIGHT, GRID_WIDTH)  # numpy (rows, cols)

MANIFEST_VERSION = 1


class Hemisphere(str, Enum):
    LEFT = "L"
    RIGHT = "R"


@dataclass(frozen=True)
class AtlasEntry:
    slice_index: int
    hemisphere: Hemisphere
    area_id: int
    mask: np.ndarray


@dataclass(frozen=True)
class OverlapHit:
    hemisphere: Hemisphere
    area_id: int
    name: str
    pixels: int
    fraction: float


@dataclass(frozen=True)
class OverlapReport:
    slice_index: int
    hits: tuple[OverlapHit, ...]


class Atlas:
    """Immutable store of area masks keyed by (slice, hemisphere, area)."""

    def __init__(self, entries: dict[tuple[int, Hemisphere, int], AtlasEntry]):
        self._entries = entries

    def __len__(self) -> int:
        return len(self._entries)

    def get(self, slice_index: int, hemisphere: Hemisphere, area_id: int) -> AtlasEntry | None:
        return self._entries.get((slice_index, hemisphere, area_id))

    def entries_for_slice(self, slice_index: int) -> list[AtlasEntry]:
        """Entries on one slice, ordered by (hemisphere, area)."""
        found = [e for (s, _, _), e in self._entries.items() if s == slice_index]
        found.sort(key=lambda e: (e.hemisphere.value, e.area_id))
        return found

    def area_ids_for_slice(self, slice_index: int) -> set[tuple[Hemisphere, int]]:
        return {(h, a) for (s, h, a) in self._entries if s == slice_index}


def load_atlas(manifest_path: str | Path) -> Atlas:
    """Load and validate an atlas from its JSON manifest.

    Every referenced mask must decode to the 79x95 grid; any nonzero PNG
    value counts as inside. Combinations absent from the manifest simply do
    not appear on that slice.

    Raises
    ------
    ManifestMissing, BadManifest, MaskFileMissing, MaskDimensionMismatch,
    DuplicateKey, BadAreaId
    """
    manifest_path = Path(manifest_path)
    if not manifest_path.is_file():
        raise ManifestMissing(str(manifest_path))

    try:
        doc = json.loads(manifest_path.read_text(encoding="utf-8"))
    except (ValueError, UnicodeDecodeError) as e:
        raise BadManifest(f"{manifest_path}: {e}") from e

    if not isinstance(doc, dict):
        raise BadManifest("manifest root must be a JSON object")
    if doc.get("version") != MANIFEST_VERSION:
        raise BadManifest(f"unsupported manifest version {doc.get('version')!r}")
    if doc.get("grid") != [GRID_WIDTH, GRID_HEIGHT]:
        raise BadManifest(f"grid must be [{GRID_WIDTH}, {GRID_HEIGHT}], got {doc.get('grid')!r}")
    raw_entries = doc.get("entries")
    if not isinstance(raw_entries, list):
        raise BadManifest("manifest 'entries' must be a list")

    base = manifest_path.parent
    entries: dict[tuple[int, Hemisphere, int], AtlasEntry] = {}
    for i, item in enumerate(raw_entries):
        try:
            slice_index = int(item["slice"])
            hemisphere = Hemisphere(item["hemisphere"])
            area_id = int(item["area"])
            mask_rel = str(item["mask"])
        except (KeyError, TypeError, ValueError) as e:
            raise BadManifest(f"entry {i}: {e}") from e

        if not AREA_MIN <= area_id <= AREA_MAX:
            raise BadAreaId(f"entry {i}: area {area_id} outside [{AREA_MIN}, {AREA_MAX}]")

        key = (slice_index, hemisphere, area_id)
        if key in entries:
            raise DuplicateKey(f"entry {i}: duplicate {key}")

        mask_path = base / mask_rel
        if not mask_path.is_file():
            raise MaskFileMissing(str(mask_path))
        mask = decode_mask_png(mask_path.read_bytes())
        if mask.shape != GRID_SHAPE:
            raise MaskDimensionMismatch(
                f"{mask_path}: {mask.shape[1]}x{mask.shape[0]}, "
                f"expected {GRID_WIDTH}x{GRID_HEIGHT}"
            )

        entries[key] = AtlasEntry(slice_index, hemisphere, area_id, mask)

    return Atlas(entries)


def overlap_count(tumor: np.ndarray, area: np.ndarray) -> int:
    """Pixels where the elementwise sum of the two binary masks exceeds 1."""
    total = tumor.astype(np.uint8) + area.astype(np.uint8)
    return int((total > 1).sum())


def overlap_detect(tumor: np.ndarray, atlas: Atlas, slice_index: int,
                   min_pixels: int = 1) -> OverlapReport:
    """Find the atlas areas a tumor mask touches on one slice.

    Parameters
    ----------
    tumor : ndarray
        Boolean mask on the 79x95 grid. An empty mask is valid and
        produces an empty report.
    atlas : Atlas
    slice_index : int
    min_pixels : int
        Overlap pixels required before an area is reported (default 1,
        never below 1).

    Returns
    -------
    OverlapReport
        Hits ordered by (hemisphere, area), each carrying the anatomical
        name, the overlap pixel count, and the fraction of the tumor mask
        inside the area.

    Raises
    ------
    DimMismatch
        If the tumor mask is not 79x95.
    """
    tumor = np.asarray(tumor, dtype=bool)
    if tumor.shape != GRID_SHAPE:
        raise DimMismatch(
            f"tumor mask {tumor.shape[1]}x{tumor.shape[0]}, "
            f"expected {GRID_WIDTH}x{GRID_HEIGHT}"
        )

    threshold = max(1, min_pixels)
    tumor_pixels = int(tumor.sum())
    hits = []
    for entry in atlas.entries_for_slice(slice_index):
        pixels = overlap_count(tumor, entry.mask)
        if pixels >= threshold:
            hits.append(OverlapHit(
                hemisphere=entry.hemisphere,
                area_id=entry.area_id,
                name=anatomical_name(entry.area_id),
                pixels=pixels,
                fraction=pixels / tumor_pixels,
            ))
    return OverlapReport(slice_index=slice_index, hits=tuple(hits))
