import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))  # for oracles.py

from tumorscope.phantom import blob_phantom_nifti, write_fixture_atlas


@pytest.fixture(scope="session")
def blob_raw() -> bytes:
    """20-plane blob phantom, blob on plane 5, 10 mm axial spacing."""
    return blob_phantom_nifti(nz=20, blob_plane=5)


@pytest.fixture(scope="session")
def atlas_manifest(tmp_path_factory) -> Path:
    """Fixture atlas covering slices 0..19 with four areas each."""
    dest = tmp_path_factory.mktemp("atlas")
    return write_fixture_atlas(dest)


@pytest.fixture()
def phantom_file(tmp_path, blob_raw) -> Path:
    p = tmp_path / "phantom.nii"
    p.write_bytes(blob_raw)
    return p
