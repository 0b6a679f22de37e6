import hashlib
from pathlib import Path

import numpy as np
import pytest

import lowpoly
from lowpoly import _kernels_py

try:
    from lowpoly import _kernels_c
except ImportError:
    _kernels_c = None

DATA_DIR = Path(__file__).parent / "data"
FIXTURE_PATH = DATA_DIR / "fixture.png"
FIXTURE_SHA256 = "a55ae9ad1baa69312ff885a49670745c622a9fe5b71e9779e94e3a42fb538820"


@pytest.fixture(scope="session")
def fixture_path() -> Path:
    return FIXTURE_PATH


@pytest.fixture(scope="session")
def fixture_bytes() -> bytes:
    data = FIXTURE_PATH.read_bytes()
    # catches accidental edits of the committed fixture
    assert hashlib.sha256(data).hexdigest() == FIXTURE_SHA256
    return data


@pytest.fixture(scope="session")
def fixture_image(fixture_bytes) -> lowpoly.RasterImage:
    return lowpoly.decode_image(fixture_bytes)


def _backend_modules():
    mods = [_kernels_py]
    if _kernels_c is not None:
        mods.append(_kernels_c)
    return mods


@pytest.fixture(params=[m.NAME for m in _backend_modules()])
def kernels(request):
    """Runs the test once per available kernel backend."""
    by_name = {m.NAME: m for m in _backend_modules()}
    return by_name[request.param]


def make_pointset(coords, seed=0) -> lowpoly.PointSet:
    pts = np.asarray(coords, dtype=np.int64).reshape(-1, 2)
    return lowpoly.PointSet(pts, ["edge"] * len(pts), seed=seed)


def random_image(rng: np.random.Generator, width: int, height: int) -> lowpoly.RasterImage:
    return lowpoly.RasterImage(
        rng.integers(0, 256, size=(height, width, 3), dtype=np.uint8)
    )
