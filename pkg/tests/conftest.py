from __future__ import annotations

import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from mapdefs import BUILDERS, DEFAULT_PARAMS, FIXTURE_DIR, fixture_path


@pytest.fixture(scope="session", autouse=True)
def bundled_fixtures():
    """Regenerate any missing fixture PNG; generation is deterministic."""
    FIXTURE_DIR.mkdir(parents=True, exist_ok=True)
    for name, build in BUILDERS.items():
        path = fixture_path(name)
        if not path.exists():
            build().save_png(path)
    return FIXTURE_DIR


@pytest.fixture
def lshape_path():
    return fixture_path("lshape")


@pytest.fixture
def default_params():
    return DEFAULT_PARAMS
