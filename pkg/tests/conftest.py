import warnings

import pytest

warnings.filterwarnings("ignore", message="The TBB threading layer")


@pytest.fixture
def cache_dir(tmp_path, monkeypatch):
    d = tmp_path / "cache"
    monkeypatch.setenv("CHEATBOT_CACHE_DIR", str(d))
    return d
