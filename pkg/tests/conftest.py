"""Shared fixtures: backends and an isolated log directory per test."""
import pytest

from src.kernel.scalar import make_backend
from src.logging_utils import set_log_dir, set_run_log_subdir


@pytest.fixture(autouse=True)
def isolated_logs(tmp_path, monkeypatch):
    monkeypatch.delenv("GEOM_BACKEND", raising=False)
    log_dir = tmp_path / "logs"
    set_log_dir(log_dir)
    set_run_log_subdir(None)
    yield log_dir
    set_log_dir(None)
    set_run_log_subdir(None)


@pytest.fixture
def machine():
    return make_backend("machine")


@pytest.fixture
def big():
    return make_backend("bigfloat", 256)
