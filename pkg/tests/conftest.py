"""Shared fixtures for the corona-spectra test suites."""

import pytest

from src.lib.config import reset_settings
from src.services.graph_service import generate


@pytest.fixture(autouse=True)
def clean_settings(monkeypatch):
    """Run every test against default settings."""
    for name in (
        "CORONA_LOG_LEVEL",
        "CORONA_GROUP_TOL",
        "CORONA_POLE_TOL",
        "CORONA_VERIFY_TOL",
        "CORONA_MAX_CONCURRENT",
        "CORONA_SAMPLE_SEED",
    ):
        monkeypatch.delenv(name, raising=False)
    reset_settings()
    yield
    reset_settings()


@pytest.fixture
def c4():
    return generate("cycle:4")


@pytest.fixture
def k2():
    return generate("complete:2")


@pytest.fixture
def k4():
    return generate("complete:4")


@pytest.fixture
def p3():
    return generate("path:3")


@pytest.fixture
def petersen():
    return generate("petersen")
