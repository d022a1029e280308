import importlib
import logging

import pytest

from extropy import settings


@pytest.fixture
def reload_settings(monkeypatch):
    yield lambda: importlib.reload(settings)
    monkeypatch.undo()
    importlib.reload(settings)


def test_packaged_defaults():
    assert settings.SIMPLEX_TOLERANCE == 1e-9
    assert settings.CLAMP_TOLERANCE == 1e-12
    assert settings.NORMALIZATION_TOLERANCE == 1e-6
    assert settings.EUCLID_RELATIVE_GAP == 0.02
    assert settings.SIGNIFICANT_DIGITS == 10
    assert settings.CONTOUR_LEVEL == 0.9028


def test_environment_overrides(monkeypatch, reload_settings):
    monkeypatch.setenv("EXTROPY_SIMPLEX_TOLERANCE", "1e-3")
    monkeypatch.setenv("EXTROPY_DEFAULT_RULES", "log,quadratic")
    monkeypatch.setenv("EXTROPY_DEFAULT_PROBE_GRID", "5,50")
    monkeypatch.setenv("EXTROPY_PARALLEL_SCORING", "true")
    monkeypatch.setenv("EXTROPY_LOG_LEVEL", "DEBUG")
    reload_settings()
    assert settings.SIMPLEX_TOLERANCE == 1e-3
    assert settings.DEFAULT_RULES == ["log", "quadratic"]
    assert settings.DEFAULT_PROBE_GRID == [5, 50]
    assert settings.PARALLEL_SCORING is True
    assert settings.LOG_LEVEL == logging.DEBUG


def test_custom_defaults_file(tmp_path, monkeypatch, reload_settings):
    text = (settings.CONFIG_DIR / "defaults.yml").read_text()
    path = tmp_path / "defaults.yml"
    path.write_text(text.replace("significant_digits: 10", "significant_digits: 6"))
    monkeypatch.setenv("EXTROPY_DEFAULTS_FILE", str(path))
    reload_settings()
    assert settings.DEFAULTS_FILE == path
    assert settings.SIGNIFICANT_DIGITS == 6


def test_missing_defaults_file_falls_back(tmp_path, monkeypatch, reload_settings):
    monkeypatch.setenv("EXTROPY_DEFAULTS_FILE", str(tmp_path / "missing.yml"))
    reload_settings()
    assert settings.DEFAULTS_FILE == settings.CONFIG_DIR / "defaults.yml"
    assert settings.SIGNIFICANT_DIGITS == 10
