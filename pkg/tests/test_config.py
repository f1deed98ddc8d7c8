# tests/test_config.py
import pytest

from app.utils.config import Settings, get_settings
from app.utils.errors import SupertropError


def test_defaults():
    settings = get_settings()
    assert settings.seed == 7
    assert (settings.nu_low, settings.nu_high) == (-10, 10)
    assert settings.expand_cap == 8


def test_environment_overrides(monkeypatch):
    monkeypatch.setenv("SUPERTROP_SEED", "11")
    monkeypatch.setenv("SUPERTROP_GHOST_DENSITY", "0.5")
    get_settings.cache_clear()
    settings = get_settings()
    assert settings.seed == 11
    assert settings.ghost_density == 0.5


def test_settings_are_cached(monkeypatch):
    first = get_settings()
    monkeypatch.setenv("SUPERTROP_SEED", "99")
    assert get_settings() is first


@pytest.mark.parametrize("name, value", [
    ("SUPERTROP_NU_LOW", "20"),
    ("SUPERTROP_ZERO_DENSITY", "0.95"),
    ("SUPERTROP_SEED", "seven"),
])
def test_invalid_configuration(monkeypatch, name, value):
    monkeypatch.setenv(name, value)
    get_settings.cache_clear()
    with pytest.raises(SupertropError, match="invalid configuration"):
        get_settings()


def test_direct_construction_validates_ranges():
    with pytest.raises(ValueError):
        Settings(nu_low=3, nu_high=1)
