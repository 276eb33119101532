import pytest

from config import DEFAULTS, load_config
from modules.config import load_client_config


@pytest.fixture(autouse=True)
def clean_env(monkeypatch):
    for name in ("SURFACE_SWEEP_BOUND", "SURFACE_MAX_COSETS", "SURFACE_MAX_QUOTIENT_ORDER",
                 "SURFACE_OUTPUT", "SURFACE_SHOW_TRACE", "SURFACE_TIMESTAMP", "LOG_LEVEL"):
        monkeypatch.delenv(name, raising=False)


def test_defaults():
    config = load_config()
    for key, value in DEFAULTS.items():
        assert config[key] == value
    assert config['log_level'] == 'INFO'


def test_environment_overrides(monkeypatch):
    monkeypatch.setenv("SURFACE_SWEEP_BOUND", "4")
    monkeypatch.setenv("SURFACE_MAX_COSETS", "500")
    config = load_config()
    assert (config['sweep_bound'], config['max_cosets']) == (4, 500)


@pytest.mark.parametrize("value", ["0", "-3", "many"])
def test_invalid_bounds_are_rejected(monkeypatch, value):
    monkeypatch.setenv("SURFACE_SWEEP_BOUND", value)
    with pytest.raises(ValueError):
        load_config()


def test_client_config(monkeypatch):
    assert load_client_config() == {
        'output': 'formatted', 'show_trace': False, 'timestamp': False, 'log_level': 'WARNING',
    }
    monkeypatch.setenv("SURFACE_OUTPUT", "Machine")
    monkeypatch.setenv("SURFACE_SHOW_TRACE", "yes")
    config = load_client_config()
    assert config['output'] == 'machine' and config['show_trace']
    monkeypatch.setenv("SURFACE_OUTPUT", "yaml")
    with pytest.raises(ValueError):
        load_client_config()
