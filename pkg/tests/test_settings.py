import json

import pytest

import config.settings as settings_module
from common.errors import InvalidInputError
from config.settings import (
    CONFIG_ENV_VAR,
    DEFAULT_CONFIG_FILE,
    DEFAULT_SETTINGS,
    EngineSettings,
    load_config,
    load_settings,
    resolve_config_path,
)


def test_defaults():
    assert DEFAULT_SETTINGS.hurwitz_max_n == 8
    assert DEFAULT_SETTINGS.operator_max_n == 6
    assert DEFAULT_SETTINGS.threads == 1
    assert DEFAULT_SETTINGS.to_dict()['hurwitz_hard_max_n'] == 12


def test_overrides_skip_none():
    settings = DEFAULT_SETTINGS.with_overrides(threads=4, operator_max_n=None)
    assert settings.threads == 4
    assert settings.operator_max_n == DEFAULT_SETTINGS.operator_max_n
    assert DEFAULT_SETTINGS.threads == 1


def test_shipped_config_matches_defaults():
    assert load_settings(DEFAULT_CONFIG_FILE) == DEFAULT_SETTINGS


def test_key_value_config(tmp_path):
    path = tmp_path / "winf.conf"
    path.write_text("# bounds\noperator_max_n = 4\nthreads=2  # inline\n\nunknown_key = 7\n", encoding='utf-8')
    assert load_config(path) == {'operator_max_n': '4', 'threads': '2', 'unknown_key': '7'}
    settings = load_settings(path)
    assert settings == EngineSettings(operator_max_n=4, threads=2)


def test_json_config(tmp_path):
    path = tmp_path / "winf.json"
    path.write_text(json.dumps({'genfun_max_n': 2}), encoding='utf-8')
    assert load_settings(path).genfun_max_n == 2


@pytest.mark.parametrize("content,suffix", [
    ("threads\n", ".conf"),
    ("threads = many\n", ".conf"),
    ("threads = -1\n", ".conf"),
    ("[1, 2]", ".json"),
    ("{not json", ".json"),
])
def test_bad_configs(tmp_path, content, suffix):
    path = tmp_path / f"bad{suffix}"
    path.write_text(content, encoding='utf-8')
    with pytest.raises(InvalidInputError):
        load_settings(path)


def test_missing_config(tmp_path):
    with pytest.raises(InvalidInputError):
        load_config(tmp_path / "absent.conf")


def test_config_resolution(monkeypatch, tmp_path):
    monkeypatch.delenv(CONFIG_ENV_VAR, raising=False)
    assert resolve_config_path() == DEFAULT_CONFIG_FILE
    assert load_settings(resolve_config_path()) == DEFAULT_SETTINGS
    monkeypatch.setenv(CONFIG_ENV_VAR, str(tmp_path / "env.conf"))
    assert resolve_config_path() == tmp_path / "env.conf"
    assert resolve_config_path("explicit.conf").name == "explicit.conf"


def test_config_resolution_without_shipped_file(monkeypatch, tmp_path):
    monkeypatch.delenv(CONFIG_ENV_VAR, raising=False)
    monkeypatch.setattr(settings_module, "DEFAULT_CONFIG_FILE", tmp_path / "absent.conf")
    assert resolve_config_path() is None
    assert load_settings(None) == DEFAULT_SETTINGS
